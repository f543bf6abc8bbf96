#pragma once

// Exhaustive checks over one-vertex ribbon graphs (chord diagrams).
//
// gamma is constant on a partial-dual class and every connected ribbon graph
// has a one-vertex partial dual, so scanning chord diagrams covers all
// connected graphs with n edges.

#include <functional>
#include <string>
#include <vector>

#include "rgpd/chord.hpp"
#include "rgpd/genus_poly.hpp"

namespace rgpd::verify {

struct DiagramRecord {
    ChordDiagram diagram;
    GenusPolynomial gamma;
    bool monomial = false;
    bool odd_complete = false;  // components_all_odd_complete
    bool join_prime = false;
    bool log_concave = false;
};

// Per-diagram scan. The serial form is the reference for the OpenMP form;
// both return records in input order.
std::vector<DiagramRecord> scan_serial(const std::vector<ChordDiagram>& diagrams);
std::vector<DiagramRecord> scan_parallel(const std::vector<ChordDiagram>& diagrams, int workers);
std::vector<DiagramRecord> scan(const std::vector<ChordDiagram>& diagrams, int workers);

struct BnResult {
    int n = 0;
    GenusPolynomial expected;
    GenusPolynomial actual;
    bool pass = false;
};

/// gamma(B_n) against 2^n z^((n-1)/2) for every odd n <= max_n.
std::vector<BnResult> verify_bn(int max_n, int workers = 1);

struct VerificationReport {
    int n = 0;
    bool reflection = false;
    std::size_t diagrams_scanned = 0;
    std::vector<std::string> monomial_words;
    std::vector<std::string> classifier_words;
    std::vector<std::string> mismatches;  // symmetric difference of the two lists above
    std::vector<std::string> logconcavity_violations;
    std::vector<std::string> join_prime_monomial_words;
    double wall_time = 0.0;  // seconds; left out of serialized reports unless asked for

    bool passed() const { return mismatches.empty(); }
};

VerificationReport build_report(int n, bool reflection, const std::vector<DiagramRecord>& records);

using Progress = std::function<void(const VerificationReport&)>;

/// One report per n in 1..max_n.
std::vector<VerificationReport> verify_gmt(int max_n, bool reflection = false, int workers = 1,
                                           const Progress& progress = {});

std::vector<VerificationReport> scan_log_concavity(int max_n, bool reflection = false, int workers = 1,
                                                   const Progress& progress = {});

struct DichotomyResult {
    int n = 0;
    std::vector<std::string> found;     // join-prime diagrams with monomial gamma
    std::vector<std::string> expected;  // {B_n} for odd n, nothing for even n
    bool pass = false;
};

DichotomyResult dichotomy_from_report(const VerificationReport& report);
std::vector<DichotomyResult> verify_join_prime_dichotomy(int max_n, int workers = 1);

// Serialization. Output is a pure function of the results unless with_timing
// is set.
std::string gmt_reports_json(const std::vector<VerificationReport>& reports, bool with_timing = false);
std::string gmt_reports_text(const std::vector<VerificationReport>& reports, bool with_timing = false);
std::string lc_reports_json(const std::vector<VerificationReport>& reports, bool with_timing = false);
std::string lc_reports_text(const std::vector<VerificationReport>& reports, bool with_timing = false);
std::string bn_results_json(const std::vector<BnResult>& results);
std::string bn_results_text(const std::vector<BnResult>& results);

}  // namespace rgpd::verify
