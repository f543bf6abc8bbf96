#include "rgpd/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "rgpd/kernels.hpp"

namespace rgpd::verify {

namespace {

DiagramRecord evaluate(const ChordDiagram& d) {
    DiagramRecord r;
    r.diagram = d;
    r.gamma = GenusPolynomial(kernels::gamma_serial(to_ribbon_graph(d)));
    r.monomial = is_monomial(r.gamma);
    r.odd_complete = components_all_odd_complete(d);
    r.join_prime = d.num_chords() > 0 && is_join_prime(d);
    r.log_concave = is_log_concave(r.gamma);
    return r;
}

const char* dedup_name(bool reflection) { return reflection ? "rotation+reflection" : "rotation"; }

constexpr const char* kScope =
    "one-vertex representatives: gamma is invariant under partial duality and every connected "
    "ribbon graph has a one-vertex partial dual";

}  // namespace

std::vector<DiagramRecord> scan_serial(const std::vector<ChordDiagram>& diagrams) {
    std::vector<DiagramRecord> out;
    out.reserve(diagrams.size());
    for (const auto& d : diagrams) out.push_back(evaluate(d));
    return out;
}

std::vector<DiagramRecord> scan_parallel(const std::vector<ChordDiagram>& diagrams, int workers) {
    std::vector<DiagramRecord> out(diagrams.size());
    const auto count = static_cast<std::int64_t>(diagrams.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers > 0 ? workers : 1)
    for (std::int64_t i = 0; i < count; ++i) out[i] = evaluate(diagrams[i]);
    return out;
}

std::vector<DiagramRecord> scan(const std::vector<ChordDiagram>& diagrams, int workers) {
    return workers > 1 ? scan_parallel(diagrams, workers) : scan_serial(diagrams);
}

std::vector<BnResult> verify_bn(int max_n, int workers) {
    std::vector<BnResult> out;
    for (int n = 1; n <= max_n; n += 2) {
        BnResult r;
        r.n = n;
        r.expected = GenusPolynomial::monomial(1ULL << n, (n - 1) / 2);
        r.actual = gamma(bouquet_bn(n), workers);
        r.pass = r.actual == r.expected;
        out.push_back(std::move(r));
    }
    return out;
}

VerificationReport build_report(int n, bool reflection, const std::vector<DiagramRecord>& records) {
    VerificationReport rep;
    rep.n = n;
    rep.reflection = reflection;
    rep.diagrams_scanned = records.size();
    for (const auto& r : records) {
        const auto w = r.diagram.to_string();
        if (r.monomial) rep.monomial_words.push_back(w);
        if (r.odd_complete) rep.classifier_words.push_back(w);
        if (!r.log_concave) rep.logconcavity_violations.push_back(w);
        if (r.monomial && r.join_prime) rep.join_prime_monomial_words.push_back(w);
    }
    // Records arrive in canonical word order; sort anyway so the report does
    // not depend on the caller.
    for (auto* v : {&rep.monomial_words, &rep.classifier_words, &rep.logconcavity_violations,
                    &rep.join_prime_monomial_words})
        std::sort(v->begin(), v->end());
    std::set_symmetric_difference(rep.monomial_words.begin(), rep.monomial_words.end(),
                                  rep.classifier_words.begin(), rep.classifier_words.end(),
                                  std::back_inserter(rep.mismatches));
    return rep;
}

namespace {

std::vector<VerificationReport> run_scan(int max_n, bool reflection, int workers, const Progress& progress) {
    std::vector<VerificationReport> out;
    for (int n = 1; n <= max_n; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto diagrams = enumerate_diagrams(n, reflection);
        auto rep = build_report(n, reflection, scan(diagrams, workers));
        rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) progress(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

std::vector<VerificationReport> verify_gmt(int max_n, bool reflection, int workers, const Progress& progress) {
    return run_scan(max_n, reflection, workers, progress);
}

std::vector<VerificationReport> scan_log_concavity(int max_n, bool reflection, int workers,
                                                   const Progress& progress) {
    return run_scan(max_n, reflection, workers, progress);
}

DichotomyResult dichotomy_from_report(const VerificationReport& report) {
    DichotomyResult r;
    r.n = report.n;
    r.found = report.join_prime_monomial_words;
    if (report.n % 2 == 1) r.expected.push_back(canonical_form(from_one_vertex(bouquet_bn(report.n))).to_string());
    r.pass = r.found == r.expected;
    return r;
}

std::vector<DichotomyResult> verify_join_prime_dichotomy(int max_n, int workers) {
    std::vector<DichotomyResult> out;
    for (const auto& rep : verify_gmt(max_n, false, workers)) out.push_back(dichotomy_from_report(rep));
    return out;
}

namespace {

using ojson = nlohmann::ordered_json;

std::string join_words(const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) {
        if (!s.empty()) s += ' ';
        s += w;
    }
    return s.empty() ? "-" : s;
}

}  // namespace

std::string gmt_reports_json(const std::vector<VerificationReport>& reports, bool with_timing) {
    ojson doc;
    doc["scope"] = kScope;
    doc["dedup"] = dedup_name(!reports.empty() && reports.front().reflection);
    ojson arr = ojson::array();
    bool pass = true;
    for (const auto& r : reports) {
        const auto dich = dichotomy_from_report(r);
        ojson j;
        j["n"] = r.n;
        j["diagrams_scanned"] = r.diagrams_scanned;
        j["monomial_words"] = r.monomial_words;
        j["classifier_words"] = r.classifier_words;
        j["mismatches"] = r.mismatches;
        j["join_prime_monomial_words"] = r.join_prime_monomial_words;
        j["join_prime_dichotomy"] = dich.pass;
        if (with_timing) j["wall_time"] = r.wall_time;
        arr.push_back(std::move(j));
        pass = pass && r.passed() && dich.pass;
    }
    doc["reports"] = std::move(arr);
    doc["pass"] = pass;
    return doc.dump(2) + "\n";
}

std::string gmt_reports_text(const std::vector<VerificationReport>& reports, bool with_timing) {
    std::ostringstream os;
    os << "# " << kScope << "\n";
    os << "# dedup=" << dedup_name(!reports.empty() && reports.front().reflection) << "\n";
    for (const auto& r : reports) {
        const auto dich = dichotomy_from_report(r);
        os << "n=" << r.n << " scanned=" << r.diagrams_scanned << " monomial=" << r.monomial_words.size()
           << " classifier=" << r.classifier_words.size() << " mismatches=" << r.mismatches.size()
           << " join_prime_monomial=" << join_words(r.join_prime_monomial_words)
           << " dichotomy=" << (dich.pass ? "pass" : "FAIL");
        if (with_timing) os << " time=" << r.wall_time << "s";
        os << "\n";
        if (!r.mismatches.empty()) os << "  mismatches: " << join_words(r.mismatches) << "\n";
    }
    return os.str();
}

std::string lc_reports_json(const std::vector<VerificationReport>& reports, bool with_timing) {
    ojson doc;
    doc["dedup"] = dedup_name(!reports.empty() && reports.front().reflection);
    doc["status"] = "conjecture scan: an empty violation list means no counterexample was found";
    ojson arr = ojson::array();
    std::size_t total = 0;
    for (const auto& r : reports) {
        ojson j;
        j["n"] = r.n;
        j["diagrams_scanned"] = r.diagrams_scanned;
        j["logconcavity_violations"] = r.logconcavity_violations;
        if (with_timing) j["wall_time"] = r.wall_time;
        total += r.logconcavity_violations.size();
        arr.push_back(std::move(j));
    }
    doc["reports"] = std::move(arr);
    doc["total_violations"] = total;
    return doc.dump(2) + "\n";
}

std::string lc_reports_text(const std::vector<VerificationReport>& reports, bool with_timing) {
    std::ostringstream os;
    os << "# log-concavity scan, dedup=" << dedup_name(!reports.empty() && reports.front().reflection) << "\n";
    for (const auto& r : reports) {
        os << "n=" << r.n << " scanned=" << r.diagrams_scanned
           << " violations=" << r.logconcavity_violations.size();
        if (with_timing) os << " time=" << r.wall_time << "s";
        os << "\n";
        if (!r.logconcavity_violations.empty()) os << "  " << join_words(r.logconcavity_violations) << "\n";
    }
    return os.str();
}

std::string bn_results_json(const std::vector<BnResult>& results) {
    ojson arr = ojson::array();
    bool pass = true;
    for (const auto& r : results) {
        ojson j;
        j["n"] = r.n;
        j["expected"] = r.expected.coeffs();
        j["actual"] = r.actual.coeffs();
        j["pass"] = r.pass;
        pass = pass && r.pass;
        arr.push_back(std::move(j));
    }
    ojson doc;
    doc["results"] = std::move(arr);
    doc["pass"] = pass;
    return doc.dump(2) + "\n";
}

std::string bn_results_text(const std::vector<BnResult>& results) {
    std::ostringstream os;
    for (const auto& r : results)
        os << "n=" << r.n << " expected=" << format_poly(r.expected) << " actual=" << format_poly(r.actual) << " "
           << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace rgpd::verify
