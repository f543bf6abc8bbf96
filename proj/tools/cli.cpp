#include "cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgpd/chord.hpp"
#include "rgpd/genus_poly.hpp"
#include "rgpd/io.hpp"
#include "rgpd/partial_dual.hpp"
#include "rgpd/ribbon_graph.hpp"
#include "rgpd/verify.hpp"

namespace rgpd::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string word;
    std::string file;

    void add_to(CLI::App* cmd, const std::string& suffix = "") {
        auto* w = cmd->add_option("--word" + suffix, word, "Chord-diagram word (one-vertex graph)");
        auto* f = cmd->add_option("--file" + suffix, file, "Rotation-system file, text or JSON ('-' for stdin)");
        w->excludes(f);
    }

    RibbonGraph load(const std::string& suffix = "") const {
        if (!word.empty()) {
            try {
                return to_ribbon_graph(parse_word(word));
            } catch (const InvalidWord& e) {
                throw UsageError("--word" + suffix + ": " + e.what());
            }
        }
        if (!file.empty()) {
            try {
                return io::parse_graph(io::read_file(file));
            } catch (const std::exception& e) {
                throw UsageError("--file" + suffix + " " + file + ": " + e.what());
            }
        }
        throw UsageError("one of --word" + suffix + " or --file" + suffix + " is required");
    }
};

std::vector<EdgeId> parse_edge_list(const std::string& text, int m, const std::string& flag) {
    std::vector<EdgeId> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" ") == std::string::npos) continue;
        std::size_t used = 0;
        int e = -1;
        try {
            e = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() && tok.find_first_not_of(" ", used) != std::string::npos)
            throw UsageError(flag + ": not an edge index: '" + tok + "'");
        if (e < 0 || e >= m) throw UsageError(flag + ": edge " + tok + " out of range 0.." + std::to_string(m - 1));
        out.push_back(e);
    }
    return out;
}

std::string write_graph(const RibbonGraph& g, const std::string& fmt) {
    return fmt == "json" ? io::graph_to_json(g) : io::graph_to_text(g);
}

void add_out(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--out", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::string side_name(Side s) { return s == Side::cw ? "cw" : "ccw"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ribbon graphs, partial duality and the partial-dual genus polynomial"};
    app.require_subcommand(1);

    std::string fmt = "text";
    int workers = 1;
    bool reflection = false;
    bool timing = false;
    bool use_reference = false;
    int max_n = 0;
    int n = 0;
    int edge = -1;
    std::string edges_text;
    VertexId v1 = 0, v2 = 0;
    int c1 = 0, c2 = 0;
    std::vector<std::string> gen_args;
    GraphSource src, src2;

    auto* stats_cmd = app.add_subcommand("stats", "Vertex, edge, face counts and genus");
    src.add_to(stats_cmd);
    add_out(stats_cmd, fmt);

    auto* faces_cmd = app.add_subcommand("faces", "Boundary walks as dart-sides");
    src.add_to(faces_cmd);
    add_out(faces_cmd, fmt);

    auto* pdual_cmd = app.add_subcommand("pdual", "Partial dual relative to an edge subset");
    src.add_to(pdual_cmd);
    pdual_cmd->add_option("--edges", edges_text, "Comma-separated 0-based edge indices")->required();
    pdual_cmd->add_flag("--reference", use_reference, "Use the boundary-tracing construction");
    add_out(pdual_cmd, fmt);

    auto* type_cmd = app.add_subcommand("type", "Edge type pp/uu/pu/up");
    src.add_to(type_cmd);
    type_cmd->add_option("--edge", edge, "0-based edge index")->required();
    add_out(type_cmd, fmt);

    auto* gamma_cmd = app.add_subcommand("gamma", "Partial-dual genus polynomial");
    src.add_to(gamma_cmd);
    gamma_cmd->add_option("--parallel", workers, "Worker threads")->check(CLI::PositiveNumber);
    add_out(gamma_cmd, fmt);

    auto* join_cmd = app.add_subcommand("join", "Ribbon join of two graphs");
    src.add_to(join_cmd);
    src2.add_to(join_cmd, "2");
    join_cmd->add_option("--v1", v1, "Vertex of the first graph");
    join_cmd->add_option("--c1", c1, "Corner of the first graph's vertex");
    join_cmd->add_option("--v2", v2, "Vertex of the second graph");
    join_cmd->add_option("--c2", c2, "Corner of the second graph's vertex");
    add_out(join_cmd, fmt);

    auto* gen_cmd = app.add_subcommand("gen", "Generate: bn N | tree path N | tree star N | dipole N");
    gen_cmd->add_option("family", gen_args, "Family and size")->required();
    add_out(gen_cmd, fmt);

    auto* enum_cmd = app.add_subcommand("enumerate", "Canonical chord diagrams with n chords");
    enum_cmd->add_option("--n", n, "Chord count")->required()->check(CLI::Range(1, 12));
    enum_cmd->add_flag("--reflection", reflection, "Also identify mirror images");
    add_out(enum_cmd, fmt);

    auto* vbn_cmd = app.add_subcommand("verify-bn", "Check gamma(B_n) = 2^n z^((n-1)/2) for odd n");
    vbn_cmd->add_option("--max", max_n, "Largest n")->required()->check(CLI::Range(1, 25));
    vbn_cmd->add_option("--parallel", workers, "Worker threads")->check(CLI::PositiveNumber);
    add_out(vbn_cmd, fmt);

    auto* vgmt_cmd = app.add_subcommand("verify-gmt", "Monomial gamma vs odd-complete interlacement, all diagrams");
    vgmt_cmd->add_option("--max", max_n, "Largest chord count")->required()->check(CLI::Range(1, 9));
    vgmt_cmd->add_flag("--reflection", reflection, "Also identify mirror images");
    vgmt_cmd->add_option("--parallel", workers, "Worker threads")->check(CLI::PositiveNumber);
    vgmt_cmd->add_flag("--timing", timing, "Include wall time in the report");
    add_out(vgmt_cmd, fmt);

    auto* lc_cmd = app.add_subcommand("scan-lc", "Log-concavity scan of gamma over all diagrams");
    lc_cmd->add_option("--max", max_n, "Largest chord count")->required()->check(CLI::Range(1, 9));
    lc_cmd->add_flag("--reflection", reflection, "Also identify mirror images");
    lc_cmd->add_option("--parallel", workers, "Worker threads")->check(CLI::PositiveNumber);
    lc_cmd->add_flag("--timing", timing, "Include wall time in the report");
    add_out(lc_cmd, fmt);

    std::string words_file;
    std::string canon_word;
    auto* canon_cmd = app.add_subcommand("canon", "Canonical form of chord-diagram words");
    auto* cw = canon_cmd->add_option("--word", canon_word, "Word");
    canon_cmd->add_option("--file", words_file, "Word list, one per line or a JSON array")->excludes(cw);
    canon_cmd->add_flag("--reflection", reflection, "Also identify mirror images");
    add_out(canon_cmd, fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const bool json = fmt == "json";
    try {
        if (stats_cmd->parsed()) {
            const auto s = stats(src.load());
            if (json) {
                nlohmann::ordered_json j{{"v", s.v}, {"e", s.e}, {"f", s.f}, {"genus", s.genus}};
                out << j.dump() << "\n";
            } else {
                out << "v=" << s.v << " e=" << s.e << " f=" << s.f << " genus=" << s.genus << "\n";
            }
        } else if (faces_cmd->parsed()) {
            const auto walks = boundary_components(src.load());
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& w : walks) {
                    nlohmann::json jw = nlohmann::json::array();
                    for (auto s : w) jw.push_back({s.dart, side_name(s.side)});
                    arr.push_back(jw);
                }
                out << nlohmann::json{{"faces", arr}}.dump() << "\n";
            } else {
                out << "faces " << walks.size() << "\n";
                for (const auto& w : walks) {
                    for (std::size_t i = 0; i < w.size(); ++i)
                        out << (i ? " " : "") << w[i].dart << side_name(w[i].side);
                    out << "\n";
                }
            }
        } else if (pdual_cmd->parsed()) {
            const auto g = src.load();
            const auto a = parse_edge_list(edges_text, g.num_edges(), "--edges");
            out << write_graph(use_reference ? partial_dual_reference(g, a) : partial_dual(g, a), fmt);
        } else if (type_cmd->parsed()) {
            const auto g = src.load();
            if (edge < 0 || edge >= g.num_edges()) throw UsageError("--edge: edge " + std::to_string(edge) + " out of range");
            const auto t = to_string(edge_type(g, edge));
            if (json) out << nlohmann::ordered_json{{"edge", edge}, {"type", t}}.dump() << "\n";
            else out << t << "\n";
        } else if (gamma_cmd->parsed()) {
            const auto p = gamma(src.load(), workers);
            out << (json ? io::poly_to_json(p) : format_poly(p) + "\n");
        } else if (join_cmd->parsed()) {
            const auto g1 = src.load();
            const auto g2 = src2.load("2");
            out << write_graph(join(g1, v1, c1, g2, v2, c2), fmt);
        } else if (gen_cmd->parsed()) {
            auto size_arg = [&](std::size_t idx) {
                if (gen_args.size() != idx + 1) throw UsageError("gen: expected 'bn N', 'tree path|star N' or 'dipole N'");
                try {
                    return std::stoi(gen_args[idx]);
                } catch (const std::exception&) {
                    throw UsageError("gen: size must be an integer, got '" + gen_args[idx] + "'");
                }
            };
            RibbonGraph g;
            const auto& fam = gen_args[0];
            if (fam == "bn") g = bouquet_bn(size_arg(1));
            else if (fam == "dipole") g = dipole_opposite(size_arg(1));
            else if (fam == "tree" && gen_args.size() > 1 && gen_args[1] == "path") g = tree_path(size_arg(2));
            else if (fam == "tree" && gen_args.size() > 1 && gen_args[1] == "star") g = tree_star(size_arg(2));
            else throw UsageError("gen: unknown family '" + fam + "'");
            out << write_graph(g, fmt);
        } else if (enum_cmd->parsed()) {
            std::vector<std::string> words;
            for_each_diagram(n, reflection, [&](const ChordDiagram& d) { words.push_back(d.to_string()); });
            if (json) out << nlohmann::json(words).dump() << "\n";
            else
                for (const auto& w : words) out << w << "\n";
        } else if (vbn_cmd->parsed()) {
            const auto results = verify::verify_bn(max_n, workers);
            out << (json ? verify::bn_results_json(results) : verify::bn_results_text(results));
            for (const auto& r : results)
                if (!r.pass) return kExitMismatch;
        } else if (vgmt_cmd->parsed()) {
            const auto reports = verify::verify_gmt(max_n, reflection, workers, [&](const verify::VerificationReport& r) {
                err << "verify-gmt: n=" << r.n << " scanned " << r.diagrams_scanned << " diagrams, "
                    << r.mismatches.size() << " mismatches (" << r.wall_time << "s)\n";
            });
            out << (json ? verify::gmt_reports_json(reports, timing) : verify::gmt_reports_text(reports, timing));
            for (const auto& r : reports)
                if (!r.passed() || !verify::dichotomy_from_report(r).pass) return kExitMismatch;
        } else if (lc_cmd->parsed()) {
            const auto reports = verify::scan_log_concavity(max_n, reflection, workers, [&](const verify::VerificationReport& r) {
                err << "scan-lc: n=" << r.n << " scanned " << r.diagrams_scanned << " diagrams, "
                    << r.logconcavity_violations.size() << " violations (" << r.wall_time << "s)\n";
            });
            out << (json ? verify::lc_reports_json(reports, timing) : verify::lc_reports_text(reports, timing));
        } else if (canon_cmd->parsed()) {
            std::vector<ChordDiagram> words;
            if (!canon_word.empty()) {
                try {
                    words.push_back(parse_word(canon_word));
                } catch (const InvalidWord& e) {
                    throw UsageError(std::string("--word: ") + e.what());
                }
            } else if (!words_file.empty()) {
                try {
                    words = io::parse_word_list(io::read_file(words_file));
                } catch (const std::exception& e) {
                    throw UsageError("--file " + words_file + ": " + e.what());
                }
            } else {
                throw UsageError("one of --word or --file is required");
            }
            std::vector<std::string> canon;
            for (const auto& d : words) canon.push_back(canonical_form(d, reflection).to_string());
            if (json) out << nlohmann::json(canon).dump() << "\n";
            else
                for (const auto& w : canon) out << w << "\n";
        }
    } catch (const std::exception& e) {
        // Bad words, bad files, disconnected input and out-of-range indices all
        // count as input errors.
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace rgpd::cli
