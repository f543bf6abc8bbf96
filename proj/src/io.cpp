#include "rgpd/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace rgpd::io {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        std::string line(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++number;
        out.push_back({number, std::move(line)});
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }
bool is_comment(const std::string& s) {
    const auto p = s.find_first_not_of(" \t");
    return p != std::string::npos && s[p] == '#';
}

std::vector<long long> integers(const Line& line) {
    std::istringstream is(line.text);
    std::vector<long long> out;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw ParseError(line.number, "expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

long long header_count(const Line& line, const std::string& keyword) {
    std::istringstream is(line.text);
    std::string word;
    long long k = -1;
    std::string rest;
    if (!(is >> word) || word != keyword || !(is >> k) || (is >> rest) || k < 0)
        throw ParseError(line.number, "expected '" + keyword + " <count>'");
    return k;
}

}  // namespace

RibbonGraph parse_graph_text(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    auto skip_ignorable = [&] {
        while (i < lines.size() && (is_blank(lines[i].text) || is_comment(lines[i].text))) ++i;
    };
    auto last_line = [&] { return lines.empty() ? 0 : lines.back().number; };

    skip_ignorable();
    if (i == lines.size()) throw ParseError(last_line(), "missing 'vertices <count>' header");
    const auto k = header_count(lines[i++], "vertices");

    std::vector<std::vector<Dart>> rotations;
    std::vector<int> rotation_line;
    while (static_cast<long long>(rotations.size()) < k) {
        while (i < lines.size() && is_comment(lines[i].text)) ++i;
        if (i == lines.size())
            throw ParseError(last_line(), "expected " + std::to_string(k) + " rotation lines, got " +
                                              std::to_string(rotations.size()));
        auto& rot = rotations.emplace_back();
        for (long long d : integers(lines[i])) rot.push_back(static_cast<Dart>(d));
        rotation_line.push_back(lines[i].number);
        ++i;
    }

    skip_ignorable();
    if (i == lines.size()) throw ParseError(last_line(), "missing 'edges <count>' header");
    const auto m = header_count(lines[i++], "edges");
    const long long darts = 2 * m;

    // Dart checks here so errors carry line numbers.
    std::vector<int> seen_at(static_cast<std::size_t>(darts), 0);
    for (std::size_t v = 0; v < rotations.size(); ++v) {
        for (Dart d : rotations[v]) {
            if (d < 0 || d >= darts)
                throw ParseError(rotation_line[v], "dart " + std::to_string(d) + " out of range 0.." +
                                                       std::to_string(darts - 1));
            if (seen_at[d])
                throw ParseError(rotation_line[v], "duplicate dart " + std::to_string(d) + " (first on line " +
                                                       std::to_string(seen_at[d]) + ")");
            seen_at[d] = rotation_line[v];
        }
    }

    std::vector<std::array<Dart, 2>> edges(static_cast<std::size_t>(m), {-1, -1});
    std::vector<int> edge_line(static_cast<std::size_t>(m), 0);
    std::vector<int> paired_at(static_cast<std::size_t>(darts), 0);
    for (long long e = 0; e < m; ++e) {
        skip_ignorable();
        if (i == lines.size())
            throw ParseError(last_line(), "expected " + std::to_string(m) + " edge lines, got " + std::to_string(e));
        const auto& line = lines[i++];
        const auto v = integers(line);
        if (v.size() != 3) throw ParseError(line.number, "expected 'label dartA dartB'");
        const long long label = v[0];
        if (label < 0 || label >= m) throw ParseError(line.number, "edge label " + std::to_string(label) + " out of range");
        if (edge_line[label])
            throw ParseError(line.number, "edge label " + std::to_string(label) + " repeated (first on line " +
                                              std::to_string(edge_line[label]) + ")");
        for (int s : {1, 2}) {
            if (v[s] < 0 || v[s] >= darts)
                throw ParseError(line.number, "dart " + std::to_string(v[s]) + " out of range");
        }
        if (v[1] == v[2]) throw ParseError(line.number, "pairing fixed point at " + std::to_string(v[1]));
        for (int s : {1, 2}) {
            if (paired_at[v[s]])
                throw ParseError(line.number, "dart " + std::to_string(v[s]) + " already paired on line " +
                                                  std::to_string(paired_at[v[s]]));
            paired_at[v[s]] = line.number;
        }
        edge_line[label] = line.number;
        edges[label] = {static_cast<Dart>(v[1]), static_cast<Dart>(v[2])};
    }
    skip_ignorable();
    if (i != lines.size()) throw ParseError(lines[i].number, "unexpected content after the edge list");

    try {
        return RibbonGraph(std::move(rotations), std::move(edges));
    } catch (const InvalidGraph& e) {
        throw ParseError(0, e.what());
    }
}

RibbonGraph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    try {
        auto rotations = j.at("vertices").get<std::vector<std::vector<Dart>>>();
        auto edges = j.at("edges").get<std::vector<std::array<Dart, 2>>>();
        return RibbonGraph(std::move(rotations), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad graph JSON: ") + e.what());
    } catch (const InvalidGraph& e) {
        throw ParseError(0, e.what());
    }
}

RibbonGraph parse_graph(std::string_view text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string_view::npos && text[p] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string graph_to_text(const RibbonGraph& g) {
    const auto c = canonical_dart_order(g);
    std::ostringstream os;
    os << "vertices " << c.num_vertices() << "\n";
    for (const auto& rot : c.rotations()) {
        for (std::size_t i = 0; i < rot.size(); ++i) os << (i ? " " : "") << rot[i];
        os << "\n";
    }
    os << "edges " << c.num_edges() << "\n";
    for (EdgeId e = 0; e < c.num_edges(); ++e) os << e << " " << c.edges()[e][0] << " " << c.edges()[e][1] << "\n";
    return os.str();
}

std::string graph_to_json(const RibbonGraph& g) {
    const auto c = canonical_dart_order(g);
    nlohmann::ordered_json j;
    j["vertices"] = c.rotations();
    j["edges"] = c.edges();
    return j.dump() + "\n";
}

std::vector<ChordDiagram> parse_word_list(std::string_view text) {
    std::vector<ChordDiagram> out;
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string_view::npos && text[p] == '[') {
        try {
            for (const auto& w : nlohmann::json::parse(text).get<std::vector<std::string>>())
                out.push_back(parse_word(w));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, std::string("bad word list JSON: ") + e.what());
        }
        return out;
    }
    for (const auto& line : split_lines(text)) {
        std::string body = line.text.substr(0, line.text.find('#'));
        if (is_blank(body)) continue;
        try {
            out.push_back(parse_word(body));
        } catch (const InvalidWord& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return out;
}

std::string poly_to_json(const GenusPolynomial& p) { return nlohmann::json(p.coeffs()).dump() + "\n"; }

GenusPolynomial poly_from_json(std::string_view text) {
    try {
        return GenusPolynomial(nlohmann::json::parse(text).get<std::vector<std::uint64_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad polynomial JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace rgpd::io
