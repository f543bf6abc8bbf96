#include "rgpd/chord.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace rgpd {

ChordDiagram::ChordDiagram(std::vector<int> word) {
    if (word.size() % 2 != 0) throw InvalidWord("word has odd length " + std::to_string(word.size()));
    std::map<int, int> relabel;
    std::map<int, int> count;
    for (int s : word) {
        relabel.try_emplace(s, static_cast<int>(relabel.size()));
        ++count[s];
    }
    for (auto [s, c] : count)
        if (c != 2) throw InvalidWord("symbol " + std::to_string(s) + " occurs " + std::to_string(c) + " times");
    word_.reserve(word.size());
    for (int s : word) word_.push_back(relabel[s]);
    ends_.assign(word_.size() / 2, {-1, -1});
    for (int p = 0; p < static_cast<int>(word_.size()); ++p) {
        auto& e = ends_[word_[p]];
        (e.first < 0 ? e.first : e.second) = p;
    }
}

std::string chord_label(int i) {
    if (i < 26) return std::string(1, static_cast<char>('A' + i));
    return "[" + std::to_string(i) + "]";
}

std::string ChordDiagram::to_string() const {
    std::string out;
    for (int c : word_) out += chord_label(c);
    return out;
}

ChordDiagram parse_word(std::string_view text) {
    std::map<std::string, int> symbols;
    std::vector<std::string> names;
    std::vector<int> raw;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        std::string sym;
        if (ch == '[') {
            const auto close = text.find(']', i);
            if (close == std::string_view::npos) throw InvalidWord("unterminated '[' at offset " + std::to_string(i));
            sym = std::string(text.substr(i, close - i + 1));
            i = close;
        } else if (ch == ']') {
            throw InvalidWord("stray ']' at offset " + std::to_string(i));
        } else {
            sym = std::string(1, ch);
        }
        auto [it, inserted] = symbols.try_emplace(sym, static_cast<int>(names.size()));
        if (inserted) names.push_back(sym);
        raw.push_back(it->second);
    }
    if (raw.size() % 2 != 0) throw InvalidWord("word has odd length " + std::to_string(raw.size()));
    std::vector<int> count(names.size(), 0);
    for (int s : raw) ++count[s];
    for (std::size_t s = 0; s < names.size(); ++s)
        if (count[s] != 2)
            throw InvalidWord("symbol " + names[s] + " occurs " + std::to_string(count[s]) + " time(s), expected 2");
    return ChordDiagram(std::move(raw));
}

ChordDiagram from_matching(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (static_cast<int>(pairs.size()) != n) throw InvalidWord("matching has wrong number of pairs");
    std::vector<int> word(2 * n, -1);
    for (int i = 0; i < n; ++i) {
        for (int p : {pairs[i].first, pairs[i].second}) {
            if (p < 0 || p >= 2 * n || word[p] != -1) throw InvalidWord("matching is not perfect");
            word[p] = i;
        }
    }
    return ChordDiagram(std::move(word));
}

RibbonGraph to_ribbon_graph(const ChordDiagram& d) {
    std::vector<Dart> rot(d.length());
    for (int p = 0; p < d.length(); ++p) rot[p] = p;
    std::vector<std::array<Dart, 2>> edges;
    for (int c = 0; c < d.num_chords(); ++c) edges.push_back({d.ends(c).first, d.ends(c).second});
    return RibbonGraph({std::move(rot)}, std::move(edges));
}

ChordDiagram from_one_vertex(const RibbonGraph& g) {
    if (g.num_vertices() != 1)
        throw InvalidGraph("chord diagram needs a one-vertex graph, got " + std::to_string(g.num_vertices()) +
                           " vertices");
    std::vector<int> word;
    for (Dart d : g.rotation(0)) word.push_back(g.edge_of(d));
    return ChordDiagram(std::move(word));
}

int InterlacementGraph::degree(int a) const {
    int deg = 0;
    for (int b = 0; b < n; ++b) deg += adjacent(a, b) ? 1 : 0;
    return deg;
}

std::vector<int> InterlacementGraph::components(int* count) const {
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < n; ++b) {
                if (adjacent(a, b) && comp[b] < 0) {
                    comp[b] = next;
                    stack.push_back(b);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

InterlacementGraph interlacement(const ChordDiagram& d) {
    InterlacementGraph ig;
    ig.n = d.num_chords();
    ig.adj.assign(static_cast<std::size_t>(ig.n) * ig.n, 0);
    for (int a = 0; a < ig.n; ++a) {
        const auto [a0, a1] = d.ends(a);
        for (int b = a + 1; b < ig.n; ++b) {
            const auto [b0, b1] = d.ends(b);
            const bool inside0 = a0 < b0 && b0 < a1;
            const bool inside1 = a0 < b1 && b1 < a1;
            if (inside0 != inside1) ig.adj[a * ig.n + b] = ig.adj[b * ig.n + a] = 1;
        }
    }
    return ig;
}

bool is_join_prime(const ChordDiagram& d) {
    if (d.num_chords() == 0) throw InvalidWord("join-primeness is undefined for the empty diagram");
    int count = 0;
    interlacement(d).components(&count);
    return count == 1;
}

namespace {

// Writes the first-occurrence relabeling of the word read from `start`, in
// direction `step` (+1 or -1), into out. Returns the comparison against best
// as soon as it is decided (negative: smaller).
int relabeled_compare(const std::vector<int>& word, int start, int step, const std::vector<int>& best,
                      std::vector<int>& out, std::vector<int>& map) {
    const int len = static_cast<int>(word.size());
    std::fill(map.begin(), map.end(), -1);
    int next = 0;
    int cmp = 0;
    for (int i = 0; i < len; ++i) {
        const int sym = word[((start + step * i) % len + len) % len];
        if (map[sym] < 0) map[sym] = next++;
        out[i] = map[sym];
        if (cmp == 0 && !best.empty()) {
            if (out[i] < best[i]) cmp = -1;
            else if (out[i] > best[i]) return 1;
        }
    }
    return cmp;
}

}  // namespace

ChordDiagram canonical_form(const ChordDiagram& d, bool use_reflection) {
    const auto& word = d.word();
    const int len = d.length();
    if (len == 0) return d;
    std::vector<int> best;
    std::vector<int> cand(len), map(d.num_chords());
    for (int step : {1, -1}) {
        if (step == -1 && !use_reflection) break;
        for (int start = 0; start < len; ++start) {
            const int cmp = relabeled_compare(word, start, step, best, cand, map);
            if (best.empty() || cmp < 0) best = cand;
        }
    }
    return ChordDiagram(std::move(best));
}

bool is_canonical(const ChordDiagram& d, bool use_reflection) {
    const auto& word = d.word();
    const int len = d.length();
    std::vector<int> cand(len), map(d.num_chords());
    for (int step : {1, -1}) {
        if (step == -1 && !use_reflection) break;
        for (int start = 0; start < len; ++start)
            if (relabeled_compare(word, start, step, word, cand, map) < 0) return false;
    }
    return true;
}

void for_each_diagram(int n, bool use_reflection, const std::function<void(const ChordDiagram&)>& visit) {
    if (n < 1) throw InvalidWord("enumeration needs n >= 1");
    // Normalized words in increasing order: at each position close an open
    // chord (smaller labels first) or open the next new label.
    std::vector<int> word(2 * n, -1);
    std::vector<char> open(n, 0);
    auto rec = [&](auto&& self, int pos, int opened) -> void {
        if (pos == 2 * n) {
            ChordDiagram d(word);
            if (is_canonical(d, use_reflection)) visit(d);
            return;
        }
        for (int c = 0; c < opened; ++c) {
            if (!open[c]) continue;
            open[c] = 0;
            word[pos] = c;
            self(self, pos + 1, opened);
            open[c] = 1;
        }
        if (opened < n) {
            open[opened] = 1;
            word[pos] = opened;
            self(self, pos + 1, opened + 1);
            open[opened] = 0;
        }
    };
    rec(rec, 0, 0);
}

std::vector<ChordDiagram> enumerate_diagrams(int n, bool use_reflection) {
    std::vector<ChordDiagram> out;
    for_each_diagram(n, use_reflection, [&](const ChordDiagram& d) { out.push_back(d); });
    return out;
}

bool components_all_odd_complete(const ChordDiagram& d) {
    const auto ig = interlacement(d);
    int count = 0;
    const auto comp = ig.components(&count);
    std::vector<int> size(count, 0);
    for (int c : comp) ++size[c];
    for (int a = 0; a < ig.n; ++a) {
        const int k = size[comp[a]];
        if (k % 2 == 0 || ig.degree(a) != k - 1) return false;
    }
    return true;
}

}  // namespace rgpd
