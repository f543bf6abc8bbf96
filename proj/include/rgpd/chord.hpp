#pragma once

// Chord diagrams: double-occurrence words read around the single vertex of a
// one-vertex ribbon graph.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgpd/ribbon_graph.hpp"

namespace rgpd {

class InvalidWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A cyclic double-occurrence word with labels 0..n-1 numbered in order of
/// first occurrence. Chord i is edge i of the matching ribbon graph.
class ChordDiagram {
public:
    ChordDiagram() = default;
    /// Accepts any labels; relabels them by first occurrence.
    explicit ChordDiagram(std::vector<int> word);

    int num_chords() const { return static_cast<int>(word_.size() / 2); }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    /// Positions of chord c, first < second.
    std::pair<int, int> ends(int c) const { return ends_.at(c); }

    std::string to_string() const;

    friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ == b.word_; }
    friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ <=> b.word_; }

private:
    std::vector<int> word_;
    std::vector<std::pair<int, int>> ends_;
};

/// Parses a word such as "ABAB" or "AB[26]A B[26]". Whitespace is ignored;
/// any other character is a symbol, and `[k]` is a single symbol.
ChordDiagram parse_word(std::string_view text);

/// Label for chord i: A..Z, then [26], [27], ...
std::string chord_label(int i);

ChordDiagram from_matching(int n, const std::vector<std::pair<int, int>>& pairs);

/// Dart p sits at word position p; edge i is chord i.
RibbonGraph to_ribbon_graph(const ChordDiagram& d);
/// Reads the rotation of a one-vertex graph, starting at its first dart.
ChordDiagram from_one_vertex(const RibbonGraph& g);

struct InterlacementGraph {
    int n = 0;
    std::vector<char> adj;  // row-major n*n

    bool adjacent(int a, int b) const { return adj[a * n + b] != 0; }
    int degree(int a) const;
    /// Component index per chord, numbered by least member.
    std::vector<int> components(int* count = nullptr) const;
};

InterlacementGraph interlacement(const ChordDiagram& d);

bool is_join_prime(const ChordDiagram& d);

/// Lexicographically least relabeled word over all rotations, and over all
/// reflections too when use_reflection is set.
ChordDiagram canonical_form(const ChordDiagram& d, bool use_reflection = false);
bool is_canonical(const ChordDiagram& d, bool use_reflection = false);

/// Canonical representatives with n chords, in increasing word order.
std::vector<ChordDiagram> enumerate_diagrams(int n, bool use_reflection = false);
void for_each_diagram(int n, bool use_reflection, const std::function<void(const ChordDiagram&)>& visit);

/// True iff every interlacement component is a complete graph of odd order.
bool components_all_odd_complete(const ChordDiagram& d);

}  // namespace rgpd
