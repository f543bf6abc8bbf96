#pragma once

// Text and JSON forms of ribbon graphs, word lists and polynomials.
//
// Rotation-system text format:
//
//   vertices 2
//   0 2 4
//   1 3 5
//   edges 3
//   0 0 1
//   1 2 3
//   2 4 5
//
// One rotation line per vertex (an empty line is an isolated vertex), then
// `label dartA dartB` per edge where label is the edge index 0..m-1. Lines
// starting with '#' are ignored. JSON: {"vertices": [[...]], "edges": [[a, b], ...]}
// with the edge index given by array position.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rgpd/chord.hpp"
#include "rgpd/genus_poly.hpp"
#include "rgpd/ribbon_graph.hpp"

namespace rgpd::io {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

RibbonGraph parse_graph_text(std::string_view text);
RibbonGraph parse_graph_json(std::string_view text);
/// Dispatches on the first non-space character ('{' means JSON).
RibbonGraph parse_graph(std::string_view text);

/// Darts are renumbered by vertex order, then rotation order.
std::string graph_to_text(const RibbonGraph& g);
std::string graph_to_json(const RibbonGraph& g);

/// One word per line with '#' comments, or a JSON array of strings.
std::vector<ChordDiagram> parse_word_list(std::string_view text);

std::string poly_to_json(const GenusPolynomial& p);
GenusPolynomial poly_from_json(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace rgpd::io
