#pragma once

// Test-only brute-force oracles. None of these call canonical_form, the fast
// partial dual or the gamma kernels.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgpd/chord.hpp"
#include "rgpd/genus_poly.hpp"
#include "rgpd/ribbon_graph.hpp"

namespace oracle {

using Matching = std::vector<std::pair<int, int>>;  // sorted pairs, first < second

/// Every perfect matching of 2n points: pair the least free point with each
/// other free point in turn.
std::vector<Matching> all_matchings(int n);

/// Rotates (and optionally mirrors) a matching of 2n points and re-sorts it.
Matching transform(const Matching& m, int points, int shift, bool mirror);

/// Orbit classes under rotation (and reflection): one representative per class,
/// found by marking every image of each new representative.
std::vector<Matching> dedup_orbits(const std::vector<Matching>& all, int points, bool reflection);

Matching to_matching(const rgpd::ChordDiagram& d);

/// Chords cross iff their four endpoints alternate when read around the circle.
bool crosses(std::pair<int, int> a, std::pair<int, int> b);

/// Some rotation of the word splits into two nonempty contiguous pieces, each
/// holding both ends of all of its chords.
bool splits_into_closed_subwords(const rgpd::ChordDiagram& d);

/// gamma through partial_dual_reference and boundary tracing, one subset at a time.
rgpd::GenusPolynomial gamma_reference(const rgpd::RibbonGraph& g);

std::uint64_t seed();
std::mt19937_64 rng(std::uint64_t salt = 0);

rgpd::ChordDiagram random_diagram(std::mt19937_64& gen, int n);
/// Connected graph: a random spanning tree on `vertices` vertices plus random
/// extra edges (loops allowed), darts inserted at random rotation positions.
rgpd::RibbonGraph random_connected_graph(std::mt19937_64& gen, int vertices, int edges);
/// gamma of a one-vertex graph from GF(2) ranks of the interlace matrix:
/// faces of a chord diagram = 1 + nullity of its interlace matrix, so
/// genus(G^A) = (rank M[A] + rank M[complement of A]) / 2.
rgpd::GenusPolynomial gamma_interlace_rank(const rgpd::ChordDiagram& d);

/// Random relabeling of darts.
rgpd::RibbonGraph shuffle_darts(std::mt19937_64& gen, const rgpd::RibbonGraph& g);

/// Fixture set used across suites: the named families, the small worked
/// examples and every one-vertex graph with at most max_chords chords.
std::vector<rgpd::RibbonGraph> fixtures(int max_chords = 4);

}  // namespace oracle
