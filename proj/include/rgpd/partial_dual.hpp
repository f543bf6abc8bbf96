#pragma once

// Partial duality relative to an edge subset, and edge-type bookkeeping.
//
// Edges keep their index and their darts across duality: the two darts of e'
// in G^A reuse the ids of e's darts. The vertices of G^A are ordered by their
// smallest dart and each rotation starts at that dart.

#include <span>
#include <string>
#include <vector>

#include "rgpd/ribbon_graph.hpp"

namespace rgpd {

/// Membership mask over edge ids; built from a list, duplicates ignored.
std::vector<char> edge_mask(const RibbonGraph& g, std::span<const EdgeId> edges);

/// Boundary components of the spanning ribbon subgraph (all vertices, only the
/// listed edges). Equals the vertex count of G^A.
int spanning_boundary_count(const RibbonGraph& g, std::span<const EdgeId> edges);

/// G^A by composing the rotation with the pairing restricted to A.
RibbonGraph partial_dual(const RibbonGraph& g, std::span<const EdgeId> edges);

/// G^A by tracing the boundary of the spanning subgraph and recording, in
/// order, the darts of edges outside A and the ribbon sides of edges in A.
RibbonGraph partial_dual_reference(const RibbonGraph& g, std::span<const EdgeId> edges);

inline RibbonGraph partial_dual(const RibbonGraph& g, std::initializer_list<EdgeId> edges) {
    return partial_dual(g, std::span<const EdgeId>(edges.begin(), edges.size()));
}
inline RibbonGraph partial_dual_reference(const RibbonGraph& g, std::initializer_list<EdgeId> edges) {
    return partial_dual_reference(g, std::span<const EdgeId>(edges.begin(), edges.size()));
}

std::vector<EdgeId> all_edges(const RibbonGraph& g);
std::vector<EdgeId> edges_in_mask(std::uint64_t mask, int m);

/// First letter: proper edge (p) or loop (u). Second letter: the same for the
/// faces on either side of the ribbon.
enum class EdgeType { pp, uu, pu, up };

std::string to_string(EdgeType t);
EdgeType parse_edge_type(const std::string& s);
/// Type of e' in G^{e}: pp and uu swap, pu and up swap.
EdgeType dual_type(EdgeType t);
/// Genus change under single-edge duality: +1 for pp, -1 for uu, 0 otherwise.
int genus_delta(EdgeType t);

EdgeType edge_type(const RibbonGraph& g, EdgeId e);

/// The one or two faces the ribbon of e borders, identified by walk index.
std::pair<int, int> incident_faces(const RibbonGraph& g, EdgeId e);

struct MergeSplit {
    EdgeType before{};
    EdgeType after{};
    int dv = 0;
    int df = 0;
    int dg = 0;
    /// Proper edges merge vertices and loops split them; likewise for faces.
    bool counts_consistent = false;
};

MergeSplit check_merge_split(const RibbonGraph& g, EdgeId e);

struct UpViolation {
    EdgeId edge;
    int condition;  // 1, 2 or 3
    friend bool operator==(const UpViolation&, const UpViolation&) = default;
};

/// Evaluates, for each edge e of a one-vertex graph with faces {f1, f2}:
///   1. f1 != f2;
///   2. every chord interlaced with e borders exactly {f1, f2};
///   3. every chord not interlaced with e borders a different pair.
/// Returns one entry per failing (edge, condition), sorted.
std::vector<UpViolation> check_up_conditions(const RibbonGraph& g);

}  // namespace rgpd
