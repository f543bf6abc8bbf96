#pragma once

// Orientable ribbon graphs stored as rotation systems over darts.
//
// A dart is one end of an edge-ribbon, i.e. one of the two segments where the
// ribbon meets a vertex-disc. Every vertex lists its darts in counterclockwise
// order; the edge pairing is a fixed-point-free involution on darts. There is
// no twist data, so every graph this type can hold is orientable.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgpd {

using Dart = int;
using EdgeId = int;
using VertexId = int;

/// Raised when rotation/pairing data violates a ribbon graph invariant.
class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The two endpoints of a dart segment on the vertex boundary. `cw` is the end
/// met first when walking counterclockwise around the vertex, `ccw` the end
/// facing the next dart in rotation order.
enum class Side : std::uint8_t { cw = 0, ccw = 1 };

struct DartSide {
    Dart dart;
    Side side;

    int index() const { return 2 * dart + static_cast<int>(side); }
    static DartSide from_index(int i) { return {i / 2, static_cast<Side>(i % 2)}; }
    friend bool operator==(const DartSide&, const DartSide&) = default;
};

struct GraphStats {
    int v = 0;
    int e = 0;
    int f = 0;
    int euler_char = 0;
    int genus = 0;
    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct Components {
    int count = 0;
    std::vector<int> of_vertex;  // component index per vertex
    std::vector<int> of_dart;    // component index per dart
};

class RibbonGraph {
public:
    RibbonGraph() = default;

    /// Builds from rotations and an explicit edge list; edge i joins edges[i][0]
    /// and edges[i][1]. Throws InvalidGraph on the first violated invariant.
    RibbonGraph(std::vector<std::vector<Dart>> rotations, std::vector<std::array<Dart, 2>> edges);

    /// Builds from rotations and a pairing involution. Edges are numbered by
    /// their smaller dart.
    static RibbonGraph from_pairing(std::vector<std::vector<Dart>> rotations, std::vector<Dart> partner);

    int num_vertices() const { return static_cast<int>(rotations_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_darts() const { return static_cast<int>(partner_.size()); }

    std::span<const Dart> rotation(VertexId v) const { return rotations_.at(v); }
    const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
    const std::vector<std::array<Dart, 2>>& edges() const { return edges_; }
    std::array<Dart, 2> edge_darts(EdgeId e) const { return edges_.at(e); }

    Dart partner(Dart d) const { return partner_[d]; }
    /// Next dart counterclockwise around the vertex holding d.
    Dart next(Dart d) const { return next_[d]; }
    Dart prev(Dart d) const { return prev_[d]; }
    VertexId vertex_of(Dart d) const { return vertex_of_[d]; }
    EdgeId edge_of(Dart d) const { return edge_of_[d]; }
    int position_of(Dart d) const { return position_[d]; }

    bool is_loop(EdgeId e) const { return vertex_of_[edges_[e][0]] == vertex_of_[edges_[e][1]]; }

    /// Re-checks every invariant; only fails for graphs assembled by hand.
    void validate() const;

    friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

private:
    void build_index();

    std::vector<std::vector<Dart>> rotations_;
    std::vector<std::array<Dart, 2>> edges_;
    std::vector<Dart> partner_;
    std::vector<Dart> next_;
    std::vector<Dart> prev_;
    std::vector<VertexId> vertex_of_;
    std::vector<EdgeId> edge_of_;
    std::vector<int> position_;
};

/// A closed walk along the ribbon graph boundary. An isolated vertex yields an
/// empty walk (its whole circle is one boundary component with no darts on it).
using BoundaryWalk = std::vector<DartSide>;

std::vector<BoundaryWalk> boundary_components(const RibbonGraph& g);

/// Walk index of every dart-side (size 4m), walks numbered as returned by
/// boundary_components.
std::vector<int> face_of_side(const RibbonGraph& g);

// Two independent face counters used to cross-check the side convention:
// orbits of next∘partner (cross the ribbon, then rotate) and of
// partner∘next (rotate, then cross). Both add one face per isolated vertex.
int face_count_cross_then_rotate(const RibbonGraph& g);
int face_count_rotate_then_cross(const RibbonGraph& g);

Components connected_components(const RibbonGraph& g);
bool is_connected(const RibbonGraph& g);

/// Throws InvalidGraph if g is disconnected.
GraphStats stats(const RibbonGraph& g);

bool is_isomorphic(const RibbonGraph& g, const RibbonGraph& h);

/// Ribbon join: splices the rotation of g2 at v2 (opened at corner arc2) into
/// the rotation of g1 at v1 (opened at corner arc1). Corner c of a vertex with
/// k darts is the gap just before rotation position c; valid c is 0..max(k,1)-1.
/// The merged vertex takes v1's place, the other vertices of g2 follow those of
/// g1, and g2's darts and edges are shifted past g1's.
RibbonGraph join(const RibbonGraph& g1, VertexId v1, int arc1, const RibbonGraph& g2, VertexId v2,
                 int arc2);

/// Applies a dart relabeling: dart d becomes perm[d].
RibbonGraph relabel_darts(const RibbonGraph& g, std::span<const Dart> perm);

/// Renumbers darts by vertex order, then rotation order; edge order is kept.
RibbonGraph canonical_dart_order(const RibbonGraph& g);

// Named families.
RibbonGraph bouquet_bn(int n);
RibbonGraph tree_path(int n);
RibbonGraph tree_star(int n);
RibbonGraph dipole_opposite(int n);
RibbonGraph isolated_vertex();

}  // namespace rgpd
