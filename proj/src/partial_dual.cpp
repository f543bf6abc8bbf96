#include "rgpd/partial_dual.hpp"

#include <algorithm>
#include <stdexcept>

#include "rgpd/sides.hpp"

namespace rgpd {

std::vector<char> edge_mask(const RibbonGraph& g, std::span<const EdgeId> edges) {
    std::vector<char> mask(g.num_edges(), 0);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.num_edges()) throw std::out_of_range("unknown edge " + std::to_string(e));
        mask[e] = 1;
    }
    return mask;
}

std::vector<EdgeId> all_edges(const RibbonGraph& g) {
    std::vector<EdgeId> out(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) out[e] = e;
    return out;
}

std::vector<EdgeId> edges_in_mask(std::uint64_t mask, int m) {
    std::vector<EdgeId> out;
    for (int e = 0; e < m; ++e)
        if (mask >> e & 1U) out.push_back(e);
    return out;
}

namespace {

int isolated_count(const RibbonGraph& g) {
    int c = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) c += g.rotation(v).empty() ? 1 : 0;
    return c;
}

// Traces every boundary component of the spanning subgraph (V, A). For each
// cw side reached, `record` gets the dart whose segment or ribbon side is
// about to be followed; `close` ends a component.
template <class Record, class Close>
void trace_spanning_boundary(const RibbonGraph& g, const std::vector<char>& in_a, Record record, Close close) {
    const int n = g.num_darts();
    std::vector<char> visited(n, 0);  // per cw side
    for (Dart start = 0; start < n; ++start) {
        if (visited[start]) continue;
        DartSide cur{start, Side::cw};
        do {
            visited[cur.dart] = 1;
            record(cur.dart);
            const DartSide far =
                in_a[g.edge_of(cur.dart)] ? sides::along_ribbon(g, cur) : sides::along_segment(cur);
            cur = sides::across_corner(g, far);
        } while (cur.dart != start);
        close();
    }
}

RibbonGraph normalized_from_rotations(std::vector<std::vector<Dart>> rotations, const RibbonGraph& g) {
    for (auto& rot : rotations) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    std::sort(rotations.begin(), rotations.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return RibbonGraph(std::move(rotations), g.edges());
}

void require_connected(const RibbonGraph& g) {
    if (!is_connected(g)) throw InvalidGraph("partial duality needs a connected graph");
}

}  // namespace

int spanning_boundary_count(const RibbonGraph& g, std::span<const EdgeId> edges) {
    const auto in_a = edge_mask(g, edges);
    int count = 0;
    trace_spanning_boundary(g, in_a, [](Dart) {}, [&] { ++count; });
    return count + isolated_count(g);
}

RibbonGraph partial_dual(const RibbonGraph& g, std::span<const EdgeId> edges) {
    require_connected(g);
    const auto in_a = edge_mask(g, edges);
    if (g.num_darts() == 0) return g;
    const int n = g.num_darts();
    std::vector<Dart> next(n);
    for (Dart x = 0; x < n; ++x) next[x] = g.next(in_a[g.edge_of(x)] ? g.partner(x) : x);

    std::vector<std::vector<Dart>> rotations;
    std::vector<char> seen(n, 0);
    for (Dart d = 0; d < n; ++d) {
        if (seen[d]) continue;
        auto& rot = rotations.emplace_back();
        for (Dart x = d; !seen[x]; x = next[x]) {
            seen[x] = 1;
            rot.push_back(x);
        }
    }
    return RibbonGraph(std::move(rotations), g.edges());
}

RibbonGraph partial_dual_reference(const RibbonGraph& g, std::span<const EdgeId> edges) {
    require_connected(g);
    const auto in_a = edge_mask(g, edges);
    if (g.num_darts() == 0) return g;
    // A dart outside A keeps its spot on the new vertex boundary. An edge e in
    // A leaves two ribbon sides on that boundary; the side leaving (d, cw)
    // carries dart d of e'.
    std::vector<std::vector<Dart>> rotations;
    std::vector<Dart> current;
    trace_spanning_boundary(
        g, in_a, [&](Dart d) { current.push_back(d); },
        [&] {
            rotations.push_back(std::move(current));
            current.clear();
        });
    return normalized_from_rotations(std::move(rotations), g);
}

std::string to_string(EdgeType t) {
    switch (t) {
        case EdgeType::pp: return "pp";
        case EdgeType::uu: return "uu";
        case EdgeType::pu: return "pu";
        case EdgeType::up: return "up";
    }
    return "?";
}

EdgeType parse_edge_type(const std::string& s) {
    if (s == "pp") return EdgeType::pp;
    if (s == "uu") return EdgeType::uu;
    if (s == "pu") return EdgeType::pu;
    if (s == "up") return EdgeType::up;
    throw std::invalid_argument("unknown edge type '" + s + "'");
}

EdgeType dual_type(EdgeType t) {
    switch (t) {
        case EdgeType::pp: return EdgeType::uu;
        case EdgeType::uu: return EdgeType::pp;
        case EdgeType::pu: return EdgeType::up;
        case EdgeType::up: return EdgeType::pu;
    }
    return t;
}

int genus_delta(EdgeType t) {
    switch (t) {
        case EdgeType::pp: return 1;
        case EdgeType::uu: return -1;
        default: return 0;
    }
}

std::pair<int, int> incident_faces(const RibbonGraph& g, EdgeId e) {
    if (e < 0 || e >= g.num_edges()) throw std::out_of_range("unknown edge " + std::to_string(e));
    const auto face = face_of_side(g);
    const auto [a, b] = g.edge_darts(e);
    // The two long sides of the ribbon start at (a, cw) and (b, cw).
    const int fa = face[DartSide{a, Side::cw}.index()];
    const int fb = face[DartSide{b, Side::cw}.index()];
    return {std::min(fa, fb), std::max(fa, fb)};
}

EdgeType edge_type(const RibbonGraph& g, EdgeId e) {
    if (!is_connected(g)) throw InvalidGraph("edge type needs a connected graph");
    const auto [f1, f2] = incident_faces(g, e);
    const bool loop = g.is_loop(e);
    const bool one_face = f1 == f2;
    if (!loop) return one_face ? EdgeType::pu : EdgeType::pp;
    return one_face ? EdgeType::uu : EdgeType::up;
}

MergeSplit check_merge_split(const RibbonGraph& g, EdgeId e) {
    MergeSplit r;
    const auto before = stats(g);
    r.before = edge_type(g, e);
    const EdgeId single[] = {e};
    const auto dual = partial_dual(g, single);
    const auto after = stats(dual);
    r.after = edge_type(dual, e);
    r.dv = after.v - before.v;
    r.df = after.f - before.f;
    r.dg = after.genus - before.genus;
    const bool proper = r.before == EdgeType::pp || r.before == EdgeType::pu;
    const bool two_faces = r.before == EdgeType::pp || r.before == EdgeType::up;
    r.counts_consistent = r.dv == (proper ? -1 : 1) && r.df == (two_faces ? -1 : 1);
    return r;
}

std::vector<UpViolation> check_up_conditions(const RibbonGraph& g) {
    if (g.num_vertices() != 1) throw InvalidGraph("up-condition check needs a one-vertex graph");
    const int m = g.num_edges();
    std::vector<std::pair<int, int>> faces(m), pos(m);
    for (EdgeId e = 0; e < m; ++e) {
        faces[e] = incident_faces(g, e);
        const auto [a, b] = g.edge_darts(e);
        pos[e] = std::minmax(g.position_of(a), g.position_of(b));
    }
    auto interlaced = [&](EdgeId x, EdgeId y) {
        const bool in0 = pos[x].first < pos[y].first && pos[y].first < pos[x].second;
        const bool in1 = pos[x].first < pos[y].second && pos[y].second < pos[x].second;
        return in0 != in1;
    };
    std::vector<UpViolation> out;
    for (EdgeId e = 0; e < m; ++e) {
        if (faces[e].first == faces[e].second) out.push_back({e, 1});
        bool bad2 = false, bad3 = false;
        for (EdgeId o = 0; o < m; ++o) {
            if (o == e) continue;
            if (interlaced(e, o)) bad2 |= faces[o] != faces[e];
            else bad3 |= faces[o] == faces[e];
        }
        if (bad2) out.push_back({e, 2});
        if (bad3) out.push_back({e, 3});
    }
    return out;
}

}  // namespace rgpd
