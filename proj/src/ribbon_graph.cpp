#include "rgpd/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>

#include "rgpd/sides.hpp"

namespace rgpd {

namespace {

std::string str(int x) { return std::to_string(x); }

void check_rotations(const std::vector<std::vector<Dart>>& rotations, int n) {
    std::vector<int> seen(n, 0);
    for (const auto& rot : rotations) {
        for (Dart d : rot) {
            if (d < 0 || d >= n) throw InvalidGraph("dart " + str(d) + " out of range 0.." + str(n - 1));
            if (seen[d]++) throw InvalidGraph("duplicate dart " + str(d));
        }
    }
    for (Dart d = 0; d < n; ++d)
        if (!seen[d]) throw InvalidGraph("missing dart " + str(d));
}

void check_pairing(const std::vector<Dart>& partner) {
    const int n = static_cast<int>(partner.size());
    for (Dart d = 0; d < n; ++d) {
        const Dart p = partner[d];
        if (p == d) throw InvalidGraph("pairing fixed point at " + str(d));
        if (p < 0 || p >= n) throw InvalidGraph("dart " + str(d) + " has no partner");
        if (partner[p] != d) throw InvalidGraph("pairing non-involution at " + str(d));
    }
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<std::vector<Dart>> rotations, std::vector<std::array<Dart, 2>> edges)
    : rotations_(std::move(rotations)), edges_(std::move(edges)) {
    const int n = 2 * static_cast<int>(edges_.size());
    check_rotations(rotations_, n);
    partner_.assign(n, -1);
    for (const auto& [a, b] : edges_) {
        for (Dart d : {a, b})
            if (d < 0 || d >= n) throw InvalidGraph("dart " + str(d) + " out of range 0.." + str(n - 1));
        if (a == b) throw InvalidGraph("pairing fixed point at " + str(a));
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (partner_[x] != -1 && partner_[x] != y)
                throw InvalidGraph("pairing non-involution at " + str(x));
            partner_[x] = y;
        }
    }
    check_pairing(partner_);
    build_index();
}

RibbonGraph RibbonGraph::from_pairing(std::vector<std::vector<Dart>> rotations, std::vector<Dart> partner) {
    check_rotations(rotations, static_cast<int>(partner.size()));
    check_pairing(partner);
    std::vector<std::array<Dart, 2>> edges;
    for (Dart d = 0; d < static_cast<int>(partner.size()); ++d)
        if (d < partner[d]) edges.push_back({d, partner[d]});
    return RibbonGraph(std::move(rotations), std::move(edges));
}

void RibbonGraph::build_index() {
    const int n = num_darts();
    next_.assign(n, -1);
    prev_.assign(n, -1);
    vertex_of_.assign(n, -1);
    position_.assign(n, -1);
    edge_of_.assign(n, -1);
    for (VertexId v = 0; v < num_vertices(); ++v) {
        const auto& rot = rotations_[v];
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            next_[rot[i]] = rot[(i + 1) % k];
            prev_[rot[i]] = rot[(i + k - 1) % k];
            vertex_of_[rot[i]] = v;
            position_[rot[i]] = i;
        }
    }
    for (EdgeId e = 0; e < num_edges(); ++e) {
        edge_of_[edges_[e][0]] = e;
        edge_of_[edges_[e][1]] = e;
    }
}

void RibbonGraph::validate() const {
    check_rotations(rotations_, num_darts());
    check_pairing(partner_);
    for (EdgeId e = 0; e < num_edges(); ++e)
        if (partner_[edges_[e][0]] != edges_[e][1]) throw InvalidGraph("edge " + str(e) + " disagrees with pairing");
}

std::vector<BoundaryWalk> boundary_components(const RibbonGraph& g) {
    const int sides_total = 2 * g.num_darts();
    std::vector<char> visited(sides_total, 0);
    std::vector<BoundaryWalk> walks;
    for (int start = 0; start < sides_total; ++start) {
        if (visited[start]) continue;
        // Every walk is entered at a cw side so it reads corner, ribbon, corner, ...
        // The least side of a walk may be ccw; start from the cw side preceding it.
        DartSide s = DartSide::from_index(start);
        if (s.side == Side::ccw) s = sides::along_ribbon(g, s);
        BoundaryWalk walk;
        DartSide cur = s;
        do {
            walk.push_back(cur);
            visited[cur.index()] = 1;
            const DartSide across = sides::along_ribbon(g, cur);
            walk.push_back(across);
            visited[across.index()] = 1;
            cur = sides::across_corner(g, across);
        } while (!(cur == s));
        // Rotate so the walk begins at its least side.
        auto least = std::min_element(walk.begin(), walk.end(),
                                      [](DartSide a, DartSide b) { return a.index() < b.index(); });
        std::rotate(walk.begin(), least, walk.end());
        walks.push_back(std::move(walk));
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.rotation(v).empty()) walks.emplace_back();
    return walks;
}

std::vector<int> face_of_side(const RibbonGraph& g) {
    std::vector<int> face(2 * g.num_darts(), -1);
    const auto walks = boundary_components(g);
    for (int i = 0; i < static_cast<int>(walks.size()); ++i)
        for (DartSide s : walks[i]) face[s.index()] = i;
    return face;
}

namespace {

template <class Step>
int count_orbits(int n, Step step) {
    std::vector<char> seen(n, 0);
    int orbits = 0;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++orbits;
        for (int x = d; !seen[x]; x = step(x)) seen[x] = 1;
    }
    return orbits;
}

int isolated_count(const RibbonGraph& g) {
    int c = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) c += g.rotation(v).empty() ? 1 : 0;
    return c;
}

}  // namespace

int face_count_cross_then_rotate(const RibbonGraph& g) {
    return count_orbits(g.num_darts(), [&](Dart d) { return g.next(g.partner(d)); }) + isolated_count(g);
}

int face_count_rotate_then_cross(const RibbonGraph& g) {
    return count_orbits(g.num_darts(), [&](Dart d) { return g.partner(g.next(d)); }) + isolated_count(g);
}

Components connected_components(const RibbonGraph& g) {
    const int nv = g.num_vertices();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : g.edges()) {
        const int ra = find(g.vertex_of(a));
        const int rb = find(g.vertex_of(b));
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    Components c;
    c.of_vertex.assign(nv, -1);
    std::vector<int> label(nv, -1);
    for (int v = 0; v < nv; ++v) {
        const int r = find(v);
        if (label[r] < 0) label[r] = c.count++;
        c.of_vertex[v] = label[r];
    }
    c.of_dart.resize(g.num_darts());
    for (Dart d = 0; d < g.num_darts(); ++d) c.of_dart[d] = c.of_vertex[g.vertex_of(d)];
    return c;
}

bool is_connected(const RibbonGraph& g) { return connected_components(g).count == 1; }

GraphStats stats(const RibbonGraph& g) {
    if (!is_connected(g)) throw InvalidGraph("graph is disconnected; genus is only defined per component");
    GraphStats s;
    s.v = g.num_vertices();
    s.e = g.num_edges();
    s.f = static_cast<int>(boundary_components(g).size());
    s.euler_char = s.v - s.e + s.f;
    s.genus = (2 - s.euler_char) / 2;
    return s;
}

bool is_isomorphic(const RibbonGraph& g, const RibbonGraph& h) {
    if (!is_connected(g) || !is_connected(h)) throw InvalidGraph("isomorphism test needs connected graphs");
    if (g.num_darts() != h.num_darts() || g.num_vertices() != h.num_vertices()) return false;
    const int n = g.num_darts();
    if (n == 0) return true;

    std::vector<Dart> fwd(n), bwd(n);
    std::vector<Dart> queue;
    queue.reserve(n);
    for (Dart seed = 0; seed < n; ++seed) {
        std::fill(fwd.begin(), fwd.end(), -1);
        std::fill(bwd.begin(), bwd.end(), -1);
        queue.clear();
        fwd[0] = seed;
        bwd[seed] = 0;
        queue.push_back(0);
        bool ok = true;
        for (std::size_t head = 0; ok && head < queue.size(); ++head) {
            const Dart x = queue[head];
            const Dart y = fwd[x];
            for (auto [gx, hy] : {std::pair{g.next(x), h.next(y)}, std::pair{g.partner(x), h.partner(y)}}) {
                if (fwd[gx] == -1 && bwd[hy] == -1) {
                    fwd[gx] = hy;
                    bwd[hy] = gx;
                    queue.push_back(gx);
                } else if (fwd[gx] != hy || bwd[hy] != gx) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

RibbonGraph join(const RibbonGraph& g1, VertexId v1, int arc1, const RibbonGraph& g2, VertexId v2, int arc2) {
    auto check = [](const RibbonGraph& g, VertexId v, int arc, const char* which) {
        if (v < 0 || v >= g.num_vertices())
            throw std::out_of_range(std::string("join: vertex out of range for ") + which);
        const int corners = std::max<int>(1, static_cast<int>(g.rotation(v).size()));
        if (arc < 0 || arc >= corners)
            throw std::out_of_range(std::string("join: corner index out of range for ") + which);
    };
    check(g1, v1, arc1, "first graph");
    check(g2, v2, arc2, "second graph");

    const int shift = g1.num_darts();
    auto opened = [](std::span<const Dart> rot, int arc, int offset) {
        std::vector<Dart> out;
        out.reserve(rot.size());
        for (std::size_t i = 0; i < rot.size(); ++i) out.push_back(rot[(arc + i) % rot.size()] + offset);
        return out;
    };

    std::vector<std::vector<Dart>> rotations = g1.rotations();
    auto merged = opened(g1.rotation(v1), arc1, 0);
    auto tail = opened(g2.rotation(v2), arc2, shift);
    merged.insert(merged.end(), tail.begin(), tail.end());
    rotations[v1] = std::move(merged);
    for (VertexId v = 0; v < g2.num_vertices(); ++v) {
        if (v == v2) continue;
        rotations.push_back(opened(g2.rotation(v), 0, shift));
    }
    std::vector<std::array<Dart, 2>> edges = g1.edges();
    for (const auto& [a, b] : g2.edges()) edges.push_back({a + shift, b + shift});
    return RibbonGraph(std::move(rotations), std::move(edges));
}

RibbonGraph relabel_darts(const RibbonGraph& g, std::span<const Dart> perm) {
    if (static_cast<int>(perm.size()) != g.num_darts()) throw InvalidGraph("relabel: permutation size mismatch");
    std::vector<std::vector<Dart>> rotations = g.rotations();
    for (auto& rot : rotations)
        for (auto& d : rot) d = perm[d];
    std::vector<std::array<Dart, 2>> edges = g.edges();
    for (auto& [a, b] : edges) {
        a = perm[a];
        b = perm[b];
    }
    return RibbonGraph(std::move(rotations), std::move(edges));
}

RibbonGraph canonical_dart_order(const RibbonGraph& g) {
    std::vector<Dart> perm(g.num_darts());
    Dart next_id = 0;
    for (const auto& rot : g.rotations())
        for (Dart d : rot) perm[d] = next_id++;
    auto out = relabel_darts(g, perm);
    auto edges = out.edges();
    for (auto& e : edges)
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    return RibbonGraph(out.rotations(), std::move(edges));
}

RibbonGraph bouquet_bn(int n) {
    if (n < 1) throw std::invalid_argument("bouquet_bn: n must be at least 1");
    std::vector<Dart> rot(2 * n);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<std::array<Dart, 2>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
    return RibbonGraph({rot}, std::move(edges));
}

RibbonGraph tree_path(int n) {
    if (n < 1) throw std::invalid_argument("tree_path: n must be at least 1");
    // Edge i runs from vertex i (dart 2i) to vertex i+1 (dart 2i+1).
    std::vector<std::vector<Dart>> rotations(n + 1);
    std::vector<std::array<Dart, 2>> edges;
    for (int i = 0; i < n; ++i) {
        rotations[i].push_back(2 * i);
        rotations[i + 1].push_back(2 * i + 1);
        edges.push_back({2 * i, 2 * i + 1});
    }
    return RibbonGraph(std::move(rotations), std::move(edges));
}

RibbonGraph tree_star(int n) {
    if (n < 1) throw std::invalid_argument("tree_star: n must be at least 1");
    std::vector<std::vector<Dart>> rotations(n + 1);
    std::vector<std::array<Dart, 2>> edges;
    for (int i = 0; i < n; ++i) {
        rotations[0].push_back(2 * i);
        rotations[i + 1].push_back(2 * i + 1);
        edges.push_back({2 * i, 2 * i + 1});
    }
    return RibbonGraph(std::move(rotations), std::move(edges));
}

RibbonGraph dipole_opposite(int n) {
    if (n < 1) throw std::invalid_argument("dipole_opposite: n must be at least 1");
    // Both vertices list the edges in the same cyclic order. Seen on one side
    // of the plane, the second vertex then turns the opposite way to the first;
    // the plane dipole would list them reversed.
    std::vector<std::vector<Dart>> rotations(2);
    std::vector<std::array<Dart, 2>> edges;
    for (int i = 0; i < n; ++i) {
        rotations[0].push_back(2 * i);
        rotations[1].push_back(2 * i + 1);
        edges.push_back({2 * i, 2 * i + 1});
    }
    return RibbonGraph(std::move(rotations), std::move(edges));
}

RibbonGraph isolated_vertex() { return RibbonGraph({{}}, {}); }

}  // namespace rgpd
