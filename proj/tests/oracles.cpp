#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "rgpd/partial_dual.hpp"

namespace oracle {

std::vector<Matching> all_matchings(int n) {
    std::vector<Matching> out;
    std::vector<char> used(2 * n, 0);
    Matching cur;
    auto rec = [&](auto&& self) -> void {
        int first = 0;
        while (first < 2 * n && used[first]) ++first;
        if (first == 2 * n) {
            auto m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        used[first] = 1;
        for (int other = first + 1; other < 2 * n; ++other) {
            if (used[other]) continue;
            used[other] = 1;
            cur.emplace_back(first, other);
            self(self);
            cur.pop_back();
            used[other] = 0;
        }
        used[first] = 0;
    };
    rec(rec);
    return out;
}

Matching transform(const Matching& m, int points, int shift, bool mirror) {
    Matching out;
    for (auto [a, b] : m) {
        int x = mirror ? points - 1 - a : a;
        int y = mirror ? points - 1 - b : b;
        x = (x + shift) % points;
        y = (y + shift) % points;
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matching> dedup_orbits(const std::vector<Matching>& all, int points, bool reflection) {
    std::set<Matching> marked;
    std::vector<Matching> reps;
    for (const auto& m : all) {
        if (marked.count(m)) continue;
        reps.push_back(m);
        for (int mirror = 0; mirror <= (reflection ? 1 : 0); ++mirror)
            for (int s = 0; s < points; ++s) marked.insert(transform(m, points, s, mirror != 0));
    }
    return reps;
}

Matching to_matching(const rgpd::ChordDiagram& d) {
    Matching m;
    for (int c = 0; c < d.num_chords(); ++c) m.push_back(d.ends(c));
    std::sort(m.begin(), m.end());
    return m;
}

bool crosses(std::pair<int, int> a, std::pair<int, int> b) {
    std::vector<std::pair<int, char>> pts{{a.first, 'a'}, {a.second, 'a'}, {b.first, 'b'}, {b.second, 'b'}};
    std::sort(pts.begin(), pts.end());
    return pts[0].second != pts[1].second && pts[1].second != pts[2].second && pts[2].second != pts[3].second;
}

bool splits_into_closed_subwords(const rgpd::ChordDiagram& d) {
    const auto& w = d.word();
    const int len = d.length();
    for (int r = 0; r < len; ++r) {
        std::vector<int> count(d.num_chords(), 0);
        int half_open = 0;
        for (int k = 0; k + 1 < len; ++k) {
            const int c = w[(r + k) % len];
            half_open += ++count[c] == 1 ? 1 : -1;
            if (half_open == 0) return true;
        }
    }
    return false;
}

rgpd::GenusPolynomial gamma_reference(const rgpd::RibbonGraph& g) {
    const int m = g.num_edges();
    std::vector<std::uint64_t> c(m + 1, 0);
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        const auto a = rgpd::edges_in_mask(mask, m);
        ++c[rgpd::stats(rgpd::partial_dual_reference(g, a)).genus];
    }
    return rgpd::GenusPolynomial(std::move(c));
}

namespace {

int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 0; bit < 64 && !rows.empty(); ++bit) {
        auto pivot = std::find_if(rows.begin(), rows.end(), [&](std::uint64_t r) { return r >> bit & 1U; });
        if (pivot == rows.end()) continue;
        const std::uint64_t p = *pivot;
        rows.erase(pivot);
        for (auto& r : rows)
            if (r >> bit & 1U) r ^= p;
        ++rank;
    }
    return rank;
}

int principal_rank(const std::vector<std::vector<int>>& adj, std::uint64_t mask) {
    std::vector<std::uint64_t> rows;
    const int n = static_cast<int>(adj.size());
    for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1U)) continue;
        std::uint64_t r = 0;
        for (int j = 0; j < n; ++j)
            if ((mask >> j & 1U) && adj[i][j]) r |= 1ULL << j;
        rows.push_back(r);
    }
    return gf2_rank(rows);
}

}  // namespace

rgpd::GenusPolynomial gamma_interlace_rank(const rgpd::ChordDiagram& d) {
    const int n = d.num_chords();
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && crosses(d.ends(a), d.ends(b))) adj[a][b] = 1;
    std::vector<std::uint64_t> c(n + 1, 0);
    const std::uint64_t full = (1ULL << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        const int twice_genus = principal_rank(adj, mask) + principal_rank(adj, full & ~mask);
        ++c[twice_genus / 2];
    }
    return rgpd::GenusPolynomial(std::move(c));
}

std::uint64_t seed() {
    if (const char* s = std::getenv("RGPD_SEED")) return std::strtoull(s, nullptr, 10);
    return 20201015ULL;
}

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 1000003ULL + salt); }

rgpd::ChordDiagram random_diagram(std::mt19937_64& gen, int n) {
    std::vector<int> word;
    for (int c = 0; c < n; ++c) word.insert(word.end(), {c, c});
    std::shuffle(word.begin(), word.end(), gen);
    return rgpd::ChordDiagram(std::move(word));
}

rgpd::RibbonGraph random_connected_graph(std::mt19937_64& gen, int vertices, int edges) {
    std::vector<std::vector<rgpd::Dart>> rot(vertices);
    std::vector<std::array<rgpd::Dart, 2>> pairs;
    auto place = [&](int v, rgpd::Dart d) {
        std::uniform_int_distribution<std::size_t> at(0, rot[v].size());
        rot[v].insert(rot[v].begin() + static_cast<std::ptrdiff_t>(at(gen)), d);
    };
    auto add_edge = [&](int u, int v) {
        const rgpd::Dart a = 2 * static_cast<int>(pairs.size());
        place(u, a);
        place(v, a + 1);
        pairs.push_back({a, a + 1});
    };
    for (int v = 1; v < vertices; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        add_edge(parent(gen), v);
    }
    std::uniform_int_distribution<int> any(0, vertices - 1);
    while (static_cast<int>(pairs.size()) < edges) add_edge(any(gen), any(gen));
    return rgpd::RibbonGraph(std::move(rot), std::move(pairs));
}

rgpd::RibbonGraph shuffle_darts(std::mt19937_64& gen, const rgpd::RibbonGraph& g) {
    std::vector<rgpd::Dart> perm(g.num_darts());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    return rgpd::relabel_darts(g, perm);
}

std::vector<rgpd::RibbonGraph> fixtures(int max_chords) {
    using namespace rgpd;
    std::vector<RibbonGraph> out;
    for (int n = 1; n <= 5; ++n) out.push_back(bouquet_bn(n));
    for (int n = 1; n <= 4; ++n) {
        out.push_back(tree_path(n));
        out.push_back(tree_star(n));
        out.push_back(dipole_opposite(n));
    }
    out.push_back(to_ribbon_graph(parse_word("BABCAC")));
    for (int n = 1; n <= max_chords; ++n)
        for (const auto& m : dedup_orbits(all_matchings(n), 2 * n, false))
            out.push_back(to_ribbon_graph(from_matching(n, m)));
    return out;
}

}  // namespace oracle
