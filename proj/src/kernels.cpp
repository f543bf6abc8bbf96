#include "rgpd/kernels.hpp"

#include <omp.h>

#include <stdexcept>

#include "rgpd/genus_poly.hpp"

namespace rgpd::kernels {

DualSweep::DualSweep(const RibbonGraph& g)
    : m(g.num_edges()), next(g.num_darts()), partner(g.num_darts()), edge(g.num_darts()) {
    for (Dart d = 0; d < g.num_darts(); ++d) {
        next[d] = g.next(d);
        partner[d] = g.partner(d);
        edge[d] = g.edge_of(d);
    }
}

int DualSweep::vertices(std::uint64_t mask, std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) const {
    const int n = static_cast<int>(next.size());
    if (++epoch == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        epoch = 1;
    }
    int cycles = 0;
    for (int d = 0; d < n; ++d) {
        if (stamp[d] == epoch) continue;
        ++cycles;
        for (int x = d; stamp[x] != epoch;) {
            stamp[x] = epoch;
            x = next[(mask >> edge[x] & 1U) ? partner[x] : x];
        }
    }
    return cycles;
}

int DualSweep::genus(std::uint64_t mask, std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) const {
    const std::uint64_t full = m == 64 ? ~0ULL : (1ULL << m) - 1;
    const int v = vertices(mask, stamp, epoch);
    const int f = vertices(~mask & full, stamp, epoch);
    return (2 - v + m - f) / 2;
}

void genus_histogram(const DualSweep& sweep, std::uint64_t first, std::uint64_t last,
                     std::vector<std::uint64_t>& hist) {
    std::vector<std::uint32_t> stamp(sweep.next.size(), 0);
    std::uint32_t epoch = 0;
    for (std::uint64_t mask = first; mask < last; ++mask) ++hist[sweep.genus(mask, stamp, epoch)];
}

namespace {

void check_input(const RibbonGraph& g) {
    if (!is_connected(g)) throw InvalidGraph("gamma needs a connected graph");
    if (g.num_edges() > kMaxGammaEdges)
        throw std::invalid_argument("gamma supports at most " + std::to_string(kMaxGammaEdges) + " edges");
}

std::size_t hist_size(int m) { return static_cast<std::size_t>(m / 2 + 1); }

}  // namespace

std::vector<std::uint64_t> gamma_serial(const RibbonGraph& g) {
    check_input(g);
    const int m = g.num_edges();
    if (m == 0) return {1};
    DualSweep sweep(g);
    std::vector<std::uint64_t> hist(hist_size(m), 0);
    genus_histogram(sweep, 0, 1ULL << m, hist);
    return hist;
}

std::vector<std::uint64_t> gamma_parallel(const RibbonGraph& g, int workers) {
    check_input(g);
    const int m = g.num_edges();
    if (m == 0) return {1};
    DualSweep sweep(g);

    const int block_bits = m < 10 ? m : 10;
    const std::int64_t blocks = std::int64_t{1} << block_bits;
    const std::uint64_t block_len = 1ULL << (m - block_bits);
    std::vector<std::vector<std::uint64_t>> partial(blocks, std::vector<std::uint64_t>(hist_size(m), 0));

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers > 0 ? workers : 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::uint64_t first = static_cast<std::uint64_t>(b) * block_len;
        genus_histogram(sweep, first, first + block_len, partial[b]);
    }

    std::vector<std::uint64_t> hist(hist_size(m), 0);
    for (const auto& p : partial)
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += p[k];
    return hist;
}

}  // namespace rgpd::kernels
