#pragma once

// Subset-enumeration kernels behind gamma(). The serial kernel is the
// reference; the OpenMP kernel splits the subset range into fixed blocks by
// the high bits of the mask and sums the per-block histograms in block order,
// so its result does not depend on the thread count.

#include <cstdint>
#include <vector>

#include "rgpd/ribbon_graph.hpp"

namespace rgpd::kernels {

/// Flat copies of the permutations a subset sweep needs.
struct DualSweep {
    int m = 0;
    std::vector<int> next;     // rotation successor
    std::vector<int> partner;  // edge pairing
    std::vector<int> edge;     // edge of each dart

    explicit DualSweep(const RibbonGraph& g);

    /// Vertex count of G^A: cycles of next∘(pairing restricted to A).
    int vertices(std::uint64_t mask, std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) const;
    /// Genus of G^A. Faces of G^A are the vertices of G^(E\A).
    int genus(std::uint64_t mask, std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) const;
};

/// Histogram of genus over subsets in [first, last).
void genus_histogram(const DualSweep& sweep, std::uint64_t first, std::uint64_t last,
                     std::vector<std::uint64_t>& hist);

std::vector<std::uint64_t> gamma_serial(const RibbonGraph& g);
std::vector<std::uint64_t> gamma_parallel(const RibbonGraph& g, int workers);

}  // namespace rgpd::kernels
