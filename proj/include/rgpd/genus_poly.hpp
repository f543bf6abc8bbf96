#pragma once

// The partial-dual genus polynomial: coefficient k counts the edge subsets A
// whose partial dual G^A has genus k.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rgpd/ribbon_graph.hpp"

namespace rgpd {

class GenusPolynomial {
public:
    GenusPolynomial() = default;
    /// Trailing zero coefficients are trimmed.
    explicit GenusPolynomial(std::vector<std::uint64_t> coeffs);

    static GenusPolynomial monomial(std::uint64_t c, int degree);

    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    std::uint64_t operator[](int k) const { return k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Sum of coefficients; throws std::overflow_error if it does not fit.
    std::uint64_t total() const;

    friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;

private:
    std::vector<std::uint64_t> coeffs_;
};

inline constexpr int kMaxGammaEdges = 62;

/// Enumerates all 2^m subsets. workers > 1 uses the OpenMP kernel.
GenusPolynomial gamma(const RibbonGraph& g, int workers = 1);

/// Throws std::invalid_argument on the zero polynomial.
bool is_monomial(const GenusPolynomial& p);
/// c[k]^2 >= c[k-1] c[k+1] everywhere and no internal zeros.
bool is_log_concave(const GenusPolynomial& p);

/// Exact product; throws std::overflow_error instead of wrapping.
GenusPolynomial poly_mul(const GenusPolynomial& p, const GenusPolynomial& q);
inline bool poly_eq(const GenusPolynomial& p, const GenusPolynomial& q) { return p == q; }

/// "c0 + c1*z + c2*z^2", zero terms omitted, "0" for the zero polynomial.
std::string format_poly(const GenusPolynomial& p);
GenusPolynomial parse_poly(std::string_view text);

}  // namespace rgpd
