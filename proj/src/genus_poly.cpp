#include "rgpd/genus_poly.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "rgpd/kernels.hpp"

namespace rgpd {

GenusPolynomial::GenusPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GenusPolynomial GenusPolynomial::monomial(std::uint64_t c, int degree) {
    std::vector<std::uint64_t> v(degree + 1, 0);
    v[degree] = c;
    return GenusPolynomial(std::move(v));
}

std::uint64_t GenusPolynomial::total() const {
    std::uint64_t sum = 0;
    for (auto c : coeffs_)
        if (__builtin_add_overflow(sum, c, &sum)) throw std::overflow_error("coefficient sum overflows 64 bits");
    return sum;
}

GenusPolynomial gamma(const RibbonGraph& g, int workers) {
    return GenusPolynomial(workers > 1 ? kernels::gamma_parallel(g, workers) : kernels::gamma_serial(g));
}

bool is_monomial(const GenusPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_monomial: zero polynomial");
    int nonzero = 0;
    for (auto c : p.coeffs()) nonzero += c != 0 ? 1 : 0;
    return nonzero == 1;
}

bool is_log_concave(const GenusPolynomial& p) {
    const auto& c = p.coeffs();
    const int n = static_cast<int>(c.size());
    int lo = 0;
    while (lo < n && c[lo] == 0) ++lo;
    for (int k = lo; k < n; ++k)
        if (c[k] == 0) return false;  // internal zero; trailing zeros are trimmed
    for (int k = 1; k + 1 < n; ++k) {
        const unsigned __int128 mid = static_cast<unsigned __int128>(c[k]) * c[k];
        const unsigned __int128 side = static_cast<unsigned __int128>(c[k - 1]) * c[k + 1];
        if (mid < side) return false;
    }
    return true;
}

GenusPolynomial poly_mul(const GenusPolynomial& p, const GenusPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<std::uint64_t> out(p.coeffs().size() + q.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
            std::uint64_t term = 0;
            if (__builtin_mul_overflow(p.coeffs()[i], q.coeffs()[j], &term) ||
                __builtin_add_overflow(out[i + j], term, &out[i + j]))
                throw std::overflow_error("polynomial product overflows 64-bit coefficients");
        }
    }
    return GenusPolynomial(std::move(out));
}

std::string format_poly(const GenusPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(p[k]);
        if (k == 1) out += "*z";
        else if (k > 1) out += "*z^" + std::to_string(k);
    }
    return out;
}

GenusPolynomial parse_poly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    std::vector<std::uint64_t> coeffs;
    auto bad = [&](const std::string& why) { return std::invalid_argument("bad polynomial '" + s + "': " + why); };
    std::size_t i = 0;
    while (i < s.size()) {
        std::uint64_t c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), c);
            if (ec != std::errc()) throw bad("coefficient out of range");
            i = static_cast<std::size_t>(ptr - s.data());
            have_coeff = true;
        }
        int k = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
            if (s[i] == '*') {
                if (!have_coeff) throw bad("'*' without coefficient");
                ++i;
            }
            if (i >= s.size() || s[i] != 'z') throw bad("expected 'z'");
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), k);
                if (ec != std::errc() || k < 0 || k > 64) throw bad("bad exponent");
                i = static_cast<std::size_t>(ptr - s.data());
            }
        } else if (!have_coeff) {
            throw bad("expected a term");
        }
        if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, 0);
        if (__builtin_add_overflow(coeffs[k], c, &coeffs[k])) throw bad("coefficient overflow");
        if (i < s.size()) {
            if (s[i] != '+') throw bad("expected '+'");
            ++i;
            if (i == s.size()) throw bad("trailing '+'");
        }
    }
    return GenusPolynomial(std::move(coeffs));
}

}  // namespace rgpd
