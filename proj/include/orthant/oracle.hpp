#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "orthant/fp.hpp"
#include "orthant/zpoly.hpp"

namespace orthant {

namespace detail {

inline bool coeff_sqrt(const Rat& c, const RatCtx&, Rat& out) {
    if (c.sign() < 0) return false;
    mpz_class num = c.num(), den = c.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(mpq_class(rn, rd));
    return true;
}

inline bool coeff_sqrt(const Fp& c, const FpCtx&, Fp& out) { return fp_sqrt(c, out); }

/// Square root of a polynomial by peeling leading terms: unique up to sign,
/// so the greedy reconstruction succeeds exactly when a root exists.
template <Field K>
std::optional<XPoly<K>> poly_sqrt(const XPoly<K>& a) {
    const auto ctx = a.ctx();
    const std::size_t n = a.nvars();
    if (a.is_zero()) return XPoly<K>::zero(n, ctx);
    const auto& [lead_e, lead_c] = a.lead_term();
    std::vector<std::int64_t> half(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (lead_e[i] % 2 != 0) return std::nullopt;
        half[i] = lead_e[i] / 2;
    }
    K root_c = K::zero(ctx);
    if (!coeff_sqrt(lead_c, ctx, root_c)) return std::nullopt;
    XPoly<K> h = XPoly<K>::monomial(n, ctx, ExpVec(std::move(half)), root_c);
    const K two = K::from_int(ctx, 2);
    XPoly<K> rem = a - h * h;
    const auto h_lead = h.lead_term();  // stays the leading term throughout
    while (!rem.is_zero()) {
        const auto& [e, c] = rem.lead_term();
        std::vector<std::int64_t> diff(n);
        for (std::size_t i = 0; i < n; ++i) {
            diff[i] = e[i] - h_lead.first[i];
            if (diff[i] < 0) return std::nullopt;
        }
        ExpVec m{std::move(diff)};
        if (!graded_less(m, h_lead.first)) return std::nullopt;  // correction must shrink
        const K t = c * (two * h_lead.second).inverse();
        auto term = XPoly<K>::monomial(n, ctx, m, t);
        rem = rem - h.scaled(two) * term - term * term;
        h = h + term;
    }
    return h;
}

}  // namespace detail

template <Field K>
struct SeriesSqrtResult {
    std::optional<XPoly<K>> root;          // root^2 == input mod (x)^N when present
    std::int64_t obstruction_degree = -1;  // homogeneous layer that failed
    std::string obstruction;
};

/// Power-series square root by undetermined coefficients, layer by layer:
/// the lowest homogeneous part must be a perfect square, and each subsequent
/// layer solves 2 s_0 s_k = (known part). char != 2.
template <Field K>
SeriesSqrtResult<K> series_sqrt(const XPoly<K>& a, std::int64_t N) {
    const auto ctx = a.ctx();
    if (K::characteristic(ctx) == 2) throw CharacteristicTwo("series_sqrt requires char != 2");
    if (a.truncated(N).is_zero())
        throw DomainError("ZeroSeries", "series_sqrt needs a nonzero input below order N");

    const std::int64_t v = a.truncated(N).low_degree();
    if (v % 2 != 0) {
        return {std::nullopt, v,
                "lowest homogeneous degree " + std::to_string(v) + " is odd"};
    }
    auto s0 = detail::poly_sqrt(a.homogeneous_part(v));
    if (!s0) {
        return {std::nullopt, v,
                "lowest homogeneous part at degree " + std::to_string(v) +
                    " is not a perfect square"};
    }
    XPoly<K> s = *s0;  // homogeneous layers v/2, v/2+1, ...
    const K two = K::from_int(ctx, 2);
    for (std::int64_t k = 1; v + k < N; ++k) {
        // layer v+k of s^2 must match a: 2 s_0 s_k = a_{v+k} - sum_{0<i<k} s_i s_{k-i}
        XPoly<K> rhs = a.homogeneous_part(v + k);
        for (std::int64_t i = 1; i < k; ++i)
            rhs = rhs - s.homogeneous_part(v / 2 + i) * s.homogeneous_part(v / 2 + k - i);
        if (rhs.is_zero()) continue;
        auto sk = rhs.exact_div(s0->scaled(two));
        if (!sk) {
            return {std::nullopt, v + k,
                    "layer " + std::to_string(v + k) + " is not divisible by 2*s_0"};
        }
        s = s + *sk;
    }
    return {s, -1, ""};
}

template <Field K>
struct FactorD2Result {
    std::optional<std::pair<ZPoly<K>, ZPoly<K>>> factors;
    std::string obstruction;
};

/// Independent degree-2 factorization decision: Z^2 + a1 Z + a0 splits in
/// k[[x]][Z] iff the discriminant a1^2 - 4 a0 is a square in k[[x]]; the
/// factors are Z - (-a1 +- s)/2 to order N. char != 2.
template <Field K>
FactorD2Result<K> factor_d2(const ZPoly<K>& P, std::int64_t N) {
    const auto ctx = P.ctx();
    if (K::characteristic(ctx) == 2) throw CharacteristicTwo("factor_d2 requires char != 2");
    if (P.degree() != 2)
        throw DomainError("BadDegree", "factor_d2 handles only degree 2");
    const auto& a1 = P.coeff(1);
    const auto& a0 = P.coeff(0);
    const K four = K::from_int(ctx, 4);
    auto disc = a1 * a1 - a0.scaled(four);
    if (P.trunc()) disc = disc.truncated(*P.trunc());

    XPoly<K> s = XPoly<K>::zero(P.nvars(), ctx);
    std::int64_t factor_order = N;
    if (!disc.truncated(N).is_zero()) {
        // a square root of valuation v/2 is coefficient-complete only to
        // M - v/2, so run the sqrt far enough to fill the factors up to N
        const std::int64_t v = disc.truncated(N).low_degree();
        std::int64_t M = N + v / 2;
        if (P.trunc()) M = std::min(M, *P.trunc());
        auto sq = series_sqrt(disc.truncated(M), M);
        if (!sq.root) return {std::nullopt, sq.obstruction};
        s = *sq.root;
        factor_order = M - v / 2;
    }
    const K inv2 = K::from_int(ctx, 2).inverse();
    auto root1 = (s - a1).scaled(inv2).truncated(factor_order);  // (-a1 + s)/2
    auto root2 = ((-s) - a1).scaled(inv2).truncated(factor_order);
    ZPoly<K> f1(P.nvars(), ctx, {-root1}, factor_order);
    ZPoly<K> f2(P.nvars(), ctx, {-root2}, factor_order);
    return {std::make_pair(std::move(f1), std::move(f2)), ""};
}

}  // namespace orthant
