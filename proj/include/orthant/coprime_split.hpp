#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "orthant/factor_fp.hpp"
#include "orthant/factor_rational.hpp"
#include "orthant/squarefree.hpp"

namespace orthant {

struct SplitOptions {
    std::int64_t degree_bound = 8;      // Q only: squarefree degrees beyond this fail loudly
    std::uint64_t seed = kDefaultSeed;  // F_p only: equal-degree splitting
};

/// Result of the coprime-splittability decision for a monic univariate f:
/// either a nontrivial factorization f = f1*f2 with gcd(f1,f2) = 1, or the
/// certified power form f = phi^r (phi monic, no coprime split exists).
template <Field K>
struct SplitResult {
    std::optional<std::pair<UniPoly<K>, UniPoly<K>>> split;
    UniPoly<K> phi;
    std::int64_t multiplicity = 0;
};

/// Decides whether monic f (degree >= 1) is a product of two coprime monic
/// nonconstant polynomials. Over F_p this is read off the full factorization.
/// Over Q: squarefree decomposition, then rational-root extraction, then
/// bounded Zassenhaus factorization of the squarefree part; degrees beyond
/// options.degree_bound throw DegreeBoundExceeded instead of guessing.
inline SplitResult<Fp> coprime_split(const UniPoly<Fp>& f, const SplitOptions& options = {}) {
    assert(f.is_monic() && f.degree() >= 1);
    auto factors = factor_fp(f, options.seed);
    if (factors.size() == 1) return {std::nullopt, factors[0].first, factors[0].second};
    UniPoly<Fp> f1 = factors[0].first;
    for (std::int64_t i = 1; i < factors[0].second; ++i) f1 = f1 * factors[0].first;
    return {std::make_pair(f1, exact_div(f, f1)), UniPoly<Fp>(f.ctx()), 0};
}

inline SplitResult<Rat> coprime_split(const UniPoly<Rat>& f, const SplitOptions& options = {}) {
    assert(f.is_monic() && f.degree() >= 1);
    const RatCtx ctx;
    auto parts = squarefree_decomposition(f);
    if (parts.size() >= 2) {
        UniPoly<Rat> f1 = UniPoly<Rat>::constant(ctx, Rat(1));
        for (std::int64_t i = 0; i < parts[0].second; ++i) f1 = f1 * parts[0].first;
        return {std::make_pair(f1, exact_div(f, f1)), UniPoly<Rat>(ctx), 0};
    }
    const auto& g = parts[0].first;  // f = g^r, g monic squarefree
    const std::int64_t r = parts[0].second;
    if (g.degree() == 1) return {std::nullopt, g, r};

    // rational root => linear factor splits off (coprime since g is squarefree)
    if (auto root = rational_root(g)) {
        auto lin = UniPoly<Rat>(ctx, {-*root, Rat(1)});
        UniPoly<Rat> f1 = UniPoly<Rat>::constant(ctx, Rat(1));
        UniPoly<Rat> f2 = UniPoly<Rat>::constant(ctx, Rat(1));
        auto rest = exact_div(g, lin);
        for (std::int64_t i = 0; i < r; ++i) {
            f1 = f1 * lin;
            f2 = f2 * rest;
        }
        return {std::make_pair(f1, f2), UniPoly<Rat>(ctx), 0};
    }

    if (g.degree() > options.degree_bound) throw DegreeBoundExceeded(g.degree(), options.degree_bound);

    if (auto h = rational_factor_squarefree(g)) {
        UniPoly<Rat> f1 = UniPoly<Rat>::constant(ctx, Rat(1));
        UniPoly<Rat> f2 = UniPoly<Rat>::constant(ctx, Rat(1));
        auto rest = exact_div(g, *h);
        for (std::int64_t i = 0; i < r; ++i) {
            f1 = f1 * *h;
            f2 = f2 * rest;
        }
        return {std::make_pair(f1, f2), UniPoly<Rat>(ctx), 0};
    }
    return {std::nullopt, g, r};
}

}  // namespace orthant
