#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "orthant/squarefree.hpp"
#include "orthant/unipoly.hpp"

namespace orthant {

inline constexpr std::uint64_t kDefaultSeed = 42;

namespace detail {

inline UniPoly<Fp> random_unipoly(std::int64_t max_deg, const FpCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, ctx.p - 1);
    std::vector<Fp> c;
    c.reserve(static_cast<std::size_t>(max_deg));
    for (std::int64_t i = 0; i < max_deg; ++i) c.emplace_back(dist(rng), ctx.p);
    return UniPoly<Fp>(ctx, std::move(c));
}

/// Distinct-degree factorization of a squarefree monic f: list of
/// (product of irreducible factors of degree d, d).
inline std::vector<std::pair<UniPoly<Fp>, std::int64_t>> ddf(const UniPoly<Fp>& f) {
    const FpCtx ctx = f.ctx();
    const std::uint64_t p = ctx.p;
    std::vector<std::pair<UniPoly<Fp>, std::int64_t>> out;
    UniPoly<Fp> h = UniPoly<Fp>::variable(ctx);  // T^(p^d) mod f*, maintained
    UniPoly<Fp> fstar = f;
    for (std::int64_t d = 1; fstar.degree() >= 2 * d; ++d) {
        h = pow_mod(h, mpz_class(static_cast<unsigned long>(p)), fstar);
        auto g = gcd(h - UniPoly<Fp>::variable(ctx), fstar);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            fstar = exact_div(fstar, g);
            if (fstar.degree() == 0) break;
            h = h % fstar;
        }
    }
    if (fstar.degree() > 0) out.emplace_back(fstar, fstar.degree());
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting: f is a squarefree product of
/// irreducibles all of degree d.
inline void edf(const UniPoly<Fp>& f, std::int64_t d, std::mt19937_64& rng,
                std::vector<UniPoly<Fp>>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FpCtx ctx = f.ctx();
    const std::uint64_t p = ctx.p;
    while (true) {
        auto r = random_unipoly(f.degree(), ctx, rng);
        if (r.is_zero() || r.is_constant()) continue;
        UniPoly<Fp> g(ctx);
        if (p == 2) {
            // trace map: r + r^2 + r^4 + ... accumulated by g <- g^2 + r
            g = r % f;
            for (std::int64_t i = 1; i < d; ++i) g = (g * g + r) % f;
            g = gcd(g, f);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            auto rp = pow_mod(r, e, f);
            g = gcd(rp - UniPoly<Fp>::constant(ctx, Fp(1, p)), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g.monic(), d, rng, out);
            edf(exact_div(f, g.monic()).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Full factorization of a monic nonconstant f over F_p into monic irreducible
/// factors with multiplicities. Deterministic for a fixed seed; the factor
/// list is sorted canonically.
inline std::vector<std::pair<UniPoly<Fp>, std::int64_t>> factor_fp(
    const UniPoly<Fp>& f, std::uint64_t seed = kDefaultSeed) {
    assert(f.is_monic() && f.degree() >= 1);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<UniPoly<Fp>, std::int64_t>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [block, d] : detail::ddf(part)) {
            std::vector<UniPoly<Fp>> irred;
            detail::edf(block, d, rng, irred);
            for (auto& phi : irred) out.emplace_back(std::move(phi), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (canonical_less(a.first, b.first)) return true;
        if (canonical_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

/// Distinct-degree irreducibility sieve for monic phi of degree k:
/// T^(p^k) == T mod phi, and gcd(T^(p^(k/l)) - T, phi) = 1 for every prime l | k.
inline bool is_irreducible_fp(const UniPoly<Fp>& phi) {
    assert(phi.is_monic() && phi.degree() >= 1);
    const FpCtx ctx = phi.ctx();
    const std::int64_t k = phi.degree();
    if (k == 1) return true;
    const auto T = UniPoly<Fp>::variable(ctx);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ctx.p), static_cast<unsigned long>(k));
    if (!((pow_mod(T, pk, phi) - T) % phi).is_zero()) return false;
    std::vector<std::int64_t> prime_divs;
    std::int64_t rem = k;
    for (std::int64_t l = 2; l * l <= rem; ++l) {
        if (rem % l == 0) {
            prime_divs.push_back(l);
            while (rem % l == 0) rem /= l;
        }
    }
    if (rem > 1) prime_divs.push_back(rem);
    for (std::int64_t l : prime_divs) {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                      static_cast<unsigned long>(k / l));
        if (gcd(pow_mod(T, e, phi) - T, phi).degree() != 0) return false;
    }
    return true;
}

}  // namespace orthant
