#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "orthant/parser.hpp"
#include "orthant/polyhedron.hpp"
#include "orthant/zpoly.hpp"

namespace testutil {

using namespace orthant;

inline ZPoly<Rat> zq(const std::string& text, std::vector<std::string> vars = {}) {
    return parse_poly<Rat>(text, RatCtx{}, std::move(vars)).poly;
}

inline ZPoly<Fp> zfp(const std::string& text, std::uint64_t p, std::vector<std::string> vars = {}) {
    return parse_poly<Fp>(text, FpCtx{p}, std::move(vars)).poly;
}

inline XPoly<Rat> xq(const std::string& text, std::vector<std::string> vars) {
    // reuse the Z-poly parser with a dummy Z^1 head
    auto z = parse_poly<Rat>("Z + (" + text + ")", RatCtx{}, std::move(vars)).poly;
    return z.coeff(0);
}

inline XPoly<Fp> xfp(const std::string& text, std::uint64_t p, std::vector<std::string> vars) {
    auto z = parse_poly<Fp>("Z + (" + text + ")", FpCtx{p}, std::move(vars)).poly;
    return z.coeff(0);
}

inline UniPoly<Rat> uq(std::vector<std::int64_t> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.emplace_back(v);
    return UniPoly<Rat>(RatCtx{}, std::move(c));
}

inline UniPoly<Fp> ufp(std::vector<std::int64_t> coeffs, std::uint64_t p) {
    std::vector<Fp> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(Fp::from_int(FpCtx{p}, v));
    return UniPoly<Fp>(FpCtx{p}, std::move(c));
}

inline UniPoly<Fp> random_monic_fp(std::mt19937_64& rng, std::uint64_t p, std::int64_t deg) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<Fp> c;
    for (std::int64_t i = 0; i < deg; ++i) c.emplace_back(dist(rng), p);
    c.emplace_back(1, p);
    return UniPoly<Fp>(FpCtx{p}, std::move(c));
}

inline UniPoly<Rat> random_monic_rat(std::mt19937_64& rng, std::int64_t deg) {
    std::uniform_int_distribution<std::int64_t> num(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    std::vector<Rat> c;
    for (std::int64_t i = 0; i < deg; ++i) c.emplace_back(num(rng), den(rng));
    c.emplace_back(1);
    return UniPoly<Rat>(RatCtx{}, std::move(c));
}

/// Random monic ZPoly over F_p with a sparse support, never a pure power of Z.
inline ZPoly<Fp> random_zpoly_fp(std::mt19937_64& rng, std::uint64_t p, std::size_t n,
                                 std::int64_t d, std::int64_t trunc, int terms_per_coeff = 3) {
    const FpCtx ctx{p};
    std::uniform_int_distribution<std::uint64_t> cdist(1, p - 1);
    std::uniform_int_distribution<std::int64_t> edist(0, trunc - 1);
    std::uniform_int_distribution<int> count(0, terms_per_coeff);
    while (true) {
        std::vector<XPoly<Fp>> lower;
        bool nonzero = false;
        for (std::int64_t j = 0; j < d; ++j) {
            std::vector<XPoly<Fp>::Term> ts;
            const int m = count(rng);
            for (int t = 0; t < m; ++t) {
                std::vector<std::int64_t> e(n);
                std::int64_t total = 0;
                for (auto& x : e) {
                    x = edist(rng);
                    total += x;
                }
                if (total >= trunc || (total == 0 && j == 0)) continue;  // keep Z-adic val visible
                ts.emplace_back(ExpVec(std::move(e)), Fp(cdist(rng), p));
            }
            auto c = XPoly<Fp>::from_terms(n, ctx, std::move(ts));
            nonzero |= !c.is_zero();
            lower.push_back(std::move(c));
        }
        if (!nonzero) continue;
        return ZPoly<Fp>(n, ctx, std::move(lower), trunc);
    }
}

inline RatPoint random_ratpoint(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> num(0, 12);
    std::uniform_int_distribution<std::int64_t> den(1, 3);
    std::vector<Rat> c;
    for (std::size_t i = 0; i < n; ++i) c.emplace_back(num(rng), den(rng));
    return RatPoint{std::move(c)};
}

/// Named corpus used by the property and acceptance suites.
struct CorpusEntry {
    std::string name;
    std::string text;
    std::vector<std::string> vars;
};

inline const std::vector<CorpusEntry>& corpus_q() {
    static const std::vector<CorpusEntry> c = {
        {"two_vertex_surface", "Z^2 - (x^3 - y^5)^2 + y^11", {"x", "y"}},
        {"cusp", "Z^2 - x^3", {"x"}},
        {"surface_cusp", "Z^2 - x^3*y", {"x", "y"}},
        {"split_quadric", "Z^2 - x^2*(1 + x)", {"x"}},
        {"shifted_square", "Z^2 + 2*x^3*Z + x^6 - x^7", {"x"}},
        {"two_vertex_cubic", "Z^3 - x^2*Z - y^2", {"x", "y"}},
        {"z_multiple_cubic", "Z^3 + x^2*Z^2 + x^4*Z", {"x"}},
        {"z_factor", "Z^2 + x^3*Z", {"x"}},
        {"lattice_quartic", "Z^4 - 5*x^3*Z^2 + 4*x^6", {"x"}},
        {"lattice_quartic_tail", "Z^4 - 5*x^3*Z^2 + 4*x^6 + x^8", {"x"}},
        {"classical_hensel", "Z^2 - 1 - x", {"x"}},
        {"even_reducible", "Z^2 - x^6*(1 + y)", {"x", "y"}},
        {"mixed_cubic", "Z^3 - x*y*Z + x^3", {"x", "y"}},
        {"surface_split", "Z^2 - x^2*y^2*(1 + x + y)", {"x", "y"}},
        {"quintic_roots", "Z^5 - x^5*(1 + x)", {"x"}},
        {"cyclotomic_face", "Z^4 + x*Z^3 + x^2*Z^2 + x^3*Z + x^4", {"x"}},
        {"root_split", "Z^3 - x*Z^2 - 2*x^2*Z + 2*x^3", {"x"}},
        {"biquadratic", "Z^4 - 5*x^2*Z^2 + 6*x^4", {"x"}},
        {"quartic_descend", "Z^4 - x^2", {"x"}},
        {"three_vars", "Z^2 - x*y*w^2 - x^3", {"x", "y", "w"}},
    };
    return c;
}

inline const std::vector<CorpusEntry>& corpus_fp5() {
    static const std::vector<CorpusEntry> c = {
        {"cusp_f5", "Z^2 - x^3", {"x"}},
        {"classical_hensel_f5", "Z^2 - 1 - x", {"x"}},
        {"perfect_square_f5", "Z^2 + 3*x*Z + x^2", {"x"}},
        {"eisenstein_f5", "Z^3 - x*Z - x", {"x"}},
        {"surface_cusp_f5", "Z^2 - x^3*y", {"x", "y"}},
    };
    return c;
}

}  // namespace testutil
