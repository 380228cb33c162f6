#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "orthant/unipoly.hpp"

namespace orthant {

template <Field K>
using SquarefreePart = std::pair<UniPoly<K>, std::int64_t>;  // (g_i, multiplicity i)

namespace detail {

/// f(T) with zero derivative in char p is g(T^p); over the prime field the
/// coefficients are their own p-th roots, so the root is obtained by dividing
/// every exponent by p.
template <Field K>
UniPoly<K> pth_root(const UniPoly<K>& f, std::uint64_t p) {
    std::vector<K> r;
    r.resize(static_cast<std::size_t>(f.degree() / static_cast<std::int64_t>(p)) + 1,
             K::zero(f.ctx()));
    for (std::int64_t i = 0; i <= f.degree(); ++i) {
        K c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        assert(i % static_cast<std::int64_t>(p) == 0);
        r[static_cast<std::size_t>(i / static_cast<std::int64_t>(p))] = c;
    }
    return UniPoly<K>(f.ctx(), std::move(r));
}

template <Field K>
void squarefree_rec(const UniPoly<K>& f, std::int64_t outer_mult,
                    std::vector<SquarefreePart<K>>& out) {
    const std::uint64_t p = K::characteristic(f.ctx());
    auto df = f.derivative();

    if (p > 0 && df.is_zero()) {
        squarefree_rec(pth_root(f, p).monic(), outer_mult * static_cast<std::int64_t>(p), out);
        return;
    }

    // Musser's gcd chain; in char p it leaves behind the part whose
    // multiplicity is divisible by p, which recurses through a p-th root.
    auto c = gcd(f, df);
    auto w = exact_div(f, c);
    std::int64_t i = 1;
    while (w.degree() > 0) {
        auto y = gcd(w, c);
        auto z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), outer_mult * i);
        c = exact_div(c, y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) {
        assert(p > 0);
        squarefree_rec(pth_root(c, p).monic(), outer_mult * static_cast<std::int64_t>(p), out);
    }
}

}  // namespace detail

/// Squarefree decomposition f = prod g_i^i with the g_i monic, squarefree and
/// pairwise coprime. Works in characteristic 0 and p (p-th powers extracted
/// exactly over the prime field). Output sorted by multiplicity, then by the
/// canonical polynomial order.
template <Field K>
std::vector<SquarefreePart<K>> squarefree_decomposition(const UniPoly<K>& f) {
    assert(f.is_monic() && f.degree() >= 1);
    std::vector<SquarefreePart<K>> out;
    detail::squarefree_rec(f, 1, out);
    std::sort(out.begin(), out.end(), [](const SquarefreePart<K>& a, const SquarefreePart<K>& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

}  // namespace orthant
