#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "orthant/field.hpp"

namespace orthant {

/// Dense univariate polynomial over an exact field. The zero polynomial has
/// an empty coefficient vector and degree -1 (standing in for -infinity).
template <Field K>
class UniPoly {
public:
    using Ctx = typename K::Ctx;

    explicit UniPoly(const Ctx& ctx) : ctx_(ctx) {}
    UniPoly(const Ctx& ctx, std::vector<K> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(const Ctx& ctx) { return UniPoly(ctx); }
    static UniPoly constant(const Ctx& ctx, const K& a) { return UniPoly(ctx, {a}); }
    static UniPoly monomial(const Ctx& ctx, const K& a, std::size_t deg) {
        std::vector<K> c(deg + 1, K::zero(ctx));
        c[deg] = a;
        return UniPoly(ctx, std::move(c));
    }
    /// T (the variable itself).
    static UniPoly variable(const Ctx& ctx) { return monomial(ctx, K::one(ctx), 1); }

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K::zero(ctx_); }
    const std::vector<K>& coeffs() const { return c_; }

    K lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    UniPoly operator-() const {
        std::vector<K> r(c_);
        for (auto& x : r) x = -x;
        return UniPoly(ctx_, std::move(r));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return UniPoly(ctx_, std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return zero(ctx_);
        std::vector<K> r(c_.size() + o.c_.size() - 1, K::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(ctx_, std::move(r));
    }

    UniPoly scaled(const K& a) const {
        std::vector<K> r(c_);
        for (auto& x : r) x = x * a;
        return UniPoly(ctx_, std::move(r));
    }

    UniPoly monic() const {
        assert(!is_zero());
        return scaled(lc().inverse());
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return zero(ctx_);
        std::vector<K> r(c_.size() - 1, K::zero(ctx_));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * K::from_int(ctx_, static_cast<std::int64_t>(i));
        return UniPoly(ctx_, std::move(r));
    }

    K eval(const K& x) const {
        K acc = K::zero(ctx_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// f(T^k).
    UniPoly compose_power(std::size_t k) const {
        assert(k >= 1);
        if (is_zero()) return zero(ctx_);
        std::vector<K> r(c_.size() * k - k + 1, K::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return UniPoly(ctx_, std::move(r));
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const K& a = c_[i];
            if (a.is_zero()) continue;
            std::string coeff = a.str();
            bool neg = !coeff.empty() && coeff[0] == '-';
            std::string mag = neg ? coeff.substr(1) : coeff;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (i == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Ctx ctx_;
    std::vector<K> c_;
};

/// Division with remainder: a = q*b + r with deg r < deg b. b must be nonzero.
template <Field K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    assert(!b.is_zero());
    const auto& ctx = a.ctx();
    std::vector<K> r(a.coeffs());
    const std::int64_t db = b.degree();
    const K inv_lc = b.lc().inverse();
    if (a.degree() < db) return {UniPoly<K>::zero(ctx), a};
    std::vector<K> q(static_cast<std::size_t>(a.degree() - db) + 1, K::zero(ctx));
    for (std::int64_t i = a.degree(); i >= db; --i) {
        const K c = r[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const K f = c * inv_lc;
        q[static_cast<std::size_t>(i - db)] = f;
        for (std::int64_t j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] =
                r[static_cast<std::size_t>(i - db + j)] - f * b.coeff(static_cast<std::size_t>(j));
    }
    return {UniPoly<K>(ctx, std::move(q)), UniPoly<K>(ctx, std::move(r))};
}

template <Field K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divrem(a, b).second;
}

template <Field K>
UniPoly<K> operator/(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divrem(a, b).first;
}

/// Exact division; throws if the remainder is nonzero.
template <Field K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InternalError("InexactDivision", "univariate division left a remainder");
    return q;
}

/// Monic gcd.
template <Field K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with g monic, s*a + t*b = g.
/// Precondition: a and b are not both zero.
template <Field K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    const auto& ctx = a.ctx();
    assert(!(a.is_zero() && b.is_zero()));
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = UniPoly<K>::constant(ctx, K::one(ctx)), s1 = UniPoly<K>::zero(ctx);
    UniPoly<K> t0 = UniPoly<K>::zero(ctx), t1 = UniPoly<K>::constant(ctx, K::one(ctx));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        UniPoly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const K inv = r0.lc().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m (e as arbitrary-precision integer).
template <Field K>
UniPoly<K> pow_mod(const UniPoly<K>& base, mpz_class e, const UniPoly<K>& m) {
    const auto& ctx = base.ctx();
    UniPoly<K> result = UniPoly<K>::constant(ctx, K::one(ctx));
    UniPoly<K> b = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * b) % m;
        e >>= 1;
        if (e > 0) b = (b * b) % m;
    }
    return result;
}

/// Canonical order on polynomials: degree, then coefficients from the leading
/// one down. Used wherever output lists must be reproducible.
template <Field K>
bool canonical_less(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::int64_t i = a.degree(); i >= 0; --i) {
        const K ca = a.coeff(static_cast<std::size_t>(i));
        const K cb = b.coeff(static_cast<std::size_t>(i));
        if (!(ca == cb)) return K::less(ca, cb);
    }
    return false;
}

}  // namespace orthant
