#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "orthant/errors.hpp"
#include "orthant/primality.hpp"

namespace orthant {

struct FpCtx {
    std::uint64_t p = 0;
    bool operator==(const FpCtx&) const = default;
};

/// Element of the prime field F_p. Each value carries its modulus so that
/// mixed-modulus arithmetic is caught immediately.
class Fp {
public:
    using Ctx = FpCtx;

    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) { assert(p >= 2); }

    static Fp zero(const Ctx& c) { return Fp(0, c.p); }
    static Fp one(const Ctx& c) { return Fp(1, c.p); }
    static Fp from_int(const Ctx& c, std::int64_t n) {
        std::int64_t r = n % static_cast<std::int64_t>(c.p);
        if (r < 0) r += static_cast<std::int64_t>(c.p);
        return Fp(static_cast<std::uint64_t>(r), c.p);
    }
    static std::uint64_t characteristic(const Ctx& c) { return c.p; }

    Ctx ctx() const { return {p_}; }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(detail::mulmod_u64(v_, o.v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw InternalError("DivisionByZero", "inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    Fp pow(std::uint64_t e) const { return Fp(detail::powmod_u64(v_, e, p_), p_); }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    /// Canonical total order on representatives, for deterministic output.
    static bool less(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const {
        assert(p_ != 0 && p_ == o.p_);
        (void)o;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

/// Square root in F_p for odd p (Tonelli-Shanks; deterministic non-residue scan).
/// Returns false when `a` is a non-residue.
inline bool fp_sqrt(const Fp& a, Fp& out) {
    const std::uint64_t p = a.modulus();
    if (p == 2) throw CharacteristicTwo("fp_sqrt requires odd characteristic");
    if (a.is_zero()) {
        out = Fp(0, p);
        return true;
    }
    if (a.pow((p - 1) / 2).value() != 1) return false;
    if (p % 4 == 3) {
        Fp r = a.pow((p + 1) / 4);
        out = Fp::less(r, -r) ? r : -r;
        return true;
    }
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Fp z(2, p);
    while (z.pow((p - 1) / 2).value() == 1) z = z + Fp(1, p);
    Fp c = z.pow(q);
    Fp r = a.pow((q + 1) / 2);
    Fp t = a.pow(q);
    std::uint64_t m = s;
    while (!t.is_one()) {
        Fp tt = t;
        std::uint64_t i = 0;
        while (!tt.is_one()) {
            tt = tt * tt;
            ++i;
        }
        Fp b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b;
        r = r * b;
        c = b * b;
        t = t * c;
        m = i;
    }
    out = Fp::less(r, -r) ? r : -r;
    return true;
}

}  // namespace orthant
