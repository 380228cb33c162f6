#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "orthant/errors.hpp"

namespace orthant {

struct RatCtx {
    bool operator==(const RatCtx&) const = default;
};

/// Arbitrary-precision rational number. Every value is kept canonical
/// (reduced, positive denominator); all arithmetic is exact.
class Rat {
public:
    using Ctx = RatCtx;

    Rat() : v_(0) {}
    Rat(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
    Rat(std::int64_t num, std::int64_t den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw InternalError("DivisionByZero", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rat zero(const Ctx&) { return Rat(0); }
    static Rat one(const Ctx&) { return Rat(1); }
    static Rat from_int(const Ctx&, std::int64_t n) { return Rat(n); }
    static std::uint64_t characteristic(const Ctx&) { return 0; }

    /// Parses "p", "-p" or "p/q"; throws InputError on malformed text.
    static Rat parse(const std::string& text) {
        if (text.empty()) throw InputError("BadRational", "empty rational literal");
        try {
            mpq_class q(text, 10);
            if (q.get_den() == 0) throw InputError("BadRational", "zero denominator in '" + text + "'");
            q.canonicalize();
            return Rat(std::move(q));
        } catch (const std::invalid_argument&) {
            throw InputError("BadRational", "malformed rational literal '" + text + "'");
        }
    }

    Ctx ctx() const { return {}; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    /// Exact conversion to int64; caller must know the value fits (integral values only).
    std::int64_t to_int64() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw InternalError("BadConversion", "rational " + str() + " is not a small integer");
        return static_cast<std::int64_t>(v_.get_num().get_si());
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw InternalError("DivisionByZero", "rational division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inverse() const {
        if (is_zero()) throw InternalError("DivisionByZero", "inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    /// Canonical total order used for deterministic sorting of outputs.
    static bool less(const Rat& a, const Rat& b) { return a < b; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace orthant
