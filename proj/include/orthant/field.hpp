#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "orthant/fp.hpp"
#include "orthant/primality.hpp"
#include "orthant/rational.hpp"

namespace orthant {

/// Requirements on a coefficient field: exact arithmetic, self-describing
/// context, and a canonical total order for reproducible printing.
template <class K>
concept Field = std::regular<K> && requires(const K a, const K b, const typename K::Ctx c) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a* b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.ctx() } -> std::convertible_to<typename K::Ctx>;
    { K::zero(c) } -> std::convertible_to<K>;
    { K::one(c) } -> std::convertible_to<K>;
    { K::from_int(c, std::int64_t{}) } -> std::convertible_to<K>;
    { K::characteristic(c) } -> std::convertible_to<std::uint64_t>;
    { K::less(a, b) } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

static_assert(Field<Rat>);
static_assert(Field<Fp>);

/// Runtime description of the coefficient field, as selected on the CLI.
struct FieldCtx {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;  // modulus, set iff kind == PrimeField

    static FieldCtx rationals() { return {Kind::Rationals, 0}; }
    static FieldCtx prime_field(std::uint64_t p) {
        if (!is_prime_u64(p)) throw InputError("NotPrime", "p = " + std::to_string(p) + " is not prime");
        return {Kind::PrimeField, p};
    }

    std::uint64_t characteristic() const { return kind == Kind::PrimeField ? p : 0; }
    std::string name() const {
        return kind == Kind::Rationals ? std::string("Q") : "F_" + std::to_string(p);
    }
};

}  // namespace orthant
