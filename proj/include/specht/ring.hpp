#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "specht/errors.hpp"
#include "specht/numbers.hpp"

namespace specht {

inline bool is_small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Arbitrary precision integers. All arithmetic is exact.
struct IntegerRing {
    using Value = BigInt;
    static constexpr bool is_field = false;

    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    bool is_zero(const Value& a) const { return a == 0; }
    Value from_int(long long v) const { return Value(v); }
    std::string to_string(const Value& a) const { return a.str(); }
    std::string descriptor() const { return "Z"; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

// Integers modulo a prime p, values normalized to [0, p).
struct PrimeField {
    using Value = std::int64_t;
    static constexpr bool is_field = true;

    std::int64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::int64_t prime) : p(prime) {
        if (!is_small_prime(p)) throw invalid_input("modulus must be a prime");
    }

    Value normalize(long long v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }

    Value zero() const { return 0; }
    Value one() const { return normalize(1); }
    Value add(Value a, Value b) const { return (a + b) % p; }
    Value sub(Value a, Value b) const { return normalize(a - b); }
    Value mul(Value a, Value b) const { return (a * b) % p; }
    Value neg(Value a) const { return normalize(-a); }
    bool is_zero(Value a) const { return a % p == 0; }
    Value from_int(long long v) const { return normalize(v); }
    Value from_bigint(const BigInt& v) const {
        BigInt r = v % p;
        if (r < 0) r += p;
        return static_cast<Value>(r);
    }

    Value inv(Value a) const {
        a = normalize(a);
        if (a == 0) throw invalid_input("division by zero in GF(p)");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return normalize(t);
    }

    std::string to_string(Value a) const { return std::to_string(normalize(a)); }
    std::string descriptor() const { return "GF(" + std::to_string(p) + ")"; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

} // namespace specht
