#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace specht {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int m) {
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

// Exponent of p in m! (Legendre's formula).
inline int nu_p_factorial(int m, int p) {
    int total = 0;
    for (long long q = p; q <= m; q *= p) total += m / static_cast<int>(q);
    return total;
}

inline BigInt pow_int(int base, int exp) {
    BigInt r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Largest power of p dividing x (x > 0).
inline BigInt p_part(BigInt x, int p) {
    BigInt r = 1;
    while (x != 0 && x % p == 0) {
        x /= p;
        r *= p;
    }
    return r;
}

inline bool is_p_power(BigInt x, int p) {
    if (x <= 0) return false;
    while (x % p == 0) x /= p;
    return x == 1;
}

} // namespace specht
