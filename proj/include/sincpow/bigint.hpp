#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "sincpow/errors.hpp"

namespace sincpow {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(long long n) {
    if (n < 0) throw InvalidDomain("factorial requires n >= 0");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt pow_int(const BigInt& base, long long exp) {
    if (exp < 0) throw InvalidDomain("pow_int requires exp >= 0");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

// (-1)^e computed from the parity of e; valid for negative exponents too.
inline int parity_sign(long long e) {
    return (e % 2 == 0) ? 1 : -1;
}

} // namespace sincpow
