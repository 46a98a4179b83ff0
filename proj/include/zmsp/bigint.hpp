#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zmsp {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// Exact binomial coefficient; zero outside 0 <= b <= a.
BigInt binomial(long a, long b);

}  // namespace zmsp
