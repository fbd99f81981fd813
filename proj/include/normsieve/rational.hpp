#pragma once

#include <gmpxx.h>

#include <string>

namespace normsieve {

using Rational = mpq_class;
using BigInt = mpz_class;

// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// %.12g rendering used for every real-valued output.
std::string format_real(double value);

}  // namespace normsieve
