#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lgp/errors.hpp"

namespace lgp {

// All coefficients are exact: arbitrary-precision integers, with rationals
// appearing only in series coefficients and certificate weights.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int int_pow(const Int& base, unsigned long e);

// n (n-1) ... (n-p+1), exact; p = 0 gives 1.
Int falling_factorial(const Int& n, unsigned long p);

// Row-major integer matrix. Square for determinant/unimodularity checks.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

Int determinant(const IntMatrix& m);
int rank_over_q(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// g * v, throwing on non-square g, size mismatch, or int64 overflow.
std::vector<std::int64_t> apply_matrix(const IntMatrix& g, const std::vector<std::int64_t>& v);

IntMatrix identity_matrix(int n);

// "p/q" or "p", canonicalized. Round-trips with rat_to_string.
Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& value);

}  // namespace lgp
