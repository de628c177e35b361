#pragma once

#include <gmpxx.h>

namespace ainfty {

// Coefficients are exact integers, filtration levels exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline int parity_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace ainfty
