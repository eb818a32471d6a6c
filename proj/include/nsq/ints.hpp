#pragma once
// Exact arithmetic aliases and small numeric helpers shared by all modules.
// Every coefficient in the library is an exact rational; every lattice entry
// is an arbitrary-precision integer.

#include <gmpxx.h>
#include <stdexcept>

namespace nsq {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) as an exact integer; 0 outside the valid range.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline bool is_integer(const Rat& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

// Exact integer quotient; throws if the division has a remainder.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::invalid_argument("exact_div: inexact division");
    return q;
}

} // namespace nsq
