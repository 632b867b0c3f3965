#pragma once

#include <gmpxx.h>

#include <string>

namespace bott {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& z) { return z.get_str(); }

// Canonical form p/q with q > 0, or plain p when q == 1.
inline std::string to_string(const Rat& q) { return q.get_str(); }

// mpq_class(num, den) keeps the fraction as given; reduce it here so that
// operator== (mpq_equal, which assumes canonical form) behaves.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace bott
