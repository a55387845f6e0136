#pragma once

// Binomial sums over residue classes: S(n, d, m) = sum_{k = d (mod m)} C(n, k).

#include <gmpxx.h>

namespace hyperu {

struct CountQuery {
    long n;
    /// Any integer; only its residue mod m matters.
    long d;
    long m;
};

mpz_class binomial(long n, long k);
mpz_class s_count(const CountQuery &q);
/// 2^{g-1} (2^g + 1).
mpz_class u_count_closed(int g);

} // namespace hyperu
