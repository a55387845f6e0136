#include "hyperu/counting.hpp"

#include "hyperu/error.hpp"

namespace hyperu {

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return c;
}

mpz_class s_count(const CountQuery &q)
{
    require(q.n >= 0, ErrorCode::invalid_argument, "n must be non-negative");
    require(q.m >= 2, ErrorCode::invalid_argument, "m must be at least 2");
    const long start = ((q.d % q.m) + q.m) % q.m;
    mpz_class total = 0;
    for (long k = start; k <= q.n; k += q.m)
        total += binomial(q.n, k);
    return total;
}

mpz_class u_count_closed(int g)
{
    require(g >= 1, ErrorCode::invalid_argument, "genus must be positive");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
    return p * (2 * p + 1);
}

} // namespace hyperu
