#include "hookdec/arith.hpp"

namespace hookdec {

Int factorial(int n) {
    if (n < 0) fail(errc::index_out_of_range, "factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

Int binomial(int n, int k) {
    if (n < 0) fail(errc::index_out_of_range, "binomial with negative upper argument");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    // r stays integral after each division: after the i-th step it equals C(n-k+i, i).
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

Int double_factorial_odd(int n) {
    Int r = 1;
    for (int i = 3; i < 2 * n; i += 2) r = checked_mul(r, i);
    return r;
}

} // namespace hookdec
