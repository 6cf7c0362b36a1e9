#include "gonc/combinat.hpp"

#include <cassert>
#include <vector>

namespace gonc {

Int factorial(int n) {
    assert(n >= 0);
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact: b is C(n-k+i, i) at this point
    }
    return b;
}

Int falling_factorial(const Int& x, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= x - i;
    return r;
}

Int rising_factorial(const Int& x, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
}

Int stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    // S(n,k) = k S(n-1,k) + S(n-1,k-1)
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = m; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Int lah(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return 1;
    if (k == 0) return 0;
    return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

Int fubini(int n) {
    // F(n) = sum_{k=1..n} C(n,k) F(n-k), F(0) = 1
    std::vector<Int> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int s = 0;
        for (int k = 1; k <= m; ++k) s += binomial(m, k) * f[m - k];
        f[m] = s;
    }
    return f[n];
}

}  // namespace gonc
