#include "qcombinatorics.hpp"

#include <stdexcept>

namespace radon {

QParameter::QParameter(long q_in) : q(q_in), p(0), e(0) {
  if (q < 2) throw std::invalid_argument("QParameter: q must be >= 2");
  long rest = q;
  for (long d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {  // q itself is prime
    p = q;
    e = 1;
    return;
  }
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("QParameter: q is not a prime power");
}

BigInt binomial(long n, long m) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (m < 0 || m > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return r;
}

BigInt q_int(long n, long q) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  if (q < 1) throw std::invalid_argument("q_int: q must be >= 1");
  BigInt sum = 0, pw = 1;
  for (long i = 0; i < n; ++i) {
    sum += pw;
    pw *= q;
  }
  return sum;
}

BigInt q_factorial(long n, long q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  BigInt r = 1;
  for (long k = 1; k <= n; ++k) r *= q_int(k, q);
  return r;
}

BigInt gaussian_binomial(long n, long m, long q) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial: n must be nonnegative");
  if (q < 1) throw std::invalid_argument("gaussian_binomial: q must be >= 1");
  if (m < 0 || m > n) return 0;
  std::vector<std::vector<BigInt>> g(n + 1, std::vector<BigInt>(m + 1));
  for (long i = 0; i <= n; ++i) {
    g[i][0] = 1;
    long top = std::min<long>(i, m);
    for (long j = 1; j <= top; ++j) {
      if (j == i) {
        g[i][j] = 1;
      } else {
        BigInt pw = int_pow(q, j);
        g[i][j] = g[i - 1][j - 1] + pw * g[i - 1][j];
      }
    }
  }
  return g[n][m];
}

}  // namespace radon
