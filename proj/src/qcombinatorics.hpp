#ifndef RADONFILT_QCOMBINATORICS_HPP
#define RADONFILT_QCOMBINATORICS_HPP

#include <vector>

#include "rational.hpp"

namespace radon {

/// A concrete prime power q = p^e, validated eagerly by trial factorization.
struct QParameter {
  long q;
  long p;  // prime
  int e;   // exponent >= 1

  explicit QParameter(long q);
};

/// C(n, m). Out-of-range m (m < 0 or m > n) gives 0 so that the spherical
/// sums need no edge-case branches.
BigInt binomial(long n, long m);

/// q-integer n_q = 1 + q + ... + q^{n-1}; q_int(0) = 0. Accepts q >= 1 so the
/// q -> 1 degeneration tests can run through the same code path.
BigInt q_int(long n, long q);
inline BigInt q_int(long n, const QParameter& qp) { return q_int(n, qp.q); }

/// n!_q = n_q (n-1)_q ... 1_q, empty product = 1.
BigInt q_factorial(long n, long q);
inline BigInt q_factorial(long n, const QParameter& qp) { return q_factorial(n, qp.q); }

/// Gaussian binomial via the Pascal-type recurrence
/// G(n,m) = G(n-1,m-1) + q^m G(n-1,m); 0 when m is out of range.
BigInt gaussian_binomial(long n, long m, long q);
inline BigInt gaussian_binomial(long n, long m, const QParameter& qp) {
  return gaussian_binomial(n, m, qp.q);
}

}  // namespace radon

#endif
