#ifndef RADONFILT_FINITE_FIELD_HPP
#define RADONFILT_FINITE_FIELD_HPP

#include <vector>

#include "qcombinatorics.hpp"

namespace radon {

/// F_q arithmetic, q = p^e. Elements are encoded as integers in [0, q): the
/// base-p digits of the element are the coefficients of its polynomial
/// residue (digit i = coefficient of x^i). For e = 1 this is plain residue
/// arithmetic. Operation tables are precomputed, so all ops are O(1).
class FiniteField {
 public:
  /// Default modulus for e >= 2: the lexicographically first monic
  /// irreducible of degree e over F_p (x^2+x+1 for F_4).
  explicit FiniteField(const QParameter& q);
  explicit FiniteField(long q) : FiniteField(QParameter(q)) {}

  /// Custom monic irreducible modulus, coefficients mod p, degree e
  /// (modulus[i] = coefficient of x^i, modulus[e] = 1). Validated eagerly.
  FiniteField(const QParameter& q, std::vector<int> modulus);

  long order() const { return q_; }
  long characteristic() const { return p_; }
  int degree() const { return e_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws on 0

 private:
  void build_tables();

  long q_, p_;
  int e_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace radon

#endif
