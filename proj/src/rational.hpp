#ifndef RADONFILT_RATIONAL_HPP
#define RADONFILT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radon {

// Arbitrary-precision signed integer. GMP carries the magnitude+sign
// representation and never overflows at the sizes this library enumerates.
using BigInt = mpz_class;

inline BigInt big(long v) { return BigInt(v); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Equality is structural; this is the ground field of all operator matrices.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rat(const BigInt& n) : v_(n) {}
  Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return wrap(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }

  /// Serialized form is always "num/den", reduced, e.g. "-1/3" or "5/1".
  std::string str() const { return num().get_str() + "/" + den().get_str(); }

  /// Parses "num/den" or a bare integer.
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }

 private:
  static Rat wrap(mpq_class v) {
    Rat r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;
};

/// base^e for integer base >= 1, any integer exponent (negative gives 1/base^|e|).
inline Rat rat_pow(long base, long e) {
  if (base < 1) throw std::invalid_argument("rat_pow: base must be >= 1");
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rat(p) : Rat(BigInt(1), p);
}

inline BigInt int_pow(long base, long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return p;
}

}  // namespace radon

#endif
