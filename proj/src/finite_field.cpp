#include "finite_field.hpp"

#include <stdexcept>

namespace radon {

namespace {

constexpr long kMaxOrder = 64;  // tables are q^2; enumeration ceilings keep q tiny anyway

std::vector<int> digits(long v, long p, int e) {
  std::vector<int> d(e + 1, 0);
  for (int i = 0; i <= e && v != 0; ++i) {
    d[i] = static_cast<int>(v % p);
    v /= p;
  }
  return d;
}

// polynomial multiply then reduce mod (monic modulus of degree e), coeffs mod p
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, long p, int e) {
  std::vector<int> prod(2 * e + 1, 0);
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1L * a[i] * b[j]) % p);
  for (int d = 2 * e; d >= e; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < e; ++i)
      prod[d - e + i] = static_cast<int>(((prod[d - e + i] - 1L * c * modulus[i]) % p + p) % p);
  }
  prod.resize(e);
  return prod;
}

long encode(const std::vector<int>& d, long p) {
  long v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

bool poly_is_zero(const std::vector<int>& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

// remainder of a (any degree) by monic b, coefficients mod p
std::vector<int> polyrem(std::vector<int> a, const std::vector<int>& b, long p) {
  int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    int c = a[d];
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i)
      a[d - db + i] = static_cast<int>(((a[d - db + i] - 1L * c * b[i]) % p + p) % p);
  }
  a.resize(db);
  return a;
}

bool is_irreducible(const std::vector<int>& m, long p) {
  int e = static_cast<int>(m.size()) - 1;
  if (e < 1 || m[e] != 1) return false;
  // trial division by every monic polynomial of degree 1..e/2
  for (int d = 1; 2 * d <= e; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long v = 0; v < count; ++v) {
      std::vector<int> cand(d + 1, 0);
      long t = v;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (poly_is_zero(polyrem(m, cand, p))) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(long p, int e) {
  if (e == 1) return {0, 1};  // unused for prime fields
  long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long v = 0; v < count; ++v) {
    std::vector<int> m(e + 1, 0);
    long t = v;
    for (int i = 0; i < e; ++i) {
      m[i] = static_cast<int>(t % p);
      t /= p;
    }
    m[e] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("default_modulus: no irreducible found");  // unreachable
}

}  // namespace

FiniteField::FiniteField(const QParameter& q) : FiniteField(q, default_modulus(q.p, q.e)) {}

FiniteField::FiniteField(const QParameter& q, std::vector<int> modulus)
    : q_(q.q), p_(q.p), e_(q.e), modulus_(std::move(modulus)) {
  if (q_ > kMaxOrder) throw std::invalid_argument("FiniteField: order too large");
  if (static_cast<int>(modulus_.size()) != e_ + 1 || modulus_[e_] != 1)
    throw std::invalid_argument("FiniteField: modulus must be monic of degree e");
  for (int& c : modulus_) c = static_cast<int>(((c % p_) + p_) % p_);
  modulus_[e_] = 1;
  if (e_ > 1 && !is_irreducible(modulus_, p_))
    throw std::invalid_argument("FiniteField: modulus is reducible");
  build_tables();
}

void FiniteField::build_tables() {
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);
  for (long a = 0; a < q_; ++a) {
    auto da = digits(a, p_, e_);
    std::vector<int> na(e_);
    for (int i = 0; i < e_; ++i) na[i] = static_cast<int>((p_ - da[i]) % p_);
    na.resize(e_);
    neg_[a] = static_cast<int>(encode(na, p_));
    for (long b = 0; b < q_; ++b) {
      auto db = digits(b, p_, e_);
      std::vector<int> s(e_);
      for (int i = 0; i < e_; ++i) s[i] = static_cast<int>((da[i] + db[i]) % p_);
      add_[a * q_ + b] = static_cast<int>(encode(s, p_));
      da.resize(e_);
      db.resize(e_);
      auto m = polymul_mod(da, db, modulus_, p_, e_);
      mul_[a * q_ + b] = static_cast<int>(encode(m, p_));
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<int>(b);
  for (long a = 1; a < q_; ++a)
    if (inv_[a] < 0) throw std::logic_error("FiniteField: element without inverse");
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::invalid_argument("FiniteField: inverse of zero");
  return inv_[a];
}

}  // namespace radon
