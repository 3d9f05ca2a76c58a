#include "exact_linalg.hpp"

#include <stdexcept>

namespace radon {

namespace {

struct Echelon {
  std::vector<std::vector<BigInt>> rows;
  std::vector<std::size_t> pivot_cols;
};

// Exact division with a remainder check; a nonzero remainder would mean the
// fraction-free invariant is broken, which must never pass silently.
void div_exact(BigInt& out, const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("bareiss: non-exact division");
  out = q;
}

std::vector<std::vector<BigInt>> clear_denominators(const RatMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& d = m.at(i, j).den();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      out[i][j] = x.num() * (l / x.den());
    }
  }
  return out;
}

// Fraction-free forward elimination. Entries stay minors of the input, so
// every division by the previous pivot is exact. First-nonzero pivot choice
// keeps output deterministic.
Echelon bareiss(std::vector<std::vector<BigInt>> m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pr = r;
    while (pr < m.size() && m[pr][c] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[r], m[pr]);
    const BigInt& piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) {
        // still must rescale the trailing block to keep the minor invariant
        for (std::size_t j = c + 1; j < cols; ++j)
          div_exact(m[i][j], piv * m[i][j], prev);
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j)
        div_exact(m[i][j], piv * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

}  // namespace

int exact_rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(bareiss(clear_denominators(m), m.cols()).pivot_cols.size());
}

std::vector<std::vector<Rat>> exact_kernel(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rat>> basis;
  if (cols == 0) return basis;
  Echelon e = bareiss(clear_denominators(m), cols);
  const std::size_t r = e.pivot_cols.size();

  // reduce to RREF over the rationals
  std::vector<std::vector<Rat>> red(r, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < r; ++i) {
    Rat inv = Rat(BigInt(1), e.rows[i][e.pivot_cols[i]]);
    for (std::size_t j = 0; j < cols; ++j) red[i][j] = Rat(e.rows[i][j]) * inv;
  }
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rat f = red[k][e.pivot_cols[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) red[k][j] -= f * red[i][j];
    }
  }

  std::vector<bool> is_piv(cols, false);
  for (std::size_t c : e.pivot_cols) is_piv[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[e.pivot_cols[i]] = -red[i][f];
    // scale to a primitive integer vector, positive leading entry
    BigInt l = 1;
    for (const Rat& x : v) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
      l = l / g * x.den();
    }
    BigInt content = 0;
    for (Rat& x : v) {
      x *= Rat(l);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.num().get_mpz_t());
    }
    if (content > 1)
      for (Rat& x : v) x /= Rat(content);
    for (const Rat& x : v) {
      if (x.is_zero()) continue;
      if (x.sign() < 0)
        for (Rat& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> exact_solve(const RatMatrix& g, std::span<const Rat> b) {
  const std::size_t n = g.rows();
  if (g.cols() != n || b.size() != n) throw std::invalid_argument("exact_solve: shape mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = g.at(i, j);
    aug.at(i, n) = b[i];
  }
  Echelon e = bareiss(clear_denominators(aug), n + 1);
  if (e.pivot_cols.size() != n)
    throw std::invalid_argument("exact_solve: singular system");
  for (std::size_t i = 0; i < n; ++i)
    if (e.pivot_cols[i] != i) throw std::invalid_argument("exact_solve: singular system");
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = Rat(e.rows[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(e.rows[i][j]) * x[j];
    x[i] = acc / Rat(e.rows[i][i]);
  }
  return x;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

}  // namespace radon
