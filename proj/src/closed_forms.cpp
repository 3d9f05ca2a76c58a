#include "closed_forms.hpp"

#include <stdexcept>

#include "qcombinatorics.hpp"

namespace radon {

namespace {

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// gamma_t^k = C(s,t)^{-1} (s-t+k)!(n-s-k)! / ((s-t)!(n-s)!)
Rat gamma_classical(int n, int s, int t, int k) {
  return Rat(factorial(s - t + k) * factorial(n - s - k),
             binomial(s, t) * factorial(s - t) * factorial(n - s));
}

// gamma(q)_t^k with q-factorials and the Gaussian normalizer
Rat gamma_q(int n, int s, int t, int k, long q) {
  return Rat(q_factorial(s - t + k, q) * q_factorial(n - s - k, q),
             gaussian_binomial(s, t, q) * q_factorial(s - t, q) * q_factorial(n - s, q));
}

const SubsetFamily& as_subset(const Geometry& g) {
  const auto* p = dynamic_cast<const SubsetFamily*>(&g);
  if (!p) throw std::invalid_argument("count_oracle: subset-family geometry required");
  return *p;
}

const SubspaceFamily& as_subspace(const Geometry& g) {
  const auto* p = dynamic_cast<const SubspaceFamily*>(&g);
  if (!p) throw std::invalid_argument("count_oracle: subspace-family geometry required");
  return *p;
}

Subset canonical_subset_at_distance(int n, int s, int j) {
  // {1..s-j} u {s+1..s+j}
  std::vector<int> e;
  for (int i = 1; i <= s - j; ++i) e.push_back(i);
  for (int i = s + 1; i <= s + j; ++i) e.push_back(i);
  return Subset::of(n, e);
}

Subspace canonical_subspace_at_distance(const SubspaceGeometry& sp, int s, int j) {
  const int n = sp.ambient();
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < s - j; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < j; ++i) {
    std::vector<int> r(n, 0);
    r[s + i] = 1;
    rows.push_back(std::move(r));
  }
  return sp.canonicalize(rows);
}

Subspace span_units(const SubspaceGeometry& sp, const std::vector<int>& cols) {
  const int n = sp.ambient();
  std::vector<std::vector<int>> rows;
  for (int c : cols) {
    std::vector<int> r(n, 0);
    r[c] = 1;
    rows.push_back(std::move(r));
  }
  return sp.canonicalize(rows);
}

}  // namespace

BigInt count_closed_form(CountKind kind, const CountParams& p) {
  const int n = p.n, s = p.s, t = p.t, k = p.k, j = p.j;
  const long q = p.q;
  switch (kind) {
    case CountKind::omega:
      require(0 <= s && s <= n && 0 <= j, "omega: bad parameters");
      return binomial(s, s - j) * binomial(n - s, j);
    case CountKind::config_a:
      require(0 <= t && t <= s && 2 * s <= n && 0 <= k && 0 <= j && j <= std::min(s, n - s),
              "config_a: bad parameters");
      return binomial(s - j, t - k) * binomial(j, k);
    case CountKind::config_b:
      require(0 <= t && t <= s && 2 * s <= n && 0 <= k && 0 <= j && j <= std::min(s, n - s),
              "config_b: bad parameters");
      return binomial(s - j, s - j - (t - k)) * binomial(j, j - k);
    case CountKind::c_eq:
    case CountKind::d_eq:  // Prop 3 item 3: |D| = |C|
      require(1 <= t && t <= s && 2 * s <= n && 0 <= k && k <= t - 1, "c_eq: bad parameters");
      return binomial(s - (t - 1 - k), 1);
    case CountKind::c_up:
    case CountKind::d_up:
      require(1 <= t && t <= s && 2 * s <= n && 0 <= k && k <= t - 1, "c_up: bad parameters");
      return binomial(n - (s + k), 1);
    case CountKind::omega_q:
      require(q >= 2 && 0 <= s && s <= n && 0 <= j, "omega_q: bad parameters");
      return gaussian_binomial(s, s - j, q) * gaussian_binomial(n - s, j, q) *
             int_pow(q, static_cast<long>(j) * j);
    case CountKind::a_q:
      require(q >= 2 && 0 <= t && t <= s && 2 * s <= n && 0 <= k && 0 <= j &&
                  j <= std::min(s, n - s),
              "a_q: bad parameters");
      if (((s - j) - (t - k)) < 0 || k > j) return 0;  // empty configuration
      return gaussian_binomial(s - j, t - k, q) * gaussian_binomial(j, k, q) *
             int_pow(q, static_cast<long>((s - j) - (t - k)) * k);
    case CountKind::b_q:
      require(q >= 2 && 0 <= t && t <= s && 2 * s <= n && 0 <= k && 0 <= j &&
                  j <= std::min(s, n - s),
              "b_q: bad parameters");
      if (((s - j) - (t - k)) < 0 || k > j) return 0;
      return gaussian_binomial(s - j, s - j - (t - k), q) * gaussian_binomial(j, j - k, q) *
             int_pow(q, static_cast<long>((s - j) - (t - k)) * k);
    case CountKind::c_eq_q:
    case CountKind::d_eq_q:  // Prop 4 item 5: |D(q)| = |C(q)|
      require(q >= 2 && 1 <= t && t <= s && 2 * s <= n && 0 <= k && k <= t - 1,
              "c_eq_q: bad parameters");
      return gaussian_binomial(s - (t - 1 - k), 1, q);
    case CountKind::c_up_q:
    case CountKind::d_up_q:
      require(q >= 2 && 1 <= t && t <= s && 2 * s <= n && 0 <= k && k <= t - 1,
              "c_up_q: bad parameters");
      return gaussian_binomial(n - (s + k), 1, q) * int_pow(q, s - (t - (k + 1)));
    case CountKind::n_j:
    case CountKind::s_j: {  // Remark 4(d): |S_j| = |N_j|
      Rat v = lemma2_printed_value(n, s, q, j);
      if (!v.is_integer()) throw std::domain_error("n_j: printed formula is not an integer");
      return v.num();
    }
    case CountKind::lemma1:
      require(q >= 2 && 0 <= s && s <= n && 0 <= p.l && p.l <= n && 0 <= t &&
                  t <= std::min(s, p.l),
              "lemma1: bad parameters");
      return int_pow(q, static_cast<long>(s - t) * (p.l - t)) *
             gaussian_binomial(n - s, p.l - t, q) * gaussian_binomial(s, t, q);
    case CountKind::corollary2:
      require(q >= 2 && p.d1 >= 0 && p.d2 >= 0 && p.d1 + p.d2 <= n && 0 <= k,
              "corollary2: bad parameters");
      return int_pow(q, static_cast<long>(p.d1) * k) * gaussian_binomial(p.d2, k, q);
  }
  throw std::invalid_argument("count_closed_form: unknown kind");
}

Rat lemma2_printed_value(int n, int s, long q, int j) {
  require(q >= 2 && 1 <= s && 2 * s <= n && 0 <= j && j <= s, "lemma2: bad parameters");
  if (j == 0) return Rat(gaussian_binomial(n - s, n - s, q));
  BigInt p1 = 1, p2 = 1;
  for (int i = 0; i < j; ++i) {
    p1 *= int_pow(q, s) - int_pow(q, i);
    p2 *= int_pow(q, j) - int_pow(q, i);
  }
  return Rat(gaussian_binomial(n - s, n - s - j, q) * p1 * p2, int_pow(q, j) - 1);
}

BigInt lemma2_conjecture_value(int n, int s, long q, int j) {
  require(q >= 2 && 1 <= s && 2 * s <= n && 0 <= j && j <= s, "lemma2: bad parameters");
  BigInt p1 = 1;
  for (int i = 0; i < j; ++i) p1 *= int_pow(q, s) - int_pow(q, i);
  return gaussian_binomial(n - s, j, q) * p1;
}

BigInt count_oracle(CountKind kind, const CountParams& p, const Geometry& g) {
  const int n = p.n, s = p.s, t = p.t, k = p.k, j = p.j;
  if (n != g.ambient()) throw std::invalid_argument("count_oracle: ambient mismatch");
  switch (kind) {
    case CountKind::omega: {
      const auto& fam = as_subset(g);
      const auto& lvl = fam.level(s);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r)
        if (distance(lvl.point(r), lvl.basepoint()) == j) c += 1;
      return c;
    }
    case CountKind::config_a: {
      const auto& fam = as_subset(g);
      Subset x = canonical_subset_at_distance(n, s, j);
      const auto& lvl = fam.level(t);
      const Subset x0 = Subset::range(n, s);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subset& y = lvl.point(r);
        if (y.subset_of(x) && pseudo_distance(y, x0) == k) c += 1;
      }
      return c;
    }
    case CountKind::config_b: {
      const auto& fam = as_subset(g);
      const Subset x0p = Subset::range(n, s).complement();  // {s+1..n}
      // X' at distance j from X'_0: drop {s+1..s+j}, add {1..j}
      std::vector<int> e;
      for (int i = s + j + 1; i <= n; ++i) e.push_back(i);
      for (int i = 1; i <= j; ++i) e.push_back(i);
      Subset xp = Subset::of(n, e);
      const auto& lvl = fam.level(n - t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subset& yp = lvl.point(r);
        if (xp.subset_of(yp) && pseudo_distance(x0p, yp) == k) c += 1;
      }
      return c;
    }
    case CountKind::c_eq:
    case CountKind::c_up: {
      const auto& fam = as_subset(g);
      std::vector<int> e;
      for (int i = 1; i <= t - 1 - k; ++i) e.push_back(i);
      for (int i = s + 1; i <= s + k; ++i) e.push_back(i);
      Subset z = Subset::of(n, e);
      const Subset x0 = Subset::range(n, s);
      const int want = kind == CountKind::c_eq ? k : k + 1;
      const auto& lvl = fam.level(t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subset& y = lvl.point(r);
        if (z.subset_of(y) && pseudo_distance(y, x0) == want) c += 1;
      }
      return c;
    }
    case CountKind::d_eq:
    case CountKind::d_up: {
      const auto& fam = as_subset(g);
      const Subset x0p = Subset::range(n, s).complement();
      std::vector<int> e;
      for (int i = 1; i <= s - t + 1 + k; ++i) e.push_back(i);
      for (int i = s + 1; i <= s + (n - s - k); ++i) e.push_back(i);
      Subset zp = Subset::of(n, e);
      const int want = kind == CountKind::d_eq ? k : k + 1;
      const auto& lvl = fam.level(n - t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subset& yp = lvl.point(r);
        if (yp.subset_of(zp) && pseudo_distance(x0p, yp) == want) c += 1;
      }
      return c;
    }
    case CountKind::omega_q: {
      const auto& fam = as_subspace(g);
      const auto& lvl = fam.level(s);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r)
        if (fam.space().q_distance(lvl.point(r), lvl.basepoint()) == j) c += 1;
      return c;
    }
    case CountKind::a_q: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      Subspace w = canonical_subspace_at_distance(sp, s, j);
      Subspace w0 = sp.basepoint(s);
      const auto& lvl = fam.level(t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subspace& u = lvl.point(r);
        if (sp.q_pseudo_distance(u, w0) == k && sp.contains(u, w)) c += 1;
      }
      return c;
    }
    case CountKind::b_q: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      Subspace w0p = sp.dual_basepoint(n - s);
      std::vector<int> cols;
      for (int i = s + j; i < n; ++i) cols.push_back(i);
      for (int i = 0; i < j; ++i) cols.push_back(i);
      Subspace wp = span_units(sp, cols);
      const auto& lvl = fam.level(n - t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subspace& up = lvl.point(r);
        if (sp.q_pseudo_distance(w0p, up) == k && sp.contains(wp, up)) c += 1;
      }
      return c;
    }
    case CountKind::c_eq_q:
    case CountKind::c_up_q: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      std::vector<int> cols;
      for (int i = 0; i < t - 1 - k; ++i) cols.push_back(i);
      for (int i = s; i < s + k; ++i) cols.push_back(i);
      Subspace z = span_units(sp, cols);
      Subspace w0 = sp.basepoint(s);
      const int want = kind == CountKind::c_eq_q ? k : k + 1;
      const auto& lvl = fam.level(t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subspace& u = lvl.point(r);
        if (sp.q_pseudo_distance(u, w0) == want && sp.contains(z, u)) c += 1;
      }
      return c;
    }
    case CountKind::d_eq_q:
    case CountKind::d_up_q: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      std::vector<int> cols;
      for (int i = s; i < s + (n - s - k); ++i) cols.push_back(i);
      for (int i = 0; i < s - t + 1 + k; ++i) cols.push_back(i);
      Subspace zp = span_units(sp, cols);
      Subspace w0p = sp.dual_basepoint(n - s);
      const int want = kind == CountKind::d_eq_q ? k : k + 1;
      const auto& lvl = fam.level(n - t);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subspace& up = lvl.point(r);
        if (sp.q_pseudo_distance(w0p, up) == want && sp.contains(up, zp)) c += 1;
      }
      return c;
    }
    case CountKind::n_j:
    case CountKind::s_j: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      Subspace w0 = sp.basepoint(s);
      Subspace w0p = sp.dual_basepoint(n - s);
      auto hist = kind == CountKind::n_j ? sp.complements_by_distance(w0, w0p)
                                         : sp.complements_by_distance(w0p, w0);
      for (const auto& [dist, cnt] : hist)
        if (dist == j) return cnt;
      return 0;
    }
    case CountKind::lemma1: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      Subspace w = sp.basepoint(s);
      const auto& lvl = fam.level(p.l);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r)
        if (sp.intersection_dim(lvl.point(r), w) == t) c += 1;
      return c;
    }
    case CountKind::corollary2: {
      const auto& fam = as_subspace(g);
      const auto& sp = fam.space();
      Subspace w1 = sp.basepoint(p.d1);
      Subspace w = sp.basepoint(p.d1 + p.d2);
      const auto& lvl = fam.level(k);
      BigInt c = 0;
      for (std::size_t r = 0; r < lvl.size(); ++r) {
        const Subspace& z = lvl.point(r);
        if (sp.contains(z, w) && sp.q_pseudo_distance(z, w1) == k) c += 1;
      }
      return c;
    }
  }
  throw std::invalid_argument("count_oracle: unknown kind");
}

CoefficientLadder alpha_ladder(int n, int s, int t, long q) {
  require(0 <= t && t <= s && 2 * s <= n, "alpha_ladder: need 0 <= t <= s <= n/2");
  CoefficientLadder lad;
  lad.n = n;
  lad.s = s;
  lad.t = t;
  lad.q = q;
  if (q == 0) {
    lad.alpha.push_back(Rat(BigInt(1), binomial(s, t)));
    for (int k = 0; k < t; ++k) {
      Rat next = -lad.alpha.back() * Rat(BigInt(s - t + 1 + k), BigInt(n - s - k));
      lad.alpha.push_back(next);
    }
    for (int k = 0; k <= t; ++k) {
      Rat closed = (k % 2 ? -gamma_classical(n, s, t, k) : gamma_classical(n, s, t, k));
      if (lad.alpha[k] != closed)
        throw std::logic_error("alpha_ladder: recurrence disagrees with closed form");
    }
  } else {
    lad.alpha.push_back(Rat(BigInt(1), gaussian_binomial(s, t, q)));
    for (int k = 0; k < t; ++k) {
      Rat c_eq = Rat(q_int(s - t + 1 + k, q));
      Rat c_up = Rat(q_int(n - s - k, q) * int_pow(q, s - t + k + 1));
      lad.alpha.push_back(-lad.alpha.back() * c_eq / c_up);
    }
    for (int k = 0; k <= t; ++k) {
      // alpha(q)_t^k = (-1)^k q^{k(t-s) - k(k+1)/2} gamma(q)_t^k
      long expo = static_cast<long>(k) * (t - s) - static_cast<long>(k) * (k + 1) / 2;
      Rat closed = rat_pow(q, expo) * gamma_q(n, s, t, k, q);
      if (k % 2) closed = -closed;
      if (lad.alpha[k] != closed)
        throw std::logic_error("alpha_ladder: q-recurrence disagrees with closed form");
    }
  }
  return lad;
}

std::vector<Rat> beta_ladder_from_counts(const Geometry& g, int s, int t) {
  const int n = g.ambient();
  require(0 <= t && t <= s && 2 * s <= n, "beta_ladder: need 0 <= t <= s <= n/2");
  const bool qside = g.family() == LevelRef::Family::subspace;
  CountParams p;
  p.n = n;
  p.s = s;
  p.t = t;
  p.q = g.q();
  std::vector<Rat> beta;
  if (qside)
    beta.push_back(Rat(BigInt(1), gaussian_binomial(s, s - t, g.q())));
  else
    beta.push_back(Rat(BigInt(1), binomial(s, s - t)));
  for (int k = 0; k < t; ++k) {
    p.k = k;
    BigInt deq = count_oracle(qside ? CountKind::d_eq_q : CountKind::d_eq, p, g);
    BigInt dup = count_oracle(qside ? CountKind::d_up_q : CountKind::d_up, p, g);
    beta.push_back(-beta.back() * Rat(deq, dup));
  }
  return beta;
}

Rat spherical_closed_form(LevelRef::Family family, int n, int s, int t, int j, long q) {
  require(0 <= t && t <= s && 2 * s <= n, "spherical: need 0 <= t <= s <= n/2");
  require(0 <= j && j <= std::min(s, n - s), "spherical: distance out of range");
  const int k0 = std::max(0, t + j - s);
  const int ktop = std::min(j, t);
  Rat total;
  for (int k = 0; k <= t; ++k) {
    Rat term;
    if (family == LevelRef::Family::subset) {
      term = Rat(binomial(s - j, t - k) * binomial(j, k)) * gamma_classical(n, s, t, k);
    } else {
      long num = static_cast<long>(k) * (k - 1 - 2 * j);
      if (num % 2 != 0) throw std::logic_error("spherical: odd q-exponent");  // k(k-1) is even
      term = rat_pow(q, num / 2) *
             Rat(gaussian_binomial(s - j, t - k, q) * gaussian_binomial(j, k, q)) *
             gamma_q(n, s, t, k, q);
    }
    if (k % 2) term = -term;
    // the paper's summation bounds must be redundant: outside terms vanish
    if ((k < k0 || k > ktop) && !term.is_zero())
      throw std::logic_error("spherical: term outside the stated bounds is nonzero");
    total += term;
  }
  return total;
}

Rat dual_spherical(LevelRef::Family family, int n, int s, int t, int j, long q) {
  // Distance is preserved by complementation, so the dual profile coincides
  // with the primal one at the same j.
  return spherical_closed_form(family, n, s, t, j, q);
}

Rat dual_spherical_via_beta(const Geometry& g, int s, int t, int j) {
  const int n = g.ambient();
  require(0 <= j && j <= std::min(s, n - s), "dual_spherical_via_beta: bad distance");
  const bool qside = g.family() == LevelRef::Family::subspace;
  std::vector<Rat> beta = beta_ladder_from_counts(g, s, t);
  CountParams p;
  p.n = n;
  p.s = s;
  p.t = t;
  p.j = j;
  p.q = g.q();
  Rat total;
  for (int k = 0; k <= t; ++k) {
    p.k = k;
    BigInt b = count_oracle(qside ? CountKind::b_q : CountKind::config_b, p, g);
    total += Rat(b) * beta[k];
  }
  return total;
}

BigInt eigenvalue_closed_form(LevelRef::Family family, int n, int s, int t, long q) {
  require(0 <= t && t <= s && 2 * s <= n, "eigenvalue: need 0 <= t <= s <= n/2");
  if (family == LevelRef::Family::subset)
    return BigInt(n - s) * (s - t) - BigInt(s - t + 1) * t;
  BigInt simplified = q * q_int(n - s, q) * q_int(s - t, q) - q_int(s - t + 1, q) * q_int(t, q);
  if (n > s) {
    // the printed prefactor-times-fraction form must simplify to the same value
    Rat printed = Rat(q * q_int(n - s, q)) *
                  (Rat(q_int(s - t, q)) -
                   Rat(q_int(s - t + 1, q) * q_int(t, q), q * q_int(n - s, q)));
    if (printed != Rat(simplified))
      throw std::logic_error("eigenvalue: printed q-form does not match its simplification");
  }
  return simplified;
}

Theorem5Pairing theorem5_pairing(int n, int s, long q) {
  require(1 <= s && 2 * s <= n, "theorem5_pairing: need 1 <= s <= n/2");
  SubspaceFamily fam(n, q);
  const auto& sp = fam.space();
  Theorem5Pairing out;
  auto hist = sp.complements_by_distance(sp.basepoint(s), sp.dual_basepoint(n - s));
  for (const auto& [j, cnt] : hist) {
    out.oracle_counts.emplace_back(j, cnt);
    Rat phi = dual_spherical(LevelRef::Family::subspace, n, s, s, j, q);
    out.via_oracle_counts += Rat(cnt) * phi;
    Rat printed = lemma2_printed_value(n, s, q, j);
    out.printed_counts.emplace_back(j, printed);
    out.via_printed_counts += printed * phi;
  }
  out.nonzero = !out.via_oracle_counts.is_zero();
  return out;
}

}  // namespace radon
