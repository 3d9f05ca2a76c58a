#include "spectral.hpp"

#include <sstream>
#include <stdexcept>

#include "exact_linalg.hpp"
#include "operators.hpp"
#include "qcombinatorics.hpp"

namespace radon {

namespace {

void check_orthogonal_and_complete(const Geometry& g, int level,
                                   const std::vector<Component>& comps) {
  const std::size_t size = g.level_size(level);
  std::size_t total = 0;
  for (const auto& c : comps) total += c.basis.size();
  if (total != size) throw std::logic_error("decompose: component dimensions do not sum to level size");
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = a + 1; b < comps.size(); ++b)
      for (const auto& u : comps[a].basis)
        for (const auto& v : comps[b].basis)
          if (!dot(u, v).is_zero())
            throw std::logic_error("decompose: components are not orthogonal");
}

void check_component_dim(const Geometry& g, int t, std::size_t dim) {
  BigInt expect = g.expected_level_size(t) - (t > 0 ? g.expected_level_size(t - 1) : BigInt(0));
  if (BigInt(static_cast<unsigned long>(dim)) != expect) {
    std::ostringstream os;
    os << "decompose: component t=" << t << " has dimension " << dim << ", expected "
       << expect.get_str() << " (a Radon map below the top level is not injective)";
    throw std::logic_error(os.str());
  }
}

}  // namespace

Decomposition decompose_level(const Geometry& g, int s) {
  const int n = g.ambient();
  if (s < 0 || 2 * s > n) throw std::invalid_argument("decompose_level: need 0 <= s <= n/2");
  Decomposition dec;
  dec.level = s;
  dec.dual = false;

  {
    Component c0;
    c0.t = 0;
    c0.basis.push_back(std::vector<Rat>(g.level_size(s), Rat(1)));
    dec.components.push_back(std::move(c0));
  }
  for (int t = 1; t <= s; ++t) {
    // Ker R*_{t-1} inside level t, pushed up by R_{s-1} ... R_t
    RatMatrix rstar = build_adjoint(build_radon(g, t - 1));
    Component c;
    c.t = t;
    c.basis = exact_kernel(rstar);
    for (int u = t; u < s; ++u) {
      RatMatrix r = build_radon(g, u);
      for (auto& v : c.basis) v = r.apply(v);
    }
    check_component_dim(g, t, c.basis.size());
    dec.components.push_back(std::move(c));
  }
  check_orthogonal_and_complete(g, s, dec.components);
  return dec;
}

Decomposition decompose_dual_level(const Geometry& g, int s) {
  const int n = g.ambient();
  if (s < 0 || 2 * s > n) throw std::invalid_argument("decompose_dual_level: need 0 <= s <= n/2");
  Decomposition dec;
  dec.level = n - s;
  dec.dual = true;

  {
    Component c0;
    c0.t = 0;
    c0.basis.push_back(std::vector<Rat>(g.level_size(n - s), Rat(1)));
    dec.components.push_back(std::move(c0));
  }
  for (int t = 1; t <= s; ++t) {
    // Ker R_{n-t} inside level n-t, pushed down by R*_{n-t-1} ... R*_{n-s}
    RatMatrix r = build_radon(g, n - t);
    Component c;
    c.t = t;
    c.basis = exact_kernel(r);
    for (int u = n - t - 1; u >= n - s; --u) {
      RatMatrix rstar = build_adjoint(build_radon(g, u));
      for (auto& v : c.basis) v = rstar.apply(v);
    }
    check_component_dim(g, t, c.basis.size());
    dec.components.push_back(std::move(c));
  }
  check_orthogonal_and_complete(g, n - s, dec.components);
  return dec;
}

Rat eigenvalue_on_component(const RatMatrix& m, const std::vector<std::vector<Rat>>& basis) {
  if (basis.empty()) throw std::invalid_argument("eigenvalue_on_component: empty basis");
  Rat lambda;
  bool have = false;
  for (const auto& v : basis) {
    std::vector<Rat> mv = m.apply(v);
    std::size_t i = 0;
    while (i < v.size() && v[i].is_zero()) ++i;
    if (i == v.size()) throw std::invalid_argument("eigenvalue_on_component: zero basis vector");
    Rat l = mv[i] / v[i];
    for (std::size_t k = 0; k < v.size(); ++k)
      if (mv[k] != l * v[k])
        throw std::logic_error("eigenvalue_on_component: component is not an eigenspace");
    if (!have) {
      lambda = l;
      have = true;
    } else if (lambda != l) {
      throw std::logic_error("eigenvalue_on_component: non-scalar action on component");
    }
  }
  return lambda;
}

std::vector<Rat> spherical_from_projector(const Geometry& g, int level,
                                          const std::vector<std::vector<Rat>>& basis) {
  const std::size_t size = g.level_size(level);
  const std::size_t d = basis.size();
  if (d == 0) throw std::invalid_argument("spherical_from_projector: empty basis");

  // Gram solve: G c = B^T delta_{x0}; delta row = basepoint at rank 0
  RatMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rat v = dot(basis[i], basis[j]);
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  std::vector<Rat> rhs(d);
  for (std::size_t i = 0; i < d; ++i) rhs[i] = basis[i][0];
  std::vector<Rat> coef = exact_solve(gram, rhs);

  std::vector<Rat> proj(size);
  for (std::size_t i = 0; i < d; ++i) {
    if (coef[i].is_zero()) continue;
    for (std::size_t x = 0; x < size; ++x)
      if (!basis[i][x].is_zero()) proj[x] += coef[i] * basis[i][x];
  }
  if (proj[0].is_zero())
    throw std::logic_error("spherical_from_projector: projection vanishes at the basepoint");

  const int n = g.ambient();
  const int diameter = std::min(level, n - level);
  std::vector<Rat> profile(diameter + 1);
  std::vector<bool> seen(diameter + 1, false);
  for (std::size_t x = 0; x < size; ++x) {
    int j = g.distance(level, 0, x);
    Rat val = proj[x] / proj[0];
    if (!seen[j]) {
      profile[j] = val;
      seen[j] = true;
    } else if (profile[j] != val) {
      throw std::logic_error("spherical_from_projector: projection is not radial");
    }
  }
  for (bool b : seen)
    if (!b) throw std::logic_error("spherical_from_projector: empty distance sphere");
  return profile;
}

bool certify_injective(const RatMatrix& m) {
  return exact_rank(m) == static_cast<int>(m.cols());
}

DecompositionReport decomposition_report(const Geometry& g, int s) {
  const int n = g.ambient();
  if (s < 0 || s > n) throw std::invalid_argument("decomposition_report: level out of range");
  const bool dual = 2 * s > n;
  const int sp = dual ? n - s : s;

  DecompositionReport rep;
  rep.family = g.family();
  rep.n = n;
  rep.q = g.q();
  rep.s = sp;
  rep.level = dual ? n - sp : sp;
  rep.dual = dual;

  Decomposition dec = dual ? decompose_dual_level(g, sp) : decompose_level(g, sp);
  RatMatrix m1 = build_averaging(g, dec.level, 1);
  for (const auto& c : dec.components) {
    ComponentReport cr;
    cr.t = c.t;
    cr.dimension = c.basis.size();
    cr.m1_eigenvalue = eigenvalue_on_component(m1, c.basis);
    cr.spherical = spherical_from_projector(g, dec.level, c.basis);
    rep.components.push_back(std::move(cr));
  }

  if (!dual) {
    for (int t = 0; t < sp; ++t)
      rep.injectivity.emplace_back("R_" + std::to_string(t),
                                   certify_injective(build_radon(g, t)));
  } else {
    for (int t = 1; t <= sp; ++t)
      rep.injectivity.emplace_back("R*_" + std::to_string(n - t),
                                   certify_injective(build_adjoint(build_radon(g, n - t))));
  }
  return rep;
}

std::string DecompositionReport::to_json() const {
  std::ostringstream os;
  os << "{\"family\":\"" << (family == LevelRef::Family::subset ? "subset" : "subspace") << "\"";
  os << ",\"n\":" << n;
  if (q > 0) os << ",\"q\":" << q;
  os << ",\"s\":" << s << ",\"level\":" << level << ",\"dual\":" << (dual ? "true" : "false");
  os << ",\"components\":[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (i) os << ",";
    os << "{\"t\":" << c.t << ",\"dimension\":" << c.dimension << ",\"m1_eigenvalue\":\""
       << c.m1_eigenvalue.str() << "\",\"spherical\":[";
    for (std::size_t j = 0; j < c.spherical.size(); ++j) {
      if (j) os << ",";
      os << "\"" << c.spherical[j].str() << "\"";
    }
    os << "]}";
  }
  os << "],\"injectivity\":[";
  for (std::size_t i = 0; i < injectivity.size(); ++i) {
    if (i) os << ",";
    os << "{\"operator\":\"" << injectivity[i].first << "\",\"injective\":"
       << (injectivity[i].second ? "true" : "false") << "}";
  }
  os << "]}";
  return os.str();
}

std::string DecompositionReport::to_csv() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : components) width = std::max(width, c.spherical.size());
  os << "t,dimension,m1_eigenvalue";
  for (std::size_t j = 0; j < width; ++j) os << ",j=" << j;
  os << "\n";
  for (const auto& c : components) {
    os << c.t << "," << c.dimension << "," << c.m1_eigenvalue.str();
    for (std::size_t j = 0; j < width; ++j)
      os << "," << (j < c.spherical.size() ? c.spherical[j].str() : "");
    os << "\n";
  }
  return os.str();
}

}  // namespace radon
