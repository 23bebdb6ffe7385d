#include "qsing/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "qsing/errors.hpp"

namespace qsing {

RepClass::RepClass(std::vector<std::pair<DimVector, int>> p) {
  std::map<DimVector, int, std::greater<>> merged;
  for (auto& [r, k] : p) {
    if (k < 0) throw InvalidInput("negative multiplicity in a class");
    if (k > 0) merged[r] += k;
  }
  parts.assign(merged.begin(), merged.end());
}

DimVector RepClass::total(std::size_t n) const {
  DimVector d(n);
  for (const auto& [r, k] : parts) d += r * k;
  return d;
}

int RepClass::summand_count() const {
  int s = 0;
  for (const auto& p : parts) s += p.second;
  return s;
}

std::string RepClass::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ", ";
    os << parts[i].first.to_string();
    if (parts[i].second != 1) os << '^' << parts[i].second;
  }
  os << '}';
  return os.str();
}

long class_hom(const HomTable& t, const RepClass& x, const RepClass& y) {
  long s = 0;
  for (const auto& [a, ka] : x.parts) {
    const auto i = t.require_index(a);
    for (const auto& [b, kb] : y.parts) s += static_cast<long>(ka) * kb * t.hom(i, t.require_index(b));
  }
  return s;
}

long class_ext(const HomTable& t, const RepClass& x, const RepClass& y) {
  long s = 0;
  for (const auto& [a, ka] : x.parts) {
    const auto i = t.require_index(a);
    for (const auto& [b, kb] : y.parts) s += static_cast<long>(ka) * kb * t.ext(i, t.require_index(b));
  }
  return s;
}

long class_hom(const HomTable& t, const RepClass& x, const DimVector& root) {
  return class_hom(t, x, RepClass({{root, 1}}));
}
long class_hom(const HomTable& t, const DimVector& root, const RepClass& y) {
  return class_hom(t, RepClass({{root, 1}}), y);
}
long class_ext(const HomTable& t, const RepClass& x, const DimVector& root) {
  return class_ext(t, x, RepClass({{root, 1}}));
}
long class_ext(const HomTable& t, const DimVector& root, const RepClass& y) {
  return class_ext(t, RepClass({{root, 1}}), y);
}

RepClass generic_decomposition(const Quiver& q, const DimVector& alpha) {
  require_dynkin(q);
  q.check(alpha);
  if (!alpha.is_nonnegative()) throw InvalidInput("dimension vector has a negative entry");
  const HomTable& t = hom_table(q);
  const auto n = alpha.size();
  std::vector<std::size_t> order(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;  // descending lex
  // Vertices covered by roots at positions >= i of the search order.
  std::vector<std::vector<bool>> covered(order.size() + 1, std::vector<bool>(n, false));
  for (std::size_t i = order.size(); i-- > 0;) {
    covered[i] = covered[i + 1];
    const auto& r = t.roots()[order[i]];
    for (std::size_t x = 0; x < n; ++x)
      if (r[x] > 0) covered[i][x] = true;
  }
  std::vector<std::pair<std::size_t, int>> chosen;
  std::function<bool(std::size_t, DimVector&)> dfs = [&](std::size_t pos, DimVector& rem) -> bool {
    if (rem.is_zero()) return true;
    if (pos == order.size()) return false;
    for (std::size_t x = 0; x < n; ++x)
      if (rem[x] > 0 && !covered[pos][x]) return false;
    const std::size_t ri = order[pos];
    const DimVector& r = t.roots()[ri];
    bool compatible = true;
    for (const auto& [cj, k] : chosen)
      if (t.ext(ri, cj) != 0 || t.ext(cj, ri) != 0) compatible = false;
    if (compatible) {
      int kmax = 1 << 30;
      for (std::size_t x = 0; x < n; ++x)
        if (r[x] > 0) kmax = std::min(kmax, rem[x] / r[x]);
      for (int k = kmax; k >= 1; --k) {
        DimVector next = rem - r * k;
        chosen.emplace_back(ri, k);
        if (dfs(pos + 1, next)) return true;
        chosen.pop_back();
      }
    }
    return dfs(pos + 1, rem);
  };
  DimVector rem = alpha;
  if (!dfs(0, rem)) throw InternalError("no generic decomposition found for " + alpha.to_string());
  std::vector<std::pair<DimVector, int>> parts;
  for (const auto& [ri, k] : chosen) parts.emplace_back(t.roots()[ri], k);
  return RepClass(std::move(parts));
}

bool is_prehomogeneous(const Quiver& q, const DimVector& alpha) {
  q.check(alpha);
  if (classify(q).is_dynkin()) return true;
  const long q_alpha = tits_form(q, alpha);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    Representation v{q, alpha, {}};
    for (const auto& a : q.arrows()) {
      Matrix m(static_cast<std::size_t>(alpha.at(a.head)), static_cast<std::size_t>(alpha.at(a.tail)));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
      v.maps.push_back(std::move(m));
    }
    // dim Ext(V,V) = dim End(V) - <alpha,alpha>; zero means a dense orbit.
    if (hom_dim(v, v) - q_alpha == 0) return true;
  }
  return false;
}

PerpData perp_simples(const Quiver& q, const RepClass& t) {
  const HomTable& table = hom_table(q);
  std::vector<DimVector> perp;
  for (std::size_t b = 0; b < table.size(); ++b) {
    bool ok = true;
    for (const auto& [root, k] : t.parts) {
      const auto i = table.require_index(root);
      if (table.hom(i, b) != 0 || table.ext(i, b) != 0) ok = false;
    }
    if (ok) perp.push_back(table.roots()[b]);
  }
  // sums[v]: v is a sum of one or more elements of perp.
  std::map<DimVector, bool> memo;
  std::function<bool(const DimVector&)> is_sum = [&](const DimVector& v) -> bool {
    if (v.is_zero()) return false;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    bool res = std::find(perp.begin(), perp.end(), v) != perp.end();
    for (std::size_t i = 0; !res && i < perp.size(); ++i)
      if (v.dominates(perp[i]) && v != perp[i]) res = is_sum(v - perp[i]);
    memo[v] = res;
    return res;
  };
  PerpData out;
  for (const auto& b : perp) {
    bool split = false;
    for (const auto& c : perp)
      if (b != c && b.dominates(c) && is_sum(b - c)) split = true;
    if (!split) out.simples.push_back(b);
  }
  std::sort(out.simples.begin(), out.simples.end());
  out.r = q.vertex_count() - static_cast<int>(t.parts.size());
  if (static_cast<int>(out.simples.size()) != out.r)
    throw InternalError("found " + std::to_string(out.simples.size()) + " perpendicular simples, expected " +
                        std::to_string(out.r));
  return out;
}

Representation class_representation(const Quiver& q, const RepClass& x) {
  const HomTable& t = hom_table(q);
  Representation v{q, DimVector(static_cast<std::size_t>(q.vertex_count())), {}};
  for (const auto& a : q.arrows()) v.maps.emplace_back(static_cast<std::size_t>(v.dims.at(a.head)), static_cast<std::size_t>(v.dims.at(a.tail)));
  for (const auto& [root, k] : x.parts)
    for (int i = 0; i < k; ++i) v = direct_sum(v, t.representation(t.require_index(root)));
  return v;
}

Rational evaluate_semiinvariant(const Representation& v, const Representation& s) {
  if (euler_form(v.quiver, v.dims, s.dims) != 0) throw NonSquare("Euler product is nonzero; d^V_S is not square");
  return hom_matrix_dvw(v, s).determinant();
}

long semiinvariant_degree(const Quiver& q, const DimVector& alpha, const DimVector& s) {
  const int n = q.vertex_count();
  if (static_cast<int>(q.arrow_count()) != n - 1 || !q.is_connected())
    throw InvalidInput("semi-invariant degree needs a tree quiver");
  std::vector<std::optional<long>> h(static_cast<std::size_t>(n + 1));
  h[1] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& a : q.arrows()) {
      auto& ht = h[static_cast<std::size_t>(a.tail)];
      auto& hh = h[static_cast<std::size_t>(a.head)];
      if (ht && !hh) hh = *ht + 1, changed = true;
      if (hh && !ht) ht = *hh - 1, changed = true;
    }
  }
  long d = 0;
  for (int x = 1; x <= n; ++x)
    d += *h[static_cast<std::size_t>(x)] * alpha.at(x) * euler_form(q, DimVector::unit(static_cast<std::size_t>(n), x), s);
  if (d < 0) throw InternalError("negative semi-invariant degree");
  return d;
}

}  // namespace qsing
