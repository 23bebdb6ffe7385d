#include "qsing/singularity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "qsing/errors.hpp"

namespace qsing {

namespace {

Rational dot(const std::vector<int>& g, const std::vector<Rational>& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) s += Rational(g[i]) * z[i];
  return s;
}

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

bool integral(const Rational& q) { return q.get_den() == 1; }

bool integral(const Affine& a) { return a.has_integer_coefficients(); }

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

void split_c(const std::vector<int>& c, std::vector<int>& plus, std::vector<int>& minus) {
  plus.assign(c.size(), 0);
  minus.assign(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) (c[i] > 0 ? plus : minus)[i] = c[i];
}

void require_sum_one(const std::vector<int>& c, int r) {
  if (static_cast<int>(c.size()) != r) throw DimensionMismatch("generator index has the wrong length");
  if (std::accumulate(c.begin(), c.end(), 0L) != 1) throw InvalidInput("generator index must satisfy e.c = 1");
}

// ---- r = 2: vanishing conditions along the line c(t) ----

struct LinCond {
  Rational p, q;  // p t + q >= 0
};

std::optional<ParamInterval> solve_conditions(const std::vector<LinCond>& conds, ParamInterval base) {
  for (const auto& c : conds) {
    int s = sgn(c.p);
    if (s == 0) {
      if (sgn(c.q) < 0) return std::nullopt;
      continue;
    }
    Rational x = -c.q / c.p;
    if (s > 0) {
      Integer lo = ceil_q(x);
      if (!base.lo || *base.lo < lo) base.lo = lo;
    } else {
      Integer hi = floor_q(x);
      if (!base.hi || *base.hi > hi) base.hi = hi;
    }
  }
  if (base.lo && base.hi && *base.lo > *base.hi) return std::nullopt;
  return base;
}

// Smallest t >= start not in any interval; nullopt if [start, inf) is covered.
std::optional<Integer> first_uncovered(const std::vector<ParamInterval>& ivs, Integer start) {
  Integer cur = start;
  for (;;) {
    bool found = false, unbounded = false;
    Integer best;
    for (const auto& iv : ivs) {
      if (iv.lo && *iv.lo > cur) continue;
      if (iv.hi && *iv.hi < cur) continue;
      if (!iv.hi) {
        unbounded = true;
        break;
      }
      if (!found || *iv.hi > best) best = *iv.hi;
      found = true;
    }
    if (unbounded) return std::nullopt;
    if (!found) return cur;
    cur = best + 1;
  }
}

struct Regime {
  std::vector<int> p0, p1, m0, m1;  // c+ = p0 + t p1, c- = m0 + t m1
  ParamInterval range;
};

std::vector<Regime> line_regimes() {
  Regime a{{0, 0}, {1, 0}, {0, 1}, {0, -1}, ParamInterval{Integer(1), std::nullopt}};
  Regime b{{0, 1}, {0, -1}, {0, 0}, {1, 0}, ParamInterval{std::nullopt, Integer(0)}};
  return {a, b};
}

std::vector<ParamInterval> vanishing_intervals(const BFunctionFamily& f, const Regime& g,
                                               const std::vector<Rational>& z) {
  std::vector<ParamInterval> out;
  for (const auto& term : f.terms()) {
    if (term.b <= term.a) continue;
    Rational w = dot(term.gamma, z);
    if (!integral(w)) continue;
    long gp0 = dot(term.gamma, g.p0), gp1 = dot(term.gamma, g.p1);
    long gm0 = dot(term.gamma, g.m0), gm1 = dot(term.gamma, g.m1);
    std::vector<LinCond> conds{
        {Rational(gp1), Rational(gp0 - 1)},
        {Rational(-gm1), -w - gm0 - term.a - 1},
        {Rational(gp1 + gm1), Rational(term.b - 1 + gp0 + gm0) + w},
    };
    if (auto iv = solve_conditions(conds, g.range)) out.push_back(*iv);
  }
  for (int i = 0; i < 2; ++i) {
    if (!integral(z[i]) || sgn(z[i]) < 0) continue;
    int c0 = g.p0[i] + g.m0[i], d = g.p1[i] + g.m1[i];
    std::vector<LinCond> conds{{Rational(-d), Rational(-c0 - 1) - z[i]}};
    if (auto iv = solve_conditions(conds, g.range)) out.push_back(*iv);
  }
  return out;
}

Membership membership_line(const BFunctionFamily& f, const std::vector<Rational>& z) {
  Membership m;
  m.exact = true;
  std::ostringstream proof;
  for (const auto& g : line_regimes()) {
    auto ivs = vanishing_intervals(f, g, z);
    std::optional<Integer> gap;
    if (g.range.lo) {
      gap = first_uncovered(ivs, *g.range.lo);
    } else {
      std::vector<ParamInterval> neg;
      for (const auto& iv : ivs) {
        ParamInterval n;
        if (iv.hi) n.lo = Integer(-*iv.hi);
        if (iv.lo) n.hi = Integer(-*iv.lo);
        neg.push_back(n);
      }
      if (auto u = first_uncovered(neg, Integer(-*g.range.hi))) gap = Integer(-*u);
    }
    if (gap) {
      int t = static_cast<int>(gap->get_si());
      m.kind = Membership::Kind::NonMember;
      m.witness_c = {t, 1 - t};
      m.cover.clear();
      m.proof = "b_c does not vanish for c = (" + std::to_string(t) + "," + std::to_string(1 - t) + ")";
      return m;
    }
    for (const auto& iv : ivs) m.cover.push_back(iv);
  }
  m.kind = Membership::Kind::Member;
  proof << "every c = (t,1-t) lies in one of " << m.cover.size() << " vanishing intervals";
  m.proof = proof.str();
  return m;
}

// Each coordinate is a root of a unit bracket at depth one, so every b_c vanishes.
bool unit_cover(const BFunctionFamily& f, const std::vector<Rational>& z) {
  for (int i = 0; i < f.r(); ++i) {
    bool hit = false;
    for (const auto& t : f.terms()) {
      bool unit = true;
      for (int k = 0; k < f.r(); ++k) unit = unit && t.gamma[k] == (k == i ? 1 : 0);
      if (!unit || !integral(z[i])) continue;
      Rational v = -z[i];
      if (v >= t.a + 1 && v <= t.b) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::vector<int>> box_indices(int r, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(r, 0);
  std::function<void(int, int)> rec = [&](int k, int sum) {
    if (k == r - 1) {
      int last = 1 - sum;
      if (last < -bound || last > bound) return;
      c[k] = last;
      out.push_back(c);
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      c[k] = v;
      rec(k + 1, sum + v);
    }
  };
  if (r > 0) rec(0, 0);
  auto norm = [](const std::vector<int>& x) {
    long s = 0;
    for (int v : x) s += std::abs(v);
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    long nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    return x > y;
  });
  return out;
}

// ---- symbolic case tree ----

struct SymTerm {
  Gamma gamma;
  Affine a;
  int len = 0;
};

std::vector<SymTerm> node_terms(const BFunctionFamily& f, const std::vector<std::optional<Affine>>& values) {
  std::vector<SymTerm> out;
  for (const auto& t : f.terms()) {
    SymTerm s{t.gamma, Affine(t.a), t.b - t.a};
    bool live = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] && s.gamma[i] != 0) {
        s.a += *values[i] * Rational(s.gamma[i]);
        s.gamma[i] = 0;
      }
      live = live || s.gamma[i] != 0;
    }
    if (!live || s.len <= 0) continue;
    s.a.trim();
    out.push_back(std::move(s));
  }
  return out;
}

int unit_var(const SymTerm& t) {
  int var = -1;
  for (std::size_t i = 0; i < t.gamma.size(); ++i) {
    if (t.gamma[i] == 0) continue;
    if (t.gamma[i] != 1 || var >= 0) return -1;
    var = static_cast<int>(i);
  }
  return var;
}

std::vector<int> remaining_vars(const CaseNode& n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n.values.size(); ++i)
    if (!n.values[i]) out.push_back(static_cast<int>(i));
  return out;
}

void add_constraint(std::vector<Affine>& cs, Affine g) {
  g.trim();
  if (g.is_constant() && sgn(g.constant) >= 0) return;
  cs.push_back(std::move(g));
}

CaseNode make_child(const CaseNode& parent, int var, const Affine& value, bool new_param,
                    const std::vector<Exclusion>& extra) {
  CaseNode c;
  c.values = parent.values;
  Affine v = value;
  v.trim();
  c.values[var] = v;
  c.params = parent.params + (new_param ? 1 : 0);
  c.constraints = parent.constraints;
  if (new_param) add_constraint(c.constraints, Affine::variable(parent.params));
  std::vector<Exclusion> all = parent.exclusions;
  all.insert(all.end(), extra.begin(), extra.end());
  for (auto& e : all) {
    if (e.var != var) {
      c.exclusions.push_back(e);
      continue;
    }
    if (!integral(v)) continue;
    if (e.hi && !e.lo && integral(*e.hi)) add_constraint(c.constraints, v - *e.hi - Affine(1));
    if (e.lo && !e.hi && integral(*e.lo)) add_constraint(c.constraints, *e.lo - Affine(1) - v);
    if (!e.lo && !e.hi) add_constraint(c.constraints, Affine(-1));
  }
  return c;
}

std::optional<BoundCertificate> lower(const CaseNode& n, const Affine& f) {
  return LinearSystem(n.constraints).lower_bound(f);
}

Affine fixed_sum(const CaseNode& n) {
  Affine s;
  for (const auto& v : n.values)
    if (v) s += *v;
  return s;
}

// Solves sum_k u_k gamma_k = e on the remaining rows, u >= 0, maximizing the certified bound.
std::optional<ReducATuple> best_weights(const CaseNode& n, const std::vector<SymTerm>& terms,
                                        const std::vector<int>& tuple, const std::vector<int>& rows, int r) {
  std::vector<int> distinct = tuple;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Affine base = -fixed_sum(n) - Affine(r);
  std::optional<ReducATuple> best;
  const std::size_t k = distinct.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> sup;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) sup.push_back(distinct[j]);
    if (sup.size() > rows.size()) continue;
    Matrix a(rows.size(), sup.size());
    for (std::size_t x = 0; x < rows.size(); ++x)
      for (std::size_t j = 0; j < sup.size(); ++j) a(x, j) = terms[sup[j]].gamma[rows[x]];
    Matrix at = a.transpose();
    auto inv = (at * a).inverse();
    if (!inv) continue;
    Matrix e(rows.size(), 1);
    for (std::size_t x = 0; x < rows.size(); ++x) e(x, 0) = 1;
    Matrix u = *inv * (at * e);
    if (!(a * u == e)) continue;
    bool nonneg = true;
    for (std::size_t j = 0; j < sup.size(); ++j) nonneg = nonneg && sgn(u(j, 0)) >= 0;
    if (!nonneg) continue;
    Affine obj = base;
    std::vector<Rational> uv;
    for (std::size_t j = 0; j < sup.size(); ++j) {
      uv.push_back(u(j, 0));
      obj += (terms[sup[j]].a + Affine(1)) * u(j, 0);
    }
    auto cert = lower(n, obj);
    if (!cert || sgn(cert->bound) <= 0) continue;
    if (!best || cert->bound > best->bound.bound) best = ReducATuple{tuple, sup, uv, *cert};
  }
  return best;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& items, std::size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      cur.push_back(items[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> cartesian(const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& s : sets) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int x : s) {
        auto p = prefix;
        p.push_back(x);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<int> gamma_list(const std::vector<SymTerm>& terms) {
  std::vector<int> out;
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (unit_var(terms[k]) < 0) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> gamma_i(const std::vector<SymTerm>& terms, int i) {
  std::vector<int> out;
  for (int k : gamma_list(terms))
    if (terms[k].gamma[i] > 0) out.push_back(k);
  return out;
}

std::vector<int> units_of(const std::vector<SymTerm>& terms, int i) {
  std::vector<int> out;
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (unit_var(terms[k]) == i) out.push_back(static_cast<int>(k));
  return out;
}

constexpr std::size_t kMaxTuples = 20000;

bool try_reduc_a(CaseNode& n, const std::vector<SymTerm>& terms, const std::vector<int>& rem, int r,
                 const std::vector<int>* only = nullptr, std::vector<int>* failing = nullptr) {
  for (std::size_t size = 1; size <= rem.size(); ++size) {
    for (const auto& I : subsets_of_size(rem, size)) {
      if (only && I != *only) continue;
      std::vector<std::vector<int>> sets;
      std::size_t count = 1;
      for (int i : I) {
        sets.push_back(gamma_i(terms, i));
        count *= sets.back().size();
      }
      if (count > kMaxTuples) continue;
      std::vector<ReducATuple> certs;
      bool ok = true;
      for (const auto& tuple : cartesian(sets)) {
        auto w = best_weights(n, terms, tuple, rem, r);
        if (!w) {
          ok = false;
          if (failing) *failing = tuple;
          break;
        }
        certs.push_back(*w);
      }
      if (!ok) continue;
      n.rule = CaseRule::ReducA;
      n.vars = I;
      n.tuples = std::move(certs);
      std::vector<Exclusion> carried;
      for (int i : I) {
        for (int k : units_of(terms, i))
          for (int t = 1; t <= terms[k].len; ++t)
            n.children.push_back(make_child(n, i, -(terms[k].a + Affine(t)), false, carried));
        for (int k : units_of(terms, i))
          carried.push_back(Exclusion{i, -(terms[k].a + Affine(terms[k].len)), -(terms[k].a + Affine(1))});
      }
      return true;
    }
  }
  return false;
}

// Farkas vector c on the free coordinates: c.gamma <= 0 on Gamma and c.e >= 1.
std::optional<std::vector<Rational>> farkas(const std::vector<SymTerm>& terms, const std::vector<int>& gl,
                                            const std::vector<int>& free, int r) {
  std::vector<Affine> rows;
  for (int k : gl) {
    Affine g;
    for (std::size_t x = 0; x < free.size(); ++x) g -= Affine::variable(x) * Rational(terms[k].gamma[free[x]]);
    rows.push_back(g);
  }
  Affine s(-1);
  for (std::size_t x = 0; x < free.size(); ++x) s += Affine::variable(x);
  rows.push_back(s);
  auto p = LinearSystem(rows).find_point(free.size());
  if (!p) return std::nullopt;
  std::vector<Rational> c(r, 0);
  for (std::size_t x = 0; x < free.size(); ++x) c[free[x]] = (*p)[x];
  return c;
}

// lambda >= 0 and t with sum lambda gamma + t e^i = e on the free coordinates.
std::optional<ConeMembership> cone_member(const std::vector<SymTerm>& terms, const std::vector<int>& gl,
                                          const std::vector<int>& free, int i) {
  const std::size_t nv = gl.size() + 1;
  std::vector<Affine> rows;
  for (std::size_t k = 0; k < gl.size(); ++k) rows.push_back(Affine::variable(k));
  for (int x : free) {
    Affine eq(-1);
    for (std::size_t k = 0; k < gl.size(); ++k) eq += Affine::variable(k) * Rational(terms[gl[k]].gamma[x]);
    if (x == i) eq += Affine::variable(gl.size());
    rows.push_back(eq);
    rows.push_back(-eq);
  }
  auto p = LinearSystem(rows).find_point(nv);
  if (!p) return std::nullopt;
  ConeMembership m;
  m.var = i;
  m.lambda.assign(p->begin(), p->begin() + static_cast<long>(gl.size()));
  m.t = p->back();
  return m;
}

struct ReducBData {
  std::vector<int> J, jp, jm;
  std::vector<Rational> farkas;
  std::vector<ConeMembership> members;
};

std::optional<ReducBData> find_reduc_b(const std::vector<SymTerm>& terms, const std::vector<int>& rem, int r) {
  auto gl = gamma_list(terms);
  for (std::size_t size = rem.size(); size-- > 0;) {
    for (const auto& J : subsets_of_size(rem, size)) {
      std::vector<int> free;
      for (int x : rem)
        if (!std::count(J.begin(), J.end(), x)) free.push_back(x);
      auto c = farkas(terms, gl, free, r);
      if (!c) continue;
      ReducBData d{J, {}, {}, *c, {}};
      for (int i : free) {
        auto m = cone_member(terms, gl, free, i);
        if (!m || sgn(m->t) == 0) throw InternalError("cone membership failed for a maximal J");
        (sgn(m->t) > 0 ? d.jp : d.jm).push_back(i);
        d.members.push_back(*m);
      }
      return d;
    }
  }
  return std::nullopt;
}

void apply_reduc_b(CaseNode& n, const std::vector<SymTerm>& terms, ReducBData d) {
  n.rule = CaseRule::ReducB;
  n.vars = d.J;
  n.j_plus = d.jp;
  n.j_minus = d.jm;
  n.farkas = d.farkas;
  n.memberships = d.members;
  std::vector<Exclusion> carried;
  const Affine p = Affine::variable(n.params);
  for (const auto& m : d.members) {
    int i = m.var;
    if (sgn(m.t) > 0) {
      for (int k : units_of(terms, i)) {
        n.children.push_back(make_child(n, i, -(terms[k].a + Affine(1)) - p, true, carried));
        carried.push_back(Exclusion{i, std::nullopt, -(terms[k].a + Affine(1))});
      }
    } else {
      n.children.push_back(make_child(n, i, p, true, carried));
      carried.push_back(Exclusion{i, Affine(0), std::nullopt});
    }
  }
}

bool try_closure(CaseNode& n, const std::vector<SymTerm>& terms, const std::vector<int>& rem) {
  for (int i : rem) {
    if (!gamma_i(terms, i).empty()) continue;
    std::vector<ClosureWitness> ws;
    bool all = true;
    for (int k : units_of(terms, i)) {
      for (int t = 1; t <= terms[k].len && all; ++t) {
        Affine w = -(terms[k].a + Affine(t));
        bool hit = false;
        if (integral(w)) {
          for (std::size_t e = 0; e < n.exclusions.size() && !hit; ++e) {
            const auto& ex = n.exclusions[e];
            if (ex.var != i) continue;
            ClosureWitness cw{k, t, static_cast<int>(e), std::nullopt, std::nullopt};
            if (ex.lo) {
              auto b = lower(n, w - *ex.lo);
              if (!b || sgn(b->bound) < 0) continue;
              cw.above_lo = *b;
            }
            if (ex.hi) {
              auto b = lower(n, *ex.hi - w);
              if (!b || sgn(b->bound) < 0) continue;
              cw.below_hi = *b;
            }
            ws.push_back(cw);
            hit = true;
          }
        }
        all = hit;
      }
      if (!all) break;
    }
    if (!all) continue;
    n.rule = CaseRule::Closed;
    n.vars = {i};
    n.closure = std::move(ws);
    return true;
  }
  return false;
}

bool try_good(CaseNode& n, int r) {
  std::vector<BoundCertificate> per;
  for (const auto& v : n.values) {
    auto b = lower(n, -*v - Affine(1));
    if (!b || sgn(b->bound) < 0) break;
    per.push_back(*b);
  }
  if (per.size() == n.values.size()) {
    n.rule = CaseRule::Good;
    n.bounds = std::move(per);
    n.strict_sum = false;
    return true;
  }
  auto b = lower(n, -fixed_sum(n) - Affine(r));
  if (b && sgn(b->bound) > 0) {
    n.rule = CaseRule::Good;
    n.bounds = {*b};
    n.strict_sum = true;
    return true;
  }
  return false;
}

void factor_analysis(CaseNode& n, const std::vector<SymTerm>& terms, int x) {
  n.rule = CaseRule::FactorAnalysis;
  n.vars = {x};
  std::vector<Affine> seen;
  for (const auto& t : terms) {
    int g = t.gamma[x];
    for (int q = 1; q <= t.len + g - 1; ++q) {
      Affine v = (t.a + Affine(q)) * Rational(-1, g);
      v.trim();
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      n.children.push_back(make_child(n, x, v, false, {}));
    }
  }
}

void build(CaseNode& n, const BFunctionFamily& f, int depth, int depth_bound) {
  const int r = f.r();
  if (!n.constraints.empty()) {
    if (auto c = LinearSystem(n.constraints).infeasibility()) {
      n.rule = CaseRule::Infeasible;
      n.infeasible = *c;
      return;
    }
  }
  auto terms = node_terms(f, n.values);
  auto rem = remaining_vars(n);
  if (rem.empty()) {
    if (!try_good(n, r)) {
      n.rule = CaseRule::Inconclusive;
      n.note = "e.z <= -r not provable at this point";
    }
    return;
  }
  if (try_closure(n, terms, rem)) return;
  if (depth >= depth_bound) {
    n.rule = CaseRule::Inconclusive;
    n.note = "depth bound reached";
    return;
  }
  if (rem.size() == 1) {
    factor_analysis(n, terms, rem[0]);
  } else if (!try_reduc_a(n, terms, rem, r)) {
    auto d = find_reduc_b(terms, rem, r);
    if (!d) {
      n.rule = CaseRule::Inconclusive;
      n.note = "no reduction applies";
      return;
    }
    apply_reduc_b(n, terms, std::move(*d));
  }
  for (auto& c : n.children) build(c, f, depth + 1, depth_bound);
}

CaseNode root_node(int r) {
  CaseNode n;
  n.values.assign(r, std::nullopt);
  return n;
}

std::vector<std::vector<Rational>> roots_one_variable(const BFunctionFamily& f) {
  std::vector<std::vector<Rational>> out;
  for (const auto& lf : generator_bc(f, {1}).factors) out.push_back({-lf.constant / lf.gamma[0]});
  return out;
}

}  // namespace

std::string to_string(Membership::Kind k) {
  switch (k) {
    case Membership::Kind::Member: return "member";
    case Membership::Kind::NonMember: return "non-member";
    case Membership::Kind::UnknownBeyondBox: return "unknown-beyond-box";
  }
  return "?";
}

std::string to_string(CaseRule r) {
  switch (r) {
    case CaseRule::ReducA: return "reduc-a";
    case CaseRule::ReducB: return "reduc-b";
    case CaseRule::FactorAnalysis: return "factor-analysis";
    case CaseRule::Good: return "good";
    case CaseRule::Closed: return "closed";
    case CaseRule::Infeasible: return "infeasible";
    case CaseRule::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(CertifyResult::Kind k) {
  switch (k) {
    case CertifyResult::Kind::Certificate: return "certificate";
    case CertifyResult::Kind::Inconclusive: return "inconclusive";
    case CertifyResult::Kind::Refuted: return "refuted";
  }
  return "?";
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::RationalSingularities: return "rational-singularities";
    case VerdictKind::NotCertified: return "not-certified";
    case VerdictKind::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::size_t CaseNode::size() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.size();
  return s;
}

std::size_t CaseNode::open_leaves() const {
  if (rule == CaseRule::Inconclusive) return 1;
  std::size_t s = 0;
  for (const auto& c : children) s += c.open_leaves();
  return s;
}

GeneratorBc generator_bc(const BFunctionFamily& f, const std::vector<int>& c) {
  require_sum_one(c, f.r());
  GeneratorBc g;
  g.c = c;
  std::vector<int> plus, minus;
  split_c(c, plus, minus);
  g.factors = expand(f, plus);
  for (auto& lf : g.factors)
    for (int i = 0; i < f.r(); ++i) lf.constant += lf.gamma[i] * minus[i];
  std::sort(g.factors.begin(), g.factors.end());
  for (int i = 0; i < f.r(); ++i)
    if (c[i] < 0) g.binomial_factors.emplace_back(i, -c[i]);
  return g;
}

Rational evaluate_generator(const GeneratorBc& g, const std::vector<Rational>& z) {
  Rational v = 1;
  for (const auto& lf : g.factors) {
    Rational x = lf.constant;
    for (std::size_t i = 0; i < z.size(); ++i) x += lf.gamma[i] * z[i];
    v *= x;
  }
  for (auto [i, k] : g.binomial_factors) {
    Rational b = 1;
    for (int j = 0; j < k; ++j) b *= (z[i] - j) / Rational(j + 1);
    v *= b;
  }
  return v;
}

bool generator_vanishes(const BFunctionFamily& f, const std::vector<int>& c, const std::vector<Rational>& z) {
  require_sum_one(c, f.r());
  std::vector<int> plus, minus;
  split_c(c, plus, minus);
  for (const auto& t : f.terms()) {
    long d = dot(t.gamma, plus);
    if (d < 1 || t.b <= t.a) continue;
    Rational v = -dot(t.gamma, z) - dot(t.gamma, minus);
    if (integral(v) && v >= t.a + 1 && v <= t.b + d - 1) return true;
  }
  for (int i = 0; i < f.r(); ++i)
    if (c[i] < 0 && integral(z[i]) && sgn(z[i]) >= 0 && z[i] <= -c[i] - 1) return true;
  return false;
}

bool is_good(const std::vector<Rational>& z, int r) {
  Rational s = 0;
  bool minus_e = static_cast<int>(z.size()) == r;
  for (const auto& x : z) {
    s += x;
    minus_e = minus_e && x == -1;
  }
  return minus_e || s < -r;
}

Membership membership_in_ztilde(const BFunctionFamily& f, const std::vector<Rational>& z, int box_bound) {
  const int r = f.r();
  if (static_cast<int>(z.size()) != r) throw DimensionMismatch("point has the wrong length");
  Membership m;
  if (r == 1) {
    m.exact = true;
    if (generator_vanishes(f, {1}, z)) {
      m.kind = Membership::Kind::Member;
      m.proof = "z is a root of b(s)";
    } else {
      m.kind = Membership::Kind::NonMember;
      m.witness_c = {1};
      m.proof = "z is not a root of b(s)";
    }
    return m;
  }
  if (r == 2) return membership_line(f, z);
  if (unit_cover(f, z)) {
    m.kind = Membership::Kind::Member;
    m.exact = true;
    m.proof = "each z_i is a root of a unit bracket at depth one";
    return m;
  }
  for (const auto& c : box_indices(r, box_bound)) {
    if (!generator_vanishes(f, c, z)) {
      m.kind = Membership::Kind::NonMember;
      m.exact = true;
      m.witness_c = c;
      m.proof = "b_c does not vanish at z";
      return m;
    }
  }
  m.kind = Membership::Kind::UnknownBeyondBox;
  m.proof = "every b_c with |c_i| <= " + std::to_string(box_bound) + " vanishes";
  return m;
}

ReducAResult reduc_a(const BFunctionFamily& f, const std::vector<int>& I) {
  CaseNode n = root_node(f.r());
  std::vector<int> idx;
  for (int i : I) {
    if (i < 1 || i > f.r()) throw InvalidInput("variable index out of range");
    idx.push_back(i - 1);
  }
  std::sort(idx.begin(), idx.end());
  auto terms = node_terms(f, n.values);
  ReducAResult res;
  std::vector<int> failing;
  res.applies = try_reduc_a(n, terms, remaining_vars(n), f.r(), &idx, &failing);
  if (res.applies) {
    res.certificates = n.tuples;
  } else {
    res.failing_tuple = failing;
  }
  return res;
}

ReducBResult reduc_b(const BFunctionFamily& f, const std::vector<int>& fixed) {
  CaseNode n = root_node(f.r());
  for (int i : fixed) n.values.at(i) = Affine(0);
  // Fixed coordinates only shift constants, which the cone test ignores.
  auto terms = node_terms(f, n.values);
  ReducBResult res;
  auto d = find_reduc_b(terms, remaining_vars(n), f.r());
  if (!d) return res;
  res.applicable = true;
  res.J = d->J;
  res.j_plus = d->jp;
  res.j_minus = d->jm;
  res.farkas = d->farkas;
  res.memberships = d->members;
  return res;
}

std::vector<std::vector<Rational>> refutation_candidates(const BFunctionFamily& f, int box_bound) {
  const int r = f.r();
  std::vector<std::vector<Rational>> out;
  if (r == 1) {
    for (auto& z : roots_one_variable(f))
      if (!is_good(z, 1) && std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  } else if (r == 2) {
    // Lines a.z = b from the generators in the box, then pairwise intersections.
    std::set<std::pair<std::vector<Rational>, Rational>> lines;
    for (int t = -box_bound; t <= box_bound; ++t) {
      auto g = generator_bc(f, {t, 1 - t});
      for (const auto& lf : g.factors) lines.insert({lf.gamma, -lf.constant});
      for (auto [i, k] : g.binomial_factors)
        for (int v = 0; v < k; ++v) {
          std::vector<Rational> a(2, 0);
          a[i] = 1;
          lines.insert({a, Rational(v)});
        }
    }
    std::vector<std::pair<std::vector<Rational>, Rational>> ls(lines.begin(), lines.end());
    std::set<std::vector<Rational>> pts;
    for (std::size_t x = 0; x < ls.size(); ++x)
      for (std::size_t y = x + 1; y < ls.size(); ++y) {
        const auto& [a, b] = ls[x];
        const auto& [c, d] = ls[y];
        Rational det = a[0] * c[1] - a[1] * c[0];
        if (sgn(det) == 0) continue;
        std::vector<Rational> z{(b * c[1] - a[1] * d) / det, (a[0] * d - b * c[0]) / det};
        if (!is_good(z, 2)) pts.insert(z);
      }
    for (const auto& z : pts) {
      bool ok = true;
      for (int t = -box_bound; t <= box_bound && ok; ++t) ok = generator_vanishes(f, {t, 1 - t}, z);
      if (ok && membership_line(f, z).kind == Membership::Kind::Member) out.push_back(z);
    }
  }
  auto esum = [](const std::vector<Rational>& z) {
    Rational s = 0;
    for (const auto& x : z) s += x;
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    Rational sx = esum(x), sy = esum(y);
    if (sx != sy) return sx > sy;
    return x > y;
  });
  return out;
}

CertifyResult certify_all_good(const BFunctionFamily& f, int depth_bound, int box_bound) {
  CertifyResult res;
  res.certificate.family = f;
  res.certificate.root = root_node(f.r());
  build(res.certificate.root, f, 0, depth_bound);
  std::size_t open = res.certificate.root.open_leaves();
  if (open == 0) {
    res.kind = CertifyResult::Kind::Certificate;
    res.reason = "every branch closes";
    return res;
  }
  auto refuted = refutation_candidates(f, box_bound);
  if (!refuted.empty()) {
    res.kind = CertifyResult::Kind::Refuted;
    res.witness = refuted.front();
    res.reason = "Z(B~) contains a point that is not good";
    return res;
  }
  res.kind = CertifyResult::Kind::Inconclusive;
  res.reason = std::to_string(open) + " open branch(es) remain";
  return res;
}

bool check_form_assumption(const BFunctionFamily& f) {
  for (const auto& t : f.terms()) {
    int s = 0, nz = 0;
    for (int g : t.gamma) {
      s += g;
      nz += g != 0;
    }
    if (s == 1 && nz == 1) continue;
    if (s > t.a) return false;
  }
  return true;
}

std::vector<std::pair<Rational, int>> bfunction_roots(const BFunctionFamily& f) {
  if (f.r() != 1) throw InvalidInput("roots are defined for one-variable b-functions");
  std::map<Rational, int> count;
  for (const auto& z : roots_one_variable(f)) count[z[0]]++;
  std::vector<std::pair<Rational, int>> out(count.rbegin(), count.rend());
  return out;
}

Verdict rational_singularities_verdict(const Quiver& q, const DimVector& alpha, const std::vector<int>& selected,
                                       const VerdictOptions& opts) {
  Verdict v;
  auto spec = ZeroSetSpec::make(q, alpha, selected);
  std::vector<DimVector> simples;
  for (int k : spec.selected) simples.push_back(spec.perp.simples[k - 1]);
  v.r = static_cast<int>(simples.size());
  if (v.r == 0) {
    v.reason = "no semi-invariants are selected";
    return v;
  }
  v.family = compute_bfunction(q, alpha, simples);
  v.form_assumption = check_form_assumption(v.family);

  if (v.r == 1) {
    auto roots = bfunction_roots(v.family);
    v.largest_root = roots.front().first;
    v.largest_root_multiplicity = roots.front().second;
    v.complete_intersection = true;
    auto cert = certify_all_good(v.family, opts.depth_bound, opts.box_bound);
    if (cert.kind == CertifyResult::Kind::Certificate) v.certificate = cert.certificate;
    if (cert.kind == CertifyResult::Kind::Refuted) v.witness = cert.witness;
    if (*v.largest_root == -1 && v.largest_root_multiplicity == 1) {
      v.kind = VerdictKind::RationalSingularities;
      v.reason = "hypersurface: largest root of b(s) is -1 with multiplicity 1";
    } else {
      v.kind = VerdictKind::NotCertified;
      v.reason = "hypersurface: largest root of b(s) is " + v.largest_root->get_str() + " with multiplicity " +
                 std::to_string(v.largest_root_multiplicity);
    }
    return v;
  }

  auto rep = reducedness_report(spec);
  v.reducedness = rep;
  v.complete_intersection = rep.ci;
  if (rep.verdict != ReducednessReport::Verdict::Reduced || !rep.ci) {
    v.kind = VerdictKind::NotApplicable;
    v.reason = "zero set is not known to be a reduced complete intersection (" + to_string(rep.verdict) +
               (rep.ci ? "" : ", not a complete intersection") + ")";
    return v;
  }
  auto cert = certify_all_good(v.family, opts.depth_bound, opts.box_bound);
  std::vector<std::string> why;
  if (cert.kind == CertifyResult::Kind::Certificate) {
    auto check = verify_certificate(cert.certificate);
    if (!check.ok) throw InternalError("certificate rejected by the checker: " + check.error);
    v.certificate = cert.certificate;
  } else if (cert.kind == CertifyResult::Kind::Refuted) {
    v.witness = cert.witness;
    why.push_back("Z(B~) has a point that is not good");
  } else {
    why.push_back("case analysis inconclusive: " + cert.reason);
  }
  if (!v.form_assumption) why.push_back("a non-unit bracket violates e.gamma <= a");
  if (why.empty()) {
    v.kind = VerdictKind::RationalSingularities;
    v.reason = "reduced complete intersection and every point of Z(B~) is good";
  } else {
    v.kind = VerdictKind::NotCertified;
    for (std::size_t k = 0; k < why.size(); ++k) v.reason += (k ? "; " : "") + why[k];
  }
  return v;
}

}  // namespace qsing
