// Independent re-verification of case certificates. Shares no search code with
// the engine: every node is re-specialized from the family, expected children are
// re-derived from the rule, and every stored bound is re-checked.
#include <algorithm>
#include <sstream>

#include "qsing/singularity.hpp"

namespace qsing {

namespace {

struct Fail {
  std::string msg;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw Fail{msg};
}

struct Bracket {
  std::vector<int> g;  // zero on fixed coordinates
  Affine a;
  int len;
};

class Checker {
 public:
  explicit Checker(const BFunctionFamily& f) : f_(f), r_(f.r()) {}

  void node(const CaseNode& n, const std::string& path) {
    path_ = path;
    expect(static_cast<int>(n.values.size()) == r_, "wrong number of variable slots");
    for (const auto& c : n.constraints) expect(arity(c) <= n.params, "constraint uses an unknown parameter");
    for (const auto& v : n.values)
      if (v) expect(arity(*v) <= n.params, "value uses an unknown parameter");

    auto br = brackets(n);
    std::vector<int> free;
    for (int i = 0; i < r_; ++i)
      if (!n.values[i]) free.push_back(i);

    switch (n.rule) {
      case CaseRule::Infeasible:
        expect(n.infeasible && check_infeasible(n.constraints, *n.infeasible), "infeasibility certificate rejected");
        expect(n.children.empty(), "leaf has children");
        return;
      case CaseRule::Good:
        good(n, free);
        expect(n.children.empty(), "leaf has children");
        return;
      case CaseRule::Closed:
        closed(n, br, free);
        expect(n.children.empty(), "leaf has children");
        return;
      case CaseRule::FactorAnalysis:
        factor(n, br, free);
        break;
      case CaseRule::ReducA:
        reduc_a(n, br, free);
        break;
      case CaseRule::ReducB:
        reduc_b(n, br, free);
        break;
      case CaseRule::Inconclusive:
        throw Fail{"open branch: " + n.note};
    }
    for (std::size_t k = 0; k < n.children.size(); ++k) node(n.children[k], path + "/" + std::to_string(k));
  }

  const std::string& path() const { return path_; }

 private:
  static int arity(const Affine& a) {
    int k = static_cast<int>(a.coeffs.size());
    while (k > 0 && sgn(a.coeffs[k - 1]) == 0) --k;
    return k;
  }

  std::vector<Bracket> brackets(const CaseNode& n) const {
    std::vector<Bracket> out;
    for (const auto& t : f_.terms()) {
      Bracket b{t.gamma, Affine(t.a), t.b - t.a};
      for (int i = 0; i < r_; ++i) {
        if (!n.values[i] || b.g[i] == 0) continue;
        b.a = b.a + *n.values[i] * Rational(b.g[i]);
        b.g[i] = 0;
      }
      if (b.len <= 0 || std::all_of(b.g.begin(), b.g.end(), [](int x) { return x == 0; })) continue;
      b.a.trim();
      out.push_back(b);
    }
    return out;
  }

  static bool is_unit_for(const Bracket& b, int i) {
    for (std::size_t k = 0; k < b.g.size(); ++k)
      if (b.g[k] != (static_cast<int>(k) == i ? 1 : 0)) return false;
    return true;
  }

  static bool is_unit(const Bracket& b) {
    for (std::size_t k = 0; k < b.g.size(); ++k)
      if (b.g[k] != 0) return is_unit_for(b, static_cast<int>(k));
    return false;
  }

  static bool whole(const Affine& a) { return a.has_integer_coefficients(); }

  // Child assumptions implied by setting z_var = value.
  CaseNode derive(const CaseNode& p, int var, Affine value, bool fresh, const std::vector<Exclusion>& extra) const {
    CaseNode c;
    value.trim();
    c.values = p.values;
    c.values[var] = value;
    c.params = p.params + (fresh ? 1 : 0);
    c.constraints = p.constraints;
    auto push = [&](Affine g) {
      g.trim();
      if (g.is_constant() && sgn(g.constant) >= 0) return;
      c.constraints.push_back(g);
    };
    if (fresh) push(Affine::variable(p.params));
    std::vector<Exclusion> ex = p.exclusions;
    ex.insert(ex.end(), extra.begin(), extra.end());
    for (const auto& e : ex) {
      if (e.var != var) {
        c.exclusions.push_back(e);
        continue;
      }
      if (!whole(value)) continue;
      if (!e.lo && !e.hi) push(Affine(-1));
      if (e.hi && !e.lo && whole(*e.hi)) push(value - *e.hi - Affine(1));
      if (e.lo && !e.hi && whole(*e.lo)) push(*e.lo - Affine(1) - value);
    }
    return c;
  }

  static void same_assumptions(const CaseNode& got, const CaseNode& want) {
    expect(got.values == want.values, "child values differ from the rule");
    expect(got.params == want.params, "child parameter count differs");
    expect(got.constraints == want.constraints, "child constraints differ");
    expect(got.exclusions == want.exclusions, "child exclusions differ");
  }

  void children_match(const CaseNode& n, const std::vector<CaseNode>& want) const {
    expect(n.children.size() == want.size(), "wrong number of children");
    for (std::size_t k = 0; k < want.size(); ++k) same_assumptions(n.children[k], want[k]);
  }

  void good(const CaseNode& n, const std::vector<int>& free) const {
    expect(free.empty(), "good leaf with free variables");
    if (n.strict_sum) {
      Affine s = Affine(-r_);
      for (const auto& v : n.values) s = s - *v;
      expect(n.bounds.size() == 1 && sgn(n.bounds[0].bound) > 0, "sum bound must be positive");
      expect(check_bound(n.constraints, s, n.bounds[0]), "sum bound rejected");
      return;
    }
    expect(static_cast<int>(n.bounds.size()) == r_, "need one bound per variable");
    for (int i = 0; i < r_; ++i) {
      expect(sgn(n.bounds[i].bound) >= 0, "coordinate bound must be nonnegative");
      expect(check_bound(n.constraints, -*n.values[i] - Affine(1), n.bounds[i]), "coordinate bound rejected");
    }
  }

  void closed(const CaseNode& n, const std::vector<Bracket>& br, const std::vector<int>& free) const {
    expect(n.vars.size() == 1, "closure names one variable");
    int i = n.vars[0];
    expect(std::count(free.begin(), free.end(), i) == 1, "closed variable is fixed");
    std::size_t w = 0;
    for (std::size_t k = 0; k < br.size(); ++k) {
      if (br[k].g[i] > 0) expect(is_unit_for(br[k], i), "b_{e^i} has a non-unit factor");
      if (!is_unit_for(br[k], i)) continue;
      for (int t = 1; t <= br[k].len; ++t, ++w) {
        expect(w < n.closure.size(), "closure misses a root");
        const auto& cw = n.closure[w];
        expect(cw.term == static_cast<int>(k) && cw.t == t, "closure roots out of order");
        Affine root = -(br[k].a + Affine(t));
        expect(whole(root), "closure root is not integral");
        expect(cw.exclusion >= 0 && cw.exclusion < static_cast<int>(n.exclusions.size()), "bad exclusion index");
        const auto& ex = n.exclusions[cw.exclusion];
        expect(ex.var == i, "exclusion is on another variable");
        if (ex.lo) expect(cw.above_lo && check_bound(n.constraints, root - *ex.lo, *cw.above_lo) &&
                              sgn(cw.above_lo->bound) >= 0,
                          "root below excluded range");
        if (ex.hi) expect(cw.below_hi && check_bound(n.constraints, *ex.hi - root, *cw.below_hi) &&
                              sgn(cw.below_hi->bound) >= 0,
                          "root above excluded range");
      }
    }
    expect(w == n.closure.size(), "extra closure entries");
  }

  void factor(const CaseNode& n, const std::vector<Bracket>& br, const std::vector<int>& free) const {
    expect(free.size() == 1 && n.vars == free, "factor analysis needs exactly one free variable");
    int x = free[0];
    std::vector<CaseNode> want;
    std::vector<Affine> seen;
    for (const auto& b : br) {
      int g = b.g[x];
      expect(g > 0, "bracket without the free variable");
      for (int q = 1; q <= b.len + g - 1; ++q) {
        Affine v = (b.a + Affine(q)) * Rational(-1, g);
        v.trim();
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
        seen.push_back(v);
        want.push_back(derive(n, x, v, false, {}));
      }
    }
    children_match(n, want);
  }

  void reduc_a(const CaseNode& n, const std::vector<Bracket>& br, const std::vector<int>& free) const {
    const auto& I = n.vars;
    expect(!I.empty() && std::is_sorted(I.begin(), I.end()), "I must be sorted and nonempty");
    for (int i : I) expect(std::count(free.begin(), free.end(), i) == 1, "I contains a fixed variable");
    std::vector<std::vector<int>> sets;
    for (int i : I) {
      std::vector<int> s;
      for (std::size_t k = 0; k < br.size(); ++k)
        if (!is_unit(br[k]) && br[k].g[i] > 0) s.push_back(static_cast<int>(k));
      sets.push_back(s);
    }
    std::vector<std::vector<int>> tuples{{}};
    for (const auto& s : sets) {
      std::vector<std::vector<int>> next;
      for (const auto& p : tuples)
        for (int x : s) {
          auto q = p;
          q.push_back(x);
          next.push_back(q);
        }
      tuples = next;
    }
    expect(tuples.size() == n.tuples.size(), "tuple count differs");
    Affine fixed;
    for (const auto& v : n.values)
      if (v) fixed = fixed + *v;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      const auto& c = n.tuples[k];
      expect(c.terms == tuples[k], "tuple differs");
      expect(c.support.size() == c.u.size() && !c.support.empty(), "weights malformed");
      std::vector<Rational> sum(r_, 0);
      Affine obj = -fixed - Affine(r_);
      for (std::size_t j = 0; j < c.support.size(); ++j) {
        int t = c.support[j];
        expect(std::count(c.terms.begin(), c.terms.end(), t) > 0, "weight on a term outside the tuple");
        expect(sgn(c.u[j]) >= 0, "negative weight");
        for (int x = 0; x < r_; ++x) sum[x] += c.u[j] * br[t].g[x];
        obj = obj + (br[t].a + Affine(1)) * c.u[j];
      }
      for (int x : free) expect(sum[x] == 1, "weights do not sum to e");
      expect(sgn(c.bound.bound) > 0 && check_bound(n.constraints, obj, c.bound), "weight bound rejected");
    }
    std::vector<CaseNode> want;
    std::vector<Exclusion> carried;
    for (int i : I) {
      for (const auto& b : br)
        if (is_unit_for(b, i))
          for (int t = 1; t <= b.len; ++t) want.push_back(derive(n, i, -(b.a + Affine(t)), false, carried));
      for (const auto& b : br)
        if (is_unit_for(b, i)) carried.push_back(Exclusion{i, -(b.a + Affine(b.len)), -(b.a + Affine(1))});
    }
    children_match(n, want);
  }

  void reduc_b(const CaseNode& n, const std::vector<Bracket>& br, const std::vector<int>& free) const {
    const auto& J = n.vars;
    for (int j : J) expect(std::count(free.begin(), free.end(), j) == 1, "J contains a fixed variable");
    std::vector<int> comp;
    for (int x : free)
      if (!std::count(J.begin(), J.end(), x)) comp.push_back(x);
    expect(!comp.empty(), "J must be proper");
    std::vector<int> gl;
    for (std::size_t k = 0; k < br.size(); ++k)
      if (!is_unit(br[k])) gl.push_back(static_cast<int>(k));
    // e is outside the cone: c vanishes off the complement, c.gamma <= 0, c.e > 0.
    expect(static_cast<int>(n.farkas.size()) == r_, "Farkas vector has the wrong length");
    Rational ce = 0;
    for (int x = 0; x < r_; ++x) {
      bool in = std::count(comp.begin(), comp.end(), x) > 0;
      if (!in) expect(sgn(n.farkas[x]) == 0, "Farkas vector is nonzero off the complement");
      else ce += n.farkas[x];
    }
    expect(sgn(ce) > 0, "Farkas vector has c.e <= 0");
    for (int k : gl) {
      Rational s = 0;
      for (int x : comp) s += n.farkas[x] * br[k].g[x];
      expect(sgn(s) <= 0, "Farkas vector is positive on Gamma");
    }
    // Every complement index lies in J+ or J- by an explicit cone point.
    expect(n.memberships.size() == comp.size(), "one membership per complement index");
    std::vector<int> jp, jm;
    for (std::size_t m = 0; m < comp.size(); ++m) {
      const auto& cm = n.memberships[m];
      expect(cm.var == comp[m], "memberships out of order");
      expect(cm.lambda.size() == gl.size(), "membership weights malformed");
      expect(sgn(cm.t) != 0, "membership with t = 0");
      for (const auto& l : cm.lambda) expect(sgn(l) >= 0, "negative cone weight");
      for (int x : comp) {
        Rational s = cm.var == x ? cm.t : Rational(0);
        for (std::size_t k = 0; k < gl.size(); ++k) s += cm.lambda[k] * br[gl[k]].g[x];
        expect(s == 1, "cone point does not reach e");
      }
      (sgn(cm.t) > 0 ? jp : jm).push_back(cm.var);
    }
    expect(jp == n.j_plus && jm == n.j_minus, "J+ and J- do not match the memberships");
    std::vector<CaseNode> want;
    std::vector<Exclusion> carried;
    Affine p = Affine::variable(n.params);
    for (const auto& cm : n.memberships) {
      int i = cm.var;
      if (sgn(cm.t) > 0) {
        for (const auto& b : br)
          if (is_unit_for(b, i)) {
            want.push_back(derive(n, i, -(b.a + Affine(1)) - p, true, carried));
            carried.push_back(Exclusion{i, std::nullopt, -(b.a + Affine(1))});
          }
      } else {
        want.push_back(derive(n, i, p, true, carried));
        carried.push_back(Exclusion{i, Affine(0), std::nullopt});
      }
    }
    children_match(n, want);
  }

  const BFunctionFamily& f_;
  int r_;
  std::string path_;
};

}  // namespace

CheckResult verify_certificate(const CaseCertificate& cert) {
  CheckResult res;
  const auto& root = cert.root;
  if (static_cast<int>(root.values.size()) != cert.family.r() || root.params != 0 || !root.constraints.empty() ||
      !root.exclusions.empty() ||
      std::any_of(root.values.begin(), root.values.end(), [](const auto& v) { return v.has_value(); })) {
    res.error = "root must carry no assumptions";
    return res;
  }
  Checker c(cert.family);
  try {
    c.node(root, "");
  } catch (const Fail& f) {
    res.error = f.msg + " at node " + (c.path().empty() ? "/" : c.path());
    return res;
  }
  res.ok = true;
  return res;
}

}  // namespace qsing
