#include "qsing/bfunction.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "qsing/errors.hpp"

namespace qsing {

namespace {

bool is_unit(const Gamma& g) {
  int ones = 0;
  for (int x : g) {
    if (x == 1) {
      ++ones;
    } else if (x != 0) {
      return false;
    }
  }
  return ones == 1;
}

bool term_order(const BracketTerm& x, const BracketTerm& y) {
  const bool ux = is_unit(x.gamma), uy = is_unit(y.gamma);
  if (ux != uy) return ux;
  if (ux && x.gamma != y.gamma) return x.gamma > y.gamma;  // e^1 first
  return std::tie(x.gamma, x.a, x.b, x.mult) < std::tie(y.gamma, y.a, y.b, y.mult);
}

void add_interval(std::map<int, long>& c, int a, int b, long mult) {
  for (int i = a + 1; i <= b; ++i) c[i] += mult;
}

void prune(BracketCounts& counts) {
  for (auto it = counts.begin(); it != counts.end();) {
    auto& m = it->second;
    for (auto jt = m.begin(); jt != m.end();) jt = jt->second == 0 ? m.erase(jt) : std::next(jt);
    bool zero_gamma = std::all_of(it->first.begin(), it->first.end(), [](int x) { return x == 0; });
    it = (m.empty() || zero_gamma) ? counts.erase(it) : std::next(it);
  }
}

std::string render_counts(const BracketCounts& counts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, m] : counts) {
    if (!first) os << "; ";
    first = false;
    os << render_gamma(g) << ":{";
    bool f2 = true;
    for (const auto& [i, c] : m) {
      os << (f2 ? "" : ",") << i << ':' << c;
      f2 = false;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace

bool LinearForm::operator<(const LinearForm& o) const {
  if (gamma != o.gamma) return gamma < o.gamma;
  return constant < o.constant;
}

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (sgn(gamma[i]) == 0) continue;
    if (!first) os << (sgn(gamma[i]) > 0 ? "+" : "-");
    else if (sgn(gamma[i]) < 0) os << '-';
    const Rational g = abs(gamma[i]);
    if (g != 1) os << g.get_str();
    os << "s" << (i + 1);
    first = false;
  }
  if (first) return constant.get_str();
  if (sgn(constant) > 0) os << '+' << constant.get_str();
  if (sgn(constant) < 0) os << constant.get_str();
  return os.str();
}

BFunctionFamily::BFunctionFamily(int r, const std::vector<BracketTerm>& terms, FamilyMeta meta)
    : r_(r), meta_(std::move(meta)) {
  BracketCounts counts;
  for (const auto& t : terms) {
    if (static_cast<int>(t.gamma.size()) != r) throw DimensionMismatch("bracket gamma has the wrong length");
    if (t.a > t.b || t.mult < 0) throw InvalidInput("bracket needs a <= b and nonnegative multiplicity");
    add_interval(counts[t.gamma], t.a, t.b, t.mult);
  }
  *this = from_counts(r, counts, meta_);
}

BFunctionFamily BFunctionFamily::from_counts(int r, const BracketCounts& in, FamilyMeta meta) {
  BracketCounts counts = in;
  prune(counts);
  BFunctionFamily f;
  f.r_ = r;
  f.meta_ = std::move(meta);
  std::map<BracketTerm, int> merged;
  for (const auto& [g, m] : counts) {
    long top = 0;
    for (const auto& [i, c] : m) {
      if (c < 0) throw InternalError("bracket count is negative for " + render_gamma(g));
      top = std::max(top, c);
    }
    // Level L contributes the maximal runs of consecutive i with count >= L.
    for (long level = 1; level <= top; ++level) {
      std::optional<int> start, prev;
      auto flush = [&]() {
        if (start) ++merged[BracketTerm{g, *start - 1, *prev, 1}];
        start.reset();
      };
      for (const auto& [i, c] : m) {
        if (c < level) {
          flush();
          continue;
        }
        if (start && *prev + 1 != i) flush();
        if (!start) start = i;
        prev = i;
      }
      flush();
    }
  }
  for (const auto& [t, k] : merged) {
    BracketTerm term = t;
    term.mult = k;
    f.terms_.push_back(term);
  }
  std::sort(f.terms_.begin(), f.terms_.end(), term_order);
  return f;
}

BracketCounts BFunctionFamily::counts() const {
  BracketCounts c;
  for (const auto& t : terms_) add_interval(c[t.gamma], t.a, t.b, t.mult);
  prune(c);
  return c;
}

BFunctionFamily BFunctionFamily::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != r_) throw DimensionMismatch("permutation has the wrong length");
  std::vector<BracketTerm> ts;
  for (const auto& t : terms_) {
    BracketTerm n = t;
    for (int k = 0; k < r_; ++k) n.gamma[static_cast<std::size_t>(k)] = t.gamma[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    ts.push_back(n);
  }
  FamilyMeta m = meta_;
  if (m.simples.size() == perm.size()) {
    for (int k = 0; k < r_; ++k) m.simples[static_cast<std::size_t>(k)] = meta_.simples[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
  }
  return BFunctionFamily(r_, ts, m);
}

bool BFunctionFamily::all_constants_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const BracketTerm& t) { return t.a >= 0; });
}

std::string render_gamma(const Gamma& g) {
  const bool digits = std::all_of(g.begin(), g.end(), [](int x) { return x >= 0 && x <= 9; });
  std::ostringstream os;
  if (digits) {
    for (int x : g) os << x;
  } else {
    os << '(';
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ')';
  }
  return os.str();
}

std::string render_term(const BracketTerm& t) {
  std::ostringstream os;
  os << "[s]^{" << render_gamma(t.gamma) << "}_{";
  if (t.a != 0) os << t.a << ',';
  os << t.b << '}';
  if (t.mult == 1) return os.str();
  return "(" + os.str() + ")^" + std::to_string(t.mult);
}

std::string BFunctionFamily::render() const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& t : terms_) out += (out.empty() ? "" : " ") + render_term(t);
  return out;
}

std::string BFunctionFamily::render_polynomial() const {
  if (r_ != 1) throw InvalidInput("polynomial rendering needs a single variable");
  std::map<std::pair<int, int>, int> powers;  // (slope, constant) -> exponent
  for (const auto& lf : expand(*this, {1})) ++powers[{static_cast<int>(lf.gamma[0].get_num().get_si()), static_cast<int>(lf.constant.get_num().get_si())}];
  if (powers.empty()) return "1";
  auto factor = [](int g, int c) {
    std::string s = (g == 1 ? "" : std::to_string(g)) + "s";
    return s + (c >= 0 ? "+" : "") + std::to_string(c);
  };
  if (powers.size() == 1 && powers.begin()->second == 1) return factor(powers.begin()->first.first, powers.begin()->first.second);
  std::string out;
  for (const auto& [gc, e] : powers) {
    out += "(" + factor(gc.first, gc.second) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<LinearForm> expand_term(const BracketTerm& t, const std::vector<int>& m) {
  if (m.size() != t.gamma.size()) throw DimensionMismatch("multiplicity tuple has the wrong length");
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw InvalidInput("multiplicities must be nonnegative");
    d += static_cast<long>(t.gamma[i]) * m[i];
  }
  std::vector<LinearForm> out;
  std::vector<Rational> g(t.gamma.begin(), t.gamma.end());
  for (int k = 0; k < t.mult; ++k)
    for (int i = t.a + 1; i <= t.b; ++i)
      for (long j = 0; j < d; ++j) out.push_back(LinearForm{g, Rational(i + j)});
  return out;
}

std::vector<LinearForm> expand(const BFunctionFamily& f, const std::vector<int>& m) {
  std::vector<LinearForm> out;
  for (const auto& t : f.terms()) {
    auto part = expand_term(t, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational evaluate(const BFunctionFamily& f, const std::vector<int>& m, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != f.r()) throw DimensionMismatch("evaluation point has the wrong length");
  Rational p = 1;
  for (const auto& lf : expand(f, m)) {
    Rational v = lf.constant;
    for (std::size_t i = 0; i < z.size(); ++i) v += lf.gamma[i] * z[i];
    p *= v;
    if (sgn(p) == 0) return p;
  }
  return p;
}

bool bracket_identity_check(const Gamma& d, int a, int b, const std::vector<int>& m) {
  if (a > b) throw InvalidInput("bracket identity needs a <= b");
  std::vector<LinearForm> lhs = expand_term(BracketTerm{d, a, b, 1}, m);
  auto rest = expand_term(BracketTerm{d, 0, a, 1}, m);
  lhs.insert(lhs.end(), rest.begin(), rest.end());
  auto rhs = expand_term(BracketTerm{d, 0, b, 1}, m);
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

bool bracket_identity_check(const Gamma& d, int a, int b) {
  const std::size_t r = d.size();
  std::vector<std::vector<int>> ms{std::vector<int>(r, 1)};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> m(r, 1);
    m[i] = 2 + static_cast<int>(i);
    ms.push_back(m);
  }
  return std::all_of(ms.begin(), ms.end(), [&](const auto& m) { return bracket_identity_check(d, a, b, m); });
}

SpecializeResult specialize(const BFunctionFamily& f, int i, int value) {
  if (i < 1 || i > f.r()) throw InvalidInput("variable index out of range");
  const auto k = static_cast<std::size_t>(i - 1);
  SpecializeResult res;
  std::vector<BracketTerm> kept;
  for (const auto& t : f.terms()) {
    BracketTerm n = t;
    n.a += t.gamma[k] * value;
    n.b += t.gamma[k] * value;
    n.gamma.erase(n.gamma.begin() + static_cast<long>(k));
    if (std::all_of(n.gamma.begin(), n.gamma.end(), [](int x) { return x == 0; })) {
      res.scalar_terms.push_back(n);
    } else {
      kept.push_back(n);
    }
  }
  FamilyMeta meta = f.meta();
  if (meta.simples.size() == static_cast<std::size_t>(f.r())) meta.simples.erase(meta.simples.begin() + static_cast<long>(k));
  res.family = BFunctionFamily(f.r() - 1, kept, meta);
  return res;
}

std::optional<ReflectionState> reflection_step(const ReflectionState& s) {
  const EulerData e = coxeter(s.quiver);
  ReflectionState n{s.quiver, e.apply_coxeter(s.alpha), {}, s.counts};
  if (!n.alpha.is_nonnegative()) return std::nullopt;
  for (const auto& b : s.betas) {
    n.betas.push_back(e.apply_coxeter(b));
    if (!n.betas.back().is_nonnegative()) return std::nullopt;
  }
  for (int x = 1; x <= s.quiver.vertex_count(); ++x) {
    Gamma g;
    for (const auto& b : s.betas) g.push_back(b.at(x));
    // Quotient [s]^g_{alpha_x} / [s]^g_{c(alpha)_x} as signed counts.
    auto& c = n.counts[g];
    add_interval(c, 0, s.alpha.at(x), 1);
    add_interval(c, 0, n.alpha.at(x), -1);
  }
  prune(n.counts);
  return n;
}

std::optional<ReflectionState> vertex_reflection(const ReflectionState& s, int x, VertexMove kind) {
  const bool sink = kind == VertexMove::Sink;
  if (sink ? !s.quiver.is_sink(x) : !s.quiver.is_source(x)) return std::nullopt;
  auto reflect = [&](const DimVector& v) {
    int sum = -v.at(x);
    for (const auto& a : s.quiver.arrows()) {
      if (sink && a.head == x) sum += v.at(a.tail);
      if (!sink && a.tail == x) sum += v.at(a.head);
    }
    DimVector out = v;
    out.at(x) = sum;
    return out;
  };
  ReflectionState n{s.quiver.reversed_at(x), reflect(s.alpha), {}, s.counts};
  if (n.alpha.at(x) < 0) return std::nullopt;
  for (const auto& b : s.betas) {
    n.betas.push_back(reflect(b));
    if (n.betas.back().at(x) < 0) return std::nullopt;
  }
  // The bracket degree is read on the side where x is a sink.
  Gamma g;
  for (std::size_t j = 0; j < s.betas.size(); ++j) g.push_back(sink ? s.betas[j].at(x) : n.betas[j].at(x));
  auto& c = n.counts[g];
  add_interval(c, 0, s.alpha.at(x), 1);
  add_interval(c, 0, n.alpha.at(x), -1);
  prune(n.counts);
  return n;
}

namespace {

// Every beta is a distinct simple root; returns the vertices.
std::optional<std::vector<int>> base_vertices(const ReflectionState& s) {
  std::vector<int> xs;
  for (const auto& b : s.betas) {
    if (b.total() != 1 || !b.is_nonnegative()) return std::nullopt;
    int x = 1;
    while (b.at(x) == 0) ++x;
    if (std::find(xs.begin(), xs.end(), x) != xs.end()) return std::nullopt;
    xs.push_back(x);
  }
  return xs;
}

std::vector<int> state_key(const ReflectionState& s) {
  std::vector<int> key;
  for (const auto& a : s.quiver.arrows()) {
    key.push_back(a.tail);
    key.push_back(a.head);
  }
  key.insert(key.end(), s.alpha.entries().begin(), s.alpha.entries().end());
  for (const auto& b : s.betas) key.insert(key.end(), b.entries().begin(), b.entries().end());
  return key;
}

BracketCounts finish(const ReflectionState& s, const std::vector<int>& xs) {
  BracketCounts c = s.counts;
  const std::size_t r = s.betas.size();
  for (std::size_t j = 0; j < r; ++j) {
    Gamma g(r, 0);
    g[j] = 1;
    add_interval(c[g], 0, s.alpha.at(xs[j]), 1);
  }
  prune(c);
  return c;
}

}  // namespace

BFunctionFamily compute_bfunction(const Quiver& q, const DimVector& alpha, const std::vector<DimVector>& simples,
                                  const BFunctionOptions& opts) {
  require_dynkin(q);
  q.check(alpha);
  if (simples.empty()) throw InvalidInput("no simples selected");
  FamilyMeta meta{q.to_string(), alpha.entries(), {}};
  for (const auto& b : simples) {
    q.check(b);
    meta.simples.push_back(b.entries());
  }
  ReflectionState state{q, alpha, simples, {}};
  while (auto next = reflection_step(state)) state = std::move(*next);

  // Terminal search over single-vertex castling moves until every simple is
  // a distinct vertex simple.
  const int r = static_cast<int>(simples.size());
  std::set<std::vector<int>> seen{state_key(state)};
  std::deque<ReflectionState> frontier{state};
  std::mt19937 rng(opts.random_seed.value_or(0));
  std::vector<std::pair<int, VertexMove>> moves;
  for (int x = 1; x <= q.vertex_count(); ++x) {
    moves.emplace_back(x, VertexMove::Sink);
    moves.emplace_back(x, VertexMove::Source);
  }
  while (!frontier.empty()) {
    ReflectionState cur = opts.random_seed ? std::move(frontier.back()) : std::move(frontier.front());
    if (opts.random_seed) {
      frontier.pop_back();
    } else {
      frontier.pop_front();
    }
    if (auto xs = base_vertices(cur)) return BFunctionFamily::from_counts(r, finish(cur, *xs), meta);
    if (opts.random_seed) std::shuffle(moves.begin(), moves.end(), rng);
    for (const auto& [x, kind] : moves) {
      auto next = vertex_reflection(cur, x, kind);
      if (!next || !seen.insert(state_key(*next)).second) continue;
      if (seen.size() > opts.max_states) break;
      frontier.push_back(std::move(*next));
    }
    // A sink where every beta vanishes only feeds zero blocks of d^V_S, so its
    // arrows never enter the semi-invariants and its dimension can be dropped.
    for (int x = 1; x <= q.vertex_count(); ++x) {
      if (!cur.quiver.is_sink(x) || cur.alpha.at(x) == 0) continue;
      if (std::any_of(cur.betas.begin(), cur.betas.end(), [&](const DimVector& b) { return b.at(x) != 0; })) continue;
      ReflectionState next = cur;
      next.alpha.at(x) = 0;
      if (seen.insert(state_key(next)).second) frontier.push_back(std::move(next));
    }
    if (seen.size() > opts.max_states) break;
  }
  throw TerminalRuleInapplicable("no sequence of reflections reduces the simples to vertex simples",
                                 render_counts(state.counts));
}

}  // namespace qsing
