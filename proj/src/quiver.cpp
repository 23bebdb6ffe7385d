#include "qsing/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qsing/errors.hpp"
#include "qsing/rational_matrix.hpp"

namespace qsing {

DimVector DimVector::unit(std::size_t n, int vertex) {
  DimVector d(n);
  d.at(vertex) = 1;
  return d;
}

bool DimVector::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

long DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector r = *this;
  return r += o;
}

DimVector DimVector::operator-(const DimVector& o) const {
  DimVector r = *this;
  return r -= o;
}

DimVector DimVector::operator*(int k) const {
  DimVector r = *this;
  for (auto& x : r.v_) x *= k;
  return r;
}

DimVector& DimVector::operator+=(const DimVector& o) {
  if (o.size() != size()) throw DimensionMismatch("dimension vector length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
  if (o.size() != size()) throw DimensionMismatch("dimension vector length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

bool DimVector::dominates(const DimVector& b) const {
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (b.v_[i] > v_[i]) return false;
  return true;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

std::size_t DimVectorHash::operator()(const DimVector& d) const noexcept {
  std::size_t h = d.size();
  for (int x : d.entries()) h = h * 1000003u ^ static_cast<std::size_t>(x + 7919);
  return h;
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ <= 0) throw InvalidInput("quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_)
      throw InvalidInput("arrow references an unknown vertex");
    if (a.tail == a.head) throw InvalidInput("loops are not supported");
  }
  // Kahn's algorithm detects oriented cycles.
  std::vector<int> indeg(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& a : arrows_) ++indeg[static_cast<std::size_t>(a.head)];
  std::vector<int> ready;
  for (int x = 1; x <= n_; ++x)
    if (indeg[static_cast<std::size_t>(x)] == 0) ready.push_back(x);
  int seen = 0;
  while (!ready.empty()) {
    const int x = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.tail == x && --indeg[static_cast<std::size_t>(a.head)] == 0) ready.push_back(a.head);
  }
  if (seen != n_) throw InvalidInput("quiver has an oriented cycle");
}

bool Quiver::is_sink(int x) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [x](const Arrow& a) { return a.tail == x; });
}

bool Quiver::is_source(int x) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [x](const Arrow& a) { return a.head == x; });
}

Quiver Quiver::reversed_at(int x) const {
  std::vector<Arrow> out = arrows_;
  for (auto& a : out)
    if (a.tail == x || a.head == x) std::swap(a.tail, a.head);
  return Quiver(n_, std::move(out));
}

std::vector<std::vector<int>> Quiver::admissible_sink_orders(std::size_t limit) const {
  std::vector<std::vector<int>> result;
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  // A vertex may be taken once all its out-neighbours were taken.
  std::function<void()> rec = [&]() {
    if (result.size() >= limit) return;
    if (static_cast<int>(order.size()) == n_) {
      result.push_back(order);
      return;
    }
    for (int x = 1; x <= n_; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (const auto& a : arrows_)
        if (a.tail == x && !used[static_cast<std::size_t>(a.head)]) ok = false;
      if (!ok) continue;
      used[static_cast<std::size_t>(x)] = true;
      order.push_back(x);
      rec();
      order.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
  };
  rec();
  return result;
}

std::vector<int> Quiver::admissible_sink_order() const { return admissible_sink_orders(1).front(); }

bool Quiver::is_connected() const {
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (const auto& a : arrows_) parent[static_cast<std::size_t>(find(a.tail))] = find(a.head);
  for (int x = 2; x <= n_; ++x)
    if (find(x) != find(1)) return false;
  return true;
}

void Quiver::check(const DimVector& d) const {
  if (static_cast<int>(d.size()) != n_)
    throw DimensionMismatch("dimension vector has " + std::to_string(d.size()) + " entries, quiver has " +
                            std::to_string(n_) + " vertices");
}

std::string Quiver::to_string() const {
  std::ostringstream os;
  os << "vertices " << n_ << '\n';
  for (const auto& a : arrows_) os << "arrow " << a.tail << ' ' << a.head << '\n';
  return os.str();
}

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  q.check(a);
  q.check(b);
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  for (const auto& ar : q.arrows()) s -= static_cast<long>(a.at(ar.tail)) * b.at(ar.head);
  return s;
}

long tits_form(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

DimVector EulerData::apply_coxeter(const DimVector& d) const {
  DimVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < d.size(); ++j) s += coxeter_matrix[i][j] * d[j];
    out[i] = static_cast<int>(s);
  }
  return out;
}

EulerData coxeter(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  EulerData e;
  e.euler_matrix.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e.euler_matrix[i][i] = 1;
  for (const auto& a : q.arrows())
    e.euler_matrix[static_cast<std::size_t>(a.tail - 1)][static_cast<std::size_t>(a.head - 1)] -= 1;
  const Matrix em = Matrix::from_rows(e.euler_matrix);
  const auto inv = em.inverse();
  if (!inv) throw InternalError("Euler matrix is singular");
  const Matrix c = (*inv * em.transpose());
  e.coxeter_matrix.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational x = -c(i, j);
      if (x.get_den() != 1) throw InternalError("Coxeter matrix is not integral");
      e.coxeter_matrix[i][j] = x.get_num().get_si();
    }
  return e;
}

namespace {

// Lengths of the arms hanging off a branch vertex in a tree.
std::vector<int> arm_lengths(const std::vector<std::vector<int>>& adj, int center) {
  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(center)]) {
    int prev = center, cur = start, len = 1;
    while (adj[static_cast<std::size_t>(cur)].size() == 2) {
      const int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                                     : adj[static_cast<std::size_t>(cur)][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (adj[static_cast<std::size_t>(cur)].size() != 1) return {};
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

Classification classify(const Quiver& q) {
  using K = Classification::Kind;
  const int n = q.vertex_count();
  if (!q.is_connected()) return {};
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& a : q.arrows()) {
    adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
    adj[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  const auto edges = static_cast<int>(q.arrow_count());
  std::vector<int> deg(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) deg[static_cast<std::size_t>(x)] = static_cast<int>(adj[static_cast<std::size_t>(x)].size());
  const int maxdeg = n == 1 ? 0 : *std::max_element(deg.begin() + 1, deg.end());

  if (edges == n) {  // one cycle: extended A (including the Kronecker quiver)
    if (maxdeg == 2) return {K::ExtendedDynkin, 'A', n - 1};
    return {};
  }
  if (edges != n - 1) return {};
  // Tree.
  if (maxdeg <= 2) return {K::Dynkin, 'A', n};
  std::vector<int> branch;
  for (int x = 1; x <= n; ++x)
    if (deg[static_cast<std::size_t>(x)] >= 3) branch.push_back(x);
  if (branch.size() == 1) {
    const int c = branch[0];
    if (deg[static_cast<std::size_t>(c)] == 4) {
      const auto arms = arm_lengths(adj, c);
      if (arms == std::vector<int>{1, 1, 1, 1}) return {K::ExtendedDynkin, 'D', 4};
      return {};
    }
    if (deg[static_cast<std::size_t>(c)] != 3) return {};
    const auto arms = arm_lengths(adj, c);
    if (arms.size() != 3) return {};
    if (arms[0] == 1 && arms[1] == 1) return {K::Dynkin, 'D', n};
    if (arms == std::vector<int>{1, 2, 2}) return {K::Dynkin, 'E', 6};
    if (arms == std::vector<int>{1, 2, 3}) return {K::Dynkin, 'E', 7};
    if (arms == std::vector<int>{1, 2, 4}) return {K::Dynkin, 'E', 8};
    if (arms == std::vector<int>{2, 2, 2}) return {K::ExtendedDynkin, 'E', 6};
    if (arms == std::vector<int>{1, 3, 3}) return {K::ExtendedDynkin, 'E', 7};
    if (arms == std::vector<int>{1, 2, 5}) return {K::ExtendedDynkin, 'E', 8};
    return {};
  }
  if (branch.size() == 2) {
    // Extended D_{n-1}: two degree-3 vertices joined by a path, each with two leaves.
    for (int b : branch) {
      if (deg[static_cast<std::size_t>(b)] != 3) return {};
      int leaves = 0;
      for (int y : adj[static_cast<std::size_t>(b)])
        if (deg[static_cast<std::size_t>(y)] == 1) ++leaves;
      if (leaves < 2) return {};
    }
    return {K::ExtendedDynkin, 'D', n - 1};
  }
  return {};
}

void require_dynkin(const Quiver& q) {
  const auto c = classify(q);
  if (!c.is_dynkin()) throw NonDynkin("quiver is not of Dynkin type (" + c.to_string() + ")");
}

int coxeter_number(const Classification& c) {
  if (!c.is_dynkin()) throw NonDynkin("Coxeter number requested for a non-Dynkin quiver");
  switch (c.type) {
    case 'A':
      return c.rank + 1;
    case 'D':
      return 2 * c.rank - 2;
    default:
      return c.rank == 6 ? 12 : c.rank == 7 ? 18 : 30;
  }
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::Dynkin:
      return std::string("Dynkin(") + type + "," + std::to_string(rank) + ")";
    case Kind::ExtendedDynkin:
      return std::string("ExtendedDynkin(") + type + "~," + std::to_string(rank) + ")";
    default:
      return "Wild";
  }
}

}  // namespace qsing
