#include "qsing/indecomposables.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>

#include "qsing/errors.hpp"

namespace qsing {

void Representation::validate() const {
  quiver.check(dims);
  if (maps.size() != quiver.arrow_count()) throw InvalidInput("representation has the wrong number of maps");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& ar = quiver.arrows()[a];
    if (maps[a].rows() != static_cast<std::size_t>(dims.at(ar.head)) ||
        maps[a].cols() != static_cast<std::size_t>(dims.at(ar.tail)))
      throw InvalidInput("map shape does not match the dimension vector");
  }
}

Representation simple_representation(const Quiver& q, int vertex) {
  Representation s{q, DimVector::unit(static_cast<std::size_t>(q.vertex_count()), vertex), {}};
  for (const auto& a : q.arrows())
    s.maps.emplace_back(static_cast<std::size_t>(s.dims.at(a.head)), static_cast<std::size_t>(s.dims.at(a.tail)));
  return s;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.quiver == b.quiver)) throw InvalidInput("direct sum of representations of different quivers");
  Representation s{a.quiver, a.dims + b.dims, {}};
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& ma = a.maps[k];
    const auto& mb = b.maps[k];
    Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
    for (std::size_t i = 0; i < mb.rows(); ++i)
      for (std::size_t j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
    s.maps.push_back(std::move(m));
  }
  return s;
}

Representation transform(const Representation& v, const std::vector<Matrix>& g) {
  if (g.size() != v.dims.size()) throw DimensionMismatch("base change needs one matrix per vertex");
  std::vector<Matrix> inv;
  for (const auto& gx : g) {
    auto i = gx.inverse();
    if (!i) throw InvalidInput("base change matrix is singular");
    inv.push_back(*i);
  }
  Representation out = v;
  for (std::size_t k = 0; k < v.maps.size(); ++k) {
    const auto& ar = v.quiver.arrows()[k];
    out.maps[k] = g[static_cast<std::size_t>(ar.head - 1)] * v.maps[k] * inv[static_cast<std::size_t>(ar.tail - 1)];
  }
  return out;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
  require_dynkin(q);
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::set<DimVector> found;
  std::deque<DimVector> todo;
  for (int x = 1; x <= q.vertex_count(); ++x) {
    found.insert(DimVector::unit(n, x));
    todo.push_back(DimVector::unit(n, x));
  }
  while (!todo.empty()) {
    const DimVector r = todo.front();
    todo.pop_front();
    for (int x = 1; x <= q.vertex_count(); ++x) {
      DimVector s = r;
      ++s.at(x);
      if (tits_form(q, s) == 1 && found.insert(s).second) todo.push_back(s);
    }
  }
  return {found.begin(), found.end()};
}

// BGP functor at a sink x of v.quiver: new space is the kernel of the sum map.
Representation sink_reflection(const Representation& v, int x) {
  if (!v.quiver.is_sink(x)) throw InvalidInput("vertex is not a sink");
  const Quiver nq = v.quiver.reversed_at(x);
  std::vector<std::size_t> in;
  std::size_t total = 0;
  for (std::size_t a = 0; a < v.maps.size(); ++a)
    if (v.quiver.arrows()[a].head == x) {
      in.push_back(a);
      total += v.maps[a].cols();
    }
  const auto dx = static_cast<std::size_t>(v.dims.at(x));
  Matrix h(dx, total);
  std::size_t off = 0;
  for (auto a : in) {
    const auto& m = v.maps[a];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) h(i, off + j) = m(i, j);
    off += m.cols();
  }
  const Matrix k = h.nullspace();
  Representation w{nq, v.dims, v.maps};
  w.dims.at(x) = static_cast<int>(k.cols());
  off = 0;
  for (auto a : in) {
    const std::size_t rows = v.maps[a].cols();
    w.maps[a] = k.block(off, 0, rows, k.cols());
    off += rows;
  }
  return w;
}

// BGP functor at a source x of v.quiver: new space is the cokernel of the
// stacked map, presented by a basis of its left kernel.
Representation source_reflection(const Representation& v, int x) {
  if (!v.quiver.is_source(x)) throw InvalidInput("vertex is not a source");
  const Quiver nq = v.quiver.reversed_at(x);
  std::vector<std::size_t> out;
  std::size_t total = 0;
  for (std::size_t a = 0; a < v.maps.size(); ++a)
    if (v.quiver.arrows()[a].tail == x) {
      out.push_back(a);
      total += v.maps[a].rows();
    }
  const auto dx = static_cast<std::size_t>(v.dims.at(x));
  Matrix h(total, dx);
  std::size_t off = 0;
  for (auto a : out) {
    const auto& m = v.maps[a];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) h(off + i, j) = m(i, j);
    off += m.rows();
  }
  const Matrix c = h.left_nullspace();
  Representation w{nq, v.dims, v.maps};
  w.dims.at(x) = static_cast<int>(c.rows());
  off = 0;
  for (auto a : out) {
    const std::size_t cols = v.maps[a].rows();
    w.maps[a] = c.block(0, off, c.rows(), cols);
    off += cols;
  }
  return w;
}

Representation realize(const Quiver& q, const DimVector& r) { return realize(q, r, q.admissible_sink_order()); }

Representation realize(const Quiver& q, const DimVector& r, const std::vector<int>& sink_order) {
  require_dynkin(q);
  q.check(r);
  if (!r.is_nonnegative() || r.is_zero() || tits_form(q, r) != 1)
    throw NotARoot(r.to_string() + " is not a positive root");
  const auto n = static_cast<std::size_t>(q.vertex_count());
  // Apply sink reflections cyclically until the vector is a simple root at
  // the next reflected vertex.
  std::vector<Quiver> quivers{q};
  std::vector<int> path;
  DimVector v = r;
  const std::size_t limit = n * static_cast<std::size_t>(coxeter_number(classify(q)) + 2);
  for (std::size_t step = 0;; ++step) {
    if (step > limit) throw InternalError("reflection sequence did not terminate for " + r.to_string());
    const int x = sink_order[step % n];
    const Quiver& cur = quivers.back();
    if (!cur.is_sink(x)) throw InvalidInput("vertex order is not an admissible sink order");
    if (v == DimVector::unit(n, x)) break;
    int s = -v.at(x);
    for (const auto& a : cur.arrows())
      if (a.head == x) s += v.at(a.tail);
    v.at(x) = s;
    if (!v.is_nonnegative()) throw NotARoot(r.to_string() + " reflects to a non-positive vector");
    path.push_back(x);
    quivers.push_back(cur.reversed_at(x));
  }
  Representation rep = simple_representation(quivers.back(), sink_order[path.size() % n]);
  for (std::size_t k = path.size(); k-- > 0;) rep = source_reflection(rep, path[k]);
  if (!(rep.quiver == q) || !(rep.dims == r)) throw InternalError("reflection functors produced the wrong dimension vector");
  return rep;
}

std::optional<Representation> realize_random(const Quiver& q, const DimVector& r, std::uint64_t seed, int attempts) {
  q.check(r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < attempts; ++t) {
    Representation v{q, r, {}};
    for (const auto& a : q.arrows()) {
      Matrix m(static_cast<std::size_t>(r.at(a.head)), static_cast<std::size_t>(r.at(a.tail)));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
      v.maps.push_back(std::move(m));
    }
    if (hom_dim(v, v) == 1) return v;
  }
  return std::nullopt;
}

Matrix hom_matrix_dvw(const Representation& v, const Representation& w) {
  if (!(v.quiver == w.quiver)) throw InvalidInput("representations live on different quivers");
  const Quiver& q = v.quiver;
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::vector<std::size_t> dom_off(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x)
    dom_off[x + 1] = dom_off[x] + static_cast<std::size_t>(v.dims[x]) * static_cast<std::size_t>(w.dims[x]);
  std::size_t rows = 0;
  std::vector<std::size_t> cod_off;
  for (const auto& a : q.arrows()) {
    cod_off.push_back(rows);
    rows += static_cast<std::size_t>(v.dims.at(a.tail)) * static_cast<std::size_t>(w.dims.at(a.head));
  }
  Matrix d(rows, dom_off[n]);
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrows()[k];
    const auto t = static_cast<std::size_t>(a.tail - 1);
    const auto h = static_cast<std::size_t>(a.head - 1);
    const auto vt = static_cast<std::size_t>(v.dims[t]);
    const auto vh = static_cast<std::size_t>(v.dims[h]);
    const auto wt = static_cast<std::size_t>(w.dims[t]);
    const auto wh = static_cast<std::size_t>(w.dims[h]);
    const Matrix& va = v.maps[k];
    const Matrix& wa = w.maps[k];
    // Output entry (i,j) of block k, i < wh, j < vt, sits at row cod + j*wh + i.
    for (std::size_t i = 0; i < wh; ++i)
      for (std::size_t j = 0; j < vt; ++j) {
        const std::size_t row = cod_off[k] + j * wh + i;
        // + phi(h)[i,l] * V(a)[l,j]; phi(h)[i,l] is column l, row i of block h.
        for (std::size_t l = 0; l < vh; ++l)
          if (sgn(va(l, j)) != 0) d(row, dom_off[h] + l * wh + i) += va(l, j);
        // - W(a)[i,l] * phi(t)[l,j].
        for (std::size_t l = 0; l < wt; ++l)
          if (sgn(wa(i, l)) != 0) d(row, dom_off[t] + j * wt + l) -= wa(i, l);
      }
  }
  return d;
}

long hom_dim(const Representation& v, const Representation& w) {
  const Matrix d = hom_matrix_dvw(v, w);
  return static_cast<long>(d.cols()) - static_cast<long>(d.rank());
}

long ext_dim(const Representation& v, const Representation& w) {
  return hom_dim(v, w) - euler_form(v.quiver, v.dims, w.dims);
}

HomTable::HomTable(const Quiver& q, const std::vector<int>& sink_order) : quiver_(q), roots_(positive_roots(q)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    index_.emplace(roots_[i], i);
    reps_.push_back(realize(q, roots_[i], sink_order));
  }
  const std::size_t m = roots_.size();
  hom_.assign(m * m, 0);
  ext_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const long h = hom_dim(reps_[i], reps_[j]);
      const long e = h - euler_form(q, roots_[i], roots_[j]);
      if (e < 0) throw InternalError("negative Ext dimension");
      hom_[i * m + j] = static_cast<int>(h);
      ext_[i * m + j] = static_cast<int>(e);
    }
}

std::optional<std::size_t> HomTable::index_of(const DimVector& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t HomTable::require_index(const DimVector& r) const {
  auto i = index_of(r);
  if (!i) throw NotARoot(r.to_string() + " is not a positive root");
  return *i;
}

const HomTable& hom_table(const Quiver& q) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<HomTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& t : cache)
    if (t->quiver() == q) return *t;
  require_dynkin(q);
  cache.push_back(std::make_unique<HomTable>(q, q.admissible_sink_order()));
  return *cache.back();
}

}  // namespace qsing
