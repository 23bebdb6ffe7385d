#include <doctest.h>

#include <random>

#include "qsing/indecomposables.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

TEST_CASE("positive roots match known counts") {
  CHECK(positive_roots(a_linear(2)).size() == 3);
  CHECK(positive_roots(a_linear(4)).size() == 10);
  CHECK(positive_roots(d_quiver(4)).size() == 12);
  CHECK(positive_roots(e_quiver(6)).size() == 36);
  CHECK(positive_roots(e_quiver(7)).size() == 63);
  CHECK(positive_roots(e_quiver(8)).size() == 120);
  for (const auto& r : positive_roots(e_quiver(8))) CHECK(tits_form(e_quiver(8), r) == 1);
}

TEST_CASE("realized indecomposables have one-dimensional endomorphisms") {
  for (const Quiver& q : {a_linear(3), d_quiver(4), e_quiver(6)}) {
    for (const auto& r : positive_roots(q)) {
      Representation v = realize(q, r);
      v.validate();
      CHECK(v.dims == r);
      CHECK(hom_dim(v, v) == 1);
      CHECK(ext_dim(v, v) == 0);
    }
  }
}

TEST_CASE("realization does not depend on the sink order") {
  for (const Quiver& q : {d_quiver(5), e_quiver(6)}) {
    auto orders = q.admissible_sink_orders(4);
    REQUIRE(orders.size() >= 2);
    HomTable a(q, orders[0]);
    HomTable b(q, orders.back());
    CHECK(a.same_values(b));
  }
}

TEST_CASE("random fallback agrees with reflection functors") {
  Quiver q = d_quiver(4);
  for (const auto& r : positive_roots(q)) {
    auto v = realize_random(q, r, 7);
    REQUIRE(v);
    CHECK(hom_dim(*v, *v) == 1);
    Representation w = realize(q, r);
    CHECK(hom_dim(*v, w) == 1);
  }
}

TEST_CASE("hom minus ext is the euler form") {
  for (const Quiver& q : dynkin_zoo()) {
    if (q.vertex_count() > 6) continue;
    const HomTable& t = hom_table(q);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        CHECK(t.hom(i, j) - t.ext(i, j) == euler_form(q, t.roots()[i], t.roots()[j]));
  }
}

TEST_CASE("base change preserves hom dimensions") {
  Quiver q = a_linear(3);
  Representation v = realize(q, DimVector{1, 1, 1});
  std::vector<Matrix> g;
  for (int x = 1; x <= 3; ++x) {
    Matrix m = Matrix::identity(1);
    m(0, 0) = x + 1;
    g.push_back(m);
  }
  Representation w = transform(v, g);
  CHECK(hom_dim(v, w) == 1);
  CHECK(hom_dim(w, realize(q, DimVector{1, 0, 0})) == 1);
}

TEST_CASE("unknown roots are rejected") {
  const HomTable& t = hom_table(a_linear(3));
  CHECK_FALSE(t.index_of(DimVector{1, 0, 1}));
  CHECK_THROWS(t.require_index(DimVector{2, 1, 1}));
}
