#include <doctest.h>

#include "qsing/errors.hpp"
#include "qsing/quiver.hpp"
#include "qsing/rational_matrix.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

TEST_CASE("dimension vector arithmetic") {
  DimVector a{1, 2, 3}, b{0, 1, 1};
  CHECK((a + b) == DimVector{1, 3, 4});
  CHECK((a - b) == DimVector{1, 1, 2});
  CHECK((b * 3) == DimVector{0, 3, 3});
  CHECK(a.total() == 6);
  CHECK(a.dominates(b));
  CHECK_FALSE(b.dominates(a));
  CHECK(a.to_string() == "(1,2,3)");
  CHECK(DimVector::unit(3, 2) == DimVector{0, 1, 0});
}

TEST_CASE("quiver construction rejects bad input") {
  CHECK_THROWS_AS(Quiver(2, {{1, 3}}), InvalidInput);
  CHECK_THROWS_AS(Quiver(0, {}), InvalidInput);
  Quiver q = a_linear(3);
  CHECK_THROWS_AS(q.check(DimVector{1, 1}), DimensionMismatch);
}

TEST_CASE("euler and tits forms") {
  Quiver q = a_linear(2);
  CHECK(euler_form(q, DimVector{1, 0}, DimVector{0, 1}) == -1);
  CHECK(euler_form(q, DimVector{0, 1}, DimVector{1, 0}) == 0);
  CHECK(tits_form(q, DimVector{1, 1}) == 1);
  CHECK(tits_form(q, DimVector{2, 1}) == 3);
}

TEST_CASE("classification of Dynkin and non-Dynkin quivers") {
  CHECK(classify(a_linear(4)).to_string() == "Dynkin(A,4)");
  CHECK(classify(d_quiver(5)).to_string() == "Dynkin(D,5)");
  CHECK(classify(e_quiver(6)).to_string() == "Dynkin(E,6)");
  CHECK(classify(e_quiver(8)).to_string() == "Dynkin(E,8)");
  Quiver kronecker(2, {{1, 2}, {1, 2}});
  CHECK(classify(kronecker).kind == Classification::Kind::ExtendedDynkin);
  CHECK_THROWS_AS(require_dynkin(kronecker), NonDynkin);
  CHECK_THROWS_AS(Quiver(3, {{1, 2}, {2, 3}, {3, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver(1, {{1, 1}}), InvalidInput);
}

TEST_CASE("coxeter transformation has order h on the lattice") {
  for (const Quiver& q : dynkin_zoo()) {
    CAPTURE(q.to_string());
    EulerData e = coxeter(q);
    int h = coxeter_number(classify(q));
    const int n = q.vertex_count();
    for (int x = 1; x <= n; ++x) {
      DimVector d = DimVector::unit(n, x);
      DimVector c = d;
      for (int k = 0; k < h; ++k) c = e.apply_coxeter(c);
      CHECK(c == d);
    }
  }
}

TEST_CASE("admissible sink orders consist of sinks after reversal") {
  for (const Quiver& q : dynkin_zoo()) {
    for (const auto& order : q.admissible_sink_orders(8)) {
      Quiver cur = q;
      for (int x : order) {
        REQUIRE(cur.is_sink(x));
        cur = cur.reversed_at(x);
      }
      CHECK(cur == q);
    }
  }
}

TEST_CASE("exact matrix kernel") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(m.rank() == 2);
  Matrix k = m.nullspace();
  CHECK((m * k).is_zero());
  CHECK(m.determinant() == 0);
  Matrix inv_src = Matrix::from_rows({{2, 1}, {7, 4}});
  auto inv = inv_src.inverse();
  REQUIRE(inv);
  CHECK(inv_src * *inv == Matrix::identity(2));
  CHECK(Matrix::from_rows({{1, 2}, {3, 4}}).inverse()->operator()(0, 0) == Rational(-2));
}
