#include <doctest.h>

#include "qsing/decomposition.hpp"
#include "qsing/indecomposables.hpp"
#include "qsing/orbit_geometry.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

TEST_CASE("A2 generic decomposition and simples") {
  Quiver q = a_linear(2);
  RepClass t = generic_decomposition(q, DimVector{1, 1});
  CHECK(t.to_string() == "{(1,1)}");
  PerpData p = perp_simples(q, t);
  REQUIRE(p.simples.size() == 1);
  CHECK(p.simples[0] == DimVector{0, 1});
  CHECK(is_prehomogeneous(q, DimVector{1, 1}));
  CHECK(generic_decomposition(q, DimVector{2, 1}).to_string() == "{(1,1), (1,0)}");
}

TEST_CASE("E6 example family decomposition") {
  Quiver q = e_quiver(6);
  RepClass t = generic_decomposition(q, DimVector{1, 3, 3, 3, 1, 2});
  CHECK(t.summand_count() == 2);
  CHECK(t.total(6) == DimVector{1, 3, 3, 3, 1, 2});
  PerpData p = perp_simples(q, t);
  CHECK(p.r == 4);
  CHECK(std::is_sorted(p.simples.begin(), p.simples.end()));
  const HomTable& tab = hom_table(q);
  for (const auto& s : p.simples) {
    CHECK(class_hom(tab, t, s) == 0);
    CHECK(class_ext(tab, t, s) == 0);
  }
}

TEST_CASE("generic summands are pairwise ext-orthogonal") {
  for (const Quiver& q : {a_linear(4), d_quiver(4), d_quiver(5)}) {
    for (const auto& d : std::vector<DimVector>(positive_roots(q))) {
      DimVector alpha = d * 2 + DimVector::unit(q.vertex_count(), 1);
      RepClass t = generic_decomposition(q, alpha);
      CHECK(t.total(q.vertex_count()) == alpha);
      CHECK(class_ext(hom_table(q), t, t) == 0);
    }
  }
}

TEST_CASE("semi-invariant vanishes exactly when hom is nonzero") {
  Quiver q = a_linear(2);
  Representation s = realize(q, DimVector{0, 1});
  Representation generic = realize(q, DimVector{1, 1});
  Representation special = direct_sum(realize(q, DimVector{1, 0}), realize(q, DimVector{0, 1}));
  CHECK(evaluate_semiinvariant(generic, s) != 0);
  CHECK(hom_dim(generic, s) == 0);
  CHECK(evaluate_semiinvariant(special, s) == 0);
  CHECK(hom_dim(special, s) > 0);
}

TEST_CASE("semi-invariant degrees") {
  CHECK(semiinvariant_degree(a_linear(2), DimVector{1, 1}, DimVector{0, 1}) == 1);
  CHECK(semiinvariant_degree(a_linear(2), DimVector{3, 3}, DimVector{0, 1}) == 3);
  // Rep(A3, (0,1,0)) is a point: the semi-invariant is a nonzero constant.
  CHECK(semiinvariant_degree(a_linear(3), DimVector{0, 1, 0}, DimVector{0, 1, 1}) == 0);
  CHECK(semiinvariant_degree(a_linear(4), DimVector{1, 2, 1, 2}, DimVector{0, 1, 1, 0}) == 2);
}

TEST_CASE("constant semi-invariants are not selected") {
  CHECK_THROWS(ZeroSetSpec::make(a_linear(3), DimVector{0, 1, 0}));
}
