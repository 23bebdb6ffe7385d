#include <doctest.h>

#include <set>

#include "qsing/orbit_geometry.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

TEST_CASE("class enumeration is complete and duplicate free") {
  Quiver q = a_linear(2);
  std::set<std::string> seen;
  enumerate_classes(q, DimVector{2, 2}, [&](const RepClass& x) { CHECK(seen.insert(x.to_string()).second); });
  // Multisets of roots (1,0),(0,1),(1,1) summing to (2,2): k copies of (1,1), k = 0,1,2.
  CHECK(seen.size() == 3);
}

TEST_CASE("degeneration order on A2") {
  Quiver q = a_linear(2);
  RepClass gen({{DimVector{1, 1}, 1}});
  RepClass split({{DimVector{0, 1}, 1}, {DimVector{1, 0}, 1}});
  CHECK(degenerates_to(q, gen, split));
  CHECK_FALSE(degenerates_to(q, split, gen));
  CHECK(codimension(q, gen) == 0);
  CHECK(codimension(q, split) == 1);
}

TEST_CASE("A2 nullcone is reduced with one component") {
  auto spec = ZeroSetSpec::make(a_linear(2), DimVector{1, 1});
  auto rep = reducedness_report(spec);
  CHECK(rep.components.size() == 1);
  CHECK(rep.ci);
  CHECK(rep.verdict == ReducednessReport::Verdict::Reduced);
  CHECK(to_string(rep.verdict) == "reduced");
}

TEST_CASE("zero set membership follows hom to the selected simples") {
  auto spec = ZeroSetSpec::make(a_linear(2), DimVector{1, 1});
  CHECK_FALSE(in_zero_set(RepClass({{DimVector{1, 1}, 1}}), spec));
  CHECK(in_zero_set(RepClass({{DimVector{0, 1}, 1}, {DimVector{1, 0}, 1}}), spec));
}

TEST_CASE("multiplicity bounds") {
  CHECK(multiplicity_bound_dynkin(classify(a_linear(3))) == 1);
  CHECK(multiplicity_bound_dynkin(classify(d_quiver(4))) == 2);
}

TEST_CASE("selection out of range is invalid input") {
  CHECK_THROWS(ZeroSetSpec::make(a_linear(2), DimVector{1, 1}, {2}));
}
