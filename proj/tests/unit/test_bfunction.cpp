#include <doctest.h>

#include <random>

#include "qsing/bfunction.hpp"
#include "qsing/decomposition.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

TEST_CASE("bracket identity") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(0, 3), bound(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    Gamma d{small(rng), small(rng)};
    if (d[0] == 0 && d[1] == 0) d[0] = 1;
    int a = bound(rng), b = a + bound(rng);
    std::vector<int> m{1 + small(rng), 1 + small(rng)};
    CHECK(bracket_identity_check(d, a, b, m));
  }
}

TEST_CASE("expanding a bracket") {
  BracketTerm t{{1}, 0, 2, 1};
  auto forms = expand_term(t, {1});
  // [s]_{0,2} at m = 1 is (s+1)(s+2).
  REQUIRE(forms.size() == 2);
  BFunctionFamily f(1, {t});
  CHECK(f.render() == "[s]^{1}_{2}");
  CHECK(f.render_polynomial() == "(s+1)(s+2)");
  CHECK(evaluate(f, {1}, {Rational(-1)}) == 0);
  CHECK(evaluate(f, {1}, {Rational(0)}) == 2);
}

TEST_CASE("specializing a variable moves vanished gammas to units") {
  BFunctionFamily f(2, {BracketTerm{{1, 0}, 0, 1, 1}, BracketTerm{{1, 1}, 1, 3, 1}});
  auto s = specialize(f, 1, 0);
  CHECK(s.scalar_terms.size() == 1);
  CHECK(s.family.terms().size() == 1);
}

TEST_CASE("A2 b-function is s+1") {
  Quiver q = a_linear(2);
  auto f = compute_bfunction(q, DimVector{1, 1}, {DimVector{0, 1}});
  CHECK(f.r() == 1);
  CHECK(f.render_polynomial() == "s+1");
}

TEST_CASE("type A hypersurfaces have integer roots ending at -1") {
  Quiver q = a_linear(3);
  auto f = compute_bfunction(q, DimVector{1, 2, 1}, perp_simples(q, generic_decomposition(q, DimVector{1, 2, 1})).simples);
  CHECK(f.all_constants_positive());
  for (const auto& t : f.terms()) CHECK(t.gamma.size() == static_cast<std::size_t>(f.r()));
}

TEST_CASE("permuting variables twice with inverse permutations is the identity") {
  BFunctionFamily f(3, {BracketTerm{{1, 0, 2}, 0, 1, 1}, BracketTerm{{0, 1, 1}, 2, 4, 1}});
  std::vector<int> p{2, 0, 1}, inv{1, 2, 0};
  CHECK(f.permuted(p).permuted(inv).equivalent(f));
  CHECK_FALSE(f.permuted(p).equivalent(f));
}

TEST_CASE("random reflection orders agree") {
  Quiver q = e_quiver(6);
  DimVector alpha{1, 3, 3, 3, 1, 2};
  auto simples = perp_simples(q, generic_decomposition(q, alpha)).simples;
  auto base = compute_bfunction(q, alpha, simples);
  for (unsigned seed : {1u, 2u, 3u}) {
    BFunctionOptions opts;
    opts.random_seed = seed;
    CHECK(compute_bfunction(q, alpha, simples, opts).equivalent(base));
  }
}

TEST_CASE("irrelevant sinks are dropped before castling") {
  // c_S is the rank-4 quadratic form B*A, so b(s) = (s+1)(s+2).
  Quiver q = a_linear(4);
  auto f = compute_bfunction(q, DimVector{1, 2, 1, 2}, {DimVector{0, 1, 1, 0}});
  CHECK(f.render_polynomial() == "(s+1)(s+2)");
}
