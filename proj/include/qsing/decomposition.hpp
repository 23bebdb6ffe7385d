#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsing/indecomposables.hpp"

namespace qsing {

// Isomorphism class of a representation: distinct positive roots with
// multiplicities, kept in descending lexicographic order of the roots.
struct RepClass {
  std::vector<std::pair<DimVector, int>> parts;

  RepClass() = default;
  explicit RepClass(std::vector<std::pair<DimVector, int>> p);

  DimVector total(std::size_t n) const;
  int summand_count() const;  // with multiplicity
  std::string to_string() const;
  bool operator==(const RepClass&) const = default;
};

// Bilinear extensions of the Hom/Ext tables to classes.
long class_hom(const HomTable& t, const RepClass& x, const RepClass& y);
long class_ext(const HomTable& t, const RepClass& x, const RepClass& y);
long class_hom(const HomTable& t, const RepClass& x, const DimVector& root);
long class_hom(const HomTable& t, const DimVector& root, const RepClass& y);
long class_ext(const HomTable& t, const RepClass& x, const DimVector& root);
long class_ext(const HomTable& t, const DimVector& root, const RepClass& y);

RepClass generic_decomposition(const Quiver& q, const DimVector& alpha);

// Exact for Dynkin quivers. Otherwise a random point with Ext(V,V)=0 proves a
// dense orbit; if none of several random points has one, the answer is false.
bool is_prehomogeneous(const Quiver& q, const DimVector& alpha);

struct PerpData {
  std::vector<DimVector> simples;  // sorted lexicographically ascending
  int r = 0;
};

PerpData perp_simples(const Quiver& q, const RepClass& t);

// Explicit representation of a class as a direct sum of realized indecomposables.
Representation class_representation(const Quiver& q, const RepClass& x);

// Polynomial degree of V -> c_S(V) on Rep(Q, alpha) for a tree quiver: scaling every
// arrow by t is the base change t^h(x) with h(head) = h(tail) + 1, so the degree is
// sum_x h(x) alpha_x <e_x, S>.
long semiinvariant_degree(const Quiver& q, const DimVector& alpha, const DimVector& s);

// det d^V_S; requires <dim V, dim S> = 0.
Rational evaluate_semiinvariant(const Representation& v, const Representation& s);

}  // namespace qsing
