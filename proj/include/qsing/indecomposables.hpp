#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qsing/quiver.hpp"
#include "qsing/rational_matrix.hpp"

namespace qsing {

// Explicit representation: one matrix of shape dims(head) x dims(tail) per arrow.
struct Representation {
  Quiver quiver;
  DimVector dims;
  std::vector<Matrix> maps;

  void validate() const;
};

Representation simple_representation(const Quiver& q, int vertex);
Representation direct_sum(const Representation& a, const Representation& b);
// Base change g = (g_x): V(a) -> g_{ha} V(a) g_{ta}^{-1}. Each g_x must be invertible.
Representation transform(const Representation& v, const std::vector<Matrix>& g);

// Reflection functors S+ at a sink and S- at a source. Arrow indices are
// kept; the arrows at x are reversed.
Representation sink_reflection(const Representation& v, int x);
Representation source_reflection(const Representation& v, int x);

// Positive roots sorted lexicographically ascending.
std::vector<DimVector> positive_roots(const Quiver& q);

// Indecomposable with dimension vector r, built by reflection functors along
// an admissible sink order (the default order if none is supplied).
Representation realize(const Quiver& q, const DimVector& r);
Representation realize(const Quiver& q, const DimVector& r, const std::vector<int>& sink_order);
// Cross-checking fallback: random integer maps, accepted only if End is one-dimensional.
std::optional<Representation> realize_random(const Quiver& q, const DimVector& r, std::uint64_t seed, int attempts = 20);

// Matrix of d^V_W. Domain basis: vertices ascending, then entries of each
// dims W(x) x dims V(x) block in column-major order. Codomain basis: arrows in
// index order, each block dims W(ha) x dims V(ta) in column-major order.
Matrix hom_matrix_dvw(const Representation& v, const Representation& w);
long hom_dim(const Representation& v, const Representation& w);
long ext_dim(const Representation& v, const Representation& w);

// Pairwise Hom and Ext dimensions between all indecomposables.
class HomTable {
 public:
  HomTable(const Quiver& q, const std::vector<int>& sink_order);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<DimVector>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  int hom(std::size_t i, std::size_t j) const { return hom_[i * roots_.size() + j]; }
  int ext(std::size_t i, std::size_t j) const { return ext_[i * roots_.size() + j]; }
  std::optional<std::size_t> index_of(const DimVector& r) const;
  std::size_t require_index(const DimVector& r) const;  // throws NotARoot
  const Representation& representation(std::size_t i) const { return reps_[i]; }

  bool same_values(const HomTable& other) const { return hom_ == other.hom_ && ext_ == other.ext_; }

 private:
  Quiver quiver_;
  std::vector<DimVector> roots_;
  std::vector<Representation> reps_;
  std::vector<int> hom_;
  std::vector<int> ext_;
  std::unordered_map<DimVector, std::size_t, DimVectorHash> index_;
};

// Cached per quiver; the returned reference stays valid for the process lifetime.
const HomTable& hom_table(const Quiver& q);

}  // namespace qsing
