#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsing/decomposition.hpp"

namespace qsing {

struct ZeroSetSpec {
  Quiver quiver;
  DimVector alpha;
  RepClass generic;
  PerpData perp;
  std::vector<int> selected;  // 1-based indices into perp.simples, ascending

  // Empty selection means all simples (the nullcone).
  static ZeroSetSpec make(const Quiver& q, const DimVector& alpha, std::vector<int> selected = {});
};

// Streams every class of dimension vector alpha exactly once, in a fixed order.
void enumerate_classes(const Quiver& q, const DimVector& alpha, const std::function<void(const RepClass&)>& sink);

// All classes of alpha whose Hom dimensions to the selected simples pass a
// filter, stored compactly with their Hom values and codimensions.
class ClassCatalog {
 public:
  using Filter = std::function<bool(const int* hom_to_selected)>;
  ClassCatalog(const ZeroSetSpec& spec, const Filter& keep);

  std::size_t size() const { return offsets_.size() - 1; }
  RepClass get(std::size_t i) const;
  int hom_to_selected(std::size_t i, std::size_t j) const { return homs_[i * width_ + j]; }
  int codim(std::size_t i) const { return codims_[i]; }
  // Hom dimensions from class i to every positive root.
  std::vector<int> profile(std::size_t i) const;
  std::optional<std::size_t> find(const RepClass& x) const;
  std::size_t enumerated() const { return enumerated_; }

 private:
  const HomTable& table_;
  std::size_t width_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint16_t> roots_;
  std::vector<std::uint16_t> mults_;
  std::vector<int> homs_;
  std::vector<int> codims_;
  std::size_t enumerated_ = 0;
};

bool in_zero_set(const RepClass& x, const ZeroSetSpec& spec);
// M degenerates to N iff hom(M,X) <= hom(N,X) for every indecomposable X.
bool degenerates_to(const Quiver& q, const RepClass& m, const RepClass& n);
long codimension(const Quiver& q, const RepClass& x);

struct BWitness {
  int k;  // 1-based simple index
  RepClass witness;
};

struct ComponentReport {
  RepClass cls;
  int codim = 0;
  std::vector<int> hom_to_simples;  // against every perpendicular simple
  bool gradient_a = false;
  std::vector<BWitness> gradient_b_witnesses;
  bool gradient_b_verified = false;
  bool operator==(const ComponentReport&) const;
};

std::vector<ComponentReport> components(const ZeroSetSpec& spec);
bool is_set_theoretic_ci(const ZeroSetSpec& spec, const std::vector<ComponentReport>& comps);
bool gradient_condition_a(const RepClass& x, const ZeroSetSpec& spec);
std::optional<RepClass> gradient_condition_b_witness(const RepClass& x, const ZeroSetSpec& spec, int k);

struct ReducednessReport {
  enum class Verdict { Reduced, NotReduced, Unverified };
  Verdict verdict = Verdict::Unverified;
  std::vector<ComponentReport> components;
  bool ci = false;
  std::optional<RepClass> witness;  // failing component when NotReduced
  int violating_simple = 0;        // 1-based simple index
  int violating_value = 0;         // its Hom dimension
  std::string reason;
  bool operator==(const ReducednessReport&) const;
};

std::string to_string(ReducednessReport::Verdict v);
ReducednessReport reducedness_report(const ZeroSetSpec& spec);

bool zprime_nonempty(const ZeroSetSpec& spec);
bool h_nonempty(const ZeroSetSpec& spec);

// Multiplicity bounds: the general bound table and the sharper Dynkin table.
int multiplicity_bound_general(const Classification& c);
int multiplicity_bound_dynkin(const Classification& c);

}  // namespace qsing
