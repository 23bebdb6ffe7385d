#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsing/quiver.hpp"
#include "qsing/rational_matrix.hpp"

namespace qsing {

using Gamma = std::vector<int>;

// [s]^gamma_{a,b} raised to mult: prod_{i=a+1}^{b} prod_{j=0}^{d-1} (gamma.s + i + j), d = gamma.m.
struct BracketTerm {
  Gamma gamma;
  int a = 0;
  int b = 0;
  int mult = 1;
  bool operator==(const BracketTerm&) const = default;
  auto operator<=>(const BracketTerm&) const = default;
};

// Signed count of i in (a,b] per gamma; the canonical content of a family.
using BracketCounts = std::map<Gamma, std::map<int, long>>;

struct LinearForm {
  std::vector<Rational> gamma;
  Rational constant;
  bool operator==(const LinearForm&) const = default;
  bool operator<(const LinearForm& o) const;
  std::string to_string() const;
};

struct FamilyMeta {
  std::string quiver;               // text form of the quiver
  std::vector<int> alpha;
  std::vector<std::vector<int>> simples;  // one per variable, in variable order
  bool operator==(const FamilyMeta&) const = default;
};

class BFunctionFamily {
 public:
  BFunctionFamily() = default;
  // Normalizes: merges equal gammas and splits counts into nested intervals.
  BFunctionFamily(int r, const std::vector<BracketTerm>& terms, FamilyMeta meta = {});
  static BFunctionFamily from_counts(int r, const BracketCounts& counts, FamilyMeta meta = {});

  int r() const { return r_; }
  const std::vector<BracketTerm>& terms() const { return terms_; }
  const FamilyMeta& meta() const { return meta_; }
  BracketCounts counts() const;

  // Same product of brackets for every multiplicity tuple.
  bool equivalent(const BFunctionFamily& o) const { return r_ == o.r_ && counts() == o.counts(); }
  bool operator==(const BFunctionFamily& o) const { return r_ == o.r_ && terms_ == o.terms_ && meta_ == o.meta_; }

  // New variable k is old variable perm[k] (0-based).
  BFunctionFamily permuted(const std::vector<int>& perm) const;
  bool all_constants_positive() const;

  std::string render() const;             // "[s]^{1000}_{4}.[s]^{0011}_{2,6}..."
  std::string render_polynomial() const;  // r = 1 only, expanded at m = 1: "(s+1)(s+2)"

 private:
  int r_ = 0;
  std::vector<BracketTerm> terms_;
  FamilyMeta meta_;
};

std::string render_gamma(const Gamma& g);
std::string render_term(const BracketTerm& t);

std::vector<LinearForm> expand(const BFunctionFamily& f, const std::vector<int>& m);
std::vector<LinearForm> expand_term(const BracketTerm& t, const std::vector<int>& m);
Rational evaluate(const BFunctionFamily& f, const std::vector<int>& m, const std::vector<Rational>& z);

// Checks [s]^d_{a,b} [s]^d_{0,a} = [s]^d_{0,b} by expansion at several m.
bool bracket_identity_check(const Gamma& d, int a, int b);
bool bracket_identity_check(const Gamma& d, int a, int b, const std::vector<int>& m);

struct SpecializeResult {
  BFunctionFamily family;
  std::vector<BracketTerm> scalar_terms;  // terms whose gamma vanished (units)
};

// Substitutes s_i = value (1-based i) and drops the coordinate.
SpecializeResult specialize(const BFunctionFamily& f, int i, int value);

// State of the reflection recursion: current orientation, alpha, the simples'
// dimension vectors, and the accumulated bracket counts.
struct ReflectionState {
  Quiver quiver;
  DimVector alpha;
  std::vector<DimVector> betas;
  BracketCounts counts;
};

// One Coxeter step; nullopt when c(alpha) or some c(beta) leaves N^n.
std::optional<ReflectionState> reflection_step(const ReflectionState& s);

enum class VertexMove { Sink, Source };
// Castling reflection at a single sink or source; nullopt if not admissible.
std::optional<ReflectionState> vertex_reflection(const ReflectionState& s, int x, VertexMove kind);

struct BFunctionOptions {
  std::size_t max_states = 2000000;
  // Randomized depth-first terminal search instead of breadth-first (for tests).
  std::optional<unsigned> random_seed;
};

BFunctionFamily compute_bfunction(const Quiver& q, const DimVector& alpha, const std::vector<DimVector>& simples,
                                  const BFunctionOptions& opts = {});

}  // namespace qsing
