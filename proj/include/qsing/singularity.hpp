#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsing/bfunction.hpp"
#include "qsing/linear_program.hpp"
#include "qsing/orbit_geometry.hpp"

namespace qsing {

// b_c(s) = b_{c+}(s + c-) * prod_{c_i < 0} binom(s_i, -c_i).
struct GeneratorBc {
  std::vector<int> c;
  std::vector<LinearForm> factors;
  std::vector<std::pair<int, int>> binomial_factors;  // (0-based variable, order -c_i)
};

GeneratorBc generator_bc(const BFunctionFamily& f, const std::vector<int>& c);
Rational evaluate_generator(const GeneratorBc& g, const std::vector<Rational>& z);
// Fast vanishing test that does not expand the family.
bool generator_vanishes(const BFunctionFamily& f, const std::vector<int>& c, const std::vector<Rational>& z);

bool is_good(const std::vector<Rational>& z, int r);

// Integer interval of the line parameter t, unbounded where an end is absent.
struct ParamInterval {
  std::optional<Integer> lo, hi;
  bool operator==(const ParamInterval&) const = default;
};

struct Membership {
  enum class Kind { Member, NonMember, UnknownBeyondBox };
  Kind kind = Kind::UnknownBeyondBox;
  bool exact = false;
  std::string proof;
  std::vector<int> witness_c;             // NonMember
  std::vector<ParamInterval> cover;       // r = 2 Member: intervals covering Z
  bool operator==(const Membership&) const = default;
};

std::string to_string(Membership::Kind k);
Membership membership_in_ztilde(const BFunctionFamily& f, const std::vector<Rational>& z, int box_bound = 6);

// z_var is not an integer in [lo, hi]; a missing end is infinite.
struct Exclusion {
  int var = 0;
  std::optional<Affine> lo, hi;
  bool operator==(const Exclusion&) const = default;
};

// One choice of terms from prod Gamma_i and the weights proving e.z < -r.
struct ReducATuple {
  std::vector<int> terms;            // node term index per i in I
  std::vector<int> support;          // distinct term indices carrying u
  std::vector<Rational> u;
  BoundCertificate bound;            // sum u (a+1) - r - sum(fixed) >= bound > 0
  bool operator==(const ReducATuple&) const = default;
};

// e - t e^i - sum lambda gamma vanishes off J, lambda >= 0, t != 0.
struct ConeMembership {
  int var = 0;
  std::vector<Rational> lambda;      // over the node's Gamma list
  Rational t;
  bool operator==(const ConeMembership&) const = default;
};

// Certificate for the unit roots of b_{e^i} all being excluded.
struct ClosureWitness {
  int term = 0;
  int t = 0;
  int exclusion = 0;
  std::optional<BoundCertificate> above_lo, below_hi;
  bool operator==(const ClosureWitness&) const = default;
};

enum class CaseRule {
  ReducA,
  ReducB,
  FactorAnalysis,  // one variable left: split over the roots of b_{e^x}
  Good,            // all variables fixed and e.z <= -r with equality only at -e
  Closed,          // some b_{e^i} has no admissible root
  Infeasible,      // parameter constraints are empty
  Inconclusive,
};
std::string to_string(CaseRule r);

struct CaseNode {
  // Assumptions: variable values as affine forms in integer parameters p_k,
  // linear constraints on the parameters, and excluded ranges.
  std::vector<std::optional<Affine>> values;
  int params = 0;
  std::vector<Affine> constraints;
  std::vector<Exclusion> exclusions;

  CaseRule rule = CaseRule::Inconclusive;
  std::vector<int> vars;  // I for ReducA, J for ReducB, the split variable for FactorAnalysis, closed var
  std::vector<int> j_plus, j_minus;
  std::vector<ReducATuple> tuples;
  std::vector<Rational> farkas;
  std::vector<ConeMembership> memberships;
  std::vector<ClosureWitness> closure;
  std::vector<BoundCertificate> bounds;  // Good: one per variable (<= -1) or a single strict sum bound
  bool strict_sum = false;
  std::optional<InfeasibilityCertificate> infeasible;
  std::string note;
  std::vector<CaseNode> children;

  bool operator==(const CaseNode&) const = default;
  std::size_t size() const;
  std::size_t open_leaves() const;
};

struct CaseCertificate {
  BFunctionFamily family;
  CaseNode root;
  bool operator==(const CaseCertificate&) const = default;
};

struct ReducAResult {
  bool applies = false;
  std::vector<ReducATuple> certificates;
  std::vector<int> failing_tuple;
};
ReducAResult reduc_a(const BFunctionFamily& f, const std::vector<int>& I);

struct ReducBResult {
  bool applicable = false;
  std::vector<int> J, j_plus, j_minus;
  std::vector<Rational> farkas;
  std::vector<ConeMembership> memberships;
};
// Fixed variables (0-based) are dropped from the problem.
ReducBResult reduc_b(const BFunctionFamily& f, const std::vector<int>& fixed = {});

struct CertifyResult {
  enum class Kind { Certificate, Inconclusive, Refuted };
  Kind kind = Kind::Inconclusive;
  CaseCertificate certificate;  // partial tree when not a certificate
  std::vector<Rational> witness;
  std::string reason;
};
std::string to_string(CertifyResult::Kind k);

CertifyResult certify_all_good(const BFunctionFamily& f, int depth_bound = 10, int box_bound = 6);

// Non-good members of Z(B~) for r <= 2, best first; empty otherwise.
std::vector<std::vector<Rational>> refutation_candidates(const BFunctionFamily& f, int box_bound = 6);

struct CheckResult {
  bool ok = false;
  std::string error;
};
// Re-derives every node from the family and re-checks each certificate.
CheckResult verify_certificate(const CaseCertificate& cert);

bool check_form_assumption(const BFunctionFamily& f);

// Roots of the one-variable b-function at m = 1, largest first, with multiplicity.
std::vector<std::pair<Rational, int>> bfunction_roots(const BFunctionFamily& f);

enum class VerdictKind { RationalSingularities, NotCertified, NotApplicable };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  std::string reason;
  int r = 0;
  BFunctionFamily family;
  std::optional<ReducednessReport> reducedness;
  bool complete_intersection = false;
  bool form_assumption = false;
  std::optional<Rational> largest_root;  // r = 1
  int largest_root_multiplicity = 0;
  std::optional<CaseCertificate> certificate;
  std::optional<std::vector<Rational>> witness;
  bool operator==(const Verdict&) const = default;
};

struct VerdictOptions {
  int depth_bound = 10;
  int box_bound = 6;
};

Verdict rational_singularities_verdict(const Quiver& q, const DimVector& alpha, const std::vector<int>& selected,
                                       const VerdictOptions& opts = {});

}  // namespace qsing
