#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsing/rational_matrix.hpp"

namespace qsing {

// c + sum_k coeffs[k] x_k over rational variables; missing coefficients are zero.
struct Affine {
  Rational constant;
  std::vector<Rational> coeffs;

  Affine() = default;
  Affine(long c) : constant(c) {}  // NOLINT: implicit constants are convenient
  Affine(const Rational& c) : constant(c) {}  // NOLINT

  static Affine variable(std::size_t k);

  Rational coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }
  bool is_constant() const;
  bool has_integer_coefficients() const;
  Rational eval(const std::vector<Rational>& x) const;
  void trim();

  Affine operator+(const Affine& o) const;
  Affine operator-(const Affine& o) const;
  Affine operator-() const;
  Affine operator*(const Rational& k) const;
  Affine& operator+=(const Affine& o) { return *this = *this + o; }
  Affine& operator-=(const Affine& o) { return *this = *this - o; }
  bool operator==(const Affine& o) const;

  std::string to_string(const std::string& var = "p") const;
};

// f - bound = sum_k multipliers[k] * g_k + slack, with multipliers >= 0 and
// slack a nonnegative constant; proves f >= bound wherever every g_k >= 0.
struct BoundCertificate {
  Rational bound;
  std::vector<Rational> multipliers;
  bool operator==(const BoundCertificate&) const = default;
};

// sum_k multipliers[k] * g_k is a negative constant; proves the system empty.
struct InfeasibilityCertificate {
  std::vector<Rational> multipliers;
  bool operator==(const InfeasibilityCertificate&) const = default;
};

// Fourier-Motzkin over the system {g_k >= 0}.
class LinearSystem {
 public:
  explicit LinearSystem(std::vector<Affine> constraints) : rows_(std::move(constraints)) {}
  const std::vector<Affine>& constraints() const { return rows_; }

  std::optional<InfeasibilityCertificate> infeasibility() const;
  // Infimum of f; nullopt if unbounded below or the system is empty.
  std::optional<BoundCertificate> lower_bound(const Affine& f) const;
  // Any feasible point, by back substitution.
  std::optional<std::vector<Rational>> find_point(std::size_t nvars) const;

 private:
  std::vector<Affine> rows_;
};

bool check_bound(const std::vector<Affine>& constraints, const Affine& f, const BoundCertificate& cert);
bool check_infeasible(const std::vector<Affine>& constraints, const InfeasibilityCertificate& cert);

}  // namespace qsing
