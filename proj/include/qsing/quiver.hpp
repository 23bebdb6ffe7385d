#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qsing {

// Integer vector indexed by vertices. Entries may be negative so that
// Coxeter images can be represented before testing membership in N^n.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  DimVector(std::initializer_list<int> xs) : v_(xs) {}
  explicit DimVector(std::vector<int> xs) : v_(std::move(xs)) {}

  static DimVector unit(std::size_t n, int vertex);  // vertex is 1-based

  std::size_t size() const { return v_.size(); }
  // 1-based vertex access.
  int at(int vertex) const { return v_[static_cast<std::size_t>(vertex - 1)]; }
  int& at(int vertex) { return v_[static_cast<std::size_t>(vertex - 1)]; }
  // 0-based access.
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& entries() const { return v_; }

  bool is_nonnegative() const;
  bool is_zero() const;
  long total() const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector operator*(int k) const;
  DimVector& operator+=(const DimVector& o);
  DimVector& operator-=(const DimVector& o);
  // Componentwise b <= a.
  bool dominates(const DimVector& b) const;

  auto operator<=>(const DimVector&) const = default;
  bool operator==(const DimVector&) const = default;

  std::string to_string() const;  // "(1,2,3)"

 private:
  std::vector<int> v_;
};

struct DimVectorHash {
  std::size_t operator()(const DimVector& d) const noexcept;
};

struct Arrow {
  int tail;
  int head;
  bool operator==(const Arrow&) const = default;
};

// Finite acyclic quiver with vertices 1..n. Arrow indices are stable.
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool is_sink(int x) const;
  bool is_source(int x) const;
  // Same arrow list with every arrow incident to x reversed.
  Quiver reversed_at(int x) const;
  // Vertices ordered so every arrow's head precedes its tail; each prefix
  // vertex is a sink after reflecting the previous ones.
  std::vector<int> admissible_sink_order() const;
  std::vector<std::vector<int>> admissible_sink_orders(std::size_t limit) const;
  bool is_connected() const;

  void check(const DimVector& d) const;  // throws DimensionMismatch

  bool operator==(const Quiver&) const = default;
  std::string to_string() const;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
long tits_form(const Quiver& q, const DimVector& a);

using IntMatrix = std::vector<std::vector<long>>;

struct EulerData {
  IntMatrix euler_matrix;
  IntMatrix coxeter_matrix;
  DimVector apply_coxeter(const DimVector& d) const;
};

EulerData coxeter(const Quiver& q);

struct Classification {
  enum class Kind { Dynkin, ExtendedDynkin, Wild };
  Kind kind = Kind::Wild;
  char type = '?';  // 'A', 'D' or 'E'
  int rank = 0;     // n for Dynkin, n - 1 for extended types

  bool is_dynkin() const { return kind == Kind::Dynkin; }
  std::string to_string() const;
  bool operator==(const Classification&) const = default;
};

// Disconnected quivers are reported as Wild; the analysis only accepts
// connected Dynkin input.
Classification classify(const Quiver& q);
void require_dynkin(const Quiver& q);  // throws NonDynkin
int coxeter_number(const Classification& c);

}  // namespace qsing
