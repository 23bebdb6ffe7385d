#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsing/json_io.hpp"

namespace qsing {

// "vertices n" then one "arrow t h" per line; '#' starts a comment.
Quiver parse_quiver(const std::string& text);
Quiver read_quiver_file(const std::string& path);
// "1,2,3" (parentheses and spaces tolerated).
std::vector<int> parse_int_list(const std::string& text);

// A named example: quiver, dimension vector and selected simples (1-based,
// empty meaning all). Simples are picked by dimension vector so the choice is
// independent of the sorted simple order.
struct Preset {
  std::string name;
  Quiver quiver;
  DimVector alpha;
  std::vector<int> selected;
  // Variable k of the computed family is variable permutation[k] (0-based) of
  // the reference family; identity when no reference order exists.
  std::vector<int> permutation;
};

std::vector<std::string> preset_names();
Preset make_preset(const std::string& name, int n, int m);

struct AnalysisRequest {
  Quiver quiver;
  DimVector alpha;
  std::vector<int> selected;  // 1-based, empty for all
  int box_bound = 6;
  int depth_bound = 10;
};

struct DecomposeReport {
  Quiver quiver;
  DimVector alpha;
  Classification classification;
  bool prehomogeneous = false;
  RepClass generic;
  std::vector<DimVector> simples;
  bool operator==(const DecomposeReport&) const = default;
};

struct NullconeReport {
  Quiver quiver;
  DimVector alpha;
  std::vector<int> selected;
  std::vector<DimVector> simples;
  ReducednessReport report;
  bool operator==(const NullconeReport&) const = default;
};

struct BFunctionReport {
  Quiver quiver;
  DimVector alpha;
  std::vector<int> selected;
  BFunctionFamily family;
  bool operator==(const BFunctionReport&) const = default;
};

struct SingularitiesReport {
  Quiver quiver;
  DimVector alpha;
  std::vector<int> selected;
  Verdict verdict;
  bool operator==(const SingularitiesReport&) const = default;
};

struct HomEntry {
  DimVector source, target;
  long hom = 0, ext = 0, euler = 0;
  bool operator==(const HomEntry&) const = default;
};

struct HomReport {
  Quiver quiver;
  std::vector<HomEntry> entries;
  bool operator==(const HomReport&) const = default;
};

DecomposeReport run_decompose(const AnalysisRequest& req);
NullconeReport run_nullcone(const AnalysisRequest& req);
BFunctionReport run_bfunction(const AnalysisRequest& req);
SingularitiesReport run_singularities(const AnalysisRequest& req);
// Against every positive root when target is absent.
HomReport run_hom(const Quiver& q, const DimVector& source, const std::optional<DimVector>& target);

Json encode(const DecomposeReport& r);
Json encode(const NullconeReport& r);
Json encode(const BFunctionReport& r);
Json encode(const SingularitiesReport& r);
Json encode(const HomReport& r);
template <> DecomposeReport decode<DecomposeReport>(const Json& j);
template <> NullconeReport decode<NullconeReport>(const Json& j);
template <> BFunctionReport decode<BFunctionReport>(const Json& j);
template <> SingularitiesReport decode<SingularitiesReport>(const Json& j);
template <> HomReport decode<HomReport>(const Json& j);

// Stacked layout: the branch arm of a D or E diagram sits above the row.
std::string stacked(const Quiver& q, const DimVector& d);

std::string render_text(const DecomposeReport& r);
std::string render_text(const NullconeReport& r);
std::string render_text(const BFunctionReport& r);
std::string render_text(const SingularitiesReport& r);
std::string render_text(const HomReport& r);

}  // namespace qsing
