#include "qsing/orbit_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "qsing/errors.hpp"

namespace qsing {

namespace {

using RawParts = std::vector<std::pair<std::uint16_t, std::uint16_t>>;
using RawSink = std::function<void(const RawParts&, const int* homs, int codim)>;

// DFS over roots grouped by their first support vertex. Once every root
// starting at vertex x has been decided, the remaining entry at x must be zero.
void enumerate_raw(const HomTable& t, const DimVector& alpha, const std::vector<std::size_t>& targets,
                   const RawSink& sink) {
  const auto n = alpha.size();
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_vertex = [&](std::size_t i) {
    const auto& r = t.roots()[i];
    std::size_t x = 0;
    while (r[x] == 0) ++x;
    return x;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return first_vertex(a) < first_vertex(b); });
  std::vector<std::size_t> lead(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) lead[p] = first_vertex(order[p]);

  const std::size_t w = targets.size();
  std::vector<int> homs(w, 0);
  RawParts parts;
  DimVector rem = alpha;
  int codim = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == order.size() || rem.is_zero()) {
      if (rem.is_zero()) sink(parts, homs.data(), codim);
      return;
    }
    const std::size_t x = lead[pos];
    // Vertices before x can no longer be filled.
    for (std::size_t y = 0; y < x; ++y)
      if (rem[y] != 0) return;
    const bool last_in_group = pos + 1 == order.size() || lead[pos + 1] != x;
    const std::size_t ri = order[pos];
    const DimVector& r = t.roots()[ri];
    int kmax = rem[x] / r[x];
    for (std::size_t y = 0; y < n; ++y)
      if (r[y] > 0) kmax = std::min(kmax, rem[y] / r[y]);
    const int kmin = last_in_group ? (rem[x] % r[x] == 0 ? rem[x] / r[x] : kmax + 1) : 0;
    for (int k = kmax; k >= kmin; --k) {
      if (k == 0) {
        dfs(pos + 1);
        continue;
      }
      int delta = 0;
      for (const auto& [p, m] : parts) delta += m * (t.ext(p, ri) + t.ext(ri, p));
      codim += k * delta;
      for (std::size_t j = 0; j < w; ++j) homs[j] += k * t.hom(ri, targets[j]);
      rem -= r * k;
      parts.emplace_back(static_cast<std::uint16_t>(ri), static_cast<std::uint16_t>(k));
      dfs(pos + 1);
      parts.pop_back();
      rem += r * k;
      for (std::size_t j = 0; j < w; ++j) homs[j] -= k * t.hom(ri, targets[j]);
      codim -= k * delta;
    }
  };
  dfs(0);
}

RepClass to_class(const HomTable& t, const RawParts& raw) {
  std::vector<std::pair<DimVector, int>> p;
  for (const auto& [ri, k] : raw) p.emplace_back(t.roots()[ri], k);
  return RepClass(std::move(p));
}

std::vector<std::size_t> selected_indices(const ZeroSetSpec& spec, const HomTable& t) {
  std::vector<std::size_t> out;
  for (int j : spec.selected) out.push_back(t.require_index(spec.perp.simples[static_cast<std::size_t>(j - 1)]));
  return out;
}

std::vector<int> class_profile(const HomTable& t, const RepClass& x) {
  std::vector<int> prof(t.size(), 0);
  for (const auto& [root, k] : x.parts) {
    const auto i = t.require_index(root);
    for (std::size_t j = 0; j < t.size(); ++j) prof[j] += k * t.hom(i, j);
  }
  return prof;
}

bool pointwise_le(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool less_by_size_then_parts(const RepClass& a, const RepClass& b) {
  if (a.summand_count() != b.summand_count()) return a.summand_count() < b.summand_count();
  return a.parts < b.parts;
}

}  // namespace

ZeroSetSpec ZeroSetSpec::make(const Quiver& q, const DimVector& alpha, std::vector<int> selected) {
  require_dynkin(q);
  q.check(alpha);
  ZeroSetSpec s{q, alpha, generic_decomposition(q, alpha), {}, {}};
  s.perp = perp_simples(q, s.generic);
  if (selected.empty()) {
    // Degree-zero semi-invariants are nonzero constants and do not cut anything out.
    for (int j = 1; j <= s.perp.r; ++j)
      if (semiinvariant_degree(q, alpha, s.perp.simples[j - 1]) > 0) selected.push_back(j);
    if (selected.empty()) throw InvalidInput("alpha has no semi-invariants of positive degree");
  }
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (int j : selected)
    if (j < 1 || j > s.perp.r)
      throw InvalidInput("simple index " + std::to_string(j) + " out of range 1.." + std::to_string(s.perp.r));
    else if (semiinvariant_degree(q, alpha, s.perp.simples[j - 1]) == 0)
      throw InvalidInput("simple " + std::to_string(j) + " gives a constant semi-invariant (degree 0)");
  s.selected = std::move(selected);
  return s;
}

void enumerate_classes(const Quiver& q, const DimVector& alpha, const std::function<void(const RepClass&)>& sink) {
  require_dynkin(q);
  q.check(alpha);
  if (!alpha.is_nonnegative()) throw InvalidInput("dimension vector has a negative entry");
  const HomTable& t = hom_table(q);
  enumerate_raw(t, alpha, {}, [&](const RawParts& p, const int*, int) { sink(to_class(t, p)); });
}

ClassCatalog::ClassCatalog(const ZeroSetSpec& spec, const Filter& keep)
    : table_(hom_table(spec.quiver)), width_(spec.selected.size()) {
  enumerate_raw(table_, spec.alpha, selected_indices(spec, table_), [&](const RawParts& p, const int* homs, int codim) {
    ++enumerated_;
    if (!keep(homs)) return;
    for (const auto& [ri, k] : p) {
      roots_.push_back(ri);
      mults_.push_back(k);
    }
    offsets_.push_back(static_cast<std::uint32_t>(roots_.size()));
    homs_.insert(homs_.end(), homs, homs + width_);
    codims_.push_back(codim);
  });
}

RepClass ClassCatalog::get(std::size_t i) const {
  RawParts p;
  for (auto k = offsets_[i]; k < offsets_[i + 1]; ++k) p.emplace_back(roots_[k], mults_[k]);
  return to_class(table_, p);
}

std::vector<int> ClassCatalog::profile(std::size_t i) const {
  std::vector<int> prof(table_.size(), 0);
  for (auto k = offsets_[i]; k < offsets_[i + 1]; ++k)
    for (std::size_t j = 0; j < table_.size(); ++j) prof[j] += mults_[k] * table_.hom(roots_[k], j);
  return prof;
}

std::optional<std::size_t> ClassCatalog::find(const RepClass& x) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (get(i) == x) return i;
  return std::nullopt;
}

bool in_zero_set(const RepClass& x, const ZeroSetSpec& spec) {
  const HomTable& t = hom_table(spec.quiver);
  for (int j : spec.selected)
    if (class_hom(t, x, spec.perp.simples[static_cast<std::size_t>(j - 1)]) == 0) return false;
  return true;
}

bool degenerates_to(const Quiver& q, const RepClass& m, const RepClass& n) {
  const auto size = static_cast<std::size_t>(q.vertex_count());
  if (m.total(size) != n.total(size)) throw DimensionMismatch("classes have different dimension vectors");
  const HomTable& t = hom_table(q);
  return pointwise_le(class_profile(t, m), class_profile(t, n));
}

long codimension(const Quiver& q, const RepClass& x) { return class_ext(hom_table(q), x, x); }

bool gradient_condition_a(const RepClass& x, const ZeroSetSpec& spec) {
  const HomTable& t = hom_table(spec.quiver);
  for (int j : spec.selected)
    if (class_hom(t, x, spec.perp.simples[static_cast<std::size_t>(j - 1)]) != 1) return false;
  return true;
}

bool ComponentReport::operator==(const ComponentReport& o) const {
  if (!(cls == o.cls) || codim != o.codim || hom_to_simples != o.hom_to_simples || gradient_a != o.gradient_a ||
      gradient_b_verified != o.gradient_b_verified || gradient_b_witnesses.size() != o.gradient_b_witnesses.size())
    return false;
  for (std::size_t i = 0; i < gradient_b_witnesses.size(); ++i)
    if (gradient_b_witnesses[i].k != o.gradient_b_witnesses[i].k ||
        !(gradient_b_witnesses[i].witness == o.gradient_b_witnesses[i].witness))
      return false;
  return true;
}

bool ReducednessReport::operator==(const ReducednessReport& o) const {
  return verdict == o.verdict && components == o.components && ci == o.ci && witness == o.witness &&
         violating_simple == o.violating_simple && violating_value == o.violating_value && reason == o.reason;
}

std::string to_string(ReducednessReport::Verdict v) {
  switch (v) {
    case ReducednessReport::Verdict::Reduced:
      return "reduced";
    case ReducednessReport::Verdict::NotReduced:
      return "not-reduced";
    default:
      return "unverified";
  }
}

namespace {

// Shared state for component and witness searches over one specification.
class ZeroSetAnalysis {
 public:
  explicit ZeroSetAnalysis(const ZeroSetSpec& spec)
      : spec_(spec),
        table_(hom_table(spec.quiver)),
        // Keep classes missing at most one selected simple: the zero set and
        // every zero set with one semi-invariant removed.
        catalog_(spec, [w = spec.selected.size()](const int* h) {
          std::size_t zeros = 0;
          for (std::size_t j = 0; j < w; ++j) zeros += h[j] == 0;
          return zeros <= 1;
        }) {}

  bool in_z(std::size_t i) const {
    for (std::size_t j = 0; j < spec_.selected.size(); ++j)
      if (catalog_.hom_to_selected(i, j) == 0) return false;
    return true;
  }

  // Position of k in the selection.
  std::size_t slot(int k) const {
    auto it = std::find(spec_.selected.begin(), spec_.selected.end(), k);
    if (it == spec_.selected.end()) throw InvalidInput("simple index not in selection");
    return static_cast<std::size_t>(it - spec_.selected.begin());
  }

  bool in_z_without(std::size_t i, std::size_t skip) const {
    for (std::size_t j = 0; j < spec_.selected.size(); ++j)
      if (j != skip && catalog_.hom_to_selected(i, j) == 0) return false;
    return true;
  }

  const std::vector<int>& profile(std::size_t i) {
    auto it = profiles_.find(i);
    if (it == profiles_.end()) it = profiles_.emplace(i, catalog_.profile(i)).first;
    return it->second;
  }

  std::vector<std::size_t> maximal_indices() {
    std::vector<std::size_t> zs;
    for (std::size_t i = 0; i < catalog_.size(); ++i)
      if (in_z(i)) zs.push_back(i);
    std::stable_sort(zs.begin(), zs.end(), [&](std::size_t a, std::size_t b) { return catalog_.codim(a) < catalog_.codim(b); });
    std::vector<std::size_t> maxima;
    for (auto i : zs) {
      const auto& p = profile(i);
      bool dominated = false;
      for (auto m : maxima)
        if (pointwise_le(profile(m), p)) dominated = true;
      if (!dominated) maxima.push_back(i);
    }
    std::sort(maxima.begin(), maxima.end(),
              [&](std::size_t a, std::size_t b) { return less_by_size_then_parts(catalog_.get(a), catalog_.get(b)); });
    return maxima;
  }

  ComponentReport report(std::size_t i) {
    ComponentReport c;
    c.cls = catalog_.get(i);
    c.codim = catalog_.codim(i);
    for (const auto& s : spec_.perp.simples) c.hom_to_simples.push_back(static_cast<int>(class_hom(table_, c.cls, s)));
    c.gradient_a = gradient_condition_a(c.cls, spec_);
    return c;
  }

  // A condition-(a) class inside the orbit closure of catalog entry i.
  bool closure_has_a_representative(std::size_t i) {
    const auto& top = profile(i);
    for (std::size_t n = 0; n < catalog_.size(); ++n) {
      if (!in_z(n)) continue;
      bool all_one = true;
      for (std::size_t j = 0; j < spec_.selected.size(); ++j)
        if (catalog_.hom_to_selected(n, j) != 1) all_one = false;
      if (all_one && pointwise_le(top, profile(n))) return true;
    }
    return false;
  }

  std::optional<RepClass> b_witness(std::size_t target, int k) {
    const std::size_t skip = slot(k);
    const auto& ptarget = profile(target);
    const int ctarget = catalog_.codim(target);
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < catalog_.size(); ++i) {
      if (i == target) continue;
      bool pattern = true;
      for (std::size_t j = 0; j < spec_.selected.size(); ++j)
        if (catalog_.hom_to_selected(i, j) != (j == skip ? 0 : 1)) pattern = false;
      if (pattern && catalog_.codim(i) < ctarget) cands.push_back(i);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) { return catalog_.codim(a) > catalog_.codim(b); });
    for (auto c : cands) {
      const auto pc = profile(c);
      if (!pointwise_le(pc, ptarget)) continue;
      bool cover = true;
      for (std::size_t y = 0; y < catalog_.size() && cover; ++y) {
        if (y == c || y == target) continue;
        if (catalog_.codim(y) <= catalog_.codim(c) || catalog_.codim(y) >= ctarget) continue;
        if (!in_z_without(y, skip)) continue;
        const auto& py = profile(y);
        if (pointwise_le(pc, py) && pointwise_le(py, ptarget)) cover = false;
      }
      if (cover) return catalog_.get(c);
    }
    return std::nullopt;
  }

  const ClassCatalog& catalog() const { return catalog_; }

 private:
  const ZeroSetSpec& spec_;
  const HomTable& table_;
  ClassCatalog catalog_;
  std::unordered_map<std::size_t, std::vector<int>> profiles_;
};

}  // namespace

std::vector<ComponentReport> components(const ZeroSetSpec& spec) {
  ZeroSetAnalysis a(spec);
  std::vector<ComponentReport> out;
  for (auto i : a.maximal_indices()) out.push_back(a.report(i));
  return out;
}

bool is_set_theoretic_ci(const ZeroSetSpec& spec, const std::vector<ComponentReport>& comps) {
  for (const auto& c : comps)
    if (c.codim != static_cast<int>(spec.selected.size())) return false;
  return true;
}

std::optional<RepClass> gradient_condition_b_witness(const RepClass& x, const ZeroSetSpec& spec, int k) {
  ZeroSetAnalysis a(spec);
  auto i = a.catalog().find(x);
  if (!i) throw InvalidInput("class " + x.to_string() + " is not in the zero set");
  return a.b_witness(*i, k);
}

ReducednessReport reducedness_report(const ZeroSetSpec& spec) {
  using V = ReducednessReport::Verdict;
  ZeroSetAnalysis a(spec);
  ReducednessReport rep;
  const auto maxima = a.maximal_indices();
  for (auto i : maxima) rep.components.push_back(a.report(i));
  rep.ci = is_set_theoretic_ci(spec, rep.components);
  if (rep.components.empty()) {
    rep.reason = "zero set is empty";
    return rep;
  }
  if (!rep.ci) {
    rep.reason = "not a set-theoretic complete intersection";
    return rep;
  }
  for (std::size_t c = 0; c < maxima.size(); ++c) {
    auto& comp = rep.components[c];
    if (comp.gradient_a || a.closure_has_a_representative(maxima[c])) continue;
    rep.verdict = V::NotReduced;
    rep.witness = comp.cls;
    for (int j : spec.selected) {
      const int h = comp.hom_to_simples[static_cast<std::size_t>(j - 1)];
      if (h != 1) {
        rep.violating_simple = j;
        rep.violating_value = h;
        break;
      }
    }
    rep.reason = "component " + comp.cls.to_string() + " violates the Hom-dimension-one condition";
    return rep;
  }
  bool all = true;
  for (std::size_t c = 0; c < maxima.size(); ++c) {
    auto& comp = rep.components[c];
    comp.gradient_b_verified = true;
    for (int k : spec.selected) {
      auto w = a.b_witness(maxima[c], k);
      if (w) {
        comp.gradient_b_witnesses.push_back({k, *w});
      } else {
        comp.gradient_b_verified = false;
      }
    }
    all = all && comp.gradient_b_verified;
  }
  if (all) {
    rep.verdict = V::Reduced;
  } else {
    rep.reason = "no self-extension witness found for some component";
  }
  return rep;
}

bool zprime_nonempty(const ZeroSetSpec& spec) {
  const HomTable& t = hom_table(spec.quiver);
  bool found = false;
  ClassCatalog cat(spec, [w = spec.selected.size()](const int* h) {
    for (std::size_t j = 0; j < w; ++j)
      if (h[j] == 0) return false;
    return true;
  });
  for (std::size_t i = 0; i < cat.size() && !found; ++i) {
    const RepClass x = cat.get(i);
    found = class_ext(t, spec.generic, x) == 0 && class_ext(t, x, spec.generic) == 0;
  }
  return found;
}

bool h_nonempty(const ZeroSetSpec& spec) {
  ClassCatalog cat(spec, [w = spec.selected.size()](const int* h) {
    for (std::size_t j = 0; j < w; ++j)
      if (h[j] != 1) return false;
    return true;
  });
  return cat.size() > 0;
}

int multiplicity_bound_general(const Classification& c) {
  using K = Classification::Kind;
  if (c.kind == K::Wild) throw NonDynkin("no multiplicity bound for wild quivers");
  if (c.kind == K::Dynkin) return c.type == 'A' ? 1 : 2;
  return c.type == 'A' ? 1 : 3;
}

int multiplicity_bound_dynkin(const Classification& c) {
  if (!c.is_dynkin()) throw NonDynkin("Dynkin multiplicity bound requested for a non-Dynkin quiver");
  return c.type == 'A' ? 1 : 2;
}

}  // namespace qsing
