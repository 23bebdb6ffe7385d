#include "qsing/reports.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "qsing/errors.hpp"

namespace qsing {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& tok, const std::string& where) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw InvalidInput(where + ": '" + tok + "' is not an integer");
  }
  if (used != tok.size()) throw InvalidInput(where + ": '" + tok + "' is not an integer");
  return v;
}

Quiver e6_quiver() { return Quiver(6, {{1, 2}, {2, 3}, {6, 3}, {4, 3}, {5, 4}}); }
Quiver e8_quiver() { return Quiver(8, {{1, 2}, {2, 3}, {8, 3}, {4, 3}, {5, 4}, {6, 5}, {7, 6}}); }

std::vector<int> select_by_vectors(const Quiver& q, const DimVector& alpha, const std::vector<DimVector>& wanted) {
  auto spec = ZeroSetSpec::make(q, alpha);
  std::vector<int> out;
  for (const auto& w : wanted) {
    auto it = std::find(spec.perp.simples.begin(), spec.perp.simples.end(), w);
    if (it == spec.perp.simples.end()) throw InternalError("preset simple " + w.to_string() + " not found");
    out.push_back(static_cast<int>(it - spec.perp.simples.begin()) + 1);
  }
  return out;
}

std::vector<DimVector> simples_of(const ZeroSetSpec& spec) {
  std::vector<DimVector> out;
  for (int k : spec.selected) out.push_back(spec.perp.simples[k - 1]);
  return out;
}

Json ints(const std::vector<int>& v) { return v; }

Json header(const std::string& command, const Quiver& q) {
  return {{"command", command}, {"quiver", encode(q)}};
}

std::string indent(const std::string& block, const std::string& pad) {
  std::ostringstream os;
  std::istringstream is(block);
  std::string line;
  while (std::getline(is, line)) os << pad << line << "\n";
  return os.str();
}

std::string list_text(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string selection_text(const std::vector<int>& sel) { return sel.empty() ? "all" : list_text(sel); }

std::string point_text(const std::vector<Rational>& z) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<Arrow> arrows;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    const std::string where = "line " + std::to_string(lineno);
    if (tok[0] == "vertices") {
      if (n) throw InvalidInput(where + ": duplicate 'vertices' line");
      if (!arrows.empty()) throw InvalidInput(where + ": 'vertices' must come first");
      if (tok.size() != 2) throw InvalidInput(where + ": expected 'vertices n'");
      long v = parse_long(tok[1], where);
      if (v < 1 || v > 1000) throw InvalidInput(where + ": vertex count out of range");
      n = static_cast<int>(v);
    } else if (tok[0] == "arrow") {
      if (!n) throw InvalidInput(where + ": 'arrow' before 'vertices'");
      if (tok.size() != 3) throw InvalidInput(where + ": expected 'arrow t h'");
      arrows.push_back(Arrow{static_cast<int>(parse_long(tok[1], where)), static_cast<int>(parse_long(tok[2], where))});
    } else {
      throw InvalidInput(where + ": unknown keyword '" + tok[0] + "'");
    }
  }
  if (!n) throw InvalidInput("quiver file has no 'vertices' line");
  return Quiver(*n, arrows);
}

Quiver read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read quiver file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str());
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ' && ch != ';') s += ch;
  if (s.empty()) throw InvalidInput("empty integer list");
  std::vector<int> out;
  std::istringstream is(s);
  for (std::string tok; std::getline(is, tok, ',');) {
    if (tok.empty()) throw InvalidInput("empty entry in '" + text + "'");
    out.push_back(static_cast<int>(parse_long(tok, "list '" + text + "'")));
  }
  return out;
}

std::vector<std::string> preset_names() { return {"e6-ex1", "e8-notred", "e8-pos"}; }

Preset make_preset(const std::string& name, int n, int m) {
  if (n < 1 || m < 0) throw InvalidInput("preset parameters need n >= 1 and m >= 0");
  if (name == "e6-ex1") {
    DimVector alpha{n, 2 * n + m, 2 * n + m, 2 * n + m, n, n + m};
    return Preset{name, e6_quiver(), alpha, {}, {1, 2, 0, 3}};
  }
  if (name == "e8-notred") {
    DimVector alpha = DimVector{2, 4, 7, 4, 3, 2, 1, 3} * n;
    return Preset{name, e8_quiver(), alpha, {}, {}};
  }
  if (name == "e8-pos") {
    Quiver q = e8_quiver();
    DimVector alpha = DimVector{2, 4, 7, 4, 3, 2, 1, 3} * n;
    auto sel = select_by_vectors(q, alpha, {DimVector{0, 0, 1, 1, 1, 1, 1, 0}, DimVector{0, 1, 2, 1, 1, 1, 0, 1}});
    return Preset{name, q, alpha, sel, {0, 1}};
  }
  throw InvalidInput("unknown preset '" + name + "'");
}

DecomposeReport run_decompose(const AnalysisRequest& req) {
  req.quiver.check(req.alpha);
  if (!req.alpha.is_nonnegative()) throw InvalidInput("dimension vector must be nonnegative");
  DecomposeReport r{req.quiver, req.alpha, classify(req.quiver), false, {}, {}};
  require_dynkin(req.quiver);
  r.prehomogeneous = is_prehomogeneous(req.quiver, req.alpha);
  r.generic = generic_decomposition(req.quiver, req.alpha);
  r.simples = perp_simples(req.quiver, r.generic).simples;
  return r;
}

NullconeReport run_nullcone(const AnalysisRequest& req) {
  auto spec = ZeroSetSpec::make(req.quiver, req.alpha, req.selected);
  return NullconeReport{req.quiver, req.alpha, spec.selected, simples_of(spec), reducedness_report(spec)};
}

BFunctionReport run_bfunction(const AnalysisRequest& req) {
  auto spec = ZeroSetSpec::make(req.quiver, req.alpha, req.selected);
  auto simples = simples_of(spec);
  if (simples.empty()) throw InvalidInput("no semi-invariants: the generic decomposition has no perpendicular simples");
  return BFunctionReport{req.quiver, req.alpha, spec.selected, compute_bfunction(req.quiver, req.alpha, simples)};
}

SingularitiesReport run_singularities(const AnalysisRequest& req) {
  auto spec = ZeroSetSpec::make(req.quiver, req.alpha, req.selected);
  VerdictOptions opts{req.depth_bound, req.box_bound};
  return SingularitiesReport{req.quiver, req.alpha, spec.selected,
                             rational_singularities_verdict(req.quiver, req.alpha, spec.selected, opts)};
}

HomReport run_hom(const Quiver& q, const DimVector& source, const std::optional<DimVector>& target) {
  q.check(source);
  if (target) q.check(*target);
  const HomTable& t = hom_table(q);
  HomReport r{q, {}};
  std::size_t i = t.require_index(source);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (target && t.roots()[j] != *target) continue;
    r.entries.push_back(HomEntry{source, t.roots()[j], t.hom(i, j), t.ext(i, j), euler_form(q, source, t.roots()[j])});
  }
  if (target && r.entries.empty()) t.require_index(*target);
  return r;
}

Json encode(const DecomposeReport& r) {
  Json j = header("decompose", r.quiver);
  j["alpha"] = encode(r.alpha);
  j["classification"] = encode(r.classification);
  j["prehomogeneous"] = r.prehomogeneous;
  j["generic"] = encode(r.generic);
  j["simples"] = Json::array();
  for (const auto& s : r.simples) j["simples"].push_back(encode(s));
  j["r"] = r.simples.size();
  return j;
}

template <>
DecomposeReport decode<DecomposeReport>(const Json& j) {
  DecomposeReport r{decode<Quiver>(j.at("quiver")), decode<DimVector>(j.at("alpha")),
                    decode<Classification>(j.at("classification")), j.at("prehomogeneous").get<bool>(),
                    decode<RepClass>(j.at("generic")), {}};
  for (const auto& s : j.at("simples")) r.simples.push_back(decode<DimVector>(s));
  return r;
}

Json encode(const NullconeReport& r) {
  Json j = header("nullcone", r.quiver);
  j["alpha"] = encode(r.alpha);
  j["selected"] = ints(r.selected);
  j["simples"] = Json::array();
  for (const auto& s : r.simples) j["simples"].push_back(encode(s));
  j["report"] = encode(r.report);
  return j;
}

template <>
NullconeReport decode<NullconeReport>(const Json& j) {
  NullconeReport r{decode<Quiver>(j.at("quiver")), decode<DimVector>(j.at("alpha")),
                   j.at("selected").get<std::vector<int>>(), {}, decode<ReducednessReport>(j.at("report"))};
  for (const auto& s : j.at("simples")) r.simples.push_back(decode<DimVector>(s));
  return r;
}

Json encode(const BFunctionReport& r) {
  Json j = header("bfunction", r.quiver);
  j["alpha"] = encode(r.alpha);
  j["selected"] = ints(r.selected);
  j["family"] = encode(r.family);
  return j;
}

template <>
BFunctionReport decode<BFunctionReport>(const Json& j) {
  return BFunctionReport{decode<Quiver>(j.at("quiver")), decode<DimVector>(j.at("alpha")),
                         j.at("selected").get<std::vector<int>>(), decode<BFunctionFamily>(j.at("family"))};
}

Json encode(const SingularitiesReport& r) {
  Json j = header("singularities", r.quiver);
  j["alpha"] = encode(r.alpha);
  j["selected"] = ints(r.selected);
  j["verdict"] = encode(r.verdict);
  return j;
}

template <>
SingularitiesReport decode<SingularitiesReport>(const Json& j) {
  return SingularitiesReport{decode<Quiver>(j.at("quiver")), decode<DimVector>(j.at("alpha")),
                             j.at("selected").get<std::vector<int>>(), decode<Verdict>(j.at("verdict"))};
}

Json encode(const HomReport& r) {
  Json j = header("hom", r.quiver);
  j["entries"] = Json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"source", encode(e.source)},
                            {"target", encode(e.target)},
                            {"hom", e.hom},
                            {"ext", e.ext},
                            {"euler", e.euler}});
  return j;
}

template <>
HomReport decode<HomReport>(const Json& j) {
  HomReport r{decode<Quiver>(j.at("quiver")), {}};
  for (const auto& e : j.at("entries"))
    r.entries.push_back(HomEntry{decode<DimVector>(e.at("source")), decode<DimVector>(e.at("target")),
                                 e.at("hom").get<long>(), e.at("ext").get<long>(), e.at("euler").get<long>()});
  return r;
}

std::string stacked(const Quiver& q, const DimVector& d) {
  const int n = q.vertex_count();
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& a : q.arrows()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  int branch = 0;
  for (int x = 1; x <= n; ++x) {
    if (adj[x].size() > 3) return d.to_string();
    if (adj[x].size() == 3) {
      if (branch) return d.to_string();
      branch = x;
    }
  }
  if (!branch || static_cast<int>(q.arrow_count()) != n - 1 || !q.is_connected()) return d.to_string();
  // Walk each arm outward from the branch vertex.
  std::vector<std::vector<int>> arms;
  for (int start : adj[branch]) {
    std::vector<int> arm{start};
    int prev = branch, cur = start;
    for (;;) {
      int next = 0;
      for (int y : adj[cur])
        if (y != prev) next = y;
      if (!next) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  // Shortest arm goes on top (ties: the arm holding the largest vertex label).
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return *std::max_element(a.begin(), a.end()) > *std::max_element(b.begin(), b.end());
  });
  auto& left = *std::min_element(arms.begin() + 1, arms.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  const auto& right = (&left == &arms[1]) ? arms[2] : arms[1];
  std::vector<int> row(left.rbegin(), left.rend());
  const std::size_t col = row.size();
  row.push_back(branch);
  row.insert(row.end(), right.begin(), right.end());
  int width = 1;
  for (std::size_t i = 0; i < d.size(); ++i) width = std::max<int>(width, std::to_string(d[i]).size());
  std::ostringstream os;
  for (auto it = arms[0].rbegin(); it != arms[0].rend(); ++it)
    os << std::string(col * (width + 1), ' ') << std::setw(width) << d.at(*it) << "\n";
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << std::setw(width) << d.at(row[i]);
  return os.str();
}

std::string render_text(const DecomposeReport& r) {
  std::ostringstream os;
  os << "quiver: " << r.classification.to_string() << ", " << r.quiver.vertex_count() << " vertices\n";
  os << "alpha:\n" << indent(stacked(r.quiver, r.alpha), "  ");
  os << "prehomogeneous: " << (r.prehomogeneous ? "yes" : "no") << "\n";
  os << "generic decomposition: " << r.generic.to_string() << "\n";
  for (const auto& [root, k] : r.generic.parts) os << "  multiplicity " << k << ":\n" << indent(stacked(r.quiver, root), "    ");
  os << "perpendicular simples (r = " << r.simples.size() << "):\n";
  for (std::size_t i = 0; i < r.simples.size(); ++i) {
    os << "  S" << i + 1 << " = " << r.simples[i].to_string() << "\n";
    os << indent(stacked(r.quiver, r.simples[i]), "      ");
  }
  return os.str();
}

std::string render_text(const NullconeReport& r) {
  std::ostringstream os;
  const auto& rep = r.report;
  os << "alpha: " << r.alpha.to_string() << "\n";
  os << "selected simples: " << selection_text(r.selected) << "\n";
  for (std::size_t i = 0; i < r.simples.size(); ++i) os << "  S" << i + 1 << " = " << r.simples[i].to_string() << "\n";
  os << "components: " << rep.components.size() << "\n";
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    const auto& c = rep.components[i];
    os << "  N" << i + 1 << " = " << c.cls.to_string() << "\n";
    os << "       codim " << c.codim << ", hom to simples [" << list_text(c.hom_to_simples) << "], gradient (a) "
       << (c.gradient_a ? "yes" : "no") << ", gradient (b) " << (c.gradient_b_verified ? "verified" : "unverified")
       << "\n";
  }
  os << "complete intersection: " << (rep.ci ? "yes" : "no") << "\n";
  os << "verdict: " << to_string(rep.verdict) << "\n";
  if (rep.witness)
    os << "witness: " << rep.witness->to_string() << " (hom to S" << rep.violating_simple << " = "
       << rep.violating_value << ")\n";
  if (!rep.reason.empty()) os << "reason: " << rep.reason << "\n";
  return os.str();
}

std::string render_text(const BFunctionReport& r) {
  std::ostringstream os;
  os << "alpha: " << r.alpha.to_string() << "\n";
  os << "selected simples: " << selection_text(r.selected) << "\n";
  for (std::size_t i = 0; i < r.family.meta().simples.size(); ++i)
    os << "  s" << i + 1 << " <-> " << DimVector(r.family.meta().simples[i]).to_string() << "\n";
  os << "b(s) = " << r.family.render() << "\n";
  if (r.family.r() == 1) os << "b(s) at m = 1: " << r.family.render_polynomial() << "\n";
  return os.str();
}

std::string render_text(const SingularitiesReport& r) {
  std::ostringstream os;
  const auto& v = r.verdict;
  os << "alpha: " << r.alpha.to_string() << "\n";
  os << "selected simples: " << selection_text(r.selected) << "\n";
  if (v.r > 0) os << "b(s) = " << v.family.render() << "\n";
  if (v.r == 1) os << "b(s) at m = 1: " << v.family.render_polynomial() << "\n";
  if (v.reducedness) os << "reducedness: " << to_string(v.reducedness->verdict) << "\n";
  os << "complete intersection: " << (v.complete_intersection ? "yes" : "no") << "\n";
  os << "form assumption: " << (v.form_assumption ? "holds" : "fails") << "\n";
  if (v.largest_root)
    os << "largest root: " << v.largest_root->get_str() << " (multiplicity " << v.largest_root_multiplicity << ")\n";
  if (v.certificate)
    os << "certificate: " << v.certificate->root.size() << " nodes, checker "
       << (verify_certificate(*v.certificate).ok ? "accepts" : "rejects") << "\n";
  if (v.witness) os << "non-good point of Z(B~): " << point_text(*v.witness) << "\n";
  os << "verdict: " << to_string(v.kind) << "\n";
  os << "reason: " << v.reason << "\n";
  return os.str();
}

std::string render_text(const HomReport& r) {
  std::ostringstream os;
  os << "source                 target                 hom ext euler\n";
  for (const auto& e : r.entries)
    os << std::left << std::setw(23) << e.source.to_string() << std::setw(23) << e.target.to_string() << std::right
       << std::setw(3) << e.hom << " " << std::setw(3) << e.ext << " " << std::setw(5) << e.euler << "\n";
  return os.str();
}

}  // namespace qsing
