#include "qsing/json_io.hpp"

#include "qsing/errors.hpp"

namespace qsing {

namespace {

template <class T, class F>
Json array_of(const std::vector<T>& xs, F f) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(f(x));
  return a;
}

template <class T>
Json encode_all(const std::vector<T>& xs) {
  return array_of(xs, [](const T& x) { return encode(x); });
}

template <class T>
std::vector<T> decode_all(const Json& j) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(decode<T>(x));
  return out;
}

// Variables are 1-based on the wire.
Json vars_out(const std::vector<int>& v) {
  return array_of(v, [](int x) { return x + 1; });
}

std::vector<int> vars_in(const Json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>() - 1);
  return out;
}

template <class T>
Json opt(const std::optional<T>& x) {
  return x ? encode(*x) : Json(nullptr);
}

template <class T>
std::optional<T> opt_in(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return decode<T>(j.at(key));
}

std::string kind_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Dynkin: return "dynkin";
    case Classification::Kind::ExtendedDynkin: return "extended-dynkin";
    case Classification::Kind::Wild: return "wild";
  }
  return "wild";
}

ReducednessReport::Verdict reduced_from(const std::string& s) {
  if (s == "reduced") return ReducednessReport::Verdict::Reduced;
  if (s == "not-reduced") return ReducednessReport::Verdict::NotReduced;
  if (s == "unverified") return ReducednessReport::Verdict::Unverified;
  throw InvalidInput("unknown reducedness verdict '" + s + "'");
}

CaseRule rule_from(const std::string& s) {
  for (auto r : {CaseRule::ReducA, CaseRule::ReducB, CaseRule::FactorAnalysis, CaseRule::Good, CaseRule::Closed,
                 CaseRule::Infeasible, CaseRule::Inconclusive})
    if (to_string(r) == s) return r;
  throw InvalidInput("unknown case rule '" + s + "'");
}

VerdictKind verdict_from(const std::string& s) {
  for (auto k : {VerdictKind::RationalSingularities, VerdictKind::NotCertified, VerdictKind::NotApplicable})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown verdict '" + s + "'");
}

Membership::Kind membership_from(const std::string& s) {
  for (auto k : {Membership::Kind::Member, Membership::Kind::NonMember, Membership::Kind::UnknownBeyondBox})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown membership kind '" + s + "'");
}

std::string leaf_kind(CaseRule r) {
  switch (r) {
    case CaseRule::Good: return "good";
    case CaseRule::Closed:
    case CaseRule::Infeasible: return "empty";
    case CaseRule::Inconclusive: return "open";
    default: return "";
  }
}

}  // namespace

Json encode(const Rational& q) { return q.get_str(); }

template <>
Rational decode<Rational>(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  Rational q;
  if (!j.is_string() || q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad rational " + j.dump());
  q.canonicalize();
  return q;
}

Json encode(const std::vector<Rational>& v) { return array_of(v, [](const Rational& q) { return encode(q); }); }

template <>
std::vector<Rational> decode<std::vector<Rational>>(const Json& j) {
  return decode_all<Rational>(j);
}

Json encode(const DimVector& d) { return d.entries(); }

template <>
DimVector decode<DimVector>(const Json& j) {
  return DimVector(j.get<std::vector<int>>());
}

Json encode(const Quiver& q) {
  return {{"vertices", q.vertex_count()},
          {"arrows", array_of(q.arrows(), [](const Arrow& a) { return Json::array({a.tail, a.head}); })}};
}

template <>
Quiver decode<Quiver>(const Json& j) {
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back(Arrow{a.at(0).get<int>(), a.at(1).get<int>()});
  return Quiver(j.at("vertices").get<int>(), arrows);
}

Json encode(const Classification& c) {
  return {{"kind", kind_name(c.kind)}, {"type", std::string(1, c.type)}, {"rank", c.rank}, {"name", c.to_string()}};
}

template <>
Classification decode<Classification>(const Json& j) {
  Classification c;
  auto k = j.at("kind").get<std::string>();
  c.kind = k == "dynkin" ? Classification::Kind::Dynkin
           : k == "extended-dynkin" ? Classification::Kind::ExtendedDynkin
                                    : Classification::Kind::Wild;
  c.type = j.at("type").get<std::string>().at(0);
  c.rank = j.at("rank").get<int>();
  return c;
}

Json encode(const RepClass& x) {
  return array_of(x.parts, [](const auto& p) { return Json::array({encode(p.first), p.second}); });
}

template <>
RepClass decode<RepClass>(const Json& j) {
  std::vector<std::pair<DimVector, int>> parts;
  for (const auto& p : j) parts.emplace_back(decode<DimVector>(p.at(0)), p.at(1).get<int>());
  return RepClass(parts);
}

Json encode(const ComponentReport& c) {
  Json wit = Json::array();
  for (const auto& w : c.gradient_b_witnesses) wit.push_back({{"simple", w.k}, {"witness", encode(w.witness)}});
  return {{"parts", encode(c.cls)},
          {"codim", c.codim},
          {"hom_profile", c.hom_to_simples},
          {"gradient_a", c.gradient_a},
          {"gradient_b", c.gradient_b_verified ? "verified" : "unverified"},
          {"gradient_b_witnesses", wit}};
}

template <>
ComponentReport decode<ComponentReport>(const Json& j) {
  ComponentReport c;
  c.cls = decode<RepClass>(j.at("parts"));
  c.codim = j.at("codim").get<int>();
  c.hom_to_simples = j.at("hom_profile").get<std::vector<int>>();
  c.gradient_a = j.at("gradient_a").get<bool>();
  c.gradient_b_verified = j.at("gradient_b").get<std::string>() == "verified";
  for (const auto& w : j.value("gradient_b_witnesses", Json::array()))
    c.gradient_b_witnesses.push_back(BWitness{w.at("simple").get<int>(), decode<RepClass>(w.at("witness"))});
  return c;
}

Json encode(const ReducednessReport& r) {
  return {{"components", encode_all(r.components)},
          {"ci", r.ci},
          {"verdict", to_string(r.verdict)},
          {"witness", opt(r.witness)},
          {"violating_simple", r.violating_simple},
          {"violating_value", r.violating_value},
          {"reason", r.reason}};
}

template <>
ReducednessReport decode<ReducednessReport>(const Json& j) {
  ReducednessReport r;
  r.components = decode_all<ComponentReport>(j.at("components"));
  r.ci = j.at("ci").get<bool>();
  r.verdict = reduced_from(j.at("verdict").get<std::string>());
  r.witness = opt_in<RepClass>(j, "witness");
  r.violating_simple = j.value("violating_simple", 0);
  r.violating_value = j.value("violating_value", 0);
  r.reason = j.value("reason", "");
  return r;
}

Json encode(const BracketTerm& t) {
  return {{"gamma", t.gamma}, {"a", t.a}, {"b", t.b}, {"mult", t.mult}, {"text", render_term(t)}};
}

template <>
BracketTerm decode<BracketTerm>(const Json& j) {
  return BracketTerm{j.at("gamma").get<Gamma>(), j.at("a").get<int>(), j.at("b").get<int>(), j.value("mult", 1)};
}

Json encode(const BFunctionFamily& f) {
  Json simples = Json::array();
  for (const auto& s : f.meta().simples) simples.push_back(s);
  Json j{{"r", f.r()},
         {"terms", encode_all(f.terms())},
         {"rendered", f.render()},
         {"meta", {{"quiver", f.meta().quiver}, {"alpha", f.meta().alpha}, {"simples", simples}}}};
  if (f.r() == 1) j["polynomial"] = f.render_polynomial();
  return j;
}

template <>
BFunctionFamily decode<BFunctionFamily>(const Json& j) {
  FamilyMeta meta;
  if (j.contains("meta")) {
    const auto& m = j.at("meta");
    meta.quiver = m.value("quiver", "");
    meta.alpha = m.value("alpha", std::vector<int>{});
    meta.simples = m.value("simples", std::vector<std::vector<int>>{});
  }
  return BFunctionFamily(j.at("r").get<int>(), decode_all<BracketTerm>(j.at("terms")), meta);
}

Json encode(const Affine& a) {
  Affine t = a;
  t.trim();
  return {{"constant", encode(t.constant)}, {"coeffs", encode(t.coeffs)}, {"text", t.to_string()}};
}

template <>
Affine decode<Affine>(const Json& j) {
  Affine a;
  a.constant = decode<Rational>(j.at("constant"));
  a.coeffs = decode<std::vector<Rational>>(j.value("coeffs", Json::array()));
  return a;
}

Json encode(const BoundCertificate& b) { return {{"bound", encode(b.bound)}, {"multipliers", encode(b.multipliers)}}; }

template <>
BoundCertificate decode<BoundCertificate>(const Json& j) {
  return BoundCertificate{decode<Rational>(j.at("bound")), decode<std::vector<Rational>>(j.at("multipliers"))};
}

Json encode(const InfeasibilityCertificate& c) { return {{"multipliers", encode(c.multipliers)}}; }

template <>
InfeasibilityCertificate decode<InfeasibilityCertificate>(const Json& j) {
  return InfeasibilityCertificate{decode<std::vector<Rational>>(j.at("multipliers"))};
}

Json encode(const Exclusion& e) { return {{"var", e.var + 1}, {"lo", opt(e.lo)}, {"hi", opt(e.hi)}}; }

template <>
Exclusion decode<Exclusion>(const Json& j) {
  return Exclusion{j.at("var").get<int>() - 1, opt_in<Affine>(j, "lo"), opt_in<Affine>(j, "hi")};
}

Json encode(const CaseNode& n) {
  Json values = Json::array();
  for (const auto& v : n.values) values.push_back(opt(v));
  Json j{{"assumptions",
          {{"values", values},
           {"params", n.params},
           {"constraints", encode_all(n.constraints)},
           {"exclusions", encode_all(n.exclusions)}}},
         {"rule", to_string(n.rule)}};
  if (auto leaf = leaf_kind(n.rule); !leaf.empty()) j["leaf"] = leaf;
  if (!n.vars.empty()) j["vars"] = vars_out(n.vars);
  if (n.rule == CaseRule::ReducB) {
    j["j_plus"] = vars_out(n.j_plus);
    j["j_minus"] = vars_out(n.j_minus);
    j["farkas"] = encode(n.farkas);
    j["memberships"] = array_of(n.memberships, [](const ConeMembership& m) {
      return Json{{"var", m.var + 1}, {"lambda", encode(m.lambda)}, {"t", encode(m.t)}};
    });
  }
  if (!n.tuples.empty())
    j["tuples"] = array_of(n.tuples, [](const ReducATuple& t) {
      return Json{{"terms", t.terms}, {"support", t.support}, {"u", encode(t.u)}, {"bound", encode(t.bound)}};
    });
  if (!n.closure.empty())
    j["closure"] = array_of(n.closure, [](const ClosureWitness& w) {
      return Json{{"term", w.term}, {"t", w.t}, {"exclusion", w.exclusion}, {"above_lo", opt(w.above_lo)},
                  {"below_hi", opt(w.below_hi)}};
    });
  if (!n.bounds.empty()) {
    j["bounds"] = encode_all(n.bounds);
    j["strict_sum"] = n.strict_sum;
  }
  if (n.infeasible) j["infeasible"] = encode(*n.infeasible);
  if (!n.note.empty()) j["note"] = n.note;
  if (!n.children.empty()) j["children"] = encode_all(n.children);
  return j;
}

template <>
CaseNode decode<CaseNode>(const Json& j) {
  CaseNode n;
  const auto& a = j.at("assumptions");
  for (const auto& v : a.at("values")) n.values.push_back(v.is_null() ? std::nullopt : std::optional(decode<Affine>(v)));
  n.params = a.at("params").get<int>();
  n.constraints = decode_all<Affine>(a.at("constraints"));
  n.exclusions = decode_all<Exclusion>(a.at("exclusions"));
  n.rule = rule_from(j.at("rule").get<std::string>());
  if (j.contains("vars")) n.vars = vars_in(j.at("vars"));
  if (j.contains("j_plus")) n.j_plus = vars_in(j.at("j_plus"));
  if (j.contains("j_minus")) n.j_minus = vars_in(j.at("j_minus"));
  if (j.contains("farkas")) n.farkas = decode<std::vector<Rational>>(j.at("farkas"));
  for (const auto& m : j.value("memberships", Json::array()))
    n.memberships.push_back(ConeMembership{m.at("var").get<int>() - 1, decode<std::vector<Rational>>(m.at("lambda")),
                                           decode<Rational>(m.at("t"))});
  for (const auto& t : j.value("tuples", Json::array()))
    n.tuples.push_back(ReducATuple{t.at("terms").get<std::vector<int>>(), t.at("support").get<std::vector<int>>(),
                                   decode<std::vector<Rational>>(t.at("u")), decode<BoundCertificate>(t.at("bound"))});
  for (const auto& w : j.value("closure", Json::array()))
    n.closure.push_back(ClosureWitness{w.at("term").get<int>(), w.at("t").get<int>(), w.at("exclusion").get<int>(),
                                       opt_in<BoundCertificate>(w, "above_lo"), opt_in<BoundCertificate>(w, "below_hi")});
  if (j.contains("bounds")) n.bounds = decode_all<BoundCertificate>(j.at("bounds"));
  n.strict_sum = j.value("strict_sum", false);
  n.infeasible = opt_in<InfeasibilityCertificate>(j, "infeasible");
  n.note = j.value("note", "");
  if (j.contains("children")) n.children = decode_all<CaseNode>(j.at("children"));
  return n;
}

Json encode(const CaseCertificate& c) { return {{"family", encode(c.family)}, {"root", encode(c.root)}}; }

template <>
CaseCertificate decode<CaseCertificate>(const Json& j) {
  return CaseCertificate{decode<BFunctionFamily>(j.at("family")), decode<CaseNode>(j.at("root"))};
}

Json encode(const ParamInterval& p) {
  return {{"lo", p.lo ? Json(p.lo->get_str()) : Json(nullptr)}, {"hi", p.hi ? Json(p.hi->get_str()) : Json(nullptr)}};
}

template <>
ParamInterval decode<ParamInterval>(const Json& j) {
  ParamInterval p;
  if (!j.at("lo").is_null()) p.lo = Integer(j.at("lo").get<std::string>());
  if (!j.at("hi").is_null()) p.hi = Integer(j.at("hi").get<std::string>());
  return p;
}

Json encode(const Membership& m) {
  return {{"kind", to_string(m.kind)},
          {"exact", m.exact},
          {"proof", m.proof},
          {"witness_c", m.witness_c},
          {"cover", encode_all(m.cover)}};
}

template <>
Membership decode<Membership>(const Json& j) {
  Membership m;
  m.kind = membership_from(j.at("kind").get<std::string>());
  m.exact = j.at("exact").get<bool>();
  m.proof = j.value("proof", "");
  m.witness_c = j.value("witness_c", std::vector<int>{});
  m.cover = decode_all<ParamInterval>(j.value("cover", Json::array()));
  return m;
}

Json encode(const Verdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"reason", v.reason},
          {"r", v.r},
          {"family", encode(v.family)},
          {"reducedness", opt(v.reducedness)},
          {"complete_intersection", v.complete_intersection},
          {"form_assumption", v.form_assumption},
          {"largest_root", opt(v.largest_root)},
          {"largest_root_multiplicity", v.largest_root_multiplicity},
          {"certificate", opt(v.certificate)},
          {"witness", opt(v.witness)}};
}

template <>
Verdict decode<Verdict>(const Json& j) {
  Verdict v;
  v.kind = verdict_from(j.at("verdict").get<std::string>());
  v.reason = j.value("reason", "");
  v.r = j.at("r").get<int>();
  v.family = decode<BFunctionFamily>(j.at("family"));
  v.reducedness = opt_in<ReducednessReport>(j, "reducedness");
  v.complete_intersection = j.value("complete_intersection", false);
  v.form_assumption = j.value("form_assumption", false);
  v.largest_root = opt_in<Rational>(j, "largest_root");
  v.largest_root_multiplicity = j.value("largest_root_multiplicity", 0);
  v.certificate = opt_in<CaseCertificate>(j, "certificate");
  v.witness = opt_in<std::vector<Rational>>(j, "witness");
  return v;
}

}  // namespace qsing
