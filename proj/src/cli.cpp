#include "qsing/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "qsing/errors.hpp"
#include "qsing/reports.hpp"

namespace qsing {

namespace {

struct Options {
  std::string preset;
  int n = 1;
  int m = 1;
  std::string quiver_file;
  std::string dim;
  std::string simples;
  std::string format = "text";
  int box_bound = 6;
  int depth_bound = 10;
  std::string other;
  std::string certificate_file;
};

void add_common(CLI::App* sub, Options& o, bool with_dim_source = true) {
  sub->add_option("--quiver", o.quiver_file, "Quiver file ('vertices n' then 'arrow t h' lines)");
  if (with_dim_source) sub->add_option("--dim", o.dim, "Dimension vector, comma separated");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_analysis(CLI::App* sub, Options& o) {
  add_common(sub, o);
  sub->add_option("--preset", o.preset, "Built-in example: e6-ex1, e8-notred, e8-pos");
  sub->add_option("--n", o.n, "Preset parameter n (>= 1)");
  sub->add_option("--m", o.m, "Preset parameter m (>= 0)");
  sub->add_option("--simples", o.simples, "1-based indices of the perpendicular simples to use");
  sub->add_option("--box-bound", o.box_bound, "Search box for explicit membership witnesses")
      ->check(CLI::Range(0, 1000));
  sub->add_option("--depth-bound", o.depth_bound, "Depth bound of the symbolic case split")
      ->check(CLI::Range(0, 1000));
}

DimVector parse_dim(const std::string& text) { return DimVector(parse_int_list(text)); }

struct Resolved {
  AnalysisRequest req;
  std::optional<Preset> preset;
};

Resolved resolve(const Options& o) {
  Resolved r{AnalysisRequest{Quiver(1, {}), DimVector{0}, {}, o.box_bound, o.depth_bound}, std::nullopt};
  if (!o.preset.empty()) {
    if (!o.quiver_file.empty() || !o.dim.empty()) throw InvalidInput("--preset cannot be combined with --quiver or --dim");
    Preset p = make_preset(o.preset, o.n, o.m);
    r.req.quiver = p.quiver;
    r.req.alpha = p.alpha;
    r.req.selected = p.selected;
    r.preset = p;
  } else {
    if (o.quiver_file.empty()) throw InvalidInput("missing --quiver (or --preset)");
    if (o.dim.empty()) throw InvalidInput("missing --dim");
    r.req.quiver = read_quiver_file(o.quiver_file);
    r.req.alpha = parse_dim(o.dim);
    r.req.quiver.check(r.req.alpha);
  }
  if (!o.simples.empty()) {
    if (r.preset && !r.preset->selected.empty()) throw InvalidInput("preset " + o.preset + " fixes its simples");
    r.req.selected = parse_int_list(o.simples);
  }
  return r;
}

Json preset_json(const Preset& p, int n, int m) {
  return {{"name", p.name}, {"n", n}, {"m", m}, {"permutation", p.permutation}};
}

template <class Report>
void emit(const Report& rep, const Resolved& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    Json j = encode(rep);
    if (r.preset) j["preset"] = preset_json(*r.preset, o.n, o.m);
    out << j.dump(2) << "\n";
    return;
  }
  if (r.preset) {
    out << "preset: " << r.preset->name << " (n=" << o.n << ", m=" << o.m << ")\n";
    const auto& perm = r.preset->permutation;
    bool identity = true;
    for (std::size_t k = 0; k < perm.size(); ++k) identity = identity && perm[k] == static_cast<int>(k);
    if (!identity) {
      out << "variable order: ";
      for (std::size_t k = 0; k < perm.size(); ++k) out << (k ? ", " : "") << "s" << k + 1 << "=t" << perm[k] + 1;
      out << " (t = reference order)\n";
    }
  }
  out << render_text(rep);
}

CaseCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read certificate file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("certificate file is not valid JSON: ") + e.what());
  }
  // Accept a bare certificate or a full singularities report.
  if (j.contains("verdict")) j = j["verdict"];
  if (j.contains("certificate")) j = j["certificate"];
  if (j.is_null()) throw InvalidInput("the report carries no certificate");
  try {
    return decode<CaseCertificate>(j);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-invariants, nullcones and b-functions of Dynkin quivers", "qsing"};
  app.require_subcommand(1);
  Options o;
  auto* dec = app.add_subcommand("decompose", "Generic decomposition and perpendicular simples");
  add_analysis(dec, o);
  auto* nul = app.add_subcommand("nullcone", "Nullcone components and reducedness");
  add_analysis(nul, o);
  auto* bfn = app.add_subcommand("bfunction", "Multi-variable b-function of the fundamental semi-invariants");
  add_analysis(bfn, o);
  auto* sng = app.add_subcommand("singularities", "Rational singularities verdict for the nullcone");
  add_analysis(sng, o);
  auto* hom = app.add_subcommand("hom", "Hom and Ext dimensions between indecomposables");
  add_common(hom, o);
  hom->add_option("--other", o.other, "Target root (default: every positive root)");
  auto* ver = app.add_subcommand("verify-certificate", "Re-check a stored case-split certificate");
  ver->add_option("--certificate", o.certificate_file, "Certificate or singularities report JSON")->required();
  ver->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (ver->parsed()) {
      CaseCertificate cert = load_certificate(o.certificate_file);
      CheckResult res = verify_certificate(cert);
      if (o.format == "json") {
        out << Json{{"command", "verify-certificate"}, {"ok", res.ok}, {"error", res.error},
                    {"nodes", cert.root.size()}}.dump(2)
            << "\n";
      } else {
        out << (res.ok ? "certificate accepted" : "certificate rejected: " + res.error) << " (" << cert.root.size()
            << " nodes)\n";
      }
      return res.ok ? 0 : 1;
    }
    if (hom->parsed()) {
      if (o.quiver_file.empty()) throw InvalidInput("missing --quiver");
      if (o.dim.empty()) throw InvalidInput("missing --dim");
      Quiver q = read_quiver_file(o.quiver_file);
      std::optional<DimVector> target;
      if (!o.other.empty()) target = parse_dim(o.other);
      HomReport rep = run_hom(q, parse_dim(o.dim), target);
      Resolved none{AnalysisRequest{q, DimVector{0}, {}}, std::nullopt};
      emit(rep, none, o, out);
      return 0;
    }
    Resolved r = resolve(o);
    if (dec->parsed()) emit(run_decompose(r.req), r, o, out);
    if (nul->parsed()) emit(run_nullcone(r.req), r, o, out);
    if (bfn->parsed()) emit(run_bfunction(r.req), r, o, out);
    if (sng->parsed()) emit(run_singularities(r.req), r, o, out);
    return 0;
  } catch (const TerminalRuleInapplicable& e) {
    if (o.format == "json")
      out << Json{{"error", "terminal-rule-inapplicable"}, {"message", e.what()}, {"partial_product", e.partial_product()}}
                 .dump(2)
          << "\n";
    else
      out << "partial product: " << e.partial_product() << "\n";
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const NonDynkin& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qsing
