#include "qsing/linear_program.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qsing {

Affine Affine::variable(std::size_t k) {
  Affine a;
  a.coeffs.assign(k + 1, 0);
  a.coeffs[k] = 1;
  return a;
}

bool Affine::is_constant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Affine::has_integer_coefficients() const {
  if (constant.get_den() != 1) return false;
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational Affine::eval(const std::vector<Rational>& x) const {
  Rational v = constant;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (sgn(coeffs[k]) != 0) v += coeffs[k] * (k < x.size() ? x[k] : Rational(0));
  return v;
}

void Affine::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

Affine Affine::operator+(const Affine& o) const {
  Affine r = *this;
  r.constant += o.constant;
  if (r.coeffs.size() < o.coeffs.size()) r.coeffs.resize(o.coeffs.size());
  for (std::size_t k = 0; k < o.coeffs.size(); ++k) r.coeffs[k] += o.coeffs[k];
  r.trim();
  return r;
}

Affine Affine::operator-(const Affine& o) const { return *this + (-o); }

Affine Affine::operator-() const { return *this * Rational(-1); }

Affine Affine::operator*(const Rational& k) const {
  Affine r = *this;
  r.constant *= k;
  for (auto& c : r.coeffs) c *= k;
  r.trim();
  return r;
}

bool Affine::operator==(const Affine& o) const {
  Affine d = *this - o;
  return sgn(d.constant) == 0 && d.is_constant();
}

std::string Affine::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    const Rational c = coeffs[k];
    if (!first) os << (sgn(c) > 0 ? "+" : "-");
    else if (sgn(c) < 0) os << '-';
    if (abs(c) != 1) os << Rational(abs(c)).get_str() << '*';
    os << var << (k + 1);
    first = false;
  }
  if (first) return constant.get_str();
  if (sgn(constant) > 0) os << '+' << constant.get_str();
  if (sgn(constant) < 0) os << constant.get_str();
  return os.str();
}

namespace {

// Row of an FM tableau: an affine form with its nonnegative combination of
// input rows.
struct Row {
  Affine form;
  std::vector<Rational> prov;
};

Row combine(const Row& p, const Rational& wp, const Row& n, const Rational& wn) {
  Row r{p.form * wp + n.form * wn, std::vector<Rational>(p.prov.size())};
  for (std::size_t k = 0; k < r.prov.size(); ++k) r.prov[k] = p.prov[k] * wp + n.prov[k] * wn;
  return r;
}

// Scale-invariant key for deduplicating rows.
std::vector<Rational> row_key(const Affine& f, std::size_t nvars) {
  Rational scale = 0;
  for (std::size_t k = 0; k < nvars && sgn(scale) == 0; ++k)
    if (sgn(f.coeff(k)) != 0) scale = abs(f.coeff(k));
  if (sgn(scale) == 0) scale = 1;
  std::vector<Rational> key;
  for (std::size_t k = 0; k < nvars; ++k) key.push_back(f.coeff(k) / scale);
  key.push_back(f.constant / scale);
  return key;
}

std::size_t var_count(const std::vector<Affine>& rows, const Affine* extra) {
  std::size_t n = extra ? extra->coeffs.size() : 0;
  for (const auto& r : rows) n = std::max(n, r.coeffs.size());
  return n;
}

// Eliminates variable v. Among rows with identical direction the weakest is
// dropped (only the tightest constant is kept).
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t v, std::size_t nvars) {
  std::vector<Row> pos, neg, out;
  for (const auto& r : rows) {
    const int s = sgn(r.form.coeff(v));
    (s > 0 ? pos : s < 0 ? neg : out).push_back(r);
  }
  for (const auto& p : pos)
    for (const auto& n : neg) out.push_back(combine(p, -n.form.coeff(v), n, p.form.coeff(v)));
  // Keep the tightest row per direction.
  std::map<std::vector<Rational>, std::size_t> best;
  std::vector<Row> kept;
  for (auto& r : out) {
    auto key = row_key(r.form, nvars);
    const Rational c = key.back();
    key.pop_back();
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, kept.size());
      kept.push_back(std::move(r));
      continue;
    }
    Row& old = kept[it->second];
    const auto okey = row_key(old.form, nvars);
    if (c < okey.back()) old = std::move(r);
  }
  return kept;
}

std::vector<Row> initial_rows(const std::vector<Affine>& rows, std::size_t extra) {
  std::vector<Row> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Row r{rows[k], std::vector<Rational>(rows.size() + extra)};
    r.prov[k] = 1;
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<InfeasibilityCertificate> contradiction(const std::vector<Row>& rows, std::size_t ninputs) {
  for (const auto& r : rows) {
    if (r.form.is_constant() && sgn(r.form.constant) < 0) {
      InfeasibilityCertificate c;
      c.multipliers.assign(r.prov.begin(), r.prov.begin() + static_cast<long>(ninputs));
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<InfeasibilityCertificate> LinearSystem::infeasibility() const {
  const std::size_t nv = var_count(rows_, nullptr);
  auto rows = initial_rows(rows_, 0);
  if (auto c = contradiction(rows, rows_.size())) return c;
  for (std::size_t v = 0; v < nv; ++v) {
    rows = eliminate(rows, v, nv);
    if (auto c = contradiction(rows, rows_.size())) return c;
  }
  return std::nullopt;
}

std::optional<BoundCertificate> LinearSystem::lower_bound(const Affine& f) const {
  const std::size_t nv = var_count(rows_, &f);
  const std::size_t t = nv;  // auxiliary variable standing for f
  auto rows = initial_rows(rows_, 2);
  const Affine tv = Affine::variable(t);
  Row up{tv - f, std::vector<Rational>(rows_.size() + 2)};
  up.prov[rows_.size()] = 1;
  Row down{f - tv, std::vector<Rational>(rows_.size() + 2)};
  down.prov[rows_.size() + 1] = 1;
  rows.push_back(up);
  rows.push_back(down);
  for (std::size_t v = 0; v < nv; ++v) {
    rows = eliminate(rows, v, nv + 1);
    if (contradiction(rows, rows_.size())) return std::nullopt;
  }
  std::optional<BoundCertificate> best;
  for (const auto& r : rows) {
    const Rational alpha = r.form.coeff(t);
    if (sgn(alpha) <= 0) continue;
    const Rational bound = -r.form.constant / alpha;
    if (best && bound <= best->bound) continue;
    BoundCertificate c;
    c.bound = bound;
    for (std::size_t k = 0; k < rows_.size(); ++k) c.multipliers.push_back(r.prov[k] / alpha);
    best = c;
  }
  return best;
}

std::optional<std::vector<Rational>> LinearSystem::find_point(std::size_t nvars) const {
  const std::size_t nv = std::max(nvars, var_count(rows_, nullptr));
  std::vector<std::vector<Row>> stages{initial_rows(rows_, 0)};
  for (std::size_t v = 0; v < nv; ++v) {
    if (contradiction(stages.back(), rows_.size())) return std::nullopt;
    stages.push_back(eliminate(stages.back(), v, nv));
  }
  if (contradiction(stages.back(), rows_.size())) return std::nullopt;
  std::vector<Rational> x(nv, 0);
  // Stage v constrains variables v..nv-1; later ones are already fixed.
  for (std::size_t v = nv; v-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& r : stages[v]) {
      const Rational a = r.form.coeff(v);
      if (sgn(a) == 0) continue;
      Rational rest = r.form.constant;
      for (std::size_t k = v + 1; k < nv; ++k) rest += r.form.coeff(k) * x[k];
      const Rational b = -rest / a;
      if (sgn(a) > 0) {
        if (!lo || b > *lo) lo = b;
      } else if (!hi || b < *hi) {
        hi = b;
      }
    }
    x[v] = lo ? *lo : hi ? *hi : Rational(0);
  }
  return x;
}

bool check_bound(const std::vector<Affine>& constraints, const Affine& f, const BoundCertificate& cert) {
  if (cert.multipliers.size() != constraints.size()) return false;
  Affine rest = f - Affine(cert.bound);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (sgn(cert.multipliers[k]) < 0) return false;
    rest -= constraints[k] * cert.multipliers[k];
  }
  return rest.is_constant() && sgn(rest.constant) >= 0;
}

bool check_infeasible(const std::vector<Affine>& constraints, const InfeasibilityCertificate& cert) {
  if (cert.multipliers.size() != constraints.size()) return false;
  Affine sum;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (sgn(cert.multipliers[k]) < 0) return false;
    sum += constraints[k] * cert.multipliers[k];
  }
  return sum.is_constant() && sgn(sum.constant) < 0;
}

}  // namespace qsing
