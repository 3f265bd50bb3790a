#include "cymirror/mirror.hpp"

#include "cymirror/errors.hpp"

#include "json.hpp"

#include <algorithm>

namespace cymirror {

void LaurentPolynomial::add(const Rational& c, IntVector e) {
  if (e.size() != variables_) throw std::invalid_argument("exponent length does not match the variable count");
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const LaurentTerm& t) { return t.exponent == e; });
  if (it == terms_.end()) {
    if (c != 0) terms_.push_back({c, std::move(e)});
    return;
  }
  it->coeff += c;
  if (it->coeff == 0) terms_.erase(it);
}

Polytope LaurentPolynomial::newton_polytope() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no Newton polytope");
  std::vector<IntPoint> pts;
  for (const auto& t : terms_) pts.push_back(t.exponent);
  return hull_with_faces(std::span<const IntPoint>(pts));
}

LaurentPolynomial ghv_polynomial(const WeightVector& w) {
  const MirrorLattice lattice = mirror_lattice(w);
  LaurentPolynomial f(lattice.dim());
  for (const auto& v : lattice.generators) f.add(Rational(1), v);
  return f;
}

namespace {

std::string power(std::size_t var, const Integer& e) {
  std::string s = "t" + std::to_string(var + 1);
  if (e != 1) s += "^" + e.get_str();
  return s;
}

std::string monomial(const IntVector& e) {
  std::vector<std::string> num, den;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] > 0) num.push_back(power(j, e[j]));
    if (e[j] < 0) den.push_back(power(j, -e[j]));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "*") + p;
    return s;
  };
  if (den.empty()) return join(num);
  const std::string lower = den.size() > 1 ? "(" + join(den) + ")" : join(den);
  return (num.empty() ? "1" : join(num)) + "/" + lower;
}

}  // namespace

std::string to_text(const LaurentPolynomial& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    const Rational magnitude = abs(t.coeff);
    const std::string mono = monomial(t.exponent);
    std::string body;
    if (mono.empty())
      body = to_string(magnitude);
    else if (magnitude == 1)
      body = mono;
    else if (mono.rfind("1/", 0) == 0 && is_integer(magnitude))
      body = to_string(magnitude) + mono.substr(1);
    else
      body = to_string(magnitude) + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::string to_json(const LaurentPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& e : t.exponent) {
      if (!e.fits_slong_p()) throw DomainError("exponent too large for JSON output");
      exps.push_back(e.get_si());
    }
    terms.push_back({{"coeff", to_string(t.coeff)}, {"exponents", exps}});
  }
  return terms.dump();
}

}  // namespace cymirror
