#include "cymirror/exact.hpp"

#include "cymirror/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace cymirror {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("empty integer");
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9')
      throw ParseError("invalid integer: " + std::string(text));
  std::string digits(text);
  if (digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("sign on denominator: " + std::string(text));
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: " + std::string(text));
  return make_rational(num, den);
}

std::uint64_t gcd_fold(std::uint64_t seed, std::span<const std::uint64_t> extras) {
  std::uint64_t g = seed;
  for (auto e : extras) g = std::gcd(g, e);
  return g;
}

Integer gcd_fold(const Integer& seed, std::span<const Integer> extras) {
  Integer g = abs(seed);
  for (const auto& e : extras) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer common_denominator(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

}  // namespace cymirror
