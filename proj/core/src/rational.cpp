#include "tropcvx/rational.hpp"

#include <cctype>

#include "tropcvx/errors.hpp"

namespace tropcvx {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

  const auto slash = trimmed.find('/');
  const auto num = trimmed.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : trimmed.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  Integer p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

Integer lcm_of_denominators(const Vec& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

Vec primitive_integer(const Vec& v) {
  const Integer l = lcm_of_denominators(v);
  Integer g = 0;
  for (const auto& x : v) {
    Integer num = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return v;
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer num = x.get_num() * (l / x.get_den());
    out.emplace_back(Integer(num / g));
  }
  return out;
}

}  // namespace tropcvx
