#include "cubetile/rational.hpp"

#include <cctype>
#include <functional>

#include "cubetile/errors.hpp"

namespace cubetile {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text), mpz_class(1));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num_text), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor(), mpz_class(1)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !num().fits_slong_p()) throw Error("value " + to_string() + " is not a 64-bit integer");
  return num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t RationalHash::operator()(const Rational& r) const noexcept {
  // Low limbs of numerator and denominator are enough to spread buckets.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  std::size_t h = limb(r.num()) * 0x9e3779b97f4a7c15ULL;
  h ^= limb(r.den()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(r.sign() + 1);
}

}  // namespace cubetile
