#include "crdyn/scalar.hpp"

#include <cctype>

#include "crdyn/errors.hpp"

namespace crdyn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.sign() == 0) throw InvalidArgument("division by zero");
  return Scalar(mpq_class(a.value_ / b.value_));
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::inverse_power_of_two(std::size_t m) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, m);
  return Scalar(mpq_class(mpz_class(1), den));
}

std::string Scalar::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace crdyn
