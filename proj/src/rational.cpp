#include "orbk/rational.hpp"

#include <cctype>
#include <functional>

#include "orbk/error.hpp"

namespace orbk {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  const std::string_view num_digits = !num.empty() && num.front() == '-' ? num.substr(1) : num;
  if (!all_digits(num_digits) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  Rational result;
  if (slash == std::string_view::npos) {
    result = Rational(Integer(std::string(num)));
  } else {
    Integer d(std::string{den});
    if (d == 0) {
      throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    }
    result = Rational(Integer(std::string(num)), d);
    result.canonicalize();
  }
  return result;
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& value) { return value - Rational(floor(value)); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

std::size_t hash_value(const Rational& value) noexcept {
  const auto limb = [](const mpz_class& z) -> std::size_t {
    const std::size_t low = mpz_size(z.get_mpz_t()) == 0 ? 0 : mpz_getlimbn(z.get_mpz_t(), 0);
    return low ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1) << 61);
  };
  std::size_t h = limb(value.get_num());
  h ^= limb(value.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace orbk
