#include "orbk/cyclotomic.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "orbk/error.hpp"

namespace orbk {

namespace detail {

// Reduction data for Q[x]/Phi_n: powers[e] holds x^e mod Phi_n for e in
// [0, n) as sparse (degree, coefficient) pairs.
struct CyclotomicField {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<std::vector<std::pair<unsigned, long>>> powers;
};

}  // namespace detail

namespace {

using Poly = std::vector<Integer>;

Poly poly_div_exact(Poly num, const Poly& den) {
  // Both monic with integer coefficients, so the quotient is integral.
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

const Poly& cached_cyclotomic_polynomial(unsigned n);

Poly compute_cyclotomic_polynomial(unsigned n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(std::move(p), cached_cyclotomic_polynomial(d));
  }
  return p;
}

const Poly& cached_cyclotomic_polynomial(unsigned n) {
  // Called with registry_mutex held.
  static std::map<unsigned, Poly> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic_polynomial(n)).first;
  return it->second;
}

std::shared_ptr<const detail::CyclotomicField> field_for(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be >= 1");
  std::lock_guard lock(registry_mutex());
  static std::map<unsigned, std::shared_ptr<const detail::CyclotomicField>> fields;
  if (auto it = fields.find(n); it != fields.end()) return it->second;

  const Poly& phi_poly = cached_cyclotomic_polynomial(n);
  auto field = std::make_shared<detail::CyclotomicField>();
  field->n = n;
  field->phi = static_cast<unsigned>(phi_poly.size() - 1);
  const unsigned phi = field->phi;

  std::vector<Integer> current(phi, 0);
  current[0] = 1;
  field->powers.reserve(n);
  for (unsigned e = 0; e < n; ++e) {
    std::vector<std::pair<unsigned, long>> sparse;
    for (unsigned i = 0; i < phi; ++i) {
      if (current[i] == 0) continue;
      if (!current[i].fits_slong_p()) {
        throw Error(ErrorCode::InternalInconsistency, "cyclotomic reduction coefficient overflow");
      }
      sparse.emplace_back(i, current[i].get_si());
    }
    field->powers.push_back(std::move(sparse));
    // current *= x, then reduce the x^phi term using the monic Phi_n.
    const Integer top = current[phi - 1];
    for (unsigned i = phi - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < phi; ++i) current[i] -= top * phi_poly[i];
    }
  }
  fields.emplace(n, field);
  return field;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_same_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    throw Error(ErrorCode::ConductorMismatch,
                "conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                    std::to_string(b.conductor()));
  }
}

}  // namespace

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial index must be >= 1");
  std::lock_guard lock(registry_mutex());
  return cached_cyclotomic_polynomial(n);
}

Cyclotomic::Cyclotomic() : Cyclotomic(field_for(1), std::vector<Rational>(1)) {}

Cyclotomic::Cyclotomic(std::shared_ptr<const detail::CyclotomicField> field,
                       std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::reduce(std::shared_ptr<const detail::CyclotomicField> field,
                              std::vector<Rational>& by_exponent) {
  const unsigned phi = field->phi;
  const unsigned n = field->n;
  std::vector<Rational> out(phi);
  for (std::size_t e = 0; e < by_exponent.size(); ++e) {
    const Rational& c = by_exponent[e];
    if (sgn(c) == 0) continue;
    if (e < phi) {
      out[e] += c;
      continue;
    }
    for (const auto& [deg, k] : field->powers[e % n]) out[deg] += c * k;
  }
  return Cyclotomic(std::move(field), std::move(out));
}

Cyclotomic Cyclotomic::canonicalize(unsigned conductor, std::span<const CyclotomicTerm> raw) {
  auto field = field_for(conductor);
  std::vector<Rational> acc(conductor);
  for (const auto& term : raw) acc[mod_floor(term.exponent, conductor)] += term.coefficient;
  return reduce(std::move(field), acc);
}

Cyclotomic Cyclotomic::from_rational(unsigned conductor, const Rational& value) {
  auto field = field_for(conductor);
  std::vector<Rational> coeffs(field->phi);
  coeffs[0] = value;
  return Cyclotomic(std::move(field), std::move(coeffs));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned conductor, std::int64_t exponent) {
  const CyclotomicTerm term{1, exponent};
  return canonicalize(conductor, std::span(&term, 1));
}

unsigned Cyclotomic::conductor() const noexcept { return field_->n; }

bool Cyclotomic::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_field(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  require_same_field(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  *this = *this * other;
  return *this;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r = a;
  r += b;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r = a;
  r -= b;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  const std::size_t phi = a.coeffs_.size();
  if (a.is_rational()) return b.scaled(a.coeffs_[0]);
  if (b.is_rational()) return a.scaled(b.coeffs_[0]);
  std::vector<Rational> acc(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      acc[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic::reduce(a.field_, acc);
}

Cyclotomic Cyclotomic::scaled(const Rational& factor) const {
  std::vector<Rational> out(coeffs_.size());
  if (sgn(factor) != 0) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) out[i] = coeffs_[i] * factor;
    }
  }
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (is_rational()) return from_rational(conductor(), 1 / coeffs_[0]);
  // Solve (multiplication by *this) * x = 1 over Q; column j is *this * zeta^j.
  const std::size_t phi = coeffs_.size();
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (std::size_t j = 0; j < phi; ++j) {
    const Cyclotomic col = *this * root_of_unity(conductor(), static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t pivot = c;
    while (pivot < phi && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == phi) throw Error(ErrorCode::InternalInconsistency, "singular multiplication map");
    std::swap(m[c], m[pivot]);
    const Rational inv = 1 / m[c][c];
    for (std::size_t k = c; k <= phi; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> out(phi);
  for (std::size_t i = 0; i < phi; ++i) out[i] = m[i][phi];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::conjugate() const {
  const unsigned n = conductor();
  std::vector<Rational> acc(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) acc[(n - k) % n] += coeffs_[k];
  }
  return reduce(field_, acc);
}

Cyclotomic Cyclotomic::embed(unsigned new_conductor) const {
  if (new_conductor == 0 || new_conductor % conductor() != 0) {
    throw Error(ErrorCode::ConductorMismatch,
                "cannot embed conductor " + std::to_string(conductor()) + " into " +
                    std::to_string(new_conductor));
  }
  if (new_conductor == conductor()) return *this;
  const unsigned step = new_conductor / conductor();
  auto field = field_for(new_conductor);
  std::vector<Rational> acc(new_conductor);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) acc[k * step] = coeffs_[k];
  return reduce(std::move(field), acc);
}

std::optional<std::int64_t> Cyclotomic::root_of_unity_exponent(std::int64_t order) const {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be >= 1");
  const auto lifted = static_cast<unsigned>(std::lcm<std::int64_t>(conductor(), order));
  const Cyclotomic self = embed(lifted);
  const std::int64_t step = lifted / order;
  for (std::int64_t s = 0; s < order; ++s) {
    if (self == root_of_unity(lifted, s * step)) return s;
  }
  return std::nullopt;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    const auto l = std::lcm(a.conductor(), b.conductor());
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = conductor();
  for (const auto& c : coeffs_) h = h * 1000003u ^ hash_value(c);
  return h;
}

std::string Cyclotomic::to_expression() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(coeffs_[k]);
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Recursive descent over the whitespace-stripped text; columns refer to the
// original string (1-based).
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, unsigned conductor) : conductor_(conductor) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      columns_.push_back(i + 1);
    }
    end_column_ = text.size() + 1;
  }

  Cyclotomic parse() {
    if (chars_.empty()) fail("empty expression");
    std::vector<CyclotomicTerm> terms;
    terms.push_back(term());
    while (pos_ < chars_.size()) {
      const char op = chars_[pos_];
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      ++pos_;
      CyclotomicTerm t = term();
      if (op == '-') t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
    }
    return Cyclotomic::canonicalize(conductor_, terms);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t col = pos_ < columns_.size() ? columns_[pos_] : end_column_;
    throw ExpressionSyntaxError(what + " at column " + std::to_string(col), col);
  }

  bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }

  bool peek_digit() const {
    return pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]));
  }

  std::string digits() {
    if (!peek_digit()) fail("expected digit");
    std::string out;
    while (peek_digit()) out += chars_[pos_++];
    return out;
  }

  std::string integer() {
    std::string out;
    if (peek('-')) {
      out += '-';
      ++pos_;
    }
    out += digits();
    return out;
  }

  CyclotomicTerm term() {
    if (peek('z')) return {1, zpow()};
    CyclotomicTerm t{rational(), 0};
    if (peek('*')) {
      ++pos_;
      if (!peek('z')) fail("expected 'z' after '*'");
      t.exponent = zpow();
    }
    return t;
  }

  Rational rational() {
    if (!peek('-') && !peek_digit()) fail("expected rational or 'z'");
    Integer num(integer());
    if (!peek('/')) return Rational(num);
    ++pos_;
    const std::size_t at = pos_;
    Integer den(digits());
    if (den == 0) {
      pos_ = at;
      fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::int64_t zpow() {
    ++pos_;  // 'z'
    if (!peek('^')) return 1;
    ++pos_;
    const std::size_t at = pos_;
    const Integer e(integer());
    if (!e.fits_slong_p()) {
      pos_ = at;
      fail("exponent out of range");
    }
    return e.get_si();
  }

  unsigned conductor_;
  std::vector<char> chars_;
  std::vector<std::size_t> columns_;
  std::size_t end_column_ = 1;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text, unsigned conductor) {
  return ExpressionParser(text, conductor).parse();
}

}  // namespace orbk
