#include "ramlab/qring.hpp"

#include <cctype>
#include <sstream>

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

std::string describe(const QPoly& a) {
  return "p=" + std::to_string(a.field().characteristic()) + " f=" + std::to_string(a.field().degree()) +
         " N=" + std::to_string(a.trunc());
}

}  // namespace

QPoly::QPoly(FiniteField field, std::int64_t trunc) : field_(std::move(field)), trunc_(trunc) {
  if (trunc < 0) throw Error(ErrorCode::kInvalidArgument, "truncation must be nonnegative");
}

QPoly QPoly::constant(const FiniteField& field, std::int64_t trunc, Fq c) {
  return from_terms(field, trunc, {{0, c}});
}

QPoly QPoly::x_power(const FiniteField& field, std::int64_t trunc, std::int64_t e, Fq c) {
  return from_terms(field, trunc, {{e, c}});
}

QPoly QPoly::q(const FiniteField& field, std::int64_t trunc) { return from_terms(field, trunc, {{0, 1}, {1, 1}}); }

QPoly QPoly::from_terms(const FiniteField& field, std::int64_t trunc, detail::Terms terms) {
  QPoly out(field, trunc);
  for (auto& t : terms) {
    if (t.coeff >= field.order()) throw Error(ErrorCode::kInvalidArgument, "coefficient outside the field");
  }
  out.terms_ = detail::normalized(field, std::move(terms), trunc - 1);
  return out;
}

std::optional<std::int64_t> QPoly::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

void QPoly::require_compatible(const QPoly& other) const {
  if (!(field_ == other.field_) || trunc_ != other.trunc_) {
    throw Error(ErrorCode::kParamMismatch, "operands live in different rings (" + describe(*this) + " vs " + describe(other) + ")");
  }
}

QPoly QPoly::operator+(const QPoly& other) const {
  require_compatible(other);
  QPoly out(field_, trunc_);
  out.terms_ = detail::add(field_, terms_, other.terms_);
  return out;
}

QPoly QPoly::operator-(const QPoly& other) const {
  require_compatible(other);
  QPoly out(field_, trunc_);
  out.terms_ = detail::sub(field_, terms_, other.terms_);
  return out;
}

QPoly QPoly::operator-() const {
  QPoly out(field_, trunc_);
  out.terms_ = detail::neg(field_, terms_);
  return out;
}

QPoly QPoly::operator*(const QPoly& other) const {
  require_compatible(other);
  QPoly out(field_, trunc_);
  out.terms_ = detail::mul(field_, terms_, other.terms_, trunc_ - 1);
  return out;
}

QPoly QPoly::scaled(Fq c) const {
  QPoly out(field_, trunc_);
  out.terms_ = detail::scale(field_, terms_, c);
  return out;
}

QPoly QPoly::pow(std::uint64_t n) const {
  QPoly out(field_, trunc_);
  out.terms_ = detail::pow(field_, terms_, n, trunc_ - 1);
  return out;
}

QPoly QPoly::truncated(std::int64_t n) const {
  if (n > trunc_) {
    throw Error(ErrorCode::kInvalidArgument, "cannot raise truncation from " + std::to_string(trunc_) + " to " + std::to_string(n));
  }
  QPoly out(field_, n);
  out.terms_ = detail::truncated(terms_, n - 1);
  return out;
}

QPoly QPoly::inverse_unit() const {
  const Fq c0 = coeff(0);
  if (c0 == 0 || trunc_ == 0) {
    if (trunc_ == 0) return *this;
    throw Error(ErrorCode::kInvalidArgument, "inverse_unit needs a nonzero constant term");
  }
  // Newton iteration b <- b (2 - a b), doubling the correct precision.
  const Fq inv0 = field_.inv(c0);
  QPoly b = constant(field_, trunc_, inv0);
  const QPoly two = constant(field_, trunc_, field_.from_int(2));
  for (std::int64_t prec = 1; prec < trunc_; prec *= 2) b = b * (two - (*this) * b);
  return b;
}

bool operator==(const QPoly& a, const QPoly& b) {
  return a.field_ == b.field_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

QPoly frobenius_q(const QPoly& a) {
  return QPoly::from_terms(a.field(), a.trunc(), detail::frobenius(a.field(), a.terms(), a.trunc() - 1));
}

namespace {

// Reduce a unit exponent into [1, p^T) with p^T >= bound.
std::uint64_t reduce_unit_exponent(std::int64_t u, std::uint32_t p, std::int64_t bound) {
  if (u % static_cast<std::int64_t>(p) == 0) {
    throw Error(ErrorCode::kNonUnitExponent, "exponent " + std::to_string(u) + " is divisible by p=" + std::to_string(p));
  }
  std::int64_t modulus = 1;
  while (modulus < bound || modulus < 2) modulus *= p;
  std::int64_t r = u % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

QPoly gamma_q(const QPoly& a, std::int64_t u) {
  const FiniteField& k = a.field();
  const std::int64_t max_exp = a.trunc() - 1;
  const std::uint64_t reduced = reduce_unit_exponent(u, k.characteristic(), a.trunc());
  const detail::Terms image = detail::one_plus_t_power_minus_one(k, reduced, max_exp);
  return QPoly::from_terms(k, a.trunc(), detail::substitute(k, a.terms(), image, max_exp));
}

QPoly try_divide(const QPoly& a, std::int64_t j) {
  if (j < 0) throw Error(ErrorCode::kInvalidArgument, "negative division exponent");
  if (j > a.trunc()) throw Error(ErrorCode::kNotDivisible, "division by x^" + std::to_string(j) + " exceeds truncation");
  if (auto ord = a.order(); ord && *ord < j) {
    throw Error(ErrorCode::kNotDivisible, "monomial x^" + std::to_string(*ord) + " is not divisible by x^" + std::to_string(j));
  }
  return QPoly::from_terms(a.field(), a.trunc() - j, detail::shift(a.terms(), -j, a.trunc() - j - 1));
}

QPoly multiply_by_x_power(const QPoly& a, std::int64_t j) {
  return QPoly::from_terms(a.field(), a.trunc(), detail::shift(a.terms(), j, a.trunc() - 1));
}

std::string format_body(const QPoly& a) {
  return detail::format_terms(a.field(), a.terms(), "x");
}

std::string to_string(const QPoly& a) { return describe(a) + "; " + format_body(a); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_small_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty() || s.size() > 12) throw Error(ErrorCode::kParseError, "bad integer in '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::kParseError, "bad integer in '" + std::string(whole) + "'");
    }
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

QPoly parse_qpoly_body(const FiniteField& field, std::int64_t trunc, std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorCode::kParseError, "empty polynomial");
  detail::Terms terms;
  // Split on top-level '+' / '-' signs.
  std::size_t pos = 0;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view term = trim(body.substr(start, end - start));
    if (term.empty()) throw Error(ErrorCode::kParseError, "empty term in '" + std::string(body) + "'");
    Fq coeff = 1;
    std::int64_t exp = 0;
    const std::size_t xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coeff = field.parse(term);
    } else {
      std::string_view before = trim(term.substr(0, xpos));
      if (!before.empty()) {
        if (before.back() != '*') throw Error(ErrorCode::kParseError, "expected '*' before x in '" + std::string(term) + "'");
        before.remove_suffix(1);
        coeff = field.parse(before);
      }
      std::string_view after = trim(term.substr(xpos + 1));
      if (after.empty()) {
        exp = 1;
      } else {
        if (after.front() != '^') throw Error(ErrorCode::kParseError, "expected '^' after x in '" + std::string(term) + "'");
        exp = parse_small_int(after.substr(1), term);
      }
    }
    if (negative) coeff = field.neg(coeff);
    terms.push_back({exp, coeff});
  };
  for (; pos < body.size(); ++pos) {
    const char ch = body[pos];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (trim(body.substr(start, pos - start)).empty()) {
        // leading sign of the first term
        if (ch == '-') negative = !negative;
        start = pos + 1;
        continue;
      }
      flush(pos);
      negative = ch == '-';
      start = pos + 1;
    }
  }
  flush(body.size());
  return QPoly::from_terms(field, trunc, std::move(terms));
}

QPoly parse_qpoly(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorCode::kParseError, "missing ';' after QPoly header");
  std::string_view header = trim(text.substr(0, semi));
  std::int64_t p = -1, f = -1, n = -1;
  std::istringstream is{std::string(header)};
  std::string field;
  while (is >> field) {
    const std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParseError, "bad header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::int64_t value = parse_small_int(std::string_view(field).substr(eq + 1), header);
    if (key == "p") p = value;
    else if (key == "f") f = value;
    else if (key == "N") n = value;
    else throw Error(ErrorCode::kParseError, "unknown header key '" + key + "'");
  }
  if (p < 0 || f < 0 || n < 0) throw Error(ErrorCode::kParseError, "QPoly header needs p, f and N");
  FiniteField k(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(f));
  return parse_qpoly_body(k, n, text.substr(semi + 1));
}

QMatrix qmatrix_identity(const FiniteField& field, std::int64_t trunc, std::size_t n) {
  return QMatrix::identity(n, QPoly(field, trunc), QPoly::constant(field, trunc, 1));
}

QMatrix frobenius_q(const QMatrix& m) {
  return m.map([](const QPoly& a) { return frobenius_q(a); });
}

QMatrix gamma_q(const QMatrix& m, std::int64_t u) {
  return m.map([u](const QPoly& a) { return gamma_q(a, u); });
}

QMatrix truncated(const QMatrix& m, std::int64_t n) {
  return m.map([n](const QPoly& a) { return a.truncated(n); });
}

namespace {

QMatrix minor_matrix(const QMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  QMatrix out(m.rows() - 1, m.cols() - 1, m.zero());
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == skip_col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

QPoly determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m.zero().one_like();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  QPoly det = m.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    const QPoly term = m(0, c) * determinant(minor_matrix(m, 0, c));
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

QMatrix adjugate(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix out(n, n, m.zero());
  if (n == 0) return out;
  if (n == 1) {
    out(0, 0) = m.zero().one_like();
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const QPoly cof = determinant(minor_matrix(m, r, c));
      out(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
    }
  }
  return out;
}

}  // namespace ramlab
