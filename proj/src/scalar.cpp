#include "hopfkit/scalar.hpp"

#include <cstdlib>
#include <regex>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

bool square_free(long d) {
  unsigned long v = d < 0 ? static_cast<unsigned long>(-d) : static_cast<unsigned long>(d);
  for (unsigned long p = 2; p * p <= v; ++p) {
    if (v % (p * p) == 0) return false;
  }
  return true;
}

mpq_class parse_rational(const std::string& text, const std::string& whole) {
  mpq_class q;
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n, d = 1;
  if (n.set_str(num, 10) != 0) throw Error(ErrorCode::ParseError, "bad numerator in '" + whole + "'");
  if (slash != std::string::npos) {
    if (d.set_str(text.substr(slash + 1), 10) != 0)
      throw Error(ErrorCode::ParseError, "bad denominator in '" + whole + "'");
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + whole + "'");
  }
  q = mpq_class(n, d);
  q.canonicalize();
  return q;
}

long checked_radicand(const std::string& digits, const std::string& whole) {
  long d = std::stol(digits);
  if (d == 0 || d == 1 || !square_free(d))
    throw Error(ErrorCode::ParseError, "radicand must be square-free in '" + whole + "'");
  return d;
}

}  // namespace

FieldSpec FieldSpec::quadratic(long d) {
  if (d == 0 || d == 1 || !square_free(d))
    throw Error(ErrorCode::FieldMismatch, "sqrt(" + std::to_string(d) + ") does not give a quadratic field");
  return FieldSpec{d};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  static const std::regex re(R"(Q\(sqrt:(-?\d+)\))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorCode::ParseError, "unknown field '" + text + "'");
  return quadratic(std::stol(m[1]));
}

std::string FieldSpec::name() const {
  return d ? "Q(sqrt:" + std::to_string(*d) + ")" : "Q";
}

bool FieldSpec::contains(const Scalar& s) const {
  return s.is_rational() || (d && *d == s.radicand());
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

Scalar Scalar::frac(long p, long q) {
  if (q == 0) throw Error(ErrorCode::ZeroInverse, "zero denominator");
  return Scalar(mpq_class(p, q));
}

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

long Scalar::join_radicand(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(ErrorCode::FieldMismatch,
              "sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ") in one expression");
}

Scalar Scalar::conjugate() const { return Scalar(a_, -b_, d_); }

mpq_class Scalar::norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0");
  mpq_class n = norm();
  if (sgn(n) == 0) throw Error(ErrorCode::ZeroInverse, "zero norm");
  return Scalar(a_ / n, -b_ / n, d_);
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, d_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = join_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  long d = join_radicand(o);
  mpq_class a = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (int c = cmp(a_, o.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(b_, o.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return d_ <=> o.d_;
}

std::string Scalar::str() const {
  if (d_ == 0) return a_.get_str();
  mpq_class mag = abs(b_);
  return a_.get_str() + (sgn(b_) < 0 ? "-" : "+") + mag.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

Scalar Scalar::parse(const std::string& text) {
  static const std::regex re(R"(([+-]?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)\*sqrt\((-?\d+)\))?)");
  static const std::regex pure(R"(([+-]?\d+(?:/\d+)?)\*sqrt\((-?\d+)\))");
  std::smatch m;
  if (std::regex_match(text, m, re)) {
    mpq_class a = parse_rational(m[1], text);
    if (!m[2].matched) return Scalar(a);
    mpq_class b = parse_rational(m[3], text);
    if (m[2] == "-") b = -b;
    return Scalar(a, b, checked_radicand(m[4], text));
  }
  if (std::regex_match(text, m, pure)) {
    return Scalar(0, parse_rational(m[1], text), checked_radicand(m[2], text));
  }
  throw Error(ErrorCode::ParseError, "cannot read scalar '" + text + "'");
}

Scalar scalar_inv(const Scalar& s, const FieldSpec& field) {
  if (!field.contains(s)) throw Error(ErrorCode::FieldMismatch, s.str() + " is not in " + field.name());
  return s.inverse();
}

}  // namespace hopfkit
