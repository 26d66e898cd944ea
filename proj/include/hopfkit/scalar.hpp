#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace hopfkit {

class Scalar;

// Q, or Q(sqrt d) with d square-free and not 0 or 1.
struct FieldSpec {
  std::optional<long> d;

  static FieldSpec rationals() { return {}; }
  static FieldSpec quadratic(long d);
  // Accepts "Q", "Q(sqrt:d)".
  static FieldSpec parse(const std::string& text);

  std::string name() const;
  bool contains(const Scalar& s) const;
  bool operator==(const FieldSpec&) const = default;
};

// a + b*sqrt(d). Rational values carry d = 0 so they mix with any extension.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, long d);

  static Scalar frac(long p, long q);
  // The element sqrt(d) itself.
  static Scalar root(long d) { return Scalar(0, 1, d); }
  static Scalar parse(const std::string& text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }

  Scalar conjugate() const;
  // a^2 - d b^2, always rational.
  mpq_class norm() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  bool operator==(const Scalar& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }
  // Total order used only for deterministic sorting.
  std::strong_ordering operator<=>(const Scalar& o) const;

  // "p/q" or "p/q+r/s*sqrt(d)"; integers drop the denominator.
  std::string str() const;

 private:
  void normalize();
  long join_radicand(const Scalar& o) const;

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

Scalar scalar_inv(const Scalar& s, const FieldSpec& field);

}  // namespace hopfkit
