#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "ptl/errors.hpp"

namespace ptl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Ground field descriptor: p == 0 means the rationals, otherwise the prime
/// field F_p. All scalar arithmetic is exact; there is no floating point
/// anywhere in the engine.
struct Field {
  std::int64_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::int64_t p);  // validates primality, 2 <= p < 2^31

  bool is_rational() const { return p == 0; }
  std::int64_t characteristic() const { return p; }
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

  friend bool operator==(const Field&, const Field&) = default;
};

/// An exact scalar: an arbitrary-precision rational or a residue mod p.
/// Rationals are kept in lowest terms with positive denominator (guaranteed
/// by the cpp_rational backend); residues live in [0, p).
class FieldScalar {
 public:
  FieldScalar() = default;  // zero over Q

  static FieldScalar zero(const Field& f) { return FieldScalar(f); }
  static FieldScalar one(const Field& f) { return of(f, 1); }
  static FieldScalar of(const Field& f, long long n);
  static FieldScalar from_rational(BigRational q);  // over Q
  /// Parses "a", "-a" or "a/b" over Q; a decimal integer over F_p.
  static FieldScalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const BigRational& rational_value() const { return q_; }
  std::int64_t residue() const { return res_; }
  std::string str() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);
  FieldScalar inverse() const;

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b);
  friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

 private:
  explicit FieldScalar(const Field& f) : field_(f) {}
  void check_same(const FieldScalar& o) const {
    require(field_ == o.field_, ErrorKind::FieldMismatch,
            "mixed scalars from " + field_.str() + " and " + o.field_.str());
  }

  Field field_{};
  std::int64_t res_ = 0;  // residue when field_.p > 0
  BigRational q_;         // value when field_.p == 0
};

using Vec = std::vector<FieldScalar>;

Vec zero_vec(int n, const Field& f);
bool is_zero_vec(const Vec& v);
std::string vec_str(const Vec& v);

}  // namespace ptl
