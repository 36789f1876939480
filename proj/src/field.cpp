#include "ptl/field.hpp"

#include <sstream>

namespace ptl {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

// inverse of a mod p via extended Euclid; a must be nonzero mod p
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  // r == gcd(a, p) == 1 since p is prime and a != 0 mod p
  return mod_norm(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  require(p >= 2 && p < (std::int64_t(1) << 31), ErrorKind::ParseError,
          "field modulus out of range: " + std::to_string(p));
  require(is_prime(p), ErrorKind::ParseError, "field modulus is not prime: " + std::to_string(p));
  return Field{p};
}

FieldScalar FieldScalar::of(const Field& f, long long n) {
  FieldScalar s(f);
  if (f.is_rational())
    s.q_ = BigRational(n);
  else
    s.res_ = mod_norm(n, f.p);
  return s;
}

FieldScalar FieldScalar::from_rational(BigRational q) {
  FieldScalar s(Field::rationals());
  s.q_ = std::move(q);
  return s;
}

FieldScalar FieldScalar::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  require(!t.empty(), ErrorKind::ParseError, "empty scalar literal");

  auto parse_int = [](const std::string& s) -> BigInt {
    require(!s.empty(), ErrorKind::ParseError, "empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), ErrorKind::ParseError, "bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
      require(isdigit(static_cast<unsigned char>(s[i])), ErrorKind::ParseError,
              "bad integer literal '" + s + "'");
    return BigInt(s);
  };

  auto slash = t.find('/');
  if (f.is_rational()) {
    BigInt num, den = 1;
    if (slash == std::string::npos) {
      num = parse_int(t);
    } else {
      num = parse_int(t.substr(0, slash));
      den = parse_int(t.substr(slash + 1));
      require(den != 0, ErrorKind::DivisionByZero, "zero denominator in '" + t + "'");
    }
    return from_rational(BigRational(num, den));
  }
  require(slash == std::string::npos, ErrorKind::ParseError,
          "prime-field scalars must be integers, got '" + t + "'");
  BigInt v = parse_int(t) % f.p;
  if (v < 0) v += f.p;
  return of(f, static_cast<long long>(v));
}

bool FieldScalar::is_zero() const { return field_.is_rational() ? q_.is_zero() : res_ == 0; }

bool FieldScalar::is_one() const { return field_.is_rational() ? q_ == 1 : res_ == 1; }

std::string FieldScalar::str() const {
  if (!field_.is_rational()) return std::to_string(res_);
  std::ostringstream os;
  os << numerator(q_);
  if (denominator(q_) != 1) os << "/" << denominator(q_);
  return os.str();
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar s(*this);
  if (field_.is_rational())
    s.q_ = -s.q_;
  else
    s.res_ = s.res_ == 0 ? 0 : field_.p - s.res_;
  return s;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    res_ = mod_norm(res_ + o.res_, field_.p);
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    res_ = mod_norm(res_ - o.res_, field_.p);
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    res_ = mod_mul(res_, o.res_, field_.p);
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  check_same(o);
  require(!o.is_zero(), ErrorKind::DivisionByZero, "division by zero");
  if (field_.is_rational())
    q_ /= o.q_;
  else
    res_ = mod_mul(res_, mod_inv(o.res_, field_.p), field_.p);
  return *this;
}

FieldScalar FieldScalar::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
  FieldScalar s(*this);
  if (field_.is_rational())
    s.q_ = BigRational(1) / q_;
  else
    s.res_ = mod_inv(res_, field_.p);
  return s;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.res_ == b.res_;
}

Vec zero_vec(int n, const Field& f) { return Vec(static_cast<std::size_t>(n), FieldScalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace ptl
