// Exact coefficient fields: arbitrary-precision rationals (GMP) and prime
// fields GF(p) with p prime and below 2^31. Everything downstream is
// templated on one of these two field classes; no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homkoszul {

enum class ErrorKind {
  FieldMismatch,
  AmbientMismatch,
  TruncationMismatch,
  ZeroRelation,
  BadEndpoint,
  BadDegree,
  BadCoefficient,
  DuplicateArrow,
  BlockViolation,
  SplittingViolation,
  InputError,
  ResourceLimit,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) throw Error(k, msg);
}

// Field of rationals. Elements are always kept in canonical form
// (lowest terms, positive denominator), which mpq_class maintains after
// canonicalize(); every constructor path below canonicalizes.
struct RationalField {
  using Elem = mpq_class;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static bool is_one(const Elem& a) { return a == 1; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) {
    require(!is_zero(a), ErrorKind::InputError, "division by zero");
    return 1 / a;
  }
  static Elem div(const Elem& a, const Elem& b) { return a * inv(b); }
  static Elem from_int(long v) { return Elem(v); }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }

  static std::string to_string(const Elem& a) { return a.get_str(); }

  // Parses "p", "-p" or "p/q" with arbitrary-precision integers.
  static Elem parse(const std::string& s) {
    try {
      Elem v(s);
      require(sgn(v.get_den()) > 0, ErrorKind::BadCoefficient, "zero denominator: " + s);
      v.canonicalize();
      return v;
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::BadCoefficient, "not an exact rational literal: " + s);
    }
  }

  static const char* name() { return "QQ"; }
};

// GF(p) for prime p < 2^31. Elements are residues in [0, p). Reduction of
// 64-bit products uses a Barrett-style multiply-shift.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    require(p >= 2 && p < (1u << 31) && is_prime(p), ErrorKind::InputError,
            "GF(p) modulus must be a prime below 2^31: " + std::to_string(p));
    magic_ = (~__uint128_t(0)) / p_ + 1;  // ceil(2^128 / p)
  }

  std::uint32_t p() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return reduce(std::uint64_t(a) * b); }
  Elem inv(Elem a) const {
    require(a != 0, ErrorKind::InputError, "division by zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p_, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    return Elem(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_int(long v) const {
    long m = v % long(p_);
    if (m < 0) m += p_;
    return Elem(m);
  }
  bool eq(Elem a, Elem b) const { return a == b; }

  // Reduces any 64-bit value mod p.
  Elem reduce(std::uint64_t x) const {
    __uint128_t q = (__uint128_t(magic_ >> 64) * x) >> 64;
    std::uint64_t r = x - std::uint64_t(q) * p_;
    if (r >= p_) r -= p_;
    return Elem(r);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  Elem parse(const std::string& s) const {
    require(!s.empty(), ErrorKind::BadCoefficient, "empty coefficient");
    // accept optional sign and a decimal integer, or "a/b"
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Elem num = parse(s.substr(0, slash));
      Elem den = parse(s.substr(slash + 1));
      return div(num, den);
    }
    std::size_t i = 0;
    bool negate = false;
    if (s[0] == '+' || s[0] == '-') {
      negate = s[0] == '-';
      i = 1;
    }
    require(i < s.size(), ErrorKind::BadCoefficient, "bad coefficient: " + s);
    Elem acc = 0;
    for (; i < s.size(); ++i) {
      require(s[i] >= '0' && s[i] <= '9', ErrorKind::BadCoefficient,
              "bad coefficient literal: " + s);
      acc = add(mul(acc, 10 % p_), Elem((s[i] - '0') % p_));
    }
    return negate ? neg(acc) : acc;
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  const char* name() const { return "GF(p)"; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
  __uint128_t magic_;
};

// Runtime tag naming the coefficient field of a document or tagged value.
struct FieldDesc {
  enum Kind { QQ, GFp } kind = QQ;
  std::uint32_t p = 0;

  bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldDesc& o) const { return !(*this == o); }
  std::string str() const { return kind == QQ ? "QQ" : "GF:" + std::to_string(p); }

  static FieldDesc rationals() { return FieldDesc{QQ, 0}; }
  static FieldDesc prime(std::uint32_t p) { return FieldDesc{GFp, p}; }
  static FieldDesc parse(const std::string& s);
};

inline FieldDesc FieldDesc::parse(const std::string& s) {
  if (s == "QQ") return rationals();
  if (s.rfind("GF:", 0) == 0) {
    const std::string digits = s.substr(3);
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            ErrorKind::InputError, "bad field descriptor: " + s);
    unsigned long long v = std::stoull(digits);
    require(v >= 2 && v < (1ull << 31), ErrorKind::InputError, "GF modulus out of range: " + s);
    return prime(std::uint32_t(v));
  }
  throw Error(ErrorKind::InputError, "unknown field descriptor: " + s);
}

}  // namespace homkoszul
