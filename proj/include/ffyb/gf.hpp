#ifndef FFYB_GF_HPP
#define FFYB_GF_HPP

// Finite fields F_q, q = p^s, with elements stored as integer encodings
// 0..q-1 whose base-p digits (little-endian) are the coefficients of the
// residue polynomial modulo the field's defining polynomial.

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ffyb/detail/rawpoly.hpp"
#include "ffyb/error.hpp"

namespace ffyb {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Field {
public:
  // Builds F_p[x]/(modulus). The modulus must be monic of degree s and
  // irreducible over F_p. For s = 1 pass {0, 1} (the polynomial x).
  Field(std::uint32_t p, std::vector<Elem> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    if (modulus_.size() < 2 || modulus_.back() != 1)
      throw InvalidArgument("field modulus must be monic of degree >= 1");
    for (Elem c : modulus_)
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    s_ = static_cast<int>(modulus_.size()) - 1;
    std::uint64_t q = 1;
    for (int i = 0; i < s_; ++i) {
      q *= p_;
      if (q > kMaxFieldOrder) throw InvalidArgument("field order exceeds 2^20");
    }
    q_ = q;
    if (s_ > 1) {
      Field prime(p_, {0, 1});
      if (!detail::is_irreducible(prime, modulus_))
        throw InvalidArgument("field modulus is reducible over F_" + std::to_string(p_));
    }
    build_tables();
  }

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return s_; }
  std::uint64_t order() const { return q_; }
  BigInt order_big() const { return BigInt(q_); }
  const std::vector<Elem>& modulus() const { return modulus_; }

  bool operator==(const Field& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }
  bool operator!=(const Field& other) const { return !(*this == other); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  bool contains(std::uint64_t e) const { return e < q_; }

  Elem add(Elem x, Elem y) const {
    if (s_ == 1) {
      Elem z = x + y;
      return z >= p_ ? z - p_ : z;
    }
    if (!add_table_.empty()) return add_table_[x * q_ + y];
    return digitwise(x, y, false);
  }

  Elem neg(Elem x) const {
    if (s_ == 1) return x == 0 ? 0 : p_ - x;
    return digitwise(0, x, true);
  }

  Elem sub(Elem x, Elem y) const {
    if (s_ == 1) return x >= y ? x - y : x + p_ - y;
    return digitwise(x, y, true);
  }

  Elem mul(Elem x, Elem y) const {
    if (s_ == 1) return static_cast<Elem>((std::uint64_t{x} * y) % p_);
    if (!mul_table_.empty()) return mul_table_[x * q_ + y];
    if (!exp_.empty()) return x == 0 || y == 0 ? 0 : exp_[log_[x] + log_[y]];
    return poly_mul_mod(x, y);
  }

  Elem inv(Elem x) const {
    if (x == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    if (!inv_table_.empty()) return inv_table_[x];
    if (!exp_.empty()) return exp_[q_ - 1 - log_[x]];
    return pow(x, q_ - 2);
  }

  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  Elem pow(Elem x, std::uint64_t e) const {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  // (k mod p) * 1, for any integer k.
  Elem from_integer(const BigInt& k) const {
    BigInt r = k % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  std::vector<Elem> digits(Elem x) const {
    std::vector<Elem> d(s_);
    for (int i = 0; i < s_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }

  Elem from_digits(const std::vector<Elem>& d) const {
    Elem x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  }

  std::string describe() const {
    std::string out = "GF(" + std::to_string(q_) + ")";
    if (s_ > 1) {
      out += " mod [";
      for (std::size_t i = 0; i < modulus_.size(); ++i) out += (i ? "," : "") + std::to_string(modulus_[i]);
      out += "]";
    }
    return out;
  }

private:
  Elem digitwise(Elem x, Elem y, bool subtract) const {
    Elem out = 0, place = 1;
    for (int i = 0; i < s_; ++i) {
      Elem a = x % p_, b = y % p_;
      x /= p_;
      y /= p_;
      Elem c = subtract ? (a + p_ - b) % p_ : (a + b) % p_;
      out += c * place;
      place *= p_;
    }
    return out;
  }

  Elem poly_mul_mod(Elem x, Elem y) const {
    const Field prime(p_, {0, 1}, PrimeTag{});
    detail::RawPoly a = digits(x), b = digits(y);
    detail::trim(a);
    detail::trim(b);
    detail::RawPoly r = detail::poly_rem(prime, detail::poly_mul(prime, a, b), modulus_);
    r.resize(s_, 0);
    return from_digits(r);
  }

  struct PrimeTag {};
  Field(std::uint32_t p, std::vector<Elem> modulus, PrimeTag)
      : p_(p), s_(1), q_(p), modulus_(std::move(modulus)) {}

  void build_tables() {
    if (s_ > 1 && q_ > 256) {
      build_log_tables();
      return;
    }
    if (s_ == 1) {
      if (q_ <= 4096) {
        inv_table_.assign(q_, 0);
        for (Elem x = 1; x < q_; ++x) inv_table_[x] = pow(x, q_ - 2);
      }
      return;
    }
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    for (Elem x = 0; x < q_; ++x)
      for (Elem y = 0; y < q_; ++y) {
        add_table_[x * q_ + y] = digitwise(x, y, false);
        mul_table_[x * q_ + y] = poly_mul_mod(x, y);
      }
    inv_table_.assign(q_, 0);
    for (Elem x = 1; x < q_; ++x) inv_table_[x] = pow(x, q_ - 2);
  }

  // exp_[i] = g^i for a primitive element g (doubled so log sums need no
  // reduction), log_[g^i] = i.
  void build_log_tables() {
    const std::uint64_t n = q_ - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t r = 2; r * r <= m; ++r)
      if (m % r == 0) {
        primes.push_back(r);
        while (m % r == 0) m /= r;
      }
    if (m > 1) primes.push_back(m);
    Elem g = 2;
    for (;; ++g) {
      bool primitive = true;
      for (std::uint64_t r : primes)
        if (pow(g, n / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive) break;
    }
    std::vector<Elem> gd = digits(g);
    detail::trim(gd);
    exp_.resize(2 * n);
    log_.assign(q_, 0);
    std::vector<std::uint64_t> cur(s_ + gd.size(), 0), next(cur.size());
    cur[0] = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      Elem e = 0;
      for (int k = s_ - 1; k >= 0; --k) e = e * p_ + static_cast<Elem>(cur[k]);
      exp_[i] = exp_[i + n] = e;
      log_[e] = static_cast<Elem>(i);
      std::fill(next.begin(), next.end(), 0);
      for (int k = 0; k < s_; ++k)
        for (std::size_t j = 0; j < gd.size(); ++j) next[k + j] = (next[k + j] + cur[k] * gd[j]) % p_;
      for (int k = static_cast<int>(next.size()) - 1; k >= s_; --k) {
        const std::uint64_t c = next[k];
        if (c == 0) continue;
        next[k] = 0;
        for (int j = 0; j < s_; ++j) next[k - s_ + j] = (next[k - s_ + j] + (p_ - c) * modulus_[j]) % p_;
      }
      std::swap(cur, next);
    }
  }

  std::uint32_t p_;
  int s_ = 1;
  std::uint64_t q_ = 0;
  std::vector<Elem> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> inv_table_;
  std::vector<Elem> exp_;
  std::vector<Elem> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

// F_q with the lexicographically smallest monic irreducible modulus of
// degree s over F_p (coefficient tuples compared with a_0 first).
inline FieldPtr make_field(std::uint32_t p, int s) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw InvalidArgument("extension degree must be >= 1");
  if (s == 1) return std::make_shared<const Field>(p, std::vector<Elem>{0, 1});
  const Field prime(p, {0, 1});
  return std::make_shared<const Field>(p, detail::smallest_irreducible(prime, s));
}

// A field element bound to its field.
class FieldElement {
public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw InvalidArgument("field element without a field");
    if (!field_->contains(value_))
      throw InvalidArgument("encoding " + std::to_string(value_) + " out of range for " + field_->describe());
  }

  static FieldElement zero(FieldPtr f) { return {std::move(f), 0}; }
  static FieldElement one(FieldPtr f) { return {std::move(f), 1}; }

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<Elem> coeffs() const { return field_->digits(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(value_, check(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(value_, check(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(value_, check(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(value_, check(o))}; }
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const { return value_ == check(o); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
  Elem check(const FieldElement& o) const {
    if (field_ != o.field_ && *field_ != *o.field_)
      throw InvalidArgument("field elements from different fields");
    return o.value_;
  }

  FieldPtr field_;
  Elem value_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

inline std::vector<FieldElement> all_elements(const FieldPtr& f) {
  std::vector<FieldElement> out;
  out.reserve(f->order());
  for (std::uint64_t i = 0; i < f->order(); ++i) out.emplace_back(f, static_cast<Elem>(i));
  return out;
}

inline FieldElement int_to_field(const FieldPtr& f, const BigInt& k) { return {f, f->from_integer(k)}; }

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace ffyb

#endif  // FFYB_GF_HPP
