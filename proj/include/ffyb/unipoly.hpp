#ifndef FFYB_UNIPOLY_HPP
#define FFYB_UNIPOLY_HPP

#include <sstream>
#include <string>
#include <vector>

#include "ffyb/detail/rawpoly.hpp"
#include "ffyb/gf.hpp"

namespace ffyb {

// Univariate polynomial over F_q, little-endian, no trailing zeros.
class UniPoly {
public:
  explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
  UniPoly(FieldPtr field, detail::RawPoly coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
      if (!field_->contains(c)) throw InvalidArgument("polynomial coefficient out of range");
    detail::trim(coeffs_);
  }

  static UniPoly constant(FieldPtr f, Elem c) { return {std::move(f), {c}}; }
  static UniPoly one(FieldPtr f) { return constant(std::move(f), 1); }
  // x - c
  static UniPoly linear(const FieldPtr& f, Elem c) { return {f, {f->neg(c), 1}}; }
  static UniPoly x(FieldPtr f) { return {std::move(f), {0, 1}}; }

  const FieldPtr& field() const { return field_; }
  const detail::RawPoly& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return detail::degree(coeffs_); }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  UniPoly operator+(const UniPoly& o) const { return {field_, detail::poly_add(*field_, coeffs_, check(o))}; }
  UniPoly operator-(const UniPoly& o) const { return {field_, detail::poly_sub(*field_, coeffs_, check(o))}; }
  UniPoly operator*(const UniPoly& o) const { return {field_, detail::poly_mul(*field_, coeffs_, check(o))}; }
  UniPoly operator-() const { return {field_, detail::poly_sub(*field_, {}, coeffs_)}; }
  UniPoly scaled(Elem c) const { return {field_, detail::poly_scale(*field_, coeffs_, c)}; }

  void divmod(const UniPoly& d, UniPoly& quo, UniPoly& rem) const {
    detail::RawPoly q, r;
    detail::poly_divmod(*field_, coeffs_, check(d), q, r);
    quo = UniPoly(field_, std::move(q));
    rem = UniPoly(field_, std::move(r));
  }
  UniPoly operator/(const UniPoly& d) const {
    UniPoly q(field_), r(field_);
    divmod(d, q, r);
    return q;
  }
  UniPoly operator%(const UniPoly& d) const {
    UniPoly q(field_), r(field_);
    divmod(d, q, r);
    return r;
  }

  UniPoly monic() const { return {field_, detail::make_monic(*field_, coeffs_)}; }

  Elem eval(Elem x) const {
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
    return acc;
  }

  bool operator==(const UniPoly& o) const { return same_field(field_, o.field_) && coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
  // Degree first, then coefficients from the top; a total order for multisets.
  bool operator<(const UniPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(), o.coeffs_.rbegin(), o.coeffs_.rend());
  }

  // Comma-separated little-endian encodings; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? "," : "") + std::to_string(coeffs_[i]);
    return out;
  }

  // Human-readable, e.g. "L^2+4*L".
  std::string pretty(const char* var = "L") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Elem c = coeffs_[i];
      if (c == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i > 0) {
        if (c != 1) os << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

private:
  const detail::RawPoly& check(const UniPoly& o) const {
    if (!same_field(field_, o.field_)) throw InvalidArgument("polynomials over different fields");
    return o.coeffs_;
  }

  FieldPtr field_;
  detail::RawPoly coeffs_;
};

inline UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (!same_field(f.field(), g.field())) throw InvalidArgument("polynomials over different fields");
  return {f.field(), detail::poly_gcd(*f.field(), f.coeffs(), g.coeffs())};
}

inline UniPoly parse_unipoly(const FieldPtr& f, const std::string& text) {
  detail::RawPoly c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || !f->contains(v)) throw InvalidArgument("");
      c.push_back(static_cast<Elem>(v));
    } catch (const std::exception&) {
      throw InvalidArgument("bad polynomial coefficient '" + tok + "'");
    }
  }
  return {f, std::move(c)};
}

}  // namespace ffyb

#endif  // FFYB_UNIPOLY_HPP
