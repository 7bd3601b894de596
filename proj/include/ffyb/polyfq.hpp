#ifndef FFYB_POLYFQ_HPP
#define FFYB_POLYFQ_HPP

// Lambda-matrices over F_q[lambda]: Smith normal form, invariant factors,
// elementary divisors and the rational canonical form.

#include <algorithm>
#include <map>
#include <vector>

#include "ffyb/matfq.hpp"
#include "ffyb/unipoly.hpp"

namespace ffyb {

class PolyMatrix {
public:
  PolyMatrix(FieldPtr field, std::size_t n) : field_(field), n_(n), data_(n * n, UniPoly(field)) {}

  // lambda*I - X
  static PolyMatrix characteristic(const Matrix& x) {
    detail::require_square(x, "characteristic matrix");
    PolyMatrix m(x.field(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        detail::RawPoly c{x.field()->neg(x(i, j))};
        if (i == j) c.push_back(1);
        m(i, j) = UniPoly(x.field(), std::move(c));
      }
    return m;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return n_; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<UniPoly> data_;
};

struct SmithForm {
  // h_1 | h_2 | ... | h_n, each monic or zero.
  std::vector<UniPoly> invariant_factors;

  std::vector<UniPoly> nontrivial() const {
    std::vector<UniPoly> out;
    for (const auto& h : invariant_factors)
      if (!h.is_one()) out.push_back(h);
    return out;
  }
};

namespace detail {

inline UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

}  // namespace detail

// Minimal-degree pivoting (ties broken row-major), Euclidean reduction of the
// pivot row and column, then gcd/lcm passes over adjacent diagonal entries
// until the divisibility chain holds.
inline SmithForm smith_normal_form(PolyMatrix m) {
  const std::size_t n = m.size();
  const FieldPtr& fp = m.field();
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pr = n, pc = n;
      int best = -1;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const int d = m(i, j).degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            pr = i;
            pc = j;
          }
        }
      if (best < 0) break;  // trailing block is zero
      if (pr != t)
        for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(t, j));
      if (pc != t)
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, pc), m(i, t));

      bool clean = true;
      const UniPoly pivot = m(t, t);
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t).is_zero()) continue;
        UniPoly quo(fp), rem(fp);
        m(i, t).divmod(pivot, quo, rem);
        for (std::size_t j = t; j < n; ++j) m(i, j) = m(i, j) - quo * m(t, j);
        if (!m(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j).is_zero()) continue;
        UniPoly quo(fp), rem(fp);
        m(t, j).divmod(pivot, quo, rem);
        for (std::size_t i = t; i < n; ++i) m(i, j) = m(i, j) - quo * m(i, t);
        if (!m(t, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
  }

  std::vector<UniPoly> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(m(i, i).monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      UniPoly g = gcd(diag[i], diag[i + 1]);
      if (g != diag[i]) {
        UniPoly l = detail::lcm(diag[i], diag[i + 1]);
        diag[i] = std::move(g);
        diag[i + 1] = std::move(l);
        changed = true;
      }
    }
  }
  return {std::move(diag)};
}

inline SmithForm invariant_factors(const Matrix& x) { return smith_normal_form(PolyMatrix::characteristic(x)); }

// Prime power p^e with p monic irreducible.
struct PrimePower {
  UniPoly prime;
  int exponent;

  UniPoly value() const {
    UniPoly out = UniPoly::one(prime.field());
    for (int i = 0; i < exponent; ++i) out = out * prime;
    return out;
  }
  bool operator==(const PrimePower& o) const { return prime == o.prime && exponent == o.exponent; }
  bool operator<(const PrimePower& o) const {
    if (prime != o.prime) return prime < o.prime;
    return exponent < o.exponent;
  }
};

// Factors a monic polynomial: linear factors by root scan, the remainder by
// trial division with monic irreducibles of ascending degree.
inline std::vector<PrimePower> factor(const UniPoly& f) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  const FieldPtr& fp = f.field();
  UniPoly rest = f.monic();
  std::vector<PrimePower> out;
  auto strip = [&](const UniPoly& p) {
    int e = 0;
    while (true) {
      UniPoly quo(fp), rem(fp);
      rest.divmod(p, quo, rem);
      if (!rem.is_zero()) break;
      rest = std::move(quo);
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  for (std::uint64_t c = 0; c < fp->order() && rest.degree() >= 1; ++c)
    if (rest.eval(static_cast<Elem>(c)) == 0) strip(UniPoly::linear(fp, static_cast<Elem>(c)));
  for (int d = 2; 2 * d <= rest.degree(); ++d) {
    detail::for_each_monic(fp->order(), d, [&](const detail::RawPoly& g) {
      if (2 * d > rest.degree()) return true;
      UniPoly cand(fp, g);
      if ((rest % cand).is_zero() && detail::is_irreducible(*fp, g)) strip(cand);
      return false;
    });
  }
  // no factor of degree <= deg/2 remains
  if (rest.degree() >= 1) out.push_back({rest, 1});
  std::sort(out.begin(), out.end());
  return out;
}

struct ElementaryDivisors {
  // Sorted multiset of prime powers.
  std::vector<PrimePower> divisors;

  std::vector<UniPoly> values() const {
    std::vector<UniPoly> v;
    for (const auto& d : divisors) v.push_back(d.value());
    return v;
  }
  bool operator==(const ElementaryDivisors& o) const { return divisors == o.divisors; }
};

inline ElementaryDivisors elementary_divisors(const Matrix& x) {
  ElementaryDivisors out;
  for (const auto& h : invariant_factors(x).nontrivial())
    for (auto& pp : factor(h)) out.divisors.push_back(std::move(pp));
  std::sort(out.divisors.begin(), out.divisors.end());
  return out;
}

// Direct sum of companion matrices of the nontrivial invariant factors, in
// increasing degree.
inline Matrix rational_canonical_form(const Matrix& x) {
  detail::require_square(x, "rational canonical form");
  std::vector<UniPoly> hs = invariant_factors(x).nontrivial();
  if (hs.empty()) return Matrix(x.field(), 0, 0);
  Matrix out = companion(hs.front());
  for (std::size_t i = 1; i < hs.size(); ++i) out = direct_sum(out, companion(hs[i]));
  return out;
}

// X ~ Y iff their invariant factors agree.
inline bool similar(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) return false;
  return invariant_factors(x).invariant_factors == invariant_factors(y).invariant_factors;
}

// True iff C(f)^2 != a*C(f). For deg f >= 3 the (1,3) entry of C(f)^2 is 1
// while that of a*C(f) is 0, so the result is always true.
inline bool companion_square_differs(const UniPoly& f, const FieldElement& a) {
  if (f.degree() < 3) throw InvalidArgument("companion square check needs degree >= 3");
  if (!same_field(f.field(), a.field())) throw InvalidArgument("scalar from a different field");
  const Matrix c = companion(f);
  const Matrix sq = c * c;
  const Matrix ac = scalar_mul(a, c);
  if (sq(0, 2) != 1 || ac(0, 2) != 0) detail::throw_internal("companion square entry (1,3) is not 1");
  return sq != ac;
}

}  // namespace ffyb

#endif  // FFYB_POLYFQ_HPP
