#ifndef FFYB_MATFQ_HPP
#define FFYB_MATFQ_HPP

// Dense matrices over F_q.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffyb/gf.hpp"
#include "ffyb/unipoly.hpp"

namespace ffyb {

class Matrix {
public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw InvalidArgument("matrix entry count does not match dimensions");
    for (Elem e : data_)
      if (!field_->contains(e)) throw InvalidArgument("matrix entry out of range for " + field_->describe());
  }

  static Matrix zero(FieldPtr f, std::size_t n) { return {std::move(f), n, n}; }
  static Matrix scalar(FieldPtr f, std::size_t n, Elem c) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }
  static Matrix identity(FieldPtr f, std::size_t n) { return scalar(std::move(f), n, 1); }

  // Matrix whose row-major entries are the base-q digits of index
  // (entry 0 least significant).
  static Matrix from_index(FieldPtr f, std::size_t n, std::uint64_t index) {
    Matrix m(f, n, n);
    const std::uint64_t q = f->order();
    for (auto& e : m.data_) {
      e = static_cast<Elem>(index % q);
      index /= q;
    }
    return m;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Elem>& data() const { return data_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }

  bool is_zero() const {
    for (Elem e : data_)
      if (e != 0) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && same_field(field_, o.field_) && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const { return data_ < o.data_; }

  // Rows separated by ';', entries by ','.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out += ';';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ',';
        out += std::to_string((*this)(i, j));
      }
    }
    return out;
  }

private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

inline Matrix parse_matrix(const FieldPtr& f, const std::string& text) {
  std::vector<std::vector<Elem>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Elem> r;
    std::stringstream es(row);
    std::string tok;
    while (std::getline(es, tok, ',')) {
      std::size_t b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
      tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size() || !f->contains(v)) throw InvalidArgument("");
        r.push_back(static_cast<Elem>(v));
      } catch (const std::exception&) {
        throw InvalidArgument("bad matrix entry '" + tok + "' for " + f->describe());
      }
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows[0].empty()) throw InvalidArgument("empty matrix");
  std::vector<Elem> flat;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw InvalidArgument("ragged matrix rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return {f, rows.size(), rows[0].size(), std::move(flat)};
}

namespace detail {

inline void require_same_field(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field(), b.field())) throw InvalidArgument("matrices over different fields");
}

inline void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw InvalidArgument(std::string(op) + " requires a square matrix");
}

}  // namespace detail

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum dimension mismatch");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field()->add(a(i, j), b(i, j));
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix difference dimension mismatch");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field()->sub(a(i, j), b(i, j));
  return out;
}

inline Matrix scalar_mul(Elem c, const Matrix& a) {
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field()->mul(c, a(i, j));
  return out;
}

inline Matrix scalar_mul(const FieldElement& c, const Matrix& a) {
  if (!same_field(c.field(), a.field())) throw InvalidArgument("scalar from a different field");
  return scalar_mul(c.value(), a);
}

namespace detail {

// Row-reduces m in place (first nonzero pivot per column). Returns the rank;
// det_out receives the determinant when m is square.
inline std::size_t row_reduce(Matrix& m, Elem* det_out) {
  const Field& f = *m.field();
  Elem det = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      det = f.neg(det);
    }
    const Elem pv = m(rank, col);
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const Elem factor = f.mul(m(i, col), pinv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  if (det_out) *det_out = rank == m.rows() && m.is_square() ? det : 0;
  return rank;
}

}  // namespace detail

inline std::size_t rank(const Matrix& x) {
  Matrix w = x;
  return detail::row_reduce(w, nullptr);
}

inline FieldElement det(const Matrix& x) {
  detail::require_square(x, "det");
  Matrix w = x;
  Elem d = 0;
  detail::row_reduce(w, &d);
  return {x.field(), d};
}

inline Matrix inverse(const Matrix& x) {
  detail::require_square(x, "inverse");
  const Field& f = *x.field();
  const std::size_t n = x.rows();
  Matrix aug(x.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = x(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrix("inverse of a singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(col, j));
    const Elem pinv = f.inv(aug(col, col));
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) = f.mul(aug(col, j), pinv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      const Elem factor = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) = f.sub(aug(i, j), f.mul(factor, aug(col, j)));
    }
  }
  Matrix out(x.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

inline bool is_invertible(const Matrix& x) { return x.is_square() && !det(x).is_zero(); }

// det(lambda*I - X) computed by fraction-free (Bareiss) elimination over
// F_q[lambda]. Returned monic of degree n.
inline UniPoly charpoly(const Matrix& x) {
  detail::require_square(x, "charpoly");
  const FieldPtr& fp = x.field();
  const std::size_t n = x.rows();
  if (n == 0) return UniPoly::one(fp);
  std::vector<UniPoly> m;
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      detail::RawPoly c{fp->neg(x(i, j))};
      if (i == j) c.push_back(1);
      m.emplace_back(fp, std::move(c));
    }
  auto at = [&](std::size_t i, std::size_t j) -> UniPoly& { return m[i * n + j]; };
  UniPoly prev = UniPoly::one(fp);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, k).is_zero()) ++piv;
    if (piv == n) detail::throw_internal("characteristic matrix is singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        UniPoly quo(fp), rem(fp);
        num.divmod(prev, quo, rem);
        if (!rem.is_zero()) detail::throw_internal("Bareiss step left a remainder");
        at(i, j) = std::move(quo);
      }
    prev = at(k, k);
  }
  UniPoly d = at(n - 1, n - 1);
  if (negate) d = -d;
  if (d.degree() != static_cast<int>(n) || !d.is_monic()) detail::throw_internal("characteristic polynomial not monic of degree n");
  return d;
}

// Signed characteristic coefficients: det(lambda*I - X) =
// lambda^n + sum_i (-1)^i xi_i lambda^(n-i); xi_1 = trace, xi_n = det.
struct XiVector {
  std::vector<FieldElement> components;

  std::size_t size() const { return components.size(); }
  const FieldElement& operator[](std::size_t i) const { return components[i]; }
  std::vector<Elem> values() const {
    std::vector<Elem> v;
    for (const auto& c : components) v.push_back(c.value());
    return v;
  }
  bool operator==(const XiVector& o) const { return components == o.components; }
  bool operator!=(const XiVector& o) const { return !(*this == o); }
};

inline XiVector charpoly_xi(const Matrix& x) {
  const UniPoly cp = charpoly(x);
  const std::size_t n = x.rows();
  XiVector out;
  for (std::size_t i = 1; i <= n; ++i) {
    Elem c = cp.coeff(static_cast<int>(n - i));
    if (i % 2 == 1) c = x.field()->neg(c);
    out.components.emplace_back(x.field(), c);
  }
  return out;
}

// Companion matrix: superdiagonal ones, last row -a_0..-a_{k-1}.
inline Matrix companion(const UniPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("companion matrix needs degree >= 1");
  if (!f.is_monic()) throw InvalidArgument("companion matrix needs a monic polynomial");
  const std::size_t k = static_cast<std::size_t>(f.degree());
  Matrix c(f.field(), k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < k; ++j) c(k - 1, j) = f.field()->neg(f.coeff(static_cast<int>(j)));
  return c;
}

inline Matrix direct_sum(const Matrix& b, const Matrix& c) {
  detail::require_same_field(b, c);
  detail::require_square(b, "direct_sum");
  detail::require_square(c, "direct_sum");
  const std::size_t k = b.rows(), l = c.rows();
  Matrix out(b.field(), k + l, k + l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = b(i, j);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) out(k + i, k + j) = c(i, j);
  return out;
}

// P X P^-1
inline Matrix conjugate(const Matrix& p, const Matrix& x) {
  if (p.rows() != x.rows()) throw InvalidArgument("conjugation size mismatch");
  return p * x * inverse(p);
}

// |GL(n,q)| = prod_{i<n} (q^n - q^i); 1 for n = 0.
inline BigInt gl_order(std::size_t n, const BigInt& q) {
  BigInt qn = boost::multiprecision::pow(q, static_cast<unsigned>(n));
  BigInt qi = 1, out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

// Evaluates f(X) by Horner's rule.
inline Matrix eval_poly(const UniPoly& f, const Matrix& x) {
  detail::require_square(x, "eval_poly");
  Matrix acc = Matrix::zero(x.field(), x.rows());
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + Matrix::scalar(x.field(), x.rows(), f.coeff(i));
  return acc;
}

}  // namespace ffyb

#endif  // FFYB_MATFQ_HPP
