#ifndef FFYB_INSTANCE_HPP
#define FFYB_INSTANCE_HPP

#include <string>
#include <vector>

#include "ffyb/matfq.hpp"

namespace ffyb {

// X^2 = a X over F_q with X of size n x n.
struct EquationInstance {
  FieldPtr field;
  std::size_t n;
  Elem a;

  EquationInstance(FieldPtr f, std::size_t n_, Elem a_) : field(std::move(f)), n(n_), a(a_) {
    if (!field) throw InvalidArgument("instance without a field");
    if (n < 1) throw InvalidArgument("matrix size n must be >= 1");
    if (!field->contains(a)) throw InvalidArgument("a = " + std::to_string(a) + " is not an element of " + field->describe());
  }

  FieldElement scalar() const { return {field, a}; }
  BigInt q() const { return field->order_big(); }
  std::size_t half() const { return n / 2; }

  void require_nonzero_a(const char* op) const {
    if (a == 0) throw InvalidArgument(std::string(op) + " requires a != 0");
  }
};

namespace detail {

// X*X == a*X on raw row-major entries; exits at the first differing entry.
inline bool satisfies_quadratic(const Field& f, std::size_t n, const Elem* x, Elem a) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = f.add(acc, f.mul(x[i * n + k], x[k * n + j]));
      if (acc != f.mul(a, x[i * n + j])) return false;
    }
  return true;
}

inline void require_instance_matrix(const EquationInstance& inst, const Matrix& x) {
  if (x.rows() != inst.n || x.cols() != inst.n)
    throw InvalidArgument("matrix must be " + std::to_string(inst.n) + "x" + std::to_string(inst.n));
  if (!same_field(x.field(), inst.field)) throw InvalidArgument("matrix over a different field");
}

}  // namespace detail

inline bool is_solution(const EquationInstance& inst, const Matrix& x) {
  inst.require_nonzero_a("is_solution");
  detail::require_instance_matrix(inst, x);
  return detail::satisfies_quadratic(*inst.field, inst.n, x.data().data(), inst.a);
}

// A X A = X A X with A = a I. Meaningful for any a, including zero.
inline bool is_yang_baxter_solution(const EquationInstance& inst, const Matrix& x) {
  detail::require_instance_matrix(inst, x);
  const Matrix a = Matrix::scalar(inst.field, inst.n, inst.a);
  return a * x * a == x * a * x;
}

}  // namespace ffyb

#endif  // FFYB_INSTANCE_HPP
