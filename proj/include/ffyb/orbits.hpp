#ifndef FFYB_ORBITS_HPP
#define FFYB_ORBITS_HPP

// The n+1 conjugation orbits of the solution set of X^2 = aX (a != 0):
// representatives, rank-based classification and orbit-stabilizer sizes.

#include <string>
#include <vector>

#include "ffyb/instance.hpp"

namespace ffyb {

struct OrbitLabel {
  enum class Kind { Zero, ScalarA, Mixed };
  // Scalar on the diagonal block of X_k(b,a): b = 0 or b = a.
  enum class Block { Zero, A };

  Kind kind = Kind::Zero;
  std::size_t k = 0;
  Block b = Block::Zero;

  static OrbitLabel zero() { return {Kind::Zero, 0, Block::Zero}; }
  static OrbitLabel scalar_a() { return {Kind::ScalarA, 0, Block::Zero}; }
  static OrbitLabel mixed(std::size_t k, Block b) { return {Kind::Mixed, k, b}; }

  bool operator==(const OrbitLabel& o) const { return kind == o.kind && k == o.k && b == o.b; }
  bool operator!=(const OrbitLabel& o) const { return !(*this == o); }
  bool operator<(const OrbitLabel& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (k != o.k) return k < o.k;
    return b < o.b;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Zero: return "Zero";
      case Kind::ScalarA: return "ScalarA";
      case Kind::Mixed: return "Mixed(" + std::to_string(k) + "," + (b == Block::Zero ? "0" : "a") + ")";
    }
    return "?";
  }
};

// Checks k against n and folds Mixed(m,a) into Mixed(m,0) when n = 2m.
inline OrbitLabel normalize(const OrbitLabel& label, std::size_t n) {
  if (label.kind != OrbitLabel::Kind::Mixed) return {label.kind, 0, OrbitLabel::Block::Zero};
  if (n < 2 || label.k < 1 || label.k > n / 2)
    throw InvalidArgument("Mixed orbit needs 1 <= k <= n/2 (k = " + std::to_string(label.k) +
                          ", n = " + std::to_string(n) + ")");
  if (2 * label.k == n) return OrbitLabel::mixed(label.k, OrbitLabel::Block::Zero);
  return label;
}

// Q(a) = [[0,1],[0,a]]
inline Matrix q_block(const FieldPtr& f, Elem a) { return Matrix(f, 2, 2, {0, 1, 0, a}); }

// X_k(b,a) = b I_{n-2k} (+) Q(a) (+) ... (+) Q(a), plus the scalar orbits.
inline Matrix representative(const OrbitLabel& label, const EquationInstance& inst) {
  inst.require_nonzero_a("representative");
  const OrbitLabel l = normalize(label, inst.n);
  switch (l.kind) {
    case OrbitLabel::Kind::Zero: return Matrix::zero(inst.field, inst.n);
    case OrbitLabel::Kind::ScalarA: return Matrix::scalar(inst.field, inst.n, inst.a);
    case OrbitLabel::Kind::Mixed: break;
  }
  const Elem b = l.b == OrbitLabel::Block::Zero ? 0 : inst.a;
  Matrix out = Matrix::scalar(inst.field, inst.n - 2 * l.k, b);
  for (std::size_t i = 0; i < l.k; ++i) out = direct_sum(out, q_block(inst.field, inst.a));
  return out;
}

// Rank of every member of the orbit.
inline std::size_t orbit_rank(const OrbitLabel& label, std::size_t n) {
  const OrbitLabel l = normalize(label, n);
  switch (l.kind) {
    case OrbitLabel::Kind::Zero: return 0;
    case OrbitLabel::Kind::ScalarA: return n;
    case OrbitLabel::Kind::Mixed: return l.b == OrbitLabel::Block::Zero ? l.k : n - l.k;
  }
  return 0;
}

// Label of the orbit whose members have the given rank.
inline OrbitLabel label_for_rank(std::size_t r, std::size_t n) {
  if (r > n) throw InvalidArgument("rank exceeds n");
  if (r == 0) return OrbitLabel::zero();
  if (r == n) return OrbitLabel::scalar_a();
  if (r <= n / 2) return normalize(OrbitLabel::mixed(r, OrbitLabel::Block::Zero), n);
  return normalize(OrbitLabel::mixed(n - r, OrbitLabel::Block::A), n);
}

// All n+1 labels, ordered by rank 0..n.
inline std::vector<OrbitLabel> orbit_labels(std::size_t n) {
  std::vector<OrbitLabel> out;
  for (std::size_t r = 0; r <= n; ++r) out.push_back(label_for_rank(r, n));
  return out;
}

// Solutions satisfy X(X - aI) = 0 with gcd(L, L-a) = 1, so the elementary
// divisors are copies of L and L-a, and rank(X) counts the copies of L-a.
inline OrbitLabel classify(const EquationInstance& inst, const Matrix& x) {
  if (!is_solution(inst, x)) throw InvalidArgument("matrix is not a solution of X^2 = aX");
  return label_for_rank(rank(x), inst.n);
}

inline BigInt stabilizer_order(const EquationInstance& inst, const OrbitLabel& label) {
  inst.require_nonzero_a("stabilizer_order");
  const OrbitLabel l = normalize(label, inst.n);
  if (l.kind != OrbitLabel::Kind::Mixed) return gl_order(inst.n, inst.q());
  return gl_order(inst.n - l.k, inst.q()) * gl_order(l.k, inst.q());
}

inline BigInt orbit_size(const EquationInstance& inst, const OrbitLabel& label) {
  return detail::exact_div(gl_order(inst.n, inst.q()), stabilizer_order(inst, label), "orbit_size");
}

struct OrbitRecord {
  OrbitLabel label;
  Matrix representative;
  std::size_t rank;
  BigInt stabilizer_order;
  BigInt orbit_size;
};

inline std::vector<OrbitRecord> list_orbits(const EquationInstance& inst) {
  inst.require_nonzero_a("list_orbits");
  std::vector<OrbitRecord> out;
  const BigInt gl = gl_order(inst.n, inst.q());
  for (const auto& label : orbit_labels(inst.n)) {
    Matrix rep = representative(label, inst);
    const std::size_t r = rank(rep);
    if (r != orbit_rank(label, inst.n)) detail::throw_internal("representative rank mismatch for " + label.to_string());
    BigInt stab = stabilizer_order(inst, label);
    BigInt size = orbit_size(inst, label);
    if (size * stab != gl) detail::throw_internal("orbit-stabilizer product mismatch");
    out.push_back({label, std::move(rep), r, std::move(stab), std::move(size)});
  }
  return out;
}

}  // namespace ffyb

#endif  // FFYB_ORBITS_HPP
