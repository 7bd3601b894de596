#ifndef FFYB_ORACLES_HPP
#define FFYB_ORACLES_HPP

// Exhaustive conjugacy oracles: GL(n,q) by filtering all q^(n^2) matrices,
// orbit partition of the solution set, centralizer orders.

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "ffyb/solutions.hpp"

namespace ffyb {

inline std::uint64_t matrix_index(const Matrix& m) {
  const std::uint64_t q = m.field()->order();
  std::uint64_t idx = 0;
  for (auto it = m.data().rbegin(); it != m.data().rend(); ++it) idx = idx * q + *it;
  return idx;
}

inline std::vector<Matrix> enumerate_gl(const EquationInstance& inst, const ScanOptions& opt = {}) {
  const std::uint64_t total = search_space(inst, opt.budget, "GL(n,q) enumeration");
  auto parts = detail::partitioned_scan(total, opt.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Matrix> found;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Matrix p = Matrix::from_index(inst.field, inst.n, idx);
      if (is_invertible(p)) found.push_back(std::move(p));
    }
    return found;
  });
  std::vector<Matrix> out;
  for (auto& part : parts)
    for (auto& p : part) out.push_back(std::move(p));
  if (BigInt(out.size()) != gl_order(inst.n, inst.q())) detail::throw_internal("GL enumeration size mismatch");
  return out;
}

struct ConjugacyClass {
  Matrix first;  // smallest index in the class
  OrbitLabel label;
  // Matrix indices of the members, ascending.
  std::vector<std::uint64_t> members;
  std::size_t size() const { return members.size(); }
};

// Partitions the brute-forced solution set by closing each unvisited
// solution under conjugation by every P in GL(n,q).
inline std::vector<ConjugacyClass> brute_force_conjugacy_classes(const EquationInstance& inst,
                                                                 const ScanOptions& opt = {}) {
  inst.require_nonzero_a("brute_force_conjugacy_classes");
  const std::uint64_t space = search_space(inst, opt.budget, "conjugacy oracle");
  if (space > kStoreLimit) throw BudgetExceeded("conjugacy oracle stores all solutions", space, kStoreLimit);
  ScanOptions o = opt;
  o.store = true;
  BruteForceResult sols = brute_force_solutions(inst, o);
  const std::vector<Matrix> gl = enumerate_gl(inst, opt);
  std::vector<Matrix> gl_inv;
  gl_inv.reserve(gl.size());
  for (const auto& p : gl) gl_inv.push_back(inverse(p));

  std::unordered_map<std::uint64_t, bool> visited;
  for (const auto& s : sols.solutions) visited.emplace(matrix_index(s), false);

  std::vector<ConjugacyClass> out;
  for (const auto& x : sols.solutions) {
    if (visited[matrix_index(x)]) continue;
    ConjugacyClass cls{x, classify(inst, x), {}};
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const std::uint64_t idx = matrix_index(gl[i] * x * gl_inv[i]);
      auto it = visited.find(idx);
      if (it == visited.end()) detail::throw_internal("conjugate of a solution is not a solution");
      if (!it->second) {
        it->second = true;
        cls.members.push_back(idx);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

// |{P in GL(n,q) : P X = X P}|
inline BigInt brute_force_centralizer_order(const EquationInstance& inst, const Matrix& x,
                                            const ScanOptions& opt = {}) {
  detail::require_instance_matrix(inst, x);
  const std::uint64_t total = search_space(inst, opt.budget, "centralizer scan");
  auto parts = detail::partitioned_scan(total, opt.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Matrix p = Matrix::from_index(inst.field, inst.n, idx);
      if (p * x == x * p && is_invertible(p)) ++count;
    }
    return count;
  });
  BigInt out = 0;
  for (auto c : parts) out += c;
  return out;
}

}  // namespace ffyb

#endif  // FFYB_ORACLES_HPP
