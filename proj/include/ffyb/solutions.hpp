#ifndef FFYB_SOLUTIONS_HPP
#define FFYB_SOLUTIONS_HPP

// Counting the solutions of X^2 = aX: exhaustive enumeration, the closed
// form via orbit-stabilizer, and the degenerate cases n = 1 and a = 0.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffyb/detail/scan.hpp"
#include "ffyb/orbits.hpp"

namespace ffyb {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;
// Solutions are stored (not just counted) below this search-space size.
inline constexpr std::uint64_t kStoreLimit = 1'000'000;

struct ScanOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
  bool store = true;
};

enum class CountMethod { ClosedForm, BruteForce, OrbitSum };

inline const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::ClosedForm: return "closed_form";
    case CountMethod::BruteForce: return "brute_force";
    case CountMethod::OrbitSum: return "orbit_sum";
  }
  return "?";
}

struct CountReport {
  std::size_t n;
  BigInt q;
  Elem a;
  BigInt total;
  std::vector<std::pair<OrbitLabel, BigInt>> per_orbit;
  CountMethod method;

  // 2 + sum over nonzero singular orbits.
  bool satisfies_orbit_decomposition() const {
    BigInt s = 2;
    for (const auto& [label, size] : per_orbit)
      if (label.kind == OrbitLabel::Kind::Mixed) s += size;
    return s == total;
  }
};

// q^(n^2), or throws BudgetExceeded.
inline std::uint64_t search_space(const EquationInstance& inst, std::uint64_t budget, const char* what) {
  const BigInt space = boost::multiprecision::pow(inst.q(), static_cast<unsigned>(inst.n * inst.n));
  if (space > budget) throw BudgetExceeded(what, space, budget);
  return static_cast<std::uint64_t>(space);
}

struct BruteForceResult {
  BigInt count;
  // Per-rank counts; the rank determines the orbit.
  std::vector<BigInt> by_rank;
  // In enumeration order; empty unless stored.
  std::vector<Matrix> solutions;
};

// Scans every n x n matrix in index order and keeps those with X^2 = aX.
inline BruteForceResult brute_force_solutions(const EquationInstance& inst, const ScanOptions& opt = {}) {
  inst.require_nonzero_a("brute_force_solutions");
  const std::uint64_t total = search_space(inst, opt.budget, "brute-force solution scan");
  const bool store = opt.store && total <= kStoreLimit;
  const std::uint64_t q = inst.field->order();
  const std::size_t n = inst.n;
  const Field& f = *inst.field;

  struct Partial {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> by_rank;
    std::vector<std::vector<Elem>> found;
  };
  auto parts = detail::partitioned_scan(total, opt.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Partial part;
    part.by_rank.assign(n + 1, 0);
    std::vector<Elem> digits(n * n);
    detail::decode_index(begin, q, digits);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (detail::satisfies_quadratic(f, n, digits.data(), inst.a)) {
        ++part.count;
        Matrix m(inst.field, n, n, digits);
        ++part.by_rank[rank(m)];
        if (store) part.found.push_back(digits);
      }
      detail::increment(digits, q);
    }
    return part;
  });

  BruteForceResult out;
  out.by_rank.assign(n + 1, 0);
  for (auto& part : parts) {
    out.count += part.count;
    for (std::size_t r = 0; r <= n; ++r) out.by_rank[r] += part.by_rank[r];
    for (auto& d : part.found) out.solutions.emplace_back(inst.field, n, n, std::move(d));
  }
  return out;
}

inline CountReport brute_force_count(const EquationInstance& inst, const ScanOptions& opt = {}) {
  ScanOptions o = opt;
  o.store = false;
  BruteForceResult r = brute_force_solutions(inst, o);
  CountReport rep{inst.n, inst.q(), inst.a, r.count, {}, CountMethod::BruteForce};
  for (std::size_t rk = 0; rk <= inst.n; ++rk) rep.per_orbit.emplace_back(label_for_rank(rk, inst.n), r.by_rank[rk]);
  return rep;
}

// Two-branch closed form: 2 + |GL(n,q)| * sum over nonzero singular orbits
// of 1/|stabilizer|, every quotient taken exactly.
inline CountReport closed_form_count(const EquationInstance& inst) {
  inst.require_nonzero_a("closed_form_count");
  const std::size_t n = inst.n;
  const BigInt q = inst.q();
  CountReport rep{n, q, inst.a, 2, {}, CountMethod::ClosedForm};
  rep.per_orbit.emplace_back(OrbitLabel::zero(), 1);
  if (n == 1) {
    rep.per_orbit.emplace_back(OrbitLabel::scalar_a(), 1);
    return rep;
  }
  const std::size_t m = n / 2;
  const BigInt gln = gl_order(n, q);
  // k counts the Q(a) blocks; the b = 0 and b = a orbits have equal size.
  for (std::size_t k = 1; k <= m; ++k) {
    const BigInt size = detail::exact_div(gln, gl_order(n - k, q) * gl_order(k, q), "closed_form_count");
    if (n % 2 == 0 && k == m) {
      rep.total += size;
      rep.per_orbit.emplace_back(OrbitLabel::mixed(k, OrbitLabel::Block::Zero), size);
    } else {
      rep.total += 2 * size;
      rep.per_orbit.emplace_back(OrbitLabel::mixed(k, OrbitLabel::Block::Zero), size);
      rep.per_orbit.emplace_back(OrbitLabel::mixed(k, OrbitLabel::Block::A), size);
    }
  }
  rep.per_orbit.emplace_back(OrbitLabel::scalar_a(), 1);
  return rep;
}

// Sum of orbit sizes over list_orbits.
inline CountReport orbit_sum_count(const EquationInstance& inst) {
  CountReport rep{inst.n, inst.q(), inst.a, 0, {}, CountMethod::OrbitSum};
  for (const auto& rec : list_orbits(inst)) {
    rep.total += rec.orbit_size;
    rep.per_orbit.emplace_back(rec.label, rec.orbit_size);
  }
  return rep;
}

// a = 0: A X A = X A X holds for every X, so the count is q^(n^2).
inline BigInt yb_solution_count(const EquationInstance& inst) {
  if (inst.a != 0) throw InvalidArgument("yb_solution_count is for a = 0; use closed_form_count for a != 0");
  return boost::multiprecision::pow(inst.q(), static_cast<unsigned>(inst.n * inst.n));
}

// Exhaustive count of A X A = X A X, for cross-checking either case.
inline BigInt brute_force_yang_baxter_count(const EquationInstance& inst, const ScanOptions& opt = {}) {
  const std::uint64_t total = search_space(inst, opt.budget, "brute-force Yang-Baxter scan");
  auto parts = detail::partitioned_scan(total, opt.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx)
      if (is_yang_baxter_solution(inst, Matrix::from_index(inst.field, inst.n, idx))) ++count;
    return count;
  });
  BigInt out = 0;
  for (auto c : parts) out += c;
  return out;
}

}  // namespace ffyb

#endif  // FFYB_SOLUTIONS_HPP
