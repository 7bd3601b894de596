#ifndef FFYB_IDEAL_HPP
#define FFYB_IDEAL_HPP

// The quadratic generators B_n whose common zeros in F_q^n are exactly the
// image points v_0..v_n, plus exhaustive and pruned variety searches to
// check that.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ffyb/detail/scan.hpp"
#include "ffyb/invariants.hpp"

namespace ffyb {

using Exponent = std::vector<unsigned>;

// Graded lexicographic with x_1 > x_2 > ... > x_n; larger monomials first.
struct GradedLexGreater {
  bool operator()(const Exponent& x, const Exponent& y) const {
    unsigned dx = 0, dy = 0;
    for (unsigned e : x) dx += e;
    for (unsigned e : y) dy += e;
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

// Sparse polynomial in x_1..x_n over F_q; zero coefficients are never stored.
class MultiPoly {
public:
  using Terms = std::map<Exponent, Elem, GradedLexGreater>;

  MultiPoly(FieldPtr field, std::size_t n_vars) : field_(std::move(field)), n_vars_(n_vars) {}

  // c * x_1^e_1 ... x_n^e_n
  static MultiPoly monomial(const FieldPtr& f, Exponent e, Elem c) {
    MultiPoly p(f, e.size());
    p.add_term(std::move(e), c);
    return p;
  }
  // c * x_i (1-based)
  static MultiPoly variable(const FieldPtr& f, std::size_t n_vars, std::size_t i, Elem c = 1) {
    Exponent e(n_vars, 0);
    e.at(i - 1) = 1;
    return monomial(f, std::move(e), c);
  }
  // c * x_i * x_j
  static MultiPoly product(const FieldPtr& f, std::size_t n_vars, std::size_t i, std::size_t j, Elem c = 1) {
    Exponent e(n_vars, 0);
    e.at(i - 1) += 1;
    e.at(j - 1) += 1;
    return monomial(f, std::move(e), c);
  }

  const FieldPtr& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (unsigned x : e) s += static_cast<int>(x);
      d = std::max(d, s);
    }
    return d;
  }

  bool involves(std::size_t i) const {
    for (const auto& [e, c] : terms_)
      if (e.at(i - 1) != 0) return true;
    return false;
  }

  void add_term(Exponent e, Elem c) {
    if (e.size() != n_vars_) throw InvalidArgument("exponent vector length mismatch");
    Elem& slot = terms_[e];
    slot = field_->add(slot, c);
    if (slot == 0) terms_.erase(e);
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    check(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, field_->neg(c));
    return out;
  }
  MultiPoly scaled(Elem c) const {
    MultiPoly out(field_, n_vars_);
    for (const auto& [e, x] : terms_) out.add_term(e, field_->mul(c, x));
    return out;
  }

  // Same polynomial viewed in more variables.
  MultiPoly lifted(std::size_t n_vars) const {
    if (n_vars < n_vars_) throw InvalidArgument("cannot lift to fewer variables");
    MultiPoly out(field_, n_vars);
    for (const auto& [e, c] : terms_) {
      Exponent wide = e;
      wide.resize(n_vars, 0);
      out.add_term(std::move(wide), c);
    }
    return out;
  }

  Elem eval(const std::vector<Elem>& point) const {
    if (point.size() != n_vars_) throw InvalidArgument("evaluation point has wrong length");
    Elem acc = 0;
    for (const auto& [e, c] : terms_) {
      Elem t = c;
      for (std::size_t i = 0; i < n_vars_ && t != 0; ++i)
        if (e[i]) t = field_->mul(t, field_->pow(point[i], e[i]));
      acc = field_->add(acc, t);
    }
    return acc;
  }

  bool operator==(const MultiPoly& o) const {
    return same_field(field_, o.field_) && n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // e.g. "x1^2+4*x1+3*x2" with integer-encoded coefficients.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += '+';
      std::string mono;
      for (std::size_t i = 0; i < n_vars_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += '*';
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) out += std::to_string(c);
      else if (c == 1) out += mono;
      else out += std::to_string(c) + "*" + mono;
    }
    return out;
  }

private:
  void check(const MultiPoly& o) const {
    if (!same_field(field_, o.field_) || n_vars_ != o.n_vars_)
      throw InvalidArgument("multivariate polynomials over different rings");
  }

  FieldPtr field_;
  std::size_t n_vars_;
  Terms terms_;
};

inline Elem poly_eval(const MultiPoly& f, const std::vector<Elem>& v) { return f.eval(v); }

struct GeneratorSet {
  std::size_t n;
  Elem a;
  std::vector<MultiPoly> generators;
  // corrections[k] lists f(w_m)/a^m for each f in B_{m-1}, m = k + 3.
  std::vector<std::vector<Elem>> corrections;
};

namespace detail {

inline void check_generators(const GeneratorSet& g) {
  if (BigInt(g.generators.size()) != binomial(g.n + 1, 2)) throw_internal("|B_n| != C(n+1,2)");
  for (const auto& f : g.generators)
    if (f.total_degree() > 2) throw_internal("generator of degree > 2: " + f.to_string());
}

}  // namespace detail

// B_2 = {x2^2 - a^2 x2, x2 x1 - 2a x2, x1^2 - a x1 - 2 x2}
inline GeneratorSet build_B2(const FieldPtr& f, Elem a) {
  if (a == 0) throw InvalidArgument("B_2 requires a != 0");
  const Field& F = *f;
  const Elem two = F.from_integer(2);
  GeneratorSet g{2, a, {}, {}};
  g.generators.push_back(MultiPoly::product(f, 2, 2, 2) - MultiPoly::variable(f, 2, 2, F.mul(a, a)));
  g.generators.push_back(MultiPoly::product(f, 2, 2, 1) - MultiPoly::variable(f, 2, 2, F.mul(two, a)));
  g.generators.push_back(MultiPoly::product(f, 2, 1, 1) - MultiPoly::variable(f, 2, 1, a) -
                         MultiPoly::variable(f, 2, 2, two));
  detail::check_generators(g);
  return g;
}

inline GeneratorSet build_B2(const EquationInstance& inst) {
  if (inst.n != 2) throw InvalidArgument("build_B2 needs n = 2");
  return build_B2(inst.field, inst.a);
}

// B_m = {f - f(w_m)/a^m x_m : f in B_{m-1}} u {x_m x_i - C(m,i) a^i x_m : i = m..1}
// with w_m = (C(m,1) a, ..., C(m,m-1) a^(m-1)); all arithmetic in F_q.
inline GeneratorSet build_Bn(const FieldPtr& f, Elem a, std::size_t n) {
  if (n < 2) throw InvalidArgument("B_n is defined for n >= 2");
  GeneratorSet g = build_B2(f, a);
  const Field& F = *f;
  for (std::size_t m = 3; m <= n; ++m) {
    std::vector<Elem> w(m - 1);
    for (std::size_t i = 1; i < m; ++i) w[i - 1] = F.mul(F.from_integer(binomial(m, i)), F.pow(a, i));
    const Elem am_inv = F.inv(F.pow(a, m));
    GeneratorSet next{m, a, {}, g.corrections};
    std::vector<Elem> corr;
    for (const auto& prev : g.generators) {
      const Elem c = F.mul(prev.eval(w), am_inv);
      corr.push_back(c);
      next.generators.push_back(prev.lifted(m) - MultiPoly::variable(f, m, m, c));
    }
    next.corrections.push_back(std::move(corr));
    for (std::size_t i = m; i >= 1; --i) {
      const Elem c = F.mul(F.from_integer(binomial(m, i)), F.pow(a, i));
      next.generators.push_back(MultiPoly::product(f, m, m, i) - MultiPoly::variable(f, m, m, c));
    }
    detail::check_generators(next);
    g = std::move(next);
  }
  return g;
}

inline GeneratorSet build_Bn(const EquationInstance& inst, std::size_t n) {
  inst.require_nonzero_a("build_Bn");
  return build_Bn(inst.field, inst.a, n);
}

inline GeneratorSet build_Bn(const EquationInstance& inst) { return build_Bn(inst, inst.n); }

inline constexpr std::uint64_t kDefaultVarietyBudget = 10'000'000;

// Common zeros of the generators in F_q^n, ordered by point encoding
// (coordinate 1 least significant).
inline std::vector<std::vector<Elem>> variety(const GeneratorSet& gens, std::uint64_t budget = kDefaultVarietyBudget,
                                              unsigned threads = 1) {
  if (gens.generators.empty()) throw InvalidArgument("empty generator set");
  const FieldPtr& f = gens.generators.front().field();
  const std::uint64_t q = f->order();
  const BigInt space = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(gens.n));
  if (space > budget) throw BudgetExceeded("variety scan", space, budget);
  const std::uint64_t total = static_cast<std::uint64_t>(space);
  auto parts = detail::partitioned_scan(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::vector<Elem>> found;
    std::vector<Elem> pt(gens.n);
    detail::decode_index(begin, q, pt);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool zero = true;
      for (const auto& g : gens.generators)
        if (g.eval(pt) != 0) {
          zero = false;
          break;
        }
      if (zero) found.push_back(pt);
      detail::increment(pt, q);
    }
    return found;
  });
  std::vector<std::vector<Elem>> out;
  for (auto& part : parts)
    for (auto& p : part) out.push_back(std::move(p));
  return out;
}

// Same point set as variety(), found by assigning x_n, x_{n-1}, ..., x_1 in
// turn and pruning as soon as a generator in the assigned variables fails.
// Cost grows with q * (number of surviving partial points), not q^n.
inline std::vector<std::vector<Elem>> variety_search(const GeneratorSet& gens) {
  if (gens.generators.empty()) throw InvalidArgument("empty generator set");
  const FieldPtr& f = gens.generators.front().field();
  const std::size_t n = gens.n;
  const Elem q = f->order();
  // each generator flattened to (coefficient, [(variable, power)...]) terms
  struct Term {
    Elem coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  using Flat = std::vector<Term>;
  // at_level[i]: generators whose lowest variable is x_{i+1}
  std::vector<std::vector<Flat>> at_level(n);
  for (const auto& g : gens.generators) {
    std::size_t low = n;
    Flat flat;
    for (const auto& [e, c] : g.terms()) {
      Term t{c, {}};
      for (std::size_t i = 0; i < n; ++i)
        if (e[i]) {
          low = std::min(low, i);
          t.powers.emplace_back(i, e[i]);
        }
      flat.push_back(std::move(t));
    }
    if (low == n) {
      if (!g.is_zero()) return {};
      continue;
    }
    at_level[low].push_back(std::move(flat));
  }
  const Field& F = *f;
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> pt(n, 0);
  auto vanishes = [&](const Flat& g) {
    Elem acc = 0;
    for (const auto& t : g) {
      Elem v = t.coeff;
      for (auto [i, e] : t.powers) v = F.mul(v, e == 1 ? pt[i] : F.pow(pt[i], e));
      acc = F.add(acc, v);
    }
    return acc == 0;
  };
  auto descend = [&](auto&& self, std::size_t level) -> void {
    for (Elem v = 0; v < q; ++v) {
      pt[level] = v;
      bool ok = true;
      for (const Flat& g : at_level[level])
        if (!vanishes(g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (level == 0)
        out.push_back(pt);
      else
        self(self, level - 1);
    }
    pt[level] = 0;
  };
  descend(descend, n - 1);
  std::sort(out.begin(), out.end(), [](const std::vector<Elem>& x, const std::vector<Elem>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

struct VarietyCheck {
  bool equal;
  std::size_t variety_size;
  std::size_t image_size;
  std::vector<std::vector<Elem>> variety_points;
  std::vector<std::vector<Elem>> image_points;
};

// V(B_n) == {v_0, ..., v_n} over F_q^n.
inline VarietyCheck verify_variety_equality(const EquationInstance& inst, std::size_t n,
                                            std::uint64_t budget = kDefaultVarietyBudget, unsigned threads = 1) {
  const GeneratorSet gens = build_Bn(inst, n);
  VarietyCheck out;
  out.variety_points = variety(gens, budget, threads);
  const EquationInstance sub(inst.field, n, inst.a);
  for (const auto& v : image_points(sub)) out.image_points.push_back(v.values());
  out.variety_size = out.variety_points.size();
  out.image_size = out.image_points.size();
  const std::set<std::vector<Elem>> lhs(out.variety_points.begin(), out.variety_points.end());
  const std::set<std::vector<Elem>> rhs(out.image_points.begin(), out.image_points.end());
  out.equal = lhs == rhs;
  return out;
}

}  // namespace ffyb

#endif  // FFYB_IDEAL_HPP
