#ifndef FFYB_INVARIANTS_HPP
#define FFYB_INVARIANTS_HPP

// The characteristic-coefficient map xi = (xi_1, ..., xi_n) on the orbits of
// X^2 = aX, its n+1 image points and separation by coordinate subsets.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ffyb/orbits.hpp"

namespace ffyb {

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

struct ImagePoint {
  std::size_t index;  // j: the rank of the orbit
  std::vector<FieldElement> coords;

  std::vector<Elem> values() const {
    std::vector<Elem> v;
    for (const auto& c : coords) v.push_back(c.value());
    return v;
  }
  bool operator==(const ImagePoint& o) const { return index == o.index && coords == o.coords; }
};

// v_j: coordinate i is C(j,i) a^i for i <= j and 0 beyond.
inline ImagePoint image_point(const EquationInstance& inst, std::size_t j) {
  if (j > inst.n) throw InvalidArgument("image point index exceeds n");
  ImagePoint v{j, {}};
  const FieldElement a = inst.scalar();
  for (std::size_t i = 1; i <= inst.n; ++i) {
    if (i > j) {
      v.coords.push_back(FieldElement::zero(inst.field));
      continue;
    }
    v.coords.push_back(int_to_field(inst.field, binomial(j, i)) * a.pow(i));
  }
  return v;
}

inline XiVector xi_of_orbit(const EquationInstance& inst, const OrbitLabel& label) {
  inst.require_nonzero_a("xi_of_orbit");
  const Matrix rep = representative(label, inst);
  XiVector xi = charpoly_xi(rep);
  if (xi.components != image_point(inst, rank(rep)).coords)
    detail::throw_internal("xi of " + label.to_string() + " differs from its image point");
  return xi;
}

// v_0..v_n; throws InternalError if two coincide.
inline std::vector<ImagePoint> image_points(const EquationInstance& inst) {
  inst.require_nonzero_a("image_points");
  std::vector<ImagePoint> out;
  std::set<std::vector<Elem>> seen;
  for (std::size_t j = 0; j <= inst.n; ++j) {
    out.push_back(image_point(inst, j));
    if (!seen.insert(out.back().values()).second) detail::throw_internal("image points v_j are not distinct");
  }
  return out;
}

// Coordinate indices are 1-based, matching xi_1..xi_n.
inline bool subset_separates(const EquationInstance& inst, const std::vector<std::size_t>& subset) {
  inst.require_nonzero_a("subset_separates");
  if (subset.empty()) throw InvalidArgument("separating subset must be nonempty");
  for (std::size_t i : subset)
    if (i < 1 || i > inst.n) throw InvalidArgument("coordinate index " + std::to_string(i) + " outside 1..n");
  std::set<std::vector<Elem>> seen;
  for (const auto& v : image_points(inst)) {
    std::vector<Elem> proj;
    for (std::size_t i : subset) proj.push_back(v.coords[i - 1].value());
    if (!seen.insert(std::move(proj)).second) return false;
  }
  return true;
}

inline std::vector<std::size_t> full_index_set(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

// xi_1 takes the values k*a, 0 <= k <= n, on the orbits.
inline bool xi1_separates(const EquationInstance& inst) {
  inst.require_nonzero_a("xi1_separates");
  std::set<Elem> values;
  for (std::size_t k = 0; k <= inst.n; ++k) values.insert(inst.field->mul(inst.field->from_integer(k), inst.a));
  const bool separates = values.size() == inst.n + 1;
  if (inst.field->characteristic() > inst.n && !separates) detail::throw_internal("xi_1 fails to separate with p > n");
  return separates;
}

inline constexpr std::size_t kMaxSubsetSweep = 20;

// Inclusion-minimal separating subsets, ordered by size then lexicographically.
inline std::vector<std::vector<std::size_t>> minimal_separating_subsets(const EquationInstance& inst) {
  inst.require_nonzero_a("minimal_separating_subsets");
  const std::size_t n = inst.n;
  if (n > kMaxSubsetSweep)
    throw BudgetExceeded("minimal separating subset sweep", BigInt(1) << n, BigInt(1) << kMaxSubsetSweep);
  const auto points = image_points(inst);
  auto separates = [&](std::uint32_t mask) {
    std::set<std::vector<Elem>> seen;
    for (const auto& v : points) {
      std::vector<Elem> proj;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) proj.push_back(v.coords[i].value());
      if (!seen.insert(std::move(proj)).second) return false;
    }
    return true;
  };
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!separates(mask)) continue;
    // separation is monotone, so dropping any one index must break it
    bool is_min = true;
    for (std::size_t i = 0; i < n && is_min; ++i)
      if ((mask >> i & 1) && (mask & ~(std::uint32_t{1} << i)) != 0 && separates(mask & ~(std::uint32_t{1} << i)))
        is_min = false;
    if (is_min) minimal.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask : minimal) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

struct SeparationReport {
  bool full_set_separates;
  bool xi1_alone_separates;
  std::vector<std::vector<std::size_t>> minimal_separating_subsets;
};

inline SeparationReport separation_report(const EquationInstance& inst, bool with_minimal_subsets) {
  SeparationReport rep{subset_separates(inst, full_index_set(inst.n)), xi1_separates(inst), {}};
  if (!rep.full_set_separates) detail::throw_internal("xi_1..xi_n fail to separate the orbits");
  if (with_minimal_subsets) rep.minimal_separating_subsets = minimal_separating_subsets(inst);
  return rep;
}

}  // namespace ffyb

#endif  // FFYB_INVARIANTS_HPP
