#ifndef FFYB_DETAIL_RAWPOLY_HPP
#define FFYB_DETAIL_RAWPOLY_HPP

// Dense univariate polynomials over a finite coefficient ring whose elements
// are integer encodings. The ring type supplies add/sub/mul/neg/inv and
// order(). Used both to search for field moduli (over F_p) and to factor
// invariant factors (over F_q).

#include <cstdint>
#include <functional>
#include <vector>

#include "ffyb/error.hpp"

namespace ffyb::detail {

// Little-endian coefficient encodings; no trailing zeros; empty means zero.
using RawPoly = std::vector<std::uint32_t>;

inline void trim(RawPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const RawPoly& f) { return static_cast<int>(f.size()) - 1; }

template <class Ring>
RawPoly poly_add(const Ring& r, const RawPoly& f, const RawPoly& g) {
  RawPoly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < f.size() ? f[i] : 0;
    std::uint32_t y = i < g.size() ? g[i] : 0;
    out[i] = r.add(x, y);
  }
  trim(out);
  return out;
}

template <class Ring>
RawPoly poly_sub(const Ring& r, const RawPoly& f, const RawPoly& g) {
  RawPoly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < f.size() ? f[i] : 0;
    std::uint32_t y = i < g.size() ? g[i] : 0;
    out[i] = r.sub(x, y);
  }
  trim(out);
  return out;
}

template <class Ring>
RawPoly poly_mul(const Ring& r, const RawPoly& f, const RawPoly& g) {
  if (f.empty() || g.empty()) return {};
  RawPoly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
  }
  trim(out);
  return out;
}

template <class Ring>
RawPoly poly_scale(const Ring& r, const RawPoly& f, std::uint32_t c) {
  RawPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = r.mul(f[i], c);
  trim(out);
  return out;
}

// Long division; g must be nonzero.
template <class Ring>
void poly_divmod(const Ring& r, const RawPoly& f, const RawPoly& g, RawPoly& quo, RawPoly& rem) {
  if (g.empty()) throw DivisionByZero("polynomial division by zero");
  rem = f;
  quo.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  const std::uint32_t lead_inv = r.inv(g.back());
  while (!rem.empty() && rem.size() >= g.size()) {
    const std::size_t shift = rem.size() - g.size();
    const std::uint32_t c = r.mul(rem.back(), lead_inv);
    quo[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j)
      rem[shift + j] = r.sub(rem[shift + j], r.mul(c, g[j]));
    trim(rem);
  }
  trim(quo);
}

template <class Ring>
RawPoly poly_rem(const Ring& r, const RawPoly& f, const RawPoly& g) {
  RawPoly q, m;
  poly_divmod(r, f, g, q, m);
  return m;
}

template <class Ring>
RawPoly make_monic(const Ring& r, const RawPoly& f) {
  if (f.empty()) return f;
  return poly_scale(r, f, r.inv(f.back()));
}

// Monic gcd; gcd(0, 0) = 0.
template <class Ring>
RawPoly poly_gcd(const Ring& r, RawPoly f, RawPoly g) {
  while (!g.empty()) {
    RawPoly m = poly_rem(r, f, g);
    f = std::move(g);
    g = std::move(m);
  }
  return make_monic(r, f);
}

// Visits every monic polynomial of the given degree over a ring of order q,
// ordered lexicographically by the coefficient tuple (a_0, a_1, ..., a_{d-1})
// with a_0 most significant. The visitor returns true to stop early.
template <class Fn>
void for_each_monic(std::uint64_t q, int deg, Fn&& visit) {
  RawPoly f(static_cast<std::size_t>(deg) + 1, 0);
  f[deg] = 1;
  // odometer with a_{d-1} as the fastest digit
  while (true) {
    RawPoly g = f;
    trim(g);
    if (visit(static_cast<const RawPoly&>(g))) return;
    int i = deg - 1;
    while (i >= 0) {
      if (++f[i] < q) break;
      f[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg(f)/2.
template <class Ring>
bool is_irreducible(const Ring& r, const RawPoly& f) {
  const int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  bool irreducible = true;
  for (int e = 1; e <= d / 2 && irreducible; ++e) {
    for_each_monic(r.order(), e, [&](const RawPoly& g) {
      if (poly_rem(r, f, g).empty()) {
        irreducible = false;
        return true;
      }
      return false;
    });
  }
  return irreducible;
}

// Lexicographically smallest monic irreducible of the given degree.
template <class Ring>
RawPoly smallest_irreducible(const Ring& r, int deg) {
  RawPoly found;
  for_each_monic(r.order(), deg, [&](const RawPoly& f) {
    if (is_irreducible(r, f)) {
      found = f;
      return true;
    }
    return false;
  });
  if (found.empty()) throw_internal("no monic irreducible of degree " + std::to_string(deg));
  return found;
}

}  // namespace ffyb::detail

#endif  // FFYB_DETAIL_RAWPOLY_HPP
