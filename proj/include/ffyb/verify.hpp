#ifndef FFYB_VERIFY_HPP
#define FFYB_VERIFY_HPP

// Batch cross-checks over ranges of (p, s, n), reported one line per check.

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ffyb/ideal.hpp"
#include "ffyb/oracles.hpp"
#include "ffyb/polyfq.hpp"

namespace ffyb {

struct VerifyConfig {
  // fields (p, s) to sweep
  std::vector<std::pair<std::uint32_t, int>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  std::size_t brute_max_n = 4;
  std::uint64_t brute_max_space = 65'536;  // q^(n^2) cap for exhaustive scans
  std::uint64_t class_max_space = 6'561;   // cap for the conjugacy/centralizer oracles
  std::size_t formula_max_n = 8;
  std::size_t divisor_max_n = 6;
  std::size_t ideal_max_n = 6;
  std::uint64_t ideal_max_space = 1'000'000;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
  std::string only;  // run a single named check when nonempty
};

enum class CheckStatus { Pass, Fail, Warn };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Warn: return "WARN";
  }
  return "?";
}

inline const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"count", "census", "stabilizers", "lemma34",
                                              "companion", "separation", "ideal", "scaling"};
  return names;
}

namespace detail {

inline std::uint64_t space_of(std::uint64_t q, std::size_t n) {
  BigInt s = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n * n));
  return s > BigInt(std::numeric_limits<std::uint64_t>::max()) ? std::numeric_limits<std::uint64_t>::max()
                                                                : static_cast<std::uint64_t>(s);
}

// Case and failure counts for one check; keeps the first failing case.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  CheckResult result(const std::string& name) const {
    std::ostringstream os;
    os << cases << " cases";
    if (failures) os << ", " << failures << " failed (first: " << first_failure << ")";
    return {name, failures || cases == 0 ? CheckStatus::Fail : CheckStatus::Pass, os.str()};
  }
};

inline std::string case_name(const EquationInstance& inst) {
  return "q=" + std::to_string(inst.field->order()) + " n=" + std::to_string(inst.n) + " a=" + std::to_string(inst.a);
}

}  // namespace detail

inline CheckResult check_count(const VerifyConfig& cfg) {
  detail::Tally t;
  ScanOptions opt{cfg.budget, cfg.threads, false};
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= cfg.formula_max_n; ++n) {
      const bool brute = n <= cfg.brute_max_n && detail::space_of(f->order(), n) <= cfg.brute_max_space;
      BigInt first_brute = -1;
      for (Elem a = 1; a < f->order(); ++a) {
        EquationInstance inst(f, n, a);
        const CountReport closed = closed_form_count(inst);
        bool ok = closed.total == orbit_sum_count(inst).total && closed.satisfies_orbit_decomposition();
        if (brute) {
          const BigInt b = brute_force_count(inst, opt).total;
          ok = ok && b == closed.total;
          if (first_brute < 0) first_brute = b;
          ok = ok && b == first_brute;
        }
        t.record(ok, detail::case_name(inst));
      }
    }
  }
  return t.result("count");
}

inline CheckResult check_census(const VerifyConfig& cfg) {
  detail::Tally t;
  ScanOptions opt{cfg.budget, cfg.threads, true};
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= cfg.brute_max_n; ++n) {
      if (detail::space_of(f->order(), n) > cfg.class_max_space) continue;
      for (Elem a = 1; a < f->order(); ++a) {
        EquationInstance inst(f, n, a);
        auto classes = brute_force_conjugacy_classes(inst, opt);
        bool ok = classes.size() == n + 1;
        BigInt sum = 0;
        for (const auto& c : classes) {
          ok = ok && BigInt(c.size()) == orbit_size(inst, c.label);
          sum += c.size();
        }
        ok = ok && sum == closed_form_count(inst).total;
        t.record(ok, detail::case_name(inst));
      }
    }
  }
  return t.result("census");
}

inline CheckResult check_stabilizers(const VerifyConfig& cfg) {
  detail::Tally t;
  ScanOptions opt{cfg.budget, cfg.threads, false};
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= cfg.brute_max_n; ++n) {
      if (detail::space_of(f->order(), n) > cfg.class_max_space) continue;
      for (Elem a = 1; a < f->order(); ++a) {
        EquationInstance inst(f, n, a);
        for (const auto& rec : list_orbits(inst))
          t.record(brute_force_centralizer_order(inst, rec.representative, opt) == rec.stabilizer_order,
                   detail::case_name(inst) + " " + rec.label.to_string());
      }
    }
  }
  return t.result("stabilizers");
}

inline CheckResult check_elementary_divisors(const VerifyConfig& cfg) {
  detail::Tally t;
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    for (std::size_t n = 2; n <= cfg.divisor_max_n; ++n)
      for (Elem a = 1; a < f->order(); ++a) {
        EquationInstance inst(f, n, a);
        for (std::size_t k = 1; k <= n / 2; ++k)
          for (auto b : {OrbitLabel::Block::Zero, OrbitLabel::Block::A}) {
            Matrix rep = Matrix::scalar(f, n - 2 * k, b == OrbitLabel::Block::Zero ? 0 : a);
            for (std::size_t i = 0; i < k; ++i) rep = direct_sum(rep, q_block(f, a));
            const std::size_t lam = b == OrbitLabel::Block::Zero ? n - k : k;
            std::vector<PrimePower> want;
            for (std::size_t i = 0; i < lam; ++i) want.push_back({UniPoly::x(f), 1});
            for (std::size_t i = lam; i < n; ++i) want.push_back({UniPoly::linear(f, a), 1});
            std::sort(want.begin(), want.end());
            t.record(elementary_divisors(rep).divisors == want, detail::case_name(inst) + " k=" + std::to_string(k));
          }
      }
  }
  return t.result("lemma34");
}

inline CheckResult check_companions(const VerifyConfig& cfg) {
  detail::Tally t;
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    if (f->order() > 5) continue;
    for (Elem a = 1; a < f->order(); ++a)
      detail::for_each_monic(f->order(), 3, [&](const detail::RawPoly& g) {
        t.record(companion_square_differs(UniPoly(f, g), FieldElement(f, a)), "q=" + std::to_string(f->order()));
        return false;
      });
  }
  return t.result("companion");
}

inline CheckResult check_separation(const VerifyConfig& cfg) {
  detail::Tally t;
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= cfg.formula_max_n; ++n)
      for (Elem a = 1; a < f->order(); ++a) {
        EquationInstance inst(f, n, a);
        bool ok = image_points(inst).size() == n + 1 && subset_separates(inst, full_index_set(n));
        if (p > n) ok = ok && xi1_separates(inst);
        for (const auto& l : orbit_labels(n)) ok = ok && xi_of_orbit(inst, l).components == image_point(inst, orbit_rank(l, n)).coords;
        t.record(ok, detail::case_name(inst));
      }
  }
  return t.result("separation");
}

inline CheckResult check_ideal(const VerifyConfig& cfg) {
  detail::Tally t;
  for (auto [p, s] : cfg.fields) {
    auto f = make_field(p, s);
    for (std::size_t n = 2; n <= cfg.ideal_max_n; ++n) {
      BigInt space = boost::multiprecision::pow(f->order_big(), static_cast<unsigned>(n));
      if (space > cfg.ideal_max_space) continue;
      for (Elem a = 1; a < f->order(); ++a) {
        EquationInstance inst(f, n, a);
        auto r = verify_variety_equality(inst, n, cfg.ideal_max_space, cfg.threads);
        t.record(r.equal && r.variety_size == n + 1, detail::case_name(inst));
      }
    }
  }
  return t.result("ideal");
}

// Wall time of the n=4, q=2 scan at the configured thread count versus one
// thread. Advisory only: reported as WARN, never FAIL.
inline CheckResult check_scaling(const VerifyConfig& cfg) {
  auto f = make_field(2, 1);
  EquationInstance inst(f, 4, 1);
  auto time_it = [&](unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    brute_force_count(inst, {cfg.budget, threads, false});
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  const unsigned threads = detail::resolve_threads(cfg.threads);
  const double single = time_it(1), multi = time_it(threads);
  std::ostringstream os;
  os << "threads=" << threads << " t1=" << single << "s tN=" << multi << "s";
  if (threads <= 1) return {"scaling", CheckStatus::Warn, os.str() + " (single worker, nothing to compare)"};
  return {"scaling", multi * 2 <= single ? CheckStatus::Pass : CheckStatus::Warn, os.str()};
}

inline std::vector<CheckResult> run_verify_all(const VerifyConfig& cfg) {
  const std::vector<std::pair<std::string, std::function<CheckResult(const VerifyConfig&)>>> checks{
      {"count", check_count},
      {"census", check_census},
      {"stabilizers", check_stabilizers},
      {"lemma34", check_elementary_divisors},
      {"companion", check_companions},
      {"separation", check_separation},
      {"ideal", check_ideal},
      {"scaling", check_scaling}};
  if (!cfg.only.empty() &&
      std::find(verify_check_names().begin(), verify_check_names().end(), cfg.only) == verify_check_names().end())
    throw InvalidArgument("unknown check '" + cfg.only + "'");
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks)
    if (cfg.only.empty() || cfg.only == name) out.push_back(fn(cfg));
  return out;
}

}  // namespace ffyb

#endif  // FFYB_VERIFY_HPP
