#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "ffyb/ffyb.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ffyb;

// 3 means a computed result contradicted a cross-check.
enum Exit { kOk = 0, kInputError = 1, kRefused = 2, kCheckFailed = 3 };

struct RunConfig {
  std::uint32_t p = 2;
  int s = 1;
  std::size_t n = 2;
  std::string a = "1";
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 0;
  std::string output = "json";
  std::string method = "closed";
  std::string matrix;
  bool minimal_subsets = false;
  bool verify = false;
  std::string only;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FFYB_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("FFYB_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultEnumerationBudget;
}

std::string dec(const BigInt& v) { return v.str(); }

struct Context {
  FieldPtr field;
  EquationInstance inst;
  Json a_source;
};

Context make_context(const RunConfig& c) {
  FieldPtr f = make_field(c.p, c.s);
  Elem a = 0;
  Json src;
  if (c.a == "rand-nonzero") {
    if (f->order() < 2) throw InvalidArgument("no nonzero element");
    std::mt19937_64 rng(c.seed);
    a = static_cast<Elem>(1 + std::uniform_int_distribution<std::uint64_t>(0, f->order() - 2)(rng));
    src = Json{{"mode", "rand-nonzero"}, {"seed", c.seed}};
  } else {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(c.a, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != c.a.size()) throw InvalidArgument("--a must be an integer encoding or rand-nonzero");
    if (v >= f->order()) throw InvalidArgument("--a encoding " + c.a + " is not below q = " + std::to_string(f->order()));
    a = static_cast<Elem>(v);
    src = Json{{"mode", "encoding"}};
  }
  return {f, EquationInstance(f, c.n, a), src};
}

Json header(const std::string& command, const Context& ctx) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["field"] = Json{{"p", ctx.field->characteristic()},
                    {"s", ctx.field->degree()},
                    {"q", ctx.field->order()},
                    {"modulus", ctx.field->modulus()}};
  j["n"] = ctx.inst.n;
  j["a"] = ctx.inst.a;
  j["a_source"] = ctx.a_source;
  return j;
}

Json poly_json(const UniPoly& f) { return f.to_string(); }

Json orbit_json(const OrbitRecord& r) {
  return Json{{"label", r.label.to_string()},
              {"rank", r.rank},
              {"representative", r.representative.to_string()},
              {"stabilizer_order", dec(r.stabilizer_order)},
              {"orbit_size", dec(r.orbit_size)}};
}

Json per_orbit_json(const CountReport& r) {
  Json out = Json::array();
  for (const auto& [label, size] : r.per_orbit) out.push_back(Json{{"label", label.to_string()}, {"size", dec(size)}});
  return out;
}

// Flattens a JSON report into "key: value" lines.
void print_table(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_table(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const RunConfig& c, const Json& j) {
  if (c.output == "table")
    print_table(j, "", std::cout);
  else
    std::cout << j.dump(2) << '\n';
}

ScanOptions scan_options(const RunConfig& c, bool store) { return {c.budget, c.threads, store}; }

int cmd_count(const RunConfig& c) {
  const Context ctx = make_context(c);
  Json j = header("count", ctx);
  if (ctx.inst.a == 0) {
    // X^2 = 0X is not the equation of interest; report the vacuous A X A = X A X count
    j["yang_baxter"] = true;
    j["total"] = dec(yb_solution_count(ctx.inst));
    if (c.method != "closed") {
      const BigInt b = brute_force_yang_baxter_count(ctx.inst, scan_options(c, false));
      j["brute_force_total"] = dec(b);
      j["methods_agree"] = b == yb_solution_count(ctx.inst);
    }
    emit(c, j);
    return kOk;
  }
  std::optional<CountReport> closed, brute;
  if (c.method != "brute") closed = closed_form_count(ctx.inst);
  if (c.method != "closed") brute = brute_force_count(ctx.inst, scan_options(c, false));
  const CountReport& primary = closed ? *closed : *brute;
  j["method"] = c.method;
  j["total"] = dec(primary.total);
  j["per_orbit"] = per_orbit_json(primary);
  j["orbit_decomposition_holds"] = primary.satisfies_orbit_decomposition();
  if (closed && brute) {
    j["brute_force_total"] = dec(brute->total);
    j["methods_agree"] = closed->total == brute->total;
  }
  emit(c, j);
  return closed && brute && closed->total != brute->total ? kCheckFailed : kOk;
}

int cmd_enumerate(const RunConfig& c) {
  const Context ctx = make_context(c);
  ctx.inst.require_nonzero_a("enumerate");
  const std::uint64_t cap = std::min<std::uint64_t>(c.budget, kStoreLimit);
  search_space(ctx.inst, cap, "enumerate (solutions are stored)");
  BruteForceResult r = brute_force_solutions(ctx.inst, scan_options(c, true));
  Json j = header("enumerate", ctx);
  j["count"] = dec(r.count);
  Json sols = Json::array();
  for (const auto& x : r.solutions) sols.push_back(Json{{"matrix", x.to_string()}, {"label", classify(ctx.inst, x).to_string()}});
  j["solutions"] = sols;
  emit(c, j);
  return kOk;
}

Matrix matrix_arg(const RunConfig& c, const FieldPtr& f) {
  if (c.matrix.empty()) throw InvalidArgument("--matrix is required");
  return parse_matrix(f, c.matrix);
}

int cmd_classify(const RunConfig& c) {
  RunConfig rc = c;
  FieldPtr f = make_field(c.p, c.s);
  const Matrix x = matrix_arg(c, f);
  rc.n = x.rows();
  const Context ctx = make_context(rc);
  ctx.inst.require_nonzero_a("classify");
  Json j = header("classify", ctx);
  j["matrix"] = x.to_string();
  const OrbitLabel label = classify(ctx.inst, x);
  j["label"] = label.to_string();
  j["rank"] = rank(x);
  j["representative"] = representative(label, ctx.inst).to_string();
  j["stabilizer_order"] = dec(stabilizer_order(ctx.inst, label));
  j["orbit_size"] = dec(orbit_size(ctx.inst, label));
  emit(c, j);
  return kOk;
}

int cmd_orbits(const RunConfig& c) {
  const Context ctx = make_context(c);
  Json j = header("orbits", ctx);
  Json recs = Json::array();
  for (const auto& r : list_orbits(ctx.inst)) recs.push_back(orbit_json(r));
  j["orbits"] = recs;
  j["gl_order"] = dec(gl_order(ctx.inst.n, ctx.inst.q()));
  emit(c, j);
  return kOk;
}

int cmd_smith(const RunConfig& c) {
  FieldPtr f = make_field(c.p, c.s);
  const Matrix x = matrix_arg(c, f);
  if (x.rows() != x.cols()) throw InvalidArgument("--matrix must be square");
  Json j;
  j["schema"] = 1;
  j["command"] = "smith";
  j["field"] = Json{{"p", f->characteristic()}, {"s", f->degree()}, {"q", f->order()}, {"modulus", f->modulus()}};
  j["matrix"] = x.to_string();
  j["charpoly"] = poly_json(charpoly(x));
  Json inv = Json::array();
  for (const auto& h : invariant_factors(x).nontrivial()) inv.push_back(poly_json(h));
  j["invariant_factors"] = inv;
  Json ed = Json::array();
  for (const auto& d : elementary_divisors(x).divisors)
    ed.push_back(Json{{"prime", poly_json(d.prime)}, {"exponent", d.exponent}});
  j["elementary_divisors"] = ed;
  j["rational_canonical_form"] = rational_canonical_form(x).to_string();
  emit(c, j);
  return kOk;
}

int cmd_invariants(const RunConfig& c) {
  const Context ctx = make_context(c);
  ctx.inst.require_nonzero_a("invariants");
  Json j = header("invariants", ctx);
  Json pts = Json::array();
  for (const auto& v : image_points(ctx.inst)) pts.push_back(Json{{"rank", v.index}, {"xi", v.values()}});
  j["image_points"] = pts;
  const SeparationReport rep = separation_report(ctx.inst, c.minimal_subsets);
  j["full_set_separates"] = rep.full_set_separates;
  j["xi1_separates"] = rep.xi1_alone_separates;
  if (c.minimal_subsets) j["minimal_separating_subsets"] = rep.minimal_separating_subsets;
  emit(c, j);
  return kOk;
}

int cmd_ideal(const RunConfig& c) {
  const Context ctx = make_context(c);
  ctx.inst.require_nonzero_a("ideal");
  const GeneratorSet g = build_Bn(ctx.inst);
  Json j = header("ideal", ctx);
  Json gens = Json::array();
  for (const auto& m : g.generators) gens.push_back(m.to_string());
  j["generators"] = gens;
  if (c.verify) {
    const VarietyCheck r = verify_variety_equality(ctx.inst, ctx.inst.n, c.budget, c.threads);
    j["variety"] = r.variety_points;
    j["image"] = r.image_points;
    j["verdict"] = r.equal;
  }
  emit(c, j);
  return c.verify && !j["verdict"].get<bool>() ? kCheckFailed : kOk;
}

int cmd_verify_all(const RunConfig& c) {
  VerifyConfig vc;
  vc.budget = c.budget;
  vc.threads = c.threads;
  vc.only = c.only;
  bool failed = false;
  Json checks = Json::array();
  for (const auto& r : run_verify_all(vc)) {
    failed = failed || r.status == CheckStatus::Fail;
    if (c.output == "table") std::cout << to_string(r.status) << ' ' << r.name << ": " << r.detail << '\n';
    checks.push_back(Json{{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
  }
  if (c.output != "table") {
    Json j;
    j["schema"] = 1;
    j["command"] = "verify-all";
    j["checks"] = checks;
    j["passed"] = !failed;
    std::cout << j.dump(2) << '\n';
  }
  return failed ? kCheckFailed : kOk;
}

void add_common(CLI::App* sub, RunConfig& c, bool needs_n) {
  sub->add_option("--p", c.p, "field characteristic")->required();
  sub->add_option("--s", c.s, "extension degree")->capture_default_str();
  if (needs_n) sub->add_option("--n", c.n, "matrix size")->required();
  sub->add_option("--a", c.a, "nonzero scalar as an integer encoding, or rand-nonzero")->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for --a rand-nonzero")->capture_default_str();
}

void add_run(CLI::App* sub, RunConfig& c) {
  sub->add_option("--budget", c.budget, "maximum enumeration size (default $FFYB_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", c.threads, "worker count, 0 = hardware concurrency")->capture_default_str();
  sub->add_option("--output", c.output, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  try {
    c.budget = default_budget();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  CLI::App app{"Solutions of X^2 = aX over finite fields: counts, orbits, invariants and the defining ideal"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "count solutions");
  add_common(count, c, true);
  add_run(count, c);
  count->add_option("--method", c.method, "closed, brute or both")
      ->check(CLI::IsMember({"closed", "brute", "both"}))
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "list every solution with its orbit");
  add_common(enumerate, c, true);
  add_run(enumerate, c);

  auto* cls = app.add_subcommand("classify", "orbit of a given solution");
  add_common(cls, c, false);
  add_run(cls, c);
  cls->add_option("--matrix", c.matrix, "rows separated by ';', entries by ','")->required();

  auto* orbits = app.add_subcommand("orbits", "orbit representatives, stabilizers and sizes");
  add_common(orbits, c, true);
  add_run(orbits, c);

  auto* smith = app.add_subcommand("smith", "invariant factors and elementary divisors of a matrix");
  smith->add_option("--p", c.p, "field characteristic")->required();
  smith->add_option("--s", c.s, "extension degree")->capture_default_str();
  smith->add_option("--matrix", c.matrix, "rows separated by ';', entries by ','")->required();
  add_run(smith, c);

  auto* inv = app.add_subcommand("invariants", "image points of the charpoly coefficients");
  add_common(inv, c, true);
  add_run(inv, c);
  inv->add_flag("--minimal-subsets", c.minimal_subsets, "list the minimal separating index sets");

  auto* ideal = app.add_subcommand("ideal", "generators of the defining ideal");
  add_common(ideal, c, true);
  add_run(ideal, c);
  ideal->add_flag("--verify", c.verify, "compare the variety with the image points");

  auto* all = app.add_subcommand("verify-all", "run every cross-check over the default ranges");
  add_run(all, c);
  all->add_option("--only", c.only, "run a single check")->check(CLI::IsMember(verify_check_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*count) return cmd_count(c);
    if (*enumerate) return cmd_enumerate(c);
    if (*cls) return cmd_classify(c);
    if (*orbits) return cmd_orbits(c);
    if (*smith) return cmd_smith(c);
    if (*inv) return cmd_invariants(c);
    if (*ideal) return cmd_ideal(c);
    if (*all) return cmd_verify_all(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
