#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "mm/io.hpp"
#include "mm/minrep.hpp"
#include "mm/verify.hpp"

using namespace mm;

namespace {

struct Common {
  std::string output;
  std::string format = "json";
  long long budget = 10000000;
  int jobs = 1;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw std::runtime_error("cannot write " + c.output);
  out << text;
}

void emit_json(const Common& c, json j) {
  json out = {{"schema", "mm/1"}};
  for (auto& [k, v] : j.items()) out[k] = v;
  emit(c, out.dump(2) + "\n");
}

std::shared_ptr<const RootDatum> datum_of(const std::string& s) {
  return std::make_shared<const RootDatum>(build_root_datum(CartanType::parse(s)));
}

// Basis for a case: minuscule reps, or enumerated W^P for a maximal parabolic.
CosetReps case_reps(const CaseSpec& s) {
  auto d = datum_of(s.cartan);
  if (s.kind == "odd_quadric") return coset_reps(d, complement_nodes(d->rank, {s.node}));
  return minuscule_coset_reps(d, s.node);
}

int cmd_roots(const Common& c, const std::string& type, int node) {
  auto d = datum_of(type);
  auto spec = make_case(type, node);
  json j = {{"root_datum", to_json(*d)}};
  if (spec.kind == "minuscule")
    j["parabolic"] = to_json(maximal_parabolic(*d, node));
  else
    j["parabolic"] = to_json(levi_data(*d, complement_nodes(d->rank, {node})));
  emit_json(c, j);
  return 0;
}

int cmd_chevalley(const Common& c, const std::string& type, int node, bool equivariant, bool classical) {
  auto spec = make_case(type, node);
  auto reps = case_reps(spec);
  ConnMatrix M;
  if (spec.kind == "odd_quadric") {
    if (equivariant) throw std::invalid_argument("equivariant rule needs a minuscule case");
    M = fw_matrix(reps, node);
  } else if (classical) {
    M = classical_chevalley(reps);
  } else {
    M = equivariant ? mihalcea_equivariant(reps) : quantum_chevalley_minuscule(reps);
  }
  if (c.format == "csv") {
    emit(c, to_csv(M));
    return 0;
  }
  if (c.format != "json") throw std::invalid_argument("format must be json or csv");
  json j = {{"case", {{"cartan", spec.cartan}, {"node", node}}}, {"matrix", to_json(M)}};
  if (spec.cartan == "D4" && node == 1 && !equivariant && !classical) {
    bool swapped = false;
    bool ok = matches_printed_d4(M, &swapped);
    j["printed_matrix_comparison"] = {{"match", ok}, {"sigma3_swap", swapped}};
    if (!ok) {
      emit_json(c, j);
      return 1;
    }
  }
  emit_json(c, j);
  return 0;
}

int cmd_verify(const Common& c, std::vector<CaseSpec> cases, const VerifyOptions& opt) {
  std::vector<CaseReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < cases.size();) reports[k] = run_case(cases[k], opt);
  };
  int jobs = std::max(1, std::min<int>(c.jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool ok = true;
  json arr = json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.ok();
    passed += r.ok();
    std::cerr << (r.ok() ? "PASS " : "FAIL ") << r.spec.cartan << " node " << r.spec.node << " (" << r.spec.kind << ")\n";
    for (const auto& ch : r.checks)
      if (!ch.ok) std::cerr << "  failed " << ch.name << ": " << ch.detail << "\n";
  }
  std::cerr << passed << "/" << reports.size() << " cases passed\n";
  emit_json(c, {{"max_degree", opt.max_degree}, {"ok", ok}, {"cases", arr}});
  return ok ? 0 : 1;
}

int cmd_potential(const Common& c, int k, int n) {
  auto f = potential_typeA(k, n);
  emit_json(c, {{"grassmannian", {k, n}}, {"potential", to_json(f)}});
  return 0;
}

int cmd_period(const Common& c, const std::string& type, int node, int D) {
  auto spec = make_case(type, node, "minuscule");
  auto reps = case_reps(spec);
  auto s = quantum_period(quantum_chevalley_minuscule(reps), D);
  emit_json(c, {{"case", {{"cartan", spec.cartan}, {"node", node}}},
                {"coxeter", reps.datum->coxeter_number},
                {"period", to_json(s)}});
  return 0;
}

int cmd_gw(const Common& c, int k, int n, int d) {
  auto f = potential_typeA(k, n);
  auto v = gw_from_constant_term(f, d, c.budget);
  emit_json(c, {{"grassmannian", {k, n}}, {"degree", d}, {"value", rat_str(v)},
                {"constant_term", rat_str(constant_term_power(f, f.coxeter * d, c.budget))}});
  return 0;
}

int cmd_scalar_ode(const Common& c, const std::string& type, int node) {
  auto spec = make_case(type, node, "minuscule");
  auto M = quantum_chevalley_minuscule(case_reps(spec));
  json j = {{"case", {{"cartan", spec.cartan}, {"node", node}}}};
  ScalarOperator L;
  if (spec.cartan == "D4" && node == 1) {
    L = d4_operator(M);
    j["subspace"] = "complement of sigma3+ - sigma3-";
    auto ref = printed_d4_operator();
    j["printed_operator_comparison"] = {{"printed", ref.str()},
                                        {"equal", L == ref},
                                        {"equal_after_q_to_minus_q", negate_q(L) == ref}};
  } else {
    std::vector<Q> top(M.dim(), Q(0));
    top.back() = 1;
    L = cyclic_scalar_operator(M.entries, top);
  }
  j["operator"] = to_json(L);
  emit_json(c, j);
  return 0;
}

int cmd_bessel(const Common& c, double y, double nu) {
  auto r = bessel_numeric_checks(y, nu);
  emit_json(c, {{"y", r.y}, {"nu", r.nu}, {"I_nu", r.I_nu}, {"I_nu_plus_1", r.I_nu1}, {"K_nu", r.K_nu},
                {"K_nu_plus_1", r.K_nu1}, {"wronskian_residual", r.residual}, {"ok", r.ok}});
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minuscule mirror computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--output", common.output, "Write output to FILE");

  std::string type;
  int node = 0, max_degree = 3, k = 0, n = 0, d = 0;
  bool equivariant = false, classical = false, all = false;
  std::string cases_file = MM_DEFAULT_CASES;
  double y = 0, nu = 0;

  auto add_case = [&](CLI::App* s) {
    s->add_option("cartan", type, "Cartan type, e.g. E7")->required();
    s->add_option("--node", node, "Node index")->required();
  };

  auto* roots = app.add_subcommand("roots", "Root datum and parabolic data");
  add_case(roots);
  auto* chev = app.add_subcommand("chevalley", "Quantum Chevalley matrix");
  add_case(chev);
  chev->add_flag("--equivariant", equivariant, "Equivariant matrix");
  chev->add_flag("--classical", classical, "Classical part only");
  chev->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("cartan", type, "Cartan type");
  verify->add_option("--node", node, "Node index");
  verify->add_flag("--all", all, "Run every case in the case list");
  verify->add_option("--cases", cases_file, "Case list file");
  verify->add_option("--max-degree", max_degree, "Series degree")->check(CLI::Range(1, 12));
  verify->add_option("--budget", common.budget, "Constant-term enumeration budget");
  verify->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* pot = app.add_subcommand("potential", "Superpotential of Gr(k, n)");
  pot->add_option("k", k)->required();
  pot->add_option("n", n)->required();

  auto* per = app.add_subcommand("period", "Quantum period");
  add_case(per);
  per->add_option("--max-degree", max_degree, "Series degree")->check(CLI::Range(0, 40));

  auto* gw = app.add_subcommand("gw", "Constant-term invariant of Gr(k, n) in degree d");
  gw->add_option("k", k)->required();
  gw->add_option("n", n)->required();
  gw->add_option("d", d)->required();
  gw->add_option("--budget", common.budget, "Enumeration budget");

  auto* ode = app.add_subcommand("scalar-ode", "Scalar differential operator");
  add_case(ode);

  auto* bes = app.add_subcommand("bessel", "Bessel Wronskian check");
  bes->add_option("y", y)->required();
  bes->add_option("nu", nu)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) return cmd_roots(common, type, node);
    if (*chev) return cmd_chevalley(common, type, node, equivariant, classical);
    if (*verify) {
      VerifyOptions opt;
      opt.max_degree = max_degree;
      opt.budget = common.budget;
      if (all) return cmd_verify(common, load_cases(cases_file), opt);
      if (type.empty() || node == 0) throw std::invalid_argument("verify needs a case or --all");
      return cmd_verify(common, {make_case(type, node)}, opt);
    }
    if (*pot) return cmd_potential(common, k, n);
    if (*per) return cmd_period(common, type, node, max_degree);
    if (*gw) return cmd_gw(common, k, n, d);
    if (*ode) return cmd_scalar_ode(common, type, node);
    if (*bes) return cmd_bessel(common, y, nu);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: too large: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
