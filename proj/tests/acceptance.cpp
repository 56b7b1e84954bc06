// Acceptance harness: one criterion per invocation, argv[1] in 1..9.
// Prints a single "ACCEPTANCE n: PASS|FAIL ..." line and exits 0 on pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "su21/algebra.hpp"
#include "su21/verify.hpp"

using namespace su21;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome criterion_structure() {
  // the stated relations, on the printed matrices, in exact arithmetic
  ExactMat X = gen_X(), Y = gen_Y(), Z = gen_Z(), T = gen_T();
  std::vector<std::pair<std::string, ExactMat>> checks = {
      {"[X,Y]=Z", bracket(X, Y) - Z},    {"[X,Z]=0", bracket(X, Z)},
      {"[Y,Z]=0", bracket(Y, Z)},        {"[T,X]=Y", bracket(T, X) - Y},
      {"[T,Y]=-X", bracket(T, Y) + X},   {"[T,Z]=0", bracket(T, Z)},
  };
  std::string failed;
  for (const auto& [name, diff] : checks)
    if (!diff.is_zero()) failed += (failed.empty() ? "" : ", ") + name;
  for (const ExactMat& g : {X, Y, Z, T, gen_H()}) {
    ExactMat twice = cartan_involution_algebra(cartan_involution_algebra(g));
    if (!(twice - g).is_zero()) failed += (failed.empty() ? "" : ", ") + std::string("theta^2=Id");
  }
  if (failed.empty()) return {true, "all printed relations exact"};
  return {false, "exact failure on printed matrices: " + failed};
}

Outcome criterion_audit() {
  AuditReport a = audit_basis();
  AuditReport b = audit_basis();
  if (audit_report_json(a) != audit_report_json(b))
    return {false, "audit report not deterministic"};
  auto verdict = [&](const std::string& name, bool member, bool twist) {
    for (const auto& g : a.generators)
      if (g.name == name) return g.member == member && g.i_twist_member == twist;
    return false;
  };
  bool ok = verdict("X", true, false) && verdict("H", true, false) &&
            verdict("Y", false, true) && verdict("Z", false, true) &&
            verdict("T", false, true);
  if (!ok) return {false, "membership verdicts differ from the expected pattern"};
  if (!(bracket(corr_X(), corr_Y()) - corr_Z()).is_zero())
    return {false, "[X,Y']=Z' fails on the corrected basis"};
  return {true, "verdicts X,H pass; Y,Z,T need the i-twist; [X,Y']=Z' exact"};
}

Outcome from_suite(const SuiteResult& r) {
  return {r.pass, r.name + (r.pass ? " suite passed" : " suite failed: " + r.details)};
}

Outcome criterion_end_to_end(const char* cli) {
  if (!cli) return {false, "no CLI path supplied"};
  auto run = [&](const std::string& out) {
    std::string cmd = std::string("\"") + cli + "\" verify-all --seed 1 --out " + out +
                      " > " + out + ".log 2>&1";
    return std::system(cmd.c_str());
  };
  int rc1 = run("acceptance9_a.json");
  int rc2 = run("acceptance9_b.json");
  if (rc1 != 0 || rc2 != 0) return {false, "verify-all did not exit 0"};
  auto slurp = [](const char* p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp("acceptance9_a.json"), b = slurp("acceptance9_b.json");
  if (a.empty() || a != b) return {false, "same-seed reports are not byte-identical"};
  return {true, "verify-all exits 0 with byte-identical same-seed reports"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: su21_acceptance <criterion 1..9> [cli-path]\n");
    return 2;
  }
  int n = std::atoi(argv[1]);
  RunConfig cfg;
  double budget_s;
  auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, "unknown criterion"};
  switch (n) {
    case 1: budget_s = 1; o = criterion_structure(); break;
    case 2: budget_s = 1; o = criterion_audit(); break;
    case 3: budget_s = 10; o = from_suite(suite_orbit_invariance(cfg)); break;
    case 4: budget_s = 120; o = from_suite(suite_elliptic(cfg)); break;
    case 5: budget_s = 60; o = from_suite(suite_theta(cfg)); break;
    case 6: budget_s = 30; o = from_suite(suite_transfer(cfg)); break;
    case 7: budget_s = 1; o = from_suite(suite_inversion()); break;
    case 8: budget_s = 1; o = from_suite(suite_trichotomy()); break;
    case 9: budget_s = 300; o = criterion_end_to_end(argc > 2 ? argv[2] : nullptr); break;
    default: std::fprintf(stderr, "criterion must be 1..9\n"); return 2;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = elapsed <= budget_s;
  bool pass = o.pass && in_budget;
  std::printf("ACCEPTANCE %d: %s %s (%.2fs%s)\n", n, pass ? "PASS" : "FAIL",
              o.detail.c_str(), elapsed, in_budget ? "" : ", over time budget");
  return pass ? 0 : 1;
}
