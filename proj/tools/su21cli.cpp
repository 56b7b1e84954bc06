#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "su21/algebra.hpp"
#include "su21/characters.hpp"
#include "su21/orbital.hpp"
#include "su21/orbits.hpp"
#include "su21/roots.hpp"
#include "su21/verify.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(out, std::ios::binary);
    os << text << "\n";
  }
}

su21::BumpFunction load_bump(const std::string& arg) {
  try {
    return su21::bump_from_json(arg);
  } catch (const nlohmann::json::parse_error&) {
    std::ifstream is(arg);
    if (!is) throw std::invalid_argument("cannot read bump JSON: " + arg);
    std::stringstream ss;
    ss << is.rdbuf();
    return su21::bump_from_json(ss.str());
  }
}

su21::Weight parse_weight(const std::string& arg) {
  std::array<su21::Rat, 3> c;
  std::stringstream ss(arg);
  std::string tok;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, tok, ',')) throw std::invalid_argument("expected l1,l2,l3");
    c[i] = su21::Rat(tok);
  }
  return su21::Weight(c[0], c[1], c[2]);
}

std::vector<double> parse_list(const std::string& arg) {
  std::vector<double> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

json quad_json(const su21::QuadResult& r) {
  return {{"value", r.value},
          {"error_estimate", r.error_estimate},
          {"evaluations", r.evaluations}};
}

int cmd_audit(bool /*exact*/, const std::string& out) {
  su21::AuditReport rep = su21::audit_basis();
  emit(su21::audit_report_json(rep), out);
  return rep.all_identities_verified ? 0 : 1;
}

int cmd_classify(double t, double x, double y, double z, double tol) {
  su21::BFunctional f{t, x, y, z};
  su21::OrbitClass c = su21::classify_orbit(f, tol);
  std::cout << su21::orbit_json(f, c) << "\n";
  return 0;
}

int cmd_orbital_elliptic(double a1, double a2, double a3, const std::string& bump,
                         double tol, const std::string& out) {
  su21::DiagonalGamma g(a1, a2, a3);
  su21::BumpFunction f = load_bump(bump);
  json j;
  j["schema"] = 1;
  j["quadrature"] = quad_json(su21::elliptic_orbital_quadrature(g, f, tol));
  j["closed_form"] = quad_json(su21::elliptic_orbital_closed_form(g, f, tol));
  j["jacobian"] = su21::elliptic_jacobian(g, su21::JacobianReading::ProductAllPairs);
  emit(j.dump(2), out);
  return 0;
}

int cmd_orbital_theta(const std::string& grid, const std::string& bump, double tol,
                      const std::string& out, const std::string& csv) {
  std::vector<double> lambdas = parse_list(grid);
  su21::BumpFunction f = load_bump(bump);
  json j;
  j["schema"] = 1;
  j["F"] = json::array();
  std::ostringstream table;
  table << "lambda,F,error_estimate\n";
  for (double l : lambdas) {
    su21::QuadResult r = su21::theta_orbital_F(f, l, tol);
    j["F"].push_back({{"lambda", l}, {"value", r.value}, {"error_estimate", r.error_estimate}});
    table.precision(17);
    table << l << "," << r.value << "," << r.error_estimate << "\n";
  }
  if (lambdas.size() >= 8) {
    su21::SingularFit fit = su21::singular_fit(f, lambdas, tol);
    j["singular_fit"] = {{"c_inv", fit.c_inv},
                         {"c_log", fit.c_log},
                         {"c_0", fit.c_0},
                         {"residual_max", fit.residual_max}};
  }
  if (!csv.empty()) {
    std::ofstream os(csv, std::ios::binary);
    os << table.str();
  }
  emit(j.dump(2), out);
  return 0;
}

int cmd_transfer(const std::string& mu_s, const std::string& xi_s, int grid_n, double tol,
                 const std::string& out, const std::string& csv, bool calibrate) {
  su21::Weight mu = parse_weight(mu_s), xi = parse_weight(xi_s);
  auto grid = su21::elliptic_grid(grid_n);
  su21::Conventions conv =
      calibrate ? su21::calibrate_conventions(mu, xi, grid) : su21::default_conventions();
  su21::TransferReport rep =
      su21::transfer_identity_check(mu, xi, grid, su21::KappaCharacter::reference(), conv);
  if (!csv.empty()) {
    std::ofstream os(csv, std::ios::binary);
    os.precision(17);
    os << "theta1,theta2,theta3,w,lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
    for (const auto& r : rep.rows)
      os << r.angles[0] << "," << r.angles[1] << "," << r.angles[2] << "," << r.w_index
         << "," << r.lhs.real() << "," << r.lhs.imag() << "," << r.rhs.real() << ","
         << r.rhs.imag() << "," << r.residual << "\n";
  }
  emit(rep.json(), out);
  return rep.max_residual <= tol ? 0 : 1;
}

int cmd_packet(const std::string& mu_s, const std::string& out) {
  su21::Weight mu = parse_weight(mu_s);
  su21::LPacket p = su21::make_packet(mu);
  json j;
  j["schema"] = 1;
  j["class"] = su21::to_string(su21::classify_parameter(mu));
  j["members"] = json::array();
  for (const auto& w : p.members) {
    su21::Weight wm = su21::weyl_act(w, mu);
    j["members"].push_back({{"permutation", w.p},
                            {"sign", w.sign()},
                            {"parameter", {wm.c[0].str(), wm.c[1].str(), wm.c[2].str()}}});
  }
  emit(j.dump(2), out);
  return 0;
}

int cmd_inversion(const std::string& out) {
  su21::SuiteResult r = su21::suite_inversion();
  emit(r.details, out);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for the SU(2,1) endoscopy computations"};
  app.require_subcommand(1);

  bool exact = false;
  std::string out, csv, bump, grid_list, mu_s = "2,-3,1", xi_s = "1,1,-2";
  double t = 0, x = 0, y = 0, z = 0, tol = 1e-9;
  double a1 = 2, a2 = 1, a3 = 0.5;
  bool calibrate = false;

  auto* audit = app.add_subcommand("audit-basis", "membership and bracket audit");
  audit->add_flag("--exact", exact, "use exact arithmetic (always on; kept for parity)");
  audit->add_option("--out", out);

  auto* classify = app.add_subcommand("classify-orbit", "classify a functional on b*");
  classify->add_option("--t", t)->required();
  classify->add_option("--x", x)->required();
  classify->add_option("--y", y)->required();
  classify->add_option("--z", z)->required();
  classify->add_option("--tol", tol);

  auto* orbital = app.add_subcommand("orbital", "orbital integrals");
  orbital->require_subcommand(1);
  auto* ell = orbital->add_subcommand("elliptic", "diagonal elliptic case");
  ell->add_option("--a1", a1)->required();
  ell->add_option("--a2", a2)->required();
  ell->add_option("--a3", a3)->required();
  ell->add_option("--bump", bump, "bump JSON (inline or file path)")->required();
  ell->add_option("--tol", tol);
  ell->add_option("--out", out);
  auto* th = orbital->add_subcommand("theta", "theta-case F(lambda)");
  th->add_option("--lambda-grid", grid_list, "comma-separated lambda values")->required();
  th->add_option("--bump", bump)->required();
  th->add_option("--tol", tol);
  th->add_option("--out", out);
  th->add_option("--csv", csv);

  int grid_n = 32;
  auto* transfer = app.add_subcommand("transfer-check", "character transfer identity");
  transfer->add_option("--mu", mu_s);
  transfer->add_option("--xi", xi_s);
  transfer->add_option("--grid-n", grid_n);
  transfer->add_option("--tol", tol);
  transfer->add_option("--out", out);
  transfer->add_option("--csv", csv);
  transfer->add_flag("--calibrate", calibrate, "re-run convention calibration");

  auto* packet = app.add_subcommand("packet", "L-packet members for a parameter");
  packet->add_option("--mu", mu_s)->required();
  packet->add_option("--out", out);

  auto* inversion = app.add_subcommand("inversion-check", "exact pairing inversion");
  inversion->add_option("--out", out);

  su21::RunConfig cfg;
  auto* verify = app.add_subcommand("verify-all", "run every verification suite");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--structure-tol", cfg.structure_tol);
  verify->add_option("--quad-tol", cfg.quad_tol);
  verify->add_option("--transfer-tol", cfg.transfer_tol);
  verify->add_option("--orbit-pairs", cfg.orbit_pairs);
  verify->add_option("--elliptic-pairs", cfg.elliptic_pairs);
  verify->add_option("--grid-n", cfg.grid_n);
  verify->add_option("--out", cfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (audit->parsed()) return cmd_audit(exact, out);
    if (classify->parsed()) return cmd_classify(t, x, y, z, tol);
    if (ell->parsed()) return cmd_orbital_elliptic(a1, a2, a3, bump, tol, out);
    if (th->parsed()) return cmd_orbital_theta(grid_list, bump, tol, out, csv);
    if (transfer->parsed()) return cmd_transfer(mu_s, xi_s, grid_n, tol, out, csv, calibrate);
    if (packet->parsed()) return cmd_packet(mu_s, out);
    if (inversion->parsed()) return cmd_inversion(out);
    if (verify->parsed()) {
      su21::VerifyReport rep = su21::verify_all(cfg);
      std::cout << rep.json;
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
