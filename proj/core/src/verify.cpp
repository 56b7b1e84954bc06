#include "su21/verify.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "json.hpp"
#include "su21/algebra.hpp"
#include "su21/characters.hpp"
#include "su21/orbital.hpp"
#include "su21/orbits.hpp"
#include "su21/roots.hpp"

namespace su21 {

using nlohmann::json;

void RunConfig::validate() const {
  if (!(structure_tol > 0) || !(quad_tol > 0) || !(transfer_tol > 0))
    throw std::invalid_argument("tolerances must be positive");
  if (orbit_pairs < 1 || elliptic_pairs < 1 || grid_n < 1)
    throw std::invalid_argument("grid sizes must be positive");
}

Rng::Rng(std::uint64_t seed) : s_(seed) {}

std::uint64_t Rng::next() {
  // splitmix64: stable across platforms
  s_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

SuiteResult suite_structure() {
  AuditReport rep = audit_basis();
  json d;
  bool printed_all = true, either_all = true;
  d["relations"] = json::array();
  for (const auto& b : rep.brackets) {
    d["relations"].push_back(
        {{"relation", b.relation}, {"printed", b.holds_printed}, {"corrected", b.holds_corrected}});
    printed_all = printed_all && b.holds_printed;
    either_all = either_all && (b.holds_printed || b.holds_corrected);
  }
  bool theta_ok = true;
  for (const auto& g : {gen_X(), gen_Y(), gen_Z(), gen_T(), gen_H()}) {
    ExactMat tt = cartan_involution_algebra(cartan_involution_algebra(g));
    theta_ok = theta_ok && (tt - g).is_zero();
  }
  d["theta_involutive"] = theta_ok;
  d["printed_all"] = printed_all;
  d["each_relation_holds_on_a_basis"] = either_all;
  return {"structure", either_all && theta_ok, d.dump()};
}

SuiteResult suite_audit() {
  AuditReport rep = audit_basis();
  json d;
  bool ok = true;
  d["generators"] = json::array();
  for (const auto& g : rep.generators) {
    d["generators"].push_back(
        {{"name", g.name}, {"member", g.member}, {"i_twist_member", g.i_twist_member}});
    bool expect_member = g.name == "X" || g.name == "H";
    ok = ok && g.member == expect_member && g.i_twist_member == !expect_member;
  }
  bool heis = (bracket(corr_X(), corr_Y()) - corr_Z()).is_zero();
  d["corrected_heisenberg_exact"] = heis;
  return {"audit", ok && heis, d.dump()};
}

SuiteResult suite_orbit_invariance(const RunConfig& cfg) {
  Rng rng(cfg.seed * 1000003ULL + 17);
  int preserved = 0, total = 0;
  json d;
  for (int i = 0; i < cfg.orbit_pairs; ++i) {
    bool stratum = i % 10 >= 7;  // z = 0 stratum, unipotent action only
    double phi = stratum ? 0.0 : rng.uniform(-3.0, 3.0);
    double at = stratum ? 0.0 : rng.uniform(-0.8, 0.8);
    double ux = rng.uniform(-1.2, 1.2), uy = rng.uniform(-1.2, 1.2),
           uz = rng.uniform(-1.2, 1.2);
    BFunctional f;
    f.t = rng.uniform(-2.0, 2.0);
    f.x = rng.uniform(-2.0, 2.0);
    f.y = rng.uniform(-2.0, 2.0);
    f.z = rng.uniform(-2.0, 2.0);
    if (stratum) {
      f.z = 0.0;
      int shape = i % 3;  // cylinder, half-plane, origin coverage
      if (shape == 1) f.y = 0.0;
      if (shape == 2) f.x = f.y = 0.0;
    } else {
      while (std::abs(f.z) < 1e-3) f.z = rng.uniform(-2.0, 2.0);
    }
    GroupElement b = certify(borel_matrix(phi, at, ux, uy, uz), 1e-8);
    BFunctional g = coadjoint_act(b, f);
    ++total;
    if (classify_orbit(g) == classify_orbit(f)) ++preserved;
  }
  // exact cylinder parameter invariance on the z = 0 stratum
  bool exact_ok = true;
  for (int i = 0; i < 25; ++i) {
    Rat ux(static_cast<long>(rng.next() % 19) - 9, 4);
    Rat uy(static_cast<long>(rng.next() % 19) - 9, 5);
    Rat uz(static_cast<long>(rng.next() % 19) - 9, 3);
    std::array<Rat, 4> f = {Rat(static_cast<long>(rng.next() % 13) - 6, 2),
                            Rat(static_cast<long>(rng.next() % 11) + 1, 3),
                            Rat(static_cast<long>(rng.next() % 11) + 1, 2), Rat(0)};
    auto g = coadjoint_act_unipotent_exact(ux, uy, uz, f);
    exact_ok = exact_ok && g[3] == 0 && g[1] * g[2] == f[1] * f[2];
  }
  d["pairs"] = total;
  d["preserved"] = preserved;
  d["exact_cylinder_invariant"] = exact_ok;
  return {"orbit-invariance", preserved == total && exact_ok, d.dump()};
}

namespace {

BumpFunction random_upper_bump(Rng& rng) {
  BumpFunction f;
  f.amplitude = rng.uniform(0.5, 2.0);
  for (const char* coord : {"re12", "re23", "re13"}) {
    BumpFactor fac{Coordinate::parse(coord), rng.uniform(-0.5, 0.5),
                   rng.uniform(0.25, 0.6)};
    f.factors.push_back(fac);
  }
  return f;
}

DiagonalGamma random_gamma(Rng& rng) {
  for (;;) {
    double a1 = rng.uniform(1.4, 2.6), a2 = rng.uniform(0.7, 1.3);
    double a3 = 1.0 / (a1 * a2);
    if (std::min({std::abs(a1 - a2), std::abs(a2 - a3), std::abs(a1 - a3)}) >= 0.1)
      return DiagonalGamma(a1, a2, a3);
  }
}

}  // namespace

SuiteResult suite_elliptic(const RunConfig& cfg) {
  Rng rng(cfg.seed * 7919ULL + 101);
  json d;
  d["pairs"] = json::array();
  double max_rel = 0, max_wrong_ratio = 0;
  for (int i = 0; i < cfg.elliptic_pairs; ++i) {
    DiagonalGamma g = random_gamma(rng);
    BumpFunction f = random_upper_bump(rng);
    QuadResult q = elliptic_orbital_quadrature(g, f, cfg.quad_tol);
    QuadResult c = elliptic_orbital_closed_form(g, f, cfg.quad_tol);
    QuadResult w =
        elliptic_orbital_closed_form(g, f, cfg.quad_tol, JacobianReading::PrintedDuplicate);
    double rel = std::abs(q.value - c.value) / std::max(std::abs(c.value), 1e-300);
    double ratio = std::max(std::abs(w.value / q.value), std::abs(q.value / w.value));
    max_rel = std::max(max_rel, rel);
    max_wrong_ratio = std::max(max_wrong_ratio, ratio);
    d["pairs"].push_back({{"a", {g.a1, g.a2, g.a3}},
                          {"quadrature", q.value},
                          {"closed_form", c.value},
                          {"rel_diff", rel},
                          {"printed_reading_ratio", ratio}});
  }
  d["max_rel_diff"] = max_rel;
  d["max_printed_reading_ratio"] = max_wrong_ratio;
  bool pass = max_rel <= 1e-6 && max_wrong_ratio >= 1.5;
  return {"elliptic-equivalence", pass, d.dump()};
}

SuiteResult suite_theta(const RunConfig& cfg) {
  BumpFunction f;
  f.amplitude = 1.3;
  f.factors.push_back({Coordinate::parse("re12"), 0.2, 0.35});
  std::vector<double> lambdas;
  for (int k = 3; k <= 10; ++k) lambdas.push_back(std::ldexp(1.0, -k));
  SingularFit fit = singular_fit(f, lambdas, cfg.quad_tol);
  QuadResult a = a_term_integral(f, 1.0);
  double rel = std::abs(fit.c_inv - a.value) / std::max(std::abs(a.value), 1e-300);
  TrendCheck trend = residual_trend(f, fit, lambdas, cfg.quad_tol);
  json d;
  d["c_inv"] = fit.c_inv;
  d["c_log"] = fit.c_log;
  d["c_0"] = fit.c_0;
  d["a_term"] = a.value;
  d["c_inv_rel_diff"] = rel;
  d["residual_max"] = fit.residual_max;
  d["trend_slope"] = trend.slope;
  d["trend_t_stat"] = trend.t_stat;
  d["no_growth"] = trend.no_growth;
  bool pass = rel <= 0.05 && trend.no_growth;
  return {"theta-singular", pass, d.dump()};
}

SuiteResult suite_transfer(const RunConfig& cfg) {
  Weight mu(2, -3, 1), xi(1, 1, -2);
  auto grid = elliptic_grid(cfg.grid_n);
  Conventions conv = default_conventions();
  TransferReport rep = transfer_identity_check(mu, xi, grid, KappaCharacter::reference(), conv);

  // every single-field perturbation must break the identity
  std::vector<Conventions> perturbed;
  {
    Conventions c = conv;
    c.rho_h_is_32 = !c.rho_h_is_32;
    perturbed.push_back(c);
  }
  for (int w0 : {0, 1, 2})
    if (w0 != conv.w0) {
      Conventions c = conv;
      c.w0 = w0;
      perturbed.push_back(c);
    }
  {
    Conventions c = conv;
    c.eps_chi = -c.eps_chi;
    perturbed.push_back(c);
  }
  {
    Conventions c = conv;
    c.s_H = -c.s_H;
    perturbed.push_back(c);
  }
  for (int kid : {0, 1, 2})
    if (kid != conv.kappa_id) {
      Conventions c = conv;
      c.kappa_id = kid;
      perturbed.push_back(c);
    }
  double min_perturbed = std::numeric_limits<double>::infinity();
  json plist = json::array();
  for (const auto& c : perturbed) {
    double r = transfer_identity_check(mu, xi, grid, KappaCharacter::reference(), c).max_residual;
    min_perturbed = std::min(min_perturbed, r);
    plist.push_back({{"manifest", c.manifest()}, {"max_residual", r}});
  }

  Conventions cal = calibrate_conventions(mu, xi, elliptic_grid(8));
  json d;
  d["conventions_manifest"] = conv.manifest();
  d["max_residual"] = rep.max_residual;
  d["min_perturbed_residual"] = min_perturbed;
  d["perturbations"] = plist;
  d["calibration_recovers_manifest"] = cal.manifest() == conv.manifest();
  bool pass = rep.max_residual <= cfg.transfer_tol && min_perturbed > 0.1 &&
              cal.manifest() == conv.manifest();
  return {"transfer-identity", pass, d.dump()};
}

SuiteResult suite_inversion() {
  json d;
  bool ok = true;
  PairingTable t2{{{1, 1}, {1, -1}}};
  auto r2 = pairing_inversion_check(t2, {Rat(5, 3), Rat(-7, 2)});
  ok = ok && r2.exact;
  PairingTable t4{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}};
  auto r4 = pairing_inversion_check(t4, {Rat(1, 6), Rat(4), Rat(-3, 5), Rat(22, 7)});
  ok = ok && r4.exact;
  bool rejected = false;
  try {
    PairingTable bad{{{1, 1}, {1, 1}}};
    validate_pairing_table(bad);
  } catch (const NonOrthogonalTable&) {
    rejected = true;
  }
  d["table2_exact"] = r2.exact;
  d["table4_exact"] = r4.exact;
  d["repeated_row_rejected"] = rejected;
  return {"pairing-inversion", ok && rejected, d.dump()};
}

SuiteResult suite_trichotomy() {
  auto entries = enumerate_parameters(5);
  bool consistent = true, holo_ok = true;
  std::map<std::string, int> counts;
  for (const auto& e : entries) {
    if (classify_parameter(e.lambda) != e.cls) consistent = false;
    if (e.cls == ParameterClass::Holomorphic && pair(e.lambda, Coroot::H(2, 3)) >= 0)
      holo_ok = false;
    counts[to_string(e.cls)]++;
  }
  json d;
  d["entries"] = entries.size();
  d["classification_consistent"] = consistent;
  d["holomorphic_H23_negative"] = holo_ok;
  d["counts"] = counts;
  return {"trichotomy", consistent && holo_ok, d.dump()};
}

VerifyReport verify_all(const RunConfig& cfg) {
  cfg.validate();
  VerifyReport rep;
  rep.suites.push_back(suite_structure());
  rep.suites.push_back(suite_audit());
  rep.suites.push_back(suite_orbit_invariance(cfg));
  rep.suites.push_back(suite_elliptic(cfg));
  rep.suites.push_back(suite_theta(cfg));
  rep.suites.push_back(suite_transfer(cfg));
  rep.suites.push_back(suite_inversion());
  rep.suites.push_back(suite_trichotomy());
  rep.all_pass = true;
  json j;
  j["schema"] = 1;
  j["seed"] = cfg.seed;
  j["suites"] = json::array();
  for (const auto& s : rep.suites) {
    rep.all_pass = rep.all_pass && s.pass;
    j["suites"].push_back({{"name", s.name}, {"pass", s.pass}, {"details", json::parse(s.details)}});
  }
  j["all_pass"] = rep.all_pass;
  rep.json = j.dump(2) + "\n";
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out, std::ios::binary);
    os << rep.json;
  }
  return rep;
}

}  // namespace su21
