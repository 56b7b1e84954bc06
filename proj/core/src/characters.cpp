#include "su21/characters.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace su21 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Weight a32() { return Weight(0, -1, 1); }
Weight a23() { return Weight(0, 1, -1); }

std::array<Rat, 3> to_exponent(const Weight& w) { return {w.c[0], w.c[1], w.c[2]}; }

std::array<Rat, 3> add(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

HWeight permute(const WeylElement& w, const HWeight& nu) {
  HWeight r;
  for (int i = 0; i < 3; ++i) r[w.p[i]] = nu[i];
  return r;
}

WeylElement w0_element(const Conventions& conv) {
  switch (conv.w0) {
    case 0: return WeylElement::transposition(1, 2);
    case 1: return WeylElement::transposition(2, 3);
    default: return WeylElement::transposition(1, 3);
  }
}

void require_regular(const EllipticElement& g) {
  if (!g.regular()) throw IrregularElement("elliptic element has coinciding eigenvalues");
}

void require_regular_parameter(const Weight& mu) {
  for (const auto& r : root_system())
    if (pair(mu, r.coroot) == 0)
      throw IrregularParameter("parameter lies on a root hyperplane");
}

int sgn_rat(const Rat& r) { return r > 0 ? 1 : -1; }

}  // namespace

EllipticElement::EllipticElement(std::array<double, 3> a, double tol) : angles(a) {
  double s = angles[0] + angles[1] + angles[2];
  if (std::abs(std::remainder(s, kTwoPi)) > tol)
    throw ConstraintViolation("elliptic angles must sum to 0 mod 2pi");
}

bool EllipticElement::regular(double tol) const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(std::remainder(angles[i] - angles[j], kTwoPi)) <= tol) return false;
  return true;
}

EllipticElement EllipticElement::inverse() const {
  return EllipticElement({-angles[0], -angles[1], -angles[2]});
}

Cx character_power(const EllipticElement& g, const std::array<Rat, 3>& exponent) {
  double phase = 0;
  for (int i = 0; i < 3; ++i)
    phase += static_cast<double>(exponent[i]) * g.angles[i];
  return {std::cos(phase), std::sin(phase)};
}

Cx character_power(const EllipticElement& g, const Weight& w) {
  return character_power(g, to_exponent(w));
}

Cx weyl_denominator(const EllipticElement& g) {
  require_regular(g);
  Cx d = character_power(g, rho());
  for (const auto& r : positive_roots()) d *= Cx(1, 0) - character_power(g, -r.weight);
  return d;
}

KappaCharacter::KappaCharacter(int h12_, int h23_, int h13_)
    : h12(h12_), h23(h23_), h13(h13_) {
  auto pm = [](int v) { return v == 1 || v == -1; };
  if (!pm(h12) || !pm(h23) || !pm(h13) || h13 != h12 * h23)
    throw ConstraintViolation("kappa must be a +-1 character with k(H13) = k(H12)k(H23)");
}

KappaCharacter KappaCharacter::reference() { return KappaCharacter(-1, -1, 1); }

std::string Conventions::manifest() const {
  std::ostringstream os;
  os << "rho_H=" << (rho_h_is_32 ? "a32" : "a23")
     << ";w0=" << (w0 == 0 ? "s12" : w0 == 1 ? "s23" : "s13") << ";eps_chi=" << eps_chi
     << ";s_H=" << s_H << ";kappa_id=" << kappa_id;
  return os.str();
}

Conventions default_conventions() { return Conventions{}; }

int kappa_of_even(const KappaCharacter& k, const WeylElement& w, const Conventions& conv) {
  if (w.sign() != 1) throw std::invalid_argument("kappa_of_even needs an even element");
  std::array<int, 3> e = {0, 1, 2}, c = {1, 2, 0};
  int first, second;
  switch (conv.kappa_id) {
    case 0: first = k.h12; second = k.h23; break;
    case 1: first = k.h12; second = k.h13; break;
    default: first = k.h13; second = k.h23;
  }
  if (w.p == e) return 1;
  return w.p == c ? first : second;
}

Cx ds_character_G(const Weight& mu, const WeylElement& w, const EllipticElement& g,
                  const Conventions& conv) {
  (void)conv;
  require_regular(g);
  require_regular_parameter(mu);
  Weight lambda = weyl_act(w, mu);
  int s_G = q_G() % 2 == 0 ? 1 : -1;
  int chamber = sgn_rat(pair(lambda, Coroot::H(1, 2)));
  Weight ref = weyl_act(WeylElement::transposition(1, 2), lambda);
  Cx num = character_power(g, lambda) - character_power(g, ref);
  return static_cast<double>(s_G * chamber) * num / weyl_denominator(g);
}

Cx ds_character_H(const HWeight& nu, const EllipticElement& g, const Conventions& conv) {
  Weight rho_h = conv.rho_h_is_32 ? a32() : a23();
  Cx dh = character_power(g, rho_h) * (Cx(1, 0) - character_power(g, -rho_h));
  if (std::abs(dh) <= 1e-12)
    throw IrregularElement("element is irregular for the H denominator root");
  Cx num = character_power(g, nu) - character_power(g, permute(w0_element(conv), nu));
  return static_cast<double>(conv.s_H) * num / dh;
}

Cx kappa_orbital_sum(const Weight& mu, const KappaCharacter& k, const EllipticElement& g,
                     const Conventions& conv) {
  EllipticElement gi = g.inverse();
  Cx sum = 0;
  for (const auto& w : even_weyl_elements())
    sum += static_cast<double>(kappa_of_even(k, w, conv)) * ds_character_G(mu, w, gi, conv);
  return sum;
}

Cx stable_character_sum(const Weight& mu, const EllipticElement& g, const Conventions& conv) {
  EllipticElement gi = g.inverse();
  Cx sum = 0;
  for (const auto& w : even_weyl_elements()) sum += ds_character_G(mu, w, gi, conv);
  return sum;
}

EndoscopicElement embed_H(Cx u, Cx v, const std::array<double, 4>& w, double tol) {
  if (std::abs(std::abs(u) - 1.0) > tol || std::abs(std::abs(v) - 1.0) > tol)
    throw std::invalid_argument("embed_H: u and v must be unit scalars");
  double det2 = w[0] * w[3] - w[1] * w[2];
  if (std::abs(det2 - 1.0) > tol)
    throw std::invalid_argument("embed_H: the 2x2 block must have ad - bc = 1");
  if (std::abs(u * u * v - Cx(1, 0)) > tol)
    throw ConstraintViolation("embed_H: u^2 v = 1 is required for det 1");
  Cx i(0, 1);
  CMat m = {u * w[0], i * u * w[1], 0, -i * u * w[2], u * w[3], 0, 0, 0, v};
  EndoscopicElement e{u, v, w, certify(m, 1e-8), std::abs(u * v - Cx(1, 0)) <= tol};
  return e;
}

Cx transfer_factor(const EllipticElement& g, const EllipticElement& g_H, const Weight& xi,
                   const Conventions& conv, double tol) {
  require_regular(g);
  for (int i = 0; i < 3; ++i)
    if (std::abs(std::remainder(g.angles[i] - g_H.angles[i], kTwoPi)) > tol)
      throw UnmatchedPair("gamma_H does not match gamma through the identification");
  Weight rho_h = conv.rho_h_is_32 ? a32() : a23();
  Weight chi_exp = rho() - rho_h + xi;
  int sign = (q_G() + q_H()) % 2 == 0 ? 1 : -1;
  Cx chi = character_power(g, conv.eps_chi > 0 ? chi_exp : -chi_exp);
  EllipticElement gi = g.inverse(), ghi = g_H.inverse();
  Cx dh = character_power(ghi, rho_h) * (Cx(1, 0) - character_power(ghi, -rho_h));
  if (std::abs(dh) <= 1e-12)
    throw IrregularElement("matched pair is irregular for the H root");
  return static_cast<double>(sign) * chi * weyl_denominator(gi) / dh;
}

std::string TransferReport::json() const {
  nlohmann::json j;
  j["conventions_manifest"] = conv.manifest();
  j["max_residual"] = max_residual;
  j["grid"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["grid"].push_back({{"angles", r.angles},
                         {"w", r.w_index},
                         {"lhs", {r.lhs.real(), r.lhs.imag()}},
                         {"rhs", {r.rhs.real(), r.rhs.imag()}},
                         {"residual", r.residual}});
  }
  return j.dump(2);
}

TransferReport transfer_identity_check(const Weight& mu, const Weight& xi,
                                       const std::vector<EllipticElement>& grid,
                                       const KappaCharacter& k, const Conventions& conv) {
  TransferReport rep;
  rep.conv = conv;
  auto evens = even_weyl_elements();
  for (const auto& g : grid) {
    Cx delta = transfer_factor(g, g, xi, conv);
    EllipticElement gi = g.inverse();
    for (size_t wi = 0; wi < evens.size(); ++wi) {
      const auto& w = evens[wi];
      Cx lhs = delta * ds_character_G(mu, w, gi, conv);
      HWeight nu = add(to_exponent(weyl_act(w, mu)), to_exponent(xi));
      Cx rhs = static_cast<double>(kappa_of_even(k, w, conv)) * ds_character_H(nu, gi, conv);
      double res = std::abs(lhs - rhs);
      rep.rows.push_back({g.angles, static_cast<int>(wi), lhs, rhs, res});
      rep.max_residual = std::max(rep.max_residual, res);
    }
  }
  return rep;
}

Conventions calibrate_conventions(const Weight& mu, const Weight& xi,
                                  const std::vector<EllipticElement>& grid,
                                  const KappaCharacter& k) {
  Conventions best;
  double best_res = std::numeric_limits<double>::infinity();
  for (bool rho32 : {true, false})
    for (int w0 : {0, 1, 2})
      for (int eps : {-1, 1})
        for (int sH : {-1, 1})
          for (int kid : {0, 1, 2}) {
            Conventions c{rho32, w0, eps, sH, kid};
            double res;
            try {
              res = transfer_identity_check(mu, xi, grid, k, c).max_residual;
            } catch (const std::exception&) {
              continue;
            }
            if (std::isfinite(res) && res < best_res) {
              best_res = res;
              best = c;
            }
          }
  return best;
}

std::vector<EllipticElement> elliptic_grid(int n) {
  std::vector<EllipticElement> grid;
  const double g1 = 0.6180339887498949, g2 = 0.7548776662466927;
  for (int k = 1; grid.size() < static_cast<size_t>(n) && k < 100 * n + 100; ++k) {
    double t1 = -3.0 + 6.0 * std::fmod(k * g1 + 0.12, 1.0);
    double t2 = -3.0 + 6.0 * std::fmod(k * g2 + 0.41, 1.0);
    EllipticElement e({t1, t2, -t1 - t2});
    if (e.regular(0.15)) grid.push_back(e);
  }
  return grid;
}

LPacket make_packet(const Weight& mu) {
  require_regular_parameter(mu);
  return {mu, even_weyl_elements()};
}

CombinationRecord pseudo_coefficient_combination(const Weight& mu,
                                                 const std::vector<std::array<Cx, 3>>& coeffs) {
  if (even_weyl_elements().size() != 3)
    throw std::invalid_argument("coefficient rows must be indexed by the three even w");
  return {mu, coeffs};
}

std::array<std::array<Cx, 3>, 3> printed_coefficient_table(const KappaCharacter& k,
                                                           const Conventions& conv) {
  auto evens = even_weyl_elements();
  std::array<std::array<Cx, 3>, 3> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int kj = kappa_of_even(k, evens[j], conv);
      int kji = kappa_of_even(k, evens[j] * evens[i], conv);
      a[i][j] = static_cast<double>(kj * kji);  // kappa(w2) kappa(w2 w1)^-1
    }
  return a;
}

std::vector<Cx> combination_apply(const CombinationRecord& rec,
                                  const std::array<Cx, 3>& theta_values) {
  std::vector<Cx> out;
  out.reserve(rec.rows.size());
  for (const auto& row : rec.rows) {
    Cx s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * theta_values[j];
    out.push_back(s);
  }
  return out;
}

void validate_pairing_table(const PairingTable& t) {
  size_t m = t.entries.size();
  if (m == 0) throw NonOrthogonalTable("empty pairing table");
  size_t p = t.entries[0].size();
  for (const auto& row : t.entries) {
    if (row.size() != p) throw NonOrthogonalTable("ragged pairing table");
    for (int e : row)
      if (e != 1 && e != -1) throw NonOrthogonalTable("entries must be +-1");
  }
  for (int e : t.entries[0])
    if (e != 1) throw NonOrthogonalTable("basepoint row must be all +1");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      long dot = 0;
      for (size_t c = 0; c < p; ++c) dot += t.entries[i][c] * t.entries[j][c];
      if (dot != (i == j ? static_cast<long>(p) : 0))
        throw NonOrthogonalTable("rows are not orthogonal characters");
    }
}

InversionReport pairing_inversion_check(const PairingTable& t,
                                        const std::vector<Rat>& traces) {
  validate_pairing_table(t);
  size_t m = t.entries.size(), p = t.entries[0].size();
  if (traces.size() != p)
    throw std::invalid_argument("trace vector length must match the number of columns");
  if (m != p)
    throw NonOrthogonalTable("inversion requires a square pairing table");
  std::vector<Rat> sigma(m, 0);
  for (size_t s = 0; s < m; ++s)
    for (size_t c = 0; c < p; ++c) sigma[s] += Rat(t.entries[s][c]) * traces[c];
  InversionReport rep;
  rep.recovered.assign(p, 0);
  for (size_t c = 0; c < p; ++c) {
    for (size_t s = 0; s < m; ++s) rep.recovered[c] += Rat(t.entries[s][c]) * sigma[s];
    rep.recovered[c] /= Rat(static_cast<long>(m));
  }
  rep.exact = rep.recovered == traces;
  return rep;
}

AssemblyReport stable_trace_assembly(const std::vector<LPacket>& packets,
                                     const KappaCharacter& k,
                                     const std::vector<EllipticElement>& grid,
                                     const Conventions& conv) {
  AssemblyReport rep;
  rep.consistent = true;
  for (const auto& g : grid) {
    AssemblyRow row;
    row.angles = g.angles;
    row.total_kappa = 0;
    EllipticElement gi = g.inverse();
    for (const auto& pk : packets) {
      Cx tab = 0;
      for (const auto& w : pk.members)
        tab += static_cast<double>(kappa_of_even(k, w, conv)) *
               ds_character_G(pk.mu, w, gi, conv);
      Cx viaop = kappa_orbital_sum(pk.mu, k, g, conv);
      if (std::abs(tab - viaop) > 1e-10) rep.consistent = false;
      row.per_packet_kappa.push_back(tab);
      row.per_packet_stable.push_back(stable_character_sum(pk.mu, g, conv));
      row.total_kappa += tab;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace su21
