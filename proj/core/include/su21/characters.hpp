#pragma once

#include <complex>
#include <string>
#include <vector>

#include "su21/algebra.hpp"
#include "su21/errors.hpp"
#include "su21/roots.hpp"

namespace su21 {

using Cx = std::complex<double>;

struct IrregularElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IrregularParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnmatchedPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonOrthogonalTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// gamma = diag(e^{i t1}, e^{i t2}, e^{i t3}) on the compact Cartan;
/// the angle sum must vanish mod 2 pi.
struct EllipticElement {
  std::array<double, 3> angles;
  explicit EllipticElement(std::array<double, 3> a, double tol = 1e-9);
  bool regular(double tol = 1e-9) const;
  EllipticElement inverse() const;
};

/// e^{i sum(lambda_j theta_j)} for a rational exponent triple (need not sum
/// to zero: H-side parameters live on the cover).
Cx character_power(const EllipticElement& g, const std::array<Rat, 3>& exponent);
Cx character_power(const EllipticElement& g, const Weight& w);

using HWeight = std::array<Rat, 3>;

/// Delta_B(gamma) = gamma^rho prod_{a>0}(1 - gamma^{-a}), rho = a32.
Cx weyl_denominator(const EllipticElement& g);

struct KappaCharacter {
  int h12, h23, h13;  // values in {+1, -1}
  KappaCharacter(int h12_, int h23_, int h13_);
  static KappaCharacter reference();  // h13 = +1, h12 = h23 = -1
};

/// The convention choices the source text leaves open, fixed by calibration.
struct Conventions {
  bool rho_h_is_32 = true;  // H positive root a32 (else a23)
  int w0 = 0;               // H-side reflection: 0 = s12, 1 = s23, 2 = s13
  int eps_chi = -1;         // chi_{G,H}(gamma) = gamma^{eps*(rho - rho_H + xi)}
  int s_H = -1;             // overall H-character sign
  int kappa_id = 0;         // even-coset -> coroot-class map, see kappa_of_even
  std::string manifest() const;
};

Conventions default_conventions();

/// kappa evaluated on an even Weyl element through the coset identification
/// chosen by conv.kappa_id (0: (c, c^2) -> (H12, H23) classes, 1: (H12, H13),
/// 2: (H13, H23)).
int kappa_of_even(const KappaCharacter& k, const WeylElement& w, const Conventions& conv);

/// Discrete-series character of G at a regular elliptic element, parameter
/// w*mu, under the calibrated normalization.
Cx ds_character_G(const Weight& mu, const WeylElement& w, const EllipticElement& g,
                  const Conventions& conv = default_conventions());

/// Stable (one-member-packet) character of H = S(U(1,1) x U(1)).
Cx ds_character_H(const HWeight& nu, const EllipticElement& g,
                  const Conventions& conv = default_conventions());

Cx kappa_orbital_sum(const Weight& mu, const KappaCharacter& k, const EllipticElement& g,
                     const Conventions& conv = default_conventions());

Cx stable_character_sum(const Weight& mu, const EllipticElement& g,
                        const Conventions& conv = default_conventions());

struct EndoscopicElement {
  Cx u, v;
  std::array<double, 4> w;  // row-major 2x2, ad - bc = 1
  GroupElement embedded;
  bool printed_uv_holds;  // whether the alternative constraint uv = 1 holds
};

/// Builds [[ua, iub, 0], [-iuc, ud, 0], [0, 0, v]] and certifies membership;
/// requires u^2 v = 1 (determinant 1), recording whether uv = 1 also holds.
EndoscopicElement embed_H(Cx u, Cx v, const std::array<double, 4>& w, double tol = 1e-9);

Cx transfer_factor(const EllipticElement& g, const EllipticElement& g_H, const Weight& xi,
                   const Conventions& conv = default_conventions(), double tol = 1e-9);

struct TransferRow {
  std::array<double, 3> angles;
  int w_index;  // index into even_weyl_elements()
  Cx lhs, rhs;
  double residual;
};

struct TransferReport {
  Conventions conv;
  std::vector<TransferRow> rows;
  double max_residual = 0;
  std::string json() const;
};

/// Residuals of Delta(g, g_H) Theta^G_{w mu}(g^-1) - kappa(w)^-1 SO^H_{w mu +
/// xi}(g_H^-1) over the grid and all even w.
TransferReport transfer_identity_check(const Weight& mu, const Weight& xi,
                                       const std::vector<EllipticElement>& grid,
                                       const KappaCharacter& k = KappaCharacter::reference(),
                                       const Conventions& conv = default_conventions());

/// Enumerates the finite convention set and returns the combination with the
/// smallest max residual (first wins on ties).
Conventions calibrate_conventions(const Weight& mu, const Weight& xi,
                                  const std::vector<EllipticElement>& grid,
                                  const KappaCharacter& k = KappaCharacter::reference());

/// Deterministic regular elliptic grid for the identity checks.
std::vector<EllipticElement> elliptic_grid(int n);

struct LPacket {
  Weight mu;
  std::vector<WeylElement> members;  // the three coset representatives
};
LPacket make_packet(const Weight& mu);

struct CombinationRecord {
  Weight mu;
  std::vector<std::array<Cx, 3>> rows;  // per nu: coefficients over even w
};

/// Stores the formal pseudo-coefficient combination; throws
/// std::invalid_argument when a row is not indexed by the three even w.
CombinationRecord pseudo_coefficient_combination(const Weight& mu,
                                                const std::vector<std::array<Cx, 3>>& coeffs);

/// a(w1, w2 mu) = kappa(w2) kappa(w2 w1)^-1 over even w1, w2.
std::array<std::array<Cx, 3>, 3> printed_coefficient_table(const KappaCharacter& k,
                                                           const Conventions& conv);

/// Row-wise application to a vector of Theta values (the duality check).
std::vector<Cx> combination_apply(const CombinationRecord& rec,
                                  const std::array<Cx, 3>& theta_values);

struct PairingTable {
  std::vector<std::vector<int>> entries;  // rows: s in S_phi, cols: pi
};

/// Exact orthogonality validation: (1/#S) T T^t = I; basepoint row all +1.
void validate_pairing_table(const PairingTable& t);

struct InversionReport {
  bool exact;
  std::vector<Rat> recovered;
};

/// Exact Fourier inversion through the pairing: recovers every trace from the
/// sigma sums.  Throws NonOrthogonalTable.
InversionReport pairing_inversion_check(const PairingTable& t,
                                        const std::vector<Rat>& traces);

struct AssemblyRow {
  std::array<double, 3> angles;
  std::vector<Cx> per_packet_kappa;  // kappa-weighted packet sums
  std::vector<Cx> per_packet_stable;
  Cx total_kappa;
};

struct AssemblyReport {
  std::vector<AssemblyRow> rows;
  bool consistent;  // per-packet cross-check held at every grid point
};

AssemblyReport stable_trace_assembly(const std::vector<LPacket>& packets,
                                     const KappaCharacter& k,
                                     const std::vector<EllipticElement>& grid,
                                     const Conventions& conv = default_conventions());

}  // namespace su21
