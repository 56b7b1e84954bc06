#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "su21/matrix.hpp"

namespace su21 {

struct NonMemberError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of SU(2,1) in float mode; `certified` is set by the membership check.
struct GroupElement {
  CMat m;
  bool certified = false;
};

// --- basis matrices -------------------------------------------------------
// The generators as printed in the source material, plus the signature
// matrix and elementary matrices.

ExactMat gen_I21();
ExactMat gen_X();
ExactMat gen_Y();
ExactMat gen_Z();
ExactMat gen_T();  // (1/3) diag(1,-2,1)
ExactMat gen_H();  // E13 + E31, split torus generator
ExactMat gen_S();  // E13 + E31 (alias used alongside X,Y,Z in b_1)
ExactMat elementary(int k, int l);

// Membership-corrected generators: i-twists applied exactly where the
// audit requires them.
ExactMat corr_X();  // = X
ExactMat corr_Y();  // = iY
ExactMat corr_Z();  // = iZ
ExactMat corr_T();  // = iT

// --- algebra operations ---------------------------------------------------

template <class S>
Matrix3<S> bracket(const Matrix3<S>& a, const Matrix3<S>& b) {
  return a * b - b * a;
}

/// Cartan involution on the Lie algebra: X -> -conj(X)^t.
ExactMat cartan_involution_algebra(const ExactMat& x);
CMat cartan_involution_algebra(const CMat& x);

/// Cartan involution on the group: g -> conj(g^-1)^t = (g^dagger)^-1.
ExactMat cartan_involution_group(const ExactMat& g);
CMat cartan_involution_group(const CMat& g);

/// su(2,1) membership for algebra elements: I21*x skew-Hermitian and trace 0.
bool in_algebra(const ExactMat& x);
bool in_algebra(const CMat& x, double tol);

/// Group membership: g^dagger I21 g = I21 and det g = 1, within tol.
bool in_group(const CMat& g, double tol);
GroupElement certify(const CMat& g, double tol);

/// For certified g the defining relation gives g^-1 = I21 g^dagger I21.
CMat group_inverse(const CMat& g);

// --- basis audit ----------------------------------------------------------

struct GeneratorAudit {
  std::string name;
  bool member = false;          // printed matrix passes the membership check
  bool i_twist_member = false;  // i * printed matrix passes instead
};

struct BracketCheck {
  std::string relation;      // e.g. "[X,Y]=Z"
  bool holds_printed = false;
  bool holds_corrected = false;  // same relation on the i-twisted basis
};

struct AuditReport {
  std::vector<GeneratorAudit> generators;
  std::vector<BracketCheck> brackets;
  // Bracket table of the corrected basis {X, Y', Z', T', H}: entry (i,j) is
  // the coefficient row of [b_i, b_j] in that basis, or empty when the
  // bracket leaves the span.
  std::vector<std::string> corrected_names;
  std::vector<std::vector<std::string>> bracket_rows;
  bool all_identities_verified = false;  // each relation holds on printed or corrected basis
};

AuditReport audit_basis();
std::string audit_report_json(const AuditReport& r);

// --- exponential and Iwasawa ----------------------------------------------

/// Scaling-and-squaring matrix exponential with fixed-order Pade kernel;
/// strictly triangular (nilpotent) inputs use the exact terminating series.
GroupElement mat_exp(const CMat& x, double tol = 1e-13);

/// Raw exponential without the membership certificate.
CMat mat_exp_raw(const CMat& x);

struct IwasawaFactors {
  GroupElement m, a, u, k;
  // parameters: m = diag(e^{i phi}, e^{-2 i phi}, e^{i phi}), a = exp(t*H),
  // u = exp(x*X + y*Y' + z*Z')
  double phi = 0, t = 0, x = 0, y = 0, z = 0;
};

/// Deterministic G = M A U K factorization (A-parameter positive, the
/// M-component carries the residual phase).
IwasawaFactors iwasawa_decompose(const GroupElement& g, double tol = 1e-10);

/// m(phi) a(t) u(x,y,z) with the corrected Heisenberg generators.
CMat borel_matrix(double phi, double t, double x, double y, double z);

// Dimension bookkeeping used for the (-1)^q signs: q = dim(G/K)/2.
int dim_g();   // 8, counted from an explicit basis
int dim_k();   // 4
int q_G();     // 2
int q_H();     // 1, from dim H = 4, dim K_H = 2

}  // namespace su21
