#pragma once

#include <stdexcept>
#include <vector>

#include "su21/bump.hpp"
#include "su21/errors.hpp"
#include "su21/quadrature.hpp"

namespace su21 {

struct DegenerateGamma : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SupportUnbounded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LambdaOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllConditionedFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Regular diagonal gamma = diag(a1, a2, a3), det 1.
struct DiagonalGamma {
  double a1, a2, a3;
  DiagonalGamma(double a1_, double a2_, double a3_);
  double gap() const;  // min pairwise |ai - aj|
};

/// u^-1 gamma u for the upper-triangular unipotent u(x, y, z), by matrix
/// multiplication.
CMat conjugated_matrix(const DiagonalGamma& g, double x, double y, double z);

/// Adaptive 3-D quadrature of f(u^-1 gamma u) over the preimage of f's
/// support box.  Requires an eigenvalue gap >= 1e-6 and factors of f reading
/// the upper-triangle coordinates re12, re23, re13.
QuadResult elliptic_orbital_quadrature(const DiagonalGamma& g, const BumpFunction& f,
                                       double tol);

enum class JacobianReading { ProductAllPairs, PrintedDuplicate };

/// Jacobian factor of the elliptic reduction under the given reading.
double elliptic_jacobian(const DiagonalGamma& g, JacobianReading reading);

/// The closed-form side: jacobian times the quadrature of f in the
/// substituted upper-triangle coordinates.
QuadResult elliptic_orbital_closed_form(const DiagonalGamma& g, const BumpFunction& f,
                                        double tol,
                                        JacobianReading reading = JacobianReading::ProductAllPairs);

/// f^H over a grid: jacobian(gamma) * orbital integral at each point.
std::vector<double> smooth_transfer_fH(const std::vector<DiagonalGamma>& grid,
                                       const BumpFunction& f, double tol = 1e-8);

/// The theta-case evaluation point: identity corner, sqrt(1-lambda^2) on the
/// 2x2 diagonal block, t*lambda and -lambda/t off-diagonal.
CMat theta_matrix(double lambda, double t);

/// F(lambda) = int_0^inf sign(t-1) f(theta_matrix(lambda, t)) dt, split at
/// the t = 1 kink.  Requires 0 < |lambda| <= 1 and a factor of f bounding t
/// (a scalar-t factor or one reading re12).
QuadResult theta_orbital_F(const BumpFunction& f, double lambda, double tol);

struct SingularFit {
  double c_inv = 0;   // coefficient of |lambda|^-1
  double c_log = 0;   // coefficient of ln(1/|lambda|)
  double c_0 = 0;
  double residual_max = 0;
};

/// Least-squares fit of F along a strictly decreasing lambda sequence (>= 8
/// points) against {|l|^-1, ln(1/|l|), 1}.
SingularFit singular_fit(const BumpFunction& f, const std::vector<double>& lambdas,
                         double tol = 1e-9);

/// int_0^inf f(n(sign_lambda * u)) du, the independent anchor for c_inv.
QuadResult a_term_integral(const BumpFunction& f, double sign_lambda, double tol = 1e-10);

/// Slope of |residual| against ln(1/lambda) with its t-statistic; the check
/// passes when no significant positive trend remains.
struct TrendCheck {
  double slope = 0;
  double t_stat = 0;
  bool no_growth = true;
};
TrendCheck residual_trend(const BumpFunction& f, const SingularFit& fit,
                          const std::vector<double>& lambdas, double tol = 1e-9);

struct ParityValues {
  double G, H;
};

/// G = |l|(F(l) + F(-l)), H = l(F(l) - F(-l)).
ParityValues parity_functions(const BumpFunction& f, double lambda, double tol = 1e-9);

}  // namespace su21
