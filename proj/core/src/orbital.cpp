#include "su21/orbital.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace su21 {

namespace {

constexpr double kGap = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo = -kInf, hi = kInf;
  bool bounded() const { return lo > -kInf && hi < kInf; }
  bool empty() const { return lo > hi; }
  void intersect(double a, double b) {
    lo = std::max(lo, std::min(a, b));
    hi = std::min(hi, std::max(a, b));
  }
};

// intersection of the support intervals of all factors reading coord
Interval coord_interval(const BumpFunction& f, Coordinate::Kind kind, int row, int col) {
  Interval iv;
  for (const auto& fac : f.factors) {
    if (fac.coord.kind != kind) continue;
    bool entry = kind == Coordinate::Kind::EntryRe || kind == Coordinate::Kind::EntryIm;
    if (entry && (fac.coord.row != row || fac.coord.col != col)) continue;
    iv.intersect(fac.center - fac.radius, fac.center + fac.radius);
  }
  return iv;
}

void require_regular(const DiagonalGamma& g) {
  if (g.gap() < kGap)
    throw DegenerateGamma("eigenvalue gap below 1e-6: gamma is not elliptic regular");
}

}  // namespace

DiagonalGamma::DiagonalGamma(double a1_, double a2_, double a3_) : a1(a1_), a2(a2_), a3(a3_) {
  if (a1 == 0 || a2 == 0 || a3 == 0 || std::abs(a1 * a2 * a3 - 1.0) > 1e-12)
    throw ConstraintViolation("diagonal gamma must satisfy a1*a2*a3 = 1");
}

double DiagonalGamma::gap() const {
  return std::min({std::abs(a1 - a2), std::abs(a2 - a3), std::abs(a1 - a3)});
}

CMat conjugated_matrix(const DiagonalGamma& g, double x, double y, double z) {
  CMat u = {1, x, z, 0, 1, y, 0, 0, 1};
  CMat uinv = {1, -x, x * y - z, 0, 1, -y, 0, 0, 1};
  CMat d = {g.a1, 0, 0, 0, g.a2, 0, 0, 0, g.a3};
  return uinv * d * u;
}

QuadResult elliptic_orbital_quadrature(const DiagonalGamma& g, const BumpFunction& f,
                                       double tol) {
  require_regular(g);
  Interval i12 = coord_interval(f, Coordinate::Kind::EntryRe, 0, 1);
  Interval i23 = coord_interval(f, Coordinate::Kind::EntryRe, 1, 2);
  Interval i13 = coord_interval(f, Coordinate::Kind::EntryRe, 0, 2);
  if (!i12.bounded() || !i23.bounded() || !i13.bounded())
    throw SupportUnbounded(
        "support preimage unbounded: f must constrain re12, re23 and re13");

  // entry map: re12 = (a1-a2)x, re23 = (a2-a3)y, re13 = (a1-a3)z + (a3-a2)xy
  Interval ix, iy, iz;
  ix.intersect(i12.lo / (g.a1 - g.a2), i12.hi / (g.a1 - g.a2));
  iy.intersect(i23.lo / (g.a2 - g.a3), i23.hi / (g.a2 - g.a3));
  double p[4] = {ix.lo * iy.lo, ix.lo * iy.hi, ix.hi * iy.lo, ix.hi * iy.hi};
  double xy_lo = *std::min_element(p, p + 4), xy_hi = *std::max_element(p, p + 4);
  double c = g.a3 - g.a2, d = g.a1 - g.a3;
  double r_lo = i13.lo - std::max(c * xy_lo, c * xy_hi);
  double r_hi = i13.hi - std::min(c * xy_lo, c * xy_hi);
  iz.intersect(r_lo / d, r_hi / d);
  if (ix.empty() || iy.empty() || iz.empty()) return {};

  auto integrand = [&](double x, double y, double z) {
    return eval(f, conjugated_matrix(g, x, y, z));
  };
  return integrate_3d(integrand, {{{ix.lo, ix.hi}, {iy.lo, iy.hi}, {iz.lo, iz.hi}}}, tol);
}

double elliptic_jacobian(const DiagonalGamma& g, JacobianReading reading) {
  double f12 = std::abs(g.a1 - g.a2), f23 = std::abs(g.a2 - g.a3),
         f13 = std::abs(g.a1 - g.a3);
  double third = reading == JacobianReading::ProductAllPairs ? f13 : f23;
  return 1.0 / (f12 * f23 * third);
}

QuadResult elliptic_orbital_closed_form(const DiagonalGamma& g, const BumpFunction& f,
                                        double tol, JacobianReading reading) {
  require_regular(g);
  Interval i12 = coord_interval(f, Coordinate::Kind::EntryRe, 0, 1);
  Interval i23 = coord_interval(f, Coordinate::Kind::EntryRe, 1, 2);
  Interval i13 = coord_interval(f, Coordinate::Kind::EntryRe, 0, 2);
  if (!i12.bounded() || !i23.bounded() || !i13.bounded())
    throw SupportUnbounded(
        "support unbounded: f must constrain re12, re23 and re13");
  auto integrand = [&](double p, double q, double r) {
    CMat m = {g.a1, p, r, 0, g.a2, q, 0, 0, g.a3};
    return eval(f, m);
  };
  QuadResult res =
      integrate_3d(integrand, {{{i12.lo, i12.hi}, {i23.lo, i23.hi}, {i13.lo, i13.hi}}}, tol);
  double jac = elliptic_jacobian(g, reading);
  res.value *= jac;
  res.error_estimate *= jac;
  return res;
}

std::vector<double> smooth_transfer_fH(const std::vector<DiagonalGamma>& grid,
                                       const BumpFunction& f, double tol) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (const auto& g : grid) {
    double delta = std::abs(g.a1 - g.a2) * std::abs(g.a2 - g.a3) * std::abs(g.a1 - g.a3);
    out.push_back(delta * elliptic_orbital_quadrature(g, f, tol).value);
  }
  return out;
}

CMat theta_matrix(double lambda, double t) {
  double c = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
  return {c, t * lambda, 0, -lambda / t, c, 0, 0, 0, 1};
}

QuadResult theta_orbital_F(const BumpFunction& f, double lambda, double tol) {
  if (!(std::abs(lambda) > 0) || std::abs(lambda) > 1)
    throw LambdaOutOfRange("lambda must satisfy 0 < |lambda| <= 1");
  Interval it = coord_interval(f, Coordinate::Kind::ScalarT, 0, 0);
  Interval i12 = coord_interval(f, Coordinate::Kind::EntryRe, 0, 1);
  Interval t_range;
  if (it.bounded()) t_range.intersect(it.lo, it.hi);
  if (i12.bounded()) t_range.intersect(i12.lo / lambda, i12.hi / lambda);
  if (!(t_range.hi < kInf))
    throw SupportUnbounded("no factor of f bounds the t integration");
  t_range.lo = std::max(t_range.lo, 0.0);
  if (t_range.empty()) return {};

  auto integrand = [&](double t) {
    CMat m = theta_matrix(lambda, t);
    EvalContext ctx;
    ctx.g = &m;
    ctx.t = t;
    ctx.lambda = lambda;
    return (t > 1 ? 1.0 : t < 1 ? -1.0 : 0.0) * eval(f, ctx);
  };
  return integrate_1d(integrand, t_range.lo, t_range.hi, tol, {1.0});
}

namespace {

// symmetric 3x3 condition number by cyclic Jacobi
double sym3_cond(double m[3][3]) {
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];
  for (int sweep = 0; sweep < 30; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double phi = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
        double c = std::cos(phi), s = std::sin(phi);
        for (int k = 0; k < 3; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  double lo = kInf, hi = 0;
  for (int i = 0; i < 3; ++i) {
    double ev = std::abs(a[i][i]);
    lo = std::min(lo, ev);
    hi = std::max(hi, ev);
  }
  return lo > 0 ? hi / lo : kInf;
}

std::array<double, 3> fit_coeffs(const std::vector<double>& lambdas,
                                 const std::vector<double>& values) {
  size_t n = lambdas.size();
  // column scaling for the conditioning estimate
  double scale[3] = {0, 0, 0};
  auto basis = [](double l, int j) {
    double al = std::abs(l);
    return j == 0 ? 1.0 / al : j == 1 ? std::log(1.0 / al) : 1.0;
  };
  for (size_t k = 0; k < n; ++k)
    for (int j = 0; j < 3; ++j) scale[j] += basis(lambdas[k], j) * basis(lambdas[k], j);
  for (int j = 0; j < 3; ++j) scale[j] = std::sqrt(scale[j]);

  double g[3][3] = {}, rhs[3] = {};
  for (size_t k = 0; k < n; ++k) {
    double row[3];
    for (int j = 0; j < 3; ++j) row[j] = basis(lambdas[k], j);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g[i][j] += row[i] * row[j];
      rhs[i] += row[i] * values[k];
    }
  }
  double gs[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gs[i][j] = g[i][j] / (scale[i] * scale[j]);
  if (sym3_cond(gs) > 1e8)
    throw IllConditionedFit("singular fit normal equations exceed condition 1e8");

  // solve the 3x3 system
  double A[3][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) A[i][j] = g[i][j];
    A[i][3] = rhs[i];
  }
  for (int c = 0; c < 3; ++c) {
    int p = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
    for (int j = 0; j < 4; ++j) std::swap(A[p][j], A[c][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      double fpiv = A[r][c] / A[c][c];
      for (int j = c; j < 4; ++j) A[r][j] -= fpiv * A[c][j];
    }
  }
  return {A[0][3] / A[0][0], A[1][3] / A[1][1], A[2][3] / A[2][2]};
}

void check_sequence(const std::vector<double>& lambdas) {
  if (lambdas.size() < 8)
    throw std::invalid_argument("singular fit needs at least 8 lambda points");
  for (size_t k = 0; k + 1 < lambdas.size(); ++k)
    if (!(lambdas[k] > lambdas[k + 1]) || !(lambdas[k + 1] > 0))
      throw std::invalid_argument("lambda sequence must be strictly decreasing to 0+");
}

}  // namespace

SingularFit singular_fit(const BumpFunction& f, const std::vector<double>& lambdas,
                         double tol) {
  check_sequence(lambdas);
  std::vector<double> values;
  values.reserve(lambdas.size());
  for (double l : lambdas) values.push_back(theta_orbital_F(f, l, tol).value);
  auto c = fit_coeffs(lambdas, values);
  SingularFit fit{c[0], c[1], c[2], 0};
  for (size_t k = 0; k < lambdas.size(); ++k) {
    double al = std::abs(lambdas[k]);
    double pred = fit.c_inv / al + fit.c_log * std::log(1.0 / al) + fit.c_0;
    fit.residual_max = std::max(fit.residual_max, std::abs(values[k] - pred));
  }
  return fit;
}

QuadResult a_term_integral(const BumpFunction& f, double sign_lambda, double tol) {
  Interval i12 = coord_interval(f, Coordinate::Kind::EntryRe, 0, 1);
  if (!i12.bounded())
    throw SupportUnbounded("a-term integral needs a factor of f reading re12");
  double s = sign_lambda >= 0 ? 1.0 : -1.0;
  Interval iu;
  iu.intersect(i12.lo / s, i12.hi / s);
  iu.lo = std::max(iu.lo, 0.0);
  if (iu.empty()) return {};
  auto integrand = [&](double u) {
    CMat n = {1, s * u, 0, 0, 1, 0, 0, 0, 1};
    return eval(f, n);
  };
  return integrate_1d(integrand, iu.lo, iu.hi, tol);
}

TrendCheck residual_trend(const BumpFunction& f, const SingularFit& fit,
                          const std::vector<double>& lambdas, double tol) {
  check_sequence(lambdas);
  size_t n = lambdas.size();
  std::vector<double> xs(n), ys(n);
  for (size_t k = 0; k < n; ++k) {
    double al = std::abs(lambdas[k]);
    double v = theta_orbital_F(f, lambdas[k], tol).value;
    xs[k] = std::log(1.0 / al);
    ys[k] = std::abs(v - fit.c_inv / al - fit.c_log * xs[k]);
  }
  double mx = 0, my = 0;
  for (size_t k = 0; k < n; ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (size_t k = 0; k < n; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  TrendCheck tc;
  tc.slope = sxy / sxx;
  double sse = 0;
  for (size_t k = 0; k < n; ++k) {
    double r = ys[k] - my - tc.slope * (xs[k] - mx);
    sse += r * r;
  }
  double se = std::sqrt(sse / (n - 2) / sxx);
  tc.t_stat = se > 0 ? tc.slope / se : 0.0;
  tc.no_growth = tc.slope <= 0 || tc.t_stat < 1.96;
  return tc;
}

ParityValues parity_functions(const BumpFunction& f, double lambda, double tol) {
  double fp = theta_orbital_F(f, lambda, tol).value;
  double fm = theta_orbital_F(f, -lambda, tol).value;
  return {std::abs(lambda) * (fp + fm), lambda * (fp - fm)};
}

}  // namespace su21
