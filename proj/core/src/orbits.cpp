#include "su21/orbits.hpp"

#include <cmath>
#include <sstream>

namespace su21 {

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::OmegaPlus: return "omega+";
    case OrbitKind::OmegaMinus: return "omega-";
    case OrbitKind::Cylinder: return "cylinder";
    case OrbitKind::HalfPlaneXPos: return "half-plane-x+";
    case OrbitKind::HalfPlaneXNeg: return "half-plane-x-";
    case OrbitKind::HalfPlaneYPos: return "half-plane-y+";
    case OrbitKind::HalfPlaneYNeg: return "half-plane-y-";
    case OrbitKind::Origin: return "origin";
  }
  return "?";
}

namespace {

const double kSqrt2 = std::sqrt(2.0);

CMat cayley() {
  double s = 1.0 / kSqrt2;
  return {s, 0, s, 0, 1, 0, s, 0, -s};
}

// basis of b in the order (T, H, X, Y, Z)
std::array<ExactMat, 5> b_basis(BasisChoice choice) {
  if (choice == BasisChoice::Corrected)
    return {corr_T(), gen_H(), corr_X(), corr_Y(), corr_Z()};
  return {gen_T(), gen_H(), gen_X(), gen_Y(), gen_Z()};
}

// Least-squares expansion of v in the realified span of the basis.
// Returns coefficients and the max-norm residual.
std::pair<std::array<double, 5>, double> expand_float(const std::array<CMat, 5>& basis,
                                                      const CMat& v) {
  double g[5][6] = {};
  auto dot = [](const CMat& a, const CMat& b) {
    double s = 0;
    for (int k = 0; k < 9; ++k)
      s += a.e[k].real() * b.e[k].real() + a.e[k].imag() * b.e[k].imag();
    return s;
  };
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) g[i][j] = dot(basis[i], basis[j]);
    g[i][5] = dot(basis[i], v);
  }
  // Gaussian elimination with partial pivoting on the 5x5 normal system.
  for (int c = 0; c < 5; ++c) {
    int p = c;
    for (int r = c + 1; r < 5; ++r)
      if (std::abs(g[r][c]) > std::abs(g[p][c])) p = r;
    for (int j = 0; j < 6; ++j) std::swap(g[p][j], g[c][j]);
    for (int r = 0; r < 5; ++r) {
      if (r == c) continue;
      double f = g[r][c] / g[c][c];
      for (int j = c; j < 6; ++j) g[r][j] -= f * g[c][j];
    }
  }
  std::array<double, 5> coef;
  for (int i = 0; i < 5; ++i) coef[i] = g[i][5] / g[i][i];
  CMat rec;
  for (int i = 0; i < 5; ++i) rec = rec + std::complex<double>(coef[i]) * basis[i];
  return {coef, max_abs_diff(rec, v)};
}

}  // namespace

bool is_borel(const CMat& g, double tol) {
  if (!in_group(g, tol)) return false;
  CMat C = cayley();
  CMat gj = C * g * C;
  double below = std::max({std::abs(gj(1, 0)), std::abs(gj(2, 0)), std::abs(gj(2, 1))});
  return below <= tol * std::max(1.0, max_abs(gj));
}

BFunctional coadjoint_act(const GroupElement& b, const BFunctional& f, BasisChoice choice,
                          double tol) {
  if (!is_borel(b.m, std::max(tol, 1e-9)))
    throw NonBorelError("coadjoint_act: element is not in the Borel subgroup");
  auto exact = b_basis(choice);
  std::array<CMat, 5> basis;
  for (int i = 0; i < 5; ++i) basis[i] = to_float(exact[i]);
  CMat binv = group_inverse(b.m);
  BFunctional out;
  double* slot[5] = {&out.t, nullptr, &out.x, &out.y, &out.z};
  double fc[5] = {f.t, 0, f.x, f.y, f.z};
  for (int i = 0; i < 5; ++i) {
    if (!slot[i]) continue;
    CMat ad = binv * basis[i] * b.m;
    auto [coef, resid] = expand_float(basis, ad);
    if (resid > 1e-6 * std::max(1.0, max_abs(ad)))
      throw NonBorelError("coadjoint_act: Ad image leaves the chosen basis span");
    double v = 0;
    for (int j = 0; j < 5; ++j) v += fc[j] * coef[j];
    *slot[i] = v;
  }
  return out;
}

std::array<Rat, 4> coadjoint_act_unipotent_exact(const Rat& ux, const Rat& uy,
                                                 const Rat& uz,
                                                 const std::array<Rat, 4>& f) {
  ExactMat N = GaussRat(ux) * corr_X() + GaussRat(uy) * corr_Y() + GaussRat(uz) * corr_Z();
  GaussRat half(Rat(1) / 2);
  ExactMat N2 = N * N;
  // nilpotent of degree 3
  ExactMat u = ExactMat::identity() + N + half * N2;
  ExactMat uinv = ExactMat::identity() - N + half * N2;
  std::array<ExactMat, 5> basis = {corr_T(), gen_H(), corr_X(), corr_Y(), corr_Z()};

  // exact expansion by Gaussian elimination on realified coordinates
  auto expand = [&](const ExactMat& v) {
    Rat A[18][6];
    for (int k = 0; k < 9; ++k) {
      for (int c = 0; c < 5; ++c) {
        A[2 * k][c] = basis[c].e[k].re;
        A[2 * k + 1][c] = basis[c].e[k].im;
      }
      A[2 * k][5] = v.e[k].re;
      A[2 * k + 1][5] = v.e[k].im;
    }
    int row = 0;
    int pc[5] = {-1, -1, -1, -1, -1};
    for (int c = 0; c < 5 && row < 18; ++c) {
      int p = -1;
      for (int r = row; r < 18; ++r)
        if (A[r][c] != 0) {
          p = r;
          break;
        }
      if (p < 0) continue;
      for (int j = 0; j < 6; ++j) std::swap(A[p][j], A[row][j]);
      Rat inv = Rat(1) / A[row][c];
      for (int j = 0; j < 6; ++j) A[row][j] *= inv;
      for (int r = 0; r < 18; ++r) {
        if (r == row || A[r][c] == 0) continue;
        Rat fpiv = A[r][c];
        for (int j = 0; j < 6; ++j) A[r][j] -= fpiv * A[row][j];
      }
      pc[row] = c;
      ++row;
    }
    for (int r = row; r < 18; ++r)
      if (A[r][5] != 0) throw std::logic_error("exact coadjoint expansion inconsistent");
    std::array<Rat, 5> out{};
    for (int r = 0; r < row; ++r) out[pc[r]] = A[r][5];
    return out;
  };

  std::array<Rat, 4> result{};
  int idx[4] = {0, 2, 3, 4};  // T, X, Y, Z slots within the 5-basis
  Rat fc[5] = {f[0], 0, f[1], f[2], f[3]};
  for (int i = 0; i < 4; ++i) {
    ExactMat ad = uinv * basis[idx[i]] * u;
    auto coef = expand(ad);
    Rat v = 0;
    for (int j = 0; j < 5; ++j) v += fc[j] * coef[j];
    result[i] = v;
  }
  return result;
}

OrbitClass classify_orbit(const BFunctional& f, double tol) {
  if (f.z > tol) return {OrbitKind::OmegaPlus};
  if (f.z < -tol) return {OrbitKind::OmegaMinus};
  double xy = f.x * f.y;
  if (std::abs(xy) > tol) return {OrbitKind::Cylinder, xy};
  bool xn = std::abs(f.x) > tol, yn = std::abs(f.y) > tol;
  if (xn && !yn) return {f.x > 0 ? OrbitKind::HalfPlaneXPos : OrbitKind::HalfPlaneXNeg};
  if (yn && !xn) return {f.y > 0 ? OrbitKind::HalfPlaneYPos : OrbitKind::HalfPlaneYNeg};
  if (xn && yn) return {OrbitKind::Cylinder, xy};  // both nonzero, product under tol
  return {OrbitKind::Origin};
}

bool is_polarization(PolarizationSign spec, const BFunctional& f) {
  // l = span_C(X + s*iY', Z') inside the complexified Heisenberg algebra.
  // Brackets of the generators all lie in the center, so only [v1, v2]
  // matters for isotropy; the dimension condition uses the radical of
  // B_F(a,b) = F([a,b]) on u_C.
  double s = spec == PolarizationSign::Plus ? 1.0 : -1.0;
  std::complex<double> i(0, 1);
  CMat X = to_float(corr_X()), Yc = to_float(corr_Y()), Zc = to_float(corr_Z());
  CMat v1 = X + (s * i) * Yc;
  CMat v2 = Zc;

  // F extended complex-linearly via expansion in {T',H,X,Y',Z'}
  std::array<CMat, 5> basis = {to_float(corr_T()), to_float(gen_H()), X, Yc, Zc};
  auto F_of = [&](const CMat& v) -> std::complex<double> {
    // complex expansion: solve twice (real and imaginary parts)
    auto solve_part = [&](const CMat& part) {
      auto [coef, resid] = expand_float(basis, part);
      (void)resid;
      return f.t * coef[0] + f.x * coef[2] + f.y * coef[3] + f.z * coef[4];
    };
    CMat re, im;
    for (int k = 0; k < 9; ++k) {
      re.e[k] = v.e[k].real();
      im.e[k] = v.e[k].imag();
    }
    return {solve_part(re), solve_part(im)};
  };

  bool isotropic = std::abs(F_of(bracket(v1, v2))) <= 1e-12;

  // radical of B_F on u_C with basis (X, Y', Z'): entries F([b_i,b_j])
  std::complex<double> b01 = F_of(bracket(X, Yc));
  // remaining brackets are zero in the Heisenberg algebra
  bool degenerate = std::abs(b01) <= 1e-12;
  int radical = degenerate ? 3 : 1;
  bool dim_ok = degenerate || 2 * 2 == 3 + radical;
  return isotropic && dim_ok;
}

std::string orbit_json(const BFunctional& f, const OrbitClass& c) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"t\":" << f.t << ",\"x\":" << f.x << ",\"y\":" << f.y << ",\"z\":" << f.z
     << ",\"class\":\"" << to_string(c.kind) << "\",\"alpha\":" << c.alpha << "}";
  return os.str();
}

}  // namespace su21
