#include "su21/algebra.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace su21 {

namespace {
const GaussRat kI = GaussRat::i();
GaussRat gr(long n) { return GaussRat(n); }
GaussRat gr(long n, long d) { return GaussRat(Rat(n) / d); }
}  // namespace

ExactMat gen_I21() {
  return {gr(1), gr(0), gr(0), gr(0), gr(1), gr(0), gr(0), gr(0), gr(-1)};
}
ExactMat gen_X() {
  return {gr(0), gr(-1), gr(0), gr(1), gr(0), gr(-1), gr(0), gr(-1), gr(0)};
}
ExactMat gen_Y() {
  return {gr(0), gr(-1), gr(0), gr(-1), gr(0), gr(1), gr(0), gr(-1), gr(0)};
}
ExactMat gen_Z() {
  return {gr(2), gr(0), gr(-2), gr(0), gr(0), gr(0), gr(2), gr(0), gr(-2)};
}
ExactMat gen_T() {
  return {gr(1, 3), gr(0), gr(0), gr(0), gr(-2, 3), gr(0), gr(0), gr(0), gr(1, 3)};
}
ExactMat gen_H() {
  return {gr(0), gr(0), gr(1), gr(0), gr(0), gr(0), gr(1), gr(0), gr(0)};
}
ExactMat gen_S() { return gen_H(); }

ExactMat elementary(int k, int l) {
  ExactMat m;
  m(k - 1, l - 1) = gr(1);
  return m;
}

ExactMat corr_X() { return gen_X(); }
ExactMat corr_Y() { return kI * gen_Y(); }
ExactMat corr_Z() { return kI * gen_Z(); }
ExactMat corr_T() { return kI * gen_T(); }

ExactMat cartan_involution_algebra(const ExactMat& x) { return -x.conj_transpose(); }
CMat cartan_involution_algebra(const CMat& x) { return -x.conj_transpose(); }

ExactMat cartan_involution_group(const ExactMat& g) {
  if (g.det().is_zero()) throw NonMemberError("cartan involution: singular matrix");
  return g.inverse().conj_transpose();
}
CMat cartan_involution_group(const CMat& g) {
  auto d = g.det();
  if (std::abs(d) == 0.0) throw NonMemberError("cartan involution: singular matrix");
  return g.inverse().conj_transpose();
}

bool in_algebra(const ExactMat& x) {
  if (!x.trace().is_zero()) return false;
  ExactMat m = gen_I21() * x;
  return (m.conj_transpose() + m).is_zero();
}

bool in_algebra(const CMat& x, double tol) {
  if (std::abs(x.trace()) > tol) return false;
  CMat m = to_float(gen_I21()) * x;
  return max_abs(m.conj_transpose() + m) <= tol;
}

bool in_group(const CMat& g, double tol) {
  CMat i21 = to_float(gen_I21());
  if (max_abs(g.conj_transpose() * i21 * g - i21) > tol) return false;
  return std::abs(g.det() - 1.0) <= tol;
}

GroupElement certify(const CMat& g, double tol) { return {g, in_group(g, tol)}; }

CMat group_inverse(const CMat& g) {
  CMat i21 = to_float(gen_I21());
  return i21 * g.conj_transpose() * i21;
}

// --- audit -----------------------------------------------------------------

namespace {

struct Named {
  std::string name;
  ExactMat m;
};

// Expand v in the corrected basis {X, Y', Z', T', H} by solving the exact
// linear system on the entries that carry the basis; returns empty on failure.
std::optional<std::array<Rat, 5>> expand_corrected(const ExactMat& v) {
  ExactMat basis[5] = {corr_X(), corr_Y(), corr_Z(), corr_T(), gen_H()};
  // 18 real equations (re/im of 9 entries), 5 unknown real coefficients.
  Rat A[18][6];
  for (int r = 0; r < 18; ++r) {
    int k = r / 2;
    bool im = r % 2;
    for (int c = 0; c < 5; ++c) A[r][c] = im ? basis[c].e[k].im : basis[c].e[k].re;
    A[r][5] = im ? v.e[k].im : v.e[k].re;
  }
  // Gaussian elimination.
  int row = 0;
  int pivot_col[5] = {-1, -1, -1, -1, -1};
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
      Rat f = A[r][c];
      for (int j = 0; j < 6; ++j) A[r][j] -= f * A[row][j];
    }
    pivot_col[row] = c;
    ++row;
  }
  // Inconsistency check: zero row with nonzero rhs.
  for (int r = row; r < 18; ++r)
    if (A[r][5] != 0) return std::nullopt;
  std::array<Rat, 5> out{};
  for (int r = 0; r < row; ++r) out[pivot_col[r]] = A[r][5];
  return out;
}

std::string coeff_string(const std::array<Rat, 5>& c,
                         const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c[i] == 1)
      s += names[i];
    else if (c[i] == -1)
      s += "-" + names[i];
    else
      s += c[i].str() + "*" + names[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

AuditReport audit_basis() {
  AuditReport rep;
  const Named printed[] = {{"T", gen_T()}, {"H", gen_H()}, {"X", gen_X()},
                           {"Y", gen_Y()}, {"Z", gen_Z()}};
  for (const auto& g : printed) {
    GeneratorAudit a;
    a.name = g.name;
    a.member = in_algebra(g.m);
    a.i_twist_member = in_algebra(kI * g.m);
    rep.generators.push_back(a);
  }

  ExactMat X = gen_X(), Y = gen_Y(), Z = gen_Z(), T = gen_T();
  ExactMat Xc = corr_X(), Yc = corr_Y(), Zc = corr_Z(), Tc = corr_T();
  auto check = [&](const std::string& rel, const ExactMat& lp, const ExactMat& rp,
                   const ExactMat& lc, const ExactMat& rc) {
    rep.brackets.push_back({rel, (lp - rp).is_zero(), (lc - rc).is_zero()});
  };
  check("[X,Y]=Z", bracket(X, Y), Z, bracket(Xc, Yc), Zc);
  check("[X,Z]=0", bracket(X, Z), ExactMat::zero(), bracket(Xc, Zc), ExactMat::zero());
  check("[Y,Z]=0", bracket(Y, Z), ExactMat::zero(), bracket(Yc, Zc), ExactMat::zero());
  check("[T,X]=Y", bracket(T, X), Y, bracket(Tc, Xc), Yc);
  check("[T,Y]=-X", bracket(T, Y), -X, bracket(Tc, Yc), -Xc);
  check("[T,Z]=0", bracket(T, Z), ExactMat::zero(), bracket(Tc, Zc), ExactMat::zero());

  rep.corrected_names = {"X", "Y'", "Z'", "T'", "H"};
  ExactMat corrected[5] = {Xc, Yc, Zc, Tc, gen_H()};
  for (int i = 0; i < 5; ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < 5; ++j) {
      auto c = expand_corrected(bracket(corrected[i], corrected[j]));
      row.push_back(c ? coeff_string(*c, rep.corrected_names) : std::string("outside span"));
    }
    rep.bracket_rows.push_back(std::move(row));
  }

  rep.all_identities_verified = true;
  for (const auto& b : rep.brackets)
    if (!b.holds_printed && !b.holds_corrected) rep.all_identities_verified = false;
  return rep;
}

std::string audit_report_json(const AuditReport& r) {
  std::ostringstream os;
  os << "{\"schema\":1,\"generators\":[";
  for (size_t i = 0; i < r.generators.size(); ++i) {
    const auto& g = r.generators[i];
    os << (i ? "," : "") << "{\"name\":\"" << g.name << "\",\"member\":"
       << (g.member ? "true" : "false")
       << ",\"i_twist_member\":" << (g.i_twist_member ? "true" : "false") << "}";
  }
  os << "],\"brackets\":[";
  for (size_t i = 0; i < r.brackets.size(); ++i) {
    const auto& b = r.brackets[i];
    os << (i ? "," : "") << "{\"relation\":\"" << b.relation << "\",\"holds_printed\":"
       << (b.holds_printed ? "true" : "false")
       << ",\"holds_corrected\":" << (b.holds_corrected ? "true" : "false") << "}";
  }
  os << "],\"bracket_rows\":[";
  for (size_t i = 0; i < r.bracket_rows.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (size_t j = 0; j < r.bracket_rows[i].size(); ++j)
      os << (j ? "," : "") << "\"" << r.bracket_rows[i][j] << "\"";
    os << "]";
  }
  os << "],\"all_identities_verified\":" << (r.all_identities_verified ? "true" : "false")
     << "}";
  return os.str();
}

// --- exponential -----------------------------------------------------------

namespace {

bool strictly_triangular(const CMat& x) {
  bool upper = true, lower = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i >= j && x(i, j) != 0.0) upper = false;
      if (i <= j && x(i, j) != 0.0) lower = false;
    }
  return upper || lower;
}

CMat pade6_exp(const CMat& a) {
  // [6/6] Pade approximant; caller guarantees a small norm.
  static const double c[7] = {1.0,        1.0 / 2,     5.0 / 44,  1.0 / 66,
                              1.0 / 792,  1.0 / 15840, 1.0 / 665280};
  CMat a2 = a * a;
  CMat p = CMat::identity();  // even part
  CMat q;                     // odd part, divided by a
  p = std::complex<double>(c[0]) * CMat::identity() + std::complex<double>(c[2]) * a2 +
      std::complex<double>(c[4]) * (a2 * a2) + std::complex<double>(c[6]) * (a2 * a2 * a2);
  q = std::complex<double>(c[1]) * CMat::identity() + std::complex<double>(c[3]) * a2 +
      std::complex<double>(c[5]) * (a2 * a2);
  CMat u = a * q;
  CMat num = p + u;
  CMat den = p - u;
  return den.inverse() * num;
}

}  // namespace

CMat mat_exp_raw(const CMat& x) {
  if (strictly_triangular(x)) {
    // nilpotency degree <= 3: exact polynomial
    CMat x2 = x * x;
    CMat r = CMat::identity() + x + std::complex<double>(0.5) * x2;
    return r;
  }
  CMat x3 = x * x * x;
  double nx = max_abs(x);
  if (max_abs(x3) <= 1e-14 * std::max(1.0, nx * nx * nx)) {
    return CMat::identity() + x + std::complex<double>(0.5) * (x * x);
  }
  int s = 0;
  double norm = nx;
  while (norm > 0.5) {
    norm /= 2;
    ++s;
  }
  CMat scaled = x;
  std::complex<double> f(std::ldexp(1.0, -s));
  scaled = f * scaled;
  CMat r = pade6_exp(scaled);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

GroupElement mat_exp(const CMat& x, double tol) {
  CMat r = mat_exp_raw(x);
  return certify(r, tol);
}

// --- Iwasawa ---------------------------------------------------------------

namespace {

const double kSqrt2 = std::sqrt(2.0);

CMat cayley() {
  double s = 1.0 / kSqrt2;
  return {s, 0, s, 0, 1, 0, s, 0, -s};
}

// J-model unipotent: exp of x X + y Y' + z Z' conjugated to upper triangular form.
CMat unipotent_J(double x, double y, double z) {
  std::complex<double> i(0, 1);
  CMat u = CMat::identity();
  u(0, 1) = -kSqrt2 * (x + i * y);
  u(1, 2) = kSqrt2 * (x - i * y);
  u(0, 2) = 4.0 * i * z - (x * x + y * y);
  return u;
}

CMat m_of_phi(double phi) {
  std::complex<double> i(0, 1);
  CMat m;
  m(0, 0) = std::exp(i * phi);
  m(1, 1) = std::exp(-2.0 * i * phi);
  m(2, 2) = std::exp(i * phi);
  return m;
}

}  // namespace

CMat borel_matrix(double phi, double t, double x, double y, double z) {
  CMat C = cayley();
  CMat a;
  a(0, 0) = std::exp(t);
  a(1, 1) = 1;
  a(2, 2) = std::exp(-t);
  CMat bJ = m_of_phi(phi) * a * unipotent_J(x, y, z);
  return C * bJ * C;
}

IwasawaFactors iwasawa_decompose(const GroupElement& g, double tol) {
  if (!g.certified) throw NonMemberError("iwasawa_decompose: input not certified");
  CMat C = cayley();
  CMat gJ = C * g.m * C;

  // base point: J-model image of e3
  std::complex<double> w0[3] = {1.0 / kSqrt2, 0.0, -1.0 / kSqrt2};
  std::complex<double> w[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i] += gJ(i, j) * w0[j];

  double aw3 = std::abs(w[2]);
  if (aw3 < 1e-300) throw NonMemberError("iwasawa_decompose: degenerate base-point image");
  double E = 1.0 / (2.0 * aw3 * aw3);
  double t = 0.5 * std::log(E);
  std::complex<double> r1 = w[0] / w[2];
  std::complex<double> r2 = w[1] / w[2];
  double z = r1.imag() / (4.0 * E);
  std::complex<double> xmiy = r2 * std::exp(-t) / kSqrt2;  // x - i y at phi = 0
  double x = xmiy.real(), y = -xmiy.imag();

  CMat a;
  a(0, 0) = std::exp(t);
  a(1, 1) = 1;
  a(2, 2) = std::exp(-t);
  CMat b0 = a * unipotent_J(x, y, z);
  CMat k0 = b0.inverse() * gJ;

  // residual phase on the base point line
  std::complex<double> kw0[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) kw0[i] += k0(i, j) * w0[j];
  double phi = std::arg(kw0[0] / w0[0]);

  CMat m = m_of_phi(phi);
  CMat k1 = m.inverse() * k0;
  std::complex<double> rot = std::exp(std::complex<double>(0, 3.0 * phi));
  std::complex<double> xy2 = (xmiy)*rot;  // conjugated unipotent parameters
  double x2 = xy2.real(), y2 = -xy2.imag();
  CMat uf = unipotent_J(x2, y2, z);

  IwasawaFactors f;
  f.m = certify(m, tol);
  f.a = certify(C * a * C, tol);
  f.u = certify(C * uf * C, tol);
  f.k = certify(C * k1 * C, tol);
  f.phi = phi;
  f.t = t;
  f.x = x2;
  f.y = y2;
  f.z = z;
  return f;
}

// --- dimensions ------------------------------------------------------------

namespace {

// Real dimension of the span of a list of matrices, by Gaussian elimination
// over the 18 realified coordinates.
int span_dim(const std::vector<ExactMat>& basis) {
  std::vector<std::array<Rat, 18>> rows;
  for (const auto& m : basis) {
    std::array<Rat, 18> r;
    for (int k = 0; k < 9; ++k) {
      r[2 * k] = m.e[k].re;
      r[2 * k + 1] = m.e[k].im;
    }
    rows.push_back(r);
  }
  int rank = 0;
  for (int c = 0; c < 18 && rank < (int)rows.size(); ++c) {
    int p = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[rank]);
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (int j = c; j < 18; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<ExactMat> g_basis() {
  // k: 4 anti-Hermitian block-diagonal generators; a: H; u: X, Y', Z'.
  ExactMat k1 = kI * (elementary(1, 1) - elementary(3, 3));
  ExactMat k2 = kI * (elementary(2, 2) - elementary(3, 3));
  ExactMat k3 = elementary(1, 2) - elementary(2, 1);
  ExactMat k4 = kI * (elementary(1, 2) + elementary(2, 1));
  return {k1, k2, k3, k4, gen_H(), corr_X(), corr_Y(), corr_Z()};
}

}  // namespace

int dim_g() {
  static const int d = [] {
    auto b = g_basis();
    for (const auto& m : b)
      if (!in_algebra(m)) throw std::logic_error("g basis member fails membership");
    return span_dim(b);
  }();
  return d;
}

int dim_k() {
  static const int d = [] {
    auto b = g_basis();
    return span_dim({b[0], b[1], b[2], b[3]});
  }();
  return d;
}

int q_G() { return (dim_g() - dim_k()) / 2; }

int q_H() {
  // H = S(U(1,1) x U(1)): dim 4; maximal compact U(1) x U(1): dim 2.
  return (4 - 2) / 2;
}

}  // namespace su21
