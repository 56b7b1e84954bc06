#include "su21/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace su21 {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct Cell {
  double k15, err;
};

Cell gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  evals += 15;
  double k15 = 0, g7 = 0;
  for (int i = 0; i < 7; ++i) k15 += kWgk[i] * (fv[i] + fv[14 - i]);
  k15 += kWgk[7] * fv[7];
  // Gauss nodes sit at the odd Kronrod indices.
  for (int i = 0; i < 3; ++i) g7 += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  g7 += kWg[3] * fv[7];
  k15 *= h;
  g7 *= h;
  double diff = std::abs(k15 - g7);
  // QUADPACK-style sharpened estimate, clamped to be a valid bound heuristic.
  double err = diff > 0 ? std::min(diff, std::pow(200.0 * diff, 1.5)) : 0.0;
  return {k15, err};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, int max_depth, QuadResult& out) {
  Cell cell = gk15(f, a, b, out.evaluations);
  if (cell.err <= tol || depth >= max_depth) {
    out.value += cell.k15;
    out.error_estimate += cell.err;
    return;
  }
  double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        double tol, const std::vector<double>& splits, int max_depth) {
  QuadResult out;
  if (!(b > a)) return out;
  std::vector<double> pts = {a};
  for (double s : splits)
    if (s > a && s < b) pts.push_back(s);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  double cell_tol = tol / static_cast<double>(pts.size() - 1);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    adapt(f, pts[i], pts[i + 1], cell_tol, 0, max_depth, out);
  return out;
}

QuadResult integrate_3d(const std::function<double(double, double, double)>& f,
                        const std::array<std::pair<double, double>, 3>& box, double tol) {
  QuadResult total;
  auto outer = [&](double z) {
    auto middle = [&](double y) {
      auto inner = [&](double x) { return f(x, y, z); };
      QuadResult r = integrate_1d(inner, box[0].first, box[0].second, tol / 64.0);
      total.evaluations += r.evaluations;
      return r.value;
    };
    QuadResult r = integrate_1d(middle, box[1].first, box[1].second, tol / 8.0);
    return r.value;
  };
  QuadResult r = integrate_1d(outer, box[2].first, box[2].second, tol);
  total.value = r.value;
  total.error_estimate = r.error_estimate;
  return total;
}

}  // namespace su21
