#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "su21/matrix.hpp"

namespace su21 {

/// One real coordinate of the evaluation point: the real or imaginary part of
/// a matrix entry ("re11".."im33") or a scalar parameter ("t", "lambda").
struct Coordinate {
  enum class Kind { EntryRe, EntryIm, ScalarT, ScalarLambda };
  Kind kind;
  int row = 0, col = 0;  // 0-based, entry kinds only

  static Coordinate parse(const std::string& name);
  std::string name() const;
};

struct BumpFactor {
  Coordinate coord;
  double center;
  double radius;  // > 0
};

/// Product of 1-D bumps exp(-1/(1-s^2)), s = (value-center)/radius, times an
/// amplitude.  Smooth, supported exactly on the product of closed intervals.
struct BumpFunction {
  std::vector<BumpFactor> factors;
  double amplitude = 1.0;
};

/// The 1-D kernel: exp(-1/(1-s^2)) for |s| < 1, else 0.
double bump_kernel(double s);

struct EvalContext {
  const CMat* g = nullptr;
  std::optional<double> t;
  std::optional<double> lambda;
};

/// Throws std::invalid_argument if a factor's coordinate is absent from ctx.
double eval(const BumpFunction& f, const EvalContext& ctx);
double eval(const BumpFunction& f, const CMat& g);

/// Per-factor support intervals [center-radius, center+radius], declaration
/// order.
std::vector<std::pair<double, double>> support_box(const BumpFunction& f);

std::string bump_to_json(const BumpFunction& f);
BumpFunction bump_from_json(const std::string& text);

}  // namespace su21
