#include "su21/bump.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace su21 {

Coordinate Coordinate::parse(const std::string& name) {
  if (name == "t") return {Kind::ScalarT};
  if (name == "lambda") return {Kind::ScalarLambda};
  if (name.size() == 4 && (name.substr(0, 2) == "re" || name.substr(0, 2) == "im")) {
    int r = name[2] - '1', c = name[3] - '1';
    if (r >= 0 && r < 3 && c >= 0 && c < 3)
      return {name[0] == 'r' ? Kind::EntryRe : Kind::EntryIm, r, c};
  }
  throw std::invalid_argument("unknown coordinate name: " + name);
}

std::string Coordinate::name() const {
  switch (kind) {
    case Kind::ScalarT: return "t";
    case Kind::ScalarLambda: return "lambda";
    case Kind::EntryRe:
    case Kind::EntryIm:
      return std::string(kind == Kind::EntryRe ? "re" : "im") +
             char('1' + row) + char('1' + col);
  }
  return "?";
}

double bump_kernel(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

double eval(const BumpFunction& f, const EvalContext& ctx) {
  double v = f.amplitude;
  for (const auto& fac : f.factors) {
    double coord;
    switch (fac.coord.kind) {
      case Coordinate::Kind::ScalarT:
        if (!ctx.t) throw std::invalid_argument("bump needs scalar t");
        coord = *ctx.t;
        break;
      case Coordinate::Kind::ScalarLambda:
        if (!ctx.lambda) throw std::invalid_argument("bump needs scalar lambda");
        coord = *ctx.lambda;
        break;
      default:
        if (!ctx.g) throw std::invalid_argument("bump needs a matrix argument");
        auto e = (*ctx.g)(fac.coord.row, fac.coord.col);
        coord = fac.coord.kind == Coordinate::Kind::EntryRe ? e.real() : e.imag();
    }
    v *= bump_kernel((coord - fac.center) / fac.radius);
    if (v == 0.0) return 0.0;
  }
  return v;
}

double eval(const BumpFunction& f, const CMat& g) {
  EvalContext ctx;
  ctx.g = &g;
  return eval(f, ctx);
}

std::vector<std::pair<double, double>> support_box(const BumpFunction& f) {
  std::vector<std::pair<double, double>> box;
  box.reserve(f.factors.size());
  for (const auto& fac : f.factors)
    box.emplace_back(fac.center - fac.radius, fac.center + fac.radius);
  return box;
}

std::string bump_to_json(const BumpFunction& f) {
  nlohmann::json j;
  j["amplitude"] = f.amplitude;
  j["factors"] = nlohmann::json::array();
  for (const auto& fac : f.factors)
    j["factors"].push_back(
        {{"coord", fac.coord.name()}, {"center", fac.center}, {"radius", fac.radius}});
  return j.dump();
}

BumpFunction bump_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BumpFunction f;
  f.amplitude = j.at("amplitude").get<double>();
  for (const auto& jf : j.at("factors")) {
    BumpFactor fac{Coordinate::parse(jf.at("coord").get<std::string>()),
                   jf.at("center").get<double>(), jf.at("radius").get<double>()};
    if (!(fac.radius > 0)) throw std::invalid_argument("bump radius must be positive");
    f.factors.push_back(fac);
  }
  return f;
}

}  // namespace su21
