#pragma once

#include <array>
#include <optional>
#include <string>

#include "su21/algebra.hpp"

namespace su21 {

/// Coefficients of t T* + x X* + y Y* + z Z* on b*.
struct BFunctional {
  double t = 0, x = 0, y = 0, z = 0;
};

enum class OrbitKind {
  OmegaPlus,
  OmegaMinus,
  Cylinder,
  HalfPlaneXPos,
  HalfPlaneXNeg,
  HalfPlaneYPos,
  HalfPlaneYNeg,
  Origin,
};

struct OrbitClass {
  OrbitKind kind;
  double alpha = 0;  // cylinder parameter xy (any nonzero sign accepted)
  friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
    return a.kind == b.kind;
  }
};

std::string to_string(OrbitKind k);

/// Which basis spans b for the coadjoint computation: the audit-corrected
/// generators (default) or the literal printed ones.
enum class BasisChoice { Corrected, Printed };

struct NonBorelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// True when g lies in B = MAU: upper triangular in the Cayley-transformed
/// model, within tol.
bool is_borel(const CMat& g, double tol);

/// (Ad*_b F)(xi) = F(Ad_{b^-1} xi) on the basis {T, X, Y, Z}, re-expanded in
/// the dual basis.  Throws NonBorelError for inputs outside B.
BFunctional coadjoint_act(const GroupElement& b, const BFunctional& f,
                          BasisChoice basis = BasisChoice::Corrected,
                          double tol = 1e-9);

/// Exact coadjoint action of the unipotent u(x,y,z) (corrected basis) on an
/// exact functional; used for the exact cylinder-invariance checks.
std::array<Rat, 4> coadjoint_act_unipotent_exact(const Rat& ux, const Rat& uy,
                                                 const Rat& uz,
                                                 const std::array<Rat, 4>& f);

OrbitClass classify_orbit(const BFunctional& f, double tol = 1e-9);

enum class PolarizationSign { Plus, Minus };

/// Checks that l = span(X +- iY', Z') is F-isotropic and of the right
/// dimension for the Heisenberg case.
bool is_polarization(PolarizationSign spec, const BFunctional& f);

std::string orbit_json(const BFunctional& f, const OrbitClass& c);

}  // namespace su21
