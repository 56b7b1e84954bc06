#pragma once

#include <array>
#include <string>
#include <vector>

#include "su21/rational.hpp"

namespace su21 {

/// Functional on the compact Cartan: rational triple with zero sum.
struct Weight {
  std::array<Rat, 3> c{};

  Weight() = default;
  Weight(Rat a, Rat b, Rat d);

  friend Weight operator+(const Weight& a, const Weight& b) {
    return Weight(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]);
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    return Weight(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]);
  }
  friend Weight operator-(const Weight& a) { return Weight(-a.c[0], -a.c[1], -a.c[2]); }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
};

/// Coroot H_kl = E_kk - E_ll as an integer diagonal triple.
struct Coroot {
  std::array<int, 3> d{};
  static Coroot H(int k, int l);  // 1-based indices
};

enum class RootKind { Compact, Noncompact };

struct Root {
  Weight weight;
  RootKind kind;
  Coroot coroot;
  std::string name;  // "a12" etc.
};

/// lambda(H_kl) = lambda_k - lambda_l, exact.
Rat pair(const Weight& lambda, const Coroot& h);

/// The six roots of (g_C, k_C) with the positive system {a12, a32, a31}.
std::vector<Root> root_system();
std::vector<Root> positive_roots();

/// rho = a32 = (0,-1,1), half-sum of the positive system.
Weight rho();

/// Permutation Weyl element; sign is the parity.
struct WeylElement {
  std::array<int, 3> p{0, 1, 2};  // image: i -> p[i] (0-based)
  int sign() const;
  static WeylElement identity();
  static WeylElement transposition(int k, int l);  // 1-based
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.p == b.p; }
};

Weight weyl_act(const WeylElement& w, const Weight& lambda);
Coroot weyl_act(const WeylElement& w, const Coroot& h);
std::vector<WeylElement> full_weyl_group();
std::vector<WeylElement> even_weyl_elements();

/// Minimal-length representatives of S3 / S2 (W_K generated by s_{a12});
/// identity is the basepoint.
std::vector<WeylElement> coset_representatives();

enum class ParameterClass { Holomorphic, AntiHolomorphic, NeitherNor, NotRegular, NotInF0 };

std::string to_string(ParameterClass c);

/// F'_0 trichotomy evaluated on the printed branch conditions in printed
/// order; `matches` counts how many branches would fire.
struct Classification {
  ParameterClass cls;
  int matches = 0;
};

Classification classify_parameter_full(const Weight& lambda);
ParameterClass classify_parameter(const Weight& lambda);

struct ParameterEntry {
  Weight lambda;
  std::array<Rat, 6> pairings;  // H12, H21, H23, H32, H13, H31
  ParameterClass cls;
  bool multi_match;
};

/// All weights whose six pairings are nonzero integers of magnitude <= bound.
std::vector<ParameterEntry> enumerate_parameters(int bound);

std::string parameters_csv(const std::vector<ParameterEntry>& entries);

}  // namespace su21
