#include "su21/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace su21 {

Weight::Weight(Rat a, Rat b, Rat d) : c{std::move(a), std::move(b), std::move(d)} {
  if (c[0] + c[1] + c[2] != 0)
    throw std::invalid_argument("Weight coordinates must sum to zero");
}

Coroot Coroot::H(int k, int l) {
  Coroot h;
  h.d[k - 1] = 1;
  h.d[l - 1] = -1;
  return h;
}

Rat pair(const Weight& lambda, const Coroot& h) {
  Rat s = 0;
  for (int i = 0; i < 3; ++i) s += lambda.c[i] * h.d[i];
  return s;
}

namespace {
Weight alpha(int k, int l) {
  Weight w;
  w.c[k - 1] = 1;
  w.c[l - 1] = -1;
  return w;
}
}  // namespace

std::vector<Root> root_system() {
  std::vector<Root> roots;
  auto add = [&](int k, int l, RootKind kind) {
    roots.push_back({alpha(k, l), kind, Coroot::H(k, l),
                     "a" + std::to_string(k) + std::to_string(l)});
  };
  add(1, 2, RootKind::Compact);
  add(3, 2, RootKind::Noncompact);
  add(3, 1, RootKind::Noncompact);
  add(2, 1, RootKind::Compact);
  add(2, 3, RootKind::Noncompact);
  add(1, 3, RootKind::Noncompact);
  return roots;
}

std::vector<Root> positive_roots() {
  auto all = root_system();
  return {all[0], all[1], all[2]};
}

Weight rho() { return alpha(3, 2); }

int WeylElement::sign() const {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

WeylElement WeylElement::identity() { return {}; }

WeylElement WeylElement::transposition(int k, int l) {
  WeylElement w;
  std::swap(w.p[k - 1], w.p[l - 1]);
  return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (int i = 0; i < 3; ++i) r.p[i] = a.p[b.p[i]];
  return r;
}

Weight weyl_act(const WeylElement& w, const Weight& lambda) {
  Weight r;
  for (int i = 0; i < 3; ++i) r.c[w.p[i]] = lambda.c[i];
  return r;
}

Coroot weyl_act(const WeylElement& w, const Coroot& h) {
  Coroot r;
  for (int i = 0; i < 3; ++i) r.d[w.p[i]] = h.d[i];
  return r;
}

std::vector<WeylElement> full_weyl_group() {
  std::vector<WeylElement> g;
  std::array<int, 3> p = {0, 1, 2};
  do {
    WeylElement w;
    w.p = p;
    g.push_back(w);
  } while (std::next_permutation(p.begin(), p.end()));
  return g;
}

std::vector<WeylElement> even_weyl_elements() {
  std::vector<WeylElement> out;
  for (const auto& w : full_weyl_group())
    if (w.sign() == 1) out.push_back(w);
  return out;
}

std::vector<WeylElement> coset_representatives() {
  // W_K = {e, s12}; minimal-length coset representatives of S3 / W_K with the
  // identity as basepoint.  The nontrivial reps are the cyclic rotations.
  std::vector<WeylElement> reps;
  std::vector<WeylElement> wk = {WeylElement::identity(), WeylElement::transposition(1, 2)};
  for (const auto& w : full_weyl_group()) {
    bool seen = false;
    for (const auto& r : reps)
      for (const auto& k : wk)
        if (w == r * k) seen = true;
    if (!seen) reps.push_back(w);
  }
  return reps;  // enumeration order puts the identity first
}

std::string to_string(ParameterClass c) {
  switch (c) {
    case ParameterClass::Holomorphic: return "holomorphic";
    case ParameterClass::AntiHolomorphic: return "anti-holomorphic";
    case ParameterClass::NeitherNor: return "neither-nor";
    case ParameterClass::NotRegular: return "not-regular";
    case ParameterClass::NotInF0: return "not-in-F0";
  }
  return "?";
}

namespace {
bool pos_int(const Rat& r) {
  return r > 0 && boost::multiprecision::denominator(r) == 1;
}
}  // namespace

Classification classify_parameter_full(const Weight& lambda) {
  for (const auto& root : root_system())
    if (pair(lambda, root.coroot) == 0) return {ParameterClass::NotRegular, 0};

  Rat h12 = pair(lambda, Coroot::H(1, 2));
  Rat h31 = pair(lambda, Coroot::H(3, 1));
  Rat h23 = pair(lambda, Coroot::H(2, 3));
  Rat h13 = pair(lambda, Coroot::H(1, 3));

  bool holo = pos_int(h12) && pos_int(h31);
  bool anti = pos_int(h12) && pos_int(h23);
  bool nn = pos_int(h12) && pos_int(h13) && h12 > h13;
  int matches = (holo ? 1 : 0) + (anti ? 1 : 0) + (nn ? 1 : 0);
  // printed branch order, first match wins
  if (holo) return {ParameterClass::Holomorphic, matches};
  if (anti) return {ParameterClass::AntiHolomorphic, matches};
  if (nn) return {ParameterClass::NeitherNor, matches};
  return {ParameterClass::NotInF0, matches};
}

ParameterClass classify_parameter(const Weight& lambda) {
  return classify_parameter_full(lambda).cls;
}

std::vector<ParameterEntry> enumerate_parameters(int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<ParameterEntry> out;
  // lambda1-lambda2 = a, lambda2-lambda3 = b determine lambda.
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      int ab = a + b;  // lambda1 - lambda3
      if (a == 0 || b == 0 || ab == 0) continue;
      if (ab < -bound || ab > bound) continue;
      Weight l(Rat(2 * a + b) / 3, Rat(b - a) / 3, Rat(-a - 2 * b) / 3);
      auto cl = classify_parameter_full(l);
      ParameterEntry e;
      e.lambda = l;
      e.pairings = {Rat(a), Rat(-a), Rat(b), Rat(-b), Rat(ab), Rat(-ab)};
      e.cls = cl.cls;
      e.multi_match = cl.matches > 1;
      out.push_back(e);
    }
  }
  return out;
}

std::string parameters_csv(const std::vector<ParameterEntry>& entries) {
  std::ostringstream os;
  os << "lambda1,lambda2,lambda3,H12,H21,H23,H32,H13,H31,class,multi_match\n";
  for (const auto& e : entries) {
    for (int i = 0; i < 3; ++i) os << e.lambda.c[i].str() << ",";
    for (int i = 0; i < 6; ++i) os << e.pairings[i].str() << ",";
    os << to_string(e.cls) << "," << (e.multi_match ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace su21
