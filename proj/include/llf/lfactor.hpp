#pragma once

// Formal L-factors: finite products of Gamma_R, Gamma_C and Euler atoms with
// multiplicities, and exact pole-order queries at real rational points.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "llf/parameters.hpp"

namespace llf {

/// pi^{-(s+mu)/2} Gamma((s+mu)/2)
struct GammaR {
  CQ mu;
  friend bool operator==(const GammaR&, const GammaR&) = default;
  friend std::strong_ordering operator<=>(const GammaR&, const GammaR&) = default;
};

/// 2 (2 pi)^{-(s+mu)} Gamma(s+mu)
struct GammaC {
  CQ mu;
  friend bool operator==(const GammaC&, const GammaC&) = default;
  friend std::strong_ordering operator<=>(const GammaC&, const GammaC&) = default;
};

/// (1 - zeta q^{-(s+c)})^{-1}
struct Euler {
  QQ c;
  RootOfUnity zeta;
  friend bool operator==(const Euler&, const Euler&) = default;
  friend std::strong_ordering operator<=>(const Euler&, const Euler&) = default;
};

using Atom = std::variant<GammaR, GammaC, Euler>;

inline std::string shift_string(const CQ& mu) {
  if (mu == CQ{}) return "s";
  if (mu.im == 0) return mu.re < 0 ? "s - " + to_string(QQ(-mu.re)) : "s + " + to_string(mu.re);
  return "s + (" + to_string(mu) + ")";
}

inline std::string to_string(const Atom& a) {
  if (auto* g = std::get_if<GammaR>(&a)) return "Gamma_R(" + shift_string(g->mu) + ")";
  if (auto* g = std::get_if<GammaC>(&a)) return "Gamma_C(" + shift_string(g->mu) + ")";
  const auto& e = std::get<Euler>(a);
  std::string out = "Euler(" + shift_string(CQ{e.c});
  if (!e.zeta.is_one()) out += "; zeta=" + std::to_string(e.zeta.index()) + "/" + std::to_string(e.zeta.order());
  return out + ")";
}

/// Shift s -> s + t.
inline Atom shift(const Atom& a, const QQ& t) {
  if (auto* g = std::get_if<GammaR>(&a)) return GammaR{g->mu + t};
  if (auto* g = std::get_if<GammaC>(&a)) return GammaC{g->mu + t};
  const auto& e = std::get<Euler>(a);
  return Euler{e.c + t, e.zeta};
}

/// Whether the atom has a (simple) pole at the real point s0.
inline bool has_pole(const Atom& a, const QQ& s0, Mutation rule = Mutation::none) {
  if (auto* g = std::get_if<GammaR>(&a)) {
    if (!g->mu.is_real()) return false;
    QQ x = s0 + g->mu.re;
    if (rule == Mutation::gamma_r_pole_shift) x -= 1;
    return is_nonpositive_even(x);
  }
  if (auto* g = std::get_if<GammaC>(&a)) return g->mu.is_real() && is_nonpositive_integer(s0 + g->mu.re);
  const auto& e = std::get<Euler>(a);
  return e.zeta.is_one() && s0 + e.c == 0;
}

using AtomTerm = std::pair<Atom, int>;

struct PoleReport {
  QQ s;
  int order = 0;
  std::vector<AtomTerm> contributors;
  bool opaque_degraded = false;

  friend bool operator==(const PoleReport&, const PoleReport&) = default;
};

/// Multiset of atoms with positive multiplicities. Empty means the constant 1.
/// The degraded flag records that an opaque supercuspidal was replaced by 1;
/// it is carried along but does not take part in equality.
class LFactor {
 public:
  LFactor() = default;
  LFactor(std::initializer_list<Atom> atoms) {
    for (const auto& a : atoms) add(a);
  }

  void add(const Atom& a, int multiplicity = 1) {
    if (multiplicity <= 0) throw InvalidParameter("atom multiplicity must be positive");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                               [](const AtomTerm& t, const Atom& x) { return t.first < x; });
    if (it != terms_.end() && it->first == a)
      it->second += multiplicity;
    else
      terms_.insert(it, {a, multiplicity});
  }

  const std::vector<AtomTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int multiplicity(const Atom& a) const {
    for (const auto& [atom, k] : terms_)
      if (atom == a) return k;
    return 0;
  }

  /// Total number of atoms counted with multiplicity.
  int size() const {
    int n = 0;
    for (const auto& t : terms_) n += t.second;
    return n;
  }

  bool opaque_degraded() const { return degraded_; }
  void mark_degraded(bool flag = true) { degraded_ = degraded_ || flag; }

  friend bool operator==(const LFactor& a, const LFactor& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<AtomTerm> terms_;
  bool degraded_ = false;
};

inline LFactor multiply(const LFactor& a, const LFactor& b) {
  LFactor out = a;
  for (const auto& [atom, k] : b.terms()) out.add(atom, k);
  out.mark_degraded(b.opaque_degraded());
  return out;
}

inline LFactor shift(const LFactor& l, const QQ& t) {
  LFactor out;
  for (const auto& [atom, k] : l.terms()) out.add(shift(atom, t), k);
  out.mark_degraded(l.opaque_degraded());
  return out;
}

inline PoleReport pole_order(const LFactor& l, const QQ& s0, Mutation rule = Mutation::none) {
  PoleReport report{s0, 0, {}, l.opaque_degraded()};
  for (const auto& [atom, k] : l.terms()) {
    if (!has_pole(atom, s0, rule)) continue;
    report.order += k;
    report.contributors.emplace_back(atom, k);
  }
  return report;
}

/// All real poles s >= lower with their orders. Gamma atoms with a non-real
/// shift have no real poles.
inline std::map<QQ, int> real_poles(const LFactor& l, const QQ& lower, Mutation rule = Mutation::none) {
  std::map<QQ, int> poles;
  for (const auto& [atom, k] : l.terms()) {
    if (auto* e = std::get_if<Euler>(&atom)) {
      if (e->zeta.is_one() && -e->c >= lower) poles[-e->c] += k;
      continue;
    }
    const bool real_gamma = std::holds_alternative<GammaR>(atom);
    const CQ& mu = real_gamma ? std::get<GammaR>(atom).mu : std::get<GammaC>(atom).mu;
    if (!mu.is_real()) continue;
    QQ start = -mu.re;
    if (real_gamma && rule == Mutation::gamma_r_pole_shift) start += 1;
    const int step = real_gamma ? 2 : 1;
    for (QQ s = start; s >= lower; s -= step) poles[s] += k;
  }
  return poles;
}

// Godement-Jacquet factors.

inline LFactor gj_lfactor(const Block& block) {
  LFactor out;
  if (auto* c = std::get_if<ArchChar>(&block)) {
    if (c->field == Field::real)
      out.add(GammaR{c->r + QQ(c->m)});
    else
      out.add(GammaC{c->r + QQ(c->m < 0 ? -c->m : c->m, 2)});
    return out;
  }
  if (auto* ind = std::get_if<ArchInduced>(&block)) {
    out.add(GammaC{ind->r + QQ(ind->m < 0 ? -ind->m : ind->m, 2)});
    return out;
  }
  // L(s, sigma_{n,tau}) = L(s, tau): only the top end of the segment contributes.
  const auto& seg = std::get<Segment>(block);
  if (auto* u = std::get_if<Unramified>(&seg.base)) out.add(Euler{u->c, u->zeta});
  if (std::holds_alternative<Opaque>(seg.base)) out.mark_degraded();
  return out;
}

inline LFactor gj_lfactor(const RepProduct& rho) {
  LFactor out;
  for (const auto& b : rho.blocks()) out = multiply(out, gj_lfactor(b));
  return out;
}

inline std::string to_string(const LFactor& l) {
  if (l.empty()) return "1";
  std::string out;
  for (const auto& [atom, k] : l.terms()) {
    if (!out.empty()) out += " * ";
    out += to_string(atom);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace llf
