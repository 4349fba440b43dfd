#pragma once

// Pole-at-1/2 tests, the theta-lift certificate and reducibility of pairs
// and products of essentially square-integrable blocks.

#include <string>

#include "llf/tensor.hpp"

namespace llf {

/// Boolean answer plus whether an opaque block was treated as L = 1 on the way.
struct Verdict {
  bool value = false;
  bool opaque_degraded = false;

  explicit operator bool() const { return value; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline const QQ& one_half() {
  static const QQ h(1, 2);
  return h;
}

inline PoleReport has_pole_at_half(const RepProduct& rho, Mutation rule = Mutation::none) {
  return pole_order(gj_lfactor(rho), one_half(), rule);
}

struct ThetaCertificate {
  PoleReport sigma_pole_at_half;
  PoleReport dual_pole_at_half;
  bool certified = false;
  std::string reason;

  friend bool operator==(const ThetaCertificate&, const ThetaCertificate&) = default;
};

/// Certifies Theta_1(sigma) = sigma^vee = Theta_2(sigma) whenever L(s, sigma)
/// or L(s, sigma^vee) is regular at s = 1/2. A missing certificate claims nothing.
inline ThetaCertificate theta_certificate(const RepProduct& rho, Mutation rule = Mutation::none) {
  ThetaCertificate cert;
  cert.sigma_pole_at_half = has_pole_at_half(rho, rule);
  cert.dual_pole_at_half = has_pole_at_half(dual(rho, rule), rule);
  const bool sigma_free = cert.sigma_pole_at_half.order == 0;
  const bool dual_free = cert.dual_pole_at_half.order == 0;
  cert.certified = sigma_free || dual_free;
  if (sigma_free && dual_free)
    cert.reason = "neither side has a pole at 1/2";
  else if (sigma_free)
    cert.reason = "sigma side has no pole at 1/2";
  else if (dual_free)
    cert.reason = "dual side has no pole at 1/2";
  else
    cert.reason = "both L(s,sigma) and L(s,sigma^vee) have a pole at 1/2; the no-pole criterion is inconclusive";
  if (cert.certified)
    cert.reason += "; by the no-pole-at-1/2 criterion, Theta_1(sigma) = sigma^vee = Theta_2(sigma)";
  return cert;
}

/// b1 x b2 is reducible iff L(s, b_i^vee x b_j) has a pole at s = 1 for the
/// orientation with e(b_i) >= e(b_j). Both orientations are consulted.
inline Verdict pair_reducible(const Block& b1, const Block& b2, Mutation rule = Mutation::none) {
  if (field_of(b1) != field_of(b2)) throw FieldMismatch("reducibility of a pair over different fields");
  if (is_opaque(b1) || is_opaque(b2)) return {false, true};
  const QQ one(1);
  auto oriented = [&](const Block& x, const Block& y) {
    return exponent_e(x) >= exponent_e(y) && pole_order(rs_lfactor(dual(x, rule), y, rule), one, rule).order >= 1;
  };
  return {oriented(b1, b2) || oriented(b2, b1), false};
}

/// Irreducible iff no pair of blocks is reducible.
inline Verdict is_irreducible_product(const RepProduct& rho, Mutation rule = Mutation::none) {
  Verdict out{true, false};
  const auto& bs = rho.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      Verdict v = pair_reducible(bs[i], bs[j], rule);
      out.opaque_degraded = out.opaque_degraded || v.opaque_degraded;
      if (v.value) out.value = false;
    }
  return out;
}

}  // namespace llf
