#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace llf {

/// Deliberate rule corruptions. Only the sweep mutation tests use anything
/// other than `none`; each one must make at least one sweep fail.
enum class Mutation {
  none,
  drop_leading_cg_summand,  // omit the k = 0 summand of Sp(a) (x) Sp(b)
  keep_real_dual_sign,      // dual of a real character keeps r instead of negating it
  gamma_r_pole_shift,       // Gamma_R{mu} poles where s + mu - 1 is in {0,-2,-4,...}
};

inline std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::drop_leading_cg_summand: return "drop-cg-leading";
    case Mutation::keep_real_dual_sign: return "flip-real-dual";
    case Mutation::gamma_r_pole_shift: return "gamma-r-off-by-one";
  }
  return "none";
}

inline std::optional<Mutation> parse_mutation(std::string_view s) {
  for (Mutation m : {Mutation::none, Mutation::drop_leading_cg_summand, Mutation::keep_real_dual_sign,
                     Mutation::gamma_r_pole_shift})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

}  // namespace llf
