#pragma once

// Parameters of essentially square-integrable representations of GL_n over
// R, C and non-archimedean fields, and their induced products.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "llf/error.hpp"
#include "llf/rational.hpp"
#include "llf/rules.hpp"

namespace llf {

enum class Field { real, complex, nonarch };

inline std::string_view to_string(Field f) {
  switch (f) {
    case Field::real: return "real";
    case Field::complex: return "complex";
    case Field::nonarch: return "nonarch";
  }
  return "real";
}

/// Character chi_{m,r}. Over R: x -> sgn(x)^m |x|^r with m in {0,1}.
/// Over C: z -> z^m (z zbar)^(r - m/2) with m any integer.
struct ArchChar {
  Field field = Field::real;
  int m = 0;
  CQ r;

  friend bool operator==(const ArchChar&, const ArchChar&) = default;
  friend std::strong_ordering operator<=>(const ArchChar&, const ArchChar&) = default;
};

/// The 2-dimensional W_R parameter Ind_{C^x}^{W_R} chi_{m,r}. Canonical form has m >= 1.
struct ArchInduced {
  int m = 1;
  CQ r;

  friend bool operator==(const ArchInduced&, const ArchInduced&) = default;
  friend std::strong_ordering operator<=>(const ArchInduced&, const ArchInduced&) = default;
};

/// Unramified GL_1 character |.|^c times the finite-order unramified character
/// sending a uniformizer to zeta; its L-factor has a pole at s = -c when zeta = 1.
struct Unramified {
  QQ c;
  RootOfUnity zeta;

  friend bool operator==(const Unramified&, const Unramified&) = default;
  friend std::strong_ordering operator<=>(const Unramified&, const Unramified&) = default;
};

/// Ramified GL_1 character with real exponent c. L-factor 1.
struct Ramified {
  QQ c;

  friend bool operator==(const Ramified&, const Ramified&) = default;
  friend std::strong_ordering operator<=>(const Ramified&, const Ramified&) = default;
};

/// Supercuspidal of GL_degree (degree >= 2), carried only by its degree and exponent.
/// Standard and Rankin-Selberg factors involving it are modelled as 1.
struct Opaque {
  int degree = 2;
  QQ e;

  friend bool operator==(const Opaque&, const Opaque&) = default;
  friend std::strong_ordering operator<=>(const Opaque&, const Opaque&) = default;
};

using Cuspidal = std::variant<Unramified, Ramified, Opaque>;

/// Segment tau|det|^(1-length), ..., tau|det|^(-1), tau and its unique
/// essentially square-integrable quotient. The base exponent is the top end.
struct Segment {
  Cuspidal base;
  int length = 1;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment&, const Segment&) = default;
};

using Block = std::variant<ArchChar, ArchInduced, Segment>;

inline Field field_of(const Block& b) {
  if (auto* c = std::get_if<ArchChar>(&b)) return c->field;
  if (std::holds_alternative<ArchInduced>(b)) return Field::real;
  return Field::nonarch;
}

inline bool is_opaque(const Block& b) {
  auto* s = std::get_if<Segment>(&b);
  return s && std::holds_alternative<Opaque>(s->base);
}

inline int degree(const Block& b) {
  if (std::holds_alternative<ArchChar>(b)) return 1;
  if (std::holds_alternative<ArchInduced>(b)) return 2;
  const auto& seg = std::get<Segment>(b);
  if (auto* o = std::get_if<Opaque>(&seg.base)) return o->degree * seg.length;
  return seg.length;
}

/// Checks every invariant except the sign of ArchInduced::m (see canonicalize).
inline void validate(const Block& b) {
  if (auto* c = std::get_if<ArchChar>(&b)) {
    if (c->field == Field::nonarch) throw InvalidParameter("archimedean character over a non-archimedean field");
    if (c->field == Field::real && c->m != 0 && c->m != 1)
      throw InvalidParameter("real character requires m in {0,1}, got m=" + std::to_string(c->m));
    return;
  }
  if (auto* ind = std::get_if<ArchInduced>(&b)) {
    if (ind->m == 0)
      throw InvalidParameter(
          "Ind chi_{0,r} is reducible (m != 0 required); expand it as chi_{0,r} + chi_{1,r}");
    return;
  }
  const auto& seg = std::get<Segment>(b);
  if (seg.length < 1) throw InvalidParameter("segment length must be >= 1");
  if (auto* o = std::get_if<Opaque>(&seg.base); o && o->degree < 2)
    throw InvalidParameter("opaque supercuspidal degree must be >= 2");
}

/// Replaces Ind chi_{m,r} with m < 0 by its conjugate Ind chi_{-m,r}; other blocks unchanged.
inline Block canonicalize(Block b) {
  validate(b);
  if (auto* ind = std::get_if<ArchInduced>(&b); ind && ind->m < 0) ind->m = -ind->m;
  return b;
}

inline Cuspidal twist(const Cuspidal& tau, const QQ& t) {
  return std::visit(
      [&](const auto& x) -> Cuspidal {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Unramified>)
          return Unramified{x.c + t, x.zeta};
        else if constexpr (std::is_same_v<T, Ramified>)
          return Ramified{x.c + t};
        else
          return Opaque{x.degree, x.e + t};
      },
      tau);
}

/// Multiplication by |det|^t.
inline Block twist(const Block& b, const QQ& t) {
  if (auto* c = std::get_if<ArchChar>(&b)) return ArchChar{c->field, c->m, c->r + t};
  if (auto* ind = std::get_if<ArchInduced>(&b)) return ArchInduced{ind->m, ind->r + t};
  const auto& seg = std::get<Segment>(b);
  return Segment{twist(seg.base, t), seg.length};
}

/// Contragredient. The dual of the segment ending at tau is the segment ending
/// at tau^vee |.|^(length-1), so top-end exponents map c -> length - 1 - c.
inline Block dual(const Block& b, Mutation rule = Mutation::none) {
  if (auto* c = std::get_if<ArchChar>(&b)) {
    if (c->field == Field::real)
      return ArchChar{Field::real, c->m, rule == Mutation::keep_real_dual_sign ? c->r : -c->r};
    return ArchChar{Field::complex, -c->m, -c->r};
  }
  if (auto* ind = std::get_if<ArchInduced>(&b)) return ArchInduced{ind->m < 0 ? -ind->m : ind->m, -ind->r};
  const auto& seg = std::get<Segment>(b);
  const QQ shift = seg.length - 1;
  Cuspidal base = std::visit(
      [&](const auto& x) -> Cuspidal {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Unramified>)
          return Unramified{shift - x.c, x.zeta.inverse()};
        else if constexpr (std::is_same_v<T, Ramified>)
          return Ramified{shift - x.c};
        else
          return Opaque{x.degree, shift - x.e};
      },
      seg.base);
  return Segment{std::move(base), seg.length};
}

/// Tempered exponent e(b): b |det|^(-e) is unitary tempered.
inline QQ exponent_e(const Block& b) {
  if (auto* c = std::get_if<ArchChar>(&b)) return c->r.re;
  if (auto* ind = std::get_if<ArchInduced>(&b)) return ind->r.re;
  const auto& seg = std::get<Segment>(b);
  const QQ half_span = QQ(seg.length - 1, 2);
  return std::visit(
      [&](const auto& x) -> QQ {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Opaque>)
          return x.e - half_span;
        else
          return x.c - half_span;
      },
      seg.base);
}

/// Normalized parabolic induction b_1 x ... x b_l over a single field.
class RepProduct {
 public:
  RepProduct(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InvalidParameter("a product needs at least one block");
    for (auto& b : blocks_) b = canonicalize(std::move(b));
    field_ = field_of(blocks_.front());
    for (const auto& b : blocks_)
      if (field_of(b) != field_)
        throw FieldMismatch("blocks over different fields (" + std::string(to_string(field_)) + " vs " +
                            std::string(to_string(field_of(b))) + ")");
  }
  RepProduct(Block b) : RepProduct(std::vector<Block>{std::move(b)}) {}

  const std::vector<Block>& blocks() const { return blocks_; }
  Field field() const { return field_; }
  std::size_t size() const { return blocks_.size(); }

  int degree() const {
    int n = 0;
    for (const auto& b : blocks_) n += llf::degree(b);
    return n;
  }

  bool has_opaque() const {
    for (const auto& b : blocks_)
      if (is_opaque(b)) return true;
    return false;
  }

  friend bool operator==(const RepProduct&, const RepProduct&) = default;

 private:
  std::vector<Block> blocks_;
  Field field_ = Field::real;
};

inline RepProduct dual(const RepProduct& rho, Mutation rule = Mutation::none) {
  std::vector<Block> out;
  out.reserve(rho.size());
  for (const auto& b : rho.blocks()) out.push_back(dual(b, rule));
  return RepProduct(std::move(out));
}

inline RepProduct twist(const RepProduct& rho, const QQ& t) {
  std::vector<Block> out;
  out.reserve(rho.size());
  for (const auto& b : rho.blocks()) out.push_back(twist(b, t));
  return RepProduct(std::move(out));
}

// Convenience constructors; each validates.

inline Block real_char(int m, CQ r) {
  Block b = ArchChar{Field::real, m, std::move(r)};
  validate(b);
  return b;
}

inline Block complex_char(int m, CQ r) { return ArchChar{Field::complex, m, std::move(r)}; }

inline Block induced(int m, CQ r) { return canonicalize(ArchInduced{m, std::move(r)}); }

inline Block segment(Cuspidal base, int length) {
  Block b = Segment{std::move(base), length};
  validate(b);
  return b;
}

/// sigma_{length, |.|^c}: generalized Steinberg ending at |.|^c.
inline Block steinberg(QQ c, int length) { return segment(Unramified{std::move(c), {}}, length); }

}  // namespace llf
