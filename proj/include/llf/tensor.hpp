#pragma once

// Weil-Deligne tensor calculus and Rankin-Selberg factors.
//
// Archimedean indecomposables are 1-dimensional characters of W_R or C^x and
// the 2-dimensional Ind_{C^x}^{W_R} chi_{m,r}. Non-archimedean ones are
// chi (x) Sp(length) for a GL_1 character chi, labelled by the top end of
// the segment so that L(s, chi (x) Sp(length)) = L(s, chi).

#include <algorithm>
#include <variant>
#include <vector>

#include "llf/lfactor.hpp"

namespace llf {

using Gl1Char = std::variant<Unramified, Ramified>;

struct SpecialRep {
  Gl1Char chi;
  int length = 1;

  friend bool operator==(const SpecialRep&, const SpecialRep&) = default;
  friend std::strong_ordering operator<=>(const SpecialRep&, const SpecialRep&) = default;
};

using WDIndec = std::variant<ArchChar, ArchInduced, SpecialRep>;

inline int dimension(const WDIndec& v) {
  if (std::holds_alternative<ArchChar>(v)) return 1;
  if (std::holds_alternative<ArchInduced>(v)) return 2;
  return std::get<SpecialRep>(v).length;
}

/// Finite multiset of indecomposables over one field, kept sorted.
class WDRep {
 public:
  explicit WDRep(Field field) : field_(field) {}

  void add(WDIndec v) {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), v);
    parts_.insert(it, std::move(v));
  }

  void add_all(const WDRep& other) {
    if (other.field_ != field_) throw FieldMismatch("direct sum over different fields");
    for (const auto& v : other.parts_) add(v);
  }

  Field field() const { return field_; }
  const std::vector<WDIndec>& parts() const { return parts_; }

  int dimension() const {
    int d = 0;
    for (const auto& v : parts_) d += llf::dimension(v);
    return d;
  }

  friend bool operator==(const WDRep&, const WDRep&) = default;

 private:
  Field field_;
  std::vector<WDIndec> parts_;
};

/// Contragredient of an indecomposable; for chi (x) Sp(length) the top-end
/// exponent goes to length - 1 - c, as for segments.
inline WDIndec dual(const WDIndec& v) {
  if (auto* c = std::get_if<ArchChar>(&v)) return std::get<ArchChar>(dual(Block{*c}));
  if (auto* ind = std::get_if<ArchInduced>(&v)) return std::get<ArchInduced>(dual(Block{*ind}));
  const auto& sp = std::get<SpecialRep>(v);
  const QQ top = sp.length - 1;
  if (auto* u = std::get_if<Unramified>(&sp.chi)) return SpecialRep{Unramified{top - u->c, u->zeta.inverse()}, sp.length};
  return SpecialRep{Ramified{top - std::get<Ramified>(sp.chi).c}, sp.length};
}

inline WDRep dual(const WDRep& v) {
  WDRep out(v.field());
  for (const auto& x : v.parts()) out.add(dual(x));
  return out;
}

/// Ind chi_{0,r} = chi_{0,r} + chi_{1,r} as W_R representations.
inline WDRep expand_ind_zero(const CQ& r) {
  WDRep out(Field::real);
  out.add(ArchChar{Field::real, 0, r});
  out.add(ArchChar{Field::real, 1, r});
  return out;
}

inline WDRep to_wd(const Block& b) {
  Block canon = canonicalize(b);
  if (auto* c = std::get_if<ArchChar>(&canon)) {
    WDRep out(c->field);
    out.add(*c);
    return out;
  }
  if (auto* ind = std::get_if<ArchInduced>(&canon)) {
    WDRep out(Field::real);
    out.add(*ind);
    return out;
  }
  const auto& seg = std::get<Segment>(canon);
  WDRep out(Field::nonarch);
  if (auto* u = std::get_if<Unramified>(&seg.base))
    out.add(SpecialRep{*u, seg.length});
  else if (auto* r = std::get_if<Ramified>(&seg.base))
    out.add(SpecialRep{*r, seg.length});
  else
    throw UnsupportedForTensor("opaque supercuspidals carry no Weil-Deligne parameter here");
  return out;
}

/// chi1 * chi2 * |.|^shift. Any ramified factor makes the product ramified.
inline Gl1Char product(const Gl1Char& a, const Gl1Char& b, const QQ& shift) {
  auto exponent = [](const Gl1Char& x) { return std::visit([](const auto& y) { return y.c; }, x); };
  QQ c = exponent(a) + exponent(b) + shift;
  auto* ua = std::get_if<Unramified>(&a);
  auto* ub = std::get_if<Unramified>(&b);
  if (ua && ub) return Unramified{c, ua->zeta * ub->zeta};
  return Ramified{c};
}

namespace detail {

inline void tensor_into(WDRep& out, const WDIndec& x, const WDIndec& y, Mutation rule) {
  if (auto* sx = std::get_if<SpecialRep>(&x)) {
    // (chi1 (x) Sp(a)) (x) (chi2 (x) Sp(b)) = sum_k chi1 chi2 |.|^{-k} (x) Sp(a + b - 1 - 2k)
    // in top-end labels, k = 0 .. min(a, b) - 1.
    const auto& sy = std::get<SpecialRep>(y);
    const int n = std::min(sx->length, sy.length);
    for (int k = (rule == Mutation::drop_leading_cg_summand ? 1 : 0); k < n; ++k)
      out.add(SpecialRep{product(sx->chi, sy.chi, QQ(-k)), sx->length + sy.length - 1 - 2 * k});
    return;
  }
  if (auto* cx = std::get_if<ArchChar>(&x)) {
    if (auto* cy = std::get_if<ArchChar>(&y)) {
      int m = cx->m + cy->m;
      if (cx->field == Field::real) m %= 2;
      out.add(ArchChar{cx->field, m, cx->r + cy->r});
      return;
    }
    const auto& iy = std::get<ArchInduced>(y);
    out.add(ArchInduced{iy.m, cx->r + iy.r});
    return;
  }
  const auto& ix = std::get<ArchInduced>(x);
  if (auto* cy = std::get_if<ArchChar>(&y)) {
    out.add(ArchInduced{ix.m, ix.r + cy->r});
    return;
  }
  const auto& iy = std::get<ArchInduced>(y);
  const CQ r = ix.r + iy.r;
  out.add(ArchInduced{ix.m + iy.m, r});
  if (ix.m != iy.m)
    out.add(ArchInduced{ix.m > iy.m ? ix.m - iy.m : iy.m - ix.m, r});
  else
    out.add_all(expand_ind_zero(r));
}

}  // namespace detail

inline WDRep tensor(const WDRep& v, const WDRep& w, Mutation rule = Mutation::none) {
  if (v.field() != w.field()) throw FieldMismatch("tensor product over different fields");
  WDRep out(v.field());
  for (const auto& x : v.parts())
    for (const auto& y : w.parts()) detail::tensor_into(out, x, y, rule);
  return out;
}

inline LFactor lfactor(const WDIndec& v) {
  LFactor out;
  if (auto* c = std::get_if<ArchChar>(&v)) return gj_lfactor(Block{*c});
  if (auto* ind = std::get_if<ArchInduced>(&v)) return gj_lfactor(Block{*ind});
  const auto& sp = std::get<SpecialRep>(v);
  if (auto* u = std::get_if<Unramified>(&sp.chi)) out.add(Euler{u->c, u->zeta});
  return out;
}

inline LFactor lfactor(const WDRep& v) {
  LFactor out;
  for (const auto& x : v.parts()) out = multiply(out, lfactor(x));
  return out;
}

/// L(s, b1 x b2) as the standard factor of the tensor product of parameters.
/// Pairs involving an opaque block contribute 1 and mark the result degraded.
inline LFactor rs_lfactor(const Block& b1, const Block& b2, Mutation rule = Mutation::none) {
  if (field_of(b1) != field_of(b2)) throw FieldMismatch("Rankin-Selberg factor over different fields");
  if (is_opaque(b1) || is_opaque(b2)) {
    LFactor one;
    one.mark_degraded();
    return one;
  }
  return lfactor(tensor(to_wd(b1), to_wd(b2), rule));
}

inline LFactor rs_lfactor(const RepProduct& rho1, const RepProduct& rho2, Mutation rule = Mutation::none) {
  if (rho1.field() != rho2.field()) throw FieldMismatch("Rankin-Selberg factor over different fields");
  LFactor out;
  for (const auto& b1 : rho1.blocks())
    for (const auto& b2 : rho2.blocks()) out = multiply(out, rs_lfactor(b1, b2, rule));
  return out;
}

}  // namespace llf
