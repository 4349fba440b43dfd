#pragma once

// Surface syntax for products of blocks.
//
//   rep   := block { "x" block }
//   block := "chiR(" int "," cq ")" | "chiC(" int "," cq ")"
//          | "indR(" int "," cq ")" | "st(" cusp "," int ")"
//   cusp  := "unram(" qq [ "," "zeta" "=" int "/" int ] ")"
//          | "ram" [ "(" qq ")" ] | "cusp(" int "," qq ")"
//   qq    := [ "-" ] int [ "/" int ]
//   cq    := qq [ ("+" | "-") qq "i" ]
//
// Whitespace between tokens is ignored. "ram" alone is the ramified character
// with exponent 0.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "llf/parameters.hpp"

namespace llf {

inline std::string format(const Cuspidal& tau) {
  if (auto* u = std::get_if<Unramified>(&tau)) {
    std::string out = "unram(" + to_string(u->c);
    if (!u->zeta.is_one()) out += ",zeta=" + std::to_string(u->zeta.index()) + "/" + std::to_string(u->zeta.order());
    return out + ")";
  }
  if (auto* r = std::get_if<Ramified>(&tau)) return r->c == 0 ? "ram" : "ram(" + to_string(r->c) + ")";
  const auto& o = std::get<Opaque>(tau);
  return "cusp(" + std::to_string(o.degree) + "," + to_string(o.e) + ")";
}

inline std::string format(const Block& b) {
  if (auto* c = std::get_if<ArchChar>(&b))
    return std::string(c->field == Field::real ? "chiR(" : "chiC(") + std::to_string(c->m) + "," + to_string(c->r) + ")";
  if (auto* ind = std::get_if<ArchInduced>(&b)) return "indR(" + std::to_string(ind->m) + "," + to_string(ind->r) + ")";
  const auto& seg = std::get<Segment>(b);
  return "st(" + format(seg.base) + "," + std::to_string(seg.length) + ")";
}

inline std::string format(const RepProduct& rho) {
  std::string out;
  for (const auto& b : rho.blocks()) {
    if (!out.empty()) out += " x ";
    out += format(b);
  }
  return out;
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RepProduct rep() {
    std::vector<Block> blocks;
    blocks.push_back(block());
    while (accept("x")) blocks.push_back(block());
    finish();
    try {
      return RepProduct(std::move(blocks));
    } catch (const FieldMismatch& e) {
      throw ParseError(0, e.what());
    }
  }

  Block single_block() {
    Block b = block();
    finish();
    return b;
  }

  QQ lone_qq() {
    QQ q = qq();
    finish();
    return q;
  }

  CQ lone_cq() {
    CQ z = cq();
    finish();
    return z;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string near = pos_ < text_.size() ? "'" + std::string(text_.substr(pos_, 12)) + "'" : "end of input";
    throw ParseError(pos_, what + ", found " + near);
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    std::size_t start = (skip_ws(), pos_);
    bool negative = accept("-");
    std::string d = digits();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc{} || value > 1'000'000'000) throw ParseError(start, "integer out of range");
    return negative ? -value : value;
  }

  QQ qq() {
    bool negative = accept("-");
    std::size_t at = pos_;
    ZZ num(digits());
    ZZ den(1);
    if (accept("/")) {
      at = pos_;
      den = ZZ(digits());
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    QQ value(num, den);
    return negative ? QQ(-value) : value;
  }

  CQ cq() {
    QQ re = qq();
    skip_ws();
    if (accept("+")) {
      QQ im = qq();
      expect("i");
      return {re, im};
    }
    if (accept("-")) {
      QQ im = qq();
      expect("i");
      return {re, -im};
    }
    return {re, 0};
  }

  Cuspidal cusp() {
    std::size_t at = (skip_ws(), pos_);
    if (accept("unram(")) {
      QQ c = qq();
      RootOfUnity zeta;
      if (accept(",")) {
        expect("zeta");
        expect("=");
        long long j = integer();
        expect("/");
        std::size_t kat = (skip_ws(), pos_);
        long long k = integer();
        if (k < 1) throw ParseError(kat, "root of unity order must be >= 1");
        zeta = RootOfUnity(k, j);
      }
      expect(")");
      return Unramified{c, zeta};
    }
    if (accept("ram")) {
      if (accept("(")) {
        QQ c = qq();
        expect(")");
        return Ramified{c};
      }
      return Ramified{0};
    }
    if (accept("cusp(")) {
      std::size_t dat = (skip_ws(), pos_);
      long long m = integer();
      if (m < 2) throw ParseError(dat, "opaque supercuspidal degree must be >= 2 (degree 1 is a character: use unram or ram)");
      expect(",");
      QQ e = qq();
      expect(")");
      return Opaque{static_cast<int>(m), e};
    }
    pos_ = at;
    fail("expected 'unram(', 'ram' or 'cusp('");
  }

  Block block() {
    skip_ws();
    std::size_t at = pos_;
    if (accept("chiR(") || accept("chiC(") || accept("indR(")) {
      std::string_view head = text_.substr(at, 4);
      std::size_t mat = (skip_ws(), pos_);
      long long m = integer();
      expect(",");
      CQ r = cq();
      expect(")");
      if (head == "chiR") {
        if (m != 0 && m != 1)
          throw ParseError(mat, "chiR requires m in {0,1} (real characters are sgn^m |x|^r), got " + std::to_string(m));
        return ArchChar{Field::real, static_cast<int>(m), r};
      }
      if (head == "chiC") return ArchChar{Field::complex, static_cast<int>(m), r};
      if (m == 0)
        throw ParseError(mat,
                         "indR requires m != 0: Ind chi_{0,r} is reducible, write chiR(0,r) x chiR(1,r) instead");
      return canonicalize(ArchInduced{static_cast<int>(m), r});
    }
    if (accept("st(")) {
      Cuspidal base = cusp();
      expect(",");
      std::size_t lat = (skip_ws(), pos_);
      long long len = integer();
      if (len < 1) throw ParseError(lat, "segment length must be >= 1");
      expect(")");
      return Segment{base, static_cast<int>(len)};
    }
    fail("expected a block 'chiR(', 'chiC(', 'indR(' or 'st('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RepProduct parse(std::string_view text) { return detail::ExprParser(text).rep(); }
inline Block parse_block(std::string_view text) { return detail::ExprParser(text).single_block(); }

/// Rational in surface syntax, whitespace allowed.
inline QQ parse_rational(std::string_view text) { return detail::ExprParser(text).lone_qq(); }
inline CQ parse_complex(std::string_view text) { return detail::ExprParser(text).lone_cq(); }

}  // namespace llf
