#pragma once

// Exhaustive verification of the pole statements over finite parameter grids.

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "llf/expr.hpp"
#include "llf/predicates.hpp"

namespace llf {

struct GridSpec {
  Field field = Field::real;
  std::vector<int> m_values;       // real: chars use m in {0,1}, Ind uses m >= 1; complex: all
  std::vector<CQ> r_values;        // archimedean exponents
  std::vector<QQ> c_values;        // non-archimedean top-end exponents
  std::vector<int> zeta_orders;    // orders of the unramified finite-order parts
  int max_length = 4;              // segment lengths 1..max_length
  int max_blocks = 2;              // products of 1..max_blocks blocks (generic sweep)
  std::vector<int> opaque_degrees; // supercuspidal degrees >= 2 (empty: none)
  bool include_ramified = true;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  /// Rationals p/den in [-bound, bound].
  static std::vector<QQ> rational_range(int bound, int den) {
    std::vector<QQ> out;
    for (int p = -bound * den; p <= bound * den; ++p) out.emplace_back(p, den);
    return out;
  }

  static GridSpec defaults(Field f) {
    GridSpec g;
    g.field = f;
    auto values = rational_range(3, 2);
    switch (f) {
      case Field::real:
        g.m_values = {0, 1, 2, 3};
        for (const auto& q : values) g.r_values.emplace_back(q);
        break;
      case Field::complex:
        g.m_values = {-3, -2, -1, 0, 1, 2, 3};
        for (const auto& q : values) g.r_values.emplace_back(q);
        break;
      case Field::nonarch:
        g.c_values = values;
        g.zeta_orders = {1, 2};
        g.opaque_degrees = {2};
        break;
    }
    return g;
  }

  void validate() const {
    auto bad = [](const char* what) { throw InvalidParameter(std::string("grid: ") + what); };
    if (max_blocks < 1) bad("max_blocks must be >= 1");
    if (field == Field::nonarch) {
      if (c_values.empty()) bad("c-values must be nonempty");
      if (zeta_orders.empty() && !include_ramified && opaque_degrees.empty()) bad("no cuspidal family selected");
      if (max_length < 1) bad("max_length must be >= 1");
      for (int k : zeta_orders)
        if (k < 1) bad("zeta orders must be >= 1");
      for (int d : opaque_degrees)
        if (d < 2) bad("opaque degrees must be >= 2");
    } else {
      if (m_values.empty()) bad("m-range must be nonempty");
      if (r_values.empty()) bad("r-values must be nonempty");
    }
  }
};

namespace detail {
template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
}  // namespace detail

/// Every canonical block of the grid exactly once, ordered by
/// (variant, m, r or c, zeta, length).
inline std::vector<Block> enumerate_blocks(const GridSpec& g) {
  g.validate();
  std::vector<Block> out;
  const auto ms = detail::sorted_unique(g.m_values);
  const auto rs = detail::sorted_unique(g.r_values);
  const auto cs = detail::sorted_unique(g.c_values);
  switch (g.field) {
    case Field::real:
      for (int m : ms)
        if (m == 0 || m == 1)
          for (const auto& r : rs) out.push_back(ArchChar{Field::real, m, r});
      for (int m : ms)
        if (m >= 1)
          for (const auto& r : rs) out.push_back(ArchInduced{m, r});
      break;
    case Field::complex:
      for (int m : ms)
        for (const auto& r : rs) out.push_back(ArchChar{Field::complex, m, r});
      break;
    case Field::nonarch: {
      std::vector<RootOfUnity> zetas;
      for (int k : detail::sorted_unique(g.zeta_orders))
        for (int j = 0; j < k; ++j)
          if (RootOfUnity(k, j).order() == k) zetas.emplace_back(k, j);
      for (const auto& c : cs)
        for (const auto& z : zetas)
          for (int len = 1; len <= g.max_length; ++len) out.push_back(Segment{Unramified{c, z}, len});
      if (g.include_ramified)
        for (const auto& c : cs)
          for (int len = 1; len <= g.max_length; ++len) out.push_back(Segment{Ramified{c}, len});
      for (int d : detail::sorted_unique(g.opaque_degrees))
        for (const auto& c : cs)
          for (int len = 1; len <= g.max_length; ++len) out.push_back(Segment{Opaque{d, c}, len});
      break;
    }
  }
  return out;
}

struct Counterexample {
  std::vector<std::string> blocks;  // surface syntax, parseable
  std::vector<PoleReport> reports;
  std::string note;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepReport {
  std::string property;
  GridSpec grid;
  Mutation mutation = Mutation::none;
  long long cases = 0;
  long long degraded_cases = 0;
  std::vector<Counterexample> counterexamples;
  double wall_time_s = 0;

  bool passed() const { return counterexamples.empty(); }
  std::string verdict() const { return passed() ? "PASS" : "FAIL"; }

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

struct SweepOptions {
  Mutation mutation = Mutation::none;
  unsigned workers = 0;  // 0: hardware concurrency
};

namespace detail {

struct Partial {
  long long cases = 0;
  long long degraded = 0;
  std::vector<Counterexample> found;
};

/// Runs check(i, partial) for i in [0, n) on contiguous chunks and merges the
/// chunks in index order, so the result does not depend on the worker count.
inline Partial run_chunked(std::size_t n, unsigned workers, const std::function<void(std::size_t, Partial&)>& check) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) check(i, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  Partial total;
  for (auto& p : parts) {
    total.cases += p.cases;
    total.degraded += p.degraded;
    std::move(p.found.begin(), p.found.end(), std::back_inserter(total.found));
  }
  return total;
}

inline SweepReport finish(std::string property, const GridSpec& g, const SweepOptions& opt, Partial&& p,
                          std::chrono::steady_clock::time_point start) {
  SweepReport r;
  r.property = std::move(property);
  r.grid = g;
  r.mutation = opt.mutation;
  r.cases = p.cases;
  r.degraded_cases = p.degraded;
  r.counterexamples = std::move(p.found);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// Both L(s, b1) and L(s, b2) singular at 1/2 must force a pole of
/// L(s, b1 x b2) at s = 1. Checked over all ordered pairs of grid blocks.
inline SweepReport verify_pat1(const GridSpec& g, const SweepOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto blocks = enumerate_blocks(g);
  const std::size_t n = blocks.size();
  const Mutation rule = opt.mutation;
  const QQ one(1);
  auto p = detail::run_chunked(n * n, opt.workers, [&](std::size_t idx, detail::Partial& part) {
    const Block& b1 = blocks[idx / n];
    const Block& b2 = blocks[idx % n];
    ++part.cases;
    if (is_opaque(b1) || is_opaque(b2)) ++part.degraded;
    PoleReport p1 = pole_order(gj_lfactor(b1), one_half(), rule);
    PoleReport p2 = pole_order(gj_lfactor(b2), one_half(), rule);
    if (p1.order == 0 || p2.order == 0) return;
    PoleReport rs = pole_order(rs_lfactor(b1, b2, rule), one, rule);
    if (rs.order >= 1) return;
    part.found.push_back({{format(b1), format(b2)},
                          {p1, p2, rs},
                          "L(s,b1) and L(s,b2) have poles at 1/2 but L(s,b1 x b2) is regular at 1"});
  });
  return detail::finish("pat1", g, opt, std::move(p), start);
}

/// For every irreducible product of 1..max_blocks grid blocks, L(s, sigma) and
/// L(s, sigma^vee) must not both have a pole at 1/2. Products are enumerated
/// as non-decreasing index tuples: the L-factors and the pairwise
/// irreducibility test do not depend on block order.
inline SweepReport verify_generic(const GridSpec& g, const SweepOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto blocks = enumerate_blocks(g);
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (!cur.empty()) tuples.push_back(cur);
    if (cur.size() == static_cast<std::size_t>(g.max_blocks)) return;
    for (std::size_t i = from; i < blocks.size(); ++i) {
      cur.push_back(i);
      extend(i);
      cur.pop_back();
    }
  };
  extend(0);
  std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  const Mutation rule = opt.mutation;
  auto p = detail::run_chunked(tuples.size(), opt.workers, [&](std::size_t idx, detail::Partial& part) {
    std::vector<Block> bs;
    for (std::size_t i : tuples[idx]) bs.push_back(blocks[i]);
    RepProduct rho(std::move(bs));
    ++part.cases;
    if (rho.has_opaque()) ++part.degraded;
    if (!is_irreducible_product(rho, rule).value) return;
    PoleReport sigma = has_pole_at_half(rho, rule);
    if (sigma.order == 0) return;
    PoleReport dual_side = has_pole_at_half(dual(rho, rule), rule);
    if (dual_side.order == 0) return;
    std::vector<std::string> names;
    for (const auto& b : rho.blocks()) names.push_back(format(b));
    part.found.push_back({std::move(names),
                          {sigma, dual_side},
                          "irreducible product with poles at 1/2 on both sigma and dual sides"});
  });
  return detail::finish("generic", g, opt, std::move(p), start);
}

/// Rational test points p/q with q <= 4 in (0, 5].
inline std::vector<QQ> positive_test_points() {
  std::vector<QQ> pts;
  for (int q = 1; q <= 4; ++q)
    for (int p = 1; p <= 5 * q; ++p) pts.emplace_back(p, q);
  return detail::sorted_unique(std::move(pts));
}

/// Unitary tempered pairs (exponent e = 0) have Rankin-Selberg factors
/// regular for Re(s) > 0; checked at positive_test_points().
inline SweepReport verify_tempered_rs(const GridSpec& g, const SweepOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Block> tempered;
  for (auto& b : enumerate_blocks(g))
    if (exponent_e(b) == 0) tempered.push_back(std::move(b));
  const std::size_t n = tempered.size();
  const auto points = positive_test_points();
  const Mutation rule = opt.mutation;
  auto p = detail::run_chunked(n * n, opt.workers, [&](std::size_t idx, detail::Partial& part) {
    const Block& b1 = tempered[idx / n];
    const Block& b2 = tempered[idx % n];
    ++part.cases;
    if (is_opaque(b1) || is_opaque(b2)) ++part.degraded;
    LFactor rs = rs_lfactor(b1, b2, rule);
    std::vector<PoleReport> bad;
    for (const auto& s0 : points)
      if (auto r = pole_order(rs, s0, rule); r.order > 0) bad.push_back(std::move(r));
    if (!bad.empty())
      part.found.push_back({{format(b1), format(b2)}, std::move(bad), "tempered pair with a pole at Re(s) > 0"});
  });
  return detail::finish("tempered-rs", g, opt, std::move(p), start);
}

}  // namespace llf
