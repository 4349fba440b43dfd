#pragma once

// Floating-point evaluation of L-factor atoms and the GL_1(R) zeta integral.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "llf/lfactor.hpp"

namespace llf::numeric {

using cplx = std::complex<double>;

inline constexpr double pole_guard = 1e-8;

inline void require_finite(const cplx& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidParameter(std::string(what) + " must be finite");
}

inline cplx to_complex(const CQ& z) { return {to_double(z.re), to_double(z.im)}; }

/// Complex Gamma by the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula for Re(z) < 1/2. Relative error is about 1e-15 for
/// |Im z| <= 5 away from the poles.
inline cplx gamma(cplx z) {
  using std::numbers::pi;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  z -= 1.0;
  cplx x = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) x += p[i] / (z + static_cast<double>(i));
  const cplx t = z + g + 0.5;
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

namespace detail {

/// Distance from u to the nearest point of {0, -step, -2 step, ...}.
inline double lattice_distance(cplx u, double step) {
  double k = std::round(-u.real() / step);
  if (k < 0) k = 0;
  return std::abs(u + k * step);
}

/// Distance from s to the nearest pole of (1 - zeta q^{-(s+c)})^{-1}.
inline double euler_pole_distance(cplx s, double c, const RootOfUnity& zeta, double q) {
  using std::numbers::pi;
  const cplx u = s + c;
  const double period = 2.0 * pi / std::log(q);
  const double t = u.imag() / period - static_cast<double>(zeta.index()) / static_cast<double>(zeta.order());
  const double frac = t - std::round(t);
  return std::hypot(u.real(), frac * period);
}

}  // namespace detail

/// Value of the atom at s. Euler atoms need a concrete residue field size q > 1.
inline cplx eval_atom(const Atom& atom, cplx s, double q = 0.0) {
  using std::numbers::pi;
  require_finite(s, "s");
  cplx out;
  if (auto* g = std::get_if<GammaR>(&atom)) {
    const cplx u = s + to_complex(g->mu);
    if (detail::lattice_distance(u, 2.0) < pole_guard) throw NearPole("Gamma_R atom evaluated at a pole");
    out = std::pow(pi, -u / 2.0) * gamma(u / 2.0);
  } else if (auto* g = std::get_if<GammaC>(&atom)) {
    const cplx u = s + to_complex(g->mu);
    if (detail::lattice_distance(u, 1.0) < pole_guard) throw NearPole("Gamma_C atom evaluated at a pole");
    out = 2.0 * std::pow(2.0 * pi, -u) * gamma(u);
  } else {
    const auto& e = std::get<Euler>(atom);
    if (!(q > 1.0) || !std::isfinite(q)) throw InvalidParameter("Euler atoms need q > 1");
    const double c = to_double(e.c);
    if (detail::euler_pole_distance(s, c, e.zeta, q) < pole_guard) throw NearPole("Euler atom evaluated at a pole");
    const cplx zeta = std::polar(1.0, 2.0 * pi * static_cast<double>(e.zeta.index()) / static_cast<double>(e.zeta.order()));
    out = 1.0 / (1.0 - zeta * std::pow(q, -(s + c)));
  }
  require_finite(out, "atom value");
  return out;
}

inline cplx eval_lfactor(const LFactor& l, cplx s, double q = 0.0) {
  cplx out = 1.0;
  for (const auto& [atom, k] : l.terms()) out *= std::pow(eval_atom(atom, s, q), k);
  return out;
}

/// Radical inverse of i in the given base (van der Corput).
inline double radical_inverse(unsigned i, unsigned base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

/// Deterministic Halton points in [0.2, 3] x [-2, 2] i.
inline std::vector<cplx> duplication_points(int count) {
  std::vector<cplx> pts;
  for (int i = 1; i <= count; ++i)
    pts.emplace_back(0.2 + 2.8 * radical_inverse(i, 2), -2.0 + 4.0 * radical_inverse(i, 3));
  return pts;
}

/// Relative defect of Gamma_C(s) = Gamma_R(s) Gamma_R(s+1) at one point.
inline double duplication_error(cplx s) {
  const cplx lhs = eval_atom(GammaC{}, s);
  const cplx rhs = eval_atom(GammaR{}, s) * eval_atom(GammaR{CQ{1}}, s);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

/// Maximum duplication defect over duplication_points(samples).
inline double check_duplication(int samples) {
  if (samples < 1) throw InvalidParameter("duplication check needs at least one sample");
  double worst = 0.0;
  for (const auto& s : duplication_points(samples)) worst = std::max(worst, duplication_error(s));
  return worst;
}

enum class QuadratureScheme {
  log_simpson,  // composite Simpson in t = log x on [log epsilon, log cutoff]
};

struct QuadratureSpec {
  double cutoff = 6.0;
  int nodes = 20000;
  double epsilon = 1e-12;
  QuadratureScheme scheme = QuadratureScheme::log_simpson;
};

/// Z(s) = int_{R^x} x^m e^{-pi x^2} sgn(x)^m |x|^s dx/|x|, m in {0,1}, Re(s) > 0.
/// The integrand is even, so Z = 2 int_0^oo x^{m+s-1} e^{-pi x^2} dx. The piece
/// on [0, epsilon] is taken as epsilon^{m+s}/(m+s) (e^{-pi x^2} = 1 to O(epsilon^2)),
/// the piece beyond the cutoff is dropped.
inline cplx tate_integral(int m, cplx s, const QuadratureSpec& spec = {}) {
  using std::numbers::pi;
  require_finite(s, "s");
  if (m != 0 && m != 1) throw InvalidParameter("tate integral needs m in {0,1}");
  if (!(s.real() > 0.0)) throw OutOfDomain("zeta integral diverges for Re(s) <= 0");
  if (!(spec.cutoff > spec.epsilon) || !(spec.epsilon > 0.0) || spec.nodes < 2)
    throw InvalidParameter("quadrature spec needs 0 < epsilon < cutoff and nodes >= 2");

  const cplx a = s + static_cast<double>(m);
  const int n = spec.nodes + (spec.nodes % 2);
  const double t0 = std::log(spec.epsilon), t1 = std::log(spec.cutoff);
  const double h = (t1 - t0) / n;
  auto f = [&](double t) { return std::exp(a * t - pi * std::exp(2.0 * t)); };
  cplx sum = f(t0) + f(t1);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(t0 + i * h);
  const cplx body = sum * (h / 3.0);
  const cplx head = std::exp(a * t0) / a;
  return 2.0 * (body + head);
}

}  // namespace llf::numeric
