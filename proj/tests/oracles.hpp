#pragma once

// Independent reference routes used only by the tests. The naive Frank
// evaluation transcribes the defining formula with pow/log and no numerical
// hardening; the explicit color partitions transcribe the per-channel
// formulas instead of going through the generic (mu, nu) pipeline.

#include <cmath>

#include "mvcolor/color.hpp"
#include "mvcolor/partition.hpp"
#include "mvcolor/tnorm.hpp"

namespace oracles {

/// Textbook Frank t-norm: log_s(1 + (s^x - 1)(s^y - 1)/(s - 1)).
/// Accurate enough away from s = 1; useless inside the product band.
inline double naive_frank(double x, double y, double s) {
  return std::log(1.0 + (std::pow(s, x) - 1.0) * (std::pow(s, y) - 1.0) / (s - 1.0)) /
         std::log(s);
}

inline double t(double x, double y, const mvcolor::TNormParam& p) {
  return mvcolor::tnorm(mvcolor::UnitValue(x), mvcolor::UnitValue(y), p).value();
}
inline double s(double x, double y, const mvcolor::TNormParam& p) {
  return mvcolor::tconorm(mvcolor::UnitValue(x), mvcolor::UnitValue(y), p).value();
}
/// Conjugate via the subtraction identity x * y = x - x o (1 - y); an
/// algebraic route independent of the reciprocal-parameter implementation.
inline double conj_via_subtraction(double x, double y, const mvcolor::TNormParam& p) {
  return x - t(x, 1.0 - y, p);
}
inline double conj(double x, double y, const mvcolor::TNormParam& p) {
  return mvcolor::conjugate_tnorm(mvcolor::UnitValue(x), mvcolor::UnitValue(y), p).value();
}

struct FourIndices {
  double tau, phi, kappa, pi;
};

/// Explicit redness partition:
///   tau = R * (B' o G'), phi = R' * (B (+) G),
///   kappa = R o (B (+) G), pi = R' o B' o G'.
inline FourIndices redness_explicit(double r, double g, double b,
                                    const mvcolor::TNormParam& p) {
  return {
      conj(r, t(1.0 - b, 1.0 - g, p), p),
      conj(1.0 - r, s(b, g, p), p),
      t(r, s(b, g, p), p),
      t(t(1.0 - r, 1.0 - b, p), 1.0 - g, p),
  };
}

/// Explicit yellowness partition:
///   tau = (R o G) * B', phi = (R' (+) G') * B,
///   kappa = R o G o B, pi = (R' (+) G') o B'.
inline FourIndices yellowness_explicit(double r, double g, double b,
                                       const mvcolor::TNormParam& p) {
  return {
      conj(t(r, g, p), 1.0 - b, p),
      conj(s(1.0 - r, 1.0 - g, p), b, p),
      t(t(r, g, p), b, p),
      t(s(1.0 - r, 1.0 - g, p), 1.0 - b, p),
  };
}

/// Explicit whiteness partition, with w = R o G o B and its complement
/// expressed through the conorm of the negated channels:
///   tau = w * w, phi = wn * wn, kappa = w o wn, pi = wn o w.
inline FourIndices whiteness_explicit(double r, double g, double b,
                                      const mvcolor::TNormParam& p) {
  const double w = t(t(r, g, p), b, p);
  const double wn = s(s(1.0 - r, 1.0 - g, p), 1.0 - b, p);
  return {
      conj(w, w, p),
      conj(wn, wn, p),
      t(w, wn, p),
      t(wn, w, p),
  };
}

/// Explicit blackness partition, the complement roles of whiteness:
///   k = R' o G' o B', kn = R (+) G (+) B,
///   tau = k * k, phi = kn * kn, kappa = k o kn, pi = kn o k.
inline FourIndices blackness_explicit(double r, double g, double b,
                                      const mvcolor::TNormParam& p) {
  const double k = t(t(1.0 - r, 1.0 - g, p), 1.0 - b, p);
  const double kn = s(s(r, g, p), b, p);
  return {
      conj(k, k, p),
      conj(kn, kn, p),
      t(k, kn, p),
      t(kn, k, p),
  };
}

}  // namespace oracles
