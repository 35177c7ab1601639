#pragma once

// Transforms between bipolar (membership, non-membership) knowledge and
// four-valued / hexa-valued partitions of unity, built on a conjugate pair
// of Frank t-norms. Writing "o" for the base norm and "*" for its conjugate:
//
//   truth          tau    = mu * (1 - nu)
//   falsity        phi    = (1 - mu) * nu
//   contradiction  kappa  = mu o nu
//   uncertainty    pi     = (1 - mu) o (1 - nu)
//
// always sum to 1. When nu splits disjunctively (nu = nu1 (+) nu2) or mu
// splits conjunctively (mu = mu1 o mu2), truth refines into strong/weak
// membership and falsity into weak/strong non-membership, giving a
// six-component partition of unity.

#include <algorithm>
#include <cmath>
#include <string>

#include "mvcolor/errors.hpp"
#include "mvcolor/tnorm.hpp"

namespace mvcolor {

/// Positive part of x: (x + |x|)/2.
[[nodiscard]] constexpr double positive_part(double x) noexcept {
  return x > 0.0 ? x : 0.0;
}

/// Independent membership/non-membership degrees of a bipolar fuzzy set.
/// No constraint links the two.
struct BipolarPair {
  UnitValue mu;
  UnitValue nu;
};

struct FourPartition {
  UnitValue truth;          // tau
  UnitValue falsity;        // phi
  UnitValue contradiction;  // kappa
  UnitValue uncertainty;    // pi

  [[nodiscard]] double sum() const noexcept {
    return truth.value() + falsity.value() + contradiction.value() +
           uncertainty.value();
  }
};

struct HexaPartition {
  UnitValue strong_membership;     // tau
  UnitValue weak_membership;       // lambda
  UnitValue contradiction;         // kappa
  UnitValue uncertainty;           // pi
  UnitValue weak_nonmembership;    // omega
  UnitValue strong_nonmembership;  // phi

  [[nodiscard]] double sum() const noexcept {
    return strong_membership.value() + weak_membership.value() +
           contradiction.value() + uncertainty.value() +
           weak_nonmembership.value() + strong_nonmembership.value();
  }
};

namespace detail {

// Differences of nearly equal t-norm values may round just below zero;
// tolerate up to this much and treat anything worse as a broken invariant.
inline constexpr double kPartitionSlack = 1e-9;

inline double clamp_component(double v, const char* label) {
  if (v < 0.0) {
    if (v >= -kPartitionSlack) return 0.0;
    throw invariant_error(std::string(label) + " component " + std::to_string(v) +
                          " is negative beyond tolerance");
  }
  if (v > 1.0) {
    if (v <= 1.0 + kPartitionSlack) return 1.0;
    throw invariant_error(std::string(label) + " component " + std::to_string(v) +
                          " exceeds 1 beyond tolerance");
  }
  return v;
}

inline void check_unity(double sum, const char* what) {
  if (std::abs(sum - 1.0) > kPartitionSlack) {
    throw invariant_error(std::string(what) + " components sum to " +
                          std::to_string(sum) + ", expected 1");
  }
}

// Left-associated three-way chains; a fixed order keeps results reproducible.
inline double tnorm3_raw(double a, double b, double c, const TNormParam& p) {
  return tnorm_raw(tnorm_raw(a, b, p), c, p);
}
inline double tconorm3_raw(double a, double b, double c, const TNormParam& p) {
  return tconorm_raw(tconorm_raw(a, b, p), c, p);
}

}  // namespace detail

/// Decompose (mu, nu) into truth, falsity, contradiction and uncertainty.
inline FourPartition four_partition(const BipolarPair& pair, const TNormParam& p) {
  const TNormParam q = conjugate_param(p);
  const double mu = pair.mu.value();
  const double nu = pair.nu.value();
  using detail::tnorm_raw;
  const double tau   = detail::clamp_component(tnorm_raw(mu, 1.0 - nu, q), "truth");
  const double phi   = detail::clamp_component(tnorm_raw(1.0 - mu, nu, q), "falsity");
  const double kappa = detail::clamp_component(tnorm_raw(mu, nu, p), "contradiction");
  const double pi    = detail::clamp_component(tnorm_raw(1.0 - mu, 1.0 - nu, p), "uncertainty");
  detail::check_unity(tau + phi + kappa + pi, "four-valued partition");
  return {UnitValue(tau), UnitValue(phi), UnitValue(kappa), UnitValue(pi)};
}

/// Recover (mu, nu) from a four-valued partition:
///   mu = (1 + kappa - pi + tau - phi)/2, nu = (1 + kappa - pi - tau + phi)/2.
/// Results are clamped into [0,1]. Rejects inputs whose components sum away
/// from 1 by more than 1e-6.
inline BipolarPair four_inverse(const FourPartition& fp) {
  constexpr double kSumTolerance = 1e-6;
  const double total = fp.sum();
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw std::invalid_argument("four_inverse: components sum to " +
                                std::to_string(total) +
                                ", expected 1 within 1e-6");
  }
  const double tau = fp.truth.value();
  const double phi = fp.falsity.value();
  const double kappa = fp.contradiction.value();
  const double pi = fp.uncertainty.value();
  const double mu = (1.0 + kappa - pi + tau - phi) / 2.0;
  const double nu = (1.0 + kappa - pi - tau + phi) / 2.0;
  return {UnitValue(std::clamp(mu, 0.0, 1.0)), UnitValue(std::clamp(nu, 0.0, 1.0))};
}

/// Hexa-valued decomposition for non-membership of the form nu = nu1 (+) nu2.
/// Weak membership collects truth spread over only one of the two parts;
/// weak non-membership does the same on the falsity side.
inline HexaPartition hexa_from_disjunctive_nu(UnitValue mu_in, UnitValue nu1_in,
                                              UnitValue nu2_in, const TNormParam& p) {
  const TNormParam q = conjugate_param(p);
  const double mu = mu_in.value();
  const double nu1 = nu1_in.value();
  const double nu2 = nu2_in.value();
  using detail::tnorm_raw;

  const double nu_or = detail::tconorm_raw(nu1, nu2, p);
  const double nu_and = tnorm_raw(nu1, nu2, p);

  const double kappa_raw = detail::tnorm3_raw(mu, nu1, nu2, p);
  const double tau    = detail::clamp_component(
      tnorm_raw(mu, tnorm_raw(1.0 - nu1, 1.0 - nu2, p), q), "strong membership");
  const double lambda = detail::clamp_component(
      tnorm_raw(mu, nu_or, p) - kappa_raw, "weak membership");
  const double kappa  = detail::clamp_component(kappa_raw, "contradiction");
  const double pi     = detail::clamp_component(
      detail::tnorm3_raw(1.0 - mu, 1.0 - nu1, 1.0 - nu2, p), "uncertainty");
  const double omega  = detail::clamp_component(
      tnorm_raw(1.0 - mu, nu_or, q) - tnorm_raw(1.0 - mu, nu_and, q),
      "weak non-membership");
  const double phi    = detail::clamp_component(
      tnorm_raw(1.0 - mu, nu_and, q), "strong non-membership");

  detail::check_unity(tau + lambda + kappa + pi + omega + phi, "hexa-valued partition");
  return {UnitValue(tau), UnitValue(lambda), UnitValue(kappa),
          UnitValue(pi), UnitValue(omega), UnitValue(phi)};
}

/// Hexa-valued decomposition for membership of the form mu = mu1 o mu2.
inline HexaPartition hexa_from_conjunctive_mu(UnitValue mu1_in, UnitValue mu2_in,
                                              UnitValue nu_in, const TNormParam& p) {
  const TNormParam q = conjugate_param(p);
  const double mu1 = mu1_in.value();
  const double mu2 = mu2_in.value();
  const double nu = nu_in.value();
  using detail::tnorm_raw;

  const double co_or = detail::tconorm_raw(1.0 - mu1, 1.0 - mu2, p);
  const double co_and = tnorm_raw(1.0 - mu1, 1.0 - mu2, p);
  const double pi_raw = detail::tnorm3_raw(1.0 - mu1, 1.0 - mu2, 1.0 - nu, p);

  const double tau    = detail::clamp_component(
      tnorm_raw(tnorm_raw(mu1, mu2, p), 1.0 - nu, q), "strong membership");
  const double lambda = detail::clamp_component(
      tnorm_raw(co_or, 1.0 - nu, p) - pi_raw, "weak membership");
  const double kappa  = detail::clamp_component(
      detail::tnorm3_raw(mu1, mu2, nu, p), "contradiction");
  const double pi     = detail::clamp_component(pi_raw, "uncertainty");
  const double omega  = detail::clamp_component(
      tnorm_raw(co_or, nu, q) - tnorm_raw(co_and, nu, q), "weak non-membership");
  const double phi    = detail::clamp_component(
      tnorm_raw(co_and, nu, q), "strong non-membership");

  detail::check_unity(tau + lambda + kappa + pi + omega + phi, "hexa-valued partition");
  return {UnitValue(tau), UnitValue(lambda), UnitValue(kappa),
          UnitValue(pi), UnitValue(omega), UnitValue(phi)};
}

}  // namespace mvcolor
