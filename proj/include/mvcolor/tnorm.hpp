#pragma once

// Frank t-norm family with its t-conorm, standard negation and conjugate
// norm. The family interpolates between three limit logics:
//
//   s -> 0    min / max            (Godel)
//   s -> 1    product
//   s -> inf  max(0, x + y - 1)    (Lukasiewicz)
//
// Interior members evaluate
//
//   t_s(x, y) = log_s(1 + (s^x - 1)(s^y - 1) / (s - 1))
//
// through expm1/log1p so the value stays accurate next to the limit
// parameters, where the textbook expression cancels catastrophically.

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

#include "mvcolor/errors.hpp"

namespace mvcolor {

/// A degree in [0,1]. Construction clamps values within 1e-12 of the
/// interval back onto the boundary and rejects anything farther out.
class UnitValue {
 public:
  static constexpr double kClampBand = 1e-12;

  constexpr UnitValue() noexcept = default;
  explicit UnitValue(double v) : v_(checked(v)) {}

  [[nodiscard]] constexpr double value() const noexcept { return v_; }

  friend constexpr bool operator==(UnitValue, UnitValue) noexcept = default;
  friend constexpr auto operator<=>(UnitValue, UnitValue) noexcept = default;

 private:
  static double checked(double v) {
    if (std::isnan(v)) {
      throw std::invalid_argument("UnitValue: NaN is not a degree");
    }
    if (v < 0.0) {
      if (v >= -kClampBand) return 0.0;
      throw std::invalid_argument("UnitValue: " + std::to_string(v) +
                                  " is below [0,1]");
    }
    if (v > 1.0) {
      if (v <= 1.0 + kClampBand) return 1.0;
      throw std::invalid_argument("UnitValue: " + std::to_string(v) +
                                  " is above [0,1]");
    }
    return v;
  }

  double v_ = 0.0;
};

enum class TNormKind { min_godel, product, lukasiewicz, frank };

[[nodiscard]] constexpr const char* to_string(TNormKind k) noexcept {
  switch (k) {
    case TNormKind::min_godel:   return "min";
    case TNormKind::product:     return "product";
    case TNormKind::lukasiewicz: return "lukasiewicz";
    case TNormKind::frank:       return "frank";
  }
  return "?";
}

/// Selects a member of the Frank family. The three limit logics are explicit
/// members; frank(s) snaps parameters close to a limit onto that limit:
/// s < 1e-9 becomes min/Godel, |s - 1| < 1e-6 product, s > 1e9 Lukasiewicz.
class TNormParam {
 public:
  static constexpr double kMinGodelThreshold = 1e-9;
  static constexpr double kProductBand = 1e-6;
  static constexpr double kLukasiewiczThreshold = 1e9;

  static constexpr TNormParam min_godel() noexcept {
    return {TNormKind::min_godel, 0.0, -std::numeric_limits<double>::infinity()};
  }
  static constexpr TNormParam product() noexcept {
    return {TNormKind::product, 1.0, 0.0};
  }
  static constexpr TNormParam lukasiewicz() noexcept {
    return {TNormKind::lukasiewicz, std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
  static TNormParam frank(double s) {
    if (std::isnan(s) || s < 0.0) {
      throw std::invalid_argument("TNormParam: Frank parameter must be >= 0, got " +
                                  std::to_string(s));
    }
    if (s < kMinGodelThreshold) return min_godel();
    if (std::abs(s - 1.0) < kProductBand) return product();
    if (s > kLukasiewiczThreshold) return lukasiewicz();
    return {TNormKind::frank, s, std::log(s)};
  }

  [[nodiscard]] constexpr TNormKind kind() const noexcept { return kind_; }
  [[nodiscard]] constexpr bool is_frank() const noexcept {
    return kind_ == TNormKind::frank;
  }

  /// The parameter s of an interior family member.
  [[nodiscard]] double frank_s() const {
    require_frank();
    return s_;
  }
  /// ln(s), precomputed at construction.
  [[nodiscard]] double frank_log_s() const {
    require_frank();
    return log_s_;
  }

  friend constexpr bool operator==(const TNormParam&, const TNormParam&) noexcept = default;

 private:
  constexpr TNormParam(TNormKind k, double s, double log_s) noexcept
      : kind_(k), s_(s), log_s_(log_s) {}

  // Interior member without limit snapping. The conjugate of an interior
  // member must stay interior at exactly 1/s: for s just outside the product
  // band, 1/s can land inside it, and snapping there would silently pair two
  // different family members and break the conjugation identities.
  static TNormParam frank_interior(double s) {
    return {TNormKind::frank, s, std::log(s)};
  }
  friend TNormParam conjugate_param(const TNormParam& p);

  void require_frank() const {
    if (kind_ != TNormKind::frank) {
      throw std::logic_error("TNormParam: limit member has no finite Frank parameter");
    }
  }

  TNormKind kind_ = TNormKind::min_godel;
  double s_ = 0.0;
  double log_s_ = -std::numeric_limits<double>::infinity();
};

namespace detail {

/// Kernel on raw doubles; callers guarantee x, y in [0,1].
inline double tnorm_raw(double x, double y, const TNormParam& p) {
  // Boundary shortcuts keep the identity and the annihilator exact in
  // every branch (x + 1 - 1 need not round back to x).
  if (x == 0.0 || y == 0.0) return 0.0;
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  switch (p.kind()) {
    case TNormKind::min_godel:   return std::min(x, y);
    case TNormKind::product:     return x * y;
    case TNormKind::lukasiewicz: return std::max(0.0, x + y - 1.0);
    case TNormKind::frank:       break;
  }
  const double log_s = p.frank_log_s();
  const double u = std::expm1(x * log_s) * std::expm1(y * log_s) / std::expm1(log_s);
  return std::clamp(std::log1p(u) / log_s, 0.0, 1.0);
}

inline double tconorm_raw(double x, double y, const TNormParam& p) {
  return 1.0 - tnorm_raw(1.0 - x, 1.0 - y, p);
}

}  // namespace detail

/// t_p(x, y): fuzzy conjunction.
inline UnitValue tnorm(UnitValue x, UnitValue y, const TNormParam& p) {
  return UnitValue(detail::tnorm_raw(x.value(), y.value(), p));
}

/// Dual t-conorm 1 - t_p(1-x, 1-y): fuzzy disjunction.
inline UnitValue tconorm(UnitValue x, UnitValue y, const TNormParam& p) {
  return UnitValue(detail::tconorm_raw(x.value(), y.value(), p));
}

/// Standard negation 1 - x.
inline UnitValue negate(UnitValue x) {
  return UnitValue(1.0 - x.value());
}

/// Parameter of the conjugate norm: s maps to 1/s, so the Godel and
/// Lukasiewicz limits swap and product is self-conjugate.
inline TNormParam conjugate_param(const TNormParam& p) {
  switch (p.kind()) {
    case TNormKind::min_godel:   return TNormParam::lukasiewicz();
    case TNormKind::product:     return TNormParam::product();
    case TNormKind::lukasiewicz: return TNormParam::min_godel();
    case TNormKind::frank:       return TNormParam::frank_interior(1.0 / p.frank_s());
  }
  throw std::logic_error("TNormParam: unknown kind");
}

/// The conjugate norm of t_p, i.e. the family member at parameter 1/s. The
/// pair satisfies x = conjugate_tnorm(x, a, p) + tnorm(x, b, p) for a + b = 1.
inline UnitValue conjugate_tnorm(UnitValue x, UnitValue y, const TNormParam& p) {
  return tnorm(x, y, conjugate_param(p));
}

}  // namespace mvcolor
