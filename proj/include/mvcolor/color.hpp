#pragma once

// Bipolar fuzzy sets for ten RGB color properties, their four- and
// hexa-valued partitions, and two 8-parameter chromatic descriptors with an
// indeterminacy index. The descriptor has an independent closed form under
// the Lukasiewicz-Godel conjugate pair (the min/Godel family member), which
// doubles as a hand-checkable cross-validation route.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mvcolor/errors.hpp"
#include "mvcolor/partition.hpp"
#include "mvcolor/tnorm.hpp"

namespace mvcolor {

/// Normalized RGB channels, each in [0,1].
struct RgbColor {
  UnitValue r;
  UnitValue g;
  UnitValue b;
};

enum class ColorProperty {
  redness,
  greenness,
  blueness,
  yellowness,
  magentaness,
  cyanness,
  whiteness,
  blackness,
  brightness,
  darkness,
};

inline constexpr std::array<ColorProperty, 10> kAllColorProperties = {
    ColorProperty::redness,    ColorProperty::greenness,  ColorProperty::blueness,
    ColorProperty::yellowness, ColorProperty::magentaness, ColorProperty::cyanness,
    ColorProperty::whiteness,  ColorProperty::blackness,  ColorProperty::brightness,
    ColorProperty::darkness,
};

/// The six hue properties; only these have a hexa-valued decomposition
/// (their membership or non-membership combines exactly two channels).
[[nodiscard]] constexpr bool is_chromatic(ColorProperty p) noexcept {
  switch (p) {
    case ColorProperty::redness:
    case ColorProperty::greenness:
    case ColorProperty::blueness:
    case ColorProperty::yellowness:
    case ColorProperty::magentaness:
    case ColorProperty::cyanness:
      return true;
    default:
      return false;
  }
}

[[nodiscard]] constexpr const char* to_string(ColorProperty p) noexcept {
  switch (p) {
    case ColorProperty::redness:     return "redness";
    case ColorProperty::greenness:   return "greenness";
    case ColorProperty::blueness:    return "blueness";
    case ColorProperty::yellowness:  return "yellowness";
    case ColorProperty::magentaness: return "magentaness";
    case ColorProperty::cyanness:    return "cyanness";
    case ColorProperty::whiteness:   return "whiteness";
    case ColorProperty::blackness:   return "blackness";
    case ColorProperty::brightness:  return "brightness";
    case ColorProperty::darkness:    return "darkness";
  }
  return "?";
}

inline ColorProperty color_property_from_string(std::string_view name) {
  for (ColorProperty p : kAllColorProperties) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown color property \"" + std::string(name) +
                              "\" (expected redness, greenness, blueness, "
                              "yellowness, magentaness, cyanness, whiteness, "
                              "blackness, brightness or darkness)");
}

/// Membership/non-membership pair of a color property, with all channel
/// combinations evaluated at parameter p:
///
///   redness      mu = R          nu = B (+) G      (greenness, blueness alike)
///   yellowness   mu = R o G      nu = B            (magentaness, cyanness alike)
///   whiteness    mu = R o G o B  nu = 1 - mu
///   blackness    mu = 1 - R (+) G (+) B,  nu = R (+) G (+) B
///   brightness   mu = R o G o B  nu = 1 - R (+) G (+) B
///   darkness     mu and nu of brightness swapped
inline BipolarPair bfs_pair(ColorProperty prop, const RgbColor& c, const TNormParam& p) {
  const double r = c.r.value();
  const double g = c.g.value();
  const double b = c.b.value();
  using detail::tnorm_raw;
  using detail::tconorm_raw;
  switch (prop) {
    case ColorProperty::redness:
      return {c.r, UnitValue(tconorm_raw(b, g, p))};
    case ColorProperty::greenness:
      return {c.g, UnitValue(tconorm_raw(r, b, p))};
    case ColorProperty::blueness:
      return {c.b, UnitValue(tconorm_raw(r, g, p))};
    case ColorProperty::yellowness:
      return {UnitValue(tnorm_raw(r, g, p)), c.b};
    case ColorProperty::magentaness:
      return {UnitValue(tnorm_raw(r, b, p)), c.g};
    case ColorProperty::cyanness:
      return {UnitValue(tnorm_raw(b, g, p)), c.r};
    case ColorProperty::whiteness: {
      const double all = detail::tnorm3_raw(r, g, b, p);
      return {UnitValue(all), UnitValue(1.0 - all)};
    }
    case ColorProperty::blackness: {
      const double any = detail::tconorm3_raw(r, g, b, p);
      return {UnitValue(1.0 - any), UnitValue(any)};
    }
    case ColorProperty::brightness: {
      const double all = detail::tnorm3_raw(r, g, b, p);
      const double any = detail::tconorm3_raw(r, g, b, p);
      return {UnitValue(all), UnitValue(1.0 - any)};
    }
    case ColorProperty::darkness: {
      const double all = detail::tnorm3_raw(r, g, b, p);
      const double any = detail::tconorm3_raw(r, g, b, p);
      return {UnitValue(1.0 - any), UnitValue(all)};
    }
  }
  throw std::logic_error("bfs_pair: unknown property");
}

/// Four-valued partition of a color property.
inline FourPartition four_valued(ColorProperty prop, const RgbColor& c,
                                 const TNormParam& p) {
  return four_partition(bfs_pair(prop, c, p), p);
}

/// Hexa-valued partition of a chromatic property. The primary hues split
/// their non-membership disjunctively over the other two channels, the
/// secondary hues split their membership conjunctively over their two
/// defining channels. Achromatic properties have no such split.
inline HexaPartition hexa_valued(ColorProperty prop, const RgbColor& c,
                                 const TNormParam& p) {
  switch (prop) {
    case ColorProperty::redness:
      return hexa_from_disjunctive_nu(c.r, c.b, c.g, p);
    case ColorProperty::greenness:
      return hexa_from_disjunctive_nu(c.g, c.r, c.b, p);
    case ColorProperty::blueness:
      return hexa_from_disjunctive_nu(c.b, c.r, c.g, p);
    case ColorProperty::yellowness:
      return hexa_from_conjunctive_mu(c.r, c.g, c.b, p);
    case ColorProperty::magentaness:
      return hexa_from_conjunctive_mu(c.r, c.b, c.g, p);
    case ColorProperty::cyanness:
      return hexa_from_conjunctive_mu(c.b, c.g, c.r, p);
    default:
      throw unsupported_property_error(
          std::string(to_string(prop)) +
          " has no hexa-valued decomposition (only the six chromatic "
          "properties split into two channels)");
  }
}

enum class DescriptorKind { wk, hl };

[[nodiscard]] constexpr const char* to_string(DescriptorKind k) noexcept {
  return k == DescriptorKind::wk ? "wk" : "hl";
}

/// Component labels in storage order: the six hues, then white/black or
/// high/low (brightness/darkness truth).
[[nodiscard]] constexpr std::array<const char*, 8> descriptor_labels(DescriptorKind k) noexcept {
  if (k == DescriptorKind::wk) {
    return {"tau_R", "tau_Y", "tau_G", "tau_C", "tau_B", "tau_M", "tau_W", "tau_K"};
  }
  return {"tau_R", "tau_Y", "tau_G", "tau_C", "tau_B", "tau_M", "tau_H", "tau_L"};
}

[[nodiscard]] constexpr const char* index_label(DescriptorKind k) noexcept {
  return k == DescriptorKind::wk ? "i_wk" : "i_hl";
}

/// Eight chromatic truth components plus the indeterminacy index
/// (one minus their sum).
struct Descriptor {
  DescriptorKind kind = DescriptorKind::wk;
  std::array<double, 8> components{};  // tau_R, tau_Y, tau_G, tau_C, tau_B, tau_M, then W/K or H/L
  double index = 1.0;
};

namespace detail {

inline constexpr std::array<ColorProperty, 6> kChromaticOrder = {
    ColorProperty::redness,  ColorProperty::yellowness, ColorProperty::greenness,
    ColorProperty::cyanness, ColorProperty::blueness,   ColorProperty::magentaness,
};

}  // namespace detail

/// Descriptor via the partition pipeline: each component is the truth index
/// of the corresponding property's four-valued partition; index = 1 - sum.
inline Descriptor descriptor(DescriptorKind kind, const RgbColor& c, const TNormParam& p) {
  Descriptor d;
  d.kind = kind;
  for (std::size_t i = 0; i < detail::kChromaticOrder.size(); ++i) {
    d.components[i] = four_valued(detail::kChromaticOrder[i], c, p).truth.value();
  }
  const bool wk = kind == DescriptorKind::wk;
  d.components[6] =
      four_valued(wk ? ColorProperty::whiteness : ColorProperty::brightness, c, p)
          .truth.value();
  d.components[7] =
      four_valued(wk ? ColorProperty::blackness : ColorProperty::darkness, c, p)
          .truth.value();
  double total = 0.0;
  for (double v : d.components) total += v;
  d.index = 1.0 - total;
  return d;
}

/// Closed-form descriptor under the Lukasiewicz-Godel pair (min/Godel
/// member). An independent code path from descriptor(); the two agree at
/// that parameter to ~1e-15 and the test suite holds them to 1e-12.
inline Descriptor descriptor_closed_form(DescriptorKind kind, const RgbColor& c) {
  const double r = c.r.value();
  const double g = c.g.value();
  const double b = c.b.value();
  const double lo = std::min({r, g, b});
  const double hi = std::max({r, g, b});

  Descriptor d;
  d.kind = kind;
  d.components[0] = positive_part(r - std::max(b, g));       // tau_R
  d.components[1] = positive_part(std::min(r, g) - b);       // tau_Y
  d.components[2] = positive_part(g - std::max(b, r));       // tau_G
  d.components[3] = positive_part(std::min(g, b) - r);       // tau_C
  d.components[4] = positive_part(b - std::max(r, g));       // tau_B
  d.components[5] = positive_part(std::min(r, b) - g);       // tau_M
  if (kind == DescriptorKind::wk) {
    d.components[6] = positive_part(2.0 * lo - 1.0);         // tau_W
    d.components[7] = positive_part(1.0 - 2.0 * hi);         // tau_K
    d.index = 1.0 - std::abs(lo - 0.5) - std::abs(hi - 0.5);
  } else {
    d.components[6] = positive_part(lo + hi - 1.0);          // tau_H
    d.components[7] = positive_part(1.0 - lo - hi);          // tau_L
    d.index = 1.0 - hi + lo - std::abs(lo + hi - 1.0);
  }
  return d;
}

}  // namespace mvcolor
