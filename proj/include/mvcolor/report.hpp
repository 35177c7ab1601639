#pragma once

// JSON report objects. Every report is self-contained: schema_version,
// image dimensions, the t-norm it was computed with, then its payload.
// Insertion order is preserved so identical inputs serialize identically.

#include <string>

#include <json.hpp>

#include "mvcolor/color.hpp"
#include "mvcolor/image.hpp"
#include "mvcolor/partition.hpp"
#include "mvcolor/tnorm.hpp"

namespace mvcolor {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline ordered_json tnorm_json(const TNormParam& p) {
  ordered_json j;
  j["kind"] = to_string(p.kind());
  if (p.is_frank()) j["s"] = p.frank_s();
  return j;
}

inline ordered_json image_json(const ImageBuffer& img) {
  return {{"width", img.width}, {"height", img.height}};
}

inline ordered_json bfs_json(const BipolarPair& pair) {
  return {{"mu", pair.mu.value()}, {"nu", pair.nu.value()}};
}

inline ordered_json four_json(const FourPartition& fp) {
  return {{"tau", fp.truth.value()},
          {"phi", fp.falsity.value()},
          {"kappa", fp.contradiction.value()},
          {"pi", fp.uncertainty.value()}};
}

inline ordered_json hexa_json(const HexaPartition& hp) {
  return {{"tau", hp.strong_membership.value()},
          {"lambda", hp.weak_membership.value()},
          {"kappa", hp.contradiction.value()},
          {"pi", hp.uncertainty.value()},
          {"omega", hp.weak_nonmembership.value()},
          {"phi", hp.strong_nonmembership.value()}};
}

inline ordered_json descriptor_json(const Descriptor& d) {
  ordered_json comps;
  const auto labels = descriptor_labels(d.kind);
  for (std::size_t k = 0; k < labels.size(); ++k) comps[labels[k]] = d.components[k];
  return {{"kind", to_string(d.kind)}, {"components", std::move(comps)}, {"index", d.index}};
}

/// Cardinality report of one property's partition planes.
inline ordered_json partition_cardinality_report_json(
    const ImageBuffer& img, const TNormParam& p, ColorProperty prop,
    PartitionModel model, const CardinalityReport& report) {
  ordered_json comps;
  for (const auto& [label, value] : report.components) comps[label] = value;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["image"] = image_json(img);
  j["tnorm"] = tnorm_json(p);
  j["property"] = to_string(prop);
  j["model"] = to_string(model);
  j["components"] = std::move(comps);
  j["normalized"] = true;
  j["pixel_count"] = report.pixel_count;
  return j;
}

/// Whole-image mean of a descriptor (components and index).
inline ordered_json descriptor_aggregate_report_json(const ImageBuffer& img,
                                                     const TNormParam& p,
                                                     DescriptorKind kind,
                                                     const CardinalityReport& report) {
  ordered_json comps;
  for (const auto& [label, value] : report.components) comps[label] = value;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["image"] = image_json(img);
  j["tnorm"] = tnorm_json(p);
  j["kind"] = to_string(kind);
  j["components"] = std::move(comps);
  j["index"] = report.index.value_or(0.0);
  j["normalized"] = true;
  j["pixel_count"] = report.pixel_count;
  return j;
}

inline ordered_json histogram_report_json(const ImageBuffer& img, const TNormParam& p,
                                          const HistogramReport& report) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["image"] = image_json(img);
  j["tnorm"] = tnorm_json(p);
  j["kind"] = "rgb_histogram";
  j["bins"] = report.bins;
  j["counts"] = {{"r", report.counts[0]}, {"g", report.counts[1]}, {"b", report.counts[2]}};
  j["pixel_count"] = report.pixel_count;
  return j;
}

}  // namespace mvcolor
