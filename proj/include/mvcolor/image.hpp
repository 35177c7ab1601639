#pragma once

// Per-pixel application of the color partitions and descriptors: partition
// planes, normalized fuzzy cardinalities (sigma-counts), channel histograms
// and whole-image descriptor aggregates. Pixels are independent, so the
// entry points accept a thread count; chunk boundaries are fixed by pixel
// index, independent of scheduling, and partial sums combine in chunk order,
// which keeps every output deterministic for a given thread count.

#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mvcolor/color.hpp"
#include "mvcolor/errors.hpp"
#include "mvcolor/partition.hpp"

namespace mvcolor {

/// Row-major RGB raster with normalized channels.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<RgbColor> pixels;

  [[nodiscard]] std::size_t pixel_count() const noexcept { return pixels.size(); }
};

/// Row-major raster of one partition component, labelled like "redness.tau".
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<UnitValue> values;
  std::string label;
};

enum class PartitionModel { four, hexa };

[[nodiscard]] constexpr const char* to_string(PartitionModel m) noexcept {
  return m == PartitionModel::four ? "four" : "hexa";
}

inline constexpr std::array<const char*, 4> kFourComponentNames = {
    "tau", "phi", "kappa", "pi"};
inline constexpr std::array<const char*, 6> kHexaComponentNames = {
    "tau", "lambda", "kappa", "pi", "omega", "phi"};

/// Normalized fuzzy cardinality (or mean descriptor component) per label.
struct CardinalityReport {
  std::vector<std::pair<std::string, double>> components;
  std::optional<double> index;
  std::size_t pixel_count = 0;
};

/// Per-channel counts over uniform bins on [0,1]; 1.0 lands in the last bin.
struct HistogramReport {
  int bins = 0;
  std::size_t pixel_count = 0;
  std::array<std::vector<std::uint64_t>, 3> counts;  // r, g, b
};

namespace detail {

inline void require_valid(const ImageBuffer& img, const char* op) {
  if (img.width <= 0 || img.height <= 0 || img.pixels.empty()) {
    throw std::invalid_argument(std::string(op) + ": empty image");
  }
  if (img.pixels.size() !=
      static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height)) {
    throw std::invalid_argument(std::string(op) + ": pixel count " +
                                std::to_string(img.pixels.size()) +
                                " does not match dimensions");
  }
}

/// Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  [[nodiscard]] double value() const noexcept { return sum + comp; }
};

// Fixed chunk grid so results do not depend on how chunks land on threads.
inline constexpr std::size_t kChunkPixels = std::size_t{1} << 16;

/// Runs fn(chunk_index, begin, end) over [0, n) split into fixed chunks,
/// on up to `threads` workers. Exceptions from workers are rethrown here.
template <typename Fn>
void for_each_chunk(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t n_chunks = (n + kChunkPixels - 1) / kChunkPixels;
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * kChunkPixels;
    const std::size_t end = std::min(n, begin + kChunkPixels);
    fn(c, begin, end);
  };
  if (threads <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
    return;
  }
  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n_workers);
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
          run_chunk(c);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace detail

/// One plane per partition component of `prop`, pixel-for-pixel equal to the
/// per-color transforms. threads = 0 picks the hardware concurrency.
inline std::vector<Plane> plane_map(const ImageBuffer& img, ColorProperty prop,
                                    PartitionModel model, const TNormParam& p,
                                    unsigned threads = 1) {
  detail::require_valid(img, "plane_map");
  if (model == PartitionModel::hexa && !is_chromatic(prop)) {
    throw unsupported_property_error(
        std::string(to_string(prop)) + " has no hexa-valued decomposition");
  }
  const std::size_t n = img.pixel_count();
  const std::size_t n_components =
      model == PartitionModel::four ? kFourComponentNames.size()
                                    : kHexaComponentNames.size();

  std::vector<Plane> planes(n_components);
  for (std::size_t k = 0; k < n_components; ++k) {
    planes[k].width = img.width;
    planes[k].height = img.height;
    planes[k].values.resize(n);
    planes[k].label = std::string(to_string(prop)) + "." +
                      (model == PartitionModel::four ? kFourComponentNames[k]
                                                     : kHexaComponentNames[k]);
  }

  detail::for_each_chunk(n, detail::resolve_threads(threads),
                         [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (model == PartitionModel::four) {
        const FourPartition fp = four_valued(prop, img.pixels[i], p);
        planes[0].values[i] = fp.truth;
        planes[1].values[i] = fp.falsity;
        planes[2].values[i] = fp.contradiction;
        planes[3].values[i] = fp.uncertainty;
      } else {
        const HexaPartition hp = hexa_valued(prop, img.pixels[i], p);
        planes[0].values[i] = hp.strong_membership;
        planes[1].values[i] = hp.weak_membership;
        planes[2].values[i] = hp.contradiction;
        planes[3].values[i] = hp.uncertainty;
        planes[4].values[i] = hp.weak_nonmembership;
        planes[5].values[i] = hp.strong_nonmembership;
      }
    }
  });
  return planes;
}

/// Normalized sigma-count: sum of the plane's values over its pixel count.
inline double fuzzy_cardinality(const Plane& plane) {
  if (plane.values.empty()) {
    throw std::invalid_argument("fuzzy_cardinality: empty plane");
  }
  detail::CompensatedSum acc;
  for (UnitValue v : plane.values) acc.add(v.value());
  return std::clamp(acc.value() / static_cast<double>(plane.values.size()), 0.0, 1.0);
}

/// Mean of each descriptor component over all pixels, plus the mean
/// indeterminacy index; the nine values sum to 1 up to rounding.
inline CardinalityReport descriptor_aggregate(const ImageBuffer& img,
                                              DescriptorKind kind,
                                              const TNormParam& p,
                                              unsigned threads = 1) {
  detail::require_valid(img, "descriptor_aggregate");
  const std::size_t n = img.pixel_count();
  const unsigned n_threads = detail::resolve_threads(threads);

  std::array<detail::CompensatedSum, 9> totals;  // 8 components + index
  auto accumulate = [&](std::array<detail::CompensatedSum, 9>& acc,
                        std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Descriptor d = descriptor(kind, img.pixels[i], p);
      for (std::size_t k = 0; k < 8; ++k) acc[k].add(d.components[k]);
      acc[8].add(d.index);
    }
  };

  if (n_threads <= 1) {
    accumulate(totals, 0, n);
  } else {
    const std::size_t n_chunks =
        (n + detail::kChunkPixels - 1) / detail::kChunkPixels;
    std::vector<std::array<detail::CompensatedSum, 9>> partials(n_chunks);
    detail::for_each_chunk(n, n_threads,
                           [&](std::size_t c, std::size_t begin, std::size_t end) {
      accumulate(partials[c], begin, end);
    });
    for (const auto& part : partials) {      // fixed chunk order
      for (std::size_t k = 0; k < 9; ++k) totals[k].add(part[k].value());
    }
  }

  CardinalityReport report;
  report.pixel_count = n;
  const auto labels = descriptor_labels(kind);
  for (std::size_t k = 0; k < 8; ++k) {
    report.components.emplace_back(labels[k],
                                   totals[k].value() / static_cast<double>(n));
  }
  report.index = totals[8].value() / static_cast<double>(n);
  return report;
}

/// Per-channel histogram over `bins` uniform bins on [0,1].
inline HistogramReport rgb_histogram(const ImageBuffer& img, int bins) {
  if (bins < 1) {
    throw std::invalid_argument("rgb_histogram: bins must be >= 1, got " +
                                std::to_string(bins));
  }
  detail::require_valid(img, "rgb_histogram");

  HistogramReport report;
  report.bins = bins;
  report.pixel_count = img.pixel_count();
  for (auto& channel : report.counts) channel.assign(static_cast<std::size_t>(bins), 0);

  auto bin_of = [bins](double v) {
    const int idx = static_cast<int>(v * static_cast<double>(bins));
    return static_cast<std::size_t>(std::min(idx, bins - 1));
  };
  for (const RgbColor& px : img.pixels) {
    ++report.counts[0][bin_of(px.r.value())];
    ++report.counts[1][bin_of(px.g.value())];
    ++report.counts[2][bin_of(px.b.value())];
  }
  return report;
}

}  // namespace mvcolor
