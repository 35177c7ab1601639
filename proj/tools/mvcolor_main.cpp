// Command-line front end: per-color analysis, per-image partition planes,
// and image reports (histogram + descriptor aggregates).
//
// Exit codes: 0 success, 1 internal invariant violation, 2 usage/input error.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvcolor/mvcolor.hpp"

namespace fs = std::filesystem;
using mvcolor::ordered_json;

namespace {

mvcolor::TNormParam parse_tnorm(const std::string& selector) {
  if (selector == "min") return mvcolor::TNormParam::min_godel();
  if (selector == "product") return mvcolor::TNormParam::product();
  if (selector == "lukasiewicz") return mvcolor::TNormParam::lukasiewicz();
  if (selector.rfind("frank:", 0) == 0) {
    const std::string arg = selector.substr(6);
    try {
      std::size_t used = 0;
      const double s = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return mvcolor::TNormParam::frank(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("--tnorm: \"" + arg +
                                  "\" is not a valid Frank parameter");
    }
  }
  throw std::invalid_argument(
      "--tnorm: \"" + selector + "\" is not one of min|product|lukasiewicz|frank:<s>");
}

std::vector<unsigned char> read_image_bytes(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open image file \"" + path + "\"");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open \"" + path.string() + "\" for writing");
  }
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) {
    throw std::invalid_argument("failed writing \"" + path.string() + "\"");
  }
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

struct AnalyzeOptions {
  double r = 0, g = 0, b = 0;
  std::string property = "all";
  std::string model = "four";
  std::string descriptor = "both";
  std::string tnorm = "min";
};

ordered_json property_entry(mvcolor::ColorProperty prop, const mvcolor::RgbColor& color,
                            const mvcolor::TNormParam& p, bool want_hexa) {
  ordered_json entry;
  entry["bfs"] = mvcolor::bfs_json(mvcolor::bfs_pair(prop, color, p));
  if (want_hexa && mvcolor::is_chromatic(prop)) {
    entry["hexa"] = mvcolor::hexa_json(mvcolor::hexa_valued(prop, color, p));
  } else {
    entry["four"] = mvcolor::four_json(mvcolor::four_valued(prop, color, p));
  }
  return entry;
}

int run_analyze(const AnalyzeOptions& opt) {
  const mvcolor::TNormParam p = parse_tnorm(opt.tnorm);
  const mvcolor::RgbColor color{mvcolor::UnitValue(opt.r), mvcolor::UnitValue(opt.g),
                                mvcolor::UnitValue(opt.b)};
  const bool want_hexa = opt.model == "hexa";

  ordered_json doc;
  doc["schema_version"] = mvcolor::kSchemaVersion;
  doc["color"] = {{"r", opt.r}, {"g", opt.g}, {"b", opt.b}};
  doc["tnorm"] = mvcolor::tnorm_json(p);

  ordered_json props;
  if (opt.property == "all") {
    for (mvcolor::ColorProperty prop : mvcolor::kAllColorProperties) {
      props[mvcolor::to_string(prop)] = property_entry(prop, color, p, want_hexa);
    }
  } else {
    const auto prop = mvcolor::color_property_from_string(opt.property);
    if (want_hexa && !mvcolor::is_chromatic(prop)) {
      throw mvcolor::unsupported_property_error(
          "--model hexa: " + opt.property + " has no hexa-valued decomposition");
    }
    props[opt.property] = property_entry(prop, color, p, want_hexa);
  }
  doc["properties"] = std::move(props);

  ordered_json descriptors;
  if (opt.descriptor == "wk" || opt.descriptor == "both") {
    descriptors["wk"] =
        mvcolor::descriptor_json(mvcolor::descriptor(mvcolor::DescriptorKind::wk, color, p));
  }
  if (opt.descriptor == "hl" || opt.descriptor == "both") {
    descriptors["hl"] =
        mvcolor::descriptor_json(mvcolor::descriptor(mvcolor::DescriptorKind::hl, color, p));
  }
  doc["descriptors"] = std::move(descriptors);

  emit(doc);
  return 0;
}

struct PlanesOptions {
  std::string image;
  std::string property;
  std::string model = "four";
  std::string tnorm = "min";
  std::string outdir = ".";
  std::string format = "both";
  unsigned threads = 1;
};

int run_planes(const PlanesOptions& opt) {
  const mvcolor::TNormParam p = parse_tnorm(opt.tnorm);
  const auto prop = mvcolor::color_property_from_string(opt.property);
  const auto model =
      opt.model == "four" ? mvcolor::PartitionModel::four : mvcolor::PartitionModel::hexa;

  const auto bytes = read_image_bytes(opt.image);
  const mvcolor::ImageBuffer img = mvcolor::load_ppm(bytes);
  const auto planes = mvcolor::plane_map(img, prop, model, p, opt.threads);

  mvcolor::CardinalityReport cards;
  cards.pixel_count = img.pixel_count();
  for (const auto& plane : planes) {
    cards.components.emplace_back(plane.label, mvcolor::fuzzy_cardinality(plane));
  }
  ordered_json manifest =
      mvcolor::partition_cardinality_report_json(img, p, prop, model, cards);

  const bool write_pgms = opt.format == "pgm" || opt.format == "both";
  if (write_pgms) {
    std::error_code ec;
    fs::create_directories(opt.outdir, ec);
    if (ec) {
      throw std::invalid_argument("--out: cannot create directory \"" + opt.outdir +
                                  "\": " + ec.message());
    }
    ordered_json files;
    for (const auto& plane : planes) {
      const std::string filename = plane.label + ".pgm";
      const auto pgm = mvcolor::write_pgm(plane);
      write_file(fs::path(opt.outdir) / filename, pgm.data(), pgm.size());
      files[plane.label] = filename;
    }
    manifest["files"] = std::move(files);
    const std::string text = manifest.dump(2) + "\n";
    write_file(fs::path(opt.outdir) / "manifest.json", text.data(), text.size());
  }
  if (opt.format == "json" || opt.format == "both") {
    emit(manifest);
  }
  return 0;
}

struct ReportOptions {
  std::string image;
  int bins = 256;
  std::string tnorm = "min";
  unsigned threads = 1;
};

int run_report(const ReportOptions& opt) {
  const mvcolor::TNormParam p = parse_tnorm(opt.tnorm);
  const auto bytes = read_image_bytes(opt.image);
  const mvcolor::ImageBuffer img = mvcolor::load_ppm(bytes);

  const auto hist = mvcolor::rgb_histogram(img, opt.bins);
  const auto wk =
      mvcolor::descriptor_aggregate(img, mvcolor::DescriptorKind::wk, p, opt.threads);
  const auto hl =
      mvcolor::descriptor_aggregate(img, mvcolor::DescriptorKind::hl, p, opt.threads);

  const ordered_json doc = ordered_json::array(
      {mvcolor::histogram_report_json(img, p, hist),
       mvcolor::descriptor_aggregate_report_json(img, p, mvcolor::DescriptorKind::wk, wk),
       mvcolor::descriptor_aggregate_report_json(img, p, mvcolor::DescriptorKind::hl, hl)});
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-valued fuzzy color analysis (Frank t-norm conjugate pairs)"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand(
      "analyze", "Partitions and descriptors of a single RGB color");
  analyze->add_option("r", analyze_opt.r, "red channel in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_option("g", analyze_opt.g, "green channel in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_option("b", analyze_opt.b, "blue channel in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_option("--property", analyze_opt.property,
                      "color property to decompose, or \"all\"");
  analyze->add_option("--model", analyze_opt.model, "partition model")
      ->check(CLI::IsMember({"four", "hexa"}));
  analyze->add_option("--descriptor", analyze_opt.descriptor, "descriptor kind")
      ->check(CLI::IsMember({"wk", "hl", "both"}));
  analyze->add_option("--tnorm", analyze_opt.tnorm,
                      "min|product|lukasiewicz|frank:<s>");

  PlanesOptions planes_opt;
  auto* planes = app.add_subcommand(
      "planes", "Partition-component planes of an image, as PGM + manifest");
  planes->add_option("image", planes_opt.image, "PPM image path, or - for stdin")
      ->required();
  planes->add_option("--property", planes_opt.property, "color property")->required();
  planes->add_option("--model", planes_opt.model, "partition model")
      ->check(CLI::IsMember({"four", "hexa"}));
  planes->add_option("--tnorm", planes_opt.tnorm, "min|product|lukasiewicz|frank:<s>");
  planes->add_option("--out", planes_opt.outdir, "output directory");
  planes->add_option("--format", planes_opt.format, "what to emit")
      ->check(CLI::IsMember({"pgm", "json", "both"}));
  planes->add_option("--threads", planes_opt.threads, "worker threads (0 = auto)")
      ->check(CLI::Range(0u, 1024u));

  ReportOptions report_opt;
  auto* report = app.add_subcommand(
      "report", "RGB histogram and descriptor aggregates of an image");
  report->add_option("image", report_opt.image, "PPM image path, or - for stdin")
      ->required();
  report->add_option("--bins", report_opt.bins, "histogram bins")
      ->check(CLI::Range(1, 1 << 20));
  report->add_option("--tnorm", report_opt.tnorm, "min|product|lukasiewicz|frank:<s>");
  report->add_option("--threads", report_opt.threads, "worker threads (0 = auto)")
      ->check(CLI::Range(0u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opt);
    if (planes->parsed()) return run_planes(planes_opt);
    if (report->parsed()) return run_report(report_opt);
  } catch (const mvcolor::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const mvcolor::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
