#include "insideness/dataset_io.hpp"

#include <cstdio>
#include <stdexcept>
#include <json.hpp>

#include "insideness/errors.hpp"
#include "insideness/netpbm.hpp"

namespace insideness {
namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<Split> parse_split(const std::string& s) {
  if (s == "train") return Split::Train;
  if (s == "val") return Split::Validation;
  if (s == "test") return Split::Test;
  return std::nullopt;
}

std::string file_stem(Split split, int index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_%04d", index);
  return to_string(split) + buf;
}

}  // namespace

std::string family_label(const GeneratorParams& params) {
  if (params.family == Family::Polar) return "polar" + std::to_string(params.max_vertices);
  return to_string(params.family);
}

std::optional<GeneratorParams> parse_family_label(const std::string& label) {
  GeneratorParams p;
  if (label.rfind("polar", 0) == 0 && label.size() > 5) {
    const std::string digits = label.substr(5);
    if (digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    p.family = Family::Polar;
    p.max_vertices = std::stoi(digits);
    if (p.max_vertices < 3) return std::nullopt;
  } else {
    auto f = parse_family(label);
    if (!f || *f == Family::Polar) return std::nullopt;
    p.family = *f;
    p.max_vertices = 0;
  }
  p.image_size = default_image_size(p.family);
  return p;
}

std::string manifest_to_json(const DatasetManifest& m) {
  ordered_json gen;
  gen["family"] = to_string(m.params.family);
  gen["image_size"] = m.params.image_size;
  if (m.params.family == Family::Polar) gen["max_vertices"] = m.params.max_vertices;
  gen["max_retries"] = m.params.max_retries;

  ordered_json j;
  j["format_version"] = m.format_version;
  j["dataset"] = m.dataset;
  j["image_size"] = m.params.image_size;
  j["seed"] = m.params.seed;
  j["generator"] = m.generated ? gen : ordered_json(nullptr);
  j["counts"] = ordered_json{{"train", m.n_train}, {"val", m.n_val}, {"test", m.n_test}};
  j["records"] = ordered_json::array();
  for (const auto& r : m.records) {
    j["records"].push_back(ordered_json{
        {"image", r.image}, {"mask", r.mask}, {"split", to_string(r.split)}, {"seed", r.seed}});
  }
  return j.dump(2) + "\n";
}

DatasetManifest manifest_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    DatasetManifest m;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != kManifestFormatVersion) {
      throw FormatError("manifest: unsupported format_version " + std::to_string(m.format_version));
    }
    m.dataset = j.at("dataset").get<std::string>();
    const auto& gen = j.at("generator");
    m.generated = !gen.is_null();
    m.params.image_size = j.at("image_size").get<int>();
    if (m.generated) {
      auto family = parse_family(gen.at("family").get<std::string>());
      if (!family) throw FormatError("manifest: unknown family");
      m.params.family = *family;
      m.params.max_vertices = gen.contains("max_vertices") ? gen.at("max_vertices").get<int>() : 0;
      m.params.max_retries = gen.at("max_retries").get<int>();
    }
    m.params.seed = j.at("seed").get<std::uint64_t>();
    const auto& counts = j.at("counts");
    m.n_train = counts.at("train").get<int>();
    m.n_val = counts.at("val").get<int>();
    m.n_test = counts.at("test").get<int>();
    for (const auto& r : j.at("records")) {
      auto split = parse_split(r.at("split").get<std::string>());
      if (!split) throw FormatError("manifest: unknown split");
      m.records.push_back({r.at("image").get<std::string>(), r.at("mask").get<std::string>(), *split,
                           r.at("seed").get<std::uint64_t>()});
    }
    if (m.records.size() != static_cast<std::size_t>(m.n_train + m.n_val + m.n_test)) {
      throw FormatError("manifest: record count does not match split counts");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
}

DatasetManifest write_dataset_files(const std::filesystem::path& dir, DatasetManifest m,
                                    const std::vector<BinaryImage>& images,
                                    const std::vector<InsidenessMask>& masks,
                                    const std::vector<Split>& splits,
                                    const std::vector<std::uint64_t>& seeds) {
  namespace fs = std::filesystem;
  if (masks.size() != images.size() || splits.size() != images.size() ||
      (!seeds.empty() && seeds.size() != images.size())) {
    throw std::invalid_argument("write_dataset_files: inconsistent list sizes");
  }
  fs::create_directories(dir / "images");
  fs::create_directories(dir / "masks");
  m.records.clear();
  int index[3] = {0, 0, 0};
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Split split = splits[i];
    const std::string stem = file_stem(split, index[static_cast<int>(split)]++);
    DatasetRecord r{"images/" + stem + ".pbm", "masks/" + stem + ".pgm", split,
                    seeds.empty() ? 0 : seeds[i]};
    write_file(dir / r.image, write_pbm(images[i]));
    write_file(dir / r.mask, write_pgm_mask(masks[i]));
    m.records.push_back(std::move(r));
  }
  write_file(dir / "manifest.json", manifest_to_json(m));
  return m;
}

DatasetManifest write_dataset(const Dataset& ds, const std::filesystem::path& dir) {
  DatasetManifest m;
  m.dataset = family_label(ds.manifest.params);
  m.params = ds.manifest.params;
  m.n_train = ds.manifest.n_train;
  m.n_val = ds.manifest.n_val;
  m.n_test = ds.manifest.n_test;
  std::vector<BinaryImage> images;
  for (const auto& c : ds.curves) images.push_back(c.image());
  return write_dataset_files(dir, std::move(m), images, ds.masks, ds.splits, ds.manifest.curve_seeds);
}

LoadedDataset load_dataset(const std::filesystem::path& dir) {
  LoadedDataset out;
  out.manifest = manifest_from_json(read_file(dir / "manifest.json"));
  for (const auto& r : out.manifest.records) {
    out.images.push_back(read_pbm(read_file(dir / r.image)));
    out.masks.push_back(read_pgm_mask(read_file(dir / r.mask)));
    if (out.images.back().dims() != out.masks.back().dims()) {
      throw FormatError("dataset: " + r.image + " and " + r.mask + " differ in size");
    }
  }
  return out;
}

}  // namespace insideness
