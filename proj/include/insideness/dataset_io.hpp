#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "insideness/generators.hpp"

namespace insideness {

inline constexpr int kManifestFormatVersion = 1;

struct DatasetRecord {
  std::string image;  // relative to the dataset directory
  std::string mask;
  Split split = Split::Train;
  std::uint64_t seed = 0;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct DatasetManifest {
  int format_version = kManifestFormatVersion;
  std::string dataset;     // family label, e.g. "polar24", or an enumeration label
  bool generated = true;   // false for enumerated curve sets (no generator block)
  GeneratorParams params;
  int n_train = 0;
  int n_val = 0;
  int n_test = 0;
  std::vector<DatasetRecord> records;
};

// "polar<max_vertices>", "spiral", "digs", "randomwalk".
std::string family_label(const GeneratorParams& params);
// Inverse of family_label; also accepts "random-walk". Image size is the
// family default. Returns nullopt for unknown labels.
std::optional<GeneratorParams> parse_family_label(const std::string& label);

// Keys are written in a fixed order, without timestamps, so identical
// datasets give identical bytes.
std::string manifest_to_json(const DatasetManifest& m);
// Throws FormatError.
DatasetManifest manifest_from_json(const std::string& text);

// Writes images/<split>_<index>.pbm, masks/<split>_<index>.pgm and
// manifest.json under dir (created if needed). Throws std::runtime_error on
// I/O failure.
DatasetManifest write_dataset(const Dataset& ds, const std::filesystem::path& dir);

// Lower-level writer used by write_dataset: fills m.records from the given
// images (seeds may be empty).
DatasetManifest write_dataset_files(const std::filesystem::path& dir, DatasetManifest m,
                                    const std::vector<BinaryImage>& images,
                                    const std::vector<InsidenessMask>& masks,
                                    const std::vector<Split>& splits,
                                    const std::vector<std::uint64_t>& seeds);

struct LoadedDataset {
  DatasetManifest manifest;
  std::vector<BinaryImage> images;
  std::vector<InsidenessMask> masks;
};

// Throws FormatError for a corrupt manifest or image/mask files and
// std::runtime_error for missing files.
LoadedDataset load_dataset(const std::filesystem::path& dir);

}  // namespace insideness
