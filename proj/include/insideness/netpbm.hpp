#pragma once

#include <filesystem>
#include <string>

#include "insideness/binary_image.hpp"
#include "insideness/oracle.hpp"

namespace insideness {

// Plain PBM (P1): header "P1", "<width> <height>", then one text row per image
// row with space-separated 0/1 digits (1 = curve).
std::string write_pbm(const BinaryImage& img);
// Accepts any plain PBM: comments, arbitrary whitespace, digits without
// separators. Throws FormatError.
BinaryImage read_pbm(const std::string& text);

// Plain PGM (P2) with maxval 2: 0 outside, 1 inside, 2 curve.
std::string write_pgm_mask(const InsidenessMask& mask);
// Throws FormatError unless maxval is 2 and every value is 0, 1 or 2.
InsidenessMask read_pgm_mask(const std::string& text);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace insideness
