#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "ptof/pipeline.hpp"

namespace ptof {

/// Writes contents to a temp file in the target directory and renames it
/// into place, so a partial file never exists under the target name.
void atomicWriteFile(const std::filesystem::path& path, std::string_view contents);

/// Portable float map (`Pf`), rows stored bottom-to-top, scale line sign
/// encoding endianness. Invalid pixels are stored as -1.0.
void writePfm(const std::filesystem::path& path, const DepthMap& depth);

struct PfmImage {
  int width = 0;
  int height = 0;
  Eigen::ArrayXXf values;  // height x width, (v, u), top-down
};

PfmImage readPfm(const std::filesystem::path& path);

/// Companion CSV: header `u,v,depth_m`, one row per valid pixel.
void writeDepthCsv(const std::filesystem::path& path, const DepthMap& depth);

/// 16-bit binary PGM (maxval 65535, big-endian samples). Amplitudes are
/// scaled linearly into the full range; the factor is recorded in a
/// `# scale=` header comment. Invalid pixels are stored as 0.
void writePgm16(const std::filesystem::path& path, const IntensityMap& intensity);

struct Pgm16Image {
  int width = 0;
  int height = 0;
  double scale = 1.0;  // stored = round(amplitude * scale)
  Eigen::Array<std::uint16_t, Eigen::Dynamic, Eigen::Dynamic> values;
};

Pgm16Image readPgm16(const std::filesystem::path& path);

}  // namespace ptof
