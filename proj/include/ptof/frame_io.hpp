#pragma once

#include <filesystem>

#include "ptof/pipeline.hpp"

namespace ptof {

/// Correlation frame file: `#` key=value metadata comments, a
/// `u,v,delay_s,value` header line, then one row per (valid pixel, delay).
/// Invalid pixels are omitted. Doubles use shortest round-trip formatting,
/// so write/read is bit-exact. The write is atomic (temp file + rename).
void writeCorrelationFrame(const std::filesystem::path& path, const CorrelationFrame& frame);

/// Throws IoError with a 1-based line number on malformed input.
CorrelationFrame readCorrelationFrame(const std::filesystem::path& path);

}  // namespace ptof
