#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "qpsim/grid.hpp"

namespace qpsim {

/// QPSF field dump, little-endian:
///   "QPSF" | u32 n | f64 half_width | vx (re, im) f64 pairs row-major | vy likewise
void write_qpsf(std::ostream& out, const VectorField& field);
void write_qpsf(const std::filesystem::path& path, const VectorField& field);

/// Throws std::runtime_error on a bad magic, truncated stream or invalid grid.
VectorField read_qpsf(std::istream& in);
VectorField read_qpsf(const std::filesystem::path& path);

}  // namespace qpsim
