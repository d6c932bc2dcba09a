#pragma once

#include "galbrun/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace galbrun {

// On-disk state snapshot, format "GALBRUN-SNAPSHOT v1":
//   ASCII header (magic, nx, ny, Lx, Ly, time, ordered field names),
//   one blank line, then the named fields concatenated as little-endian
//   float64 in row-major order (x fastest).
// Header reals are printed with 17 significant digits; the payload is raw
// bytes, so write followed by read is bit-exact.
struct Snapshot {
    double time = 0.0;
    int order = 2; // grid reconstruction hint, not part of the format
    std::vector<std::pair<std::string, ScalarField>> fields;
};

void write_snapshot(const std::string& path, const Snapshot& snap);

// Reads a snapshot; fields are placed on a fresh grid built with `order`.
Snapshot read_snapshot(const std::string& path, int order = 2);

} // namespace galbrun
