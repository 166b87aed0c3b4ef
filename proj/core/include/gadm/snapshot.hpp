#ifndef GADM_SNAPSHOT_HPP_
#define GADM_SNAPSHOT_HPP_

#include <string>

#include "gadm/state.hpp"

namespace gadm {

// Binary slice format, little-endian, version 1:
//   bytes 0..3   magic "GADM"
//   u32          version
//   u32 x 3      points per axis
//   u32 x 3      topology per axis (0 periodic, 1 boundary)
//   f64 x 3      spacings
//   f64 x 3      origin
//   f64          slice time
//   f64 x 33*npts  component fields in state order, last axis fastest
// Identical states produce identical bytes, so snapshot files can be
// compared directly.
void write_snapshot(const std::string& path, const StateField& s);

// Throws ConfigError on unreadable, truncated, or mismatched files.
StateField read_snapshot(const std::string& path);

}  // namespace gadm

#endif
