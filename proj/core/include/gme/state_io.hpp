#pragma once

#include <iosfwd>
#include <string>

#include "gme/state.hpp"

namespace gme {

/// Text state file:
///   # optional comment lines
///   dims: d1 d2 ... dp
///   i1 i2 ... ip  re  im     (one line per nonzero amplitude, 0-based)
/// Unlisted amplitudes are zero; duplicate index tuples are rejected.
PureState read_state(std::istream& in);
PureState read_state_file(const std::string& path);

/// Reals are written with 17 significant digits so round-trips are exact.
void write_state(std::ostream& out, const PureState& s,
                 const std::string& comment = "");
void write_state_file(const std::string& path, const PureState& s,
                      const std::string& comment = "");

}  // namespace gme
