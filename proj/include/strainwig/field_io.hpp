#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "strainwig/grid_kernels.hpp"
#include "strainwig/phase_space.hpp"

namespace strainwig {

inline constexpr char kFieldMagic[4] = {'W', 'G', 'N', 'R'};
inline constexpr std::uint32_t kFieldVersion = 1;

/// Long-format CSV, one row per node, round-trip precision.
void write_field_csv(const WignerField& f, std::ostream& os);
void write_field_csv(const WignerField& f, const std::string& path);
WignerField read_field_csv(const std::string& path);

/// Little-endian header {magic, version, nx, npx, x0, dx, px0, dpx} then the
/// planes w11, w12re, w12im, w22, trace, each x-major.
void write_field_binary(const WignerField& f, std::ostream& os);
void write_field_binary(const WignerField& f, const std::string& path);
/// Throws ConfigError on a bad magic, version or truncated payload.
WignerField read_field_binary(std::istream& is);
WignerField read_field_binary(const std::string& path);

/// Formats a double with the shortest representation that round-trips.
std::string format_double(double v);

/// Trace heat map, x to the right and px upward, diverging palette centred at 0.
void write_trace_png(const WignerField& f, const std::string& path);

}  // namespace strainwig
