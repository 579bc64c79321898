#pragma once

// Plain key=value run configuration shared by all subcommands. Lines starting
// with '#' are comments; unknown keys are rejected.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "mchroma/scheme.hpp"

namespace mchroma::cli {

/// Malformed configuration text (a usage error).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Viewport {
  double x0 = -10.0;
  double y0 = -10.0;
  double x1 = 10.0;
  double y1 = 10.0;
  bool operator==(const Viewport&) const = default;
};

inline constexpr std::array<const char*, 6> kDefaultPalette = {"red", "blue", "green", "gold", "purple", "orange"};

struct RunConfig {
  int n = 12;
  std::optional<HexagonChoice> choice;
  bool allow_experimental = false;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 0;  ///< 0 = all available
  int grid = 512;
  std::string param = "arc";
  int side = 2;
  std::string output;
  std::string csv;
  std::string scheme;  ///< scheme JSON to load instead of building from n
  Viewport viewport;
  double scale = 40.0;  ///< SVG pixels per unit
  std::array<std::string, 6> palette{kDefaultPalette[0], kDefaultPalette[1], kDefaultPalette[2],
                                     kDefaultPalette[3], kDefaultPalette[4], kDefaultPalette[5]};
  std::string overlay;  ///< comma-separated subset of sums,lines,lattice

  bool operator==(const RunConfig& o) const;
};

RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& c);
/// Reads and parses a config file; throws IoError if unreadable.
RunConfig load_config(const std::string& path);

}  // namespace mchroma::cli
