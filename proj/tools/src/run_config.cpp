#include "run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mchroma::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
T read(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  T out{};
  is >> out;
  if (is.fail() || !(is >> std::ws).eof()) throw ConfigError("bad value for '" + key + "': " + v);
  return out;
}

bool read_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("bad value for '" + key + "': " + v);
}

// "boundary_midpoint", "vertex_index 2", "side_split 2 0.68", optionally
// followed by "@ shared_side".
HexagonChoice read_choice(const std::string& v) {
  std::istringstream is(v);
  std::string kind;
  is >> kind;
  HexagonChoice c;
  try {
    c.kind = hexagon_kind_from_string(kind);
  } catch (const SchemeError& e) {
    throw ConfigError(e.what());
  }
  if (c.kind == HexagonKind::vertex_index) is >> c.index;
  if (c.kind == HexagonKind::side_split) is >> c.index >> c.ratio;
  std::string at;
  if (is >> at) {
    if (at != "@" || !(is >> c.shared_side)) throw ConfigError("bad hexagon: " + v);
  }
  if (is.fail() && !is.eof()) throw ConfigError("bad hexagon: " + v);
  return c;
}

std::string write_choice(const HexagonChoice& c) {
  std::string s = to_string(c.kind);
  if (c.kind == HexagonKind::vertex_index) s += " " + std::to_string(c.index);
  if (c.kind == HexagonKind::side_split) s += " " + std::to_string(c.index) + " " + fmt(c.ratio);
  if (c.shared_side != 0) s += " @ " + std::to_string(c.shared_side);
  return s;
}

}  // namespace

bool RunConfig::operator==(const RunConfig& o) const {
  const bool same_choice = choice.has_value() == o.choice.has_value() &&
                           (!choice || choice->same_placement(*o.choice));
  return n == o.n && same_choice && allow_experimental == o.allow_experimental && samples == o.samples &&
         seed == o.seed && threads == o.threads && grid == o.grid && param == o.param && side == o.side &&
         output == o.output && csv == o.csv && scheme == o.scheme && viewport == o.viewport &&
         scale == o.scale && palette == o.palette && overlay == o.overlay;
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string v = trim(line.substr(eq + 1));
    if (key == "n") {
      c.n = read<int>(key, v);
    } else if (key == "hexagon") {
      c.choice = read_choice(v);
    } else if (key == "allow_experimental") {
      c.allow_experimental = read_bool(key, v);
    } else if (key == "samples") {
      c.samples = read<std::uint64_t>(key, v);
    } else if (key == "seed") {
      c.seed = read<std::uint64_t>(key, v);
    } else if (key == "threads") {
      c.threads = read<unsigned>(key, v);
    } else if (key == "grid") {
      c.grid = read<int>(key, v);
    } else if (key == "param") {
      c.param = v;
    } else if (key == "side") {
      c.side = read<int>(key, v);
    } else if (key == "output") {
      c.output = v;
    } else if (key == "csv") {
      c.csv = v;
    } else if (key == "scheme") {
      c.scheme = v;
    } else if (key == "viewport") {
      std::istringstream is(v);
      if (!(is >> c.viewport.x0 >> c.viewport.y0 >> c.viewport.x1 >> c.viewport.y1)) {
        throw ConfigError("viewport needs four numbers: " + v);
      }
    } else if (key == "scale") {
      c.scale = read<double>(key, v);
    } else if (key == "palette") {
      std::istringstream is(v);
      for (auto& p : c.palette) {
        if (!(is >> p)) throw ConfigError("palette needs six color names: " + v);
      }
    } else if (key == "overlay") {
      c.overlay = v;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "n = " << c.n << '\n';
  if (c.choice) os << "hexagon = " << write_choice(*c.choice) << '\n';
  os << "allow_experimental = " << (c.allow_experimental ? "true" : "false") << '\n';
  os << "samples = " << c.samples << '\n';
  os << "seed = " << c.seed << '\n';
  os << "threads = " << c.threads << '\n';
  os << "grid = " << c.grid << '\n';
  os << "param = " << c.param << '\n';
  os << "side = " << c.side << '\n';
  if (!c.output.empty()) os << "output = " << c.output << '\n';
  if (!c.csv.empty()) os << "csv = " << c.csv << '\n';
  if (!c.scheme.empty()) os << "scheme = " << c.scheme << '\n';
  os << "viewport = " << fmt(c.viewport.x0) << ' ' << fmt(c.viewport.y0) << ' ' << fmt(c.viewport.x1) << ' '
     << fmt(c.viewport.y1) << '\n';
  os << "scale = " << fmt(c.scale) << '\n';
  os << "palette =";
  for (const auto& p : c.palette) os << ' ' << p;
  os << '\n';
  if (!c.overlay.empty()) os << "overlay = " << c.overlay << '\n';
  return os.str();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace mchroma::cli
