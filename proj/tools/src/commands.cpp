#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mchroma/search.hpp"
#include "mchroma/serialize.hpp"
#include "mchroma/red_blue.hpp"
#include "mchroma/verify.hpp"
#include "run_config.hpp"
#include "svg.hpp"

namespace mchroma::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string config;
  int n = 0;
  double ratio = 0.0;
  int vertex_index = 0;
  int side = 0;
  std::string param;
  int grid = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::vector<double> viewport;
  double scale = 0.0;
  std::string output;
  std::string csv;
  std::string scheme;
  std::string overlay;
  bool allow_experimental = false;
  bool certify = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key=value config file; flags override it");
  sub->add_option("--n", f.n, "number of vertices of the unit ball (even, 8..22)");
  sub->add_option("--ratio", f.ratio, "place A1 on side --side at this ratio");
  sub->add_option("--vertex-index", f.vertex_index, "place A1 on this vertex of C/2 (counted from A2)");
  sub->add_option("--side", f.side, "side used by --ratio and by ratio scans");
  sub->add_option("--scheme", f.scheme, "load the scheme from a JSON file instead of --n");
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_option("--threads", f.threads, "worker threads (0 = all available)");
  sub->add_option("--output,-o", f.output, "write the result here instead of stdout");
  sub->add_flag("--allow-experimental", f.allow_experimental, "accept even n outside 8..22");
}

bool given(const CLI::App* sub, const std::string& name) {
  try {
    return sub->count(name) > 0;
  } catch (const CLI::OptionNotFound&) {
    return false;
  }
}

RunConfig resolve(const CLI::App* sub, const Flags& f) {
  RunConfig c;
  if (given(sub, "--config")) {
    try {
      c = load_config(f.config);
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  if (given(sub, "--n")) c.n = f.n;
  if (given(sub, "--side")) c.side = f.side;
  if (given(sub, "--ratio") && given(sub, "--vertex-index")) {
    throw UsageError("--ratio and --vertex-index are mutually exclusive");
  }
  if (given(sub, "--ratio")) c.choice = HexagonChoice::split(c.side, f.ratio);
  if (given(sub, "--vertex-index")) c.choice = HexagonChoice::vertex(f.vertex_index);
  if (given(sub, "--allow-experimental")) c.allow_experimental = f.allow_experimental;
  if (given(sub, "--param")) c.param = f.param;
  if (given(sub, "--grid")) c.grid = f.grid;
  if (given(sub, "--samples")) c.samples = f.samples;
  if (given(sub, "--seed")) c.seed = f.seed;
  if (given(sub, "--threads")) c.threads = f.threads;
  if (given(sub, "--viewport")) c.viewport = Viewport{f.viewport[0], f.viewport[1], f.viewport[2], f.viewport[3]};
  if (given(sub, "--scale")) c.scale = f.scale;
  if (given(sub, "--output")) c.output = f.output;
  if (given(sub, "--csv")) c.csv = f.csv;
  if (given(sub, "--scheme")) c.scheme = f.scheme;
  if (given(sub, "--overlay")) c.overlay = f.overlay;
  return c;
}

unsigned thread_count(const RunConfig& c) {
  if (c.threads > 0) return c.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  f.flush();
  if (!f) throw IoError("error while writing " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ColoringScheme load_scheme(const RunConfig& c) {
  try {
    if (!c.scheme.empty()) {
      Json doc;
      try {
        doc = Json::parse(read_file(c.scheme));
      } catch (const Json::parse_error& e) {
        throw UsageError("scheme file " + c.scheme + " is not valid JSON: " + e.what());
      }
      return scheme_from_json(doc);
    }
    return build_scheme(c.n, c.choice, BuildOptions{.allow_experimental = c.allow_experimental});
  } catch (const SchemeError& e) {
    throw UsageError(e.what());
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
}

Json envelope(const char* command) { return Json{{"format", kReportFormat}, {"command", command}}; }

int cmd_construct(const RunConfig& c, std::ostream& out) {
  write_text(c.output, dump(to_json(load_scheme(c))), out);
  return kPass;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ColoringScheme s = load_scheme(c);
  const auto cert = packing_certificate(s);
  const auto lines = regression_lines(s);
  const auto sampling = sample_unit_pairs(s, c.samples, c.seed, thread_count(c));
  const auto adversarial = adversarial_boundary_pairs(s);

  Json failed = Json::array();
  if (!cert.pass) failed.push_back("certificate");
  if (!std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.check.separates; })) {
    failed.push_back("regression");
  }
  if (!sampling.pass()) failed.push_back("sampling");
  if (!adversarial.pass()) failed.push_back("adversarial");

  Json reg = Json::array();
  for (const auto& l : lines) reg.push_back(to_json(l));
  Json rep = envelope("verify");
  rep["scheme"] = to_json(s);
  rep["certificate"] = to_json(cert);
  rep["regression"] = reg;
  rep["sampling"] = to_json(sampling);
  rep["adversarial"] = to_json(adversarial);
  rep["failed_sections"] = failed;
  rep["pass"] = failed.empty();
  write_text(c.output, dump(rep), out);

  if (!failed.empty()) {
    std::string names;
    for (const auto& x : failed) names += (names.empty() ? "" : ", ") + x.get<std::string>();
    err << "verify " << s.id() << ": FAILED (" << names << ")\n";
    return kFail;
  }
  err << "verify " << s.id() << ": pass (" << sampling.n_samples << " samples in " << sampling.elapsed_seconds
      << " s)\n";
  return kPass;
}

int cmd_sample(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ColoringScheme s = load_scheme(c);
  const auto rep = sample_unit_pairs(s, c.samples, c.seed, thread_count(c));
  Json doc = envelope("sample");
  doc["scheme_id"] = s.id();
  doc["sampling"] = to_json(rep);
  doc["pass"] = rep.pass();
  write_text(c.output, dump(doc), out);
  err << "sample " << s.id() << ": " << rep.violations.size() << " violations in " << rep.n_samples
      << " samples\n";
  return rep.pass() ? kPass : kFail;
}

int cmd_render(const RunConfig& c, std::ostream& out) {
  const ColoringScheme s = load_scheme(c);
  RenderOptions opt{c.viewport, c.scale, c.palette};
  std::istringstream items(c.overlay);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item == "sums") {
      opt.sums = true;
    } else if (item == "lines") {
      opt.lines = true;
    } else if (item == "lattice") {
      opt.lattice = true;
    } else if (!item.empty()) {
      throw UsageError("unknown overlay '" + item + "' (expected sums, lines, lattice)");
    }
  }
  std::string svg;
  try {
    svg = render_svg(s, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_text(c.output, svg, out);
  return kPass;
}

std::string clearance_csv(const FeasibilityReport& r) {
  std::string s = "t,clearance\n";
  char buf[64];
  for (const auto& x : r.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x.t, x.clearance);
    s += buf;
  }
  return s;
}

int cmd_search(const RunConfig& c, bool certify, std::ostream& out, std::ostream& err) {
  if (certify) {
    Json list = Json::array();
    try {
      for (const auto& d : certify_defaults(thread_count(c))) list.push_back(to_json(d));
    } catch (const SearchError& e) {
      err << "search: " << e.what() << '\n';
      return kFail;
    }
    Json doc = envelope("search");
    doc["certified_defaults"] = list;
    write_text(c.output, dump(doc), out);
    return kPass;
  }
  if (c.n < 6 || c.n % 2 != 0) throw UsageError("search needs an even n >= 6, got " + std::to_string(c.n));
  if (c.grid < 3) throw UsageError("--grid must be at least 3");
  Parameterization p;
  try {
    p.kind = scan_kind_from_string(c.param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  p.side = c.side;
  if (p.kind == ScanKind::ratio && (p.side < 0 || p.side > c.n / 2 - 2)) {
    throw UsageError("--side must lie in [0, " + std::to_string(c.n / 2 - 2) + "] for n = " + std::to_string(c.n));
  }
  const auto rep = scan(c.n, p, c.grid, thread_count(c));
  Json doc = envelope("search");
  doc["scan"] = to_json(rep);
  write_text(c.output, dump(doc), out);
  if (!c.csv.empty()) write_text(c.csv, clearance_csv(rep), out);
  if (rep.feasible_interval) {
    err << "search n=" << c.n << ": feasible [" << rep.feasible_interval->lo << ", " << rep.feasible_interval->hi
        << "], best t=" << rep.best.t << " clearance " << rep.best.clearance << '\n';
  } else {
    err << "search n=" << c.n << ": no feasible parameter found\n";
  }
  return kPass;
}

int cmd_szlam(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ColoringScheme s = load_scheme(c);
  const auto pair = to_red_blue(s);
  const auto domain = *pair.coloring.period;
  const auto hits = check_translate_hits(pair.coloring, pair.config, c.samples, c.seed);
  auto coloring = from_red_blue(pair.coloring, pair.config);
  SamplingReport round_trip;
  Json round_trip_error = nullptr;
  try {
    round_trip = sample_monochromatic_pairs(coloring, s.norm(), domain, c.samples, c.seed, thread_count(c));
  } catch (const HypothesisViolation& e) {
    round_trip.kind = "unit_pairs";
    round_trip.n_samples = c.samples;
    round_trip.seed = c.seed;
    round_trip.violations.push_back(Violation{0, e.x, e.x, 0});
    round_trip_error = e.what();
  }
  const auto red = sample_red_unit_pairs(pair.coloring, s.norm(), domain, c.samples, c.seed);
  const bool pass = hits.pass() && round_trip.pass() && red.pass();

  Json doc = envelope("szlam");
  doc["scheme_id"] = s.id();
  doc["red_class"] = pair.coloring.description;
  doc["configuration"] = to_json(pair.config);
  doc["translate_hits"] = to_json(hits);
  doc["round_trip"] = to_json(round_trip);
  doc["round_trip_error"] = round_trip_error;
  doc["red_unit_pairs"] = to_json(red);
  doc["pass"] = pass;
  write_text(c.output, dump(doc), out);
  err << "szlam " << s.id() << ": |K| = " << pair.config.size() << ", " << (pass ? "pass" : "FAILED") << '\n';
  return pass ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Six-colorings of Minkowski planes with a regular polygon unit ball", "mchroma"};
  app.require_subcommand(1);
  Flags f;

  auto* construct = app.add_subcommand("construct", "build a scheme and print it as JSON");
  auto* verify = app.add_subcommand("verify", "certificate, published lines, sampling and boundary pairs");
  auto* sample = app.add_subcommand("sample", "Monte Carlo unit-distance sampling only");
  auto* render = app.add_subcommand("render", "draw the colored tiling as SVG");
  auto* search = app.add_subcommand("search", "scan hexagon placements for packing clearance");
  auto* szlam = app.add_subcommand("szlam", "red-blue coloring and translate configuration");
  for (auto* sub : {construct, verify, sample, render, search, szlam}) add_common(sub, f);
  for (auto* sub : {verify, sample, szlam}) sub->add_option("--samples", f.samples, "number of samples");
  render->add_option("--viewport", f.viewport, "x0 y0 x1 y1")->expected(4);
  render->add_option("--scale", f.scale, "pixels per unit");
  render->add_option("--overlay", f.overlay, "comma-separated: sums, lines, lattice");
  search->add_option("--param", f.param, "arc or ratio");
  search->add_option("--grid", f.grid, "number of grid points");
  search->add_option("--csv", f.csv, "also write (t, clearance) pairs as CSV");
  search->add_flag("--certify-defaults", f.certify, "certify the built-in choices for n = 14..20");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "mchroma: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    const RunConfig c = resolve(sub, f);
    if (name == "construct") return cmd_construct(c, out);
    if (name == "verify") return cmd_verify(c, out, err);
    if (name == "sample") return cmd_sample(c, out, err);
    if (name == "render") return cmd_render(c, out);
    if (name == "search") return cmd_search(c, f.certify, out, err);
    return cmd_szlam(c, out, err);
  } catch (const UsageError& e) {
    err << "mchroma " << name << ": " << e.what() << "\n" << sub->help();
    return kUsage;
  } catch (const IoError& e) {
    err << "mchroma " << name << ": " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace mchroma::cli
