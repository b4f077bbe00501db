#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plots.hpp"
#include "strainwig/analysis.hpp"
#include "strainwig/errors.hpp"
#include "strainwig/fault_injection.hpp"
#include "strainwig/field_io.hpp"
#include "strainwig/grid_kernels.hpp"
#include "strainwig/strain_geometry.hpp"
#include "strainwig/verify/suite.hpp"
#include "strainwig/version.hpp"
#include "strainwig/wigner_core.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace strainwig;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string config;
  std::string out_dir = "out";
  int grid_n = kDefaultGridN;
  int threads = 0;

  std::optional<std::string> direction;
  std::optional<double> epsilon;
  double nu = 0.165;
  double beta = 3.37;
  double t0 = 1.0;
  double a0 = 1.0;
  double B = 1.0;
  double k = 0.0;
  int lambda = 1;

  double eps_min = -0.2;
  double eps_max = 0.2;
  double step = 0.01;

  std::optional<int> n;
  int spectrum_max = 20;

  double alpha_mod = 3.0;
  std::optional<double> alpha_arg;
  double delta = 0.0;
  int order = 0;
  std::string window = "centroid";
  std::string t_prime = "0,5,10,15,20,30,60,540";

  std::string level = "quick";
  std::string inject_fault = "none";
  double fault_eta = 1e-6;
};

// Every option that may also come from a config file or the environment.
const std::vector<std::string> kSettableKeys = {
    "out-dir",  "grid-n",       "threads", "direction", "epsilon",   "nu",        "beta",
    "t0",       "a0",           "B",       "k",         "lambda",    "eps-min",   "eps-max",
    "step",     "n",            "spectrum-max", "alpha-mod", "alpha-arg", "delta", "order",
    "window",   "t-prime",      "level",   "inject-fault", "fault-eta"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string canonical_key(std::string key) {
  for (char& c : key)
    if (c == '_') c = '-';
  if (key == "field") key = "B";
  for (const auto& k : kSettableKeys)
    if (k == key) return k;
  std::string lowered = key;
  for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& k : kSettableKeys) {
    std::string kl = k;
    for (char& c : kl) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (kl == lowered) return k;
  }
  throw ConfigError("unknown config key '" + key + "'");
}

/// key = value (or key: value) lines; '#' and ';' start comments, [sections]
/// are ignored, values may be quoted.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto sep = line.find('=');
    if (sep == std::string::npos) sep = line.find(':');
    if (sep == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, sep));
    std::string value = trim(line.substr(sep + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    out.emplace_back(canonical_key(key), value);
  }
  return out;
}

std::string env_name(const std::string& key) {
  std::string e = "STRAINWIG_";
  for (char c : key) e += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return e;
}

/// argv with config-file and environment settings inserted ahead of the
/// user's arguments; with take-last options the command line wins, then the
/// environment, then the file.
std::vector<std::string> assemble_args(int argc, char** argv) {
  std::vector<std::string> user(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < user.size(); ++i) {
    if (user[i] == "--config" && i + 1 < user.size()) config_path = user[i + 1];
    else if (user[i].rfind("--config=", 0) == 0) config_path = user[i].substr(9);
  }
  if (config_path.empty())
    if (const char* e = std::getenv("STRAINWIG_CONFIG")) config_path = e;

  std::vector<std::string> args;
  if (!config_path.empty())
    for (const auto& [k, v] : read_config_file(config_path)) args.push_back("--" + k + "=" + v);
  for (const auto& k : kSettableKeys)
    if (const char* e = std::getenv(env_name(k).c_str())) args.push_back("--" + k + "=" + e);
  args.insert(args.end(), user.begin(), user.end());
  return args;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in --" + what);
    }
  }
  if (out.empty()) throw ConfigError("--" + what + " is empty");
  return out;
}

std::vector<StrainDirection> directions(const Options& o, bool both_by_default) {
  if (!o.direction) {
    if (both_by_default) return {StrainDirection::Zigzag, StrainDirection::Armchair};
    return {StrainDirection::Zigzag};
  }
  if (*o.direction == "both") return {StrainDirection::Zigzag, StrainDirection::Armchair};
  std::vector<StrainDirection> out;
  for (const auto& item : split_list(*o.direction)) out.push_back(parse_direction(item));
  if (out.empty()) throw ConfigError("--direction is empty");
  return out;
}

StrainConfig strain(const Options& o, StrainDirection d, double eps) {
  StrainConfig c;
  c.direction = d;
  c.epsilon = eps;
  c.nu = o.nu;
  c.beta = o.beta;
  c.t0 = o.t0;
  c.a0 = o.a0;
  c.validate();
  return c;
}

std::string short_dir(StrainDirection d) { return d == StrainDirection::Zigzag ? "Z" : "A"; }

std::string tag(double v) { return format_double(v); }

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_echo(const Options& o) {
  json j;
  j["config"] = o.config;
  j["out_dir"] = o.out_dir;
  j["grid_n"] = o.grid_n;
  j["threads"] = o.threads > 0 ? o.threads : max_threads();
  j["direction"] = o.direction ? json(*o.direction) : json(nullptr);
  j["epsilon"] = o.epsilon ? json(*o.epsilon) : json(nullptr);
  j["nu"] = o.nu;
  j["beta"] = o.beta;
  j["t0"] = o.t0;
  j["a0"] = o.a0;
  j["B"] = o.B;
  j["k"] = o.k;
  j["lambda"] = o.lambda;
  j["eps_min"] = o.eps_min;
  j["eps_max"] = o.eps_max;
  j["step"] = o.step;
  j["n"] = o.n ? json(*o.n) : json(nullptr);
  j["spectrum_max"] = o.spectrum_max;
  j["alpha_mod"] = o.alpha_mod;
  j["alpha_arg"] = o.alpha_arg ? json(*o.alpha_arg) : json(nullptr);
  j["delta"] = o.delta;
  j["order"] = o.order;
  j["window"] = o.window;
  j["t_prime"] = o.t_prime;
  j["level"] = o.level;
  j["inject_fault"] = o.inject_fault;
  j["fault_eta"] = o.fault_eta;
  return j;
}

class Run {
public:
  Run(std::string command, const Options& o) : command_(std::move(command)), opts_(o) {
    dir_ = o.out_dir;
    fs::create_directories(dir_);
  }

  std::string path(const std::string& name) {
    const std::string p = (dir_ / name).string();
    outputs_.push_back(name);
    return p;
  }

  json& summary() { return summary_; }

  void write_field(const WignerField& f, const std::string& stem) {
    write_field_csv(f, path(stem + ".csv"));
    write_field_binary(f, path(stem + ".wgnr"));
    write_trace_png(f, path(stem + ".png"));
    const FieldStats s = field_stats(f);
    json j;
    j["state"] = f.meta.state;
    j["order"] = f.meta.order;
    j["t_prime"] = f.meta.t_prime;
    j["py_factor"] = f.meta.py_factor;
    j["normalization"] = s.trace_integral;
    j["min_trace"] = s.min_trace;
    j["max_trace"] = s.max_trace;
    j["hermiticity_error"] = s.max_hermiticity_error;
    j["diagonal_imag"] = s.max_diag_imag;
    summary_["fields"][stem] = j;
    std::cout << stem << ": max Tr " << s.max_trace << ", min Tr " << s.min_trace
              << ", integral " << s.trace_integral << "\n";
  }

  void finish() {
    json m;
    m["command"] = command_;
    m["version"] = kVersion;
    m["timestamp"] = utc_now();
    m["config"] = config_echo(opts_);
    m["outputs"] = outputs_;
    m["verification"] = summary_;
    const fs::path p = dir_ / (command_ + ".manifest.json");
    std::ofstream os(p);
    if (!os) throw ConfigError("cannot write " + p.string());
    os << m.dump(2) << "\n";
    std::cout << "wrote " << outputs_.size() << " files and " << p.string() << "\n";
  }

private:
  std::string command_;
  Options opts_;
  fs::path dir_;
  std::vector<std::string> outputs_;
  json summary_ = json::object();
};

FieldFrame frame_for(const Options& o, StrainDirection d, double eps) {
  return FieldFrame::make(o.B, o.k, cone_parameters(strain(o, d, eps)));
}

int cmd_sweep(const Options& o) {
  if (!(o.step > 0.0)) throw ConfigError("--step must be positive");
  if (o.eps_max < o.eps_min) throw ConfigError("--eps-max below --eps-min");
  const int count = static_cast<int>(std::floor((o.eps_max - o.eps_min) / o.step + 1e-9)) + 1;
  Run run("sweep", o);
  std::vector<cli::SweepSeries> series;
  for (StrainDirection d : directions(o, true)) {
    cli::SweepSeries s;
    s.direction = short_dir(d);
    const std::string name = "sweep_" + s.direction + ".csv";
    std::ofstream os(run.path(name));
    os << "epsilon,direction,a,b,zeta,vf_eff\n";
    double max_sum_gap = 0.0;
    for (int i = 0; i < count; ++i) {
      const double eps = std::round((o.eps_min + i * o.step) * 1e10) / 1e10;
      const ConeParameters c = cone_parameters(strain(o, d, eps));
      max_sum_gap = std::max({max_sum_gap, std::abs(c.a - c.a_sum), std::abs(c.b - c.b_sum)});
      s.rows.push_back({eps, c.a, c.b, c.zeta, c.vf_eff});
      os << format_double(eps) << ',' << s.direction << ',' << format_double(c.a) << ','
         << format_double(c.b) << ',' << format_double(c.zeta) << ','
         << format_double(c.vf_eff) << '\n';
    }
    run.summary()["rows"][s.direction] = count;
    run.summary()["closed_vs_sum_form"][s.direction] = max_sum_gap;
    series.push_back(std::move(s));
  }
  cli::write_sweep_svg(series, run.path("sweep.svg"));
  run.finish();
  return 0;
}

int cmd_landau(const Options& o) {
  std::vector<std::pair<int, double>> cases;
  if (o.n || o.epsilon) cases.emplace_back(o.n.value_or(0), o.epsilon.value_or(0.0));
  else cases = {{0, -0.2}, {1, 0.0}, {2, 0.1}, {3, 0.2}};
  Run run("landau", o);
  for (StrainDirection d : directions(o, true)) {
    for (const auto& [n, eps] : cases) {
      if (n < 0) throw ConfigError("--n must be non-negative");
      const FieldFrame frame = frame_for(o, d, eps);
      const GridSpec grid = default_landau_grid(frame, o.grid_n);
      const WignerField f = landau_field(n, frame, grid, o.lambda);
      const std::string stem = "landau_n" + std::to_string(n) + "_" + short_dir(d) + "_eps" + tag(eps);
      run.write_field(f, stem);

      std::ofstream os(run.path(stem + "_spectrum.csv"));
      os << "n,s,energy\n";
      for (int m = 0; m <= o.spectrum_max; ++m)
        for (int s : {1, -1})
          os << m << ',' << s << ',' << format_double(landau_energy(m, s, frame)) << '\n';
    }
  }
  run.finish();
  return 0;
}

CoherentSpec coherent_spec(const Options& o, double default_arg) {
  if (!(o.alpha_mod >= 0.0)) throw ConfigError("--alpha-mod must be non-negative");
  if (o.order < 0) throw ConfigError("--order must be non-negative");
  CoherentSpec spec;
  spec.alpha = std::polar(o.alpha_mod, o.alpha_arg.value_or(default_arg));
  spec.delta_phase = o.delta;
  spec.lambda = o.lambda;
  spec.N = o.order;
  return spec;
}

GridSpec coherent_window(const Options& o, const CoherentSpec& spec, const FieldFrame& frame) {
  if (o.window == "centroid") return default_coherent_grid(spec, frame, o.grid_n);
  if (o.window == "origin") return default_evolve_grid(spec, frame, o.grid_n);
  throw ConfigError("--window must be centroid or origin");
}

void write_coefficients(Run& run, const CoherentSpec& spec, const std::string& stem) {
  const CoefficientSet cs = coefficients(spec);
  std::ofstream os(run.path(stem + "_coefficients.csv"));
  os << "n,re,im,abs2\n";
  for (int i = 0; i < cs.size(); ++i)
    os << i << ',' << format_double(cs.c[i].real()) << ',' << format_double(cs.c[i].imag()) << ','
       << format_double(std::norm(cs.c[i])) << '\n';
}

int cmd_coherent(const Options& o) {
  const CoherentSpec spec = coherent_spec(o, std::numbers::pi / 4.0);
  std::vector<double> eps_list = {0.0, 0.1, 0.2};
  if (o.epsilon) eps_list = {*o.epsilon};
  Run run("coherent", o);
  for (StrainDirection d : directions(o, true)) {
    for (double eps : eps_list) {
      const FieldFrame frame = frame_for(o, d, eps);
      const WignerField f = coherent_field(spec, frame, coherent_window(o, spec, frame));
      const std::string stem = "coherent_" + short_dir(d) + "_eps" + tag(eps);
      run.write_field(f, stem);
      write_coefficients(run, spec, stem);
    }
  }
  run.finish();
  return 0;
}

int cmd_evolve(const Options& o) {
  const CoherentSpec spec = coherent_spec(o, -std::numbers::pi / 2.0);
  const std::vector<double> times = parse_doubles(o.t_prime, "t-prime");
  for (double t : times)
    if (!(t >= 0.0)) throw ConfigError("t' must be non-negative");
  const double eps = o.epsilon.value_or(0.2);
  Run run("evolve", o);
  for (StrainDirection d : directions(o, false)) {
    const FieldFrame frame = frame_for(o, d, eps);
    const GridSpec grid = default_evolve_grid(spec, frame, o.grid_n);
    const std::string base = "evolve_" + short_dir(d) + "_eps" + tag(eps);
    std::vector<TraceSummary> rows;
    for (double t : times) {
      const WignerField f = evolved_field(spec, frame, grid, t);
      run.write_field(f, base + "_t" + tag(t));
      rows.push_back(summarize(f));
    }
    std::ofstream os(run.path(base + "_summary.csv"));
    os << "t_prime,max_trace,argmax_x,argmax_px,argmax_xi,argmax_s,argmax_angle,min_trace\n";
    for (const auto& r : rows)
      os << format_double(r.t_prime) << ',' << format_double(r.max_trace) << ','
         << format_double(r.argmax_x) << ',' << format_double(r.argmax_px) << ','
         << format_double(r.argmax_xi) << ',' << format_double(r.argmax_sp) << ','
         << format_double(r.argmax_angle) << ',' << format_double(r.min_trace) << '\n';
    write_coefficients(run, spec, base);
  }
  run.finish();
  return 0;
}

Fault parse_fault(const std::string& name) {
  if (name == "none") return Fault::None;
  if (name == "laguerre") return Fault::LaguerreRecurrence;
  if (name == "anm-phase") return Fault::AnmPhase;
  if (name == "omega-zeta") return Fault::OmegaZeta;
  throw ConfigError("--inject-fault must be none, laguerre, anm-phase or omega-zeta");
}

int cmd_verify(const Options& o) {
  const verify::VerifyLevel level = verify::parse_level(o.level);
  const Fault fault = parse_fault(o.inject_fault);
  if (fault != Fault::None) set_fault(fault, o.fault_eta);
  const verify::VerifyReport report = verify::run_verify(level);
  clear_fault();

  Run run("verify", o);
  json j = report.to_json();
  j["inject_fault"] = o.inject_fault;
  j["fault_eta"] = fault == Fault::None ? 0.0 : o.fault_eta;
  {
    std::ofstream os(run.path("verify_report.json"));
    os << j.dump(2) << "\n";
  }
  for (const auto& c : report.checks) {
    const char* status = c.informational ? "INFO" : c.errored ? "ERROR" : c.passed ? "PASS" : "FAIL";
    std::cout << status << "  " << c.name << "  measured " << c.measured << "  tol " << c.tolerance;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << (report.passed() ? "verify passed" : "verify FAILED") << " (" << report.failures()
            << " failures, " << report.seconds << " s)\n";
  run.summary()["passed"] = report.passed();
  run.summary()["failures"] = report.failures();
  run.summary()["seconds"] = report.seconds;
  run.finish();
  return report.passed() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Wigner functions of strained graphene in a magnetic field"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  app.add_option("--config", o.config, "key = value config file (or STRAINWIG_CONFIG)");
  app.add_option("--out-dir", o.out_dir, "output directory")->capture_default_str();
  app.add_option("--grid-n", o.grid_n, "grid nodes per axis")->capture_default_str()->check(CLI::Range(5, 100000));
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--direction", o.direction, "z, a, both or a comma list");
  app.add_option("--epsilon", o.epsilon, "strain magnitude");
  app.add_option("--nu", o.nu, "Poisson ratio")->capture_default_str();
  app.add_option("--beta", o.beta, "decay constant of the hopping")->capture_default_str();
  app.add_option("--t0", o.t0, "pristine hopping")->capture_default_str();
  app.add_option("--a0", o.a0, "pristine bond length")->capture_default_str();
  app.add_option("--B,--field", o.B, "magnetic field")->capture_default_str();
  app.add_option("--k", o.k, "y wavenumber")->capture_default_str();
  app.add_option("--lambda", o.lambda, "band index +1 or -1")->capture_default_str()->check(CLI::IsMember({1, -1}));
  app.add_option("--eps-min", o.eps_min, "sweep start")->capture_default_str();
  app.add_option("--eps-max", o.eps_max, "sweep end")->capture_default_str();
  app.add_option("--step", o.step, "sweep step")->capture_default_str();
  app.add_option("--n", o.n, "Landau level");
  app.add_option("--spectrum-max", o.spectrum_max, "highest level in the spectrum table")->capture_default_str();
  app.add_option("--alpha-mod", o.alpha_mod, "|alpha|")->capture_default_str();
  app.add_option("--alpha-arg", o.alpha_arg, "arg alpha in radians");
  app.add_option("--delta", o.delta, "phase of the annihilation operator")->capture_default_str();
  app.add_option("--order", o.order, "truncation order (0 = adaptive)")->capture_default_str();
  app.add_option("--window", o.window, "centroid or origin")->capture_default_str();
  app.add_option("--t-prime", o.t_prime, "comma list of dimensionless times")->capture_default_str();
  app.add_option("--level", o.level, "quick or full")->capture_default_str();
  app.add_option("--inject-fault", o.inject_fault, "none, laguerre, anm-phase, omega-zeta")->capture_default_str();
  app.add_option("--fault-eta", o.fault_eta, "relative size of the injected fault")->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"sweep", "cone parameters over a strain range"},
      {"landau", "Wigner matrix of a Landau level"},
      {"coherent", "Wigner matrix of a coherent state"},
      {"evolve", "time evolution of a coherent-state Wigner matrix"},
      {"verify", "invariant and oracle checks"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    const std::vector<std::string> args = assemble_args(argc, argv);
    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) cargv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : kExitConfig;
    }
    if (o.threads > 0) set_num_threads(o.threads);

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "sweep") return cmd_sweep(o);
    if (cmd == "landau") return cmd_landau(o);
    if (cmd == "coherent") return cmd_coherent(o);
    if (cmd == "evolve") return cmd_evolve(o);
    return cmd_verify(o);
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << " (try --order " << e.suggested_order() << ")\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const GridTooCoarse& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const GapOpenedError& e) {
    std::cerr << "error: " << e.what() << " (epsilon = " << e.epsilon() << ")\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
