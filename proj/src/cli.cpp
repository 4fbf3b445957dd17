#include "bitscatter/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "bitscatter/analysis.hpp"
#include "bitscatter/complexity.hpp"
#include "bitscatter/errors.hpp"
#include "bitscatter/figures.hpp"
#include "bitscatter/harness.hpp"
#include "bitscatter/markov.hpp"
#include "bitscatter/records_csv.hpp"

namespace bitscatter {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string env_name(const std::string& long_name) {
  std::string name(kEnvPrefix);
  for (char c : long_name) name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

bool truthy(std::string v) {
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off" || v.empty()) return false;
  throw UsageError("expected a boolean, got '" + v + "'");
}

std::vector<CompressorKind> parse_compressor_list(const std::string& text) {
  std::vector<CompressorKind> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const std::string name = trim(item);
    if (name.empty()) continue;
    try {
      const CompressorKind kind = parse_compressor(name);
      if (std::find(out.begin(), out.end(), kind) == out.end()) out.push_back(kind);
    } catch (const std::exception&) {
      throw UsageError("--compressors: unknown compressor '" + name + "'");
    }
  }
  if (out.empty()) throw UsageError("--compressors: empty list");
  return out;
}

WindowScheme parse_windows(const std::string& s) {
  return s == "disjoint" ? WindowScheme::kDisjoint : WindowScheme::kSliding;
}

KlDirection parse_direction(const std::string& s) {
  return s == "model-to-empirical" ? KlDirection::kModelToEmpirical : KlDirection::kEmpiricalToModel;
}

std::string_view windows_name(WindowScheme w) { return w == WindowScheme::kDisjoint ? "disjoint" : "sliding"; }
std::string_view direction_name(KlDirection d) {
  return d == KlDirection::kModelToEmpirical ? "model-to-empirical" : "empirical-to-model";
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

std::string compressor_list(const std::vector<CompressorKind>& kinds) {
  std::string out;
  for (std::size_t i = 0; i < kinds.size(); ++i) out += (i ? "," : "") + std::string(to_string(kinds[i]));
  return out;
}

// Shared measurement flags of run and sweep.
struct MeasureFlags {
  int k_star = 5;
  std::uint64_t seed = 1;
  int word_len = 4;
  std::string windows = "sliding";
  std::string kl_direction = "empirical-to-model";
  std::string compressors = "lz,ppm";

  void add_to(CLI::App* app) {
    app->add_option("--kstar", k_star, "source order k*")->check(CLI::Range(1, kMaxOrder))->capture_default_str();
    app->add_option("--seed", seed, "base RNG seed")->capture_default_str();
    app->add_option("--word-len", word_len, "word length w for Delta0")->check(CLI::Range(1, 16))->capture_default_str();
    app->add_option("--windows", windows, "word windows: sliding or disjoint")
        ->check(CLI::IsMember({"sliding", "disjoint"}))
        ->capture_default_str();
    app->add_option("--kl-direction", kl_direction, "empirical-to-model or model-to-empirical")
        ->check(CLI::IsMember({"empirical-to-model", "model-to-empirical"}))
        ->capture_default_str();
    app->add_option("--compressors", compressors, "comma list of lz, ppm")->capture_default_str();
  }
};

struct RunFlags {
  MeasureFlags measure;
  int k = 5;
  std::size_t m = 1000;
  std::size_t n = 1000;
  int repeat = 0;
};

struct SweepFlags {
  MeasureFlags measure;
  bool desk = false;
  bool paper = false;
  std::string k_values;
  std::string m_values;
  int repeats = 5;
  std::size_t n = 1000;
  unsigned workers = 1;
  std::string out_dir;
  bool progress = false;
};

struct InputFlags {
  std::string in;
  std::string out_dir;
  int k_star = 5;
};

struct PlotFlags {
  InputFlags input;
  std::string figure = "all";
  std::string compressor = "lz";
};

void print_record_summary(std::ostream& out, const RunConfig& cfg, const RunRecord& r) {
  out << std::fixed << std::setprecision(4);
  out << "source order k*=" << cfg.k_star << ", learner order k=" << r.k << ", m=" << r.m << ", n=" << cfg.n
      << ", seed=" << r.seed << '\n';
  out << "overall error " << r.overall_error << " over " << r.effective_n << " predicted bits\n";
  for (CompressorKind kind : cfg.compressors)
    out << "sysRatio (" << to_string(kind) << ") " << r.rho(kind) << ", l0 (" << to_string(kind) << ") "
        << r.l0_bytes(kind) << " bytes\n";
  out << "xi0: n0=" << r.n0 << ", p0_hat=" << r.p0_hat;
  if (r.delta0_valid)
    out << ", Delta0=" << r.delta0_bits << " bits\n";
  else
    out << ", Delta0 undefined (n0 < word length)\n";
  out << std::defaultfloat;
}

int cmd_run(const RunFlags& f, std::ostream& out) {
  RunConfig cfg;
  cfg.k_star = f.measure.k_star;
  cfg.k = f.k;
  cfg.m = f.m;
  cfg.n = f.n;
  cfg.seed = RngSeed{f.measure.seed};
  cfg.compressors = parse_compressor_list(f.measure.compressors);
  cfg.word_len = f.measure.word_len;
  cfg.windows = parse_windows(f.measure.windows);
  cfg.kl_direction = parse_direction(f.measure.kl_direction);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const RunRecord r = run_once(cfg, f.repeat);
  out << kRecordsHeader << '\n' << format_record(r) << '\n';
  print_record_summary(out, cfg, r);
  return kExitOk;
}

int cmd_sweep(const SweepFlags& f, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (f.desk && f.paper) throw UsageError("--desk-scale and --paper-scale are mutually exclusive");
  SweepSpec spec = f.paper ? SweepSpec::paper_scale(f.measure.k_star) : SweepSpec::desk_scale(f.measure.k_star);
  if (!f.k_values.empty()) {
    spec.k_values.clear();
    for (long long k : parse_int_list(f.k_values)) {
      if (k < 1 || k > kMaxOrder) throw UsageError("--k-values: order " + std::to_string(k) + " out of range");
      spec.k_values.push_back(static_cast<int>(k));
    }
  }
  if (!f.m_values.empty()) {
    spec.m_values.clear();
    for (long long m : parse_int_list(f.m_values)) {
      if (m < 1) throw UsageError("--m-values: training length must be positive");
      spec.m_values.push_back(static_cast<std::size_t>(m));
    }
  }
  if (sub.count("--repeats") > 0) spec.repeats = f.repeats;
  if (sub.count("--n") > 0) spec.n = f.n;
  spec.base_seed = RngSeed{f.measure.seed};
  spec.word_len = f.measure.word_len;
  spec.windows = parse_windows(f.measure.windows);
  spec.kl_direction = parse_direction(f.measure.kl_direction);
  spec.compressors = parse_compressor_list(f.measure.compressors);
  spec.workers = f.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : f.workers;
  for (int k : spec.k_values) {
    RunConfig probe;
    probe.k_star = spec.k_star;
    probe.k = k;
    probe.m = spec.m_values.empty() ? 1 : spec.m_values.front();
    probe.n = spec.n;
    probe.word_len = spec.word_len;
    try {
      probe.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  const fs::path dir(f.out_dir);
  fs::create_directories(dir);
  const fs::path partial_path = dir / "records.partial.csv";
  std::ofstream partial(partial_path, std::ios::trunc);
  if (!partial) throw std::runtime_error("cannot write to " + dir.string());
  partial << kRecordsHeader << '\n' << std::flush;

  const std::size_t total = spec.run_count();
  std::size_t done = 0;
  const auto start = std::chrono::steady_clock::now();
  const auto records = sweep(spec, [&](const RunRecord& r) {
    partial << format_record(r) << '\n' << std::flush;
    ++done;
    if (f.progress) err << "\rrun " << done << '/' << total << std::flush;
  });
  if (f.progress) err << '\n';
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_records_csv(dir / "records.csv", records);
  partial.close();
  fs::remove(partial_path);

  std::ofstream manifest(dir / "manifest.txt", std::ios::trunc);
  if (!manifest) throw std::runtime_error("cannot write " + (dir / "manifest.txt").string());
  manifest << "# bitscatter " << kVersion << " sweep manifest\n"
           << "# runs=" << records.size() << "\n"
           << "# wall_seconds=" << std::fixed << std::setprecision(3) << seconds << std::defaultfloat << "\n"
           << "# reproduce with: bitscatter sweep --config manifest.txt --out <dir>\n"
           << "kstar=" << spec.k_star << "\n"
           << "k-values=" << join(spec.k_values) << "\n"
           << "m-values=" << join(spec.m_values) << "\n"
           << "repeats=" << spec.repeats << "\n"
           << "n=" << spec.n << "\n"
           << "seed=" << spec.base_seed.value << "\n"
           << "word-len=" << spec.word_len << "\n"
           << "windows=" << windows_name(spec.windows) << "\n"
           << "kl-direction=" << direction_name(spec.kl_direction) << "\n"
           << "compressors=" << compressor_list(spec.compressors) << "\n"
           << "workers=" << spec.workers << "\n";
  if (!manifest) throw std::runtime_error("failed writing manifest");

  out << "wrote " << records.size() << " records to " << (dir / "records.csv").string() << '\n';
  return kExitOk;
}

std::vector<RunRecord> load_records(const std::string& path) {
  if (!fs::exists(path)) throw std::runtime_error("input file not found: " + path);
  auto records = read_records_csv(fs::path(path));
  if (records.empty()) throw InsufficientDataError("no records in " + path);
  return records;
}

fs::path output_dir(const InputFlags& f) {
  if (!f.out_dir.empty()) return f.out_dir;
  const fs::path parent = fs::path(f.in).parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

std::string opt_str(const std::optional<double>& v) {
  if (!v) return "undefined";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << *v;
  return s.str();
}

int cmd_analyze(const InputFlags& f, std::ostream& out) {
  const auto records = load_records(f.in);
  const AnalysisReport report = analyze(records, f.k_star);
  const fs::path dir = output_dir(f);
  fs::create_directories(dir);
  write_analysis_csv(dir / "analysis.csv", report);

  out << "runs " << report.runs << " (valid Delta0: " << report.valid_runs << ")\n";
  out << std::fixed << std::setprecision(4);
  out << "  k  runs   error   rho_lz  rho_ppm    l0_lz  delta0_std\n";
  for (const auto& a : report.by_k)
    out << std::setw(3) << a.k << std::setw(6) << a.runs << std::setw(8) << a.overall_error.mean << std::setw(9)
        << a.rho_lz.mean << std::setw(9) << a.rho_ppm.mean << std::setw(9) << a.l0_lz.mean << std::setw(12)
        << a.delta0.stddev << '\n';
  for (CompressorKind kind : kAllCompressors) {
    const std::size_t i = index_of(kind);
    out << to_string(kind) << ": Pearson(l0, entropy bound) " << opt_str(report.pearson_l0_entropy[i])
        << ", Pearson(l0, Delta0) " << opt_str(report.pearson_l0_delta0[i]) << ", mean l0 " << report.l0_mean[i]
        << " bytes";
    if (report.l0_moments[i])
      out << ", skewness " << report.l0_moments[i]->skewness << ", excess kurtosis "
          << report.l0_moments[i]->excess_kurtosis;
    out << '\n';
  }
  for (const auto& [k, fit] : report.l0_vs_p0_fits) {
    out << "fit k=" << k << ": ";
    if (fit)
      out << fit->a << " x^2 + " << fit->b << " x + " << fit->c << '\n';
    else
      out << "undefined\n";
  }
  const auto& cl = report.clusters;
  out << "clusters: cool (p0 < " << ClusterSummary::kCoolBelow << ") " << cl.cool_runs << " runs, l0 std "
      << cl.cool_l0_lz.stddev << "; hot (p0 > " << ClusterSummary::kHotAbove << ") " << cl.hot_runs
      << " runs, l0 std " << cl.hot_l0_lz.stddev << "; between " << cl.gap_runs << '\n';
  out << "mean rho (ppm) non-increasing from k=2: " << (report.rho_ppm_trend.non_increasing ? "yes" : "no")
      << ", minimum at k=" << report.rho_ppm_trend.argmin_k << '\n';
  out << std::defaultfloat << "wrote " << (dir / "analysis.csv").string() << '\n';
  return kExitOk;
}

int cmd_plot(const PlotFlags& f, std::ostream& out) {
  const auto records = load_records(f.input.in);
  FigureOptions options;
  options.k_star = f.input.k_star;
  options.compressor = parse_compressor(f.compressor);
  std::vector<Figure> figures;
  if (f.figure == "all")
    figures.assign(all_figures().begin(), all_figures().end());
  else
    figures.push_back(parse_figure(f.figure));
  const fs::path dir = output_dir(f.input);
  for (Figure fig : figures)
    for (const auto& path : render_figure(fig, records, dir, options)) out << "wrote " << path.string() << '\n';
  return kExitOk;
}

// Index of the subcommand token, skipping a leading --config value.
std::optional<std::size_t> find_subcommand(const std::vector<std::string>& args, const CLI::App& app,
                                           std::string& config_path) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
      continue;
    }
    if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
      continue;
    }
    if (!a.empty() && a[0] == '-') continue;
    for (const CLI::App* sub : app.get_subcommands({}))
      if (sub->get_name() == a) return i;
    return std::nullopt;
  }
  return std::nullopt;
}

const CLI::Option* find_long(const CLI::App& sub, const std::string& key) {
  for (const CLI::Option* opt : sub.get_options()) {
    const auto& names = opt->get_lnames();
    if (std::find(names.begin(), names.end(), key) != names.end()) return opt;
  }
  return nullptr;
}

void append_setting(std::vector<std::string>& argv, const CLI::Option& opt, const std::string& key,
                    const std::string& value) {
  if (opt.get_expected_min() == 0) {
    if (truthy(value)) argv.push_back("--" + key);
  } else {
    argv.push_back("--" + key);
    argv.push_back(value);
  }
}

// Config-file and environment settings become leading flags of the subcommand,
// so explicit flags (parsed later, last one wins) take precedence.
std::vector<std::string> splice_settings(const std::vector<std::string>& args, const CLI::App& app,
                                         const EnvLookup& env) {
  std::string config_path;
  const auto pos = find_subcommand(args, app, config_path);
  if (!pos) return args;
  const CLI::App& sub = *app.get_subcommand(args[*pos]);

  // --config may also follow the subcommand; it is consumed here.
  std::vector<std::string> tail;
  for (std::size_t i = *pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      tail.push_back(args[i]);
    }
  }

  std::vector<std::string> injected;
  if (!config_path.empty()) {
    std::vector<std::pair<std::string, std::string>> entries;
    try {
      entries = read_config_file(config_path);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
    for (const auto& [key, value] : entries) {
      const CLI::Option* opt = find_long(sub, key);
      if (opt == nullptr) {
        bool known = false;
        for (const CLI::App* other : app.get_subcommands({})) known = known || find_long(*other, key) != nullptr;
        if (!known) throw UsageError("config: unknown key '" + key + "'");
        continue;
      }
      append_setting(injected, *opt, key, value);
    }
  }
  for (const CLI::Option* opt : sub.get_options()) {
    for (const std::string& name : opt->get_lnames()) {
      if (name == "help") continue;
      if (const auto value = env(env_name(name))) append_setting(injected, *opt, name, *value);
    }
  }

  std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(*pos) + 1);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

std::vector<long long> parse_int_list(std::string_view text) {
  std::vector<long long> out;
  auto to_int = [&](const std::string& s) {
    const std::string t = trim(s);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw std::invalid_argument("bad integer '" + t + "' in list '" + std::string(text) + "'");
    return v;
  };
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ',');) {
    if (trim(item).empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    std::string hi_part = item.substr(dots + 2);
    long long step = 1;
    if (const auto colon = hi_part.find(':'); colon != std::string::npos) {
      step = to_int(hi_part.substr(colon + 1));
      hi_part = hi_part.substr(0, colon);
    }
    const long long lo = to_int(item.substr(0, dots)), hi = to_int(hi_part);
    if (step <= 0 || hi < lo) throw std::invalid_argument("bad range '" + trim(item) + "'");
    for (long long v = lo; v <= hi; v += step) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + std::string(text) + "'");
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || trim(t.substr(0, eq)).empty())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.emplace_back(key, trim(t.substr(eq + 1)));
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Learning-complexity experiments on Markov bit sources", "bitscatter"};
  app.set_version_flag("--version", std::string(kVersion));
  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file (flags override it)");
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "train and test one learner, print the run record");
  run->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  run_flags.measure.add_to(run);
  run->add_option("--k", run_flags.k, "learner order k")->check(CLI::Range(1, kMaxOrder))->capture_default_str();
  run->add_option("--m", run_flags.m, "training length")->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--n", run_flags.n, "test length")->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--repeat", run_flags.repeat, "repeat index mixed into the seed")->check(CLI::NonNegativeNumber)->capture_default_str();

  SweepFlags sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the (k, m, repeat) grid and write records.csv");
  sweep_cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sweep_flags.measure.add_to(sweep_cmd);
  sweep_cmd->add_flag("--desk-scale", sweep_flags.desk, "k 1..10, m {100,500,1000,2000,5000,10000}, 5 repeats (default)");
  sweep_cmd->add_flag("--paper-scale", sweep_flags.paper, "k 1..10, m 100..10000:100, 10 repeats");
  sweep_cmd->add_option("--k-values", sweep_flags.k_values, "learner orders, e.g. 1..10 or 2,4,6");
  sweep_cmd->add_option("--m-values", sweep_flags.m_values, "training lengths, e.g. 100..10000:100");
  sweep_cmd->add_option("--repeats", sweep_flags.repeats, "runs per (k, m) cell")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--n", sweep_flags.n, "test length")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--workers", sweep_flags.workers, "worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_flags.out_dir, "output directory")->required();
  sweep_cmd->add_flag("--progress", sweep_flags.progress, "print a progress line to stderr");

  InputFlags analyze_flags;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "aggregate a records CSV and write analysis.csv");
  analyze_cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  analyze_cmd->add_option("--in", analyze_flags.in, "records CSV")->required();
  analyze_cmd->add_option("--out", analyze_flags.out_dir, "output directory (default: next to the input)");
  analyze_cmd->add_option("--kstar", analyze_flags.k_star, "source order k*")->check(CLI::Range(1, kMaxOrder))->capture_default_str();

  PlotFlags plot_flags;
  std::vector<std::string> figure_choices{"all"};
  for (Figure fig : all_figures()) figure_choices.emplace_back(figure_name(fig));
  CLI::App* plot = app.add_subcommand("plot", "render SVG figures and their data CSVs from a records CSV");
  plot->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  plot->add_option("--in", plot_flags.input.in, "records CSV")->required();
  plot->add_option("--out", plot_flags.input.out_dir, "output directory (default: next to the input)");
  plot->add_option("--kstar", plot_flags.input.k_star, "source order k*")->check(CLI::Range(1, kMaxOrder))->capture_default_str();
  plot->add_option("--figure", plot_flags.figure, "figure name or 'all'")->check(CLI::IsMember(figure_choices))->capture_default_str();
  plot->add_option("--compressor", plot_flags.compressor, "compressor for l0 and rho axes")
      ->check(CLI::IsMember({"lz", "gzip", "ppm"}))
      ->capture_default_str();

  try {
    std::vector<std::string> argv = splice_settings(args, app, env);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_flags, out);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, *sweep_cmd, out, err);
    if (*analyze_cmd) return cmd_analyze(analyze_flags, out);
    if (*plot) return cmd_plot(plot_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << "run 'bitscatter --help' for usage\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bitscatter
