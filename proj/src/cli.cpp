#include "sbkd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sbkd/distributions.hpp"
#include "sbkd/estimation.hpp"
#include "sbkd/harness.hpp"
#include "sbkd/io.hpp"

namespace sbkd::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kUsageError = 2;

// Thrown for I/O failures inside a command.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or to `fallback` when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoFailure("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoFailure("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct SampleArgs {
  double a = 0.0;
  double b = 0.0;
  std::size_t n = 0;
  unsigned long long seed = kDefaultSeed;
  std::string out;
};

struct DescribeArgs {
  double a = 0.0;
  double b = 0.0;
  std::string curve;
  std::size_t points = 101;
  std::string out;
};

struct FitArgs {
  std::string model = "sbkd";
  std::string method = "mle";
  std::string in;
  std::vector<double> probs;
  std::string diagnostics;
  std::string out;
};

struct StudyArgs {
  std::string mode;
  std::string config;
  std::string out;
};

int cmd_sample(const SampleArgs& args, std::ostream& out) {
  const SizeBiasedKumaraswamy dist(SbkdParams(args.a, args.b));
  SeededGenerator gen(args.seed);
  const Sample s = dist.sample(args.n, gen);
  Sink sink(args.out, out);
  io::write_sample(sink.get(), s.values());
  sink.finish();
  return kOk;
}

int cmd_describe(const DescribeArgs& args, std::ostream& out) {
  const SbkdParams params(args.a, args.b);
  const SizeBiasedKumaraswamy dist(params);
  const auto json = io::describe_json(params, dist.summary(), dist.shape());
  if (!args.curve.empty()) {
    Sink curve(args.curve, out);
    io::write_density_curve(curve.get(), dist.density_curve(args.points));
    curve.finish();
  }
  Sink sink(args.out, out);
  sink.get() << json.dump(2) << '\n';
  sink.finish();
  return kOk;
}

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err) {
  const auto model = parse_model(args.model);
  const auto method = parse_method(args.method);
  if (!model || !method) {
    err << "fit: unknown " << (!model ? "model '" + args.model + "'" : "method '" + args.method + "'") << '\n';
    return kUsageError;
  }
  FitOptions options;
  if (!args.probs.empty()) {
    try {
      options.grid = QuantileGrid(args.probs);
    } catch (const std::invalid_argument& e) {
      err << "fit: --probs: " << e.what() << '\n';
      return kUsageError;
    }
  }
  const Sample s = io::read_sample_file(args.in);
  if (s.size() < 2) throw io::DataError("fit needs at least two observations", 0);
  const FitReport report = fit_model(*model, *method, s, options);

  if (!args.diagnostics.empty()) {
    const Theta theta{report.estimate1, report.estimate2};
    Sink hist(args.diagnostics + "_hist.csv", out);
    io::write_fit_histogram(hist.get(), s);
    hist.finish();
    Sink dens(args.diagnostics + "_density.csv", out);
    io::write_fit_density(dens.get(), *model, theta, 101);
    dens.finish();
    Sink qq(args.diagnostics + "_qq.csv", out);
    io::write_fit_qq(qq.get(), *model, theta, s);
    qq.finish();
  }

  Sink sink(args.out, out);
  sink.get() << io::to_json(report).dump(2) << '\n';
  sink.finish();
  return kOk;
}

int cmd_study(const StudyArgs& args, std::ostream& out) {
  std::ifstream in(args.config);
  if (!in) throw IoFailure("cannot open '" + args.config + "'");
  io::Json j;
  try {
    j = io::Json::parse(in);
  } catch (const io::Json::parse_error& e) {
    throw io::ConfigError(std::string("study config: ") + e.what());
  }
  const auto configs = io::parse_study_config(j);

  if (args.mode == "table1") {
    std::vector<StudyRow> rows;
    for (const auto& cfg : configs) {
      auto result = run_simulation_study(cfg);
      rows.insert(rows.end(), result.rows.begin(), result.rows.end());
    }
    Sink sink(args.out, out);
    io::write_study_rows(sink.get(), rows);
    sink.finish();
    return kOk;
  }
  if (configs.size() != 1) throw io::ConfigError("study config: se-curve mode takes a single true_params entry");
  const auto curve = run_se_experiment(configs.front());
  Sink sink(args.out, out);
  io::write_se_curve(sink.get(), curve);
  sink.finish();
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Size-biased Kumaraswamy distribution: sampling, description, fitting and studies", "sbkd"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw a seeded sample by inverse transform");
  sample->add_option("--a", sample_args.a, "Shape a")->required()->check(CLI::PositiveNumber);
  sample->add_option("--b", sample_args.b, "Shape b")->required()->check(CLI::PositiveNumber);
  sample->add_option("--n", sample_args.n, "Number of draws")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_args.seed, "Generator seed")->capture_default_str();
  sample->add_option("--out", sample_args.out, "Output file (default: stdout)");

  DescribeArgs describe_args;
  auto* describe = app.add_subcommand("describe", "Moments, median, shape and optional density curve");
  describe->add_option("--a", describe_args.a, "Shape a")->required()->check(CLI::PositiveNumber);
  describe->add_option("--b", describe_args.b, "Shape b")->required()->check(CLI::PositiveNumber);
  describe->add_option("--curve", describe_args.curve, "Write x,pdf,cdf grid to this CSV file");
  describe->add_option("--points", describe_args.points, "Interior grid points for --curve")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  describe->add_option("--out", describe_args.out, "Output file (default: stdout)");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Fit a model to a sample file");
  fit->add_option("--model", fit_args.model, "sbkd, kum or beta")->capture_default_str();
  fit->add_option("--method", fit_args.method, "mle or mqe")->capture_default_str();
  fit->add_option("--in", fit_args.in, "Sample CSV, one value per line")->required();
  fit->add_option("--probs", fit_args.probs, "Matching probabilities, e.g. 0.25,0.75")->delimiter(',');
  fit->add_option("--diagnostics", fit_args.diagnostics,
                  "Write <prefix>_hist.csv, <prefix>_density.csv and <prefix>_qq.csv");
  fit->add_option("--out", fit_args.out, "Output file (default: stdout)");

  StudyArgs study_args;
  auto* study = app.add_subcommand("study", "Run the simulation study or the standard-error curve");
  study->add_option("--mode", study_args.mode, "table1 or se-curve")
      ->required()
      ->check(CLI::IsMember({"table1", "se-curve"}));
  study->add_option("--config", study_args.config, "Study configuration (JSON)")->required();
  study->add_option("--out", study_args.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sbkd: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*sample) return cmd_sample(sample_args, out);
    if (*describe) return cmd_describe(describe_args, out);
    if (*fit) return cmd_fit(fit_args, out, err);
    if (*study) return cmd_study(study_args, out);
  } catch (const io::ConfigError& e) {
    err << "sbkd: " << e.what() << '\n';
    return kUsageError;
  } catch (const io::DataError& e) {
    err << "sbkd: " << e.what() << '\n';
    return kDataError;
  } catch (const IoFailure& e) {
    err << "sbkd: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "sbkd: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace sbkd::cli
