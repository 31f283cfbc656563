#include "sbkd/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sbkd::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <typename T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("study config: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("study config: field '") + key + "' has the wrong type");
  }
}

SbkdParams parse_truth(const Json& j) {
  if (!j.is_object()) throw ConfigError("study config: true_params entries must be objects with 'a' and 'b'");
  const double a = require<double>(j, "a");
  const double b = require<double>(j, "b");
  try {
    return SbkdParams(a, b);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("study config: ") + e.what());
  }
}

}  // namespace

std::string format_shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Sample read_sample(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (values.empty() && (t == "x" || t == "\"x\"")) continue;
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
      std::ostringstream os;
      os << "line " << lineno << ": cannot parse '" << t << "' as a number";
      throw DataError(os.str(), lineno);
    }
    if (!(v > 0.0 && v < 1.0)) {
      std::ostringstream os;
      os << "line " << lineno << ": value " << t << " is outside (0, 1)";
      throw DataError(os.str(), lineno);
    }
    values.push_back(v);
  }
  if (values.empty()) throw DataError("no observations in input", 0);
  return Sample(std::move(values));
}

Sample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'", 0);
  return read_sample(in);
}

void write_sample(std::ostream& out, std::span<const double> values) {
  for (double v : values) out << format_17(v) << '\n';
}

void write_density_curve(std::ostream& out, const std::vector<CurvePoint>& curve) {
  out << "x,pdf,cdf\n";
  for (const auto& p : curve) out << format_shortest(p.x) << ',' << format_shortest(p.pdf) << ',' << format_shortest(p.cdf) << '\n';
}

void write_study_rows(std::ostream& out, const std::vector<StudyRow>& rows) {
  out << "true_a,true_b,model,method,est1,est2,loglik,aic,bic\n";
  for (const auto& r : rows) {
    out << format_shortest(r.true_params.a()) << ',' << format_shortest(r.true_params.b()) << ',' << to_string(r.model)
        << ',' << to_string(r.method) << ',' << format_shortest(r.estimate1) << ',' << format_shortest(r.estimate2) << ','
        << format_shortest(r.loglik) << ',' << format_shortest(r.aic) << ',' << format_shortest(r.bic) << '\n';
  }
}

void write_se_curve(std::ostream& out, const std::vector<SePoint>& curve) {
  out << "n,se_a,se_b\n";
  for (const auto& p : curve) out << p.n << ',' << format_shortest(p.se_a) << ',' << format_shortest(p.se_b) << '\n';
}

Json to_json(const FitReport& r) {
  Json j;
  j["model"] = std::string(to_string(r.model));
  j["method"] = std::string(to_string(r.method));
  j["estimate1"] = number_or_null(r.estimate1);
  j["estimate2"] = number_or_null(r.estimate2);
  j["loglik"] = number_or_null(r.loglik);
  j["aic"] = number_or_null(r.aic);
  j["bic"] = number_or_null(r.bic);
  if (r.std_errors)
    j["std_errors"] = Json::array({(*r.std_errors)[0], (*r.std_errors)[1]});
  else
    j["std_errors"] = nullptr;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  return j;
}

Json describe_json(const SbkdParams& p, const SummaryStats& s, const ShapeClass& shape) {
  Json j;
  j["a"] = p.a();
  j["b"] = p.b();
  j["mean"] = number_or_null(s.mean);
  j["variance"] = number_or_null(s.variance);
  j["median"] = number_or_null(s.median);
  j["skewness"] = number_or_null(s.skewness);
  j["kurtosis"] = number_or_null(s.kurtosis);
  j["harmonic_mean"] = number_or_null(s.harmonic_mean);
  j["shape"] = std::string(to_string(shape.category));
  j["mode"] = shape.mode ? Json(*shape.mode) : Json(nullptr);
  return j;
}

std::vector<SimulationConfig> parse_study_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("study config: top level must be a JSON object");
  if (!j.contains("true_params")) throw ConfigError("study config: missing field 'true_params'");

  std::vector<SbkdParams> truths;
  const Json& tp = j.at("true_params");
  if (tp.is_array()) {
    for (const Json& e : tp) truths.push_back(parse_truth(e));
  } else {
    truths.push_back(parse_truth(tp));
  }
  if (truths.empty()) throw ConfigError("study config: true_params is empty");

  SimulationConfig base;
  const auto sizes = require<std::vector<long long>>(j, "sample_sizes");
  for (long long n : sizes) {
    if (n < 2) throw ConfigError("study config: sample sizes must be at least 2");
    base.sample_sizes.push_back(static_cast<std::size_t>(n));
  }
  if (j.contains("replications")) base.replications = require<int>(j, "replications");
  if (j.contains("seed")) base.seed = require<std::uint64_t>(j, "seed");
  if (j.contains("threads")) base.threads = require<unsigned>(j, "threads");
  if (j.contains("models")) {
    base.models.clear();
    for (const auto& name : require<std::vector<std::string>>(j, "models")) {
      const auto m = parse_model(name);
      if (!m) throw ConfigError("study config: unknown model '" + name + "'");
      base.models.push_back(*m);
    }
  }
  if (j.contains("method")) {
    const auto name = require<std::string>(j, "method");
    const auto m = parse_method(name);
    if (!m) throw ConfigError("study config: unknown method '" + name + "'");
    base.method = *m;
  }
  if (j.contains("probs")) {
    try {
      base.options.grid = QuantileGrid(require<std::vector<double>>(j, "probs"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("study config: ") + e.what());
    }
  }
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("study config: ") + e.what());
  }

  std::vector<SimulationConfig> out;
  for (const auto& t : truths) {
    SimulationConfig c = base;
    c.true_params = t;
    out.push_back(std::move(c));
  }
  return out;
}

void write_fit_histogram(std::ostream& out, const Sample& s) {
  const std::size_t n = s.size();
  const auto bins = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
  std::vector<std::size_t> counts(bins, 0);
  for (double x : s.values()) counts[std::min(bins - 1, static_cast<std::size_t>(x * static_cast<double>(bins)))]++;
  const double width = 1.0 / static_cast<double>(bins);
  out << "bin_lo,bin_hi,count,density\n";
  for (std::size_t i = 0; i < bins; ++i) {
    const double lo = static_cast<double>(i) * width;
    const double hi = static_cast<double>(i + 1) * width;
    out << format_shortest(lo) << ',' << format_shortest(hi) << ',' << counts[i] << ','
        << format_shortest(static_cast<double>(counts[i]) / (static_cast<double>(n) * width)) << '\n';
  }
}

void write_fit_density(std::ostream& out, Model model, const Theta& theta, std::size_t points) {
  out << "x,pdf,cdf\n";
  for (std::size_t i = 1; i <= points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(points + 1);
    out << format_shortest(x) << ',' << format_shortest(model_pdf(model, theta, x)) << ','
        << format_shortest(model_cdf(model, theta, x)) << '\n';
  }
}

void write_fit_qq(std::ostream& out, Model model, const Theta& theta, const Sample& s) {
  const auto sorted = s.sorted();
  const double n = static_cast<double>(sorted.size());
  out << "p,empirical,theoretical\n";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double p = (static_cast<double>(i) + 0.5) / n;
    out << format_shortest(p) << ',' << format_shortest(sorted[i]) << ','
        << format_shortest(model_quantile(model, theta, p)) << '\n';
  }
}

}  // namespace sbkd::io
