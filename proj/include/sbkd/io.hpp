#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbkd/distributions.hpp"
#include "sbkd/estimation.hpp"
#include "sbkd/harness.hpp"

namespace sbkd::io {

using Json = nlohmann::ordered_json;

/// Unreadable or out-of-range input data. `line` is 1-based, 0 if unknown.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Malformed study configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that parses back to the same double ("inf", "-inf",
/// "nan" for non-finite values).
std::string format_shortest(double v);
/// Fixed 17 significant digits.
std::string format_17(double v);

/// One observation per line; an optional first line `x` is a header; blank
/// lines are skipped. Values must lie strictly inside (0, 1).
Sample read_sample(std::istream& in);
/// Throws DataError(line 0) when the file cannot be opened.
Sample read_sample_file(const std::string& path);

void write_sample(std::ostream& out, std::span<const double> values);

/// CSV with header `x,pdf,cdf`.
void write_density_curve(std::ostream& out, const std::vector<CurvePoint>& curve);

/// CSV with header `true_a,true_b,model,method,est1,est2,loglik,aic,bic`.
void write_study_rows(std::ostream& out, const std::vector<StudyRow>& rows);
/// CSV with header `n,se_a,se_b`.
void write_se_curve(std::ostream& out, const std::vector<SePoint>& curve);

Json to_json(const FitReport& r);
Json describe_json(const SbkdParams& p, const SummaryStats& s, const ShapeClass& shape);

/// Parses a study file. `true_params` may be one {"a", "b"} object or a
/// list of them; one SimulationConfig is produced per entry.
std::vector<SimulationConfig> parse_study_config(const Json& j);

/// Plot data for a fitted model against its sample.
/// hist: `bin_lo,bin_hi,count,density` with Sturges' bin count on (0, 1);
/// density: `x,pdf,cdf` of the fitted model;
/// qq: `p,empirical,theoretical` at plotting positions (i - 0.5) / n.
void write_fit_histogram(std::ostream& out, const Sample& s);
void write_fit_density(std::ostream& out, Model model, const Theta& theta, std::size_t points);
void write_fit_qq(std::ostream& out, Model model, const Theta& theta, const Sample& s);

}  // namespace sbkd::io
