#pragma once

// Activity series, trend and panel regressions, normality screening,
// two-sample tests, thread-attention counts and the small-talk moving average.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forumlens/corpus.hpp"

namespace forumlens::stats {

// ---------------------------------------------------------- distributions

double normal_cdf(double x) noexcept;
double normal_sf(double x) noexcept;  // 1 - cdf, accurate in the upper tail
/// Wichura's AS 241 (PPND16); -inf / +inf at p = 0 / 1.
double normal_quantile(double p);

/// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double df);
double student_t_sf(double t, double df);
double student_t_quantile(double p, double df);

// -------------------------------------------------------------------- OLS

struct OlsFit {
  std::vector<std::string> terms;
  std::vector<double> coefficients, std_errors, t_stats, p_values;  // p two-sided
  double r2 = 0, adj_r2 = 0, sigma2 = 0;
  std::size_t n_obs = 0, dof = 0;
  std::vector<double> residuals;
};

/// Classical OLS by column-pivoted Householder QR. Throws RankDeficient
/// naming the dependent columns, DegenerateDesign when n <= p.
OlsFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, std::vector<std::string> terms);

// --------------------------------------------------------------- series

struct ActivitySeries {
  std::string course_id;
  std::vector<double> y;  // posts on day t = 1..D (index t - 1)
  std::vector<double> z;  // distinct authors on day t
  std::size_t days() const noexcept { return y.size(); }
};

struct SeriesOptions {
  /// Series length; by default the course's D factor when present, else the
  /// last day with a post.
  std::optional<std::int64_t> days;
  bool include_staff = true;
};

ActivitySeries build_series(const Course& course, const SeriesOptions& options = {});
std::vector<ActivitySeries> build_series(const Corpus& corpus, const SeriesOptions& options = {});

struct Trend {
  double slope = 0, intercept = 0, slope_se = 0;
};

/// y_t = slope * t + intercept over t = 1..D. Needs D >= 2.
Trend fit_course_trend(std::span<const double> y);

/// d_t = y_{t+1} - y_t.
std::vector<double> differences(std::span<const double> y);
/// Differences with the ceil(frac * m) smallest and largest removed
/// (original order kept). Requires 0 <= frac < 0.5.
std::vector<double> trim_and_diff(std::span<const double> y, double frac = 0.03);
std::vector<double> trim(std::span<const double> values, double frac);

struct ShapiroResult {
  double w = 0, p = 0;
};
/// Royston's AS R94 algorithm. Throws SampleSizeError outside 3 <= n <= 5000
/// and DegenerateGroup for a zero-range sample.
ShapiroResult shapiro_wilk(std::span<const double> sample);

/// (Phi^-1((i - 0.5) / n), i-th smallest value) for i = 1..n.
std::vector<std::pair<double, double>> qq_points(std::span<const double> sample);
/// Squared correlation of Q-Q points.
double qq_r2(std::span<const std::pair<double, double>> points);

// ---------------------------------------------------------------- panel

enum class Target { Y, Z, LogZ };
std::string_view to_string(Target target) noexcept;

struct PanelCourse {
  ActivitySeries series;
  CourseFactors factors;
};

/// M = median of the first three daily post counts; M' = distinct authors
/// over days 1-3.
std::pair<double, double> popularity(const Course& course, const ActivitySeries& series, bool include_staff = true);

struct PanelOptions {
  double staff_scale = 100;  // S enters as raw staff posts / staff_scale
};

struct PanelFit {
  OlsFit fit;
  std::size_t dropped_zero = 0;  // z = 0 rows skipped by the log model
};

/// Column names for a target, in regression order.
std::vector<std::string> panel_terms(Target target);
/// Rows for every (course, day); Y uses M, Z and LogZ use M'. LogZ drops the
/// L and H terms and the z = 0 rows.
PanelFit fit_panel_ols(std::span<const PanelCourse> courses, Target target, const PanelOptions& options = {});
/// The design matrix and response fit_panel_ols uses.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> panel_design(std::span<const PanelCourse> courses, Target target,
                                                          const PanelOptions& options, std::size_t* dropped = nullptr);

// ------------------------------------------------------------- attention

/// Other threads created within t_days * 86400 seconds of each thread.
std::vector<std::size_t> thread_neighborhoods(const Course& course, double t_days);
std::size_t thread_neighborhood(const Course& course, std::size_t thread, double t_days);

struct Partition {
  std::vector<std::size_t> g1;  // f <= threshold
  std::vector<std::size_t> g2;
};
Partition partition_by_threshold(std::span<const std::size_t> f_values, double threshold = 140);

struct WelchResult {
  double t = 0, df = 0;
  double p_greater = 0;  // H1: mean(group1) > mean(group2)
  double p_two_sided = 0;
  double mean1 = 0, mean2 = 0, var1 = 0, var2 = 0;
};
/// Throws DegenerateGroup when a group has < 2 values or both variances are 0.
WelchResult welch_t_test(std::span<const double> group1, std::span<const double> group2);

struct MannWhitneyResult {
  double u = 0;          // U of group1: R1 - n1 (n1 + 1) / 2
  double p_greater = 0;  // H1: group1 tends to be larger
  double p_two_sided = 0;
  bool exact = false;
};
/// Exact permutation distribution (ties kept as midranks) when
/// n1 + n2 <= exact_limit, else the normal approximation with tie and
/// continuity corrections.
MannWhitneyResult mann_whitney(std::span<const double> group1, std::span<const double> group2,
                               std::size_t exact_limit = 50);

struct TwoSampleResult {
  WelchResult welch;
  MannWhitneyResult mann_whitney;
};
TwoSampleResult two_sample_tests(std::span<const double> group1, std::span<const double> group2);

// ------------------------------------------------------- moving average

enum class MaDenominator { Printed, TimeAligned };

/// s_t = sum_{i<=t} eta_i alpha^(t-i) / sum_{i<=t} alpha^i (Printed) or
/// / sum_{i<=t} alpha^(t-i) (TimeAligned).
std::vector<double> smalltalk_moving_average(std::span<const double> eta, double alpha = 0.99,
                                             MaDenominator denominator = MaDenominator::Printed);

}  // namespace forumlens::stats
