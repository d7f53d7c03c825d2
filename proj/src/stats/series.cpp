#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"

namespace forumlens::stats {

ActivitySeries build_series(const Course& course, const SeriesOptions& options) {
  std::int64_t days = 0;
  if (options.days) {
    days = *options.days;
  } else if (course.factors && course.factors->D > 0) {
    days = std::llround(course.factors->D);
  } else {
    for (const auto& t : course.threads)
      for (const auto& p : t.posts) days = std::max(days, course.day_index(p.timestamp));
  }
  days = std::max<std::int64_t>(days, 0);
  ActivitySeries s;
  s.course_id = course.course_id;
  s.y.assign(static_cast<std::size_t>(days), 0.0);
  s.z.assign(static_cast<std::size_t>(days), 0.0);
  std::vector<std::unordered_set<std::string_view>> authors(static_cast<std::size_t>(days));
  for (const auto& t : course.threads)
    for (const auto& p : t.posts) {
      if (p.is_staff && !options.include_staff) continue;
      const std::int64_t d = course.day_index(p.timestamp);
      if (d < 1 || d > days) continue;
      const auto i = static_cast<std::size_t>(d - 1);
      s.y[i] += 1;
      authors[i].insert(p.author_id);
    }
  for (std::size_t i = 0; i < authors.size(); ++i) s.z[i] = static_cast<double>(authors[i].size());
  return s;
}

std::vector<ActivitySeries> build_series(const Corpus& corpus, const SeriesOptions& options) {
  std::vector<ActivitySeries> out;
  out.reserve(corpus.courses.size());
  for (const auto& c : corpus.courses) out.push_back(build_series(c, options));
  return out;
}

Trend fit_course_trend(std::span<const double> y) {
  if (y.size() < 2) throw DegenerateDesign("a trend needs at least 2 days");
  const auto n = static_cast<Eigen::Index>(y.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = static_cast<double>(i + 1);
    v(i) = y[static_cast<std::size_t>(i)];
  }
  if (n == 2) {
    // Exact line through two points; no residual degrees of freedom.
    const double slope = v(1) - v(0);
    return {slope, v(0) - slope, 0.0};
  }
  const OlsFit f = fit_ols(X, v, {"Intercept", "t"});
  return {f.coefficients[1], f.coefficients[0], f.std_errors[1]};
}

std::vector<double> differences(std::span<const double> y) {
  std::vector<double> d;
  for (std::size_t i = 1; i < y.size(); ++i) d.push_back(y[i] - y[i - 1]);
  return d;
}

std::vector<double> trim(std::span<const double> values, double frac) {
  if (!(frac >= 0.0 && frac < 0.5)) throw ConfigError("trim fraction must lie in [0, 0.5)");
  const std::size_t m = values.size();
  const auto k = static_cast<std::size_t>(std::ceil(frac * static_cast<double>(m) - 1e-9));
  if (2 * k >= m) return {};
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<bool> keep(m, true);
  for (std::size_t i = 0; i < k; ++i) keep[order[i]] = keep[order[m - 1 - i]] = false;
  std::vector<double> out;
  out.reserve(m - 2 * k);
  for (std::size_t i = 0; i < m; ++i)
    if (keep[i]) out.push_back(values[i]);
  return out;
}

std::vector<double> trim_and_diff(std::span<const double> y, double frac) {
  const auto d = differences(y);
  return trim(d, frac);
}

}  // namespace forumlens::stats
