#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"

namespace forumlens::stats {

std::string_view to_string(Target target) noexcept {
  switch (target) {
    case Target::Y: return "y";
    case Target::Z: return "z";
    case Target::LogZ: return "logz";
  }
  return "y";
}

std::pair<double, double> popularity(const Course& course, const ActivitySeries& series, bool include_staff) {
  std::vector<double> first(series.y.begin(), series.y.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, series.y.size())));
  double m = 0;
  if (!first.empty()) {
    std::sort(first.begin(), first.end());
    const std::size_t k = first.size();
    m = k % 2 ? first[k / 2] : 0.5 * (first[k / 2 - 1] + first[k / 2]);
  }
  std::unordered_set<std::string_view> users;
  for (const auto& t : course.threads)
    for (const auto& p : t.posts) {
      if (p.is_staff && !include_staff) continue;
      const auto d = course.day_index(p.timestamp);
      if (d >= 1 && d <= 3) users.insert(p.author_id);
    }
  return {m, static_cast<double>(users.size())};
}

namespace {

// Factor columns in regression order; `reduced` drops L and H.
std::vector<char> factor_keys(bool reduced) {
  if (reduced) return {'Q', 'V', 'D', 'P', 'S', 'M'};
  return {'Q', 'V', 'L', 'D', 'P', 'S', 'H', 'M'};
}

double factor_value(const CourseFactors& f, char key, Target target, const PanelOptions& o) {
  switch (key) {
    case 'Q': return f.Q;
    case 'V': return f.V;
    case 'L': return f.L;
    case 'D': return f.D;
    case 'P': return f.P;
    case 'S': return f.S / o.staff_scale;
    case 'H': return f.H;
    case 'M': return target == Target::Y ? f.M : f.M_prime;
  }
  return 0;
}

}  // namespace

std::vector<std::string> panel_terms(Target target) {
  const auto keys = factor_keys(target == Target::LogZ);
  std::vector<std::string> terms{"Intercept"};
  for (char k : keys) terms.push_back(std::string(1, k) + "t");
  for (char k : keys) terms.emplace_back(1, k);
  terms.emplace_back("t");
  return terms;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> panel_design(std::span<const PanelCourse> courses, Target target,
                                                          const PanelOptions& options, std::size_t* dropped) {
  if (!(options.staff_scale > 0)) throw ConfigError("staff scale must be positive");
  const auto keys = factor_keys(target == Target::LogZ);
  const auto p = static_cast<Eigen::Index>(2 * keys.size() + 2);
  std::size_t rows = 0, skipped = 0;
  for (const auto& c : courses)
    for (std::size_t t = 0; t < c.series.days(); ++t) {
      if (target == Target::LogZ && c.series.z[t] <= 0) ++skipped;
      else ++rows;
    }
  Eigen::MatrixXd X(static_cast<Eigen::Index>(rows), p);
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows));
  Eigen::Index r = 0;
  for (const auto& c : courses) {
    std::vector<double> f;
    for (char k : keys) f.push_back(factor_value(c.factors, k, target, options));
    for (std::size_t t = 0; t < c.series.days(); ++t) {
      const double day = static_cast<double>(t + 1);
      double v = 0;
      switch (target) {
        case Target::Y: v = c.series.y[t]; break;
        case Target::Z: v = c.series.z[t]; break;
        case Target::LogZ:
          if (c.series.z[t] <= 0) continue;
          v = std::log(c.series.z[t]);
          break;
      }
      Eigen::Index col = 0;
      X(r, col++) = 1.0;
      for (double x : f) X(r, col++) = x * day;
      for (double x : f) X(r, col++) = x;
      X(r, col++) = day;
      y(r) = v;
      ++r;
    }
  }
  if (dropped) *dropped = skipped;
  return {std::move(X), std::move(y)};
}

PanelFit fit_panel_ols(std::span<const PanelCourse> courses, Target target, const PanelOptions& options) {
  PanelFit out;
  auto [X, y] = panel_design(courses, target, options, &out.dropped_zero);
  out.fit = fit_ols(X, y, panel_terms(target));
  return out;
}

}  // namespace forumlens::stats
