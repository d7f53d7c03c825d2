#include <algorithm>
#include <cmath>
#include <numeric>

#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"

namespace forumlens::stats {

namespace {

std::pair<double, double> mean_var(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return {mean, ss / (n - 1.0)};
}

}  // namespace

WelchResult welch_t_test(std::span<const double> group1, std::span<const double> group2) {
  if (group1.size() < 2 || group2.size() < 2) throw DegenerateGroup("each group needs at least 2 values");
  WelchResult r;
  std::tie(r.mean1, r.var1) = mean_var(group1);
  std::tie(r.mean2, r.var2) = mean_var(group2);
  const double n1 = static_cast<double>(group1.size()), n2 = static_cast<double>(group2.size());
  const double q1 = r.var1 / n1, q2 = r.var2 / n2;
  if (q1 + q2 == 0) throw DegenerateGroup("both groups have zero variance");
  r.t = (r.mean1 - r.mean2) / std::sqrt(q1 + q2);
  r.df = (q1 + q2) * (q1 + q2) / (q1 * q1 / (n1 - 1.0) + q2 * q2 / (n2 - 1.0));
  r.p_greater = student_t_sf(r.t, r.df);
  r.p_two_sided = std::min(1.0, 2.0 * student_t_sf(std::fabs(r.t), r.df));
  return r;
}

MannWhitneyResult mann_whitney(std::span<const double> group1, std::span<const double> group2,
                               std::size_t exact_limit) {
  const std::size_t n1 = group1.size(), n2 = group2.size(), n = n1 + n2;
  if (n1 == 0 || n2 == 0) throw DegenerateGroup("Mann-Whitney needs two nonempty groups");

  // Midranks in half units (2 * rank), so ties stay integral.
  std::vector<std::pair<double, int>> pooled;
  pooled.reserve(n);
  for (double v : group1) pooled.emplace_back(v, 1);
  for (double v : group2) pooled.emplace_back(v, 2);
  std::sort(pooled.begin(), pooled.end());
  std::vector<std::int64_t> half_rank(n);
  double tie_term = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && pooled[j].first == pooled[i].first) ++j;
    const auto h = static_cast<std::int64_t>(i + 1 + j);  // 2 * midrank of positions i+1..j
    for (std::size_t k = i; k < j; ++k) half_rank[k] = h;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  std::int64_t r1h = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (pooled[k].second == 1) r1h += half_rank[k];

  MannWhitneyResult r;
  const double nn1 = static_cast<double>(n1), nn2 = static_cast<double>(n2);
  r.u = static_cast<double>(r1h) / 2.0 - nn1 * (nn1 + 1.0) / 2.0;

  if (n <= exact_limit) {
    r.exact = true;
    const std::int64_t max_sum = std::accumulate(half_rank.begin(), half_rank.end(), std::int64_t{0});
    std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t item = 0; item < n; ++item) {
      const auto h = static_cast<std::size_t>(half_rank[item]);
      for (std::size_t k = std::min(n1, item + 1); k >= 1; --k)
        for (std::size_t s = static_cast<std::size_t>(max_sum); s >= h; --s) {
          ways[k][s] += ways[k - 1][s - h];
          if (s == h) break;
        }
    }
    const std::int64_t offset = static_cast<std::int64_t>(n1 * (n1 + 1));  // 2 * n1(n1+1)/2
    const std::int64_t center = static_cast<std::int64_t>(n1 * n2);         // 2 * E[U]
    const std::int64_t obs_dev = std::llabs(r1h - offset - center);
    double total = 0, greater = 0, extreme = 0;
    for (std::int64_t s = 0; s <= max_sum; ++s) {
      const double c = ways[n1][static_cast<std::size_t>(s)];
      if (c == 0) continue;
      total += c;
      if (s >= r1h) greater += c;
      if (std::llabs(s - offset - center) >= obs_dev) extreme += c;
    }
    r.p_greater = greater / total;
    r.p_two_sided = std::min(1.0, extreme / total);
    return r;
  }

  const double mu = nn1 * nn2 / 2.0;
  const double nd = static_cast<double>(n);
  const double var = nn1 * nn2 / 12.0 * ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
  if (var <= 0) {
    r.p_greater = r.p_two_sided = 1.0;
    return r;
  }
  const double sd = std::sqrt(var);
  r.p_greater = normal_sf((r.u - mu - 0.5) / sd);
  r.p_two_sided = std::min(1.0, 2.0 * normal_sf((std::fabs(r.u - mu) - 0.5) / sd));
  return r;
}

TwoSampleResult two_sample_tests(std::span<const double> group1, std::span<const double> group2) {
  return {welch_t_test(group1, group2), mann_whitney(group1, group2)};
}

std::vector<double> smalltalk_moving_average(std::span<const double> eta, double alpha, MaDenominator denominator) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("moving-average alpha must lie in (0, 1)");
  std::vector<double> out;
  out.reserve(eta.size());
  double num = 0, den = 0, power = 1;
  for (double e : eta) {
    num = alpha * num + e;
    power *= alpha;
    den = denominator == MaDenominator::Printed ? den + power : alpha * den + 1.0;
    out.push_back(num / den);
  }
  return out;
}

}  // namespace forumlens::stats
