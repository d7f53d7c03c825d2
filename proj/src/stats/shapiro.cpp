// Shapiro-Wilk W and its p-value following Royston (1995), AS R94.

#include <algorithm>
#include <cmath>
#include <vector>

#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"

namespace forumlens::stats {

namespace {

// cc[0] + cc[1] x + ... + cc[nord-1] x^(nord-1)
double poly(const double* cc, int nord, double x) {
  double result = cc[0];
  if (nord > 1) {
    double p = x * cc[nord - 1];
    for (int j = nord - 2; j > 0; --j) p = (p + cc[j]) * x;
    result += p;
  }
  return result;
}

}  // namespace

ShapiroResult shapiro_wilk(std::span<const double> sample) {
  const int n = static_cast<int>(sample.size());
  if (n < 3) throw SampleSizeError("Shapiro-Wilk needs at least 3 values");
  if (n > 5000) throw SampleSizeError("Shapiro-Wilk supports at most 5000 values");

  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());

  static constexpr double small = 1e-19;
  static constexpr double g[2] = {-2.273, 0.459};
  static constexpr double c1[6] = {0.0, 0.221157, -0.147981, -2.07119, 4.434685, -2.706056};
  static constexpr double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
  static constexpr double c3[4] = {0.544, -0.39978, 0.025054, -6.714e-4};
  static constexpr double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
  static constexpr double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double c6[3] = {-0.4803, -0.082676, 0.0030302};

  const int nn2 = n / 2;
  std::vector<double> a(static_cast<std::size_t>(nn2) + 1);  // 1-based
  const double an = n;

  if (n == 3) {
    a[1] = std::sqrt(0.5);
  } else {
    const double an25 = an + 0.25;
    double summ2 = 0.0;
    for (int i = 1; i <= nn2; ++i) {
      a[i] = normal_quantile((i - 0.375) / an25);
      summ2 += a[i] * a[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 = poly(c1, 6, rsn) - a[1] / ssumm2;
    int i1;
    double fac;
    if (n > 5) {
      i1 = 3;
      const double a2 = -a[2] / ssumm2 + poly(c2, 6, rsn);
      fac = std::sqrt((summ2 - 2.0 * (a[1] * a[1]) - 2.0 * (a[2] * a[2])) / (1.0 - 2.0 * (a1 * a1) - 2.0 * (a2 * a2)));
      a[2] = a2;
    } else {
      i1 = 2;
      fac = std::sqrt((summ2 - 2.0 * (a[1] * a[1])) / (1.0 - 2.0 * (a1 * a1)));
    }
    a[1] = a1;
    for (int i = i1; i <= nn2; ++i) a[i] /= -fac;
  }

  const double range = x[n - 1] - x[0];
  if (range < small) throw DegenerateGroup("Shapiro-Wilk sample has zero range");

  auto sign = [](int v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
  double sx = x[0] / range;
  double sa = -a[1];
  for (int i = 1, j = n - 1; i < n; --j) {
    const double xi = x[i] / range;
    sx += xi;
    ++i;
    if (i != j) sa += sign(i - j) * a[std::min(i, j)];
  }
  sa /= n;
  sx /= n;
  double ssa = 0, ssx = 0, sax = 0;
  for (int i = 0, j = n - 1; i < n; ++i, --j) {
    const double asa = i != j ? sign(i - j) * a[1 + std::min(i, j)] - sa : -sa;
    const double xsx = x[i] / range - sx;
    ssa += asa * asa;
    ssx += xsx * xsx;
    sax += asa * xsx;
  }
  // 1 - W, computed to limit rounding error when W is close to 1.
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  ShapiroResult r;
  r.w = 1.0 - w1;

  if (n == 3) {
    constexpr double pi6 = 1.90985931710274;  // 6 / pi
    constexpr double stqr = 1.04719755119660;  // asin(sqrt(3/4))
    r.p = std::max(0.0, pi6 * (std::asin(std::sqrt(r.w)) - stqr));
    return r;
  }
  double y = std::log(w1);
  const double lxx = std::log(an);
  double m, s;
  if (n <= 11) {
    const double gamma = poly(g, 2, an);
    if (y >= gamma) {
      r.p = 1e-99;
      return r;
    }
    y = -std::log(gamma - y);
    m = poly(c3, 4, an);
    s = std::exp(poly(c4, 4, an));
  } else {
    m = poly(c5, 4, lxx);
    s = std::exp(poly(c6, 3, lxx));
  }
  r.p = normal_sf((y - m) / s);
  return r;
}

std::vector<std::pair<double, double>> qq_points(std::span<const double> sample) {
  if (sample.size() < 2) throw SampleSizeError("Q-Q points need at least 2 values");
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  std::vector<std::pair<double, double>> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.emplace_back(normal_quantile((static_cast<double>(i) + 0.5) / n), x[i]);
  return out;
}

double qq_r2(std::span<const std::pair<double, double>> points) {
  const double n = static_cast<double>(points.size());
  if (points.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (auto [a, b] : points) mx += a, my += b;
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (auto [a, b] : points) {
    sxx += (a - mx) * (a - mx);
    syy += (b - my) * (b - my);
    sxy += (a - mx) * (b - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy * sxy / (sxx * syy);
}

}  // namespace forumlens::stats
