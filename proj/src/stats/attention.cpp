#include <algorithm>
#include <cmath>

#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"

namespace forumlens::stats {

std::vector<std::size_t> thread_neighborhoods(const Course& course, double t_days) {
  if (!(t_days >= 0)) throw ConfigError("neighbourhood width must be non-negative");
  const auto width = static_cast<Timestamp>(std::llround(t_days * static_cast<double>(kSecondsPerDay)));
  std::vector<Timestamp> times;
  times.reserve(course.threads.size());
  for (const auto& t : course.threads) times.push_back(t.created_at);
  std::vector<Timestamp> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> out;
  out.reserve(times.size());
  for (Timestamp c : times) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), c - width);
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), c + width);
    out.push_back(static_cast<std::size_t>(hi - lo) - 1);
  }
  return out;
}

std::size_t thread_neighborhood(const Course& course, std::size_t thread, double t_days) {
  if (thread >= course.threads.size()) throw ConfigError("thread index out of range");
  if (!(t_days >= 0)) throw ConfigError("neighbourhood width must be non-negative");
  const auto width = static_cast<Timestamp>(std::llround(t_days * static_cast<double>(kSecondsPerDay)));
  const Timestamp c = course.threads[thread].created_at;
  std::size_t count = 0;
  for (std::size_t i = 0; i < course.threads.size(); ++i) {
    if (i == thread) continue;
    const Timestamp d = course.threads[i].created_at - c;
    if (d >= -width && d <= width) ++count;
  }
  return count;
}

Partition partition_by_threshold(std::span<const std::size_t> f_values, double threshold) {
  Partition p;
  for (std::size_t i = 0; i < f_values.size(); ++i)
    (static_cast<double>(f_values[i]) <= threshold ? p.g1 : p.g2).push_back(i);
  return p;
}

}  // namespace forumlens::stats
