#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "forumlens/error.hpp"
#include "forumlens/kernels.hpp"
#include "forumlens/ranking.hpp"

namespace forumlens::ranking {

namespace {

void normalize(std::vector<double>& v) {
  const double norm = std::sqrt(simd::sum_squares(v));
  if (norm > 0) simd::scale(v, 1.0 / norm);
}

}  // namespace

HitsResult hits(std::size_t users, std::size_t threads, std::span<const std::pair<std::size_t, std::size_t>> edges,
                const HitsOptions& options) {
  if (threads == 0) throw ConfigError("HITS needs at least one thread");
  for (const auto& [u, t] : edges)
    if (u >= users || t >= threads) throw ConfigError("HITS edge out of range");
  // Deduplicate so repeated posts by one user do not weight the edge.
  std::vector<std::pair<std::size_t, std::size_t>> e(edges.begin(), edges.end());
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());

  HitsResult r;
  r.authority.assign(threads, 1.0 / std::sqrt(static_cast<double>(threads)));
  r.hub.assign(users, 0.0);
  std::vector<double> prev_a, prev_h;
  for (r.iterations = 1; r.iterations <= options.max_iters; ++r.iterations) {
    prev_a = r.authority;
    prev_h = r.hub;
    std::fill(r.hub.begin(), r.hub.end(), 0.0);
    for (const auto& [u, t] : e) r.hub[u] += r.authority[t];
    normalize(r.hub);
    std::fill(r.authority.begin(), r.authority.end(), 0.0);
    for (const auto& [u, t] : e) r.authority[t] += r.hub[u];
    normalize(r.authority);
    const double da = std::sqrt(simd::squared_distance(r.authority, prev_a));
    const double dh = users ? std::sqrt(simd::squared_distance(r.hub, prev_h)) : 0.0;
    if (da < options.tolerance && dh < options.tolerance) {
      r.converged = true;
      return r;
    }
  }
  r.iterations = options.max_iters;
  return r;
}

RankedList hits_rank(std::span<const RankDoc> window, std::span<const RankDoc> query, const HitsOptions& options) {
  if (window.empty()) throw ConfigError("HITS needs a nonempty window");
  std::unordered_map<std::string_view, std::size_t> user_index, thread_index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t t = 0; t < window.size(); ++t) {
    thread_index.emplace(window[t].thread_id, t);
    for (const auto& a : window[t].authors) {
      auto [it, fresh] = user_index.emplace(a, user_index.size());
      edges.emplace_back(it->second, t);
    }
  }
  const HitsResult h = hits(user_index.size(), window.size(), edges, options);
  std::vector<RankedEntry> entries;
  for (const auto& d : query) {
    auto it = thread_index.find(d.thread_id);
    entries.push_back({d.thread_id, it == thread_index.end() ? 0.0 : h.authority[it->second], d.created_at});
  }
  RankedList r = make_ranked(std::move(entries));
  r.converged = h.converged;
  r.iterations = h.iterations;
  return r;
}

}  // namespace forumlens::ranking
