#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "forumlens/error.hpp"
#include "forumlens/ranking.hpp"

namespace forumlens::ranking {

RankDoc rank_doc(const Thread& thread, const StopwordSet& stopwords, const TokenizeOptions& options) {
  RankDoc d;
  d.thread_id = thread.thread_id;
  d.created_at = thread.created_at;
  d.tokens = thread_tokens(thread, stopwords, options);
  std::unordered_set<std::string_view> seen;
  for (const auto& p : thread.posts)
    if (seen.insert(p.author_id).second) d.authors.push_back(p.author_id);
  return d;
}

std::vector<std::string> RankedList::top_ids(std::size_t k) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(k, entries.size()); ++i) out.push_back(entries[i].thread_id);
  return out;
}

RankedList make_ranked(std::vector<RankedEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.created_at != b.created_at) return a.created_at < b.created_at;
    return a.thread_id < b.thread_id;
  });
  RankedList r;
  r.entries = std::move(entries);
  return r;
}

RankedList topical_rank(const topics::KeywordRanking& keywords, std::span<const RankDoc> query, double alpha,
                        std::size_t k) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  std::unordered_map<std::string_view, double> weight;
  double w = 1.0;
  for (std::size_t r = 0; r < std::min(k, keywords.entries.size()); ++r) {
    w *= alpha;
    weight.emplace(keywords.entries[r].word, w);
  }
  std::vector<RankedEntry> entries;
  entries.reserve(query.size());
  for (const auto& d : query) {
    double score = 0;
    for (const auto& t : d.tokens)
      if (auto it = weight.find(t); it != weight.end()) score += it->second;
    entries.push_back({d.thread_id, score, d.created_at});
  }
  return make_ranked(std::move(entries));
}

RankedList tfidf_rank(std::span<const RankDoc> window, std::span<const RankDoc> query) {
  if (window.empty()) throw ConfigError("tf-idf needs a nonempty window");
  std::unordered_map<std::string_view, std::size_t> df;
  for (const auto& d : window) {
    std::unordered_set<std::string_view> seen(d.tokens.begin(), d.tokens.end());
    for (auto t : seen) ++df[t];
  }
  const double docs = static_cast<double>(window.size());
  std::vector<RankedEntry> entries;
  entries.reserve(query.size());
  for (const auto& d : query) {
    double score = 0;
    for (const auto& t : d.tokens)
      if (auto it = df.find(t); it != df.end()) score += std::log(docs / static_cast<double>(it->second));
    entries.push_back({d.thread_id, score, d.created_at});
  }
  return make_ranked(std::move(entries));
}

TopkDiff topk_diff(const RankedList& ours, const RankedList& baseline, std::size_t k) {
  const auto a = ours.top_ids(k), b = baseline.top_ids(k);
  const std::unordered_set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  TopkDiff d;
  for (const auto& id : a)
    if (!sb.contains(id)) d.ours_only.push_back(id);
  for (const auto& id : b)
    if (!sa.contains(id)) d.baseline_only.push_back(id);
  std::sort(d.ours_only.begin(), d.ours_only.end());
  std::sort(d.baseline_only.begin(), d.baseline_only.end());
  return d;
}

}  // namespace forumlens::ranking
