#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "forumlens/error.hpp"
#include "forumlens/topics.hpp"

namespace forumlens::topics {

namespace {

inline double gamma_of(double p_course, double p_combined, double sqrt_n) {
  return p_course * sqrt_n / std::sqrt(p_combined);
}

void sort_ranking(std::vector<Keyword>& entries) {
  std::sort(entries.begin(), entries.end(), [](const Keyword& a, const Keyword& b) {
    if (a.gamma != b.gamma) return a.gamma > b.gamma;
    return a.word < b.word;
  });
}

using Counts = std::unordered_map<std::string, std::uint64_t>;

}  // namespace

void TokenCounts::add(std::span<const std::string> tokens) {
  for (const auto& t : tokens) ++counts[t];
  total += tokens.size();
}

void TokenCounts::add(const TokenCounts& other) {
  for (const auto& [w, c] : other.counts) counts[w] += c;
  total += other.total;
}

namespace {

KeywordRanking rank_counts(const Counts& background, std::uint64_t n, const Counts& course, std::uint64_t m) {
  if (n == 0) throw EmptyCorpus("background text is empty");
  if (m == 0) throw EmptyCorpus("course text is empty");
  KeywordRanking r;
  r.entries.reserve(course.size());
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double total = static_cast<double>(n + m);
  for (const auto& [w, c] : course) {
    auto it = background.find(w);
    const double both = static_cast<double>(c + (it == background.end() ? 0 : it->second));
    r.entries.push_back({w, gamma_of(static_cast<double>(c) / static_cast<double>(m), both / total, sqrt_n)});
  }
  sort_ranking(r.entries);
  return r;
}

void count_into(Counts& counts, std::uint64_t& total, const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) ++counts[t];
  total += tokens.size();
}

}  // namespace

KeywordRanking surprise_weights(const TokenCounts& background, const TokenCounts& course) {
  return rank_counts(background.counts, background.total, course.counts, course.total);
}

KeywordRanking surprise_weights(const UnigramModel& combined, const UnigramModel& course, double n) {
  if (!(n > 0)) throw ConfigError("background token count must be positive");
  KeywordRanking r;
  r.entries.reserve(course.size());
  const double sqrt_n = std::sqrt(n);
  for (std::size_t i = 0; i < course.size(); ++i) {
    const double pd = combined.probability(course.vocab[i]);
    if (!(pd > 0)) throw DomainMismatch("word '" + course.vocab[i] + "' has no mass in the combined model");
    r.entries.push_back({course.vocab[i], gamma_of(course.mass[i], pd, sqrt_n)});
  }
  sort_ranking(r.entries);
  return r;
}

std::vector<std::string> top_k(const KeywordRanking& ranking, std::size_t k) {
  std::vector<std::string> out;
  const std::size_t m = std::min(k, ranking.entries.size());
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(ranking.entries[i].word);
  return out;
}

std::size_t topk_set_difference(const KeywordRanking& a, const KeywordRanking& b, std::size_t k) {
  const auto ta = top_k(a, k);
  const std::unordered_set<std::string> in_a(ta.begin(), ta.end());
  std::size_t fresh = 0;
  for (const auto& w : top_k(b, k)) fresh += !in_a.contains(w);
  return fresh;
}

namespace {

std::uint64_t merge_count(std::vector<std::size_t>& v, std::vector<std::size_t>& tmp, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += mid - i;
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo), tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

std::uint64_t inversion_count(std::span<const std::size_t> ranks) {
  std::vector<std::size_t> v(ranks.begin(), ranks.end()), tmp(ranks.size());
  return merge_count(v, tmp, 0, v.size());
}

double normalized_kendall_tau(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() != b.size()) throw DomainMismatch("rankings have different lengths");
  std::unordered_map<std::string_view, std::size_t> pos;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!pos.emplace(b[i], i).second) throw DomainMismatch("duplicate word '" + b[i] + "'");
  std::vector<std::size_t> seq;
  seq.reserve(a.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& w : a) {
    auto it = pos.find(w);
    if (it == pos.end()) throw DomainMismatch("word '" + w + "' is missing from the second ranking");
    if (!seen.insert(w).second) throw DomainMismatch("duplicate word '" + w + "'");
    seq.push_back(it->second);
  }
  const std::size_t m = seq.size();
  if (m < 2) return 0.0;
  const double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
  return static_cast<double>(inversion_count(seq)) / pairs;
}

double topk_kendall_tau(const KeywordRanking& a, const KeywordRanking& b, std::size_t k) {
  const auto ta = top_k(a, k), tb = top_k(b, k);
  const std::unordered_set<std::string> in_a(ta.begin(), ta.end()), in_b(tb.begin(), tb.end());
  std::vector<std::string> ra, rb;
  for (const auto& w : ta)
    if (in_b.contains(w)) ra.push_back(w);
  for (const auto& w : tb)
    if (in_a.contains(w)) rb.push_back(w);
  return normalized_kendall_tau(ra, rb);
}

// ------------------------------------------------------------------ pipelines

namespace {

struct CourseText {
  Counts background;
  std::uint64_t n = 0;
};

CourseText background_counts(const Corpus& corpus, std::string_view course_id,
                             std::span<const std::string> background, const ExtractOptions& options) {
  const StopwordSet& stop = options.stopwords ? *options.stopwords : default_stopwords();
  CourseText out;
  for (const auto& id : background) {
    if (id == course_id) throw ConfigError("the target course cannot be part of the background");
    const Course* c = corpus.find(id);
    if (!c) throw ConfigError("unknown background course '" + id + "'");
    for (const auto& t : c->threads) count_into(out.background, out.n, thread_tokens(t, stop, options.tokenize));
  }
  return out;
}

const Course& require_course(const Corpus& corpus, std::string_view id) {
  const Course* c = corpus.find(id);
  if (!c) throw ConfigError("unknown course '" + std::string(id) + "'");
  return *c;
}

}  // namespace

Extraction extract_keywords(const Corpus& corpus, std::string_view course_id,
                            std::span<const std::string> background, const ExtractOptions& options) {
  const Course& course = require_course(corpus, course_id);
  CourseText bg = background_counts(corpus, course_id, background, options);
  const StopwordSet& stop = options.stopwords ? *options.stopwords : default_stopwords();
  Counts cc;
  std::uint64_t m = 0;
  for (const auto& t : course.threads)
    if (course.day_index(t.created_at) <= options.warmup_days) count_into(cc, m, thread_tokens(t, stop, options.tokenize));
  Extraction e;
  e.ranking = rank_counts(bg.background, bg.n, cc, m);
  e.background_tokens = bg.n;
  e.course_tokens = m;
  return e;
}

namespace {

std::vector<ConvergencePoint> run_convergence(const Counts& background, std::uint64_t n,
                                              const std::vector<std::vector<std::vector<std::string>>>& batches,
                                              std::size_t k) {
  std::vector<ConvergencePoint> out;
  Counts course;
  std::uint64_t m = 0;
  KeywordRanking prev;
  bool have_prev = false;
  for (std::size_t d = 0; d < batches.size(); ++d) {
    for (const auto& doc : batches[d]) count_into(course, m, doc);
    ConvergencePoint p;
    p.day = static_cast<std::int64_t>(d + 1);
    p.cumulative_tokens = m;
    if (m == 0) {
      out.push_back(p);
      continue;
    }
    KeywordRanking cur = rank_counts(background, n, course, m);
    if (have_prev) {
      p.set_difference = topk_set_difference(prev, cur, k);
      p.kendall_tau = topk_kendall_tau(prev, cur, k);
    }
    out.push_back(p);
    prev = std::move(cur);
    have_prev = true;
  }
  return out;
}

}  // namespace

std::vector<ConvergencePoint> convergence(const Corpus& corpus, std::string_view course_id,
                                          std::span<const std::string> background, std::int64_t days,
                                          const ExtractOptions& options) {
  const Course& course = require_course(corpus, course_id);
  CourseText bg = background_counts(corpus, course_id, background, options);
  if (bg.n == 0) throw EmptyCorpus("background text is empty");
  const StopwordSet& stop = options.stopwords ? *options.stopwords : default_stopwords();
  std::vector<std::vector<std::vector<std::string>>> batches(static_cast<std::size_t>(std::max<std::int64_t>(0, days)));
  for (const auto& t : course.threads) {
    const std::int64_t d = course.day_index(t.created_at);
    if (d >= 1 && d <= days) batches[static_cast<std::size_t>(d - 1)].push_back(thread_tokens(t, stop, options.tokenize));
  }
  return run_convergence(bg.background, bg.n, batches, options.k);
}

std::vector<ConvergencePoint> convergence(const std::vector<std::vector<std::string>>& background_docs,
                                          const std::vector<std::vector<std::vector<std::string>>>& batches,
                                          std::size_t k) {
  Counts bg;
  std::uint64_t n = 0;
  for (const auto& d : background_docs) count_into(bg, n, d);
  if (n == 0) throw EmptyCorpus("background text is empty");
  return run_convergence(bg, n, batches, k);
}

}  // namespace forumlens::topics
