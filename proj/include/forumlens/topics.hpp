#pragma once

// Surprise-weight keyword extraction: gamma(w) = p_E(w) sqrt(n) / sqrt(p_D(w)),
// where E is the course-specific unigram distribution, D the distribution of
// background plus course text, and n the background token count. Also the
// top-k churn and normalized Kendall tau diagnostics used to watch rankings
// settle as course text accumulates.

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "forumlens/corpus.hpp"

namespace forumlens::topics {

struct Keyword {
  std::string word;
  double gamma = 0;
  bool operator==(const Keyword&) const = default;
};

/// Sorted by gamma descending, ties by word ascending.
struct KeywordRanking {
  std::vector<Keyword> entries;
  std::size_t k = 0;  // cutoff the ranking was produced for (0 = uncut)
};

/// Ranks every word of `course`. Throws DomainMismatch when a course word is
/// missing from `combined`, ConfigError when n <= 0.
KeywordRanking surprise_weights(const UnigramModel& combined, const UnigramModel& course, double n);

/// Raw word counts, for building rankings incrementally.
struct TokenCounts {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(std::span<const std::string> tokens);
  void add(const TokenCounts& other);
};

/// Same weights as above with E = `course`, D = background + course and
/// n = background.total. Throws EmptyCorpus when either side is empty.
KeywordRanking surprise_weights(const TokenCounts& background, const TokenCounts& course);

/// First min(k, size) words.
std::vector<std::string> top_k(const KeywordRanking& ranking, std::size_t k);

/// |top_k(b) \ top_k(a)|: words that entered the top k going from a to b.
std::size_t topk_set_difference(const KeywordRanking& a, const KeywordRanking& b, std::size_t k);

/// Number of inversions of a sequence of distinct ranks, O(m log m).
std::uint64_t inversion_count(std::span<const std::size_t> ranks);

/// Discordant pairs / C(m, 2) for two orderings of the same word set.
/// Throws DomainMismatch when the sets differ. 0 for m < 2.
double normalized_kendall_tau(std::span<const std::string> a, std::span<const std::string> b);

/// Kendall tau of two top-k lists restricted to the words they share, each
/// keeping its own relative order. 0 when fewer than two words are shared.
double topk_kendall_tau(const KeywordRanking& a, const KeywordRanking& b, std::size_t k);

// --------------------------------------------------------- corpus pipelines

struct ExtractOptions {
  std::size_t k = 50;
  std::int64_t warmup_days = 10;  // course text = threads created on days 1..warmup_days
  const StopwordSet* stopwords = nullptr;
  TokenizeOptions tokenize;
};

struct Extraction {
  KeywordRanking ranking;     // uncut
  std::uint64_t background_tokens = 0;
  std::uint64_t course_tokens = 0;
};

/// Background text = every thread of the `background` courses (which must
/// not include the target). Throws EmptyCorpus when either side has no text.
Extraction extract_keywords(const Corpus& corpus, std::string_view course_id,
                            std::span<const std::string> background, const ExtractOptions& options = {});

struct ConvergencePoint {
  std::int64_t day = 0;
  std::uint64_t cumulative_tokens = 0;
  std::size_t set_difference = 0;  // vs the previous day; 0 on the first day
  double kendall_tau = 0;
};

/// Ranks after each day 1..days using all course text up to that day and
/// compares consecutive days' top-k lists.
std::vector<ConvergencePoint> convergence(const Corpus& corpus, std::string_view course_id,
                                          std::span<const std::string> background, std::int64_t days,
                                          const ExtractOptions& options = {});

/// Same diagnostics for token batches given directly: batch j is day j + 1.
std::vector<ConvergencePoint> convergence(const std::vector<std::vector<std::string>>& background_docs,
                                          const std::vector<std::vector<std::vector<std::string>>>& batches,
                                          std::size_t k);

}  // namespace forumlens::topics
