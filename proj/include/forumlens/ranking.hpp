#pragma once

// Thread rankers for a query period: topical (sum of alpha^rank over the
// thread's keyword tokens), tf-idf over the window of interest, and HITS
// authority on the user-thread participation graph. Plus the top-k
// difference used to compare two rankers.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "forumlens/corpus.hpp"
#include "forumlens/rng.hpp"
#include "forumlens/topics.hpp"

namespace forumlens::ranking {

/// A thread as seen by the rankers.
struct RankDoc {
  std::string thread_id;
  Timestamp created_at = 0;
  std::vector<std::string> tokens;   // all posts, concatenated
  std::vector<std::string> authors;  // distinct participants
};

RankDoc rank_doc(const Thread& thread, const StopwordSet& stopwords, const TokenizeOptions& options = {});

struct RankedEntry {
  std::string thread_id;
  double score = 0;
  Timestamp created_at = 0;
  bool operator==(const RankedEntry&) const = default;
};

/// Scores non-increasing; ties by earlier created_at, then thread_id.
struct RankedList {
  std::vector<RankedEntry> entries;
  bool converged = true;  // false when an iterative ranker hit its cap
  std::size_t iterations = 0;

  std::vector<std::string> top_ids(std::size_t k) const;
};

RankedList make_ranked(std::vector<RankedEntry> entries);

/// score = sum over tokens of alpha^r(w), r 1-based over the first `k`
/// keywords; other words weigh 0. Requires 0 < alpha < 1.
RankedList topical_rank(const topics::KeywordRanking& keywords, std::span<const RankDoc> query,
                        double alpha = 0.96, std::size_t k = 50);

/// score = sum over tokens t of tf(t, d) idf(t, D) with raw tf and
/// idf = log(|D| / df); D = `window` (which should contain the query threads).
RankedList tfidf_rank(std::span<const RankDoc> window, std::span<const RankDoc> query);

struct HitsOptions {
  double tolerance = 1e-10;
  std::size_t max_iters = 1000;
};

struct HitsResult {
  std::vector<double> authority;  // per thread, unit l2 norm
  std::vector<double> hub;        // per user, unit l2 norm
  std::size_t iterations = 0;
  bool converged = false;
};

/// Edges (user, thread). Authorities start uniform; each round sets hubs to
/// the sum of neighbouring authorities, l2-normalizes, then sets
/// authorities to the sum of neighbouring hubs and l2-normalizes, until both
/// vectors move less than the tolerance in l2.
HitsResult hits(std::size_t users, std::size_t threads,
                std::span<const std::pair<std::size_t, std::size_t>> edges, const HitsOptions& options = {});

/// HITS on the window graph (user linked to thread iff the user posted in
/// it), query threads ranked by authority.
RankedList hits_rank(std::span<const RankDoc> window, std::span<const RankDoc> query,
                     const HitsOptions& options = {});

struct TopkDiff {
  std::vector<std::string> ours_only;      // D1 = S - Sb
  std::vector<std::string> baseline_only;  // D2 = Sb - S
};

/// Differences of the top-k id sets (k clipped to each list's length).
TopkDiff topk_diff(const RankedList& ours, const RankedList& baseline, std::size_t k);

// --------------------------------------------------------- corpus pipeline

enum class Algorithm { Topical, Tfidf, Hits };
std::string_view to_string(Algorithm a) noexcept;

struct RankWindow {
  std::int64_t warmup_days = 12;
  std::int64_t query_days = 2;
};

struct RankOptions {
  RankWindow window;
  double alpha = 0.96;
  std::size_t keywords = 50;
  HitsOptions hits;
  const StopwordSet* stopwords = nullptr;
  TokenizeOptions tokenize;
};

struct WindowDocs {
  std::vector<RankDoc> warmup;  // warmup-period threads
  std::vector<RankDoc> query;   // threads created in the query period
  std::vector<RankDoc> window;  // warmup + query
  std::vector<Label> query_labels;
};

/// Query period = days [start, start + query_days); warmup period = the
/// warmup_days before it, clipped at day 1.
WindowDocs window_docs(const Course& course, std::int64_t start_day, const RankOptions& options);

/// Ranks the query threads of `course` starting at `start_day`. Topical
/// keywords come from the warmup-period text against the `background`
/// courses.
RankedList rank_course(const Corpus& corpus, std::string_view course_id, std::span<const std::string> background,
                       Algorithm algorithm, std::int64_t start_day, const RankOptions& options = {});

/// Labels counted as irrelevant when comparing rankers.
bool irrelevant(Label label) noexcept;

struct ComparisonRow {
  std::string course_id;
  std::int64_t day = 0;           // query start day
  std::size_t differences = 0;    // |D1| = |D2|
  std::size_t ours_irrelevant = 0;
  std::size_t baseline_irrelevant = 0;
};

/// Query start days: day `first` plus `extra` distinct days drawn from
/// [lo, hi] with the given seed, sorted ascending.
std::vector<std::int64_t> query_days(std::uint64_t seed, std::int64_t first, std::size_t extra, std::int64_t lo,
                                     std::int64_t hi);

/// Topical vs a baseline over the given courses and query start days; every
/// other course of the corpus is background. Courses run in parallel.
std::vector<ComparisonRow> compare(const Corpus& corpus, std::span<const std::string> courses,
                                   Algorithm baseline, std::span<const std::int64_t> days, std::size_t k,
                                   const RankOptions& options = {});

// ------------------------------------------------------ synthetic harness

struct HarnessOptions {
  std::size_t n = 5000;               // working vocabulary
  std::size_t support = 50;           // keywords per topic
  double epsilon = 0.3;
  std::uint64_t s = 60;               // words per thread
  std::size_t background_courses = 5;
  std::size_t background_threads = 400;  // per background course
  double background_p = 0.3;          // small-talk share in background and warmup
  std::size_t warmup_threads = 300;
  std::size_t query_course = 30;
  std::size_t query_smalltalk = 15;
  std::size_t query_noise = 15;
  double noise_rare_share = 0.3;      // share of a noise thread's words that are one-off rare words
  std::size_t users = 200;
  double mean_extra_participants = 4;  // geometric, independent of the thread's label
  double alpha = 0.96;
  std::size_t keywords = 50;
  std::size_t top = 15;
};

struct HarnessTrial {
  std::size_t topical_irrelevant = 0;
  std::size_t tfidf_irrelevant = 0;
  std::size_t hits_irrelevant = 0;
};

/// One synthetic window: background courses and a target course drawn from
/// the mixture model, query threads of three kinds (course, small talk, and
/// noise threads carrying one-off rare words), participants drawn from a
/// shared user pool. Counts ground-truth irrelevant threads (small talk and
/// noise) in each ranker's top list.
HarnessTrial run_harness_trial(const HarnessOptions& options, std::uint64_t seed);

}  // namespace forumlens::ranking
