#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"
#include "forumlens/parallel.hpp"
#include "forumlens/ranking.hpp"

namespace forumlens::ranking {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Topical: return "topical";
    case Algorithm::Tfidf: return "tfidf";
    case Algorithm::Hits: return "hits";
  }
  return "topical";
}

bool irrelevant(Label label) noexcept { return label == Label::SmallTalk || label == Label::Logistics; }

WindowDocs window_docs(const Course& course, std::int64_t start_day, const RankOptions& options) {
  if (options.window.warmup_days <= 0 || options.window.query_days <= 0)
    throw ConfigError("warmup and query periods must be positive");
  const StopwordSet& stop = options.stopwords ? *options.stopwords : default_stopwords();
  const std::int64_t warm_lo = std::max<std::int64_t>(1, start_day - options.window.warmup_days);
  const std::int64_t query_hi = start_day + options.window.query_days;
  WindowDocs w;
  for (const auto& t : course.threads) {
    const std::int64_t d = course.day_index(t.created_at);
    if (d >= warm_lo && d < start_day) {
      w.warmup.push_back(rank_doc(t, stop, options.tokenize));
      w.window.push_back(w.warmup.back());
    } else if (d >= start_day && d < query_hi) {
      w.query.push_back(rank_doc(t, stop, options.tokenize));
      w.query_labels.push_back(t.label);
      w.window.push_back(w.query.back());
    }
  }
  return w;
}

namespace {

topics::TokenCounts course_counts(const Course& course, const RankOptions& options) {
  const StopwordSet& stop = options.stopwords ? *options.stopwords : default_stopwords();
  topics::TokenCounts c;
  for (const auto& t : course.threads) c.add(thread_tokens(t, stop, options.tokenize));
  return c;
}

RankedList rank_window(const WindowDocs& w, const topics::TokenCounts& background, Algorithm algorithm,
                       const RankOptions& options) {
  switch (algorithm) {
    case Algorithm::Topical: {
      topics::TokenCounts warm;
      for (const auto& d : w.warmup) warm.add(d.tokens);
      topics::KeywordRanking kw;
      if (warm.total > 0 && background.total > 0) kw = topics::surprise_weights(background, warm);
      return topical_rank(kw, w.query, options.alpha, options.keywords);
    }
    case Algorithm::Tfidf:
      if (w.window.empty()) return {};
      return tfidf_rank(w.window, w.query);
    case Algorithm::Hits:
      if (w.window.empty()) return {};
      return hits_rank(w.window, w.query, options.hits);
  }
  return {};
}

}  // namespace

RankedList rank_course(const Corpus& corpus, std::string_view course_id, std::span<const std::string> background,
                       Algorithm algorithm, std::int64_t start_day, const RankOptions& options) {
  const Course* course = corpus.find(course_id);
  if (!course) throw ConfigError("unknown course '" + std::string(course_id) + "'");
  topics::TokenCounts bg;
  if (algorithm == Algorithm::Topical) {
    for (const auto& id : background) {
      if (id == course_id) throw ConfigError("the target course cannot be part of the background");
      const Course* c = corpus.find(id);
      if (!c) throw ConfigError("unknown background course '" + id + "'");
      bg.add(course_counts(*c, options));
    }
  }
  return rank_window(window_docs(*course, start_day, options), bg, algorithm, options);
}

std::vector<std::int64_t> query_days(std::uint64_t seed, std::int64_t first, std::size_t extra, std::int64_t lo,
                                     std::int64_t hi) {
  if (hi < lo) throw ConfigError("empty day range");
  std::vector<std::int64_t> pool;
  for (std::int64_t d = lo; d <= hi; ++d)
    if (d != first) pool.push_back(d);
  Rng rng(seed);
  std::vector<std::int64_t> out{first};
  for (std::size_t i = 0; i < extra && !pool.empty(); ++i) {
    const std::size_t j = rng.below(pool.size());
    out.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ComparisonRow> compare(const Corpus& corpus, std::span<const std::string> courses, Algorithm baseline,
                                   std::span<const std::int64_t> days, std::size_t k, const RankOptions& options) {
  std::vector<topics::TokenCounts> counts(corpus.courses.size());
  parallel_for(counts.size(), [&](std::size_t i) { counts[i] = course_counts(corpus.courses[i], options); });

  std::vector<std::vector<ComparisonRow>> per(courses.size());
  parallel_for(courses.size(), [&](std::size_t ci) {
    const Course* course = corpus.find(courses[ci]);
    if (!course) throw ConfigError("unknown course '" + courses[ci] + "'");
    topics::TokenCounts bg;
    for (std::size_t j = 0; j < corpus.courses.size(); ++j)
      if (corpus.courses[j].course_id != course->course_id) bg.add(counts[j]);
    for (std::int64_t day : days) {
      const WindowDocs w = window_docs(*course, day, options);
      const RankedList ours = rank_window(w, bg, Algorithm::Topical, options);
      const RankedList base = rank_window(w, bg, baseline, options);
      const TopkDiff diff = topk_diff(ours, base, k);
      std::unordered_map<std::string_view, Label> labels;
      for (std::size_t q = 0; q < w.query.size(); ++q) labels.emplace(w.query[q].thread_id, w.query_labels[q]);
      ComparisonRow row{course->course_id, day, diff.ours_only.size(), 0, 0};
      for (const auto& id : diff.ours_only) row.ours_irrelevant += irrelevant(labels.at(id));
      for (const auto& id : diff.baseline_only) row.baseline_irrelevant += irrelevant(labels.at(id));
      per[ci].push_back(row);
    }
  });
  std::vector<ComparisonRow> out;
  for (auto& rows : per) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

// ------------------------------------------------------------------ harness

HarnessTrial run_harness_trial(const HarnessOptions& o, std::uint64_t seed) {
  gen::TopicalOptions to;
  to.n = o.n;
  to.courses = o.background_courses + 1;
  to.epsilon = o.epsilon;
  to.p = o.background_p;
  to.s = o.s;
  to.support = o.support;
  to.seed = seed;
  const gen::Sampler sampler(gen::topical_spec(to));
  const auto& vocab = sampler.vocab();
  const std::size_t target = o.background_courses;

  auto words = [&](const std::vector<std::uint32_t>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (auto i : ids) out.push_back(vocab[i]);
    return out;
  };

  topics::TokenCounts background;
  for (std::size_t c = 0; c < o.background_courses; ++c) {
    Rng rng(derive_seed(seed, c + 1));
    for (std::size_t j = 0; j < o.background_threads; ++j) background.add(words(sampler.sample_thread(c, rng).tokens));
  }

  Rng rng(derive_seed(seed, 0));
  Rng users(derive_seed(seed, o.background_courses + 1));
  auto participants = [&] {
    std::vector<std::string> out{"u" + std::to_string(users.below(o.users))};
    const double stop = 1.0 / (1.0 + o.mean_extra_participants);
    while (!users.bernoulli(stop)) {
      std::string u = "u" + std::to_string(users.below(o.users));
      if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
    }
    return out;
  };

  std::vector<RankDoc> warmup, query;
  std::vector<bool> bad;
  for (std::size_t j = 0; j < o.warmup_threads; ++j) {
    RankDoc d{"w" + std::to_string(j), static_cast<Timestamp>(j), words(sampler.sample_thread(target, rng).tokens),
              participants()};
    warmup.push_back(std::move(d));
  }

  const gen::AliasTable plain(sampler.spec().background.mass);
  std::size_t rare = 0;
  const std::size_t total_query = o.query_course + o.query_smalltalk + o.query_noise;
  std::vector<std::size_t> slots(total_query);
  for (std::size_t i = 0; i < total_query; ++i) slots[i] = i;
  for (std::size_t i = total_query; i > 1; --i) std::swap(slots[i - 1], slots[rng.below(i)]);
  for (std::size_t j = 0; j < total_query; ++j) {
    std::vector<std::string> tokens;
    bool irrelevant_thread = true;
    if (j < o.query_course) {
      tokens = words(sampler.sample_thread(target, false, rng).tokens);
      irrelevant_thread = false;
    } else if (j < o.query_course + o.query_smalltalk) {
      tokens = words(sampler.sample_thread(target, true, rng).tokens);
    } else {
      for (std::uint64_t k = 0; k < o.s; ++k) {
        if (rng.bernoulli(o.noise_rare_share)) tokens.push_back("rare" + std::to_string(rare++));
        else tokens.push_back(vocab[plain.sample(rng)]);
      }
    }
    const Timestamp when = static_cast<Timestamp>(o.warmup_threads + slots[j]);
    query.push_back({"q" + std::to_string(j), when, std::move(tokens), participants()});
    bad.push_back(irrelevant_thread);
  }

  std::vector<RankDoc> window = warmup;
  window.insert(window.end(), query.begin(), query.end());

  topics::TokenCounts warm;
  for (const auto& d : warmup) warm.add(d.tokens);
  const topics::KeywordRanking kw = topics::surprise_weights(background, warm);

  std::unordered_map<std::string_view, bool> is_bad;
  for (std::size_t j = 0; j < query.size(); ++j) is_bad.emplace(query[j].thread_id, bad[j]);
  auto count_bad = [&](const RankedList& r) {
    std::size_t c = 0;
    for (const auto& id : r.top_ids(o.top)) c += is_bad.at(id);
    return c;
  };
  HarnessTrial t;
  t.topical_irrelevant = count_bad(topical_rank(kw, query, o.alpha, o.keywords));
  t.tfidf_irrelevant = count_bad(tfidf_rank(window, query));
  t.hits_irrelevant = count_bad(hits_rank(window, query));
  return t;
}

}  // namespace forumlens::ranking
