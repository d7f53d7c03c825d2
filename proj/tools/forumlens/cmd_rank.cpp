#include <memory>
#include <sstream>
#include <unordered_map>

#include "forumlens/csv.hpp"
#include "forumlens/error.hpp"
#include "forumlens/ranking.hpp"
#include "run.hpp"

namespace forumlens::cli {

namespace {

using ranking::Algorithm;

Algorithm parse_algorithm(const std::string& s) {
  if (s == "topical") return Algorithm::Topical;
  if (s == "tfidf") return Algorithm::Tfidf;
  if (s == "hits") return Algorithm::Hits;
  throw ConfigError("unknown ranking algorithm '" + s + "' (topical, tfidf, hits)");
}

struct RankParams {
  Common common;
  std::string input;
  std::string course;
  std::string courses;
  std::string background;
  std::string algo = "topical";
  std::string baseline = "tfidf";
  std::int64_t warmup = 12;
  std::int64_t query = 2;
  std::size_t k = 15;
  std::size_t keywords = 50;
  double alpha = 0.96;
  std::int64_t start_day = 0;
  std::int64_t first_day = 10;
  std::size_t extra_days = 5;
  std::int64_t day_lo = 10;
  std::int64_t day_hi = 30;
  std::string stopwords;
};

void add_rank_options(Binder& b, RankParams& p) {
  add_common(b, p.common);
  b.add("--input,-i", "input", p.input, "Corpus file");
  b.add("--warmup", "warmup", p.warmup, "Warm-up days before each query period");
  b.add("--query", "query", p.query, "Query period length in days");
  b.add("--k", "k", p.k, "Top-k cut for comparisons");
  b.add("--keywords", "keywords", p.keywords, "Keywords used by the topical ranker");
  b.add("--alpha", "alpha", p.alpha, "Topical rank decay");
  b.add("--start-day", "start_day", p.start_day, "Single query start day (0: seeded days)");
  b.add("--first-day", "first_day", p.first_day, "Query day always included when sampling");
  b.add("--extra-days", "extra_days", p.extra_days, "Extra query days drawn with the seed");
  b.add("--day-lo", "day_lo", p.day_lo, "Lowest sampled query day");
  b.add("--day-hi", "day_hi", p.day_hi, "Highest sampled query day");
  b.add("--stopwords", "stopwords", p.stopwords, "Stopword file (default: built-in English list)");
}

ranking::RankOptions rank_options(const RankParams& p, const StopwordSet* stop) {
  if (p.warmup < 1 || p.query < 1) throw ConfigError("--warmup and --query must be positive");
  ranking::RankOptions o;
  o.window = {p.warmup, p.query};
  o.alpha = p.alpha;
  o.keywords = p.keywords;
  o.stopwords = stop;
  return o;
}

std::vector<std::int64_t> days_for(const RankParams& p, std::uint64_t seed) {
  if (p.start_day > 0) return {p.start_day};
  return ranking::query_days(seed, p.first_day, p.extra_days, p.day_lo, p.day_hi);
}

void run_rank(RankParams& p, Binder& binder) {
  Run run("rank", binder, p.common);
  if (p.course.empty()) throw ConfigError("--course is required");
  const Algorithm algo = parse_algorithm(p.algo);
  const Algorithm baseline = parse_algorithm(p.baseline);
  const Corpus corpus = run.load_corpus(p.input);
  const Course* course = corpus.find(p.course);
  if (!course) throw DomainMismatch("unknown course '" + p.course + "'");
  std::vector<std::string> background = split_list(p.background);
  if (background.empty())
    for (const auto& c : corpus.courses)
      if (c.course_id != p.course) background.push_back(c.course_id);
  StopwordSet stop;
  if (!p.stopwords.empty()) {
    run.add_input(p.stopwords);
    stop = load_stopwords(p.stopwords);
  }
  const auto opts = rank_options(p, p.stopwords.empty() ? nullptr : &stop);
  std::unordered_map<std::string_view, Label> labels;
  for (const auto& t : course->threads) labels.emplace(t.thread_id, t.label);

  std::ostringstream ranked, diff;
  csv::Writer rw(ranked), dw(diff);
  rw.row({"day", "rank", "thread_id", "score", "created_at", "label"});
  dw.row({"day", "side", "thread_id", "label"});
  for (const auto day : days_for(p, run.seed())) {
    const auto ours = ranking::rank_course(corpus, p.course, background, algo, day, opts);
    if (!ours.converged) throw Error(ErrorKind::Numerical, "NoConvergence", "HITS did not converge");
    for (std::size_t i = 0; i < ours.entries.size(); ++i) {
      const auto& e = ours.entries[i];
      rw.row({csv::format_number(day), csv::format_number(i + 1), e.thread_id, csv::format_number(e.score),
              csv::format_number(e.created_at), to_string(labels.at(e.thread_id))});
    }
    const auto base = ranking::rank_course(corpus, p.course, background, baseline, day, opts);
    const auto d = ranking::topk_diff(ours, base, p.k);
    for (const auto& id : d.ours_only)
      dw.row({csv::format_number(day), "ours_only", id, to_string(labels.at(id))});
    for (const auto& id : d.baseline_only)
      dw.row({csv::format_number(day), "baseline_only", id, to_string(labels.at(id))});
  }
  run.write("ranked.csv", ranked.str());
  run.write("topk_diff.csv", diff.str());
  run.finish();
}

void run_compare(RankParams& p, Binder& binder) {
  Run run("compare", binder, p.common);
  const Algorithm baseline = parse_algorithm(p.baseline);
  if (baseline == Algorithm::Topical) throw ConfigError("--baseline must be tfidf or hits");
  const Corpus corpus = run.load_corpus(p.input);
  std::vector<std::string> courses = split_list(p.courses);
  if (courses.empty())
    for (const auto& c : corpus.courses) courses.push_back(c.course_id);
  StopwordSet stop;
  if (!p.stopwords.empty()) {
    run.add_input(p.stopwords);
    stop = load_stopwords(p.stopwords);
  }
  const auto days = days_for(p, run.seed());
  const auto rows =
      ranking::compare(corpus, courses, baseline, days, p.k, rank_options(p, p.stopwords.empty() ? nullptr : &stop));
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"course_id", "day", "differences", "ours_irrelevant", "baseline_irrelevant"});
  for (const auto& r : rows)
    w.row({r.course_id, csv::format_number(r.day), csv::format_number(r.differences),
           csv::format_number(r.ours_irrelevant), csv::format_number(r.baseline_irrelevant)});
  run.write("compare.csv", out.str());
  run.finish();
}

}  // namespace

void register_rank(CLI::App& app) {
  auto* sub = app.add_subcommand("rank", "Rank one course's query-period threads");
  auto p = std::make_shared<RankParams>();
  auto b = std::make_shared<Binder>(sub);
  add_rank_options(*b, *p);
  b->add("--course", "course", p->course, "Course to rank");
  b->add("--background", "background", p->background, "Comma list of background courses (default: all others)");
  b->add("--algo", "algo", p->algo, "topical, tfidf or hits");
  b->add("--baseline", "baseline", p->baseline, "Ranker compared against in topk_diff.csv");
  sub->callback([p, b] { run_rank(*p, *b); });
}

void register_compare(CLI::App& app) {
  auto* sub = app.add_subcommand("compare", "Irrelevant threads admitted by the topical ranker vs a baseline");
  auto p = std::make_shared<RankParams>();
  auto b = std::make_shared<Binder>(sub);
  add_rank_options(*b, *p);
  b->add("--courses", "courses", p->courses, "Comma list of courses (default: all)");
  b->add("--baseline", "baseline", p->baseline, "tfidf or hits");
  sub->callback([p, b] { run_compare(*p, *b); });
}

}  // namespace forumlens::cli
