#include <memory>
#include <sstream>

#include "forumlens/csv.hpp"
#include "forumlens/error.hpp"
#include "forumlens/topics.hpp"
#include "run.hpp"

namespace forumlens::cli {

namespace {

struct TopicsParams {
  Common common;
  std::string input;
  std::string course;
  std::string background;
  std::size_t k = 50;
  std::int64_t warmup_days = 10;
  std::int64_t days = 0;
  std::string stopwords;
};

std::vector<std::string> background_courses(const Corpus& corpus, const std::string& course,
                                            const std::string& listed) {
  if (!corpus.find(course)) throw DomainMismatch("unknown course '" + course + "'");
  std::vector<std::string> out = split_list(listed);
  if (out.empty()) {
    for (const auto& c : corpus.courses)
      if (c.course_id != course) out.push_back(c.course_id);
  }
  for (const auto& id : out) {
    if (id == course) throw ConfigError("the target course cannot be part of its own background");
    if (!corpus.find(id)) throw DomainMismatch("unknown background course '" + id + "'");
  }
  return out;
}

std::string convergence_csv(const std::vector<topics::ConvergencePoint>& points) {
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"day", "cumulative_tokens", "set_difference", "kendall_tau"});
  for (const auto& pt : points)
    w.row({csv::format_number(pt.day), csv::format_number(pt.cumulative_tokens),
           csv::format_number(pt.set_difference), csv::format_number(pt.kendall_tau)});
  return out.str();
}

void run_topics(TopicsParams& p, Binder& binder, bool extract) {
  Run run(extract ? "topics extract" : "topics converge", binder, p.common);
  if (p.course.empty()) throw ConfigError("--course is required");
  if (p.k == 0) throw ConfigError("--k must be positive");
  const Corpus corpus = run.load_corpus(p.input);
  const auto background = background_courses(corpus, p.course, p.background);
  StopwordSet stop;
  topics::ExtractOptions o;
  o.k = p.k;
  o.warmup_days = p.warmup_days;
  if (!p.stopwords.empty()) {
    run.add_input(p.stopwords);
    stop = load_stopwords(p.stopwords);
    o.stopwords = &stop;
  }
  if (extract) {
    const auto ex = topics::extract_keywords(corpus, p.course, background, o);
    std::ostringstream out;
    csv::Writer w(out);
    w.row({"rank", "word", "gamma"});
    const auto top = std::min(p.k, ex.ranking.entries.size());
    for (std::size_t i = 0; i < top; ++i)
      w.row({csv::format_number(i + 1), ex.ranking.entries[i].word, csv::format_number(ex.ranking.entries[i].gamma)});
    run.write("keywords.csv", out.str());
  }
  const std::int64_t days = p.days > 0 ? p.days : p.warmup_days;
  run.write("convergence.csv", convergence_csv(topics::convergence(corpus, p.course, background, days, o)));
  run.finish();
}

void add_topics_options(Binder& b, TopicsParams& p) {
  add_common(b, p.common);
  b.add("--input,-i", "input", p.input, "Corpus file");
  b.add("--course", "course", p.course, "Target course id");
  b.add("--background", "background", p.background, "Comma list of background courses (default: all others)");
  b.add("--k", "k", p.k, "Keywords kept");
  b.add("--warmup-days", "warmup_days", p.warmup_days, "Days of course text used for keywords");
  b.add("--stopwords", "stopwords", p.stopwords, "Stopword file (default: built-in English list)");
}

}  // namespace

void register_topics(CLI::App& app) {
  auto* group = app.add_subcommand("topics", "Surprise-weight keywords and their convergence");
  group->require_subcommand(1);

  auto* extract = group->add_subcommand("extract", "Top-k course keywords plus day-by-day convergence");
  auto pe = std::make_shared<TopicsParams>();
  auto be = std::make_shared<Binder>(extract);
  add_topics_options(*be, *pe);
  be->add("--days", "days", pe->days, "Days tracked in convergence.csv (default: warmup days)");
  extract->callback([pe, be] { run_topics(*pe, *be, true); });

  auto* converge = group->add_subcommand("converge", "Set difference and Kendall tau between consecutive days");
  auto pc = std::make_shared<TopicsParams>();
  pc->days = 30;
  auto bc = std::make_shared<Binder>(converge);
  add_topics_options(*bc, *pc);
  bc->add("--days", "days", pc->days, "Days tracked");
  converge->callback([pc, bc] { run_topics(*pc, *bc, false); });
}

}  // namespace forumlens::cli
