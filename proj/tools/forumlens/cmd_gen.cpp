#include <algorithm>
#include <memory>
#include <sstream>

#include "forumlens/csv.hpp"
#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"
#include "run.hpp"

namespace forumlens::cli {

namespace {

struct GenParams {
  Common common;
  std::string spec_path;
  std::string construction = "topical";
  std::size_t n = 10000;
  std::size_t courses = 3;
  double epsilon = 0.3;
  double p = 0.5;
  std::uint64_t length = 200;
  std::size_t support = 50;
  std::string topic_shape = "uniform";
  double c = 4.0;
  double d = 2.0;
  std::string threads = "200";
  std::uint64_t max_tokens = 50'000'000;
  std::int64_t spacing = 60;
};

gen::TopicShape parse_shape(const std::string& s) {
  if (s == "uniform") return gen::TopicShape::Uniform;
  if (s == "geometric") return gen::TopicShape::Geometric;
  throw ConfigError("--topic-shape must be uniform or geometric");
}

std::vector<std::size_t> thread_counts(const std::string& text, std::size_t courses) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw ConfigError("--threads expects non-negative integers, got '" + item + "'");
    }
  }
  if (out.size() == 1) out.assign(courses, out.front());
  if (out.size() != courses)
    throw ConfigError("--threads lists " + std::to_string(out.size()) + " counts for " + std::to_string(courses) +
                      " courses");
  return out;
}

void run_gen(GenParams& p, Binder& binder) {
  Run run("gen", binder, p.common);
  gen::GenerativeSpec spec;
  if (!p.spec_path.empty()) {
    spec = gen::spec_from_json(run.load_json(p.spec_path));
  } else if (p.construction == "topical") {
    gen::TopicalOptions o;
    o.n = p.n;
    o.courses = p.courses;
    o.epsilon = p.epsilon;
    o.p = p.p;
    o.s = p.length;
    o.support = p.support;
    o.topic.shape = parse_shape(p.topic_shape);
    spec = gen::topical_spec(o);
  } else if (p.construction == "adversarial") {
    gen::AdversarialOptions o;
    o.c = p.c;
    o.d = p.d;
    o.epsilon = p.epsilon;
    o.support = p.support;
    spec = gen::adversarial_spec(p.n, o);
  } else {
    throw ConfigError("--construction must be topical or adversarial");
  }
  spec.seed = run.seed();
  gen::check_structure(spec);

  std::vector<std::size_t> counts;
  if (p.construction == "adversarial" && p.spec_path.empty() && !binder.given("threads"))
    counts = gen::adversarial_counts(spec);
  else
    counts = thread_counts(p.threads, spec.course_count());

  const gen::Sampler sampler(spec);
  const Corpus corpus = gen::sample_corpus(sampler, counts, p.max_tokens, p.spacing);
  std::ostringstream body;
  write_corpus(body, corpus, CorpusFormat::JsonLines);
  run.write("corpus.jsonl", body.str());
  run.write("spec.json", gen::to_json(spec).dump(1) + "\n");

  std::ostringstream support;
  csv::Writer w(support);
  w.row({"topic", "word", "mass"});
  auto emit = [&](const std::string& topic, const UnigramModel& m) {
    for (std::size_t i = 0; i < m.size(); ++i) w.row({topic, m.vocab[i], csv::format_number(m.mass[i])});
  };
  emit("smalltalk", spec.smalltalk_topic);
  for (std::size_t i = 0; i < spec.course_count(); ++i) emit(corpus.courses[i].course_id, spec.courses[i].topic);
  run.write("topics.csv", support.str());
  run.finish();
}

struct IngestParams {
  Common common;
  std::string input;
  std::string metadata;
};

void run_ingest(IngestParams& p, Binder& binder) {
  Run run("ingest", binder, p.common);
  Corpus corpus = run.load_corpus(p.input);
  if (!p.metadata.empty()) {
    run.add_input(p.metadata);
    apply_course_metadata(corpus, p.metadata);
  }
  std::ostringstream body;
  write_corpus(body, corpus, CorpusFormat::JsonLines);
  run.write("corpus.jsonl", body.str());
  if (!p.metadata.empty()) {
    std::ostringstream meta;
    write_course_metadata(meta, corpus);
    run.write("courses.csv", meta.str());
  }
  std::ostringstream summary;
  csv::Writer w(summary);
  w.row({"course_id", "threads", "posts", "smalltalk", "logistics", "course", "unlabeled"});
  for (const auto& c : corpus.courses) {
    std::size_t posts = 0;
    std::size_t by_label[4] = {0, 0, 0, 0};
    for (const auto& t : c.threads) {
      posts += t.posts.size();
      ++by_label[static_cast<int>(t.label)];
    }
    w.row({c.course_id, csv::format_number(c.threads.size()), csv::format_number(posts),
           csv::format_number(by_label[static_cast<int>(Label::SmallTalk)]),
           csv::format_number(by_label[static_cast<int>(Label::Logistics)]),
           csv::format_number(by_label[static_cast<int>(Label::CourseSpecific)]),
           csv::format_number(by_label[static_cast<int>(Label::Unlabeled)])});
  }
  run.write("summary.csv", summary.str());
  run.finish();
}

}  // namespace

void register_gen(CLI::App& app) {
  auto* sub = app.add_subcommand("gen", "Sample a labeled synthetic corpus from the mixture model");
  auto p = std::make_shared<GenParams>();
  auto b = std::make_shared<Binder>(sub);
  add_common(*b, p->common);
  b->add("--spec", "spec", p->spec_path, "Generative spec JSON (overrides --construction)");
  b->add("--construction", "construction", p->construction, "topical or adversarial");
  b->add("--n", "n", p->n, "Vocabulary size");
  b->add("--courses", "courses", p->courses, "Number of courses (topical)");
  b->add("--epsilon", "epsilon", p->epsilon, "Topic mixture weight");
  b->add("--p", "p", p->p, "Small-talk probability per thread (topical)");
  b->add("--length", "length", p->length, "Words per thread (topical)");
  b->add("--support", "support", p->support, "Words per topic");
  b->add("--topic-shape", "topic_shape", p->topic_shape, "uniform or geometric topic weights");
  b->add("--c", "c", p->c, "Adversarial constant c");
  b->add("--d", "d", p->d, "Adversarial exponent d");
  b->add("--threads", "threads", p->threads, "Threads per course: one count or a comma list");
  b->add("--spacing", "spacing", p->spacing, "Seconds between consecutive threads of a course");
  b->add("--max-tokens", "max_tokens", p->max_tokens, "Refuse corpora with more tokens than this");
  sub->callback([p, b] { run_gen(*p, *b); });
}

void register_ingest(CLI::App& app) {
  auto* sub = app.add_subcommand("ingest", "Validate a corpus (JSON lines or CSV) and normalize it");
  auto p = std::make_shared<IngestParams>();
  auto b = std::make_shared<Binder>(sub);
  add_common(*b, p->common);
  b->add("--input,-i", "input", p->input, "Corpus file (.jsonl or .csv)");
  b->add("--metadata", "metadata", p->metadata, "Course metadata CSV");
  sub->callback([p, b] { run_ingest(*p, *b); });
}

}  // namespace forumlens::cli
