#include <doctest.h>

#include <cmath>

#include "forumlens/classify.hpp"
#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"
#include "forumlens/rng.hpp"

using namespace forumlens;
using namespace forumlens::classify;

namespace {

Example ex(std::vector<std::uint32_t> ids, bool positive, std::size_t group = 0, double oov = 0) {
  Example e;
  e.x = bag_of_ids(ids);
  e.positive = positive;
  e.group = group;
  e.oov = oov;
  return e;
}

Thread thread(std::string id, Timestamp ts, std::string text, Label label) {
  return Thread{id, ts, {Post{id + ".p", "u" + id, ts, std::move(text), false}}, label};
}

Corpus two_course_corpus() {
  Corpus c;
  Course a{"a", 0, {}, std::nullopt, Category::HumanitiesSocial};
  a.threads = {thread("1", 0, "hello everyone from paris", Label::SmallTalk),
               thread("2", 10, "hello study group anyone", Label::SmallTalk),
               thread("3", 20, "proof of lemma two", Label::CourseSpecific),
               thread("4", 30, "deadline extension please", Label::Logistics),
               thread("5", 40, "unlabeled musings", Label::Unlabeled)};
  Course b{"b", 0, {}, std::nullopt, Category::HumanitiesSocial};
  b.threads = {thread("1", 0, "hello from tokyo", Label::SmallTalk),
               thread("2", 10, "integral of sine", Label::CourseSpecific)};
  c.courses = {a, b};
  return c;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("labels map onto the binary task") {
  CHECK(is_positive(Label::SmallTalk) == true);
  CHECK(is_positive(Label::Logistics) == false);
  CHECK(is_positive(Label::CourseSpecific) == false);
  CHECK_FALSE(is_positive(Label::Unlabeled).has_value());
}

TEST_CASE("dataset features count tokens and skip unlabeled threads") {
  const Dataset d = dataset_from_corpus(two_course_corpus());
  CHECK(d.groups == std::vector<std::string>{"a", "b"});
  CHECK(d.examples.size() == 6);
  CHECK_FALSE(d.vocab.index_of("musings").has_value());
  const auto hello = *d.vocab.index_of("hello");
  double hello_total = 0;
  for (const auto& e : d.examples)
    for (std::size_t k = 0; k < e.x.nnz(); ++k)
      if (e.x.index[k] == hello) hello_total += e.x.value[k];
  CHECK(hello_total == 3);
  const Vocabulary small({"hello", "paris"});
  const Dataset r = dataset_from_corpus(two_course_corpus(), {}, &small);
  CHECK(r.examples[0].x.sum() == 2);
  CHECK(r.examples[0].oov == 1);  // "everyone"
}

TEST_CASE("naive Bayes matches hand-computed log probabilities") {
  // Vocabulary {0,1,2}; positives: [0,0,1], [0]; negative: [2,2,1].
  const std::vector<Example> train{ex({0, 0, 1}, true), ex({0}, true), ex({2, 2, 1}, false)};
  const NbModel unit = fit_nb(train, 3, Smoothing::UnitInit, "s");
  CHECK(unit.log_prior[1] == doctest::Approx(std::log(2.0 / 3)));
  CHECK(unit.log_cond[1][0] == doctest::Approx(std::log(4.0 / 6)));  // (3+1)/(4+2)
  CHECK(unit.log_cond[0][2] == doctest::Approx(std::log(3.0 / 5)));  // (2+1)/(3+2)
  CHECK(unit.log_unseen[0] == doctest::Approx(std::log(1.0 / 5)));
  const NbModel lap = fit_nb(train, 3, Smoothing::Laplace, "s");
  CHECK(lap.log_cond[1][2] == doctest::Approx(std::log(1.0 / 7)));  // (0+1)/(4+3)
  double total = 0;
  for (double l : lap.log_cond[0]) total += std::exp(l);
  CHECK(total == doctest::Approx(1.0));

  const Example q = ex({0, 2}, false, 0, 1);
  const auto p = predict(unit, q);
  const double lj1 = std::log(2.0 / 3) + std::log(4.0 / 6) + std::log(1.0 / 6) + std::log(1.0 / 6);
  const double lj0 = std::log(1.0 / 3) + std::log(1.0 / 5) + std::log(3.0 / 5) + std::log(1.0 / 5);
  CHECK(p.log_joint[1] == doctest::Approx(lj1));
  CHECK(p.log_joint[0] == doctest::Approx(lj0));
  CHECK(p.positive == (lj1 > lj0));
  CHECK(std::exp(p.log_posterior[0]) + std::exp(p.log_posterior[1]) == doctest::Approx(1.0));
}

TEST_CASE("ties go to the negative class") {
  const std::vector<Example> train{ex({0}, true), ex({0}, false)};
  const NbModel m = fit_nb(train, 1, Smoothing::UnitInit, "s");
  CHECK_FALSE(predict(m, ex({0}, false)).positive);
}

TEST_CASE("missing classes are reported with their scope") {
  const std::vector<Example> only_pos{ex({0}, true)};
  try {
    fit_nb(only_pos, 1, Smoothing::UnitInit, "bio");
    FAIL("expected MissingClass");
  } catch (const MissingClass& e) {
    CHECK(std::string(e.what()).find("bio") != std::string::npos);
  }
  CHECK_THROWS_AS(train_svm(only_pos, 1), MissingClass);
}

TEST_CASE("per-course and aggregate naive Bayes") {
  const Dataset d = dataset_from_corpus(two_course_corpus());
  const auto per = train_nb(d);
  CHECK(per.models.size() == 2);
  CHECK(per.model_for("b").scope == "b");
  CHECK_THROWS_AS(per.model_for("zzz"), DomainMismatch);
  const auto agg = train_nb(d, {NbMode::Aggregate, Smoothing::UnitInit});
  CHECK(agg.models.size() == 1);
  CHECK(agg.model_for("anything").scope == "*");
  const auto report = evaluate(per, d.examples, d.groups);
  CHECK(report.tp + report.fp + report.tn + report.fn == d.examples.size());
}

TEST_CASE("hinge objective by hand") {
  const std::vector<Example> data{ex({0}, true), ex({1}, false)};
  const std::vector<double> w{2.0, 0.5};
  // margins: 1*(2+0.1)=2.1 -> 0 loss; -1*(0.5+0.1)=-0.6 -> 1.6 loss.
  CHECK(svm_objective(data, w, 0.1, 0.2) == doctest::Approx(0.5 * 0.2 * 4.25 + 0.8));
}

TEST_CASE("Pegasos reaches the brute-force hinge optimum") {
  // Two features; optimum found by exhaustive grid search over (w0, w1, b).
  std::vector<Example> data;
  Rng rng(2);
  for (int i = 0; i < 40; ++i) {
    const bool pos = i % 2 == 0;
    std::vector<std::uint32_t> ids;
    const int a = static_cast<int>(rng.below(4)) + (pos ? 2 : 0);
    const int b = static_cast<int>(rng.below(4)) + (pos ? 0 : 2);
    for (int k = 0; k < a; ++k) ids.push_back(0);
    for (int k = 0; k < b; ++k) ids.push_back(1);
    data.push_back(ex(ids, pos));
  }
  const double lambda = 0.05;
  double best = INFINITY;
  for (double w0 = -2; w0 <= 2.0001; w0 += 0.02)
    for (double w1 = -2; w1 <= 2.0001; w1 += 0.02)
      for (double b = -2; b <= 2.0001; b += 0.1) best = std::min(best, svm_objective(data, std::vector<double>{w0, w1}, b, lambda));
  SvmOptions o;
  o.lambda = lambda;
  o.epochs = 400;
  const SvmModel m = train_svm(data, 2, o);
  const double got = svm_objective(data, m.weights, m.bias, lambda);
  CHECK(got <= best * 1.02 + 1e-9);
}

TEST_CASE("duplicating or permuting the training set leaves the SVM unchanged") {
  std::vector<Example> data{ex({0, 0, 1}, true), ex({2}, false), ex({1, 2}, false), ex({0}, true), ex({2}, false)};
  const SvmModel base = train_svm(data, 3);
  std::vector<Example> doubled = data;
  doubled.insert(doubled.end(), data.begin(), data.end());
  const SvmModel twice = train_svm(doubled, 3);
  CHECK(twice.weights == base.weights);
  CHECK(twice.bias == base.bias);
  std::vector<Example> reversed(data.rbegin(), data.rend());
  CHECK(train_svm(reversed, 3).weights == base.weights);
  SvmOptions other;
  other.seed = 1;
  CHECK(train_svm(data, 3, other).weights.size() == 3);
}

TEST_CASE("evaluation counts and rates") {
  EvalReport r;
  r.add(true, true);
  r.add(true, false);
  r.add(false, false);
  r.add(false, false);
  r.add(false, true);
  CHECK(r.tp == 1);
  CHECK(r.fp == 1);
  CHECK(r.tn == 2);
  CHECK(r.fn == 1);
  CHECK(r.tpr() == doctest::Approx(0.5));
  CHECK(r.fpr() == doctest::Approx(1.0 / 3));
  CHECK(r.error_rate() == doctest::Approx(0.4));
  CHECK(EvalReport{}.tpr() == 0);
}

TEST_CASE("ROC sweep is monotone and validates thresholds") {
  const Dataset d = dataset_from_corpus(two_course_corpus());
  const SvmModel m = train_svm(d);
  const std::vector<double> th{-3, -1, 0, 0.5, 1, 3};
  const auto roc = roc_sweep(m, d.examples, th);
  REQUIRE(roc.size() == th.size());
  for (std::size_t i = 1; i < roc.size(); ++i) {
    CHECK(roc[i].second.tpr() <= roc[i - 1].second.tpr());
    CHECK(roc[i].second.fpr() <= roc[i - 1].second.fpr());
  }
  const std::vector<double> unsorted{1, 0};
  CHECK_THROWS_AS(roc_sweep(m, d.examples, unsorted), ConfigError);
}

TEST_CASE("models survive a JSON round trip") {
  const Dataset d = dataset_from_corpus(two_course_corpus());
  const auto nb = train_nb(d);
  const auto nb2 = model_from_json(to_json(nb));
  REQUIRE(nb2.nb);
  for (const auto& e : d.examples) {
    const auto& g = d.groups[e.group];
    CHECK(nb2.nb->predict(e, g).log_joint == nb.predict(e, g).log_joint);
  }
  SvmModel svm = train_svm(d);
  svm.theta = 0.25;
  const auto s2 = model_from_json(to_json(svm));
  REQUIRE(s2.svm);
  CHECK(s2.svm->weights == svm.weights);
  CHECK(s2.svm->theta == 0.25);
  CHECK(s2.svm->vocab.words() == svm.vocab.words());
}

TEST_CASE("remap moves unknown words to the oov count") {
  const Vocabulary from({"a", "b", "c"});
  const Vocabulary to({"b", "c", "d"});
  const std::vector<Example> xs{ex({0, 1, 1, 2}, true)};
  const auto r = remap(xs, from, to);
  CHECK(r[0].oov == 1);
  CHECK(r[0].x == SparseVector{{0, 1}, {2, 1}});
}

TEST_CASE("aggregate training inflates false positives on the long course") {
  const gen::Sampler sampler(gen::adversarial_spec(10000));
  const auto counts = gen::adversarial_counts(sampler.spec());
  const std::size_t n = sampler.vocab_size();
  auto bag = [&](std::size_t course, bool smalltalk, Rng& rng) {
    const auto b = sampler.sample_bag(course, smalltalk, rng);
    Example e;
    e.x = b.counts;
    e.positive = b.is_smalltalk;
    e.group = course;
    return e;
  };
  auto fpr = [](const NbModel& m, const std::vector<Example>& negatives) {
    std::size_t fp = 0;
    for (const auto& e : negatives) fp += predict(m, e).positive;
    return static_cast<double>(fp) / static_cast<double>(negatives.size());
  };
  std::size_t trials = 0, holds = 0;
  for (std::uint64_t trial = 0; trial < 12; ++trial) {
    Rng rng(derive_seed(77, trial));
    std::vector<Example> mixed;
    for (std::size_t i = 0; i < counts[0]; ++i) {
      const auto b = sampler.sample_bag(0, rng);
      mixed.push_back(Example{b.counts, 0, b.is_smalltalk, 0});
    }
    for (std::size_t i = 0; i < counts[1]; ++i) {
      const auto b = sampler.sample_bag(1, rng);
      mixed.push_back(Example{b.counts, 0, b.is_smalltalk, 1});
    }
    std::vector<Example> alone;
    for (int i = 0; i < 6; ++i) alone.push_back(bag(1, true, rng)), alone.push_back(bag(1, false, rng));
    std::vector<Example> negatives;
    for (int i = 0; i < 8; ++i) negatives.push_back(bag(1, false, rng));
    NbModel aggregate;
    try {
      aggregate = fit_nb(mixed, n, Smoothing::UnitInit, "*");
    } catch (const MissingClass&) {
      continue;
    }
    const auto single = fit_nb(alone, n, Smoothing::UnitInit, "course1");
    ++trials;
    holds += fpr(aggregate, negatives) >= fpr(single, negatives);
  }
  REQUIRE(trials > 0);
  CHECK(static_cast<double>(holds) >= 0.9 * static_cast<double>(trials));
}

}  // TEST_SUITE
