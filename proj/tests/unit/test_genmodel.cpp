#include <doctest.h>

#include <cmath>
#include <set>

#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"

using namespace forumlens;
using namespace forumlens::gen;

TEST_SUITE("genmodel") {

TEST_CASE("alias table reproduces its weights") {
  const std::vector<double> w{0.5, 3, 0, 1.5, 5};
  const AliasTable t(w);
  Rng rng(5);
  std::vector<double> hist(w.size(), 0);
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) ++hist[t.sample(rng)];
  CHECK(hist[2] == 0);
  double chi2 = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    const double e = draws * w[i] / 10.0;
    chi2 += (hist[i] - e) * (hist[i] - e) / e;
  }
  CHECK(chi2 < 18.47);  // chi-square(4) 0.999 quantile
  CHECK_THROWS_AS(AliasTable(std::vector<double>{0, 0}), ConfigError);
}

TEST_CASE("word names are zero padded and sorted") {
  const auto w = word_names(1000);
  CHECK(w.front() == "w000");
  CHECK(w.back() == "w999");
  CHECK(std::is_sorted(w.begin(), w.end()));
}

TEST_CASE("near-uniform background keeps max/min below 2") {
  const auto vocab = word_names(5000);
  const auto b = near_uniform_background(vocab);
  const auto [mn, mx] = std::minmax_element(b.mass.begin(), b.mass.end());
  CHECK(*mx / *mn < 2.0);
  double s = 0;
  for (double m : b.mass) s += m;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adversarial construction parameters") {
  const std::size_t n = 10000;
  const GenerativeSpec spec = adversarial_spec(n);
  // Independent recomputation of the construction.
  const double p1 = std::min(0.5, 4.0 * std::log(10000.0) / 100.0);
  REQUIRE(spec.courses.size() == 2);
  CHECK(spec.courses[0].p == doctest::Approx(p1));
  CHECK(spec.courses[0].length.s == 100);
  CHECK(spec.courses[1].length.s == 100000000);
  CHECK(spec.courses[1].p == doctest::Approx(1.0 - 1e-8));
  CHECK(adversarial_counts(spec) == std::vector<std::size_t>{3, 30});
  CHECK(spec.smalltalk_topic.size() == 50);
  CHECK(invariant_violations(spec).empty());

  const GenerativeSpec tiny = adversarial_spec(100);
  CHECK(tiny.courses[0].p == 0.5);
  CHECK(tiny.smalltalk_topic.size() == 25);
  CHECK_THROWS_AS(adversarial_spec(50), ConfigError);
}

TEST_CASE("topic supports are disjoint and inside the vocabulary") {
  TopicalOptions o;
  o.n = 2000;
  o.courses = 5;
  const auto spec = topical_spec(o);
  std::set<std::string> seen(spec.smalltalk_topic.vocab.begin(), spec.smalltalk_topic.vocab.end());
  for (const auto& c : spec.courses)
    for (const auto& w : c.topic.vocab) {
      CHECK(seen.insert(w).second);
      CHECK(spec.background.index_of(w).has_value());
    }
  CHECK(invariant_violations(spec).empty());
  o.courses = 40;
  CHECK_THROWS_AS(topical_spec(o), ConfigError);
}

TEST_CASE("structural and model invariant checks") {
  TopicalOptions o;
  o.n = 1000;
  o.courses = 2;
  auto spec = topical_spec(o);
  SUBCASE("overlapping topics") {
    spec.courses[1].topic = spec.courses[0].topic;
    CHECK_THROWS_AS(check_structure(spec), ConfigError);
  }
  SUBCASE("epsilon outside (0,1)") {
    spec.epsilon = 0;
    CHECK_FALSE(invariant_violations(spec).empty());
    spec.epsilon = 1.0;
    CHECK_THROWS_AS(check_structure(spec), ConfigError);
  }
  SUBCASE("ratio bounds that miss a word") {
    spec.ratio_upper = spec.ratio_lower * 1.0000001;
    CHECK_FALSE(invariant_violations(spec).empty());
    CHECK_THROWS(validate(spec));
  }
  SUBCASE("bad probability") {
    spec.courses[0].p = 1.5;
    CHECK_THROWS_AS(check_structure(spec), ConfigError);
  }
}

TEST_CASE("spec JSON round trip") {
  TopicalOptions o;
  o.n = 500;
  o.courses = 3;
  o.topic.shape = TopicShape::Geometric;
  o.seed = 99;
  const auto spec = topical_spec(o);
  const auto back = spec_from_json(to_json(spec));
  CHECK(to_json(back) == to_json(spec));
  CHECK(back.seed == 99);
  CHECK(back.courses[2].topic.mass == spec.courses[2].topic.mass);
}

TEST_CASE("mixtures equal (1-eps) B + eps T") {
  TopicalOptions o;
  o.n = 800;
  o.courses = 2;
  o.epsilon = 0.25;
  const Sampler s(topical_spec(o));
  const auto& spec = s.spec();
  for (std::size_t c = 0; c < 2; ++c)
    for (bool st : {false, true}) {
      const auto& m = s.mixture(c, st);
      const UnigramModel& t = st ? spec.smalltalk_topic : spec.courses[c].topic;
      double total = 0;
      for (std::size_t w = 0; w < spec.n(); ++w) {
        const double expect = 0.75 * spec.background.mass[w] + 0.25 * t.probability(spec.background.vocab[w]);
        CHECK(m[w] == doctest::Approx(expect).epsilon(1e-12));
        total += m[w];
      }
      CHECK(total == doctest::Approx(1.0));
    }
}

TEST_CASE("token sampler matches the mixture and the class probability") {
  TopicalOptions o;
  o.n = 200;
  o.courses = 1;
  o.support = 20;
  o.p = 0.3;
  o.s = 50;
  const Sampler s(topical_spec(o));
  Rng rng(17);
  std::vector<double> counts(200, 0);
  std::size_t smalltalk = 0, tokens = 0;
  const int threads = 4000;
  for (int i = 0; i < threads; ++i) {
    const auto t = s.sample_thread(0, rng);
    CHECK(t.tokens.size() == 50);
    if (t.is_smalltalk) ++smalltalk;
    else
      for (auto w : t.tokens) ++counts[w], ++tokens;
  }
  CHECK(std::abs(static_cast<double>(smalltalk) / threads - 0.3) < 4 * std::sqrt(0.21 / threads));
  const auto& m = s.mixture(0, false);
  double chi2 = 0;
  for (std::size_t w = 0; w < 200; ++w) {
    const double e = m[w] * static_cast<double>(tokens);
    chi2 += (counts[w] - e) * (counts[w] - e) / e;
  }
  CHECK(chi2 < 199 + 5 * std::sqrt(2 * 199.0));
}

TEST_CASE("count path has the multinomial moments") {
  TopicalOptions o;
  o.n = 300;
  o.courses = 1;
  o.support = 30;
  o.s = 1 << 17;
  const Sampler s(topical_spec(o));
  Rng rng(23);
  const auto& m = s.mixture(0, true);
  std::vector<double> sum(300, 0);
  const int reps = 40;
  for (int r = 0; r < reps; ++r) {
    const auto bag = s.sample_bag(0, true, rng);
    CHECK(bag.length == o.s);
    CHECK(bag.counts.sum() == static_cast<double>(o.s));
    for (std::size_t k = 0; k < bag.counts.nnz(); ++k) sum[bag.counts.index[k]] += bag.counts.value[k];
  }
  int outliers = 0;
  for (std::size_t w = 0; w < 300; ++w) {
    const double n = static_cast<double>(o.s) * reps;
    const double z = (sum[w] - n * m[w]) / std::sqrt(n * m[w] * (1 - m[w]));
    if (std::abs(z) > 4) ++outliers;
  }
  CHECK(outliers == 0);
}

TEST_CASE("separating plane threshold sits between the class means") {
  TopicalOptions o;
  o.n = 1000;
  o.courses = 1;
  o.epsilon = 0.3;
  const auto spec = topical_spec(o);
  double mass = 0;
  for (const auto& w : spec.smalltalk_topic.vocab) mass += spec.background.probability(w);
  CHECK(c0(spec) == doctest::Approx(mass * 0.7 / 0.3));
  const auto plane = separating_plane(spec);
  CHECK(plane.slope == doctest::Approx((0.5 + c0(spec)) * 0.3));
  const double st_mean = 0.3 + 0.7 * mass, course_mean = 0.7 * mass;
  CHECK(plane.slope == doctest::Approx((st_mean + course_mean) / 2));
  CHECK(std::count(plane.a.begin(), plane.a.end(), 1.0) == 50);

  const Sampler s(spec);
  Rng rng(8);
  int errors = 0;
  for (int i = 0; i < 500; ++i) {
    const auto t = s.sample_thread(0, rng);
    if ((plane.score(t.tokens) > plane.threshold(t.tokens.size())) != t.is_smalltalk) ++errors;
  }
  CHECK(errors < 25);
}

TEST_CASE("corpus sampling is deterministic and bounded") {
  TopicalOptions o;
  o.n = 500;
  o.courses = 2;
  o.s = 20;
  o.seed = 4;
  const Sampler s(topical_spec(o));
  const std::vector<std::size_t> counts{5, 7};
  const Corpus a = sample_corpus(s, counts, 1000, 3600);
  const Corpus b = sample_corpus(s, counts, 1000, 3600);
  CHECK(a == b);
  CHECK(a.courses[1].threads.size() == 7);
  CHECK(a.courses[1].threads[6].created_at == 6 * 3600);
  CHECK_NOTHROW(validate(a));
  CHECK_THROWS_AS(sample_corpus(s, counts, 100), ConfigError);
  CHECK_THROWS_AS(sample_corpus(s, std::vector<std::size_t>{1}), ConfigError);
}

}  // TEST_SUITE
