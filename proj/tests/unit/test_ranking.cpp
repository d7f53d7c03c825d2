#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <set>

#include "forumlens/error.hpp"
#include "forumlens/ranking.hpp"
#include "forumlens/rng.hpp"

using namespace forumlens;
using namespace forumlens::ranking;

namespace {

RankDoc doc(std::string id, std::vector<std::string> tokens, std::vector<std::string> authors = {},
            Timestamp ts = 0) {
  return RankDoc{std::move(id), ts, std::move(tokens), std::move(authors)};
}

topics::KeywordRanking keywords(std::vector<std::string> words) {
  topics::KeywordRanking r;
  double g = 100;
  for (auto& w : words) r.entries.push_back({std::move(w), g--});
  return r;
}

// Limit of power iteration from the uniform vector: its projection onto the
// top eigenspace of A^T A.
Eigen::VectorXd dense_authority(const Eigen::MatrixXd& a) {
  const Eigen::MatrixXd m = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const auto& vals = es.eigenvalues();
  const double top = vals(vals.size() - 1);
  Eigen::VectorXd start = Eigen::VectorXd::Ones(m.rows());
  Eigen::VectorXd proj = Eigen::VectorXd::Zero(m.rows());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) >= top * (1 - 1e-9)) {
      const Eigen::VectorXd v = es.eigenvectors().col(i);
      proj += v.dot(start) * v;
    }
  return proj.normalized();
}

}  // namespace

TEST_SUITE("ranking") {

TEST_CASE("topical score is a sum of alpha^rank") {
  const auto kw = keywords({"w1", "w2", "w3"});
  const std::vector<RankDoc> q{doc("a", {"w1", "w1"}), doc("b", {"zzz"}), doc("c", {"w3", "w2", "w1"})};
  const auto r = topical_rank(kw, q, 0.5);
  CHECK(r.entries[0].thread_id == "a");
  CHECK(r.entries[0].score == 1.0);
  CHECK(r.entries[1].score == doctest::Approx(0.5 + 0.25 + 0.125));
  CHECK(r.entries[2].score == 0.0);
  CHECK_THROWS_AS(topical_rank(kw, q, 1.0), ConfigError);
}

TEST_CASE("topical score respects the keyword cutoff, token order and positivity") {
  const auto kw = keywords({"w1", "w2", "w3"});
  const std::vector<RankDoc> q{doc("a", {"w3", "w2"})};
  CHECK(topical_rank(kw, q, 0.5, 2).entries[0].score == 0.25);
  const std::vector<RankDoc> swapped{doc("a", {"w2", "w3"})};
  CHECK(topical_rank(kw, swapped, 0.9).entries[0].score == topical_rank(kw, q, 0.9).entries[0].score);
  const std::vector<RankDoc> longer{doc("a", {"w3", "w2", "w1"})};
  CHECK(topical_rank(kw, longer, 0.9).entries[0].score > topical_rank(kw, q, 0.9).entries[0].score);
}

TEST_CASE("tf-idf arithmetic") {
  const std::vector<RankDoc> window{doc("a", {"rare", "rare", "all"}), doc("b", {"all", "x"}), doc("c", {"all", "x"}),
                                    doc("d", {"all"})};
  const auto r = tfidf_rank(window, window);
  CHECK(r.entries[0].thread_id == "a");
  CHECK(r.entries[0].score == doctest::Approx(2 * std::log(4.0)).epsilon(1e-12));
  CHECK(r.entries[1].score == doctest::Approx(std::log(2.0)));
  CHECK(r.entries[3].score == 0);
  const std::vector<RankDoc> one{doc("z", {"p", "q", "p"})};
  CHECK(tfidf_rank(one, one).entries[0].score == 0);
  const std::vector<RankDoc> outside{doc("o", {"unseen"})};
  CHECK(tfidf_rank(window, outside).entries[0].score == 0);
  CHECK_THROWS_AS(tfidf_rank({}, window), ConfigError);
}

TEST_CASE("ties break by creation time then id") {
  const auto r = make_ranked({{"b", 1, 5}, {"a", 1, 5}, {"c", 1, 3}, {"d", 2, 9}});
  CHECK(r.top_ids(4) == std::vector<std::string>{"d", "c", "a", "b"});
}

TEST_CASE("HITS on a complete bipartite graph is uniform") {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t t = 0; t < 4; ++t) edges.emplace_back(u, t);
  const auto h = hits(3, 4, edges);
  CHECK(h.converged);
  for (double a : h.authority) CHECK(a == doctest::Approx(0.5));
}

TEST_CASE("HITS matches a dense eigensolver on all small graphs") {
  Rng rng(21);
  int converged = 0, total = 0;
  for (std::size_t users = 1; users <= 8; ++users)
    for (std::size_t threads = 1; threads <= 8; ++threads)
      for (int rep = 0; rep < 3; ++rep) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(users), static_cast<Eigen::Index>(threads));
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < users; ++u)
          for (std::size_t t = 0; t < threads; ++t)
            if (rng.bernoulli(0.45)) {
              a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(t)) = 1;
              edges.emplace_back(u, t);
            }
        if (edges.empty()) continue;
        // Duplicate edges must not change anything.
        edges.push_back(edges.front());
        const auto h = hits(users, threads, edges);
        ++total;
        if (!h.converged) continue;
        ++converged;
        const Eigen::VectorXd ref = dense_authority(a);
        const Eigen::Map<const Eigen::VectorXd> got(h.authority.data(), static_cast<Eigen::Index>(threads));
        CAPTURE(users);
        CAPTURE(threads);
        CHECK(got.dot(ref) >= 1 - 1e-6);
      }
  CHECK(converged >= total * 9 / 10);
}

TEST_CASE("HITS star graph: a lone thread scores below a shared one") {
  // users 0,1 post in thread 0; user 2 alone in thread 1.
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 0}, {1, 0}, {2, 1}};
  const auto h = hits(3, 2, edges);
  CHECK(h.authority[1] < h.authority[0]);
}

TEST_CASE("HITS ranks popular threads, topical ranks relevant ones") {
  const auto kw = keywords({"theta", "octave"});
  const std::vector<RankDoc> window{doc("popular", {"hello", "everyone"}, {"u1", "u2", "u3", "u4"}),
                                    doc("relevant", {"theta", "octave"}, {"u5"}),
                                    doc("other", {"theta"}, {"u1", "u6"})};
  const auto hr = hits_rank(window, window);
  const auto tr = topical_rank(kw, window, 0.96);
  auto pos = [](const RankedList& r, const std::string& id) {
    for (std::size_t i = 0; i < r.entries.size(); ++i)
      if (r.entries[i].thread_id == id) return i;
    return r.entries.size();
  };
  CHECK(pos(hr, "popular") < pos(tr, "popular"));
  CHECK(pos(hr, "popular") == 0);
}

TEST_CASE("top-k differences are balanced") {
  const auto a = make_ranked({{"1", 5, 0}, {"2", 4, 0}, {"3", 3, 0}, {"4", 2, 0}});
  const auto d0 = topk_diff(a, a, 3);
  CHECK(d0.ours_only.empty());
  CHECK(d0.baseline_only.empty());
  const auto b = make_ranked({{"5", 5, 0}, {"6", 4, 0}, {"7", 3, 0}});
  const auto d1 = topk_diff(a, b, 3);
  CHECK(d1.ours_only.size() == 3);
  CHECK(d1.baseline_only.size() == 3);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RankedEntry> x, y;
    for (int i = 0; i < 20; ++i) {
      x.push_back({std::to_string(i), rng.uniform(), 0});
      y.push_back({std::to_string(i), rng.uniform(), 0});
    }
    const auto d = topk_diff(make_ranked(x), make_ranked(y), 1 + rng.below(20));
    CHECK(d.ours_only.size() == d.baseline_only.size());
  }
}

TEST_CASE("query days are seeded, distinct and sorted") {
  const auto d = query_days(5, 10, 5, 10, 30);
  CHECK(d == query_days(5, 10, 5, 10, 30));
  CHECK(d.size() == 6);
  CHECK(std::is_sorted(d.begin(), d.end()));
  CHECK(std::set<std::int64_t>(d.begin(), d.end()).size() == d.size());
  CHECK(d.front() >= 10);
  CHECK(d.back() <= 30);
  CHECK(std::find(d.begin(), d.end(), 10) != d.end());
}

TEST_CASE("window documents follow the day boundaries") {
  Course c{"c", 0, {}, std::nullopt, Category::HumanitiesSocial};
  for (int day = 1; day <= 20; ++day) {
    const Timestamp ts = (day - 1) * 86400 + 100;
    c.threads.push_back(Thread{"t" + std::to_string(day), ts,
                               {Post{"p" + std::to_string(day), "u", ts, "word", false}},
                               day % 2 ? Label::SmallTalk : Label::CourseSpecific});
  }
  RankOptions o;
  o.window = {12, 2};
  const auto w = window_docs(c, 14, o);
  CHECK(w.warmup.size() == 12);
  CHECK(w.warmup.front().thread_id == "t2");
  CHECK(w.query.size() == 2);
  CHECK(w.query_labels == std::vector<Label>{Label::CourseSpecific, Label::SmallTalk});
  CHECK(w.window.size() == 14);
  CHECK(window_docs(c, 5, o).warmup.size() == 4);
  CHECK(irrelevant(Label::SmallTalk));
  CHECK(irrelevant(Label::Logistics));
  CHECK_FALSE(irrelevant(Label::CourseSpecific));
}

}  // TEST_SUITE
