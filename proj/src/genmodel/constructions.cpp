#include <algorithm>
#include <cmath>

#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"

namespace forumlens::gen {

std::vector<std::string> word_names(std::size_t n) {
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("w" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

UnigramModel near_uniform_background(std::span<const std::string> vocab) {
  std::vector<std::pair<std::string, double>> weights;
  weights.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const std::uint64_t h = (static_cast<std::uint64_t>(i) * 2654435761ULL) % 1000ULL;
    weights.emplace_back(vocab[i], 1.0 + static_cast<double>(h) / 1000.0);
  }
  return unigram_from_weights(std::move(weights));
}

UnigramModel topic_distribution(std::span<const std::string> words, const TopicOptions& options) {
  std::vector<std::pair<std::string, double>> weights;
  double w = 1.0;
  for (const auto& word : words) {
    weights.emplace_back(word, w);
    if (options.shape == TopicShape::Geometric) w *= options.ratio;
  }
  return unigram_from_weights(std::move(weights));
}

namespace {

// Bounds l, u that bracket every topical ratio with some slack.
void store_ratio_bounds(GenerativeSpec& spec) {
  double lo = INFINITY, hi = 0;
  for (const auto& c : spec.courses)
    for (std::size_t k = 0; k < c.topic.size(); ++k) {
      const double pb = spec.background.probability(c.topic.vocab[k]);
      const double r = ((1.0 - spec.epsilon) * pb + spec.epsilon * c.topic.mass[k]) / pb;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  if (hi == 0) lo = hi = 2.0;
  spec.ratio_lower = 1.0 + 0.5 * (lo - 1.0);
  spec.ratio_upper = 2.0 * hi;
  const auto [mn, mx] = std::minmax_element(spec.background.mass.begin(), spec.background.mass.end());
  spec.background_ratio_bound = std::max(2.0, *mx / *mn);
}

std::span<const std::string> block(const std::vector<std::string>& vocab, std::size_t i, std::size_t k) {
  return std::span<const std::string>(vocab).subspan(i * k, k);
}

}  // namespace

GenerativeSpec adversarial_spec(std::size_t n, const AdversarialOptions& o) {
  if (n < 100) throw ConfigError("adversarial construction needs n >= 100");
  if (!(o.c > 0) || !(o.d > 0)) throw ConfigError("c and d must be positive");
  const std::size_t k = std::min(o.support, n / 4);
  const auto vocab = word_names(n);
  const double nn = static_cast<double>(n);

  GenerativeSpec spec;
  spec.epsilon = o.epsilon;
  spec.seed = o.seed;
  spec.background = near_uniform_background(vocab);
  spec.smalltalk_topic = topic_distribution(block(vocab, 0, k));

  const double p1 = std::min(0.5, o.c * std::log(nn) / std::sqrt(nn));
  const auto s1 = static_cast<std::uint64_t>(std::llround(std::sqrt(nn)));
  const auto b1 = static_cast<std::size_t>(std::ceil(1.0 / p1 - 1e-9));
  const double s2d = std::pow(nn, o.d);
  if (s2d > 1e15) throw ConfigError("n^d is too large");
  const auto s2 = static_cast<std::uint64_t>(std::llround(s2d));
  const double p2 = 1.0 - 1.0 / s2d;

  spec.courses.push_back({p1, {s1, 0}, topic_distribution(block(vocab, 1, k))});
  spec.courses.push_back({p2, {s2, 0}, topic_distribution(block(vocab, 2, k))});
  spec.notes = {{"construction", "adversarial"}, {"c", o.c}, {"d", o.d}, {"b", {b1, o.b2}},
                {"support", k}};
  store_ratio_bounds(spec);
  return spec;
}

std::vector<std::size_t> adversarial_counts(const GenerativeSpec& spec) {
  if (!spec.notes.contains("b")) throw ConfigError("spec carries no training counts");
  return spec.notes.at("b").get<std::vector<std::size_t>>();
}

GenerativeSpec topical_spec(const TopicalOptions& o) {
  if ((o.courses + 1) * o.support > o.n)
    throw ConfigError("vocabulary too small for " + std::to_string(o.courses + 1) + " disjoint topics");
  const auto vocab = word_names(o.n);
  GenerativeSpec spec;
  spec.epsilon = o.epsilon;
  spec.seed = o.seed;
  spec.background = near_uniform_background(vocab);
  spec.smalltalk_topic = topic_distribution(block(vocab, 0, o.support), o.topic);
  for (std::size_t i = 0; i < o.courses; ++i)
    spec.courses.push_back({o.p, {o.s, 0}, topic_distribution(block(vocab, i + 1, o.support), o.topic)});
  spec.notes = {{"construction", "topical"}, {"support", o.support}};
  store_ratio_bounds(spec);
  return spec;
}

double c0(const GenerativeSpec& spec) {
  double mass = 0;
  for (const auto& w : spec.smalltalk_topic.vocab) mass += spec.background.probability(w);
  return mass * (1.0 - spec.epsilon) / spec.epsilon;
}

double SeparatingPlane::score(const SparseVector& bag) const noexcept { return dot(a, bag); }

double SeparatingPlane::score(std::span<const std::uint32_t> tokens) const noexcept {
  double s = 0;
  for (auto t : tokens) s += a[t];
  return s;
}

bool SeparatingPlane::is_smalltalk(const SparseVector& bag, std::uint64_t length) const noexcept {
  return score(bag) > threshold(length);
}

SeparatingPlane separating_plane(const GenerativeSpec& spec) {
  check_structure(spec);
  SeparatingPlane plane;
  plane.a.assign(spec.n(), 0.0);
  for (const auto& w : spec.smalltalk_topic.vocab) plane.a[*spec.background.index_of(w)] = 1.0;
  plane.slope = spec.smalltalk_topic.vocab.empty() ? INFINITY : (0.5 + c0(spec)) * spec.epsilon;
  return plane;
}

}  // namespace forumlens::gen
