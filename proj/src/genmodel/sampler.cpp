#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"

namespace forumlens::gen {

namespace {

std::vector<std::uint32_t> support_indices(const UnigramModel& background, const UnigramModel& topic) {
  std::vector<std::uint32_t> out;
  out.reserve(topic.size());
  for (const auto& w : topic.vocab) {
    auto i = background.index_of(w);
    if (!i) throw ConfigError("topic word '" + w + "' is not in the background vocabulary");
    out.push_back(static_cast<std::uint32_t>(*i));
  }
  return out;
}

std::vector<double> mixture_of(const GenerativeSpec& spec, const UnigramModel& topic,
                               const std::vector<std::uint32_t>& support) {
  std::vector<double> mix(spec.n());
  for (std::size_t w = 0; w < mix.size(); ++w) mix[w] = (1.0 - spec.epsilon) * spec.background.mass[w];
  for (std::size_t k = 0; k < support.size(); ++k) mix[support[k]] += spec.epsilon * topic.mass[k];
  return mix;
}

}  // namespace

void check_structure(const GenerativeSpec& spec) {
  if (spec.background.size() == 0) throw ConfigError("background distribution is empty");
  if (spec.background.size() > std::numeric_limits<std::uint32_t>::max())
    throw ConfigError("vocabulary too large");
  if (!(spec.epsilon >= 0.0 && spec.epsilon < 1.0)) throw ConfigError("epsilon must lie in [0, 1)");
  std::unordered_set<std::uint32_t> used;
  auto claim = [&](const UnigramModel& topic, const std::string& what) {
    for (auto i : support_indices(spec.background, topic))
      if (!used.insert(i).second)
        throw ConfigError("topic supports overlap at word '" + spec.background.vocab[i] + "' (" + what + ")");
  };
  claim(spec.smalltalk_topic, "smalltalk topic");
  for (std::size_t i = 0; i < spec.courses.size(); ++i) {
    const auto& c = spec.courses[i];
    if (!(c.p >= 0.0 && c.p <= 1.0)) throw ConfigError("course " + std::to_string(i) + ": p outside [0, 1]");
    if (c.length.s == 0) throw ConfigError("course " + std::to_string(i) + ": thread length must be positive");
    claim(c.topic, "course " + std::to_string(i));
  }
}

Sampler::Sampler(GenerativeSpec spec) : spec_(std::move(spec)) {
  check_structure(spec_);
  support0_ = support_indices(spec_.background, spec_.smalltalk_topic);
  if (!spec_.smalltalk_topic.vocab.empty() || spec_.epsilon == 0.0) {
    mix0_ = mixture_of(spec_, spec_.smalltalk_topic, support0_);
  } else {
    mix0_ = spec_.background.mass;  // no topic: all mass on B
  }
  alias0_ = AliasTable(mix0_);
  for (const auto& c : spec_.courses) {
    supports_.push_back(support_indices(spec_.background, c.topic));
    mix_.push_back(c.topic.vocab.empty() ? spec_.background.mass
                                         : mixture_of(spec_, c.topic, supports_.back()));
    alias_.emplace_back(mix_.back());
  }
}

const std::vector<double>& Sampler::mixture(std::size_t course, bool smalltalk) const {
  if (smalltalk) return mix0_;
  return mix_.at(course);
}

const std::vector<std::uint32_t>& Sampler::course_support(std::size_t course) const {
  return supports_.at(course);
}

const AliasTable& Sampler::table(std::size_t course, bool smalltalk) const {
  return smalltalk ? alias0_ : alias_.at(course);
}

std::uint64_t Sampler::draw_length(std::size_t course, Rng& rng) const {
  const LengthSpec& len = spec_.courses.at(course).length;
  if (len.constant()) return len.s;
  return len.s + rng.below(len.s_max - len.s + 1);
}

SampledThread Sampler::sample_thread(std::size_t course, Rng& rng) const {
  const bool smalltalk = rng.bernoulli(spec_.courses.at(course).p);
  return sample_thread(course, smalltalk, rng);
}

SampledThread Sampler::sample_thread(std::size_t course, bool smalltalk, Rng& rng) const {
  SampledThread t{course, smalltalk, {}};
  const std::uint64_t s = draw_length(course, rng);
  const AliasTable& alias = table(course, smalltalk);
  t.tokens.resize(s);
  for (auto& tok : t.tokens) tok = alias.sample(rng);
  return t;
}

SampledBag Sampler::sample_bag(std::size_t course, Rng& rng) const {
  const bool smalltalk = rng.bernoulli(spec_.courses.at(course).p);
  return sample_bag(course, smalltalk, rng);
}

SampledBag Sampler::sample_bag(std::size_t course, bool smalltalk, Rng& rng) const {
  SampledBag b{course, smalltalk, draw_length(course, rng), {}};
  if (b.length < count_path_min) {
    const AliasTable& alias = table(course, smalltalk);
    std::vector<std::uint32_t> tokens(b.length);
    for (auto& tok : tokens) tok = alias.sample(rng);
    b.counts = bag_of_ids(tokens);
    return b;
  }
  // Multinomial(length, mix) as a chain of conditional binomials.
  const std::vector<double>& mix = mixture(course, smalltalk);
  std::size_t last = mix.size();
  while (last > 0 && mix[last - 1] <= 0.0) --last;
  std::uint64_t remaining = b.length;
  double rest = 1.0;
  for (std::size_t w = 0; w < last && remaining > 0; ++w) {
    std::uint64_t x;
    if (w + 1 == last) {
      x = remaining;
    } else {
      const double q = rest > 0.0 ? std::clamp(mix[w] / rest, 0.0, 1.0) : 1.0;
      x = rng.binomial(remaining, q);
      rest -= mix[w];
    }
    if (x > 0) {
      b.counts.index.push_back(static_cast<std::uint32_t>(w));
      b.counts.value.push_back(static_cast<double>(x));
      remaining -= x;
    }
  }
  return b;
}

SampledThread sample_thread(const Sampler& sampler, std::size_t course, Rng& rng) {
  return sampler.sample_thread(course, rng);
}

Corpus sample_corpus(const Sampler& sampler, std::span<const std::size_t> threads_per_course,
                     std::uint64_t max_tokens, Timestamp spacing) {
  if (spacing < 0) throw ConfigError("thread spacing must be non-negative");
  const GenerativeSpec& spec = sampler.spec();
  if (threads_per_course.size() != spec.course_count())
    throw ConfigError("need one thread count per course (" + std::to_string(spec.course_count()) + ")");
  std::uint64_t budget = 0;
  for (std::size_t i = 0; i < threads_per_course.size(); ++i) {
    const LengthSpec& len = spec.courses[i].length;
    budget += threads_per_course[i] * std::max(len.s, len.s_max);
  }
  if (budget > max_tokens)
    throw ConfigError("corpus would hold up to " + std::to_string(budget) + " tokens, above the limit of " +
                      std::to_string(max_tokens));

  const auto& vocab = sampler.vocab();
  Corpus corpus;
  corpus.courses.resize(spec.course_count());
  const int width = static_cast<int>(std::to_string(std::max<std::size_t>(1, spec.course_count()) - 1).size());
  for (std::size_t i = 0; i < spec.course_count(); ++i) {
    Course& course = corpus.courses[i];
    std::string cid = std::to_string(i);
    course.course_id = "course" + std::string(static_cast<std::size_t>(width) - std::min(cid.size(), std::size_t(width)), '0') + cid;
    Rng rng(derive_seed(spec.seed, i));
    const std::size_t count = threads_per_course[i];
    const std::size_t tw = std::to_string(count > 0 ? count - 1 : 0).size();
    for (std::size_t j = 0; j < count; ++j) {
      SampledThread st = sampler.sample_thread(i, rng);
      std::string text;
      for (std::size_t k = 0; k < st.tokens.size(); ++k) {
        if (k) text.push_back(' ');
        text += vocab[st.tokens[k]];
      }
      std::string jid = std::to_string(j);
      std::string id = "t" + std::string(tw - jid.size(), '0') + jid;
      const Timestamp ts = static_cast<Timestamp>(j) * spacing;
      Thread t;
      t.thread_id = id;
      t.created_at = ts;
      t.label = st.is_smalltalk ? Label::SmallTalk : Label::CourseSpecific;
      t.posts.push_back(Post{id + ".p0", "u" + course.course_id + "." + jid, ts, std::move(text), false});
      course.threads.push_back(std::move(t));
    }
  }
  return corpus;
}

}  // namespace forumlens::gen
