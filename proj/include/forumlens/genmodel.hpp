#pragma once

// Mixture-of-unigrams thread generator. A small-talk thread of course i draws
// its words i.i.d. from D0 = (1-eps) B + eps T0; any other thread of course i
// draws from D1(i) = (1-eps) B + eps Ti. B is a near-uniform background over
// the whole vocabulary and T0, T1, ... have pairwise disjoint supports.

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forumlens/corpus.hpp"
#include "forumlens/rng.hpp"
#include "forumlens/sparse.hpp"

namespace forumlens::gen {

/// Walker/Vose alias table: O(1) draws from a fixed discrete distribution.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> weights);

  std::uint32_t sample(Rng& rng) const noexcept;
  std::size_t size() const noexcept { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

/// Thread length: constant `s`, or uniform on [s, s_max] when s_max > s.
struct LengthSpec {
  std::uint64_t s = 100;
  std::uint64_t s_max = 0;

  bool constant() const noexcept { return s_max <= s; }
  bool operator==(const LengthSpec&) const = default;
};

struct CourseSpec {
  double p = 0.5;  // probability that a thread is small talk
  LengthSpec length;
  UnigramModel topic;  // Ti
};

struct GenerativeSpec {
  double epsilon = 0.3;
  UnigramModel background;       // B, over the whole vocabulary; vocab size is n
  UnigramModel smalltalk_topic;  // T0
  std::vector<CourseSpec> courses;
  std::uint64_t seed = 0;
  /// Stored bounds l < u on Pr_D1(i)(w) / Pr_B(w) for w in Supp(Ti).
  double ratio_lower = 1.0;
  double ratio_upper = 1.0;
  /// Stored bound on max/min background mass.
  double background_ratio_bound = 2.0;
  /// Construction parameters kept for reference (e.g. c, d, b1, b2).
  nlohmann::json notes = nlohmann::json::object();

  std::size_t n() const noexcept { return background.size(); }
  std::size_t course_count() const noexcept { return courses.size(); }
};

/// Structural checks needed for sampling: probabilities in range, topic
/// supports inside the background vocabulary and pairwise disjoint.
/// Throws ConfigError.
void check_structure(const GenerativeSpec& spec);
/// Full model invariants: structure, 0 < eps < 1, 1 < l < u with every
/// topical ratio inside [l, u], and the background max/min bound.
/// Returns human-readable violations (empty when the spec is valid).
std::vector<std::string> invariant_violations(const GenerativeSpec& spec);
void validate(const GenerativeSpec& spec);

nlohmann::json to_json(const GenerativeSpec& spec);
GenerativeSpec spec_from_json(const nlohmann::json& doc);

struct SampledThread {
  std::size_t course_index = 0;
  bool is_smalltalk = false;
  std::vector<std::uint32_t> tokens;  // vocabulary indices
};

/// A thread kept only as word counts; used when threads are too long to
/// materialize token by token.
struct SampledBag {
  std::size_t course_index = 0;
  bool is_smalltalk = false;
  std::uint64_t length = 0;
  SparseVector counts;
};

/// Compiled form of a spec: dense mixture distributions and alias tables.
class Sampler {
 public:
  explicit Sampler(GenerativeSpec spec);

  const GenerativeSpec& spec() const noexcept { return spec_; }
  std::size_t vocab_size() const noexcept { return spec_.n(); }
  const std::vector<std::string>& vocab() const noexcept { return spec_.background.vocab; }

  /// Dense word distribution D0 (smalltalk) or D1(course).
  const std::vector<double>& mixture(std::size_t course, bool smalltalk) const;
  /// Vocabulary indices of Supp(T0) / Supp(Ti).
  const std::vector<std::uint32_t>& smalltalk_support() const noexcept { return support0_; }
  const std::vector<std::uint32_t>& course_support(std::size_t course) const;

  /// Draws the class with probability p_i, then the length, then the tokens.
  SampledThread sample_thread(std::size_t course, Rng& rng) const;
  SampledThread sample_thread(std::size_t course, bool smalltalk, Rng& rng) const;

  /// Same law as sample_thread, returned as counts. Lengths of at least
  /// `count_path_min` words are drawn as a multinomial via conditional
  /// binomials rather than token by token.
  SampledBag sample_bag(std::size_t course, Rng& rng) const;
  SampledBag sample_bag(std::size_t course, bool smalltalk, Rng& rng) const;

  static constexpr std::uint64_t count_path_min = 1u << 16;

 private:
  std::uint64_t draw_length(std::size_t course, Rng& rng) const;
  const AliasTable& table(std::size_t course, bool smalltalk) const;

  GenerativeSpec spec_;
  std::vector<std::uint32_t> support0_;
  std::vector<std::vector<std::uint32_t>> supports_;
  std::vector<double> mix0_;
  std::vector<std::vector<double>> mix_;
  AliasTable alias0_;
  std::vector<AliasTable> alias_;
};

SampledThread sample_thread(const Sampler& sampler, std::size_t course, Rng& rng);

/// Labeled synthetic corpus: course i uses Rng(derive_seed(seed, i)) and gets
/// threads_per_course[i] threads, each a single post whose text is the words
/// joined by spaces. Thread j is created at j * spacing seconds; every
/// thread has its own author. Throws ConfigError when the total token count
/// exceeds `max_tokens`.
Corpus sample_corpus(const Sampler& sampler, std::span<const std::size_t> threads_per_course,
                     std::uint64_t max_tokens = 50'000'000, Timestamp spacing = 60);

// -------------------------------------------------------------- constructions

/// Word names "w00000", "w00001", ... zero-padded to the width of n-1.
std::vector<std::string> word_names(std::size_t n);

/// Near-uniform background: weights 1 + (h(w) mod 1000)/1000 for a fixed
/// integer hash h, so the max/min mass ratio is below 2.
UnigramModel near_uniform_background(std::span<const std::string> vocab);

enum class TopicShape { Uniform, Geometric };

struct TopicOptions {
  TopicShape shape = TopicShape::Uniform;
  double ratio = 0.9;  // successive mass ratio for Geometric
};

/// Topic distribution over the given words.
UnigramModel topic_distribution(std::span<const std::string> words, const TopicOptions& options = {});

struct AdversarialOptions {
  double c = 4.0;
  double d = 2.0;
  double epsilon = 0.3;
  std::size_t support = 50;
  std::size_t b2 = 30;  // training threads drawn for the long course
  std::uint64_t seed = 0;
};

/// Two-course construction: course 1 has s1 = sqrt(n), p1 = c ln n / sqrt(n)
/// and b1 = ceil(1/p1) training threads; course 2 has s2 = n^d and
/// p2 = 1 - n^-d. T0 covers the first `support` words, Ti the next blocks.
GenerativeSpec adversarial_spec(std::size_t n, const AdversarialOptions& options = {});

/// Training-sample counts (b1, b2) stored by adversarial_spec.
std::vector<std::size_t> adversarial_counts(const GenerativeSpec& spec);

struct TopicalOptions {
  std::size_t n = 10000;
  std::size_t courses = 1;
  double epsilon = 0.3;
  double p = 0.5;
  std::uint64_t s = 200;
  std::size_t support = 50;
  TopicOptions topic;
  std::uint64_t seed = 0;
};

/// Many courses sharing one background, with disjoint topic blocks.
GenerativeSpec topical_spec(const TopicalOptions& options);

/// c0 = Pr_B(Supp T0) (1 - eps) / eps.
double c0(const GenerativeSpec& spec);

struct SeparatingPlane {
  std::vector<double> a;  // indicator of Supp(T0)
  double slope = 0;       // (1/2 + c0) eps; threshold for a thread of length s is s * slope

  double threshold(std::uint64_t length) const noexcept { return static_cast<double>(length) * slope; }
  double score(const SparseVector& bag) const noexcept;
  double score(std::span<const std::uint32_t> tokens) const noexcept;
  /// Small talk iff a . W > tau(length).
  bool is_smalltalk(const SparseVector& bag, std::uint64_t length) const noexcept;
};

SeparatingPlane separating_plane(const GenerativeSpec& spec);

}  // namespace forumlens::gen
