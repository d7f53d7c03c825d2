#pragma once

// Courses, threads and posts; JSON-lines / CSV ingestion and serialization;
// tokenization; empirical unigram distributions.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace forumlens {

using Timestamp = std::int64_t;  // UTC seconds
inline constexpr Timestamp kSecondsPerDay = 86400;

enum class Label { SmallTalk, Logistics, CourseSpecific, Unlabeled };
enum class Category { Vocational, AppliedScience, HumanitiesSocial };

std::string_view to_string(Label label) noexcept;
std::string_view to_string(Category category) noexcept;
std::optional<Label> parse_label(std::string_view text) noexcept;
std::optional<Category> parse_category(std::string_view text) noexcept;

/// V=1 is vocational; otherwise Q=1 is (applied) science; everything else
/// is humanities / social science.
Category category_for(bool quantitative, bool vocational) noexcept;

struct Post {
  std::string post_id;
  std::string author_id;
  Timestamp timestamp = 0;
  std::string text;
  bool is_staff = false;

  bool operator==(const Post&) const = default;
};

struct Thread {
  std::string thread_id;
  Timestamp created_at = 0;
  std::vector<Post> posts;
  Label label = Label::Unlabeled;

  /// Thread length in posts (comments are flattened into posts).
  std::size_t length() const noexcept { return posts.size(); }
  bool operator==(const Thread&) const = default;
};

/// Per-course regressors. M and M' are filled in from the activity series.
struct CourseFactors {
  double Q = 0, V = 0, L = 0, D = 0, P = 0, S = 0, H = 0;
  double M = 0, M_prime = 0;

  bool operator==(const CourseFactors&) const = default;
};

struct Course {
  std::string course_id;
  Timestamp start_date = 0;
  std::vector<Thread> threads;
  std::optional<CourseFactors> factors;
  Category category = Category::HumanitiesSocial;

  /// 1-based day index of a timestamp relative to start_date.
  std::int64_t day_index(Timestamp ts) const noexcept;
  bool operator==(const Course&) const = default;
};

struct Corpus {
  std::vector<Course> courses;

  std::size_t thread_count() const noexcept;
  const Course* find(std::string_view course_id) const noexcept;
  Course* find(std::string_view course_id) noexcept;
  bool operator==(const Corpus&) const = default;
};

// ---------------------------------------------------------------- validation

/// Sorts nothing; throws InvariantViolation on the first broken rule
/// (empty posts, unsorted posts, created_at mismatch, duplicate ids,
/// negative timestamps).
void validate(const Thread& thread);
void validate(const Course& course);
void validate(const Corpus& corpus);

// ------------------------------------------------------------------ ingestion

enum class CorpusFormat { JsonLines, Csv };

/// Threads as JSON lines:
///   {"course_id","thread_id","created_at","label","posts":[{"post_id",
///    "author_id","timestamp","text","is_staff"}]}
/// or CSV, one post per row, with header
///   course_id,thread_id,label,post_id,author_id,timestamp,is_staff,text
/// Courses appear in first-seen order. start_date defaults to the earliest
/// thread creation time of the course.
Corpus read_corpus(std::istream& in, CorpusFormat format);
Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format);
/// Picks the format from the extension (.csv, otherwise JSON lines).
Corpus ingest_corpus(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const Corpus& corpus, CorpusFormat format);

/// Course metadata CSV: course_id,start_date,Q,V,L,D,P,S,H,category.
/// Rows for unknown courses are ignored; a category that contradicts Q/V is
/// an InvariantViolation.
void apply_course_metadata(Corpus& corpus, std::istream& csv);
void apply_course_metadata(Corpus& corpus, const std::filesystem::path& path);
void write_course_metadata(std::ostream& out, const Corpus& corpus);

// ---------------------------------------------------------------- tokenizing

using StopwordSet = std::unordered_set<std::string>;

/// ASCII letters are case-folded; any run of ASCII letters/digits and
/// non-ASCII bytes forms a token; tokens shorter than two code points or
/// present in `stopwords` are dropped.
std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stopwords = {});

/// The stopword list shipped with the tool.
const StopwordSet& default_stopwords();
/// One word per line; blank lines and lines starting with '#' are skipped.
StopwordSet load_stopwords(const std::filesystem::path& path);

struct TokenizeOptions {
  bool include_staff = true;
};

/// Tokens of all posts of a thread, concatenated in post order.
std::vector<std::string> thread_tokens(const Thread& thread, const StopwordSet& stopwords,
                                       const TokenizeOptions& options = {});

// -------------------------------------------------------------- unigram model

struct UnigramModel {
  std::vector<std::string> vocab;  // sorted
  std::vector<double> mass;        // parallel to vocab
  std::uint64_t total_tokens = 0;

  /// 0 for words outside the vocabulary.
  double probability(std::string_view word) const noexcept;
  std::optional<std::size_t> index_of(std::string_view word) const noexcept;
  std::size_t size() const noexcept { return vocab.size(); }
};

/// Empirical distribution: mass(w) = count(w) / total tokens.
UnigramModel unigram_model(std::span<const std::vector<std::string>> docs);

/// Builds a model from explicit (word, weight) pairs, normalizing weights
/// unless they already sum to 1 within 1e-12 (so serialized models reload
/// bit for bit). Zero-weight words are dropped. total_tokens is set to `total_tokens`.
UnigramModel unigram_from_weights(std::vector<std::pair<std::string, double>> weights,
                                  std::uint64_t total_tokens = 0);

}  // namespace forumlens
