#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include "forumlens/corpus.hpp"
#include "forumlens/error.hpp"

namespace forumlens {

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::SmallTalk: return "smalltalk";
    case Label::Logistics: return "logistics";
    case Label::CourseSpecific: return "course";
    case Label::Unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

std::string_view to_string(Category category) noexcept {
  switch (category) {
    case Category::Vocational: return "vocational";
    case Category::AppliedScience: return "science";
    case Category::HumanitiesSocial: return "humanities";
  }
  return "humanities";
}

std::optional<Label> parse_label(std::string_view text) noexcept {
  if (text == "smalltalk" || text == "SmallTalk" || text == "small-talk") return Label::SmallTalk;
  if (text == "logistics" || text == "Logistics") return Label::Logistics;
  if (text == "course" || text == "CourseSpecific" || text == "course-specific")
    return Label::CourseSpecific;
  if (text.empty() || text == "unlabeled" || text == "Unlabeled") return Label::Unlabeled;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view text) noexcept {
  if (text == "vocational" || text == "Vocational") return Category::Vocational;
  if (text == "science" || text == "AppliedScience" || text == "applied-science")
    return Category::AppliedScience;
  if (text == "humanities" || text == "HumanitiesSocial" || text == "humanities-social")
    return Category::HumanitiesSocial;
  return std::nullopt;
}

Category category_for(bool quantitative, bool vocational) noexcept {
  if (vocational) return Category::Vocational;
  if (quantitative) return Category::AppliedScience;
  return Category::HumanitiesSocial;
}

std::int64_t Course::day_index(Timestamp ts) const noexcept {
  const Timestamp delta = ts - start_date;
  Timestamp q = delta / kSecondsPerDay;
  if (delta % kSecondsPerDay != 0 && delta < 0) --q;
  return q + 1;
}

std::size_t Corpus::thread_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : courses) n += c.threads.size();
  return n;
}

const Course* Corpus::find(std::string_view course_id) const noexcept {
  for (const auto& c : courses)
    if (c.course_id == course_id) return &c;
  return nullptr;
}

Course* Corpus::find(std::string_view course_id) noexcept {
  for (auto& c : courses)
    if (c.course_id == course_id) return &c;
  return nullptr;
}

void validate(const Thread& thread) {
  if (thread.thread_id.empty()) throw InvariantViolation(thread.thread_id, "empty thread id");
  if (thread.posts.empty()) throw InvariantViolation(thread.thread_id, "thread has no posts");
  std::unordered_map<std::string_view, int> seen;
  for (std::size_t i = 0; i < thread.posts.size(); ++i) {
    const Post& p = thread.posts[i];
    if (p.timestamp < 0)
      throw InvariantViolation(thread.thread_id, "negative timestamp on post '" + p.post_id + "'");
    if (i > 0 && p.timestamp < thread.posts[i - 1].timestamp)
      throw InvariantViolation(thread.thread_id, "posts are not in chronological order");
    if (!seen.emplace(p.post_id, 0).second)
      throw InvariantViolation(thread.thread_id, "duplicate post id '" + p.post_id + "'");
  }
  if (thread.created_at != thread.posts.front().timestamp)
    throw InvariantViolation(thread.thread_id, "created_at differs from the first post's timestamp");
}

void validate(const Course& course) {
  std::unordered_map<std::string_view, int> seen;
  for (const auto& t : course.threads) {
    validate(t);
    if (!seen.emplace(t.thread_id, 0).second)
      throw InvariantViolation(t.thread_id, "duplicate thread id in course '" + course.course_id + "'");
  }
  if (course.factors) {
    const auto& f = *course.factors;
    if (f.L < 0 || f.D < 0 || f.S < 0 || f.H < 0)
      throw InvariantViolation("", "negative factor for course '" + course.course_id + "'");
    if (course.category != category_for(f.Q != 0, f.V != 0))
      throw InvariantViolation("", "category of course '" + course.course_id +
                                       "' contradicts its Q/V indicators");
  }
}

void validate(const Corpus& corpus) {
  std::unordered_map<std::string_view, int> seen;
  for (const auto& c : corpus.courses) {
    if (!seen.emplace(c.course_id, 0).second)
      throw InvariantViolation("", "duplicate course id '" + c.course_id + "'");
    validate(c);
  }
}

std::vector<std::string> thread_tokens(const Thread& thread, const StopwordSet& stopwords,
                                       const TokenizeOptions& options) {
  std::vector<std::string> out;
  for (const auto& p : thread.posts) {
    if (p.is_staff && !options.include_staff) continue;
    auto toks = tokenize(p.text, stopwords);
    out.insert(out.end(), std::make_move_iterator(toks.begin()), std::make_move_iterator(toks.end()));
  }
  return out;
}

// ------------------------------------------------------------------ tokenizer

namespace {

inline bool is_word_byte(unsigned char c) noexcept {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

std::size_t code_points(std::string_view s) noexcept {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stopwords) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (code_points(cur) >= 2 && !stopwords.contains(cur)) out.push_back(cur);
    cur.clear();
  };
  for (unsigned char c : text) {
    if (is_word_byte(c)) {
      cur.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
    } else if (!cur.empty()) {
      flush();
    }
  }
  if (!cur.empty()) flush();
  return out;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stopword file '" + path.string() + "'");
  StopwordSet out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::transform(line.begin(), line.end(), line.begin(),
                   [](unsigned char c) { return static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c); });
    out.insert(line);
  }
  return out;
}

// -------------------------------------------------------------- unigram model

std::optional<std::size_t> UnigramModel::index_of(std::string_view word) const noexcept {
  auto it = std::lower_bound(vocab.begin(), vocab.end(), word);
  if (it == vocab.end() || *it != word) return std::nullopt;
  return static_cast<std::size_t>(it - vocab.begin());
}

double UnigramModel::probability(std::string_view word) const noexcept {
  auto i = index_of(word);
  return i ? mass[*i] : 0.0;
}

UnigramModel unigram_model(std::span<const std::vector<std::string>> docs) {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const auto& d : docs) {
    for (const auto& w : d) ++counts[w];
    total += d.size();
  }
  if (total == 0) throw EmptyCorpus();
  UnigramModel m;
  m.total_tokens = total;
  m.vocab.reserve(counts.size());
  m.mass.reserve(counts.size());
  for (auto& [w, c] : counts) {
    m.vocab.push_back(w);
    m.mass.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return m;
}

UnigramModel unigram_from_weights(std::vector<std::pair<std::string, double>> weights,
                                  std::uint64_t total_tokens) {
  std::sort(weights.begin(), weights.end());
  UnigramModel m;
  m.total_tokens = total_tokens;
  double sum = 0;
  for (auto& [w, x] : weights) {
    if (x < 0) throw ConfigError("negative weight for word '" + w + "'");
    if (x == 0) continue;
    if (!m.vocab.empty() && m.vocab.back() == w) throw ConfigError("duplicate word '" + w + "'");
    m.vocab.push_back(w);
    m.mass.push_back(x);
    sum += x;
  }
  if (m.vocab.empty()) throw EmptyCorpus("distribution has no positive weight");
  if (std::abs(sum - 1.0) > 1e-12)
    for (auto& x : m.mass) x /= sum;
  return m;
}

}  // namespace forumlens
