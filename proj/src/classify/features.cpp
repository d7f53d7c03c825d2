#include <algorithm>
#include <map>

#include "forumlens/classify.hpp"
#include "forumlens/error.hpp"

namespace forumlens::classify {

Vocabulary::Vocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view word) const noexcept {
  auto it = std::lower_bound(words_.begin(), words_.end(), word);
  if (it == words_.end() || *it != word) return std::nullopt;
  return static_cast<std::uint32_t>(it - words_.begin());
}

std::optional<bool> is_positive(Label label) noexcept {
  switch (label) {
    case Label::SmallTalk: return true;
    case Label::Logistics:
    case Label::CourseSpecific: return false;
    case Label::Unlabeled: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

Example encode(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  Example e;
  std::vector<std::uint32_t> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (auto i = vocab.index_of(t)) ids.push_back(*i);
    else e.oov += 1;
  }
  e.x = bag_of_ids(ids);
  return e;
}

}  // namespace

Dataset dataset_from_corpus(const Corpus& corpus, const FeatureOptions& options, const Vocabulary* vocab) {
  const StopwordSet& stop = options.stopwords ? *options.stopwords : default_stopwords();
  struct Item {
    std::vector<std::string> tokens;
    bool positive;
    std::size_t group;
  };
  Dataset data;
  std::vector<Item> items;
  for (const auto& course : corpus.courses) {
    const std::size_t g = data.groups.size();
    data.groups.push_back(course.course_id);
    for (const auto& t : course.threads) {
      auto pos = is_positive(t.label);
      if (!pos) continue;
      items.push_back({thread_tokens(t, stop, options.tokenize), *pos, g});
    }
  }
  if (vocab) {
    data.vocab = *vocab;
  } else {
    std::vector<std::string> words;
    for (const auto& it : items) words.insert(words.end(), it.tokens.begin(), it.tokens.end());
    data.vocab = Vocabulary(std::move(words));
  }
  data.examples.reserve(items.size());
  for (const auto& it : items) {
    Example e = encode(it.tokens, data.vocab);
    e.positive = it.positive;
    e.group = it.group;
    data.examples.push_back(std::move(e));
  }
  return data;
}

std::vector<Example> remap(std::span<const Example> examples, const Vocabulary& from, const Vocabulary& target) {
  std::vector<std::optional<std::uint32_t>> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) map[i] = target.index_of(from.words()[i]);
  std::vector<Example> out;
  out.reserve(examples.size());
  for (const auto& e : examples) {
    Example r;
    r.positive = e.positive;
    r.group = e.group;
    r.oov = e.oov;
    std::vector<std::pair<std::uint32_t, double>> entries;
    for (std::size_t k = 0; k < e.x.nnz(); ++k) {
      if (auto j = map[e.x.index[k]]) entries.emplace_back(*j, e.x.value[k]);
      else r.oov += e.x.value[k];
    }
    std::sort(entries.begin(), entries.end());
    for (auto& [j, v] : entries) {
      r.x.index.push_back(j);
      r.x.value.push_back(v);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace forumlens::classify
