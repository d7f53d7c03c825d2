#include <algorithm>
#include <cmath>

#include "forumlens/error.hpp"
#include "forumlens/genmodel.hpp"

namespace forumlens::gen {

using nlohmann::json;

namespace {

json model_json(const UnigramModel& m) {
  return {{"words", m.vocab}, {"mass", m.mass}, {"total_tokens", m.total_tokens}};
}

UnigramModel model_from(const json& doc, const char* what) {
  if (doc.is_null()) return {};
  if (!doc.is_object() || !doc.contains("words") || !doc.contains("mass"))
    throw ConfigError(std::string(what) + ": expected {\"words\": [...], \"mass\": [...]}");
  auto words = doc.at("words").get<std::vector<std::string>>();
  auto mass = doc.at("mass").get<std::vector<double>>();
  if (words.size() != mass.size()) throw ConfigError(std::string(what) + ": words and mass differ in length");
  if (words.empty()) return {};
  std::vector<std::pair<std::string, double>> pairs;
  for (std::size_t i = 0; i < words.size(); ++i) pairs.emplace_back(std::move(words[i]), mass[i]);
  return unigram_from_weights(std::move(pairs), doc.value("total_tokens", std::uint64_t{0}));
}

}  // namespace

std::vector<std::string> invariant_violations(const GenerativeSpec& spec) {
  std::vector<std::string> out;
  try {
    check_structure(spec);
  } catch (const ConfigError& e) {
    out.emplace_back(e.what());
    return out;
  }
  if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0)) out.emplace_back("epsilon must lie in (0, 1)");
  if (!(1.0 < spec.ratio_lower && spec.ratio_lower < spec.ratio_upper))
    out.emplace_back("ratio bounds must satisfy 1 < l < u");
  const auto& b = spec.background;
  const auto [lo, hi] = std::minmax_element(b.mass.begin(), b.mass.end());
  if (*hi / *lo > spec.background_ratio_bound)
    out.emplace_back("background max/min mass ratio " + std::to_string(*hi / *lo) + " exceeds bound " +
                     std::to_string(spec.background_ratio_bound));
  for (std::size_t i = 0; i < spec.courses.size(); ++i) {
    const auto& topic = spec.courses[i].topic;
    for (std::size_t k = 0; k < topic.size(); ++k) {
      const double pb = b.mass[*b.index_of(topic.vocab[k])];
      const double ratio = ((1.0 - spec.epsilon) * pb + spec.epsilon * topic.mass[k]) / pb;
      if (ratio < spec.ratio_lower || ratio > spec.ratio_upper) {
        out.push_back("course " + std::to_string(i) + ": ratio " + std::to_string(ratio) + " for word '" +
                      topic.vocab[k] + "' is outside [l, u]");
        break;
      }
    }
  }
  return out;
}

void validate(const GenerativeSpec& spec) {
  auto v = invariant_violations(spec);
  if (!v.empty()) throw ConfigError("invalid generative spec: " + v.front());
}

json to_json(const GenerativeSpec& spec) {
  json courses = json::array();
  for (const auto& c : spec.courses) {
    json length = {{"s", c.length.s}};
    if (!c.length.constant()) length["s_max"] = c.length.s_max;
    courses.push_back({{"p", c.p}, {"length", length}, {"topic", model_json(c.topic)}});
  }
  return {{"n", spec.n()},
          {"epsilon", spec.epsilon},
          {"seed", spec.seed},
          {"ratio_bounds", {spec.ratio_lower, spec.ratio_upper}},
          {"background_ratio_bound", spec.background_ratio_bound},
          {"background", model_json(spec.background)},
          {"smalltalk_topic", model_json(spec.smalltalk_topic)},
          {"courses", courses},
          {"notes", spec.notes}};
}

GenerativeSpec spec_from_json(const json& doc) {
  try {
    GenerativeSpec spec;
    spec.epsilon = doc.at("epsilon").get<double>();
    spec.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("ratio_bounds")) {
      const auto rb = doc.at("ratio_bounds").get<std::vector<double>>();
      if (rb.size() != 2) throw ConfigError("ratio_bounds must hold [l, u]");
      spec.ratio_lower = rb[0];
      spec.ratio_upper = rb[1];
    }
    spec.background_ratio_bound = doc.value("background_ratio_bound", 2.0);
    spec.background = model_from(doc.at("background"), "background");
    spec.smalltalk_topic = model_from(doc.value("smalltalk_topic", json()), "smalltalk_topic");
    for (const auto& c : doc.at("courses")) {
      CourseSpec cs;
      cs.p = c.at("p").get<double>();
      const auto& len = c.at("length");
      cs.length.s = len.at("s").get<std::uint64_t>();
      cs.length.s_max = len.value("s_max", std::uint64_t{0});
      cs.topic = model_from(c.value("topic", json()), "course topic");
      spec.courses.push_back(std::move(cs));
    }
    if (doc.contains("n") && doc.at("n").get<std::size_t>() != spec.n())
      throw ConfigError("n does not match the background vocabulary size");
    spec.notes = doc.value("notes", json::object());
    check_structure(spec);
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed generative spec: ") + e.what());
  }
}

}  // namespace forumlens::gen
