#include <algorithm>

#include "forumlens/classify.hpp"
#include "forumlens/error.hpp"

namespace forumlens::classify {

using nlohmann::json;

void EvalReport::add(bool predicted, bool actual) noexcept {
  if (actual) (predicted ? tp : fn) += 1;
  else (predicted ? fp : tn) += 1;
}

double EvalReport::error_rate() const noexcept {
  const std::size_t total = tp + fp + tn + fn;
  return total ? static_cast<double>(fp + fn) / static_cast<double>(total) : 0.0;
}

EvalReport evaluate(const NbClassifier& model, std::span<const Example> test, std::span<const std::string> groups) {
  EvalReport r;
  for (const auto& e : test) {
    const std::string_view course = e.group < groups.size() ? std::string_view(groups[e.group]) : "*";
    r.add(model.predict(e, course).positive, e.positive);
  }
  return r;
}

EvalReport evaluate(const SvmModel& model, std::span<const Example> test, double theta) {
  EvalReport r;
  for (const auto& e : test) r.add(model.decision(e) > theta, e.positive);
  return r;
}

EvalReport evaluate(const SvmModel& model, std::span<const Example> test) {
  return evaluate(model, test, model.theta);
}

std::vector<std::pair<double, EvalReport>> roc_sweep(const SvmModel& model, std::span<const Example> test,
                                                     std::span<const double> thresholds) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw ConfigError("ROC thresholds must be sorted ascending");
  std::vector<double> scores;
  scores.reserve(test.size());
  for (const auto& e : test) scores.push_back(model.decision(e));
  std::vector<std::pair<double, EvalReport>> out;
  for (double theta : thresholds) {
    EvalReport r;
    for (std::size_t i = 0; i < test.size(); ++i) r.add(scores[i] > theta, test[i].positive);
    out.emplace_back(theta, r);
  }
  return out;
}

namespace {

std::string_view mode_name(NbMode m) { return m == NbMode::Aggregate ? "aggregate" : "per_course"; }
std::string_view smoothing_name(Smoothing s) { return s == Smoothing::Laplace ? "laplace" : "unit_init"; }

}  // namespace

json to_json(const NbClassifier& model) {
  json models = json::array();
  for (const auto& m : model.models)
    models.push_back({{"scope", m.scope},
                      {"log_prior", m.log_prior},
                      {"log_cond", m.log_cond},
                      {"log_unseen", m.log_unseen}});
  return {{"type", "naive_bayes"},
          {"mode", mode_name(model.options.mode)},
          {"smoothing", smoothing_name(model.options.smoothing)},
          {"vocab", model.vocab.words()},
          {"models", models}};
}

json to_json(const SvmModel& model) {
  return {{"type", "linear_svm"},
          {"vocab", model.vocab.words()},
          {"weights", model.weights},
          {"bias", model.bias},
          {"theta", model.theta}};
}

LoadedModel model_from_json(const json& doc) {
  try {
    LoadedModel out;
    const std::string type = doc.at("type").get<std::string>();
    Vocabulary vocab(doc.at("vocab").get<std::vector<std::string>>());
    if (type == "naive_bayes") {
      NbClassifier c;
      const auto mode = doc.at("mode").get<std::string>();
      const auto smoothing = doc.at("smoothing").get<std::string>();
      if (mode != "aggregate" && mode != "per_course") throw ConfigError("unknown NB mode '" + mode + "'");
      if (smoothing != "laplace" && smoothing != "unit_init")
        throw ConfigError("unknown NB smoothing '" + smoothing + "'");
      c.options.mode = mode == "aggregate" ? NbMode::Aggregate : NbMode::PerCourse;
      c.options.smoothing = smoothing == "laplace" ? Smoothing::Laplace : Smoothing::UnitInit;
      c.vocab = std::move(vocab);
      for (const auto& m : doc.at("models")) {
        NbModel nb;
        nb.scope = m.at("scope").get<std::string>();
        nb.log_prior = m.at("log_prior").get<std::array<double, 2>>();
        nb.log_cond = m.at("log_cond").get<std::array<std::vector<double>, 2>>();
        nb.log_unseen = m.at("log_unseen").get<std::array<double, 2>>();
        if (nb.log_cond[0].size() != c.vocab.size() || nb.log_cond[1].size() != c.vocab.size())
          throw ConfigError("NB conditionals do not match the vocabulary");
        c.models.push_back(std::move(nb));
      }
      out.nb = std::move(c);
    } else if (type == "linear_svm") {
      SvmModel m;
      m.vocab = std::move(vocab);
      m.weights = doc.at("weights").get<std::vector<double>>();
      m.bias = doc.at("bias").get<double>();
      m.theta = doc.value("theta", 0.0);
      if (m.weights.size() != m.vocab.size()) throw ConfigError("SVM weights do not match the vocabulary");
      out.svm = std::move(m);
    } else {
      throw ConfigError("unknown model type '" + type + "'");
    }
    return out;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed model file: ") + e.what());
  }
}

}  // namespace forumlens::classify
