#include <cmath>

#include "forumlens/classify.hpp"
#include "forumlens/error.hpp"

namespace forumlens::classify {

NbModel fit_nb(std::span<const Example> examples, std::size_t vocab_size, Smoothing smoothing,
               const std::string& scope) {
  std::array<std::vector<double>, 2> counts{std::vector<double>(vocab_size, 0.0),
                                            std::vector<double>(vocab_size, 0.0)};
  std::array<double, 2> docs{0, 0}, tokens{0, 0};
  for (const auto& e : examples) {
    const int c = e.positive ? 1 : 0;
    docs[c] += 1;
    tokens[c] += e.x.sum();
    add_scaled(counts[c], 1.0, e.x);
  }
  if (docs[0] == 0 || docs[1] == 0) throw MissingClass(scope);

  NbModel m;
  m.scope = scope;
  const double total = docs[0] + docs[1];
  for (int c = 0; c < 2; ++c) {
    m.log_prior[c] = std::log(docs[c] / total);
    const double denom = tokens[c] + (smoothing == Smoothing::Laplace ? static_cast<double>(vocab_size) : 2.0);
    const double log_denom = std::log(denom);
    m.log_cond[c].resize(vocab_size);
    for (std::size_t w = 0; w < vocab_size; ++w) m.log_cond[c][w] = std::log(counts[c][w] + 1.0) - log_denom;
    m.log_unseen[c] = -log_denom;
  }
  return m;
}

NbPrediction predict(const NbModel& model, const Example& example) {
  NbPrediction p;
  for (int c = 0; c < 2; ++c)
    p.log_joint[c] = model.log_prior[c] + dot(model.log_cond[c], example.x) + example.oov * model.log_unseen[c];
  const double hi = std::max(p.log_joint[0], p.log_joint[1]);
  const double lse = hi + std::log(std::exp(p.log_joint[0] - hi) + std::exp(p.log_joint[1] - hi));
  for (int c = 0; c < 2; ++c) p.log_posterior[c] = p.log_joint[c] - lse;
  p.positive = p.log_joint[1] > p.log_joint[0];
  return p;
}

const NbModel& NbClassifier::model_for(std::string_view course) const {
  if (options.mode == NbMode::Aggregate) return models.at(0);
  for (const auto& m : models)
    if (m.scope == course) return m;
  throw DomainMismatch("no per-course model for '" + std::string(course) + "'");
}

NbPrediction NbClassifier::predict(const Example& example, std::string_view course) const {
  return classify::predict(model_for(course), example);
}

NbClassifier train_nb(const Dataset& data, const NbOptions& options) {
  NbClassifier out;
  out.options = options;
  out.vocab = data.vocab;
  if (options.mode == NbMode::Aggregate) {
    out.models.push_back(fit_nb(data.examples, data.vocab.size(), options.smoothing, "*"));
    return out;
  }
  std::vector<std::vector<Example>> per(data.groups.size());
  for (const auto& e : data.examples) per.at(e.group).push_back(e);
  for (std::size_t g = 0; g < per.size(); ++g) {
    if (per[g].empty()) continue;  // courses without labeled threads get no model
    out.models.push_back(fit_nb(per[g], data.vocab.size(), options.smoothing, data.groups[g]));
  }
  if (out.models.empty()) throw MissingClass("*");
  return out;
}

}  // namespace forumlens::classify
