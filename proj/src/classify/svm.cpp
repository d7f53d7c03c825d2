#include <algorithm>
#include <cmath>
#include <numeric>

#include "forumlens/classify.hpp"
#include "forumlens/error.hpp"
#include "forumlens/kernels.hpp"
#include "forumlens/rng.hpp"

namespace forumlens::classify {

namespace {

bool less_example(const Example& a, const Example& b) {
  if (a.positive != b.positive) return a.positive < b.positive;
  if (a.x.index != b.x.index) return a.x.index < b.x.index;
  return a.x.value < b.x.value;
}

bool same_example(const Example& a, const Example& b) {
  return a.positive == b.positive && a.x == b.x;
}

struct Unique {
  const Example* example;
  double weight;  // multiplicity * (#unique / N)
};

std::vector<Unique> merge_duplicates(std::span<const Example> examples) {
  std::vector<const Example*> order;
  order.reserve(examples.size());
  for (const auto& e : examples) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return less_example(*a, *b); });
  std::vector<Unique> out;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && same_example(*order[i], *order[j])) ++j;
    out.push_back({order[i], static_cast<double>(j - i)});
    i = j;
  }
  const double scale = static_cast<double>(out.size()) / static_cast<double>(examples.size());
  for (auto& u : out) u.weight *= scale;
  return out;
}

}  // namespace

double SvmModel::decision(const Example& example) const noexcept { return dot(weights, example.x) + bias; }

SvmModel train_svm(std::span<const Example> examples, std::size_t vocab_size, const SvmOptions& options) {
  if (!(options.lambda > 0)) throw ConfigError("SVM lambda must be positive");
  bool pos = false, neg = false;
  for (const auto& e : examples) (e.positive ? pos : neg) = true;
  if (!pos || !neg) throw MissingClass("*");

  const std::vector<Unique> docs = merge_duplicates(examples);
  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(options.seed);

  // w = scale * v keeps the per-step shrink O(1).
  std::vector<double> v(vocab_size, 0.0);
  double scale = 1.0, bias = 0.0;
  std::uint64_t t = 0;
  // Snapshots taken at the end of each epoch in the second half are averaged.
  std::vector<double> avg(vocab_size, 0.0);
  double avg_bias = 0.0;
  const std::size_t first_avg = options.epochs / 2;
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t k : order) {
      const Unique& d = docs[k];
      const double y = d.example->positive ? 1.0 : -1.0;
      ++t;
      const double eta = 1.0 / (options.lambda * static_cast<double>(t));
      const double margin = y * (scale * dot(v, d.example->x) + bias);
      scale *= 1.0 - eta * options.lambda;
      if (scale == 0.0) {
        std::fill(v.begin(), v.end(), 0.0);
        scale = 1.0;
      } else if (scale < 1e-9) {
        simd::scale(v, scale);
        scale = 1.0;
      }
      if (margin < 1.0) {
        add_scaled(v, eta * d.weight * y / scale, d.example->x);
        bias += options.bias_rate * eta * d.weight * y;
      }
    }
    if (epoch >= first_avg) {
      simd::axpy(avg, scale, v);
      avg_bias += bias;
    }
  }
  const double snapshots = static_cast<double>(options.epochs - first_avg);

  SvmModel m;
  if (snapshots > 0) {
    simd::scale(avg, 1.0 / snapshots);
    m.weights = std::move(avg);
    m.bias = avg_bias / snapshots;
  } else {
    m.weights.assign(vocab_size, 0.0);
  }
  return m;
}

SvmModel train_svm(const Dataset& data, const SvmOptions& options) {
  SvmModel m = train_svm(data.examples, data.vocab.size(), options);
  m.vocab = data.vocab;
  return m;
}

double svm_objective(std::span<const Example> examples, std::span<const double> weights, double bias,
                     double lambda) {
  double loss = 0;
  for (const auto& e : examples) {
    const double y = e.positive ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - y * (dot(weights, e.x) + bias));
  }
  if (!examples.empty()) loss /= static_cast<double>(examples.size());
  return 0.5 * lambda * simd::sum_squares(weights) + loss;
}

}  // namespace forumlens::classify
