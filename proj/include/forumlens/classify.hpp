#pragma once

// Small-talk classifiers over bag-of-words count vectors: multinomial naive
// Bayes (one model for all courses, or one per course) and a linear SVM
// trained by Pegasos-style SGD on the hinge loss. Small talk is the positive
// class; logistics and course-specific threads are negative; unlabeled
// threads are skipped.

#include <array>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forumlens/corpus.hpp"
#include "forumlens/sparse.hpp"

namespace forumlens::classify {

class Vocabulary {
 public:
  Vocabulary() = default;
  /// Words are sorted and deduplicated.
  explicit Vocabulary(std::vector<std::string> words);

  std::optional<std::uint32_t> index_of(std::string_view word) const noexcept;
  const std::vector<std::string>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::vector<std::string> words_;
};

struct Example {
  SparseVector x;           // word counts over the vocabulary
  double oov = 0;           // tokens outside the vocabulary
  bool positive = false;    // small talk
  std::size_t group = 0;    // index into Dataset::groups (course)
};

struct Dataset {
  Vocabulary vocab;
  std::vector<std::string> groups;
  std::vector<Example> examples;
};

struct FeatureOptions {
  const StopwordSet* stopwords = nullptr;  // default list when null
  TokenizeOptions tokenize;
};

/// nullopt for Unlabeled.
std::optional<bool> is_positive(Label label) noexcept;

/// Labeled threads of `corpus` as count vectors. With no vocabulary given,
/// the vocabulary is every token of the labeled threads.
Dataset dataset_from_corpus(const Corpus& corpus, const FeatureOptions& options = {},
                            const Vocabulary* vocab = nullptr);

// ---------------------------------------------------------------- naive Bayes

enum class NbMode { Aggregate, PerCourse };
/// UnitInit starts every word count at 1 with denominator N_c + 2, as in the
/// usual textbook implementation; Laplace uses (count + 1) / (N_c + |V|), so
/// conditionals sum to one over the vocabulary.
enum class Smoothing { UnitInit, Laplace };

struct NbOptions {
  NbMode mode = NbMode::PerCourse;
  Smoothing smoothing = Smoothing::UnitInit;
};

/// Index 0 is the negative class, 1 the positive (small-talk) class.
struct NbModel {
  std::string scope;  // course id, or "*" for a model over all courses
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> log_cond;
  std::array<double, 2> log_unseen{};  // per out-of-vocabulary token
};

struct NbPrediction {
  bool positive = false;
  std::array<double, 2> log_joint{};      // log prior + sum of log conditionals
  std::array<double, 2> log_posterior{};  // normalized
};

NbPrediction predict(const NbModel& model, const Example& example);

struct NbClassifier {
  NbOptions options;
  Vocabulary vocab;
  std::vector<NbModel> models;  // one, or one per course (scope = course id)

  /// In PerCourse mode, the model whose scope is `course`; throws
  /// DomainMismatch for an unknown course.
  const NbModel& model_for(std::string_view course) const;
  NbPrediction predict(const Example& example, std::string_view course) const;
};

/// Fits one model on the given examples. Throws MissingClass(scope) when a
/// class is absent.
NbModel fit_nb(std::span<const Example> examples, std::size_t vocab_size, Smoothing smoothing,
               const std::string& scope);
NbClassifier train_nb(const Dataset& data, const NbOptions& options = {});

// ------------------------------------------------------------------------ SVM

struct SvmOptions {
  double lambda = 1e-4;
  std::size_t epochs = 50;
  std::uint64_t seed = 0;
  double bias_rate = 0.01;  // bias step relative to the weight step
};

struct SvmModel {
  Vocabulary vocab;
  std::vector<double> weights;
  double bias = 0;
  double theta = 0;  // decision offset: positive iff w.x + b > theta

  double decision(const Example& example) const noexcept;
  bool predict(const Example& example) const noexcept { return decision(example) > theta; }
};

/// Minimizes lambda/2 |w|^2 + (1/N) sum hinge(y (w.x + b)) with step 1/(lambda t).
/// Identical documents are merged and weighted by multiplicity, so
/// duplicating every training example leaves the result unchanged. Each epoch
/// visits the distinct documents in a seeded shuffled order; the result is
/// the mean of the end-of-epoch iterates over the second half of the epochs.
SvmModel train_svm(std::span<const Example> examples, std::size_t vocab_size, const SvmOptions& options = {});
SvmModel train_svm(const Dataset& data, const SvmOptions& options = {});

/// The regularized hinge objective above for arbitrary (w, b).
double svm_objective(std::span<const Example> examples, std::span<const double> weights, double bias,
                     double lambda);

// ----------------------------------------------------------------- evaluation

struct EvalReport {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  /// 0 when there are no positives / negatives respectively.
  double tpr() const noexcept { return tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0; }
  double fpr() const noexcept { return fp + tn ? static_cast<double>(fp) / static_cast<double>(fp + tn) : 0.0; }
  double error_rate() const noexcept;
  void add(bool predicted, bool actual) noexcept;
};

/// `groups` names the course of each Example::group.
EvalReport evaluate(const NbClassifier& model, std::span<const Example> test,
                    std::span<const std::string> groups);
EvalReport evaluate(const SvmModel& model, std::span<const Example> test, double theta);
EvalReport evaluate(const SvmModel& model, std::span<const Example> test);

/// One report per threshold; thresholds must be sorted ascending.
std::vector<std::pair<double, EvalReport>> roc_sweep(const SvmModel& model, std::span<const Example> test,
                                                     std::span<const double> thresholds);

/// Re-expresses examples over another vocabulary; words missing from
/// `target` move into the out-of-vocabulary count.
std::vector<Example> remap(std::span<const Example> examples, const Vocabulary& from, const Vocabulary& target);

// ------------------------------------------------------------------ model I/O

nlohmann::json to_json(const NbClassifier& model);
nlohmann::json to_json(const SvmModel& model);

struct LoadedModel {
  std::optional<NbClassifier> nb;
  std::optional<SvmModel> svm;
};
LoadedModel model_from_json(const nlohmann::json& doc);

}  // namespace forumlens::classify
