#include <cmath>
#include <map>
#include <memory>
#include <sstream>

#include "forumlens/classify.hpp"
#include "forumlens/csv.hpp"
#include "forumlens/error.hpp"
#include "run.hpp"

namespace forumlens::cli {

namespace {

using namespace forumlens::classify;

struct ClassifyParams {
  Common common;
  std::string input;
  std::string model = "nb";
  std::string mode = "per-course";
  std::string smoothing = "unit";
  double lambda = 1e-4;
  std::size_t epochs = 50;
  double theta = 0;
  std::string model_file;
  double theta_min = -2;
  double theta_max = 2;
  std::size_t steps = 41;
};

NbOptions nb_options(const ClassifyParams& p) {
  NbOptions o;
  if (p.mode == "per-course") o.mode = NbMode::PerCourse;
  else if (p.mode == "aggregate") o.mode = NbMode::Aggregate;
  else throw ConfigError("--mode must be per-course or aggregate");
  if (p.smoothing == "unit") o.smoothing = Smoothing::UnitInit;
  else if (p.smoothing == "laplace") o.smoothing = Smoothing::Laplace;
  else throw ConfigError("--smoothing must be unit or laplace");
  return o;
}

void report_row(csv::Writer& w, const std::string& scope, const EvalReport& r) {
  w.row({scope, csv::format_number(r.tp), csv::format_number(r.fp), csv::format_number(r.tn),
         csv::format_number(r.fn), csv::format_number(r.tpr()), csv::format_number(r.fpr()),
         csv::format_number(r.error_rate())});
}

const std::initializer_list<std::string_view> kReportHeader{"scope", "tp", "fp", "tn", "fn", "tpr", "fpr", "error_rate"};

void run_train(ClassifyParams& p, Binder& binder) {
  Run run("classify train", binder, p.common);
  const Corpus corpus = run.load_corpus(p.input);
  const Dataset data = dataset_from_corpus(corpus);
  if (data.examples.empty()) throw EmptyCorpus("no labeled threads to train on");
  nlohmann::json doc;
  if (p.model == "nb") {
    doc = to_json(train_nb(data, nb_options(p)));
  } else if (p.model == "svm") {
    SvmOptions o;
    o.lambda = p.lambda;
    o.epochs = p.epochs;
    o.seed = run.seed();
    SvmModel m = train_svm(data, o);
    m.theta = p.theta;
    doc = to_json(m);
  } else {
    throw ConfigError("--model must be nb or svm");
  }
  run.write("model.json", doc.dump(1) + "\n");
  run.finish();
}

void run_eval(ClassifyParams& p, Binder& binder) {
  Run run("classify eval", binder, p.common);
  if (p.model_file.empty()) throw ConfigError("--model-file is required");
  const LoadedModel loaded = model_from_json(run.load_json(p.model_file));
  const Corpus corpus = run.load_corpus(p.input);
  std::ostringstream out;
  csv::Writer w(out);
  w.row(kReportHeader);
  if (loaded.nb) {
    const Dataset data = dataset_from_corpus(corpus, {}, &loaded.nb->vocab);
    std::map<std::string, EvalReport> by_course;
    EvalReport total;
    for (const auto& e : data.examples) {
      const std::string& course = data.groups[e.group];
      const bool predicted = loaded.nb->predict(e, course).positive;
      by_course[course].add(predicted, e.positive);
      total.add(predicted, e.positive);
    }
    for (const auto& [course, r] : by_course) report_row(w, course, r);
    report_row(w, "*", total);
  } else {
    const SvmModel& m = *loaded.svm;
    const Dataset data = dataset_from_corpus(corpus, {}, &m.vocab);
    const double theta = binder.given("theta") ? p.theta : m.theta;
    std::map<std::string, EvalReport> by_course;
    EvalReport total;
    for (const auto& e : data.examples) {
      const bool predicted = m.decision(e) > theta;
      by_course[data.groups[e.group]].add(predicted, e.positive);
      total.add(predicted, e.positive);
    }
    for (const auto& [course, r] : by_course) report_row(w, course, r);
    report_row(w, "*", total);
  }
  run.write("eval.csv", out.str());
  run.finish();
}

void run_roc(ClassifyParams& p, Binder& binder) {
  Run run("classify roc", binder, p.common);
  if (p.model_file.empty()) throw ConfigError("--model-file is required");
  const LoadedModel loaded = model_from_json(run.load_json(p.model_file));
  if (!loaded.svm) throw ConfigError("roc needs a linear SVM model");
  if (p.steps < 2 || !(p.theta_min < p.theta_max)) throw ConfigError("roc needs steps >= 2 and theta-min < theta-max");
  const Corpus corpus = run.load_corpus(p.input);
  const Dataset data = dataset_from_corpus(corpus, {}, &loaded.svm->vocab);
  std::vector<double> thresholds(p.steps);
  for (std::size_t i = 0; i < p.steps; ++i)
    thresholds[i] = p.theta_min + (p.theta_max - p.theta_min) * static_cast<double>(i) / static_cast<double>(p.steps - 1);
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"theta", "tpr", "fpr", "tp", "fp", "tn", "fn"});
  for (const auto& [theta, r] : roc_sweep(*loaded.svm, data.examples, thresholds))
    w.row({csv::format_number(theta), csv::format_number(r.tpr()), csv::format_number(r.fpr()),
           csv::format_number(r.tp), csv::format_number(r.fp), csv::format_number(r.tn), csv::format_number(r.fn)});
  run.write("roc.csv", out.str());
  run.finish();
}

}  // namespace

void register_classify(CLI::App& app) {
  auto* group = app.add_subcommand("classify", "Small-talk classifiers");
  group->require_subcommand(1);

  auto* train = group->add_subcommand("train", "Train naive Bayes or a linear SVM on a labeled corpus");
  auto pt = std::make_shared<ClassifyParams>();
  auto bt = std::make_shared<Binder>(train);
  add_common(*bt, pt->common);
  bt->add("--input,-i", "input", pt->input, "Labeled corpus");
  bt->add("--model", "model", pt->model, "nb or svm");
  bt->add("--mode", "mode", pt->mode, "Naive Bayes scope: per-course or aggregate");
  bt->add("--smoothing", "smoothing", pt->smoothing, "Naive Bayes smoothing: unit or laplace");
  bt->add("--lambda", "lambda", pt->lambda, "SVM regularization");
  bt->add("--epochs", "epochs", pt->epochs, "SVM passes over the data");
  bt->add("--theta", "theta", pt->theta, "SVM decision offset stored with the model");
  train->callback([pt, bt] { run_train(*pt, *bt); });

  auto* eval = group->add_subcommand("eval", "Confusion counts of a saved model on a labeled corpus");
  auto pe = std::make_shared<ClassifyParams>();
  auto be = std::make_shared<Binder>(eval);
  add_common(*be, pe->common);
  be->add("--input,-i", "input", pe->input, "Labeled corpus");
  be->add("--model-file", "model_file", pe->model_file, "Model JSON from classify train");
  be->add("--theta", "theta", pe->theta, "SVM decision offset (default: the stored one)");
  eval->callback([pe, be] { run_eval(*pe, *be); });

  auto* roc = group->add_subcommand("roc", "TPR/FPR of a saved SVM over a sweep of decision offsets");
  auto pr = std::make_shared<ClassifyParams>();
  auto br = std::make_shared<Binder>(roc);
  add_common(*br, pr->common);
  br->add("--input,-i", "input", pr->input, "Labeled corpus");
  br->add("--model-file", "model_file", pr->model_file, "SVM model JSON");
  br->add("--theta-min", "theta_min", pr->theta_min, "Lowest offset");
  br->add("--theta-max", "theta_max", pr->theta_max, "Highest offset");
  br->add("--steps", "steps", pr->steps, "Number of offsets");
  roc->callback([pr, br] { run_roc(*pr, *br); });
}

}  // namespace forumlens::cli
