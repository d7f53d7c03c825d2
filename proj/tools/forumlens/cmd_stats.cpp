#include <algorithm>
#include <memory>
#include <sstream>
#include <tuple>

#include "forumlens/csv.hpp"
#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"
#include "run.hpp"

namespace forumlens::cli {

namespace {

using csv::format_number;

struct StatsParams {
  Common common;
  std::string input;
  std::string metadata;
  std::int64_t days = 0;
  bool exclude_staff = false;
  std::string target = "y";
  double scale_staff = 100;
  double trim = 0.03;
  double min_p = 0.01;
  double t_days = 1;
  double threshold = 140;
  double alpha = 0.99;
  std::string denominator = "printed";
};

Corpus load(Run& run, const StatsParams& p) {
  Corpus corpus = run.load_corpus(p.input);
  if (!p.metadata.empty()) {
    run.add_input(p.metadata);
    apply_course_metadata(corpus, p.metadata);
  }
  return corpus;
}

stats::SeriesOptions series_options(const StatsParams& p) {
  stats::SeriesOptions o;
  if (p.days > 0) o.days = p.days;
  o.include_staff = !p.exclude_staff;
  return o;
}

stats::Target parse_target(const std::string& s) {
  if (s == "y") return stats::Target::Y;
  if (s == "z") return stats::Target::Z;
  if (s == "logz") return stats::Target::LogZ;
  throw ConfigError("--target must be y, z or logz");
}

const std::vector<double>& pick(const stats::ActivitySeries& s, stats::Target t) {
  return t == stats::Target::Y ? s.y : s.z;
}

void run_series(StatsParams& p, Binder& binder) {
  Run run("stats series", binder, p.common);
  const Corpus corpus = load(run, p);
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"course_id", "day", "y", "z"});
  for (const auto& s : stats::build_series(corpus, series_options(p)))
    for (std::size_t t = 0; t < s.days(); ++t)
      w.row({s.course_id, format_number(t + 1), format_number(s.y[t]), format_number(s.z[t])});
  run.write("series.csv", out.str());
  run.finish();
}

void run_trend(StatsParams& p, Binder& binder) {
  Run run("stats trend", binder, p.common);
  const Corpus corpus = load(run, p);
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"course_id", "target", "slope", "intercept", "slope_se"});
  for (const auto& s : stats::build_series(corpus, series_options(p))) {
    for (const auto& [name, values] : {std::pair{"y", &s.y}, std::pair{"z", &s.z}}) {
      const auto tr = stats::fit_course_trend(*values);
      w.row({s.course_id, name, format_number(tr.slope), format_number(tr.intercept), format_number(tr.slope_se)});
    }
  }
  run.write("trend.csv", out.str());
  run.finish();
}

void run_panel(StatsParams& p, Binder& binder) {
  Run run("stats panel", binder, p.common);
  if (p.metadata.empty()) throw ConfigError("--metadata is required for the panel model");
  const Corpus corpus = load(run, p);
  const auto target = parse_target(p.target);
  const auto opts = series_options(p);
  std::vector<stats::PanelCourse> panel;
  for (const auto& c : corpus.courses) {
    if (!c.factors) throw ConfigError("course '" + c.course_id + "' has no metadata row");
    stats::PanelCourse pc{stats::build_series(c, opts), *c.factors};
    std::tie(pc.factors.M, pc.factors.M_prime) = stats::popularity(c, pc.series, opts.include_staff);
    panel.push_back(std::move(pc));
  }
  const auto fit = stats::fit_panel_ols(panel, target, {p.scale_staff});
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"term", "estimate", "se", "t", "p"});
  for (std::size_t i = 0; i < fit.fit.terms.size(); ++i)
    w.row({fit.fit.terms[i], format_number(fit.fit.coefficients[i]), format_number(fit.fit.std_errors[i]),
           format_number(fit.fit.t_stats[i]), format_number(fit.fit.p_values[i])});
  run.write("panel.csv", out.str());
  std::ostringstream summary;
  csv::Writer sw(summary);
  sw.row({"target", "n_obs", "dof", "r2", "adj_r2", "sigma2", "dropped_zero"});
  sw.row({std::string(stats::to_string(target)), format_number(fit.fit.n_obs), format_number(fit.fit.dof),
          format_number(fit.fit.r2), format_number(fit.fit.adj_r2), format_number(fit.fit.sigma2),
          format_number(fit.dropped_zero)});
  run.write("panel_fit.csv", summary.str());
  run.finish();
}

void run_shapiro(StatsParams& p, Binder& binder) {
  Run run("stats shapiro", binder, p.common);
  const Corpus corpus = load(run, p);
  const auto target = parse_target(p.target);
  if (target == stats::Target::LogZ) throw ConfigError("shapiro takes --target y or z");
  std::ostringstream out, qq;
  csv::Writer w(out), qw(qq);
  w.row({"course_id", "n", "w", "p", "pass", "qq_r2"});
  qw.row({"course_id", "theoretical", "sample"});
  for (const auto& s : stats::build_series(corpus, series_options(p))) {
    const auto d = stats::trim_and_diff(pick(s, target), p.trim);
    stats::ShapiroResult sw;
    try {
      sw = stats::shapiro_wilk(d);
    } catch (const SampleSizeError&) {
      w.row({s.course_id, format_number(d.size()), "", "", "", ""});
      continue;
    } catch (const DegenerateGroup&) {
      w.row({s.course_id, format_number(d.size()), "", "", "", ""});
      continue;
    }
    const auto points = stats::qq_points(d);
    w.row({s.course_id, format_number(d.size()), format_number(sw.w), format_number(sw.p),
           sw.p >= p.min_p ? "1" : "0", format_number(stats::qq_r2(points))});
    for (const auto& [x, y] : points) qw.row({s.course_id, format_number(x), format_number(y)});
  }
  run.write("shapiro.csv", out.str());
  run.write("qq.csv", qq.str());
  run.finish();
}

void run_ttest(StatsParams& p, Binder& binder) {
  Run run("stats ttest", binder, p.common);
  const Corpus corpus = load(run, p);
  std::vector<double> g1, g2;
  std::ostringstream nb;
  csv::Writer nw(nb);
  nw.row({"course_id", "thread_id", "f", "length", "group"});
  for (const auto& c : corpus.courses) {
    const auto f = stats::thread_neighborhoods(c, p.t_days);
    const auto part = stats::partition_by_threshold(f, p.threshold);
    std::vector<int> group(f.size(), 2);
    for (auto i : part.g1) group[i] = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double len = static_cast<double>(c.threads[i].length());
      (group[i] == 1 ? g1 : g2).push_back(len);
      nw.row({c.course_id, c.threads[i].thread_id, format_number(f[i]), format_number(len),
              format_number(group[i])});
    }
  }
  run.write("neighborhoods.csv", nb.str());
  const auto r = stats::two_sample_tests(g1, g2);
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"test", "statistic", "df", "p_greater", "p_two_sided", "n1", "n2", "mean1", "mean2", "var1", "var2"});
  w.row({"welch", format_number(r.welch.t), format_number(r.welch.df), format_number(r.welch.p_greater),
         format_number(r.welch.p_two_sided), format_number(g1.size()), format_number(g2.size()),
         format_number(r.welch.mean1), format_number(r.welch.mean2), format_number(r.welch.var1),
         format_number(r.welch.var2)});
  w.row({"mann_whitney", format_number(r.mann_whitney.u), "", format_number(r.mann_whitney.p_greater),
         format_number(r.mann_whitney.p_two_sided), format_number(g1.size()), format_number(g2.size()), "", "", "",
         ""});
  run.write("ttest.csv", out.str());
  run.finish();
}

void run_moving_avg(StatsParams& p, Binder& binder) {
  Run run("stats moving-avg", binder, p.common);
  stats::MaDenominator den;
  if (p.denominator == "printed") den = stats::MaDenominator::Printed;
  else if (p.denominator == "timealigned") den = stats::MaDenominator::TimeAligned;
  else throw ConfigError("--denominator must be printed or timealigned");
  const Corpus corpus = load(run, p);
  std::ostringstream out;
  csv::Writer w(out);
  w.row({"category", "index", "day", "s"});
  for (const Category cat : {Category::Vocational, Category::AppliedScience, Category::HumanitiesSocial}) {
    struct Item {
      std::int64_t day;
      Timestamp created;
      std::string_view course, thread;
      double eta;
    };
    std::vector<Item> items;
    for (const auto& c : corpus.courses) {
      if (c.category != cat) continue;
      for (const auto& t : c.threads)
        if (t.label != Label::Unlabeled)
          items.push_back({c.day_index(t.created_at), t.created_at, c.course_id, t.thread_id,
                           t.label == Label::SmallTalk ? 1.0 : 0.0});
    }
    if (items.empty()) continue;
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      return std::tie(a.day, a.created, a.course, a.thread) < std::tie(b.day, b.created, b.course, b.thread);
    });
    std::vector<double> eta;
    for (const auto& it : items) eta.push_back(it.eta);
    const auto s = stats::smalltalk_moving_average(eta, p.alpha, den);
    for (std::size_t i = 0; i < s.size(); ++i)
      w.row({std::string(to_string(cat)), format_number(i + 1), format_number(items[i].day), format_number(s[i])});
  }
  run.write("moving_avg.csv", out.str());
  run.finish();
}

using Runner = void (*)(StatsParams&, Binder&);

CLI::App* add_stats_command(CLI::App* group, const std::string& name, const std::string& help, Runner runner,
                            const std::function<void(Binder&, StatsParams&)>& extra) {
  auto* sub = group->add_subcommand(name, help);
  auto p = std::make_shared<StatsParams>();
  auto b = std::make_shared<Binder>(sub);
  add_common(*b, p->common);
  b->add("--input,-i", "input", p->input, "Corpus file");
  b->add("--metadata", "metadata", p->metadata, "Course metadata CSV");
  b->add("--days", "days", p->days, "Series length in days (default: course D, else last active day)");
  b->flag("--exclude-staff", "exclude_staff", p->exclude_staff, "Drop staff posts from activity counts");
  if (extra) extra(*b, *p);
  sub->callback([p, b, runner] { runner(*p, *b); });
  return sub;
}

}  // namespace

void register_stats(CLI::App& app) {
  auto* group = app.add_subcommand("stats", "Activity series, decline models and two-sample tests");
  group->require_subcommand(1);
  add_stats_command(group, "series", "Daily posts (y) and distinct authors (z) per course", run_series, {});
  add_stats_command(group, "trend", "Per-course linear trend of y and z", run_trend, {});
  add_stats_command(group, "panel", "Pooled OLS of daily activity on course factors", run_panel,
                    [](Binder& b, StatsParams& p) {
                      b.add("--target", "target", p.target, "y, z or logz");
                      b.add("--scale-staff", "scale_staff", p.scale_staff, "Divisor applied to staff post counts");
                    });
  add_stats_command(group, "shapiro", "Normality screen on trimmed day-to-day differences", run_shapiro,
                    [](Binder& b, StatsParams& p) {
                      b.add("--target", "target", p.target, "y or z");
                      b.add("--trim", "trim", p.trim, "Fraction trimmed from each end");
                      b.add("--min-p", "min_p", p.min_p, "Pass threshold on the p-value");
                    });
  add_stats_command(group, "ttest", "Thread length in crowded vs quiet periods", run_ttest,
                    [](Binder& b, StatsParams& p) {
                      b.add("--t-days", "t_days", p.t_days, "Half-width of the neighbourhood in days");
                      b.add("--threshold", "threshold", p.threshold, "Neighbourhood size separating the groups");
                    });
  add_stats_command(group, "moving-avg", "Small-talk share moving average per course category", run_moving_avg,
                    [](Binder& b, StatsParams& p) {
                      b.add("--alpha", "alpha", p.alpha, "Decay");
                      b.add("--denominator", "denominator", p.denominator, "printed or timealigned");
                    });
}

}  // namespace forumlens::cli
