#include <algorithm>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "forumlens/corpus.hpp"
#include "forumlens/csv.hpp"
#include "forumlens/error.hpp"

namespace forumlens {

namespace {

using nlohmann::json;

// Collects threads per course in first-seen order.
class CorpusBuilder {
 public:
  Course& course(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return corpus_.courses[it->second];
    index_.emplace(id, corpus_.courses.size());
    corpus_.courses.emplace_back().course_id = id;
    explicit_start_.push_back(false);
    return corpus_.courses.back();
  }

  void set_start(const std::string& id, Timestamp start) {
    course(id).start_date = start;
    explicit_start_[index_.at(id)] = true;
  }

  Corpus finish() {
    for (std::size_t i = 0; i < corpus_.courses.size(); ++i) {
      Course& c = corpus_.courses[i];
      if (!explicit_start_[i] && !c.threads.empty()) {
        c.start_date = std::min_element(c.threads.begin(), c.threads.end(),
                                        [](const Thread& a, const Thread& b) {
                                          return a.created_at < b.created_at;
                                        })->created_at;
      }
    }
    validate(corpus_);
    return std::move(corpus_);
  }

 private:
  Corpus corpus_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<bool> explicit_start_;
};

Label label_or_throw(std::string_view text, std::size_t line) {
  auto l = parse_label(text);
  if (!l) throw ParseError(line, "unknown label '" + std::string(text) + "'");
  return *l;
}

std::string json_id(const json& v, const char* key, std::size_t line) {
  auto it = v.find(key);
  if (it == v.end() || it->is_null()) throw ParseError(line, std::string("missing field '") + key + "'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw ParseError(line, std::string("field '") + key + "' must be a string");
}

Timestamp json_time(const json& v, const char* key, std::size_t line) {
  auto it = v.find(key);
  if (it == v.end()) throw ParseError(line, std::string("missing field '") + key + "'");
  if (!it->is_number()) throw ParseError(line, std::string("field '") + key + "' must be a number");
  if (it->is_number_float()) {
    const double d = it->get<double>();
    if (d != static_cast<double>(static_cast<Timestamp>(d)))
      throw ParseError(line, std::string("field '") + key + "' must be whole seconds");
    return static_cast<Timestamp>(d);
  }
  return it->get<Timestamp>();
}

Corpus read_jsonl(std::istream& in) {
  CorpusBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json v;
    try {
      v = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(lineno, e.what());
    }
    if (!v.is_object()) throw ParseError(lineno, "expected a JSON object");
    const std::string course_id = json_id(v, "course_id", lineno);
    if (!v.contains("thread_id")) {
      // Course declaration line: {"course_id", "start_date"}.
      builder.course(course_id);
      if (v.contains("start_date")) builder.set_start(course_id, json_time(v, "start_date", lineno));
      continue;
    }
    Thread t;
    t.thread_id = json_id(v, "thread_id", lineno);
    if (auto it = v.find("label"); it != v.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError(lineno, "label must be a string");
      t.label = label_or_throw(it->get<std::string>(), lineno);
    }
    auto posts = v.find("posts");
    if (posts == v.end() || !posts->is_array()) throw ParseError(lineno, "missing posts array");
    for (const auto& p : *posts) {
      if (!p.is_object()) throw ParseError(lineno, "post must be an object");
      Post post;
      post.post_id = json_id(p, "post_id", lineno);
      post.author_id = json_id(p, "author_id", lineno);
      post.timestamp = json_time(p, "timestamp", lineno);
      if (auto it = p.find("text"); it != p.end() && !it->is_null()) {
        if (!it->is_string()) throw ParseError(lineno, "text must be a string");
        post.text = it->get<std::string>();
      }
      if (auto it = p.find("is_staff"); it != p.end() && !it->is_null()) {
        if (!it->is_boolean()) throw ParseError(lineno, "is_staff must be a boolean");
        post.is_staff = it->get<bool>();
      }
      t.posts.push_back(std::move(post));
    }
    if (t.posts.empty()) throw InvariantViolation(t.thread_id, "thread has no posts");
    t.created_at = v.contains("created_at") ? json_time(v, "created_at", lineno)
                                            : t.posts.front().timestamp;
    validate(t);
    builder.course(course_id).threads.push_back(std::move(t));
  }
  return builder.finish();
}

bool parse_bool(std::string_view s, std::size_t line) {
  if (s == "1" || s == "true" || s == "True" || s == "TRUE") return true;
  if (s == "0" || s == "false" || s == "False" || s == "FALSE" || s.empty()) return false;
  throw ParseError(line, "expected a boolean, got '" + std::string(s) + "'");
}

template <class T>
T parse_number(std::string_view s, std::size_t line, std::string_view what) {
  std::istringstream is{std::string(s)};
  T x{};
  is >> x;
  if (is.fail() || !is.eof())
    throw ParseError(line, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return x;
}

Corpus read_csv(std::istream& in) {
  csv::Reader reader(in);
  csv::Row row;
  if (!reader.next(row)) return {};
  const csv::Header h(row);
  const auto c_course = h.require("course_id"), c_thread = h.require("thread_id"),
             c_post = h.require("post_id"), c_author = h.require("author_id"),
             c_time = h.require("timestamp");
  const auto c_label = h.find("label"), c_staff = h.find("is_staff"), c_text = h.find("text");
  const auto ncol = h.names().size();

  CorpusBuilder builder;
  std::unordered_map<std::string, std::unordered_map<std::string, std::size_t>> where;
  while (reader.next(row)) {
    const std::size_t ln = reader.line();
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != ncol) throw ParseError(ln, "expected " + std::to_string(ncol) + " fields");
    Course& course = builder.course(row[c_course]);
    auto& threads = where[row[c_course]];
    const Label label = c_label < ncol ? label_or_throw(row[c_label], ln) : Label::Unlabeled;
    auto [it, fresh] = threads.emplace(row[c_thread], course.threads.size());
    if (fresh) {
      Thread& t = course.threads.emplace_back();
      t.thread_id = row[c_thread];
      t.label = label;
    } else if (course.threads[it->second].label != label) {
      throw ParseError(ln, "conflicting labels for thread '" + row[c_thread] + "'");
    }
    Thread& t = course.threads[it->second];
    Post p;
    p.post_id = row[c_post];
    p.author_id = row[c_author];
    p.timestamp = parse_number<Timestamp>(row[c_time], ln, "timestamp");
    p.is_staff = c_staff < ncol && parse_bool(row[c_staff], ln);
    if (c_text < ncol) p.text = row[c_text];
    if (t.posts.empty()) t.created_at = p.timestamp;
    t.posts.push_back(std::move(p));
  }
  return builder.finish();
}

}  // namespace

Corpus read_corpus(std::istream& in, CorpusFormat format) {
  return format == CorpusFormat::Csv ? read_csv(in) : read_jsonl(in);
}

Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open corpus file '" + path.string() + "'");
  return read_corpus(in, format);
}

Corpus ingest_corpus(const std::filesystem::path& path) {
  return ingest_corpus(path, path.extension() == ".csv" ? CorpusFormat::Csv : CorpusFormat::JsonLines);
}

void write_corpus(std::ostream& out, const Corpus& corpus, CorpusFormat format) {
  if (format == CorpusFormat::Csv) {
    csv::Writer w(out);
    w.row({"course_id", "thread_id", "label", "post_id", "author_id", "timestamp", "is_staff", "text"});
    for (const auto& c : corpus.courses)
      for (const auto& t : c.threads)
        for (const auto& p : t.posts)
          w.row({c.course_id, t.thread_id, std::string(to_string(t.label)), p.post_id, p.author_id,
                 std::to_string(p.timestamp), p.is_staff ? "1" : "0", p.text});
    return;
  }
  for (const auto& c : corpus.courses) {
    json head = {{"course_id", c.course_id}, {"start_date", c.start_date}};
    out << head.dump() << '\n';
    for (const auto& t : c.threads) {
      json posts = json::array();
      for (const auto& p : t.posts)
        posts.push_back({{"post_id", p.post_id},
                         {"author_id", p.author_id},
                         {"timestamp", p.timestamp},
                         {"text", p.text},
                         {"is_staff", p.is_staff}});
      json v = {{"course_id", c.course_id},
                {"thread_id", t.thread_id},
                {"created_at", t.created_at},
                {"label", to_string(t.label)},
                {"posts", std::move(posts)}};
      out << v.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    }
  }
}

void apply_course_metadata(Corpus& corpus, std::istream& in) {
  csv::Reader reader(in);
  csv::Row row;
  if (!reader.next(row)) return;
  const csv::Header h(row);
  const auto c_id = h.require("course_id");
  const char* names[] = {"Q", "V", "L", "D", "P", "S", "H"};
  std::size_t cols[7];
  for (int i = 0; i < 7; ++i) cols[i] = h.require(names[i]);
  const auto c_start = h.find("start_date"), c_cat = h.find("category");
  const auto ncol = h.names().size();
  while (reader.next(row)) {
    const std::size_t ln = reader.line();
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != ncol) throw ParseError(ln, "expected " + std::to_string(ncol) + " fields");
    Course* c = corpus.find(row[c_id]);
    if (c == nullptr) continue;
    double v[7];
    for (int i = 0; i < 7; ++i) v[i] = parse_number<double>(row[cols[i]], ln, names[i]);
    CourseFactors f = c->factors.value_or(CourseFactors{});
    f.Q = v[0], f.V = v[1], f.L = v[2], f.D = v[3], f.P = v[4], f.S = v[5], f.H = v[6];
    for (int i : {0, 1, 4})
      if (v[i] != 0 && v[i] != 1) throw ParseError(ln, std::string(names[i]) + " must be 0 or 1");
    c->factors = f;
    c->category = category_for(f.Q != 0, f.V != 0);
    if (c_cat < ncol && !row[c_cat].empty()) {
      auto cat = parse_category(row[c_cat]);
      if (!cat) throw ParseError(ln, "unknown category '" + row[c_cat] + "'");
      if (*cat != c->category)
        throw InvariantViolation("", "category of course '" + c->course_id +
                                         "' contradicts its Q/V indicators");
    }
    if (c_start < ncol && !row[c_start].empty())
      c->start_date = parse_number<Timestamp>(row[c_start], ln, "start_date");
  }
  validate(corpus);
}

void apply_course_metadata(Corpus& corpus, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open course metadata '" + path.string() + "'");
  apply_course_metadata(corpus, in);
}

void write_course_metadata(std::ostream& out, const Corpus& corpus) {
  csv::Writer w(out);
  w.row({"course_id", "start_date", "Q", "V", "L", "D", "P", "S", "H", "category"});
  for (const auto& c : corpus.courses) {
    if (!c.factors) continue;
    const auto& f = *c.factors;
    w.row({c.course_id, std::to_string(c.start_date), csv::format_number(f.Q), csv::format_number(f.V),
           csv::format_number(f.L), csv::format_number(f.D), csv::format_number(f.P),
           csv::format_number(f.S), csv::format_number(f.H), std::string(to_string(c.category))});
  }
}

}  // namespace forumlens
