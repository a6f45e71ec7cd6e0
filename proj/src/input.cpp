#include "orbk/input.hpp"

#include <iterator>
#include <map>
#include <set>

#include <json.hpp>

#include "orbk/cohomology.hpp"
#include "orbk/error.hpp"

namespace orbk {

namespace {

using nlohmann::json;

// Forward iterator over the raw text that publishes how far the lexer has read.
struct TrackingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char* base = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *p; }
  TrackingIterator& operator++() {
    ++p;
    *consumed = static_cast<std::size_t>(p - base);
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const TrackingIterator& o) const { return p == o.p; }
  bool operator!=(const TrackingIterator& o) const { return p != o.p; }
};

// DOM builder that also remembers where each value ends, keyed by JSON pointer.
class LocatingHandler {
 public:
  LocatingHandler(json& root, const std::size_t& consumed) : dom_(root, false), consumed_(consumed) {}

  bool null() { return scalar(dom_.null()); }
  bool boolean(bool v) { return scalar(dom_.boolean(v)); }
  bool number_integer(json::number_integer_t v) { return scalar(dom_.number_integer(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return scalar(dom_.number_unsigned(v)); }
  bool number_float(json::number_float_t v, const json::string_t& s) { return scalar(dom_.number_float(v, s)); }
  bool string(json::string_t& v) {
    const std::size_t len = v.size();
    ends_[path()] = consumed_;
    string_lengths_[path()] = len;
    const bool ok = dom_.string(v);
    advance();
    return ok;
  }
  bool binary(json::binary_t& v) { return scalar(dom_.binary(v)); }
  bool start_object(std::size_t n) {
    ends_[path()] = consumed_;
    frames_.push_back({false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(json::string_t& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    ends_[path()] = consumed_;
    frames_.push_back({true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return dom_.end_array();
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    error_position_ = position;
    error_message_ = ex.what();
    return false;
  }

  std::size_t error_position() const { return error_position_; }
  const std::string& error_message() const { return error_message_; }
  const std::map<std::string, std::size_t>& ends() const { return ends_; }
  const std::map<std::string, std::size_t>& string_lengths() const { return string_lengths_; }

 private:
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
  };

  bool scalar(bool ok) {
    ends_[path()] = consumed_;
    advance();
    return ok;
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  std::string path() const {
    std::string out;
    for (const auto& f : frames_) out += "/" + (f.array ? std::to_string(f.index) : f.key);
    return out;
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  const std::size_t& consumed_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> ends_;
  std::map<std::string, std::size_t> string_lengths_;
  std::size_t error_position_ = 0;
  std::string error_message_;
};

class Locator {
 public:
  Locator(std::string_view text, const LocatingHandler& handler) : text_(text), handler_(handler) {}

  [[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& what) const {
    const auto it = handler_.ends().find(path);
    const std::size_t end = it == handler_.ends().end() ? 0 : it->second;
    throw_at(code, end == 0 ? 0 : end - 1, what);
  }

  // Error inside a string value at a 1-based column of its contents.
  [[noreturn]] void fail_in_string(const std::string& path, std::size_t column, const std::string& what) const {
    const std::size_t end = handler_.ends().at(path);
    const std::size_t len = handler_.string_lengths().at(path);
    const std::size_t start = end >= len + 1 ? end - len - 1 : 0;
    throw_at(ErrorCode::SyntaxError, start + column - 1, what);
  }

  // index is the 0-based offset of the offending character.
  [[noreturn]] void throw_at(ErrorCode code, std::size_t index, const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < index && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

 private:
  std::string_view text_;
  const LocatingHandler& handler_;
};

std::size_t require_positive(const json& root, const char* key, const Locator& loc) {
  const std::string path = std::string("/") + key;
  if (!root.contains(key)) loc.fail(ErrorCode::SemanticError, "", std::string("missing \"") + key + "\"");
  const json& v = root.at(key);
  if (!v.is_number_integer()) loc.fail(ErrorCode::SemanticError, path, std::string("\"") + key + "\" must be an integer");
  if (v.get<std::int64_t>() < 1) loc.fail(ErrorCode::SemanticError, path, std::string("\"") + key + "\" must be >= 1");
  return v.get<std::size_t>();
}

void reject_unknown_keys(const json& root, const std::set<std::string>& allowed, const Locator& loc) {
  for (const auto& [k, v] : root.items()) {
    if (!allowed.count(k)) loc.fail(ErrorCode::SemanticError, "/" + k, "unknown key \"" + k + "\"");
  }
}

MatrixGroupInput parse_matrix_group(const json& root, const Locator& loc) {
  reject_unknown_keys(root, {"kind", "name", "dimension", "conductor", "geometry", "generators"}, loc);
  MatrixGroupInput in;
  in.dimension = require_positive(root, "dimension", loc);
  const std::size_t conductor = require_positive(root, "conductor", loc);
  if (conductor > 100000) loc.fail(ErrorCode::SemanticError, "/conductor", "conductor larger than 100000");
  in.conductor = static_cast<unsigned>(conductor);

  if (root.contains("geometry")) {
    const json& g = root.at("geometry");
    if (g == "linear") {
      in.geometry = Geometry::linear;
    } else if (g == "point") {
      in.geometry = Geometry::point;
    } else {
      loc.fail(ErrorCode::SemanticError, "/geometry", "geometry must be \"point\" or \"linear\"");
    }
  }

  if (!root.contains("generators")) loc.fail(ErrorCode::SemanticError, "", "missing \"generators\"");
  const json& gens = root.at("generators");
  if (!gens.is_array()) loc.fail(ErrorCode::SemanticError, "/generators", "\"generators\" must be an array");
  const std::size_t n = in.dimension;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string gpath = "/generators/" + std::to_string(k);
    const json& rows = gens[k];
    if (!rows.is_array() || rows.size() != n) {
      loc.fail(ErrorCode::SemanticError, gpath, "generator " + std::to_string(k) + " needs " + std::to_string(n) + " rows");
    }
    std::vector<Cyclotomic> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::string rpath = gpath + "/" + std::to_string(r);
      const json& row = rows[r];
      if (!row.is_array() || row.size() != n) {
        loc.fail(ErrorCode::SemanticError, rpath, "row " + std::to_string(r) + " of generator " + std::to_string(k) +
                                                      " needs " + std::to_string(n) + " entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        const std::string epath = rpath + "/" + std::to_string(c);
        if (!row[c].is_string()) loc.fail(ErrorCode::SemanticError, epath, "matrix entries must be expression strings");
        try {
          entries.push_back(parse_cyclotomic(row[c].get<std::string>(), in.conductor));
        } catch (const ExpressionSyntaxError& e) {
          loc.fail_in_string(epath, e.column(), e.what());
        }
      }
    }
    in.generators.emplace_back(n, in.conductor, std::move(entries));
  }
  return in;
}

WeightedProjectiveInput parse_wps(const json& root, const Locator& loc) {
  reject_unknown_keys(root, {"kind", "name", "weights"}, loc);
  if (!root.contains("weights")) loc.fail(ErrorCode::SemanticError, "", "missing \"weights\"");
  const json& ws = root.at("weights");
  if (!ws.is_array() || ws.size() < 2) loc.fail(ErrorCode::SemanticError, "/weights", "\"weights\" needs at least two entries");
  WeightedProjectiveInput in;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const std::string path = "/weights/" + std::to_string(i);
    if (!ws[i].is_number_integer() || ws[i].get<std::int64_t>() < 1 || ws[i].get<std::int64_t>() > 1000000) {
      loc.fail(ErrorCode::SemanticError, path, "weights must be integers in [1, 1000000]");
    }
    in.weights.push_back(ws[i].get<unsigned>());
  }
  try {
    WeightedProjectiveSpace check(in.weights);
  } catch (const Error& e) {
    loc.fail(ErrorCode::SemanticError, "/weights", e.what());
  }
  return in;
}

}  // namespace

InputSpec parse_input(std::string_view text) {
  json root;
  std::size_t consumed = 0;
  LocatingHandler handler(root, consumed);
  const Locator loc(text, handler);
  TrackingIterator first{text.data(), text.data(), &consumed};
  TrackingIterator last{text.data() + text.size(), text.data(), &consumed};
  if (!json::sax_parse(first, last, &handler)) {
    const std::string msg = handler.error_message();
    const auto colon = msg.find(": ", msg.find("parse error"));
    const std::size_t pos = handler.error_position();
    loc.throw_at(ErrorCode::SyntaxError, pos == 0 ? 0 : pos - 1,
                 colon == std::string::npos ? msg : msg.substr(colon + 2));
  }

  if (!root.is_object()) loc.fail(ErrorCode::SemanticError, "", "input must be a JSON object");
  InputSpec spec;
  if (root.contains("name")) {
    if (!root.at("name").is_string()) loc.fail(ErrorCode::SemanticError, "/name", "\"name\" must be a string");
    spec.name = root.at("name").get<std::string>();
  }
  if (!root.contains("kind")) loc.fail(ErrorCode::SemanticError, "", "missing \"kind\"");
  const json& kind = root.at("kind");
  if (kind == "matrix_group") {
    spec.body = parse_matrix_group(root, loc);
  } else if (kind == "weighted_projective") {
    spec.body = parse_wps(root, loc);
  } else {
    loc.fail(ErrorCode::SemanticError, "/kind", "kind must be \"matrix_group\" or \"weighted_projective\"");
  }
  return spec;
}

std::string serialize_input(const InputSpec& spec) {
  json root;
  if (spec.name) root["name"] = *spec.name;
  if (spec.is_matrix_group()) {
    const auto& in = spec.matrix_group();
    root["kind"] = "matrix_group";
    root["dimension"] = in.dimension;
    root["conductor"] = in.conductor;
    root["geometry"] = std::string(to_string(in.geometry));
    json gens = json::array();
    for (const auto& g : in.generators) {
      json rows = json::array();
      for (std::size_t r = 0; r < g.dimension(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.dimension(); ++c) row.push_back(g(r, c).to_expression());
        rows.push_back(std::move(row));
      }
      gens.push_back(std::move(rows));
    }
    root["generators"] = std::move(gens);
  } else {
    root["kind"] = "weighted_projective";
    root["weights"] = spec.weighted_projective().weights;
  }
  return root.dump(2) + "\n";
}

}  // namespace orbk
