#include "orbk/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "orbk/cohomology.hpp"
#include "orbk/corpus.hpp"
#include "orbk/error.hpp"
#include "orbk/goodmaps.hpp"
#include "orbk/moduli.hpp"
#include "orbk/ring.hpp"
#include "orbk/sectors.hpp"
#include "orbk/suite.hpp"

namespace orbk {

namespace {

// std::map-backed, so every object comes out with sorted keys.
using nlohmann::json;

constexpr const char* kCountingNormalization =
    "constant maps to [pt/G] weighted by 1/|G|: #{(h_1..h_k) in C_1 x ... x C_k : h_1...h_k = 1} / |G|";

std::string str(const Rational& q) { return to_string(q); }

json table_json(const GradedDimensions& t) {
  json out = json::object();
  for (const auto& [d, n] : t.entries()) out[str(d)] = n;
  return out;
}

json class_json(const OrbClass& c) {
  json out = json::array();
  for (const auto& [s, q] : c.coefficients()) out.push_back({{"sector", s}, {"coefficient", str(q)}});
  return out;
}

json weights_json(const std::vector<unsigned>& w) { return json(w); }

std::string word_of(const FiniteMatrixGroup& g, ElementIndex e) { return format_word(g.word(e)); }

json words_json(const FiniteMatrixGroup& g, const std::vector<ElementIndex>& es) {
  json out = json::array();
  for (auto e : es) out.push_back(word_of(g, e));
  return out;
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, flag + " expects a rational p/q, got \"" + text + "\"");
  }
}

class Context {
 public:
  Context(const std::optional<InputSpec>& spec, const CommandOptions& options) : spec_(spec), options_(options) {}

  const InputSpec& spec() const {
    if (!spec_) throw Error(ErrorCode::InvalidArgument, "this command needs an input file");
    return *spec_;
  }
  bool is_wps() const { return !spec().is_matrix_group(); }
  const MatrixGroupInput& matrix() const {
    if (is_wps()) throw Error(ErrorCode::UnsupportedGeometry, "this command needs a matrix_group input");
    return spec().matrix_group();
  }
  const std::shared_ptr<const FiniteMatrixGroup>& group() const {
    if (!group_) group_ = close_group(matrix(), options_.cap);
    return group_;
  }
  const InertiaDecomposition& decomposition() const {
    if (!dec_) dec_.emplace(inertia(group(), matrix().geometry));
    return *dec_;
  }
  WeightedProjectiveSpace wps() const { return WeightedProjectiveSpace(spec().weighted_projective().weights); }

  // --class and --sector both name class indices; --class wins when given.
  std::vector<std::size_t> classes() const {
    const auto& picked = options_.classes.empty() ? options_.sectors : options_.classes;
    for (auto c : picked) {
      if (c >= group()->class_count()) {
        throw Error(ErrorCode::InvalidArgument, "class index " + std::to_string(c) + " out of range (group has " +
                                                    std::to_string(group()->class_count()) + " classes)");
      }
    }
    return picked;
  }
  std::vector<std::size_t> classes_exactly(std::size_t k, const char* command) const {
    auto c = classes();
    if (c.size() != k) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(command) + " needs exactly " + std::to_string(k) + " --class indices");
    }
    return c;
  }

  const CommandOptions& options() const { return options_; }

 private:
  const std::optional<InputSpec>& spec_;
  const CommandOptions& options_;
  mutable std::shared_ptr<const FiniteMatrixGroup> group_;
  mutable std::optional<InertiaDecomposition> dec_;
};

struct Outcome {
  json body;
  int exit_code = kExitOk;
};

Outcome cmd_sectors(const Context& ctx) {
  json out;
  if (ctx.is_wps()) {
    const auto space = ctx.wps();
    out["weights"] = weights_json(space.weights());
    out["sectors"] = json::array();
    for (const auto& s : wps_sectors(space)) {
      out["sectors"].push_back({{"q", str(s.q)}, {"fixed_weights", weights_json(s.fixed_weights)}, {"iota", str(s.iota)}});
    }
    return {out};
  }
  const auto& dec = ctx.decomposition();
  const auto& g = dec.group();
  out["geometry"] = std::string(to_string(dec.geometry()));
  out["group_order"] = g.order();
  out["sectors"] = json::array();
  for (std::size_t i = 0; i < dec.sectors().size(); ++i) {
    const Sector& s = dec.sector(i);
    const ElementIndex rep = g.class_representative(s.class_index);
    out["sectors"].push_back({{"index", i},
                              {"representative", word_of(g, rep)},
                              {"class_size", g.class_members(s.class_index).size()},
                              {"element_order", g.element_order(rep)},
                              {"iota", str(s.iota)},
                              {"fixed_dim", s.fixed_dim},
                              {"inverse", s.inverse_sector}});
  }
  return {out};
}

Outcome cmd_poincare(const Context& ctx) {
  json out;
  if (ctx.is_wps()) {
    const auto space = ctx.wps();
    const auto t = orbifold_poincare_wps(space);
    out["label"] = "orbifold Poincare polynomial";
    out["table"] = table_json(t);
    out["total"] = t.total();
    out["duality"] = satisfies_duality(t, space.dimension());
    return {out};
  }
  const auto& dec = ctx.decomposition();
  const auto t = orbifold_poincare_linear(dec);
  out["label"] = dec.geometry() == Geometry::linear ? "age-graded dimension table" : "orbifold cohomology of [pt/G]";
  out["table"] = table_json(t);
  out["total"] = t.total();
  return {out};
}

Outcome cmd_euler(const Context& ctx) {
  json out;
  out["euler_number"] = ctx.is_wps() ? orbifold_euler(ctx.wps()) : orbifold_euler(ctx.decomposition());
  return {out};
}

Outcome cmd_ring(const Context& ctx) {
  const auto& dec = ctx.decomposition();
  RingTable table;
  if (dec.geometry() == Geometry::point) {
    table = ring_table_ptG(dec.group());
  } else {
    if (!dec.group().is_abelian()) {
      throw Error(ErrorCode::UnsupportedGeometry, "ring on a linear quotient needs an abelian group");
    }
    table = ring_table_abelian_linear(dec);
  }
  json out;
  out["model"] = table.model == RingTable::Model::point_quotient ? "point_quotient" : "abelian_linear";
  out["normalization"] = table.normalization;
  out["unit"] = table.unit;
  out["degrees"] = json::array();
  for (const auto& d : table.degrees) out["degrees"].push_back(str(d));

  const auto picked = ctx.classes();
  if (!picked.empty()) {
    if (picked.size() != 2) throw Error(ErrorCode::InvalidArgument, "ring takes zero or two --sector indices");
    out["factors"] = picked;
    out["product"] = class_json(table.product(picked[0], picked[1]));
    return {out};
  }
  out["products"] = json::array();
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table.size(); ++b) {
      const auto p = table.product(a, b);
      if (!p.is_zero()) out["products"].push_back({{"a", a}, {"b", b}, {"result", class_json(p)}});
    }
  }
  if (table.gram) {
    json gram = json::array();
    for (const auto& row : *table.gram) {
      json r = json::array();
      for (const auto& q : row) r.push_back(str(q));
      gram.push_back(std::move(r));
    }
    out["gram"] = std::move(gram);
    out["gram_determinant"] = str(rational_determinant(*table.gram));
  }
  return {out};
}

json counting_header(const Context& ctx, const std::vector<std::size_t>& classes) {
  json out;
  out["target"] = "[pt/G]";
  out["classes"] = classes;
  out["group_order"] = ctx.group()->order();
  out["normalization"] = kCountingNormalization;
  return out;
}

Outcome cmd_pairing(const Context& ctx) {
  const auto c = ctx.classes_exactly(2, "pairing");
  json out = counting_header(ctx, c);
  out["pairing"] = str(pairing_ptG(*ctx.group(), c[0], c[1]));
  return {out};
}

Outcome cmd_threepoint(const Context& ctx) {
  const auto c = ctx.classes_exactly(3, "threepoint");
  json out = counting_header(ctx, c);
  out["threepoint"] = str(threepoint_ptG(*ctx.group(), c[0], c[1], c[2]));
  return {out};
}

Outcome cmd_kpoint(const Context& ctx) {
  const auto c = ctx.classes();
  if (c.size() < 2) throw Error(ErrorCode::InvalidArgument, "kpoint needs at least two --class indices");
  const SectorTuple type{c};
  json out = counting_header(ctx, c);
  out["count"] = str(kpoint_constant_count(*ctx.group(), type));
  out["nonempty"] = component_nonempty_ptG(*ctx.group(), type);
  return {out};
}

ElementIndex element_flag(const Context& ctx) {
  if (!ctx.options().element) throw Error(ErrorCode::InvalidArgument, "this command needs --element");
  const Word w = parse_word(*ctx.options().element);
  for (auto s : w) {
    if (s >= ctx.group()->generator_count()) {
      throw Error(ErrorCode::InvalidArgument, "generator index " + std::to_string(s) + " out of range");
    }
  }
  return ctx.group()->evaluate(w);
}

Outcome cmd_goodmap(const Context& ctx) {
  const auto& g = *ctx.group();
  const ElementIndex e = element_flag(ctx);
  const auto v = fixed_locus_goodness(g, e);
  json out;
  out["element"] = word_of(g, e);
  out["good"] = v.good;
  out["verdict"] = v.good ? "Good" : "NotGood";
  out["centralizer_order"] = v.problem.centralizer.size();
  out["kernel_order"] = v.problem.kernel.size();
  out["quotient_order"] = v.problem.quotient_order;
  out["fixed_dim"] = v.problem.fixed_basis.size();
  out["quotient_generators"] = words_json(g, v.quotient_generators);
  out["splittings"] = json::array();
  for (const auto& s : v.splittings) out["splittings"].push_back(words_json(g, s.generator_images));
  out["classes"] = v.classes;
  out["equivalence"] = "stabilizer-conjugation";
  const auto scan = goodness_via_lifts(g, e);
  out["lift_scan"] = scan ? json(*scan ? "lifts" : "no_lifts") : json(nullptr);
  return {out};
}

Outcome cmd_lifts(const Context& ctx) {
  const auto& g = *ctx.group();
  const auto& o = ctx.options();
  if (!o.order) throw Error(ErrorCode::InvalidArgument, "lifts needs --order");
  LiftProblem p;
  p.axes = o.axes;
  p.order = *o.order;
  p.character = o.character.value_or(1);
  json out;
  out["axes"] = p.axes;
  out["order"] = p.order;
  out["character"] = p.character;
  out["equivalence"] = "stabilizer-conjugation";
  try {
    const auto set = enumerate_equivariant_lifts(g, p);
    out["status"] = "ok";
    out["lifts"] = words_json(g, set.lifts);
    out["equivalence_classes"] = json::array();
    for (const auto& c : set.classes) out["equivalence_classes"].push_back(words_json(g, c));
    out["class_count"] = set.classes.size();
    out["stabilizer_order"] = set.stabilizer.size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoLifts) throw;
    out["status"] = "no_lifts";
    out["lifts"] = json::array();
    out["equivalence_classes"] = json::array();
    out["class_count"] = 0;
  }
  return {out};
}

Outcome cmd_vdim(const Context& ctx) {
  const auto& o = ctx.options();
  if (!o.c1a || !o.dim || !o.genus || !o.marks) {
    throw Error(ErrorCode::InvalidArgument, "vdim needs --c1a, --dim, --genus and --marks");
  }
  DimensionInput in;
  in.c1a = parse_flag_rational("--c1a", *o.c1a);
  in.complex_dim = *o.dim;
  in.genus = *o.genus;
  in.marks = *o.marks;
  for (const auto& t : o.iotas) in.iotas.push_back(parse_flag_rational("--iota", t));
  json out;
  out["virtual_dimension"] = str(virtual_dimension(in));
  return {out};
}

Outcome cmd_mckay(const Context& ctx) {
  const auto r = mckay_report(ctx.decomposition());
  json out;
  out["class_count"] = r.class_count;
  out["label"] = "age-graded dimension table";
  out["table"] = table_json(r.table);
  out["predicted_betti"] = r.predicted_betti;
  out["matches"] = r.class_count == r.table.total();
  return {out};
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) j["counterexample"] = c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"subject", r.subject}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

Outcome cmd_verify(const Context& ctx, const std::optional<InputSpec>& spec) {
  std::vector<VerificationReport> reports;
  if (!spec) {
    reports = verify_builtin_corpus();
  } else if (spec->is_matrix_group()) {
    reports = verify_matrix_group(spec->name.value_or("input"), ctx.matrix());
  } else {
    reports = verify_wps(spec->weighted_projective().weights);
  }
  json out;
  out["reports"] = json::array();
  std::size_t failed = 0, cases = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    for (const auto& c : r.checks) cases += c.cases;
    out["reports"].push_back(report_json(r));
  }
  out["passed"] = failed == 0;
  out["failed_reports"] = failed;
  out["total_reports"] = reports.size();
  out["total_cases"] = cases;
  return {out, failed == 0 ? kExitOk : kExitVerifyFailed};
}

using Handler = std::function<Outcome(const Context&, const std::optional<InputSpec>&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = [] {
    std::map<std::string, Handler> t;
    const auto simple = [](Outcome (*f)(const Context&)) {
      return [f](const Context& c, const std::optional<InputSpec>&) { return f(c); };
    };
    t["sectors"] = simple(cmd_sectors);
    t["poincare"] = simple(cmd_poincare);
    t["euler"] = simple(cmd_euler);
    t["ring"] = simple(cmd_ring);
    t["pairing"] = simple(cmd_pairing);
    t["threepoint"] = simple(cmd_threepoint);
    t["kpoint"] = simple(cmd_kpoint);
    t["goodmap"] = simple(cmd_goodmap);
    t["lifts"] = simple(cmd_lifts);
    t["vdim"] = simple(cmd_vdim);
    t["mckay"] = simple(cmd_mckay);
    t["verify"] = cmd_verify;
    return t;
  }();
  return table;
}

CommandResult error_result(std::string_view code, const std::string& message, int exit_code) {
  json out{{"error", std::string(code)}, {"message", message}};
  return {out.dump(2) + "\n", exit_code};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"sectors", "poincare",   "euler",  "ring",   "pairing", "threepoint",
                                                 "kpoint",  "goodmap",    "lifts",  "vdim",   "mckay",   "verify"};
  return names;
}

CommandResult run_command(const std::string& command, const std::optional<InputSpec>& spec,
                          const CommandOptions& options) {
  try {
    const auto it = handlers().find(command);
    if (it == handlers().end()) throw Error(ErrorCode::UnknownCommand, "unknown command \"" + command + "\"");
    const Context ctx(spec, options);
    Outcome o = it->second(ctx, spec);
    return {o.body.dump(2) + "\n", o.exit_code};
  } catch (const Error& e) {
    // A broken internal invariant is a verification failure, not bad input.
    const int code = e.code() == ErrorCode::InternalInconsistency ? kExitVerifyFailed : kExitInputError;
    return error_result(to_string(e.code()), e.what(), code);
  } catch (const std::exception& e) {
    return error_result("InvalidArgument", e.what(), kExitInputError);
  }
}

CommandResult run_command_on_text(const std::string& command, const std::optional<std::string>& text,
                                  const CommandOptions& options) {
  std::optional<InputSpec> spec;
  if (text) {
    try {
      spec = parse_input(*text);
    } catch (const Error& e) {
      return error_result(to_string(e.code()), e.what(), kExitInputError);
    }
  }
  return run_command(command, spec, options);
}

CommandResult run_command_on_file(const std::string& command, const std::optional<std::string>& path,
                                  const CommandOptions& options) {
  if (!path) return run_command(command, std::nullopt, options);
  std::ifstream in(*path, std::ios::binary);
  if (!in) return error_result("InvalidArgument", "cannot read " + *path, kExitInputError);
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_command_on_text(command, buf.str(), options);
}

}  // namespace orbk
