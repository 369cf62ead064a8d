#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "glab/chevalley.hpp"
#include "glab/error.hpp"
#include "glab/extensions.hpp"
#include "glab/groupcore.hpp"
#include "glab/modular.hpp"
#include "glab/parse.hpp"
#include "glab/permfact.hpp"
#include "glab/text.hpp"
#include "glab/thickset.hpp"

namespace glab::cli {

using nlohmann::json;

nlohmann::json to_json(const TaskConfig& c) {
  json j;
  j["task"] = c.task;
  j["group"] = c.group;
  j["sets"] = c.sets;
  j["numbers"] = c.numbers;
  j["strings"] = c.strings;
  j["seed"] = c.seed;
  j["format"] = c.format;
  j["dir"] = c.dir;
  return j;
}

TaskConfig config_from_json(const nlohmann::json& j) {
  try {
    TaskConfig c;
    c.task = j.at("task").get<std::string>();
    c.group = j.value("group", std::string());
    c.sets = j.value("sets", std::map<std::string, std::string>{});
    c.numbers = j.value("numbers", std::map<std::string, std::int64_t>{});
    c.strings = j.value("strings", std::map<std::string, std::string>{});
    c.seed = j.value("seed", std::uint64_t{1});
    c.format = j.value("format", std::string("json"));
    c.dir = j.value("dir", std::string());
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_parameters, std::string("bad task config: ") + e.what());
  }
}

namespace {

// Task context shared by the handlers.
struct Ctx {
  const TaskConfig& cfg;
  json results = json::object();
  int exit_code = kPass;

  std::filesystem::path dir() const { return cfg.dir; }
  std::int64_t num(const std::string& key, std::int64_t fallback) const {
    auto it = cfg.numbers.find(key);
    return it == cfg.numbers.end() ? fallback : it->second;
  }
  std::int64_t num(const std::string& key) const {
    auto it = cfg.numbers.find(key);
    if (it == cfg.numbers.end()) throw Error(ErrorCode::invalid_parameters, "missing --" + key);
    return it->second;
  }
  std::string str(const std::string& key) const {
    auto it = cfg.strings.find(key);
    if (it == cfg.strings.end() || it->second.empty()) throw Error(ErrorCode::invalid_parameters, "missing --" + key);
    return it->second;
  }
  std::string set(const std::string& key) const {
    auto it = cfg.sets.find(key);
    if (it == cfg.sets.end() || it->second.empty()) throw Error(ErrorCode::invalid_parameters, "missing --" + key);
    return it->second;
  }
  GroupPtr group() const {
    if (cfg.group.empty()) throw Error(ErrorCode::invalid_parameters, "missing --group");
    auto cap = static_cast<std::size_t>(num("order_cap", static_cast<std::int64_t>(kDefaultOrderCap)));
    return build_group(parse_group_spec(cfg.group, dir(), cap), cap);
  }
  void fail() { exit_code = std::max(exit_code, static_cast<int>(kPropertyFailure)); }
  void cap_exceeded() {
    if (exit_code == kPass) exit_code = kCapExceeded;
  }
};

// Product recomputed from element forms through the model, bypassing the
// group's multiplication table.
Index replay_mul(const FiniteGroup& g, Index a, Index b) {
  Form out(g.form(a).size());
  g.model().multiply(g.form(a).data(), g.form(b).data(), out.data());
  return g.index_of(out);
}

Index replay_inv(const FiniteGroup& g, Index a) {
  Form out(g.form(a).size());
  g.model().invert(g.form(a).data(), out.data());
  return g.index_of(out);
}

json elements(const GroupPtr& g, const std::vector<Index>& xs) {
  json out = json::array();
  for (Index x : xs) out.push_back(g->format(x));
  return out;
}

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::int64_t field_prime(const Ctx& c) {
  auto p = c.num("p");
  if (!is_prime(p)) throw Error(ErrorCode::invalid_parameters, "--p " + std::to_string(p) + " is not prime");
  return p;
}

Matrix torus(const std::string& text, int n, std::int64_t p) {
  auto d = text::parse_int_list(text);
  if (static_cast<int>(d.size()) != n)
    throw Error(ErrorCode::invalid_parameters, "--t needs " + std::to_string(n) + " diagonal entries");
  auto t = Matrix::diagonal(p, d);
  if (!t.is_special()) throw Error(ErrorCode::invalid_parameters, "--t " + text + " does not have determinant 1");
  return t;
}

std::string matrix_text(const Matrix& m) { return m.to_string(); }

// ---- chevalley

void chevalley_verify_relations(Ctx& c) {
  int n = static_cast<int>(c.num("n"));
  auto p = field_prime(c);
  bool fact = c.num("factorization", 1) != 0;
  auto rep = verify_relations(n, p, fact);
  json signs = json::array();
  for (const auto& [pair, s] : rep.signs)
    signs.push_back({{"alpha", to_string(pair.first)}, {"beta", to_string(pair.second)}, {"constant", s}});
  c.results = {{"group", "SL(" + std::to_string(n) + "," + std::to_string(p) + ")"},
               {"torus", {{"checks", rep.torus_checks}, {"failures", rep.torus_failures}}},
               {"pairing", {{"checks", rep.pairing_checks}, {"failures", rep.pairing_failures}}},
               {"commutator", {{"checks", rep.commutator_checks}, {"failures", rep.commutator_failures}}},
               {"structure_constants", signs},
               {"factorization",
                {{"checked", fact},
                 {"count", rep.factorization_count},
                 {"bijective", rep.factorization_bijective},
                 {"roundtrip", rep.factorization_roundtrip}}},
               {"all_pass", fact ? rep.all_pass()
                                 : rep.torus_failures == 0 && rep.pairing_failures == 0 && rep.commutator_failures == 0}};
  if (!c.results["all_pass"].get<bool>()) c.fail();
}

void chevalley_class_cube(Ctx& c) {
  int n = static_cast<int>(c.num("n"));
  auto p = field_prime(c);
  int cap = static_cast<int>(c.num("cap", 8));
  auto g = build_group(*make_spec(SpecialLinearSpec{n, p}));
  auto classes = conjugacy_classes(g);
  std::string ts = c.str("t");
  std::vector<Matrix> ts_list;
  if (ts == "all") {
    for (const auto& t : diagonal_elements(n, p))
      if (is_regular(t)) ts_list.push_back(t);
  } else {
    ts_list.push_back(torus(ts, n, p));
  }
  json rows = json::array();
  bool all = true;
  for (const auto& t : ts_list) {
    auto r = class_cube(classes, t, cap);
    std::string diag;
    for (int i = 0; i < n; ++i) diag += (i ? "," : "") + std::to_string(t(i, i));
    rows.push_back({{"t", diag},
                    {"class_size", r.class_size},
                    {"square_covers_noncentral", r.square_covers_noncentral},
                    {"cube_is_group", r.cube_is_group},
                    {"min_power", r.min_power ? json(*r.min_power) : json(nullptr)},
                    {"covers", r.covers()}});
    all = all && r.covers();
  }
  c.results = {{"group", format_spec(g->spec())}, {"order", g->order()}, {"rows", rows}, {"covers", all}};
  if (!all) c.fail();
}

Matrix read_matrix(const Ctx& c, const std::string& key, std::int64_t p) {
  std::string text = c.str(key);
  std::filesystem::path path = c.dir() / text;
  if (std::filesystem::is_regular_file(path)) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = std::string(text::trim(ss.str()));
  }
  auto v = text::parse_int_list(text::strip_enclosing(text::trim(text), '[', ']'));
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
  if (n < 1 || static_cast<std::size_t>(n * n) != v.size())
    throw Error(ErrorCode::invalid_parameters, "--" + key + " is not a square matrix");
  std::vector<std::int32_t> entries;
  for (auto x : v) entries.push_back(static_cast<std::int32_t>(mod(x, p)));
  return Matrix(n, p, entries);
}

void chevalley_gauss(Ctx& c) {
  auto p = field_prime(c);
  Matrix g = read_matrix(c, "g", p);
  int n = g.n();
  Matrix t = torus(c.str("t"), n, p);
  auto grp = build_group(*make_spec(SpecialLinearSpec{n, p}));
  c.results = {{"group", format_spec(grp->spec())}, {"g", matrix_text(g)}, {"t", matrix_text(t)}};
  try {
    auto r = gauss_prescribed(grp, g, t);
    // replay with plain matrix arithmetic
    bool ok = r.x.inverse() * g * r.x == r.v * t * r.u && r.v.is_lower_unitriangular() && r.u.is_upper_unitriangular();
    c.results["found"] = true;
    c.results["x"] = matrix_text(r.x);
    c.results["v"] = matrix_text(r.v);
    c.results["u"] = matrix_text(r.u);
    c.results["conjugators_tried"] = r.tried;
    c.results["verified"] = ok;
    if (!ok) c.fail();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::search_exhausted) throw;
    c.results["found"] = false;
    c.results["search_exhausted"] = e.what();
    c.fail();
  }
}

// ---- thick

void thick_analyze(Ctx& c) {
  auto g = c.group();
  auto p = parse_subset(g, c.set("set"), c.dir());
  auto cap = static_cast<std::size_t>(c.num("cap", 64));
  auto budget = static_cast<std::size_t>(c.num("node_budget", static_cast<std::int64_t>(kCliqueNodeBudget)));
  if (!p.is_symmetric()) throw Error(ErrorCode::not_symmetric, "--set is not closed under inverses");

  auto th = thickness(p, kExactCliqueLimit, budget);
  bool free = is_p_free(p, th.witness);
  // replay the witness quotients through the element model
  for (std::size_t i = 0; free && i < th.witness.size(); ++i)
    for (std::size_t j = i + 1; j < th.witness.size(); ++j)
      if (p.test(replay_mul(*g, replay_inv(*g, th.witness[i]), th.witness[j]))) free = false;
  json thick = {{"status", th.status == ThicknessStatus::exact ? "exact" : "lower_bound_only"},
                {"value", th.value ? json(*th.value) : json("infinite")},
                {"witness", elements(g, th.witness)},
                {"witness_verified", free}};
  if (!free) c.fail();
  if (th.status != ThicknessStatus::exact) c.cap_exceeded();

  auto pc = power_cover(p, cap);
  json cover = {{"power", optional_size(pc.power)}, {"generated_order", pc.generated.count()}};
  if (!pc.power && pc.generated.full()) c.cap_exceeded();

  json gen = nullptr;
  json certs = json::object();
  if (auto gr = genericity(p, cap)) {
    gen = {{"m", gr->m}, {"translators", elements(g, gr->translators)}, {"exact", gr->exact}};
    if (!gr->exact) c.cap_exceeded();
    if (p.test(g->identity())) {
      auto cert = generic_subgroup_certificate(p, cap);
      certs["generic_subgroup"] = {{"m", cert.m},
                                   {"exponent", cert.exponent},
                                   {"subgroup_order", cert.subgroup.count()},
                                   {"index", cert.index},
                                   {"closed_under_product", cert.closed_under_product},
                                   {"closed_under_inverse", cert.closed_under_inverse},
                                   {"holds", cert.holds()}};
      if (!cert.holds()) c.fail();
    }
  }
  if (c.num("probe", 0) != 0 && p.test(g->identity())) {
    auto probe = normal_core_probe(p);
    certs["normal_core_probe"] = {
        {"core_size", probe.core.count()},
        {"core_thickness", probe.core_thickness.value ? json(*probe.core_thickness.value) : json("infinite")},
        {"note", "observation only"}};
  }
  c.results = {{"group", format_spec(g->spec())},
               {"order", g->order()},
               {"set_size", p.count()},
               {"contains_identity", p.test(g->identity())},
               {"thickness", thick},
               {"power_cover", cover},
               {"genericity", gen},
               {"certificates", certs}};
}

void thick_simplicity(Ctx& c) {
  auto g = c.group();
  auto cap = static_cast<std::size_t>(c.num("cap", 64));
  auto classes = conjugacy_classes(g);
  auto depths = class_cover_depths(classes, cap);
  json rows = json::array();
  for (std::size_t k = 0; k < classes.count(); ++k)
    rows.push_back({{"class", k},
                    {"representative", g->format(classes.representatives[k])},
                    {"size", classes.elements_of(k).size()},
                    {"depth", optional_size(depths[k])}});
  c.results = {{"group", format_spec(g->spec())}, {"order", g->order()}, {"rows", rows}};
  if (is_abelian(g)) {
    c.results["degree"] = nullptr;
    c.results["note"] = "abelian group: bounded simplicity is degenerate";
    return;
  }
  auto d = bounded_simplicity_degree(g, cap);
  c.results["degree"] = optional_size(d.degree);
  if (d.witness) {
    c.results["witness"] = g->format(*d.witness);
    c.results["witness_closure_size"] = d.witness_closure.count();
  }
  if (is_simple_nonabelian(g)) c.results["covering_number"] = optional_size(covering_number(g, cap).value);
}

// ---- perm

void perm_identities(Ctx& c) {
  int n = static_cast<int>(c.num("n", 12));
  int m = static_cast<int>(c.num("max_m", 3));
  auto limit = static_cast<std::size_t>(c.num("exhaustive_limit", 4'000'000));
  auto sample = static_cast<std::size_t>(c.num("sample", 100'000));
  auto sw = sweep_identities(n, m, limit, sample, c.cfg.seed);
  c.results = {{"n", n},
               {"max_param", m},
               {"cycle_quotient", {{"checks", sw.cycle_quotient_checks}, {"failures", sw.cycle_quotient_failures}}},
               {"odd_cycle_merge", {{"checks", sw.odd_merge_checks}, {"failures", sw.odd_merge_failures}}},
               {"odd_quotients", {{"checked", sw.odd_results_checked}, {"even", sw.odd_results_even}}},
               {"shapes_sampled", sw.shapes_sampled},
               {"exhaustive_limit", limit},
               {"sample", sample}};
  if (sw.cycle_quotient_failures || sw.odd_merge_failures || sw.odd_results_even != sw.odd_results_checked) c.fail();
}

void perm_express(Ctx& c) {
  int n = static_cast<int>(c.num("n"));
  auto g = build_group(*make_spec(AlternatingSpec{n}));
  auto classes = conjugacy_classes(g);
  auto p = parse_subset(g, c.set("set"), c.dir());
  auto sigma = Permutation::parse(c.str("sigma"), n);
  if (!sigma.is_even()) throw Error(ErrorCode::invalid_parameters, "sigma " + sigma.to_string() + " is odd");
  Index s = g->index_of(sigma.form());
  auto e = express_even(classes, p, s);
  auto q1 = Permutation::from_form(g->form(e.q1));
  auto q2 = Permutation::from_form(g->form(e.q2));
  bool ok = q1 * q2 == sigma && p.test(e.q1) && p.test(e.q2);
  json coll = json::array();
  for (const auto& w : e.collisions) {
    ok = ok && p.test(g->index_of(w.quotient.form()));
    coll.push_back({{"cycle_lengths", w.cycle_lengths},
                    {"thickness", w.thickness},
                    {"first", w.first},
                    {"second", w.second},
                    {"quotient", w.quotient.to_string()}});
  }
  c.results = {{"n", n},
               {"set_size", p.count()},
               {"sigma", sigma.to_string()},
               {"q1", q1.to_string()},
               {"q2", q2.to_string()},
               {"path", std::string(to_string(e.path))},
               {"collisions", coll},
               {"verified", ok}};
  if (!ok) c.fail();
}

void perm_distance(Ctx& c) {
  int n = static_cast<int>(c.num("n"));
  auto cap = static_cast<std::size_t>(c.num("cap", 8));
  auto sigma = Permutation::parse(c.str("sigma"), n);
  auto tau = Permutation::parse(c.str("tau"), n);
  auto d = class_word_distance(n, sigma, tau, cap);
  c.results = {{"n", n}, {"sigma", sigma.to_string()}, {"tau", tau.to_string()}, {"cap", cap}, {"distance", optional_size(d)}};
  if (!d) c.cap_exceeded();
}

// ---- ext

Extension extension(const Ctx& c) {
  auto base = c.group();
  auto h = read_cocycle_file(base, c.dir() / c.str("cocycle"));
  return build_extension(h);
}

void ext_build(Ctx& c) {
  auto e = extension(c);
  auto f = check_formulas(e);
  auto pr = check_projection(e);
  c.results = {{"base", format_spec(e.cocycle.base->spec())},
               {"p", e.cocycle.p},
               {"order", e.group->order()},
               {"identity", e.group->format(e.group->identity())},
               {"image", e.cocycle.image()},
               {"formulas", {{"identity_ok", f.identity_ok}, {"elements", f.elements}, {"inverse_failures", f.inverse_failures}}},
               {"projection",
                {{"homomorphism", pr.homomorphism},
                 {"surjective", pr.surjective},
                 {"kernel_order", pr.kernel_order},
                 {"kernel_central", pr.kernel_central}}}};
  if (is_abelian(e.group)) c.results["abelian_invariants"] = abelian_invariants(e.group);
  if (!f.holds() || !pr.holds(e.cocycle.p)) c.fail();
}

void ext_split(Ctx& c) {
  auto e = extension(c);
  auto s = split_check(e);
  c.results = {{"base", format_spec(e.cocycle.base->spec())},
               {"p", e.cocycle.p},
               {"splits", s.splits},
               {"tuples_tried", s.tuples_tried}};
  if (s.splits) {
    // a complement must have order |H| and meet every fibre once
    std::vector<char> hit(e.cocycle.base->order(), 0);
    bool ok = s.complement->count() == e.cocycle.base->order();
    s.complement->for_each([&](Index x) {
      auto& h = hit[static_cast<std::size_t>(e.base_of(x))];
      if (h) ok = false;
      h = 1;
    });
    ok = ok && is_subgroup(*s.complement);
    c.results["complement_generators"] = elements(e.group, s.generator_lifts);
    c.results["complement_verified"] = ok;
    if (!ok) c.fail();
  }
}

void ext_bound(Ctx& c) {
  auto e = extension(c);
  auto nmax = static_cast<std::size_t>(c.num("n", 4));
  json rows = json::array();
  bool all = true;
  for (std::size_t n = 1; n <= nmax; ++n) {
    auto b = image_bound_check(e, n);
    rows.push_back({{"n", n},
                    {"observed", b.observed},
                    {"bound", b.bound},
                    {"contained", b.contained},
                    {"outer_bound", b.outer_bound},
                    {"contained_outer", b.contained_outer},
                    {"power_is_group", b.power_is_group}});
    all = all && b.contained;
  }
  c.results = {{"base", format_spec(e.cocycle.base->spec())},
               {"p", e.cocycle.p},
               {"image", e.cocycle.image()},
               {"rows", rows},
               {"contained", all}};
  if (!all) c.fail();
}

void ext_iwasawa(Ctx& c) {
  auto g = c.group();
  auto a = parse_subset(g, c.set("a"), c.dir());
  auto b = parse_subset(g, c.set("b"), c.dir());
  auto samples = static_cast<std::size_t>(c.num("samples", 10000));
  auto cert = iwasawa_certificate(a, b, samples, c.cfg.seed);
  json prem = json::array();
  for (const auto& p : cert.premises) prem.push_back({{"name", p.name}, {"holds", p.holds}, {"detail", p.detail}});
  c.results = {{"group", format_spec(g->spec())},
               {"premises", prem},
               {"commutator_width", cert.n},
               {"derived_length", cert.m},
               {"bound", cert.bound},
               {"k_min", optional_size(cert.k_min)},
               {"search_cap", cert.search_cap},
               {"commutator_identity",
                {{"checked", cert.identity.checked},
                 {"failures", cert.identity.failures},
                 {"literal_failures", cert.identity.literal_failures}}},
               {"holds", cert.holds()}};
  if (!cert.holds()) c.fail();
}

void group_info(Ctx& c) {
  auto g = c.group();
  auto rep = structure_report(g);
  auto classes = conjugacy_classes(g);
  c.results = {{"group", format_spec(g->spec())},
               {"order", g->order()},
               {"classes", classes.count()},
               {"center_order", rep.center.count()},
               {"derived_order", rep.derived.count()},
               {"perfect", rep.is_perfect},
               {"abelianization", rep.abelianization}};
  if (g->order() <= static_cast<std::size_t>(c.num("cw_limit", 20000)))
    c.results["commutator_width"] = commutator_width(g);
}

using Handler = std::function<void(Ctx&)>;

const std::map<std::string, std::pair<Handler, std::string>>& handlers() {
  static const std::map<std::string, std::pair<Handler, std::string>> table{
      {"chevalley.verify-relations", {chevalley_verify_relations, "Steinberg relations and unipotent factorization in SL(n,p)"}},
      {"chevalley.class-cube", {chevalley_class_cube, "C^2 and C^3 for the class of a regular diagonal t"}},
      {"chevalley.gauss", {chevalley_gauss, "g^x = v t u with prescribed torus part"}},
      {"thick.analyze", {thick_analyze, "thickness, power cover and genericity of a symmetric set"}},
      {"thick.simplicity", {thick_simplicity, "class cover depths, bounded simplicity degree, covering number"}},
      {"perm.identities", {perm_identities, "cycle quotient and odd-cycle merge identities"}},
      {"perm.express", {perm_express, "sigma = q1 q2 with q1, q2 in a normal thick set of Alt(n)"}},
      {"perm.distance", {perm_distance, "least power of the class of sigma containing tau"}},
      {"ext.build", {ext_build, "central extension from a cocycle file"}},
      {"ext.split", {ext_split, "complement search"}},
      {"ext.bound", {ext_bound, "first-coordinate containment for powers of P = P'P'^-1"}},
      {"ext.iwasawa", {ext_iwasawa, "A^k = G certificate for a normal symmetric A and solvable B"}},
      {"group.info", {group_info, "order, center, derived subgroup, commutator width"}},
  };
  return table;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::order_cap_exceeded:
    case ErrorCode::out_of_table:
      return kCapExceeded;
    case ErrorCode::search_exhausted:
      return kPropertyFailure;
    default:
      return kInputError;
  }
}

const char* status_name(int code) {
  switch (code) {
    case kPass: return "pass";
    case kPropertyFailure: return "property_failure";
    case kInputError: return "input_error";
    default: return "cap_exceeded";
  }
}

}  // namespace

const std::map<std::string, std::string>& task_summaries() {
  static const std::map<std::string, std::string> out = [] {
    std::map<std::string, std::string> m;
    for (const auto& [k, v] : handlers()) m[k] = v.second;
    return m;
  }();
  return out;
}

Report run(const TaskConfig& config, bool with_timings) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.doc["schema"] = kSchema;
  r.doc["toolkit"] = std::string("glab ") + kVersion;
  r.doc["config"] = to_json(config);
  r.doc["seed"] = config.seed;
  Ctx ctx{config};
  try {
    auto it = handlers().find(config.task);
    if (it == handlers().end()) throw Error(ErrorCode::invalid_parameters, "unknown task '" + config.task + "'");
    it->second.first(ctx);
    r.doc["results"] = ctx.results;
    r.exit_code = ctx.exit_code;
  } catch (const SyntaxError& e) {
    r.doc["error"] = {{"code", "syntax_error"}, {"message", e.what()}, {"position", e.position()}, {"expected", e.expected()},
                      {"task", config.task}};
    r.exit_code = kInputError;
  } catch (const Error& e) {
    r.doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"task", config.task}};
    r.exit_code = exit_for(e.code());
  } catch (const std::logic_error& e) {
    // an internal consistency check failed
    r.doc["error"] = {{"code", "internal"}, {"message", e.what()}, {"task", config.task}};
    r.exit_code = kPropertyFailure;
  } catch (const std::exception& e) {
    r.doc["error"] = {{"code", "input"}, {"message", e.what()}, {"task", config.task}};
    r.exit_code = kInputError;
  }
  r.doc["status"] = status_name(r.exit_code);
  if (with_timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.doc["timings"] = {{"total_ms", std::round(ms * 1000) / 1000}};
  }
  return r;
}

namespace {

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string render(const Report& report, const std::string& format) {
  if (format == "csv") {
    const json* rows = nullptr;
    if (report.doc.contains("results") && report.doc["results"].contains("rows")) rows = &report.doc["results"]["rows"];
    if (!rows || rows->empty()) throw Error(ErrorCode::invalid_parameters, "csv output needs a task that produces rows");
    std::ostringstream out;
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows->front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const auto& row : *rows) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(row.value(keys[i], json(nullptr)));
      out << "\n";
    }
    return out.str();
  }
  if (format != "json") throw Error(ErrorCode::invalid_parameters, "unknown format '" + format + "'");
  return report.doc.dump(2) + "\n";
}

}  // namespace glab::cli
