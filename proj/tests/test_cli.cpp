#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "glab/parse.hpp"

using namespace glab;
using glab::cli::TaskConfig;

namespace {

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "glab_test_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p);
  out << body;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t syntax_position(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  return std::string::npos;
}

TaskConfig task(std::string name) {
  TaskConfig c;
  c.task = std::move(name);
  return c;
}

}  // namespace

TEST_CASE("group spec grammar") {
  auto sl = parse_group_spec("SL(2,5)");
  const auto* s = std::get_if<SpecialLinearSpec>(&sl->value);
  REQUIRE(s);
  CHECK(s->n == 2);
  CHECK(s->p == 5);
  CHECK(std::get<AlternatingSpec>(parse_group_spec("Alt(7)")->value).n == 7);
  CHECK(std::get<AbelianSpec>(parse_group_spec(" Ab( 4 , 2 ) ")->value).factors == std::vector<int>{4, 2});

  try {
    parse_group_spec("SL(2,4)");
    FAIL("SL(2,4) accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_parameters);
  }
  CHECK(syntax_position("SL(2,5") == 6);
  CHECK(syntax_position("Foo(3)") == 0);
  CHECK(syntax_position("Product(Sym(3),Alt(x))") == 19);
  CHECK(syntax_position("Cyc(3) extra") == 7);

  for (const char* text : {"Cyc(12)", "Ab(4,2)", "Sym(4)", "Alt(5)", "SL(3,3)", "Semidirect(2,3)",
                           "Quotient(SL(2,5),center)", "Product(Alt(5),Sym(3))"}) {
    auto once = parse_group_spec(text);
    auto twice = parse_group_spec(format_spec(*once));
    CHECK(*once == *twice);
    CHECK(format_spec(*twice) == text);
  }
}

TEST_CASE("file references in specs") {
  auto dir = scratch();
  write(dir / "z4.txt", "p 2\n# h(1,1) = 1\n0 0 0\n0 1 0\n1 0 0\n1 1 1\n");
  auto spec = parse_group_spec("CocycleExt(2,Cyc(2),z4.txt)", dir);
  auto g = build_group(spec);
  CHECK(g->order() == 4);
  CHECK(format_spec(*spec) == "CocycleExt(2,Cyc(2),z4.txt)");
  CHECK(*parse_group_spec(format_spec(*spec), dir) == *spec);

  write(dir / "short.txt", "p 2\n0 0 0\n");
  try {
    parse_group_spec("CocycleExt(2,Cyc(2),short.txt)", dir);
    FAIL("incomplete table accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::table_incomplete);
  }
  write(dir / "bad.txt", "p 2\n0 0\n");
  try {
    read_cocycle_file(build_group(*make_spec(CyclicSpec{2})), dir / "bad.txt");
    FAIL("malformed line accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }

  write(dir / "v4.txt", "e\n(1,2)(3,4)\n(1,3)(2,4)\n(1,4)(2,3)\n");
  auto q = build_group(parse_group_spec("Quotient(Sym(4),v4.txt)", dir));
  CHECK(q->order() == 6);
}

TEST_CASE("subset grammar") {
  auto c12 = build_group(*make_spec(CyclicSpec{12}));
  CHECK(parse_subset(c12, "arc(1)").count() == 3);
  CHECK(parse_subset(c12, "ball(2,2)").count() == 5);
  CHECK(parse_subset(c12, "sym(elems(1,2))").count() == 4);
  CHECK(parse_subset(c12, "union(arc(1),elems(6))").count() == 4);
  CHECK(parse_subset(c12, "complement(e)").count() == 11);
  CHECK(parse_subset(c12, "all").full());

  auto sl = build_group(*make_spec(SpecialLinearSpec{2, 5}));
  CHECK(parse_subset(sl, "class([0,1,4,0])").count() == 30);
  CHECK(parse_subset(sl, "borel()").count() == 20);
  CHECK(parse_subset(sl, "normal(elems([0,1,4,0]))").count() == 30);

  try {
    parse_subset(c12, "union(arc(1),arc(2)");
    FAIL("unclosed union accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 19);
  }
  try {
    parse_subset(sl, "arc(1)");
    FAIL("arc accepted outside a cyclic group");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_parameters);
  }
}

TEST_CASE("task config round trip") {
  TaskConfig c = task("thick.analyze");
  c.group = "Cyc(12)";
  c.sets["set"] = "arc(1)";
  c.numbers["cap"] = 10;
  c.seed = 99;
  CHECK(cli::config_from_json(cli::to_json(c)) == c);
  CHECK(cli::config_from_json(nlohmann::json::parse(cli::to_json(c).dump())) == c);
}

TEST_CASE("report examples") {
  auto cube = task("chevalley.class-cube");
  cube.numbers = {{"n", 2}, {"p", 5}};
  cube.strings["t"] = "2,3";
  auto r = cli::run(cube);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.doc["results"]["covers"] == true);
  CHECK(r.doc["schema"] == cli::kSchema);

  auto thick = task("thick.analyze");
  thick.group = "Cyc(12)";
  thick.sets["set"] = "arc(1)";
  r = cli::run(thick);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.doc["results"]["thickness"]["value"] == 7);
  CHECK(r.doc["results"]["power_cover"]["power"] == 6);

  auto rel = task("chevalley.verify-relations");
  rel.numbers = {{"n", 3}, {"p", 5}, {"factorization", 0}};
  r = cli::run(rel);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.doc["results"]["all_pass"] == true);

  auto sweep = task("chevalley.class-cube");
  sweep.numbers = {{"n", 2}, {"p", 7}};
  sweep.strings["t"] = "all";
  r = cli::run(sweep);
  CHECK(r.doc["results"]["rows"].size() == 4);
  auto csv = cli::render(r, "csv");
  CHECK(csv.rfind("class_size,covers,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("exit codes") {
  auto bad = task("thick.analyze");
  bad.group = "Cyc(12";
  bad.sets["set"] = "arc(1)";
  auto r = cli::run(bad);
  CHECK(r.exit_code == cli::kInputError);
  CHECK(r.doc["error"]["position"] == 6);
  CHECK_FALSE(r.doc.contains("results"));

  auto asym = task("thick.analyze");
  asym.group = "Cyc(12)";
  asym.sets["set"] = "elems(0,1)";
  CHECK(cli::run(asym).exit_code == cli::kInputError);

  auto big = task("group.info");
  big.group = "Sym(9)";
  big.numbers["order_cap"] = 1000;
  r = cli::run(big);
  CHECK(r.exit_code == cli::kCapExceeded);
  CHECK(r.doc["error"]["code"] == "order_cap_exceeded");

  auto far = task("perm.distance");
  far.numbers = {{"n", 5}, {"cap", 1}};
  far.strings = {{"sigma", "(1,2,3)"}, {"tau", "(1,2,3,4,5)"}};
  CHECK(cli::run(far).exit_code == cli::kCapExceeded);

  auto unknown = task("nope");
  CHECK(cli::run(unknown).exit_code == cli::kInputError);

  // not perfect, so the Iwasawa premises fail
  auto iwa = task("ext.iwasawa");
  iwa.group = "Sym(4)";
  iwa.sets = {{"a", "all"}, {"b", "e"}};
  r = cli::run(iwa);
  CHECK(r.exit_code == cli::kInputError);
  CHECK(r.doc["error"]["code"] == "premise_violation");
}

TEST_CASE("same config and seed give identical results") {
  auto ids = task("perm.identities");
  ids.numbers = {{"n", 9}, {"max_m", 2}, {"exhaustive_limit", 1000}, {"sample", 200}};
  ids.seed = 5;
  auto a = cli::run(ids), b = cli::run(ids);
  CHECK(a.doc["results"].dump() == b.doc["results"].dump());
  CHECK(a.doc["results"]["shapes_sampled"].get<std::size_t>() > 0);
  CHECK(a.doc["seed"] == 5);
}

#ifdef GLAB_EXE
TEST_CASE("binary writes byte-identical reports") {
  auto dir = scratch();
  std::string exe = GLAB_EXE;
  auto cmd = [&](const std::string& out) {
    return exe + " thick analyze --group 'Alt(5)' --set 'union(e,class((1,2)(3,4)))' --seed 3 --no-timings --out " +
           (dir / out).string();
  };
  REQUIRE(std::system(cmd("one.json").c_str()) == 0);
  REQUIRE(std::system(cmd("two.json").c_str()) == 0);
  CHECK(slurp(dir / "one.json") == slurp(dir / "two.json"));
  CHECK(std::system((exe + " thick analyze --group 'SL(2,4)' --set e --out " + (dir / "x.json").string() +
                     " 2>/dev/null").c_str()) != 0);
}
#endif
