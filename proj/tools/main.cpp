#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "glab/error.hpp"

using glab::cli::TaskConfig;

namespace {

struct Options {
  std::string out;
  std::string format = "json";
  std::string config_file;
  std::uint64_t seed = 1;
  bool no_timings = false;
  bool print_config = false;
};

// Registers a command whose flags fill `cfg`; numbers and strings are only
// recorded when given, so defaults stay with the task.
class Command {
 public:
  Command(CLI::App* app, TaskConfig& cfg, std::string task, std::vector<std::function<void()>>& finalizers)
      : app_(app), cfg_(cfg), task_(std::move(task)), finalizers_(finalizers) {}

  Command& group(const std::string& help = "group spec, e.g. SL(2,5)") {
    app_->add_option("--group", group_, help)->required();
    finalizers_.push_back([this] { if (app_->parsed()) cfg_.group = group_; });
    return *this;
  }
  Command& set(const std::string& name, const std::string& help) {
    auto& slot = sets_[name];
    app_->add_option("--" + name, slot, help)->required();
    finalizers_.push_back([this, name] { if (app_->parsed()) cfg_.sets[name] = sets_[name]; });
    return *this;
  }
  Command& number(const std::string& name, const std::string& help, bool required = false) {
    auto& slot = numbers_[name];
    auto* opt = app_->add_option("--" + dashed(name), slot, help);
    if (required) opt->required();
    finalizers_.push_back([this, name, opt] {
      if (app_->parsed() && opt->count() > 0) cfg_.numbers[name] = numbers_[name];
    });
    return *this;
  }
  Command& text(const std::string& name, const std::string& help, bool required = true) {
    auto& slot = strings_[name];
    auto* opt = app_->add_option("--" + name, slot, help);
    if (required) opt->required();
    finalizers_.push_back([this, name, opt] {
      if (app_->parsed() && opt->count() > 0) cfg_.strings[name] = strings_[name];
    });
    return *this;
  }
  void done() {
    finalizers_.push_back([this] { if (app_->parsed()) cfg_.task = task_; });
  }

 private:
  static std::string dashed(std::string s) {
    for (auto& c : s)
      if (c == '_') c = '-';
    return s;
  }
  CLI::App* app_;
  TaskConfig& cfg_;
  std::string task_;
  std::vector<std::function<void()>>& finalizers_;
  std::string group_;
  std::map<std::string, std::string> sets_;
  std::map<std::string, std::int64_t> numbers_;
  std::map<std::string, std::string> strings_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glab: finite checks for thick sets, Chevalley generators, permutation factorizations and cocycle extensions"};
  app.require_subcommand(0, 1);
  Options opt;
  TaskConfig cfg;
  app.add_option("--out", opt.out, "write the report here instead of stdout");
  app.add_option("--format", opt.format, "json or csv (csv only for tasks with rows)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", opt.seed, "seed for randomized searches");
  app.add_option("--config", opt.config_file, "run a task config saved as JSON");
  app.add_flag("--no-timings", opt.no_timings, "omit the timings section");
  app.add_flag("--print-config", opt.print_config, "print the parsed task config and exit");
  bool list = false;
  app.add_flag("--list", list, "list tasks");

  std::vector<std::unique_ptr<Command>> commands;
  std::vector<std::function<void()>> fin;
  auto add = [&](CLI::App* module, const std::string& name, const std::string& help) {
    auto* sub = module->add_subcommand(name, help);
    sub->fallthrough();
    commands.push_back(std::make_unique<Command>(sub, cfg, module->get_name() + "." + name, fin));
    return commands.back().get();
  };

  auto* chev = app.add_subcommand("chevalley", "Steinberg generators in SL(n,p)");
  chev->require_subcommand(1);
  chev->fallthrough();
  add(chev, "verify-relations", "relations (*), (**) and the unipotent factorization")
      ->number("n", "matrix size", true)
      .number("p", "prime", true)
      .number("factorization", "0 skips the factorization sweep")
      .done();
  add(chev, "class-cube", "C^2 and C^3 for the class of a regular torus element")
      ->number("n", "matrix size", true)
      .number("p", "prime", true)
      .text("t", "diagonal entries, e.g. 2,3, or 'all' for every regular t")
      .number("cap", "largest power tried")
      .done();
  add(chev, "gauss", "g^x = v t u with prescribed t")
      ->number("p", "prime", true)
      .text("g", "matrix as comma-separated row-major residues, or a file holding them")
      .text("t", "diagonal entries")
      .done();

  auto* thick = app.add_subcommand("thick", "thick subsets");
  thick->require_subcommand(1);
  thick->fallthrough();
  add(thick, "analyze", "thickness, power cover, genericity")
      ->group()
      .set("set", "subset spec, e.g. arc(1)")
      .number("cap", "largest power tried")
      .number("node_budget", "clique search budget")
      .number("probe", "1 adds the normal core probe")
      .done();
  add(thick, "simplicity", "class cover depths and bounded simplicity")
      ->group()
      .number("cap", "largest power tried")
      .done();

  auto* perm = app.add_subcommand("perm", "permutation factorizations");
  perm->require_subcommand(1);
  perm->fallthrough();
  add(perm, "identities", "cycle quotient and odd-cycle merge sweep")
      ->number("n", "degree (default 12)")
      .number("max_m", "largest cycle parameter (default 3)")
      .number("exhaustive_limit", "labellings per shape before sampling")
      .number("sample", "labellings sampled per large shape")
      .done();
  add(perm, "express", "two-factor expression in Alt(n)")
      ->number("n", "degree", true)
      .set("set", "normal symmetric thick subset of Alt(n)")
      .text("sigma", "even permutation in cycle notation")
      .done();
  add(perm, "distance", "least k with tau in (sigma^Sym(n))^k")
      ->number("n", "degree", true)
      .text("sigma", "permutation in cycle notation")
      .text("tau", "permutation in cycle notation")
      .number("cap", "largest power tried")
      .done();

  auto* ext = app.add_subcommand("ext", "central extensions by 2-cocycles");
  ext->require_subcommand(1);
  ext->fallthrough();
  add(ext, "build", "build Z/p x_h H and check its formulas")
      ->group("base group H")
      .text("cocycle", "cocycle file")
      .done();
  add(ext, "split", "complement search")->group("base group H").text("cocycle", "cocycle file").done();
  add(ext, "bound", "first-coordinate containment for P^n")
      ->group("base group H")
      .text("cocycle", "cocycle file")
      .number("n", "largest power (default 4)")
      .done();
  add(ext, "iwasawa", "A^k = G certificate")
      ->group()
      .set("a", "normal symmetric subset A")
      .set("b", "solvable subgroup B")
      .number("samples", "random quadruples for the commutator identity")
      .done();

  auto* grp = app.add_subcommand("group", "group structure");
  grp->require_subcommand(1);
  grp->fallthrough();
  add(grp, "info", "order, center, derived subgroup, commutator width")->group().done();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : glab::cli::kInputError;
  }

  if (list) {
    for (const auto& [k, v] : glab::cli::task_summaries()) std::cout << k << "  " << v << "\n";
    return 0;
  }
  for (auto& f : fin) f();
  if (!opt.config_file.empty()) {
    std::ifstream in(opt.config_file);
    if (!in) {
      std::cerr << "glab: cannot open " << opt.config_file << "\n";
      return glab::cli::kInputError;
    }
    try {
      cfg = glab::cli::config_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "glab: " << e.what() << "\n";
      return glab::cli::kInputError;
    }
  } else {
    if (cfg.task.empty()) {
      std::cerr << app.help();
      return glab::cli::kInputError;
    }
    cfg.seed = opt.seed;
    cfg.format = opt.format;
  }
  if (opt.print_config) {
    std::cout << glab::cli::to_json(cfg).dump(2) << "\n";
    return 0;
  }

  auto report = glab::cli::run(cfg, !opt.no_timings);
  std::string body;
  try {
    body = glab::cli::render(report, report.doc.contains("results") ? cfg.format : "json");
  } catch (const glab::Error& e) {
    std::cerr << "glab: " << e.what() << "\n";
    return glab::cli::kInputError;
  }
  if (opt.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "glab: cannot write " << opt.out << "\n";
      return glab::cli::kInputError;
    }
    out << body;
  }
  if (report.doc.contains("error")) std::cerr << "glab: " << report.doc["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}
