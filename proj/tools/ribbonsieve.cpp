// Command-line front end. Results go to stdout as JSON lines; wall time goes to stderr
// so that reports for equal inputs are byte-identical.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ribbonsieve/suites.hpp"

using namespace ribbonsieve;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string shape;
  std::string blocks;
  std::string tableau;
  std::string rect = "3x4";
  std::optional<int> r;
  std::optional<int> d;
  std::optional<int> n;
  int max_n = 16;
  int cases = 1000;
  std::optional<int> block_cases;
  std::uint64_t seed = 1;
  int power = 1;
  int truncation_order = kDefaultTruncationOrder;
  bool json = false;
};

Json parse_json_arg(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Malformed, std::string(flag) + " is not valid JSON: " + e.what());
  }
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::BadParameter, std::string(flag) + " is required");
  return *v;
}

AmbientRectangle rectangle_for(const Options& o, const SkewShape& shape) {
  if (o.d || o.n) return AmbientRectangle::make(require(o.d, "--d"), require(o.n, "--n"));
  // Smallest rectangle holding the outer shape.
  int d = shape.outer().length();
  return AmbientRectangle::make(d, d + shape.outer().part(0));
}

std::pair<int, int> parse_rect(const std::string& text) {
  auto x = text.find('x');
  try {
    if (x != std::string::npos) {
      std::size_t used1 = 0, used2 = 0;
      int rows = std::stoi(text.substr(0, x), &used1);
      int cols = std::stoi(text.substr(x + 1), &used2);
      if (used1 == x && used2 == text.size() - x - 1) return {rows, cols};
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::BadParameter, "--rect expects ROWSxCOLS, got " + text);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int finish(const VerificationReport& report, bool json) {
  if (json) {
    emit(report.to_json());
  } else {
    for (const auto& c : report.cases) std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << '\n';
    std::cout << (report.ok() ? "OK" : "FAILED") << ' ' << report.suite << '\n';
  }
  std::cerr << "wall_time_s " << report.wall_seconds << '\n';
  return report.ok() ? 0 : kExitFailure;
}

int cmd_enumerate(const std::string& kind, const Options& o) {
  SkewShape shape = skew_from_json(parse_json_arg(o.shape, "--shape"));
  long count = 0;
  if (kind == "syt") {
    for (const auto& t : enumerate_syt(shape)) emit(to_json(t)), ++count;
  } else if (kind == "srt") {
    for_each_srt(shape, require(o.r, "--r"), [&](const RibbonTableau& t) { emit(to_json(t)), ++count; });
  } else if (kind == "rrt" || kind == "rrt_hat") {
    AmbientRectangle rect = rectangle_for(o, shape);
    int r = require(o.r, "--r");
    auto list = kind == "rrt" ? enumerate_rrt(shape, r, rect) : enumerate_rrt_hat(shape, r, rect);
    for (const auto& t : list) emit(to_json(t)), ++count;
  } else if (kind == "classes") {
    Json bj = parse_json_arg(o.blocks, "--blocks");
    if (!bj.is_array()) throw Error(ErrorKind::Malformed, "--blocks must be an array of partitions");
    ShapeSequence blocks;
    for (const auto& b : bj) blocks.blocks.push_back(partition_from_json(b));
    for (const auto& cls : dual_equivalence_classes(shape, blocks)) {
      Json members = Json::array();
      for (const auto& t : cls) members.push_back(to_json(t));
      emit(Json{{"typed", has_type(cls.front(), blocks)}, {"size", cls.size()}, {"tableaux", members}});
      ++count;
    }
  } else {
    throw Error(ErrorKind::BadParameter, "unknown enumeration kind " + kind);
  }
  emit(Json{{"count", count}});
  return 0;
}

int cmd_verify(const std::string& suite, const Options& o) {
  if (suite == "csp" || suite == "dihedral") {
    RectangleFilter f{o.max_n, o.d, o.n, o.r};
    if (o.max_n < 1 || o.max_n > 20) throw Error(ErrorKind::BadParameter, "--max-N must lie in 1..20");
    return finish(suite == "csp" ? run_csp_suite(f) : run_dihedral_suite(f), o.json);
  }
  if (suite == "llt") {
    auto [rows, cols] = parse_rect(o.rect);
    return finish(run_llt_suite(rows, cols, o.r), o.json);
  }
  if (suite == "wronski") {
    WronskiParams p;
    p.cases = o.cases;
    p.block_cases = o.block_cases.value_or(o.cases);
    p.seed = o.seed;
    p.r = o.r;
    if (o.d || o.n) p.shapes = {{require(o.d, "--d"), require(o.n, "--n")}};
    return finish(run_wronski_suite(p), o.json);
  }
  if (suite == "puiseux") return finish(run_puiseux_suite(o.truncation_order, o.seed), o.json);
  throw Error(ErrorKind::BadParameter, "unknown suite " + suite);
}

int cmd_apply(const std::string& op, const Options& o) {
  StandardTableau t = tableau_from_json(parse_json_arg(o.tableau, "--tableau"));
  if (op == "promote") {
    emit(to_json(promote_power(t, o.power)));
  } else if (op == "promote-trace") {
    for (const auto& frame : promote_trace(t)) emit(to_json(frame));
  } else if (op == "evacuate") {
    emit(to_json(evacuate(t)));
  } else if (op == "rotate-complement") {
    emit(to_json(rotate_complement(t, rectangle_for(o, t.shape()))));
  } else if (op == "rectify") {
    emit(to_json(rectify(t)));
  } else if (op == "charge") {
    emit(Json{{"charge", t.shape().is_straight() ? charge(t) : charge_skew(t)}});
  } else {
    throw Error(ErrorKind::BadParameter, "unknown operation " + op);
  }
  return 0;
}

int cmd_abacus(const Options& o) {
  Partition lambda = partition_from_json(parse_json_arg(o.shape, "--shape"));
  int d = o.d.value_or(lambda.length());
  int r = require(o.r, "--r");
  Json j = to_json(core_quotient(lambda, d, r));
  j["abacus"] = to_json(to_abacus(lambda, d, r));
  j["epsilon"] = epsilon_sign(lambda, d, r);
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ribbon tableaux, cyclic sieving and Wronski-map verification"};
  app.require_subcommand(1);
  Options o;
  std::string kind, suite, op;

  auto* en = app.add_subcommand("enumerate", "Stream tableaux as JSON lines; the last line is the count");
  en->add_option("kind", kind, "syt | srt | rrt | rrt_hat | classes")->required();
  en->add_option("--shape", o.shape, "Partition array or {\"outer\":..,\"inner\":..}")->required();
  en->add_option("--r", o.r, "Ribbon length");
  en->add_option("--d", o.d, "Rectangle rows");
  en->add_option("--n", o.n, "Rectangle rows plus columns");
  en->add_option("--blocks", o.blocks, "Block shapes for classes, e.g. [[2,1],[2,1]]");
  en->add_flag("--json", o.json, "Accepted for symmetry; output is always JSON");

  auto* ve = app.add_subcommand("verify", "Run a verification suite and print its report");
  ve->add_option("suite", suite, "csp | dihedral | llt | wronski | puiseux")->required();
  ve->add_option("--max-N", o.max_n, "Largest N = d(n-d) for csp and dihedral");
  ve->add_option("--d", o.d, "Restrict to one rectangle or Grassmannian");
  ve->add_option("--n", o.n);
  ve->add_option("--r", o.r, "Restrict to one ribbon length");
  ve->add_option("--rect", o.rect, "Bounding rectangle ROWSxCOLS for llt");
  ve->add_option("--cases", o.cases, "Random cases per (d,n) for wronski");
  ve->add_option("--block-cases", o.block_cases, "Random block bases per (d,n); defaults to --cases");
  ve->add_option("--seed", o.seed, "Root seed for all randomness");
  ve->add_option("--truncation-order", o.truncation_order, "Series truncation order in units of u");
  ve->add_flag("--json", o.json, "Emit the report as JSON");

  auto* cv = app.add_subcommand("csp-verify", "Cyclic and dihedral sieving for one rectangle");
  cv->add_option("--d", o.d)->required();
  cv->add_option("--n", o.n)->required();
  cv->add_option("--r", o.r);
  cv->add_flag("--json", o.json);

  auto* wc = app.add_subcommand("wronski-check", "Wronski identities for one (d, n)");
  wc->add_option("--d", o.d)->required();
  wc->add_option("--n", o.n)->required();
  wc->add_option("--r", o.r);
  wc->add_option("--cases", o.cases);
  wc->add_option("--seed", o.seed);
  wc->add_flag("--json", o.json);

  auto* ap = app.add_subcommand("apply", "Apply a tableau operation to --tableau");
  ap->add_option("op", op, "promote | promote-trace | evacuate | rotate-complement | rectify | charge")
      ->required();
  ap->add_option("--tableau", o.tableau, "{\"outer\":..,\"inner\":..,\"rows\":..}")->required();
  ap->add_option("--power", o.power, "Promotion power");
  ap->add_option("--d", o.d);
  ap->add_option("--n", o.n);

  auto* ab = app.add_subcommand("abacus", "Abacus, core, quotient and sign of a partition");
  ab->add_option("--shape", o.shape, "Partition array")->required();
  ab->add_option("--d", o.d, "Number of beads; defaults to the length");
  ab->add_option("--r", o.r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*en) return cmd_enumerate(kind, o);
    if (*ve) return cmd_verify(suite, o);
    if (*ap) return cmd_apply(op, o);
    if (*ab) return cmd_abacus(o);
    if (*cv) {
      RectangleFilter f{20, o.d, o.n, o.r};
      VerificationReport cyc = run_csp_suite(f);
      VerificationReport dih = run_dihedral_suite(f);
      for (auto& c : dih.cases) cyc.cases.push_back(std::move(c));
      cyc.wall_seconds += dih.wall_seconds;
      return finish(cyc, o.json);
    }
    if (*wc) {
      WronskiParams p;
      p.shapes = {{*o.d, *o.n}};
      p.cases = o.cases;
      p.block_cases = o.cases;
      p.seed = o.seed;
      p.r = o.r;
      return finish(run_wronski_suite(p), o.json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
