// Command-line front end for the hooktab library.
//
// Verbs: enumerate, count, push, pull, quasistandard, sjdt, straighten,
// star, verify, cone.  Output is JSON on stdout with stable key order
// (--pretty switches to plain grids, --dot to a DOT digraph for `cone`).
//
// Exit codes: 0 success, 1 domain error (message carries the library
// error name), 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hooktab/errors.hpp"
#include "hooktab/extraction.hpp"
#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"
#include "hooktab/json_io.hpp"
#include "hooktab/superspace.hpp"
#include "hooktab/taquin.hpp"
#include "hooktab/verify.hpp"

namespace {

using hooktab::json;

// --shape and --tableau accept either inline JSON or a path to a file
// holding it; anything that does not start with '{' or '[' is a path.
json load_json(const std::string& arg) {
  std::string text = arg;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos ||
      (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(arg);
    if (!in) {
      throw hooktab::PreconditionViolation("cannot open \"" + arg + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw hooktab::PreconditionViolation(std::string("malformed json: ") +
                                         e.what());
  }
}

struct Options {
  int m = -1;  // -1 means "not given"; shapes may also carry m/n inline
  int n = -1;
  std::string shape;
  std::vector<std::string> tableaux;
  std::string suite;
  std::string corner;
  int max_boxes = -1;
  bool trace = false;
  bool pretty = false;
  bool dot = false;

  std::optional<int> opt_m() const {
    return m >= 0 ? std::optional<int>(m) : std::nullopt;
  }
  std::optional<int> opt_n() const {
    return n >= 0 ? std::optional<int>(n) : std::nullopt;
  }
  hooktab::TensorBudget budget() const {
    hooktab::TensorBudget b;
    if (max_boxes >= 0) {
      b.max_boxes = max_boxes;
    }
    return b;
  }
};

bool parse_corner(const std::string& text, hooktab::Corner* out) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    return false;
  }
  try {
    std::size_t used = 0;
    int i = std::stoi(text.substr(0, comma), &used);
    if (used != comma) {
      return false;
    }
    std::string rest = text.substr(comma + 1);
    int j = std::stoi(rest, &used);
    if (used != rest.size()) {
      return false;
    }
    out->i = i;
    out->j = j;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void print_frames(const std::vector<hooktab::SlideFrame>& frames) {
  for (const auto& frame : frames) {
    json line;
    line["star"] = json::array({frame.star.i, frame.star.j});
    line["rows"] = frame.rows;
    std::cout << line.dump() << "\n";
  }
}

int run_enumerate(const Options& o) {
  hooktab::HookShape lam =
      hooktab::shape_from_json(load_json(o.shape), o.opt_m(), o.opt_n());
  std::vector<hooktab::HookTableau> all = hooktab::enumerate_semistandard(lam);
  if (o.pretty) {
    for (const auto& t : all) {
      std::cout << hooktab::pretty_tableau(t) << "\n";
    }
    return 0;
  }
  json out = json::array();
  for (const auto& t : all) {
    out.push_back(hooktab::tableau_to_json(t));
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_count(const Options& o) {
  hooktab::HookShape lam =
      hooktab::shape_from_json(load_json(o.shape), o.opt_m(), o.opt_n());
  json out;
  out["ss"] =
      static_cast<long long>(hooktab::enumerate_semistandard(lam).size());
  std::cout << out.dump() << "\n";
  return 0;
}

int run_push(const Options& o) {
  if (o.tableaux.size() != 1) {
    std::cerr << "push needs exactly one --tableau\n";
    return 2;
  }
  hooktab::HookTableau t = hooktab::tableau_from_json(
      load_json(o.tableaux.front()), o.opt_m(), o.opt_n());
  auto pushed = hooktab::push(t);
  if (o.pretty) {
    std::cout << hooktab::pretty_tableau(pushed.second);
  } else {
    std::cout << hooktab::tableau_to_json(pushed.second).dump() << "\n";
  }
  return 0;
}

int run_pull(const Options& o) {
  if (o.tableaux.size() != 1) {
    std::cerr << "pull needs exactly one --tableau\n";
    return 2;
  }
  hooktab::HookTableau u = hooktab::tableau_from_json(
      load_json(o.tableaux.front()), o.opt_m(), o.opt_n());
  hooktab::HookShape lam =
      hooktab::shape_from_json(load_json(o.shape), o.opt_m(), o.opt_n());
  hooktab::HookTableau t = hooktab::pull(u, lam);
  if (o.pretty) {
    std::cout << hooktab::pretty_tableau(t);
  } else {
    std::cout << hooktab::tableau_to_json(t).dump() << "\n";
  }
  return 0;
}

int run_quasistandard(const Options& o) {
  hooktab::HookShape lam =
      hooktab::shape_from_json(load_json(o.shape), o.opt_m(), o.opt_n());
  std::vector<hooktab::HookTableau> all = hooktab::enumerate_quasistandard(lam);
  if (o.pretty) {
    for (const auto& t : all) {
      std::cout << hooktab::pretty_tableau(t) << "\n";
    }
    return 0;
  }
  json out = json::array();
  for (const auto& t : all) {
    out.push_back(hooktab::tableau_to_json(t));
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_sjdt(const Options& o) {
  if (o.tableaux.size() != 1) {
    std::cerr << "sjdt needs exactly one --tableau\n";
    return 2;
  }
  hooktab::SkewTableau s = hooktab::skew_from_json(
      load_json(o.tableaux.front()), o.opt_m(), o.opt_n());
  if (!o.corner.empty()) {
    hooktab::Corner c{};
    if (!parse_corner(o.corner, &c)) {
      std::cerr << "bad --corner, expected \"i,j\"\n";
      return 2;
    }
    hooktab::SlideResult r = hooktab::sjdt_slide(s, c);
    if (o.trace) {
      print_frames(r.frames);
      json last;
      last["result"] = hooktab::skew_to_json(r.state);
      std::cout << last.dump() << "\n";
    } else if (o.pretty) {
      std::cout << hooktab::pretty_skew(r.state);
    } else {
      std::cout << hooktab::skew_to_json(r.state).dump() << "\n";
    }
    return 0;
  }
  hooktab::MaxjdtResult r = hooktab::maxjdt(s);
  if (o.trace) {
    print_frames(r.frames);
    json last;
    last["result"] = hooktab::tableau_to_json(r.result);
    std::cout << last.dump() << "\n";
  } else if (o.pretty) {
    std::cout << hooktab::pretty_tableau(r.result);
  } else {
    std::cout << hooktab::tableau_to_json(r.result).dump() << "\n";
  }
  return 0;
}

int run_straighten(const Options& o) {
  if (o.tableaux.size() != 1) {
    std::cerr << "straighten needs exactly one --tableau\n";
    return 2;
  }
  hooktab::HookTableau t = hooktab::tableau_from_json(
      load_json(o.tableaux.front()), o.opt_m(), o.opt_n());
  hooktab::SolverCache cache;
  hooktab::FormalCombination c = hooktab::straighten(t, cache, o.budget());
  if (o.pretty) {
    std::cout << hooktab::pretty_combination(c);
  } else {
    std::cout << hooktab::combination_to_json(c).dump() << "\n";
  }
  return 0;
}

int run_star(const Options& o) {
  if (o.tableaux.size() != 2) {
    std::cerr << "star needs exactly two --tableau\n";
    return 2;
  }
  hooktab::HookTableau a = hooktab::tableau_from_json(
      load_json(o.tableaux[0]), o.opt_m(), o.opt_n());
  hooktab::HookTableau b = hooktab::tableau_from_json(
      load_json(o.tableaux[1]), o.opt_m(), o.opt_n());
  hooktab::SolverCache cache;
  hooktab::FormalCombination c =
      hooktab::star_product(a, b, cache, o.budget());
  if (o.pretty) {
    std::cout << hooktab::pretty_combination(c);
  } else {
    std::cout << hooktab::combination_to_json(c).dump() << "\n";
  }
  return 0;
}

int run_verify(const Options& o) {
  if (o.suite != "all") {
    const std::vector<std::string>& names = hooktab::verify_suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
      std::cerr << "unknown suite \"" << o.suite << "\"\n";
      return 2;
    }
  }
  hooktab::VerifyOptions vo;
  vo.max_boxes = o.max_boxes;
  std::vector<hooktab::VerifyResult> results;
  if (o.suite == "all") {
    results = hooktab::verify_all(vo);
  } else {
    results.push_back(hooktab::run_suite(o.suite, vo));
  }
  json arr = json::array();
  bool all_ok = true;
  for (const auto& r : results) {
    json entry;
    entry["name"] = r.name;
    entry["pass"] = r.pass;
    entry["within_time"] = r.within_time;
    entry["millis"] = r.millis;
    entry["time_limit_ms"] = r.time_limit_ms;
    entry["details"] = r.details;
    arr.push_back(entry);
    all_ok = all_ok && r.ok();
  }
  std::cout << arr.dump() << "\n";
  return all_ok ? 0 : 1;
}

// One node per quasistandard tableau of each shape below lambda; edges
// follow the raising action E_{i,i+1} composed with push back onto the
// cone.  The edge rule is a rendering choice, the node set is not.
int run_cone(const Options& o) {
  hooktab::HookShape lam =
      hooktab::shape_from_json(load_json(o.shape), o.opt_m(), o.opt_n());
  std::vector<hooktab::HookTableau> nodes;
  for (const auto& mu :
       hooktab::enumerate_shapes(lam.m(), lam.n(), lam.box_count())) {
    if (!hooktab::shape_leq(mu, lam)) {
      continue;
    }
    for (const auto& u : hooktab::enumerate_quasistandard(mu)) {
      nodes.push_back(u);
    }
  }
  std::map<hooktab::HookTableau, int> index;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    index.emplace(nodes[k], static_cast<int>(k));
  }

  hooktab::SolverCache cache;
  hooktab::TensorBudget budget = o.budget();
  std::set<std::pair<int, int>> edges;
  bool budget_hit = false;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const hooktab::HookTableau& u = nodes[k];
    int letters = u.shape().m() + u.shape().n();
    for (int i = 1; i < letters; ++i) {
      try {
        hooktab::FormalCombination c =
            hooktab::eij_on_tableau(i, i + 1, u, cache, budget);
        for (const auto& term : c.terms()) {
          auto pushed = hooktab::push(term.first);
          auto it = index.find(pushed.second);
          if (it != index.end()) {
            edges.emplace(static_cast<int>(k), it->second);
          }
        }
      } catch (const hooktab::BudgetExceeded&) {
        budget_hit = true;
      }
    }
  }
  if (budget_hit) {
    std::cerr << "warning: tensor budget exceeded, some edges omitted\n";
  }

  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (const auto& u : nodes) {
    std::string word = hooktab::reading_word_text(u);
    labels.push_back(word.empty() ? std::string("0") : word);
  }

  if (o.dot) {
    std::ostringstream out;
    out << "digraph cone {\n";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      out << "  t" << k << " [label=\"" << labels[k] << "\"];\n";
    }
    for (const auto& edge : edges) {
      out << "  t" << edge.first << " -> t" << edge.second << ";\n";
    }
    out << "}\n";
    std::cout << out.str();
    return 0;
  }

  json j;
  j["nodes"] = json::array();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    json node;
    node["id"] = static_cast<int>(k);
    node["label"] = labels[k];
    node["tableau"] = hooktab::tableau_to_json(nodes[k]);
    j["nodes"].push_back(node);
  }
  j["edges"] = json::array();
  for (const auto& edge : edges) {
    j["edges"].push_back(json::array({edge.first, edge.second}));
  }
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hook tableau combinatorics for the Lie superalgebra sl(m,n)"};
  app.require_subcommand(1);
  Options o;

  auto add_mn = [&o](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "number of even letters");
    cmd->add_option("--n", o.n, "number of odd letters");
  };

  CLI::App* c_enumerate = app.add_subcommand(
      "enumerate", "list the semistandard tableaux of a shape");
  add_mn(c_enumerate);
  c_enumerate->add_option("--shape", o.shape, "shape json or file path")
      ->required();
  c_enumerate->add_flag("--pretty", o.pretty, "plain grids instead of json");

  CLI::App* c_count =
      app.add_subcommand("count", "count the semistandard tableaux of a shape");
  add_mn(c_count);
  c_count->add_option("--shape", o.shape, "shape json or file path")
      ->required();

  CLI::App* c_push = app.add_subcommand(
      "push", "strip the largest extractable trivial pair from a tableau");
  add_mn(c_push);
  c_push->add_option("--tableau", o.tableaux, "tableau json or file path")
      ->required();
  c_push->add_flag("--pretty", o.pretty, "plain grid instead of json");

  CLI::App* c_pull = app.add_subcommand(
      "pull", "rebuild the tableau of shape --shape that pushes to --tableau");
  add_mn(c_pull);
  c_pull->add_option("--tableau", o.tableaux, "tableau json or file path")
      ->required();
  c_pull->add_option("--shape", o.shape, "target shape json or file path")
      ->required();
  c_pull->add_flag("--pretty", o.pretty, "plain grid instead of json");

  CLI::App* c_quasi = app.add_subcommand(
      "quasistandard", "list the quasistandard tableaux of a shape");
  add_mn(c_quasi);
  c_quasi->add_option("--shape", o.shape, "shape json or file path")
      ->required();
  c_quasi->add_flag("--pretty", o.pretty, "plain grids instead of json");

  CLI::App* c_sjdt = app.add_subcommand(
      "sjdt", "super jeu de taquin slide on a skew tableau");
  add_mn(c_sjdt);
  c_sjdt->add_option("--tableau", o.tableaux, "skew tableau json or file path")
      ->required();
  c_sjdt->add_option("--corner", o.corner,
                     "slide into this outer corner i,j (default: full maxjdt)");
  c_sjdt->add_flag("--trace", o.trace, "print one frame per line");
  c_sjdt->add_flag("--pretty", o.pretty, "plain grid instead of json");

  CLI::App* c_straighten = app.add_subcommand(
      "straighten", "expand a filling in the semistandard basis");
  add_mn(c_straighten);
  c_straighten->add_option("--tableau", o.tableaux, "tableau json or file path")
      ->required();
  c_straighten->add_option("--max-boxes", o.max_boxes,
                           "tensor budget override");
  c_straighten->add_flag("--pretty", o.pretty, "plain terms instead of json");

  CLI::App* c_star = app.add_subcommand(
      "star", "shape algebra product of two tableaux (give --tableau twice)");
  add_mn(c_star);
  c_star->add_option("--tableau", o.tableaux, "tableau json or file path")
      ->required();
  c_star->add_option("--max-boxes", o.max_boxes, "tensor budget override");
  c_star->add_flag("--pretty", o.pretty, "plain terms instead of json");

  CLI::App* c_verify =
      app.add_subcommand("verify", "run the verification suites");
  c_verify->add_option("suite", o.suite, "suite name or \"all\"")->required();
  c_verify->add_option("--max-boxes", o.max_boxes,
                       "override every suite's box cap (0 = vacuous)");

  CLI::App* c_cone = app.add_subcommand(
      "cone", "diamond cone graph over all shapes below --shape");
  add_mn(c_cone);
  c_cone->add_option("--shape", o.shape, "shape json or file path")
      ->required();
  c_cone->add_option("--max-boxes", o.max_boxes, "tensor budget override");
  c_cone->add_flag("--dot", o.dot, "DOT digraph instead of json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_enumerate->parsed()) return run_enumerate(o);
    if (c_count->parsed()) return run_count(o);
    if (c_push->parsed()) return run_push(o);
    if (c_pull->parsed()) return run_pull(o);
    if (c_quasi->parsed()) return run_quasistandard(o);
    if (c_sjdt->parsed()) return run_sjdt(o);
    if (c_straighten->parsed()) return run_straighten(o);
    if (c_star->parsed()) return run_star(o);
    if (c_verify->parsed()) return run_verify(o);
    if (c_cone->parsed()) return run_cone(o);
  } catch (const hooktab::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
