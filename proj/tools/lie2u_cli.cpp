// lie2u: command-line front end.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 input error.

#include "lie2u/basis_enum.hpp"
#include "lie2u/counting.hpp"
#include "lie2u/lie2.hpp"
#include "lie2u/text_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <iomanip>
#include <sstream>

using namespace lie2u;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_dim(int d) {
  if (d < 1) throw InputError("--dim must be a positive integer");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad list element \"" + item + "\"");
    }
  }
  return out;
}

std::string kind_name(CompositionKind k) {
  return k == CompositionKind::intersection ? "intersection" : "inclusion";
}

void print_report(const CompositionReport& report, bool verbose, bool aliases) {
  for (const auto& e : report.entries) {
    if (e.trivial && !verbose) continue;
    const auto& c = e.composition;
    std::cout << (e.trivial ? "trivial    " : "NONTRIVIAL ") << kind_name(c.kind) << " (" << c.left
              << "," << c.right << ") w = " << to_string(c.ambiguity, aliases);
    if (!e.trivial) std::cout << " -> " << to_string(e.reduction.normal_form, aliases);
    std::cout << "\n";
  }
  const auto bad = report.nontrivial_count();
  if (bad == 0)
    std::cout << "all " << report.entries.size() << " compositions trivial\n";
  else
    std::cout << bad << " of " << report.entries.size() << " compositions nontrivial\n";
}

RelationSet relations_from_file(const std::string& path) {
  LiePair g = read_lie_pair_file(path);
  auto v = validate_lie_pair(g);
  if (!v.valid()) throw InputError(path + ": " + v.failures.front().message);
  Presentation p = transform_to_fF(build_presentation_original(g));
  return p.relation_set();
}

void print_relations(const RelationSet& s, bool aliases) {
  for (std::size_t i = 0; i < s.size(); ++i) std::cout << "  [" << i << "] " << to_string(s[i], aliases) << "\n";
}

int cmd_validate(const std::string& path) {
  LiePair g = read_lie_pair_file(path);
  auto v = validate_lie_pair(g);
  if (v.valid()) {
    std::cout << "valid: dim " << g.dim() << (g.is_abelian() ? ", abelian" : "") << "\n";
    return kOk;
  }
  for (const auto& f : v.failures) std::cout << f.message << "\n";
  std::cout << "invalid: " << v.failures.size() << " failed checks\n";
  return kCheckFailed;
}

struct GsbArgs {
  int dim = 0;
  std::string file;
  std::string omit;
  int complete_degree = 0;
  bool verbose = false;
  bool aliases = false;
};

int cmd_verify_gsb(const GsbArgs& a) {
  std::optional<RelationSet> s;
  if (!a.file.empty()) {
    if (!a.omit.empty()) throw InputError("--omit applies to --dim only");
    s = relations_from_file(a.file);
  } else {
    require_dim(a.dim);
    std::vector<int> families = {1, 2, 3, 4, 5};
    if (!a.omit.empty()) {
      auto drop = parse_int_list(a.omit);
      for (int f : drop)
        if (f < 1 || f > 5) throw InputError("--omit takes family numbers 1..5");
      std::erase_if(families, [&](int f) { return std::find(drop.begin(), drop.end(), f) != drop.end(); });
    }
    s = gsb_relations_g0(a.dim, families).relation_set();
  }
  if (a.complete_degree > 0) {
    Completion c = complete(*s, a.complete_degree);
    std::cout << "completion to degree " << a.complete_degree << ": " << c.relations.size() << " relations, "
              << c.rounds << " rounds\n";
    s = c.relations;
  }
  auto report = verify_gsb(*s);
  print_report(report, a.verbose, a.aliases);
  return report.all_trivial() ? kOk : kCheckFailed;
}

struct CompleteArgs {
  int dim = 0;
  std::string file;
  int degree = 4;
  int counts = 0;
  bool aliases = false;
};

int cmd_complete(const CompleteArgs& a) {
  if (a.degree < 1) throw InputError("--degree must be positive");
  RelationSet s = a.file.empty() ? (require_dim(a.dim), gsb_relations_g0(a.dim).relation_set())
                                 : relations_from_file(a.file);
  std::cout << "input: " << s.size() << " relations\n";
  Completion c = complete(s, a.degree);
  std::cout << "completed: " << c.relations.size() << " relations, " << c.rounds << " rounds, "
            << (c.saturated ? "Groebner-Shirshov basis" : "not saturated") << "\n";
  print_relations(c.relations, a.aliases);
  if (a.counts > 0) {
    auto counts = irreducible_counts(c.relations, a.counts);
    std::cout << "irreducible counts:";
    for (auto n : counts) std::cout << " " << n;
    std::cout << "\n";
  }
  return kOk;
}

struct BasisArgs {
  int dim = 0;
  int degree = 0;
  std::string mode = "pattern";
  bool aliases = false;
};

int cmd_basis(const BasisArgs& a) {
  require_dim(a.dim);
  if (a.degree < 0) throw InputError("--degree must be non-negative");
  if (a.aliases && a.dim > 2) throw InputError("--aliases needs --dim <= 2");
  auto print = [&](const std::vector<Word>& ws) {
    for (const auto& w : ws) std::cout << to_string(w, a.aliases) << "\n";
    std::cout << ws.size() << " words\n";
  };
  if (a.mode == "pattern") {
    print(enumerate_pattern(a.dim, a.degree));
    return kOk;
  }
  auto irreducible = enumerate_irreducible(gsb_relations_g0(a.dim).relation_set(), a.degree);
  if (a.mode == "irreducible") {
    print(irreducible);
    return kOk;
  }
  auto pattern = enumerate_pattern(a.dim, a.degree);
  std::set<Word, WordLess> p(pattern.begin(), pattern.end()), q(irreducible.begin(), irreducible.end());
  std::size_t diff = 0;
  for (const auto& w : pattern)
    if (!q.count(w)) std::cout << "- " << to_string(w, a.aliases) << "\n", ++diff;
  for (const auto& w : irreducible)
    if (!p.count(w)) std::cout << "+ " << to_string(w, a.aliases) << "\n", ++diff;
  std::cout << "pattern " << pattern.size() << ", irreducible " << irreducible.size() << ", diff " << diff << "\n";
  return diff == 0 ? kOk : kCheckFailed;
}

int cmd_reduce(int dim, const std::string& expr, bool trace) {
  require_dim(dim);
  auto parsed = parse_expression(expr, dim);
  auto s = gsb_relations_g0(dim).relation_set();
  auto r = reduce(parsed.polynomial, s);
  if (trace)
    for (const auto& step : r.trail)
      std::cout << "  " << to_string(step.word, parsed.used_aliases) << "  by [" << step.relation << "] at "
                << step.position << "\n";
  std::cout << to_string(r.normal_form, parsed.used_aliases) << "\n";
  return kOk;
}

int cmd_count(int dim, int max, bool csv, const std::string& method) {
  require_dim(dim);
  if (max < 0) throw InputError("--max must be non-negative");
  CountMethod m;
  if (method == "automaton") m = CountMethod::automaton;
  else if (method == "enumerate") m = CountMethod::enumerate;
  else throw InputError("--method is automaton or enumerate");
  auto r = count_series(dim, max, m);
  if (csv) {
    std::cout << to_csv(r);
    return kOk;
  }
  auto s = big_start_series(r);
  for (int n = 0; n <= max; ++n) std::cout << "n=" << n << "  r=" << r[n].get_str() << "  s=" << s[n].get_str() << "\n";
  return kOk;
}

int cmd_growth(int dim, const std::string& method, int n) {
  require_dim(dim);
  static const std::vector<std::pair<std::string, GrowthMethod>> all = {
      {"nth-root", GrowthMethod::nth_root},
      {"ratio", GrowthMethod::ratio},
      {"spectral", GrowthMethod::spectral_radius},
      {"closed-form", GrowthMethod::closed_form}};
  std::vector<GrowthEstimate> estimates;
  for (const auto& [name, m] : all) {
    if (method != "all" && method != name) continue;
    if (m == GrowthMethod::closed_form && dim > 2 && method == "all") continue;
    try {
      estimates.push_back(growth_rate(dim, m, n));
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
  }
  if (estimates.empty()) throw InputError("--method is nth-root, ratio, spectral, closed-form or all");

  for (const auto& e : estimates)
    std::cout << std::left << std::setw(16) << to_string(e.method) << format_decimal(e.value, 12)
              << "  +- " << format_decimal(e.error_bound, 12) << "\n";
  if (estimates.size() == 1) return kOk;

  // nth_root converges like log(C)/n and is shown but not compared.
  std::vector<const GrowthEstimate*> sharp;
  for (const auto& e : estimates)
    if (e.method != GrowthMethod::nth_root) sharp.push_back(&e);
  bool agree = true;
  std::cout << "agreement (|a - b|):\n";
  for (std::size_t i = 0; i < sharp.size(); ++i)
    for (std::size_t j = i + 1; j < sharp.size(); ++j) {
      mpf_class diff = abs(sharp[i]->value - sharp[j]->value);
      bool ok = diff < mpf_class(1e-6);
      agree = agree && ok;
      std::cout << "  " << std::left << std::setw(16) << to_string(sharp[i]->method) << std::setw(16)
                << to_string(sharp[j]->method) << format_decimal(diff, 12) << (ok ? "" : "  > 1e-6") << "\n";
    }
  return agree ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enveloping algebras of compatible Lie bracket pairs"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "check a Lie pair file");
  validate->add_option("file", validate_file)->required();

  GsbArgs gsb;
  auto* verify = app.add_subcommand("verify-gsb", "check all compositions of a relation set");
  auto* vdim = verify->add_option("--dim", gsb.dim, "abelian pair on d generators");
  auto* vfile = verify->add_option("--file", gsb.file, "Lie pair file");
  vdim->excludes(vfile);
  verify->add_option("--omit", gsb.omit, "families to drop, e.g. 4,5");
  verify->add_option("--complete", gsb.complete_degree, "complete to this degree first");
  verify->add_flag("--verbose", gsb.verbose, "list trivial compositions too");
  verify->add_flag("--aliases", gsb.aliases, "print f, g, F, G");

  CompleteArgs comp;
  auto* complete_cmd = app.add_subcommand("complete", "bounded Shirshov completion");
  auto* cdim = complete_cmd->add_option("--dim", comp.dim);
  auto* cfile = complete_cmd->add_option("--file", comp.file);
  cdim->excludes(cfile);
  complete_cmd->add_option("--degree", comp.degree, "ambiguity degree bound");
  complete_cmd->add_option("--counts", comp.counts, "print irreducible counts up to this length");
  complete_cmd->add_flag("--aliases", comp.aliases);

  BasisArgs basis;
  auto* basis_cmd = app.add_subcommand("basis", "list basis words of one degree");
  basis_cmd->add_option("--dim", basis.dim)->required();
  basis_cmd->add_option("--degree", basis.degree)->required();
  basis_cmd->add_option("--mode", basis.mode)->check(CLI::IsMember({"pattern", "irreducible", "both"}));
  basis_cmd->add_flag("--aliases", basis.aliases);

  int reduce_dim = 0;
  std::string expr;
  bool trace = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a word expression");
  reduce_cmd->add_option("--dim", reduce_dim)->required();
  reduce_cmd->add_option("--expr", expr)->required();
  reduce_cmd->add_flag("--trace", trace, "show rewrite steps");

  int count_dim = 0, count_max = 10;
  bool csv = false;
  std::string count_method = "automaton";
  auto* count_cmd = app.add_subcommand("count", "basis counts r_n and s_n");
  count_cmd->add_option("--dim", count_dim)->required();
  count_cmd->add_option("--max", count_max);
  count_cmd->add_flag("--csv", csv);
  count_cmd->add_option("--method", count_method);

  int growth_dim = 0, growth_n = 40;
  std::string growth_method = "all";
  auto* growth_cmd = app.add_subcommand("growth", "growth rate estimates");
  growth_cmd->add_option("--dim", growth_dim)->required();
  growth_cmd->add_option("--method", growth_method);
  growth_cmd->add_option("--n", growth_n, "series length for nth-root and ratio");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(validate_file);
    if (*verify) return cmd_verify_gsb(gsb);
    if (*complete_cmd) return cmd_complete(comp);
    if (*basis_cmd) return cmd_basis(basis);
    if (*reduce_cmd) return cmd_reduce(reduce_dim, expr, trace);
    if (*count_cmd) return cmd_count(count_dim, count_max, csv, count_method);
    if (*growth_cmd) return cmd_growth(growth_dim, growth_method, growth_n);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
