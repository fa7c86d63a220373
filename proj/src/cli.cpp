#include "peterson/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "peterson/billey.hpp"
#include "peterson/errors.hpp"
#include "peterson/monk.hpp"
#include "peterson/parallel.hpp"
#include "peterson/peterson_class.hpp"
#include "peterson/serialize.hpp"

namespace peterson::cli {

namespace {

// A bad argument value; the message already names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Settings {
  int n = 0;
  int n_positional = 0;
  std::string cls, at, left, right;
  int i = 0;
  bool ordinary = false;
  int max_n = 6;
  std::string format = "text";
  bool oracle = false;
  std::string parallel = "1";
  std::string out_file;
};

struct Context {
  int n;
  Format format;
  EvaluationPath path;
  unsigned workers;
};

std::string braces(const IndexSubset& a) { return "{" + a.to_csv() + "}"; }

std::string bare(const Permutation& w) {
  const std::string s = w.to_string();
  return s.substr(1, s.size() - 2);
}

IndexSubset subset_arg(int n, const std::string& text, const std::string& flag) {
  try {
    return parse_subset(n, text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

unsigned workers_arg(const std::string& text) {
  if (text == "auto") return resolve_workers(0);
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size() && value >= 1) return static_cast<unsigned>(value);
  } catch (const std::exception&) {
  }
  throw UsageError("--parallel: expected a positive worker count or 'auto', got '" + text + "'");
}

void check_rank(int n, int limit) {
  if (n < 2) throw UsageError("--n: rank must be at least 2, got " + std::to_string(n));
  if (n > limit)
    throw UsageError("--n: rank " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(limit));
}

// Every table-producing command enumerates 2^(n-1) fixed points.
constexpr int table_rank_limit = 31;

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int fixed_points(const Context& c, std::ostream& out) {
  const auto subsets = all_subsets(c.n);
  if (c.format == Format::json) {
    Json rows = Json::array();
    for (const auto& a : subsets) rows.push_back({{"subset", to_json(a)}, {"w", to_json(fixed_point(a))}});
    dump(out, {{"n", c.n}, {"fixed_points", rows}});
  } else if (c.format == Format::csv) {
    out << "subset,fixed_point\n";
    for (const auto& a : subsets) out << '"' << a.to_csv() << "\",\"" << bare(fixed_point(a)) << "\"\n";
  } else {
    for (const auto& a : subsets) out << braces(a) << " -> " << fixed_point(a) << '\n';
  }
  return exit_ok;
}

int restrict_cmd(const Context& c, const IndexSubset& a, const IndexSubset& b, std::ostream& out) {
  const TPolynomial value = c.path == EvaluationPath::closed_form
                                ? closed_form_restriction(a, b)
                                : p_restriction(basis_permutation(a), b);
  if (c.format == Format::json) {
    dump(out, {{"n", c.n}, {"class", to_json(a)}, {"at", to_json(b)}, {"value", value.to_string()},
               {"coefficients", to_json(value)}});
  } else if (c.format == Format::csv) {
    out << "class,at,value\n\"" << a.to_csv() << "\",\"" << b.to_csv() << "\"," << value << '\n';
  } else {
    out << value << '\n';
  }
  return exit_ok;
}

int class_table(const Context& c, const IndexSubset& a, std::ostream& out) {
  const PetersonClass cls = class_of(a, c.path, c.workers);
  if (c.format == Format::json) {
    dump(out, class_table_json(cls));
  } else if (c.format == Format::csv) {
    out << class_table_csv(cls);
  } else {
    for (const auto& b : all_subsets(c.n)) out << braces(b) << ": " << cls.at(b) << '\n';
  }
  return exit_ok;
}

int monk_cmd(const Context& c, int i, const IndexSubset& a, bool ordinary, std::ostream& out) {
  const MonkExpansion e = ordinary ? ordinary_monk_expand(i, a) : monk_expand(i, a);
  if (c.format == Format::json) {
    Json j = monk_json(e);
    j["n"] = c.n;
    j["ordinary"] = ordinary;
    dump(out, j);
  } else if (c.format == Format::csv) {
    out << "subset,coefficient\n";
    if (!e.diagonal.is_zero()) out << '"' << a.to_csv() << "\"," << e.diagonal << '\n';
    for (const auto& [b, k] : e.off_diagonal) out << '"' << b.to_csv() << "\"," << k << '\n';
  } else {
    out << Relation{e, a.is_empty()}.text() << '\n';
  }
  return exit_ok;
}

int product_cmd(const Context& c, const IndexSubset& a, const IndexSubset& b, std::ostream& out) {
  const BasisExpansion e = product_in_basis(a, b, c.path);
  if (c.format == Format::json) {
    dump(out, product_json(a, b, e));
  } else if (c.format == Format::csv) {
    out << "subset,coefficient\n";
    for (const auto& [s, k] : e.coefficients) out << '"' << s.to_csv() << "\"," << k << '\n';
  } else {
    std::string rhs;
    for (const auto& [s, k] : e.coefficients) {
      if (!rhs.empty()) rhs += " + ";
      const std::string coefficient = k.to_string();
      if (coefficient != "1") rhs += (k.terms().size() > 1 ? "(" + coefficient + ")" : coefficient) + "*";
      rhs += "p[" + s.to_csv() + "]";
    }
    out << "p[" << a.to_csv() << "]*p[" << b.to_csv() << "] = " << (rhs.empty() ? "0" : rhs) << '\n';
  }
  return exit_ok;
}

int presentation_cmd(const Context& c, bool ordinary, std::ostream& out) {
  const auto relations = presentation(c.n, !ordinary);
  if (c.format == Format::json) {
    Json rows = Json::array();
    for (const auto& r : relations) rows.push_back(relation_json(r));
    dump(out, {{"n", c.n}, {"equivariant", !ordinary}, {"relations", rows}});
  } else if (c.format == Format::csv) {
    out << "i,class,term,coefficient,trivial\n";
    for (const auto& r : relations) {
      const MonkExpansion& e = r.expansion;
      const auto row = [&](const IndexSubset& term, const std::string& k) {
        out << e.i << ",\"" << e.cls.to_csv() << "\",\"" << term.to_csv() << "\"," << k << ','
            << (r.trivial ? "true" : "false") << '\n';
      };
      if (!e.diagonal.is_zero()) row(e.cls, e.diagonal.to_string());
      for (const auto& [b, k] : e.off_diagonal) row(b, k.get_str());
    }
  } else {
    for (const auto& r : relations) out << r.text() << (r.trivial ? "  [trivial]" : "") << '\n';
  }
  return exit_ok;
}

struct Check {
  Check(int n, std::string label) : rank(n), name(std::move(label)) {}

  int rank;
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

Check check_fixed_points(int n) {
  Check out{n, "fixed-point round trip"};
  for (const auto& a : all_subsets(n)) {
    ++out.cases;
    const Permutation w = fixed_point(a);
    if (subset_of_fixed_point(w) != a || evaluate(fixed_point_word(a)) != w || !(w.inverse() == w))
      out.failures.push_back("round trip fails for " + braces(a));
  }
  return out;
}

Check check_basis(int n, const std::vector<PetersonClass>& classes) {
  Check out{n, "upper triangularity and degree counts"};
  std::vector<std::size_t> per_degree(n, 0);
  for (const auto& cls : classes) {
    ++out.cases;
    const IndexSubset& a = cls.index();
    if (!cls.is_upper_triangular_for(a)) out.failures.push_back("not upper triangular: " + braces(a));
    if (cls.at(a) != diagonal_value(a)) out.failures.push_back("diagonal mismatch at " + braces(a));
    for (const auto& value : cls.table())
      if (!value.is_zero() && (!value.is_monomial() || value.degree() != a.size() ||
                               value.leading_coefficient() < 0))
        out.failures.push_back("value is not a nonnegative multiple of t^" + std::to_string(a.size()) +
                               " in " + braces(a));
    ++per_degree[a.size()];
  }
  for (int j = 0; j < n; ++j)
    if (Integer(static_cast<unsigned long>(per_degree[j])) != binomial(n - 1, j))
      out.failures.push_back("degree " + std::to_string(j) + " has " + std::to_string(per_degree[j]) +
                             " classes");
  return out;
}

Check check_paths(int n, const std::vector<PetersonClass>& classes, EvaluationPath path, unsigned workers) {
  const EvaluationPath other =
      path == EvaluationPath::closed_form ? EvaluationPath::billey : EvaluationPath::closed_form;
  Check out{n, "closed form agrees with subword sums"};
  for (const auto& cls : classes) {
    ++out.cases;
    if (!class_of(cls.index(), other, workers).same_table(cls))
      out.failures.push_back("tables differ for " + braces(cls.index()));
  }
  return out;
}

Check check_monk(int n, EvaluationPath path, unsigned workers) {
  const MonkReport report = verify_monk(n, path, workers);
  Check out{n, "Monk identity and structure constants"};
  out.cases = report.identities_checked + report.constants_checked;
  out.failures = report.violations;
  return out;
}

int verify_cmd(const Context& c, int max_n, std::ostream& out) {
  std::vector<Check> checks;
  for (int n = 2; n <= c.n; ++n) {
    const auto classes = all_classes(n, c.path, c.workers);
    checks.push_back(check_fixed_points(n));
    checks.push_back(check_basis(n, classes));
    checks.push_back(check_paths(n, classes, c.path, c.workers));
    checks.push_back(check_monk(n, c.path, c.workers));
  }
  bool passed = true;
  for (const auto& ch : checks) passed = passed && ch.failures.empty();
  if (c.format == Format::json) {
    Json rows = Json::array();
    for (const auto& ch : checks)
      rows.push_back({{"n", ch.rank}, {"check", ch.name}, {"cases", ch.cases},
                      {"passed", ch.failures.empty()}, {"failures", ch.failures}});
    dump(out, {{"n", c.n}, {"max_n", max_n}, {"passed", passed}, {"checks", rows}});
  } else if (c.format == Format::csv) {
    out << "n,check,cases,result\n";
    for (const auto& ch : checks)
      out << ch.rank << ",\"" << ch.name << "\"," << ch.cases << ',' << (ch.failures.empty() ? "PASS" : "FAIL")
          << '\n';
  } else {
    for (const auto& ch : checks) {
      out << (ch.failures.empty() ? "PASS" : "FAIL") << "  n=" << ch.rank << "  " << ch.name << " ("
          << ch.cases << " cases)\n";
      for (const auto& f : ch.failures) out << "      " << f << '\n';
    }
    out << (passed ? "verify: all checks passed" : "verify: FAILED") << '\n';
  }
  return passed ? exit_ok : exit_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Restriction tables, Monk expansions and presentations for Peterson Schubert classes",
               "peterson"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--oracle", s.oracle, "Evaluate restrictions by subword sums instead of closed forms");
  app.add_option("--parallel", s.parallel, "Worker threads, or 'auto'");
  app.add_option("--out", s.out_file, "Write results to FILE instead of stdout");

  auto* fp = app.add_subcommand("fixed-points", "List every fixed point w_A");
  fp->add_option("rank", s.n_positional, "Rank n");
  fp->add_option("--n", s.n, "Rank n");

  auto* rs = app.add_subcommand("restrict", "Print p_{v_A}(w_B)");
  rs->add_option("--n", s.n, "Rank n")->required();
  rs->add_option("--class", s.cls, "Class subset A")->required();
  rs->add_option("--at", s.at, "Fixed-point subset B")->required();

  auto* ct = app.add_subcommand("class-table", "Print p_{v_A} at every fixed point");
  ct->add_option("--n", s.n, "Rank n")->required();
  ct->add_option("--class", s.cls, "Class subset A")->required();

  auto* mk = app.add_subcommand("monk", "Expand p_i * p_{v_A} in the basis");
  mk->add_option("--n", s.n, "Rank n")->required();
  mk->add_option("--i", s.i, "Generator index")->required();
  mk->add_option("--class", s.cls, "Class subset A")->required();
  mk->add_flag("--ordinary", s.ordinary, "Drop the equivariant diagonal term");

  auto* pr = app.add_subcommand("product", "Expand p_{v_A} * p_{v_A'} in the basis");
  pr->add_option("--n", s.n, "Rank n")->required();
  pr->add_option("--left", s.left, "Left subset A")->required();
  pr->add_option("--right", s.right, "Right subset A'")->required();

  auto* vf = app.add_subcommand("verify", "Run the invariant suites for ranks 2..n");
  vf->add_option("--n", s.n, "Largest rank checked")->required();
  vf->add_option("--max-n", s.max_n, "Refuse ranks above this bound")->capture_default_str();

  auto* ps = app.add_subcommand("presentation", "Emit every Monk relation");
  ps->add_option("--n", s.n, "Rank n")->required();
  ps->add_flag("--ordinary", s.ordinary, "Ordinary instead of equivariant relations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (fp->parsed()) {
      if (s.n != 0 && s.n_positional != 0 && s.n != s.n_positional)
        throw UsageError("--n: conflicts with the positional rank");
      if (s.n == 0) s.n = s.n_positional;
      if (s.n == 0) throw UsageError("--n: fixed-points needs a rank");
    }
    check_rank(s.n, table_rank_limit);
    if (vf->parsed()) {
      if (s.max_n < 2) throw UsageError("--max-n: must be at least 2");
      if (s.n > s.max_n)
        throw UsageError("--n: rank " + std::to_string(s.n) + " exceeds --max-n " + std::to_string(s.max_n));
    }
    if (mk->parsed() && (s.i < 1 || s.i > s.n - 1))
      throw UsageError("--i: generator index " + std::to_string(s.i) + " outside {1.." +
                       std::to_string(s.n - 1) + "}");
    const Format format = s.format == "json" ? Format::json : s.format == "csv" ? Format::csv : Format::text;
    const Context c{s.n, format, s.oracle ? EvaluationPath::billey : default_evaluation_path(),
                    workers_arg(s.parallel)};

    std::ofstream file;
    if (!s.out_file.empty()) {
      file.open(s.out_file);
      if (!file) throw UsageError("--out: cannot open '" + s.out_file + "' for writing");
    }
    std::ostream& sink = s.out_file.empty() ? out : file;

    if (fp->parsed()) return fixed_points(c, sink);
    if (rs->parsed())
      return restrict_cmd(c, subset_arg(s.n, s.cls, "--class"), subset_arg(s.n, s.at, "--at"), sink);
    if (ct->parsed()) return class_table(c, subset_arg(s.n, s.cls, "--class"), sink);
    if (mk->parsed()) return monk_cmd(c, s.i, subset_arg(s.n, s.cls, "--class"), s.ordinary, sink);
    if (pr->parsed())
      return product_cmd(c, subset_arg(s.n, s.left, "--left"), subset_arg(s.n, s.right, "--right"), sink);
    if (vf->parsed()) return verify_cmd(c, s.max_n, sink);
    return presentation_cmd(c, s.ordinary, sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace peterson::cli
