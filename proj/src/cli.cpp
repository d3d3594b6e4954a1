#include "nilbij/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nilbij/json_io.hpp"

namespace nilbij::cli {

namespace {

using io::json;

struct Config {
  std::string input_path;
  std::string output_path;
  std::string inline_data;
  bool json_mode = false;
  bool table_mode = false;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> poly;
  std::size_t n = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned shards = 1;
};

// A successful command's rendering plus whether the verification it ran passed.
struct Outcome {
  json value;
  std::string table;
  bool verified = true;
};

std::string field_name(const FieldSpec& spec) {
  std::ostringstream os;
  os << "GF(" << spec.p;
  if (spec.k > 1) os << "^" << spec.k;
  os << ")";
  return os.str();
}

std::string render(const Vector& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
  os << ")";
  return os.str();
}

std::string render(const Matrix& m) {
  std::ostringstream os;
  os << field_name(m.field()->spec()) << " " << m.rows() << "x" << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << " " << std::setw(2) << m(i, j);
    os << "\n";
  }
  return os.str();
}

std::string render(const Subspace& s) {
  std::ostringstream os;
  os << "dim " << s.dim() << " in " << field_name(s.field()->spec()) << "^" << s.ambient_dim();
  for (const auto& b : s.basis()) os << " " << render(b);
  return os.str();
}

std::string render_strata(const std::vector<DegreeStratum>& strata) {
  std::ostringstream os;
  os << std::setw(4) << "k" << std::setw(14) << "left" << std::setw(14) << "right" << "\n";
  for (const auto& s : strata) {
    os << std::setw(4) << s.k << std::setw(14) << s.left_count << std::setw(14) << s.right_count
       << (s.left_count == s.right_count ? "" : "  MISMATCH") << "\n";
  }
  return os.str();
}

std::string render_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  for (const auto& [key, value] : rows) os << std::left << std::setw(26) << key << value << "\n";
  return os.str();
}

std::string yes_no(bool ok) { return ok ? "yes" : "NO"; }

json read_input(const Config& cfg, std::istream& in) {
  if (!cfg.inline_data.empty()) return io::parse(cfg.inline_data);
  if (!cfg.input_path.empty()) {
    std::ifstream file(cfg.input_path);
    if (!file) throw Error(Errc::parse_error, "cannot open " + cfg.input_path);
    return io::parse(std::string(std::istreambuf_iterator<char>(file), {}));
  }
  return io::parse(std::string(std::istreambuf_iterator<char>(in), {}));
}

FieldPtr field_from_flags(const Config& cfg) {
  if (cfg.p == 0) throw Error(Errc::invalid_field, "--p is required");
  return Field::make(FieldSpec{cfg.p, cfg.k, cfg.poly});
}

CensusOptions census_options(const Config& cfg) { return CensusOptions{cfg.budget, cfg.shards}; }

Outcome cmd_forward(const json& input) {
  const NilPointed tv = io::pair_from_json(input);
  const Matrix q = forward(tv);
  return {io::to_json(q), render(q)};
}

Outcome cmd_inverse(const json& input) {
  const NilPointed tv = inverse(io::matrix_from_json(input));
  return {io::to_json(tv), "T: " + render(tv.t) + "v: " + render(tv.v) + "\n"};
}

Outcome cmd_fitting(const json& input) {
  const FittingPair fp = fitting_decompose(io::matrix_from_json(input));
  std::string table = "V: " + render(fp.v) + "\nW: " + render(fp.w) + "\nR: " + render(fp.r.matrix()) +
                      "S: " + render(fp.s.matrix());
  return {io::to_json(fp), table};
}

Outcome cmd_degree(const json& input) {
  const NilPointed tv = io::pair_from_json(input);
  const std::size_t k = degree(tv.t, tv.v);
  return {json{{"degree", k}}, "degree " + std::to_string(k) + "\n"};
}

Outcome cmd_count(const Config& cfg) {
  const NilpotentCount r = count_nilpotents(field_from_flags(cfg), cfg.n, census_options(cfg));
  const std::string table = render_rows({
      {"field", field_name(r.field)},
      {"n", std::to_string(r.n)},
      {"total operators", std::to_string(r.total_operators)},
      {"nilpotent", std::to_string(r.nilpotent_count)},
      {"expected q^(n(n-1))", std::to_string(r.expected_nilpotents)},
      {"nilpotent fraction", std::to_string(r.ratio_numerator) + "/" + std::to_string(r.ratio_denominator)},
      {"verified", yes_no(r.success())},
  });
  return {io::to_json(r), table, r.success()};
}

Outcome cmd_verify_theorem(const Config& cfg) {
  const CensusReport r = verify_theorem(field_from_flags(cfg), cfg.n, census_options(cfg));
  std::ostringstream elapsed;
  elapsed << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s";
  const std::string table = render_rows({
                                {"field", field_name(r.field)},
                                {"n", std::to_string(r.n)},
                                {"total operators", std::to_string(r.total_operators)},
                                {"nilpotent", std::to_string(r.nilpotent_count)},
                                {"expected nilpotent", std::to_string(r.expected_nilpotents)},
                                {"pairs (T, v)", std::to_string(r.domain_size)},
                                {"round-trip failures", std::to_string(r.roundtrip_failures)},
                                {"surjectivity gap", std::to_string(r.surjectivity_gap)},
                                {"injectivity collisions", std::to_string(r.injectivity_collisions)},
                                {"stratum violations", std::to_string(r.stratum_violations)},
                                {"elapsed", elapsed.str()},
                                {"verified", yes_no(r.success())},
                            }) +
                            render_strata(r.per_degree);
  return {io::to_json(r), table, r.success()};
}

Outcome cmd_verify_degrees(const Config& cfg) {
  const DegreeTable r = verify_degree_refinement(field_from_flags(cfg), cfg.n, census_options(cfg));
  const std::string table = render_rows({
                                {"field", field_name(r.field)},
                                {"n", std::to_string(r.n)},
                                {"stratum violations", std::to_string(r.stratum_violations)},
                                {"verified", yes_no(r.success())},
                            }) +
                            render_strata(r.strata);
  return {io::to_json(r), table, r.success()};
}

std::string render(const EndoFunction& f) {
  std::ostringstream os;
  os << "table:";
  for (auto y : f.table()) os << " " << y;
  os << "\n";
  return os.str();
}

Outcome cmd_joyal_forward(const json& input) {
  const EndoFunction f = joyal_forward(io::pointed_tree_from_json(input));
  return {io::to_json(f), render(f)};
}

Outcome cmd_joyal_inverse(const json& input) {
  const PointedTree p = joyal_inverse(io::function_from_json(input));
  std::ostringstream os;
  os << "n " << p.tree.size() << ", edges:";
  for (auto [a, b] : p.tree.edges()) os << " " << a << "-" << b;
  os << "\nv " << p.v << ", v2 " << p.v2 << "\n";
  return {io::to_json(p), os.str()};
}

Outcome cmd_verify_joyal(const Config& cfg) {
  const JoyalReport r = verify_joyal(static_cast<std::uint32_t>(cfg.n), census_options(cfg));
  const std::string table = render_rows({
      {"n", std::to_string(r.n)},
      {"functions", std::to_string(r.functions)},
      {"eventually constant", std::to_string(r.eventually_constant)},
      {"expected n^(n-1)", std::to_string(r.expected_eventually_constant)},
      {"trees", std::to_string(r.trees)},
      {"expected n^(n-2)", std::to_string(r.expected_trees)},
      {"pointed trees", std::to_string(r.pointed_trees)},
      {"round-trip failures", std::to_string(r.roundtrip_failures)},
      {"verified", yes_no(r.success())},
  });
  return {io::to_json(r), table, r.success()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact bijection between pointed nilpotent operators and all operators over GF(q), "
               "and Joyal's bijection for Cayley's formula."};
  app.name(args.empty() ? "nilbij" : args.front());
  app.require_subcommand(1);

  auto add_io = [&cfg](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input_path, "Read JSON input from this file (default: standard input)");
    sub->add_option("--data", cfg.inline_data, "Inline JSON input");
  };
  auto add_field = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Field characteristic (prime)")->required();
    sub->add_option("--k", cfg.k, "Extension degree (default 1)");
    sub->add_option("--poly", cfg.poly, "Monic irreducible polynomial c_0 .. c_k (default: built-in)")
        ->delimiter(',');
  };
  auto add_census = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Dimension")->required();
    sub->add_option("--budget", cfg.budget, "Maximum number of enumerated objects (default 2^24)");
    sub->add_option("--shards", cfg.shards, "Number of parallel shards (default 1)")
        ->check(CLI::Range(1u, 1024u));
  };

  app.add_option("-o,--output", cfg.output_path, "Write output to this file (default: standard output)");
  auto* mode = app.add_option_group("mode");
  mode->add_flag("--json", cfg.json_mode, "Canonical JSON output");
  mode->add_flag("--table", cfg.table_mode, "Human-readable table output (default)");
  mode->require_option(0, 1);

  auto* forward_cmd = app.add_subcommand("forward", "Map {\"T\", \"v\"} with T nilpotent to an operator Q");
  auto* inverse_cmd = app.add_subcommand("inverse", "Map an operator Q back to {\"T\", \"v\"}");
  auto* fitting_cmd = app.add_subcommand("fitting", "Fitting decomposition of an operator");
  auto* degree_cmd = app.add_subcommand("degree", "Least k with T^k v = 0 for {\"T\", \"v\"}");
  auto* count_cmd = app.add_subcommand("count-nilpotents", "Count nilpotent n x n operators over GF(q)");
  auto* theorem_cmd = app.add_subcommand("verify-theorem", "Exhaustively verify the bijection over GF(q)^n");
  auto* degrees_cmd = app.add_subcommand("verify-degrees", "Compare degree strata with Fitting strata");
  auto* jforward_cmd = app.add_subcommand("joyal-forward", "Map {\"tree\", \"v\", \"v2\"} to a function");
  auto* jinverse_cmd = app.add_subcommand("joyal-inverse", "Map a function back to {\"tree\", \"v\", \"v2\"}");
  auto* jverify_cmd = app.add_subcommand("verify-joyal", "Exhaustively verify Joyal's bijection on n points");

  for (auto* sub : {forward_cmd, inverse_cmd, fitting_cmd, degree_cmd, jforward_cmd, jinverse_cmd}) add_io(sub);
  for (auto* sub : {count_cmd, theorem_cmd, degrees_cmd}) {
    add_field(sub);
    add_census(sub);
  }
  add_census(jverify_cmd);
  for (auto* sub : app.get_subcommands({})) {
    // Mode flags are accepted after the subcommand as well.
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("nilbij");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Outcome outcome;
    if (*forward_cmd) outcome = cmd_forward(read_input(cfg, in));
    else if (*inverse_cmd) outcome = cmd_inverse(read_input(cfg, in));
    else if (*fitting_cmd) outcome = cmd_fitting(read_input(cfg, in));
    else if (*degree_cmd) outcome = cmd_degree(read_input(cfg, in));
    else if (*count_cmd) outcome = cmd_count(cfg);
    else if (*theorem_cmd) outcome = cmd_verify_theorem(cfg);
    else if (*degrees_cmd) outcome = cmd_verify_degrees(cfg);
    else if (*jforward_cmd) outcome = cmd_joyal_forward(read_input(cfg, in));
    else if (*jinverse_cmd) outcome = cmd_joyal_inverse(read_input(cfg, in));
    else outcome = cmd_verify_joyal(cfg);

    const std::string text = cfg.json_mode ? io::canonical(outcome.value) + "\n" : outcome.table;
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output_path);
      if (!file) throw Error(Errc::parse_error, "cannot write " + cfg.output_path);
      file << text;
    }
    if (!outcome.verified) {
      err << "verification failed\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace nilbij::cli
