#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilbij/cli.hpp"
#include "nilbij/json_io.hpp"
#include "support.hpp"

using namespace nilbij;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "nilbij");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify-theorem reports the nilpotent count") {
  const auto r = run({"verify-theorem", "--p", "2", "--n", "2", "--json"});
  CHECK(r.code == 0);
  const auto j = io::parse(r.out);
  CHECK(j.at("nilpotent_count") == 4);
  CHECK(j.at("success") == true);

  const auto table = run({"verify-theorem", "--p", "2", "--n", "2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("round-trip failures") != std::string::npos);
}

TEST_CASE("forward of the zero pair is zero") {
  const std::string input =
      R"({"T":{"field":{"p":2},"rows":2,"cols":2,"data":[[0,0],[0,0]]},"v":{"field":{"p":2},"entries":[0,0]}})";
  const auto r = run({"--json", "forward"}, input);
  CHECK(r.code == 0);
  CHECK(io::matrix_from_json(io::parse(r.out)) == Matrix(Field::prime(2), 2, 2));
  // Mode flag after the subcommand, inline data.
  CHECK(run({"forward", "--data", input, "--json"}).out == r.out);
}

TEST_CASE("joyal-forward on the two-vertex tree") {
  const auto r = run({"joyal-forward", "--json"}, R"({"tree":{"n":2,"edges":[[0,1]]},"v":0,"v2":1})");
  CHECK(r.code == 0);
  CHECK(io::parse(r.out).at("table") == io::json::array({0, 1}));
  const auto back = run({"joyal-inverse", "--json"}, R"({"n":2,"table":[1,0]})");
  CHECK(io::parse(back.out) == io::parse(R"({"tree":{"n":2,"edges":[[0,1]]},"v":1,"v2":0})"));
}

TEST_CASE("forward output piped into inverse reproduces the input byte for byte") {
  for (auto spec : {FieldSpec{2, 1, {}}, FieldSpec{2, 2, {}}, FieldSpec{3, 1, {}}}) {
    const auto f = Field::make(spec);
    for (const auto& t : enumerate_operators(f, 2)) {
      if (!is_nilpotent(t)) continue;
      for (const auto& v : enumerate_vectors(f, 2)) {
        const std::string input = io::canonical(io::to_json(NilPointed{t, v})) + "\n";
        const auto fwd = run({"forward", "--json"}, input);
        REQUIRE(fwd.code == 0);
        const auto inv = run({"inverse", "--json"}, fwd.out);
        REQUIRE(inv.code == 0);
        CHECK(inv.out == input);
      }
    }
  }
}

TEST_CASE("other subcommands") {
  const std::string diag = R"({"field":{"p":2},"rows":2,"cols":2,"data":[[1,0],[0,0]]})";
  const auto fit = run({"fitting", "--json"}, diag);
  CHECK(fit.code == 0);
  CHECK(io::parse(fit.out).at("R").at("data") == io::parse("[[1]]"));
  CHECK(run({"fitting"}, diag).out.find("V: dim 1") != std::string::npos);

  const auto deg = run({"degree", "--json"},
                       R"({"T":{"field":{"p":2},"rows":2,"cols":2,"data":[[0,0],[1,0]]},"v":{"field":{"p":2},"entries":[1,0]}})");
  CHECK(deg.out == "{\"degree\":2}\n");

  const auto count = run({"count-nilpotents", "--p", "3", "--n", "2", "--json", "--shards", "2"});
  CHECK(count.code == 0);
  CHECK(io::parse(count.out).at("nilpotent_count") == 9);
  CHECK(io::parse(run({"count-nilpotents", "--p", "2", "--k", "2", "--poly", "1,1,1", "--n", "2", "--json"}).out)
            .at("nilpotent_count") == 16);

  const auto degs = run({"verify-degrees", "--p", "2", "--n", "3", "--json"});
  CHECK(degs.code == 0);
  CHECK(io::parse(degs.out).at("per_degree").size() == 4);

  const auto joy = run({"verify-joyal", "--n", "4", "--json"});
  CHECK(joy.code == 0);
  CHECK(io::parse(joy.out).at("trees") == 16);
}

TEST_CASE("file input and output") {
  const auto dir = std::filesystem::temp_directory_path() / "nilbij_cli_test";
  std::filesystem::create_directories(dir);
  const auto in_path = (dir / "q.json").string(), out_path = (dir / "tv.json").string();
  std::ofstream(in_path) << R"({"field":{"p":2},"rows":1,"cols":1,"data":[[1]]})";
  const auto r = run({"inverse", "--json", "-i", in_path, "-o", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream result(out_path);
  const std::string text((std::istreambuf_iterator<char>(result)), {});
  CHECK(io::pair_from_json(io::parse(text)) ==
        NilPointed{test::mat(Field::prime(2), {{0}}), test::vec(Field::prime(2), {1})});
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes for usage and input errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify-theorem", "--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify-theorem", "--n", "2"}).code == 2);                    // missing --p
  CHECK(run({"verify-theorem", "--p", "4", "--n", "2"}).code == 2);        // not prime
  CHECK(run({"verify-theorem", "--p", "2", "--n", "5"}).code == 2);        // budget
  CHECK(run({"verify-theorem", "--p", "2", "--n", "2", "--budget", "8"}).code == 2);
  CHECK(run({"count-nilpotents", "--p", "2", "--n", "2", "--shards", "0"}).code == 2);
  CHECK(run({"--json", "--table", "verify-joyal", "--n", "3"}).code == 2);
  CHECK(run({"forward"}, "{not json").code == 2);
  CHECK(run({"forward"}, R"({"T":{"field":{"p":2},"rows":1,"cols":1,"data":[[1]]},"v":{"field":{"p":2},"entries":[1]}})")
            .code == 2);  // T not nilpotent
  CHECK(run({"forward"}, R"({"T":{"field":{"p":2},"rows":1,"cols":1,"data":[[0]]},"v":{"field":{"p":3},"entries":[1]}})")
            .code == 2);  // field mismatch
  CHECK(run({"inverse"}, R"({"field":{"p":2},"rows":1,"cols":2,"data":[[0,0]]})").code == 2);
  CHECK(run({"joyal-forward"}, R"({"tree":{"n":2,"edges":[[0,1]]},"v":0,"v2":5})").code == 2);
  CHECK(run({"joyal-inverse"}, R"({"n":2,"table":[0,3]})").code == 2);
  CHECK(run({"verify-joyal", "--n", "9"}).code == 2);

  const auto bad = run({"forward"}, "{not json");
  CHECK(bad.err.find("ParseError") != std::string::npos);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
}
