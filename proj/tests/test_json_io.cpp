#include <doctest.h>

#include <random>

#include "nilbij/json_io.hpp"
#include "support.hpp"

using namespace nilbij;
using test::mat;
using test::vec;

namespace {

Errc code_of_parse(const std::string& text, auto loader) {
  try {
    (void)loader(io::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::not_basis;  // sentinel: no error
}

}  // namespace

TEST_CASE("field encoding") {
  CHECK(io::canonical(io::to_json(Field::prime(5)->spec())) == R"({"k":1,"p":5})");
  CHECK(io::canonical(io::to_json(Field::make({2, 2, {}})->spec())) == R"({"k":2,"p":2,"poly":[1,1,1]})");
  CHECK(*io::field_from_json(io::parse(R"({"p":2,"k":2,"poly":[1,1,1]})")) == *Field::make({2, 2, {}}));
  CHECK(*io::field_from_json(io::parse(R"({"p":3})")) == *Field::prime(3));
  CHECK(*io::field_from_json(io::parse(R"({"p":3,"k":2})")) == *Field::make({3, 2, {2, 2, 1}}));
}

TEST_CASE("matrix and vector schemas") {
  const auto f2 = Field::prime(2);
  const auto m = mat(f2, {{0, 1}, {0, 0}});
  const std::string text = R"({"cols":2,"data":[[0,1],[0,0]],"field":{"k":1,"p":2},"rows":2})";
  CHECK(io::canonical(io::to_json(m)) == text);
  CHECK(io::matrix_from_json(io::parse(text)) == m);
  CHECK(io::matrix_from_json(io::parse(R"({"field":{"p":2},"rows":2,"cols":2,"data":[[0,1],[0,0]]})")) == m);

  const auto v = vec(f2, {1, 0});
  CHECK(io::canonical(io::to_json(v)) == R"({"entries":[1,0],"field":{"k":1,"p":2}})");
  CHECK(io::vector_from_json(io::to_json(v)) == v);

  const auto empty = Matrix(f2, 0, 0);
  CHECK(io::matrix_from_json(io::to_json(empty)) == empty);
}

TEST_CASE("malformed input is rejected") {
  auto matrix = [](const io::json& j) { return io::matrix_from_json(j); };
  CHECK(code_of_parse("{", matrix) == Errc::parse_error);
  CHECK(code_of_parse(R"({"rows":1,"cols":1,"data":[[0]]})", matrix) == Errc::parse_error);
  CHECK(code_of_parse(R"({"field":{"p":2},"rows":2,"cols":2,"data":[[0,1]]})", matrix) == Errc::parse_error);
  CHECK(code_of_parse(R"({"field":{"p":2},"rows":1,"cols":2,"data":[[0,1,1]]})", matrix) == Errc::parse_error);
  CHECK(code_of_parse(R"({"field":{"p":2},"rows":1,"cols":1,"data":[[-1]]})", matrix) == Errc::parse_error);
  CHECK(code_of_parse(R"({"field":{"p":2},"rows":1,"cols":1,"data":[["1"]]})", matrix) == Errc::parse_error);
  CHECK(code_of_parse(R"({"field":{"p":2},"rows":1,"cols":1,"data":[[2]]})", matrix) == Errc::invalid_field);
  CHECK(code_of_parse(R"({"field":{"p":4},"rows":1,"cols":1,"data":[[0]]})", matrix) == Errc::invalid_field);
  CHECK(code_of_parse(R"([1,2])", matrix) == Errc::parse_error);
}

TEST_CASE("subspace loader re-canonicalizes") {
  const auto f2 = Field::prime(2);
  const auto good = io::subspace_from_json(io::parse(R"({"field":{"p":2},"ambient":3,"basis":[[1,0,1],[0,1,0]]})"));
  CHECK(good.canonical);
  CHECK(good.subspace.dim() == 2);

  const auto bad = io::subspace_from_json(io::parse(R"({"field":{"p":2},"ambient":3,"basis":[[1,1,1],[0,1,0]]})"));
  CHECK_FALSE(bad.canonical);
  CHECK(bad.subspace == good.subspace);
  CHECK(io::to_json(bad.subspace) == io::to_json(good.subspace));
}

TEST_CASE("fitting pair, pair and joyal schemas") {
  const auto f2 = Field::prime(2);
  const auto fp = fitting_decompose(mat(f2, {{1, 0}, {0, 0}}));
  const auto j = io::to_json(fp);
  CHECK(j.at("V") == io::to_json(fp.v));
  CHECK(j.at("W") == io::to_json(fp.w));
  CHECK(j.at("R") == io::to_json(mat(f2, {{1}})));
  CHECK(j.at("S") == io::to_json(mat(f2, {{0}})));

  const NilPointed tv{mat(f2, {{0, 0}, {1, 0}}), vec(f2, {1, 0})};
  CHECK(io::pair_from_json(io::to_json(tv)) == tv);

  const Tree t(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(io::canonical(io::to_json(t)) == R"({"edges":[[0,1],[1,2],[1,3]],"n":4})");
  CHECK(io::tree_from_json(io::parse(R"({"n":4,"edges":[[1,0],[2,1],[1,3]]})")) == t);
  CHECK(io::canonical(io::to_json(EndoFunction({1, 2, 2}))) == R"({"n":3,"table":[1,2,2]})");
  CHECK(io::function_from_json(io::parse(R"({"table":[1,2,2]})")) == EndoFunction({1, 2, 2}));
  CHECK_THROWS_AS(io::function_from_json(io::parse(R"({"n":2,"table":[1,2,2]})")), Error);

  const PointedTree p{t, 3, 0};
  CHECK(io::pointed_tree_from_json(io::to_json(p)) == p);
}

TEST_CASE("canonical text is stable under decode/encode for random operators") {
  std::mt19937 rng(7);
  for (auto spec : {FieldSpec{2, 1, {}}, FieldSpec{5, 1, {}}, FieldSpec{3, 2, {}}, FieldSpec{2, 4, {}}}) {
    const auto f = Field::make(spec);
    std::uniform_int_distribution<Code> entry(0, f->order() - 1);
    std::uniform_int_distribution<std::size_t> size(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t r = size(rng), c = size(rng);
      std::vector<Code> data(r * c);
      for (auto& x : data) x = entry(rng);
      const Matrix m(f, r, c, data);
      const std::string text = io::canonical(io::to_json(m));
      CHECK(io::canonical(io::to_json(io::matrix_from_json(io::parse(text)))) == text);
      CHECK(text.find(' ') == std::string::npos);
    }
  }
}

TEST_CASE("report schemas") {
  const auto r = io::to_json(verify_theorem(Field::prime(2), 2));
  for (const char* key : {"field", "q", "n", "total_operators", "nilpotent_count", "expected_nilpotents",
                          "roundtrip_failures", "surjectivity_gap", "per_degree", "elapsed_seconds", "success"}) {
    CHECK(r.contains(key));
  }
  CHECK(r.at("per_degree").size() == 3);
  CHECK(r.at("per_degree")[0].at("k") == 0);
  CHECK(io::to_json(count_nilpotents(Field::prime(2), 2)).at("nilpotent_fraction") == "1/4");
}
