#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilbij/bijection.hpp"
#include "nilbij/census.hpp"
#include "nilbij/fitting.hpp"
#include "nilbij/joyal.hpp"
#include "nilbij/json_io.hpp"

namespace py = pybind11;
using namespace nilbij;

namespace {

using Rows = std::vector<std::vector<Code>>;

FieldPtr make_field(std::uint32_t p, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly) {
  FieldSpec spec{p, k, {}};
  if (poly) {
    spec.poly = *poly;
  } else if (k > 1) {
    auto builtin = builtin_polynomial(p, k);
    if (!builtin) throw Error(Errc::invalid_field, "no built-in polynomial; pass poly");
    spec.poly = *builtin;
  }
  return Field::make(spec);
}

Matrix to_matrix(const FieldPtr& f, const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return Matrix::from_rows(f, rows, cols);
}

Rows to_rows(const Matrix& m) {
  Rows out(m.rows(), std::vector<Code>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

std::vector<Code> to_list(const Vector& x) { return {x.entries().begin(), x.entries().end()}; }

CensusOptions options(std::uint64_t budget, unsigned shards) { return {.budget = budget, .shards = shards}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact nilpotent/pointed-operator bijection over finite fields";

  py::register_exception<Error>(m, "NilbijError", PyExc_ValueError);

  m.def(
      "forward",
      [](const Rows& t, const std::vector<Code>& v, std::uint32_t p, std::uint32_t k,
         const std::optional<std::vector<std::uint32_t>>& poly) {
        const auto f = make_field(p, k, poly);
        return to_rows(forward(to_matrix(f, t), Vector(f, v)));
      },
      py::arg("t"), py::arg("v"), py::arg("p"), py::arg("k") = 1, py::arg("poly") = py::none());

  m.def(
      "inverse",
      [](const Rows& q, std::uint32_t p, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly) {
        const auto f = make_field(p, k, poly);
        const auto tv = inverse(to_matrix(f, q));
        return std::make_pair(to_rows(tv.t), to_list(tv.v));
      },
      py::arg("q"), py::arg("p"), py::arg("k") = 1, py::arg("poly") = py::none());

  m.def(
      "degree",
      [](const Rows& t, const std::vector<Code>& v, std::uint32_t p, std::uint32_t k,
         const std::optional<std::vector<std::uint32_t>>& poly) {
        const auto f = make_field(p, k, poly);
        return degree(to_matrix(f, t), Vector(f, v));
      },
      py::arg("t"), py::arg("v"), py::arg("p"), py::arg("k") = 1, py::arg("poly") = py::none());

  m.def(
      "fitting_json",
      [](const Rows& q, std::uint32_t p, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly) {
        return io::canonical(io::to_json(fitting_decompose(to_matrix(make_field(p, k, poly), q))));
      },
      py::arg("q"), py::arg("p"), py::arg("k") = 1, py::arg("poly") = py::none());

  m.def(
      "is_nilpotent",
      [](const Rows& t, std::uint32_t p, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly) {
        return is_nilpotent(to_matrix(make_field(p, k, poly), t));
      },
      py::arg("t"), py::arg("p"), py::arg("k") = 1, py::arg("poly") = py::none());

  m.def(
      "count_nilpotents_json",
      [](std::uint32_t p, std::size_t n, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly,
         std::uint64_t budget, unsigned shards) {
        py::gil_scoped_release release;
        return io::canonical(io::to_json(count_nilpotents(make_field(p, k, poly), n, options(budget, shards))));
      },
      py::arg("p"), py::arg("n"), py::arg("k") = 1, py::arg("poly") = py::none(), py::arg("budget") = kDefaultBudget, py::arg("shards") = 1);

  m.def(
      "verify_theorem_json",
      [](std::uint32_t p, std::size_t n, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly,
         std::uint64_t budget, unsigned shards) {
        py::gil_scoped_release release;
        return io::canonical(io::to_json(verify_theorem(make_field(p, k, poly), n, options(budget, shards))));
      },
      py::arg("p"), py::arg("n"), py::arg("k") = 1, py::arg("poly") = py::none(), py::arg("budget") = kDefaultBudget, py::arg("shards") = 1);

  m.def(
      "verify_degrees_json",
      [](std::uint32_t p, std::size_t n, std::uint32_t k, const std::optional<std::vector<std::uint32_t>>& poly,
         std::uint64_t budget, unsigned shards) {
        py::gil_scoped_release release;
        return io::canonical(
            io::to_json(verify_degree_refinement(make_field(p, k, poly), n, options(budget, shards))));
      },
      py::arg("p"), py::arg("n"), py::arg("k") = 1, py::arg("poly") = py::none(), py::arg("budget") = kDefaultBudget, py::arg("shards") = 1);

  m.def(
      "verify_joyal_json",
      [](std::uint32_t n, std::uint64_t budget, unsigned shards) {
        py::gil_scoped_release release;
        return io::canonical(io::to_json(verify_joyal(n, options(budget, shards))));
      },
      py::arg("n"), py::arg("budget") = kDefaultBudget, py::arg("shards") = 1);

  m.def(
      "joyal_forward",
      [](std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, Vertex v, Vertex v2) {
        return joyal_forward(Tree(n, edges), v, v2).table();
      },
      py::arg("n"), py::arg("edges"), py::arg("v"), py::arg("v2"));

  m.def(
      "joyal_inverse",
      [](const std::vector<Vertex>& table) {
        const auto pt = joyal_inverse(EndoFunction(table));
        return py::make_tuple(pt.tree.size(), pt.tree.edges(), pt.v, pt.v2);
      },
      py::arg("table"));
}
