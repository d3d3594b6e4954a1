#include <doctest.h>

#include "nilbij/census.hpp"
#include "nilbij/fitting.hpp"
#include "support.hpp"

using namespace nilbij;
using test::mat;

namespace {

Subspace span_of(const FieldPtr& f, std::size_t n, std::vector<std::vector<Code>> gens) {
  std::vector<Vector> vs;
  for (auto& g : gens) vs.emplace_back(f, std::move(g));
  return Subspace::span(f, n, vs);
}

// W = {x : Q^m x = 0 for some m} and V = intersection of the images of Q^m, m <= n + 1.
std::pair<std::set<oracle::Vec>, std::set<oracle::Vec>> fitting_sets(const Matrix& q) {
  const auto gf = test::gf_of(q.field());
  const auto oq = test::to_oracle(q);
  const std::size_t n = q.rows();
  std::set<oracle::Vec> w, v;
  const auto all = oracle::all_vectors(gf, n);
  for (const auto& x : all) {
    oracle::Vec y = x;
    for (std::size_t m = 0; m <= n + 1 && !oracle::is_zero(y); ++m) y = oracle::apply(gf, oq, y);
    if (oracle::is_zero(y)) w.insert(x);
  }
  v.insert(all.begin(), all.end());
  oracle::Mat power(n, oracle::Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t m = 0; m <= n + 1; ++m) {
    const auto img = oracle::image_set(gf, power, n);
    std::set<oracle::Vec> keep;
    for (const auto& x : v)
      if (img.count(x)) keep.insert(x);
    v = std::move(keep);
    power = oracle::mul(gf, power, oq);
  }
  return {w, v};
}

std::vector<Matrix> square_matrices(const FieldPtr& f, std::size_t m) {
  std::vector<Matrix> out;
  for (const auto& e : oracle::all_vectors(test::gf_of(f), m * m)) out.emplace_back(f, m, m, e);
  return out;
}

}  // namespace

TEST_CASE("decompose examples") {
  const auto f2 = Field::prime(2);
  const auto f3 = Field::prime(3);

  const auto inv = mat(f3, {{1, 2}, {0, 1}});
  const auto a = fitting_decompose(inv);
  CHECK(a.w.dim() == 0);
  CHECK(a.v == Subspace::full(f3, 2));
  CHECK(a.r.matrix() == inv);
  CHECK(a.s.matrix().rows() == 0);

  const auto nil = mat(f3, {{0, 2}, {0, 0}});
  const auto b = fitting_decompose(nil);
  CHECK(b.w == Subspace::full(f3, 2));
  CHECK(b.v.dim() == 0);
  CHECK(b.s.matrix() == nil);

  const auto c = fitting_decompose(mat(f2, {{1, 0}, {0, 0}}));
  CHECK(c.w == span_of(f2, 2, {{0, 1}}));
  CHECK(c.v == span_of(f2, 2, {{1, 0}}));
  CHECK(c.r.matrix() == mat(f2, {{1}}));
  CHECK(c.s.matrix() == mat(f2, {{0}}));
}

TEST_CASE("assemble examples") {
  const auto f2 = Field::prime(2);
  const auto full = Subspace::full(f2, 2);
  const auto none = Subspace::zero(f2, 2);
  CHECK(fitting_assemble(full, none, SubspaceMap::identity(full), SubspaceMap::zero(none, none)) ==
        Matrix::identity(f2, 2));
  CHECK(fitting_assemble(none, full, SubspaceMap::zero(none, none), SubspaceMap::zero(full, full)) == Matrix(f2, 2, 2));

  const auto v = span_of(f2, 2, {{1, 0}});
  const auto w = span_of(f2, 2, {{0, 1}});
  CHECK(fitting_assemble(v, w, SubspaceMap(v, v, mat(f2, {{1}})), SubspaceMap(w, w, mat(f2, {{0}}))) ==
        mat(f2, {{1, 0}, {0, 0}}));
}

TEST_CASE("assemble errors") {
  const auto f2 = Field::prime(2);
  const auto v = span_of(f2, 2, {{1, 0}});
  const auto w = span_of(f2, 2, {{0, 1}});
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  const SubspaceMap one(v, v, mat(f2, {{1}}));
  CHECK(code_of([&] { (void)fitting_assemble(v, v, one, one); }) == Errc::not_complement);
  CHECK(code_of([&] {
          (void)fitting_assemble(v, w, SubspaceMap::zero(v, v), SubspaceMap::zero(w, w));
        }) == Errc::not_automorphism);
  CHECK(code_of([&] { (void)fitting_assemble(v, w, one, SubspaceMap::identity(w)); }) == Errc::not_nilpotent);
}

TEST_CASE("decomposition matches the kernel/image set oracle and chains stabilize at n") {
  for (auto [f, n] : {std::pair{Field::prime(2), std::size_t{2}},
                      {Field::prime(2), std::size_t{3}},
                      {Field::prime(3), std::size_t{2}}}) {
    for (const auto& q : enumerate_operators(f, n)) {
      const auto fp = fitting_decompose(q);
      const auto [w_set, v_set] = fitting_sets(q);
      CHECK(test::as_set(fp.w) == w_set);
      CHECK(test::as_set(fp.v) == v_set);
      CHECK(fp.w.dim() + fp.v.dim() == n);
      CHECK(is_invertible(fp.r.matrix()));
      CHECK(is_nilpotent(fp.s.matrix()));

      const auto ker = kernel_chain(q, n + 1);
      const auto img = image_chain(q, n + 1);
      CHECK(ker[n] == ker[n + 1]);
      CHECK(img[n] == img[n + 1]);
      CHECK(ker[n] == fp.w);
      CHECK(img[n] == fp.v);
    }
  }
}

TEST_CASE("assemble after decompose is the identity on GF(2)^2 and GF(2)^3") {
  const auto f2 = Field::prime(2);
  for (std::size_t n : {2u, 3u}) {
    std::size_t seen = 0;
    for (const auto& q : enumerate_operators(f2, n)) {
      const auto fp = fitting_decompose(q);
      CHECK(fitting_assemble(fp.v, fp.w, fp.r, fp.s) == q);
      ++seen;
    }
    CHECK(seen == (n == 2 ? 16u : 512u));
  }
}

TEST_CASE("decompose after assemble is the identity on all Fitting data over GF(2)^2 and GF(2)^3") {
  const auto f2 = Field::prime(2);
  for (std::size_t n : {2u, 3u}) {
    const auto subs = test::all_subspaces(f2, n);
    std::size_t assembled = 0;
    for (const auto& v : subs) {
      for (const auto& w : subs) {
        if (!are_complementary(v, w)) continue;
        for (const auto& rm : square_matrices(f2, v.dim())) {
          if (!is_invertible(rm)) continue;
          for (const auto& sm : square_matrices(f2, w.dim())) {
            if (!is_nilpotent(sm)) continue;
            const SubspaceMap r(v, v, rm), s(w, w, sm);
            const Matrix q = fitting_assemble(v, w, r, s);
            CHECK(fitting_decompose(q) == FittingPair{w, v, r, s});
            // Nilpotent exactly when the invertible part is absent.
            CHECK(is_nilpotent(q) == (v.dim() == 0));
            ++assembled;
          }
        }
      }
    }
    // Each operator arises from exactly one Fitting datum.
    CHECK(assembled == (n == 2 ? 16u : 512u));
  }
}
