#pragma once

#include <set>
#include <vector>

#include "nilbij/subspaces.hpp"
#include "oracle.hpp"

namespace test {

inline oracle::Gf gf_of(const nilbij::FieldPtr& f) {
  return oracle::Gf{f->characteristic(), f->degree(), f->spec().poly};
}

inline oracle::Mat to_oracle(const nilbij::Matrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::Vec to_oracle(const nilbij::Vector& x) { return {x.entries().begin(), x.entries().end()}; }

inline std::set<oracle::Vec> as_set(const nilbij::Subspace& s) {
  std::vector<oracle::Vec> gens;
  for (const auto& b : s.basis()) gens.push_back(to_oracle(b));
  return oracle::span_set(gf_of(s.field()), s.ambient_dim(), gens);
}

inline nilbij::Matrix mat(const nilbij::FieldPtr& f, const std::vector<std::vector<nilbij::Code>>& rows,
                          std::size_t cols = 0) {
  return nilbij::Matrix::from_rows(f, rows, cols);
}

inline nilbij::Vector vec(const nilbij::FieldPtr& f, std::vector<nilbij::Code> entries) {
  return nilbij::Vector(f, std::move(entries));
}

/// Every subspace of F_q^n, as the distinct spans of all families of up to n vectors.
inline std::vector<nilbij::Subspace> all_subspaces(const nilbij::FieldPtr& f, std::size_t n) {
  std::vector<nilbij::Subspace> out{nilbij::Subspace::zero(f, n)};
  std::set<std::vector<std::size_t>> seen_pivots_and_rows;
  // Grow spans one vector at a time; canonical form makes duplicates comparable.
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<nilbij::Subspace> next = out;
    for (const auto& s : out) {
      for (const auto& x : oracle::all_vectors(gf_of(f), n)) {
        std::vector<nilbij::Vector> gens = s.basis();
        gens.emplace_back(f, x);
        auto t = nilbij::Subspace::span(f, n, gens);
        bool dup = false;
        for (const auto& u : next) dup = dup || u == t;
        if (!dup) next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace test
