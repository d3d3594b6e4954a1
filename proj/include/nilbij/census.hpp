#pragma once

// Exhaustive verification over all operators on F_q^n.
//
// Operators are enumerated in lexicographic order of their row-major element
// codes, so the idx-th operator and any contiguous shard of indices are
// reproducible. Shards run on separate threads and only ever add counts, so
// reports do not depend on the shard count.

#include <cstdint>
#include <vector>

#include "nilbij/bijection.hpp"
#include "nilbij/budget.hpp"
#include "nilbij/joyal.hpp"

namespace nilbij {

struct CensusOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned shards = 1;
};

/// All n x n operators over a field, indexed lexicographically.
class OperatorSpace {
 public:
  /// Throws BudgetExceeded when q^(n^2) > budget.
  OperatorSpace(FieldPtr field, std::size_t n, std::uint64_t budget = kDefaultBudget);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  Matrix at(std::uint64_t idx) const;
  std::uint64_t index_of(const Matrix& t) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::uint64_t size_;
};

std::vector<Matrix> enumerate_operators(const FieldPtr& field, std::size_t n, std::uint64_t budget = kDefaultBudget);
std::vector<Vector> enumerate_vectors(const FieldPtr& field, std::size_t n, std::uint64_t budget = kDefaultBudget);

struct NilpotentCount {
  FieldSpec field;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::uint64_t total_operators = 0;
  std::uint64_t nilpotent_count = 0;
  std::uint64_t expected_nilpotents = 0;  // q^(n(n-1))
  // nilpotent_count / total_operators in lowest terms.
  std::uint64_t ratio_numerator = 0;
  std::uint64_t ratio_denominator = 0;

  /// nilpotent_count / total_operators == 1 / q^n exactly.
  bool ratio_is_inverse_space_size() const noexcept;
  bool success() const noexcept {
    return nilpotent_count == expected_nilpotents && ratio_is_inverse_space_size();
  }
};

struct DegreeStratum {
  std::size_t k = 0;
  std::uint64_t left_count = 0;   // pairs (T, v) with degree k
  std::uint64_t right_count = 0;  // operators Q with dim of the invertible Fitting part = k

  bool operator==(const DegreeStratum&) const = default;
};

struct DegreeTable {
  FieldSpec field;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::vector<DegreeStratum> strata;  // k = 0..n
  std::uint64_t stratum_violations = 0;  // pairs whose image lies in another stratum

  bool success() const noexcept;
};

struct CensusReport {
  FieldSpec field;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::uint64_t total_operators = 0;
  std::uint64_t nilpotent_count = 0;
  std::uint64_t expected_nilpotents = 0;
  std::uint64_t domain_size = 0;  // |Nil| * q^n
  std::uint64_t roundtrip_failures = 0;
  std::uint64_t surjectivity_gap = 0;  // operators never hit by forward
  std::uint64_t injectivity_collisions = 0;  // extra hits on operators hit more than once
  std::uint64_t stratum_violations = 0;
  std::vector<DegreeStratum> per_degree;
  double elapsed_seconds = 0.0;

  bool success() const noexcept;
};

struct JoyalReport {
  std::uint32_t n = 0;
  std::uint64_t functions = 0;
  std::uint64_t eventually_constant = 0;
  std::uint64_t expected_eventually_constant = 0;  // n^(n-1)
  std::uint64_t trees = 0;
  std::uint64_t expected_trees = 0;  // n^(n-2), 1 for n = 1
  std::uint64_t pointed_trees = 0;   // trees * n^2
  std::uint64_t roundtrip_failures = 0;
  double elapsed_seconds = 0.0;

  bool success() const noexcept;
};

NilpotentCount count_nilpotents(const FieldPtr& field, std::size_t n, const CensusOptions& options = {});
CensusReport verify_theorem(const FieldPtr& field, std::size_t n, const CensusOptions& options = {});
DegreeTable verify_degree_refinement(const FieldPtr& field, std::size_t n, const CensusOptions& options = {});
JoyalReport verify_joyal(std::uint32_t n, const CensusOptions& options = {});

}  // namespace nilbij
