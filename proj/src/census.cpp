#include "nilbij/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>

namespace nilbij {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Splits [0, total) into `shards` contiguous ranges and runs fn(begin, end)
// on each in its own thread. Results come back in shard order.
template <class Fn>
auto run_sharded(std::uint64_t total, unsigned shards, Fn fn) {
  using Partial = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  shards = std::max(1u, shards);
  std::vector<Partial> partials(shards);
  if (shards == 1) {
    partials[0] = fn(0, total);
    return partials;
  }
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      const std::uint64_t begin = total * s / shards;
      const std::uint64_t end = total * (s + 1) / shards;
      workers.emplace_back([&, s, begin, end] {
        try {
          partials[s] = fn(begin, end);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::size_t fitting_dim(const Matrix& q) { return rank(mat_pow(q, q.rows())); }

struct Tally {
  std::uint64_t nilpotents = 0;
  std::uint64_t failures = 0;
  std::uint64_t violations = 0;
  std::vector<std::uint64_t> left;
  std::vector<std::uint64_t> right;
};

// One pass over every operator Q (codomain side) and, for nilpotent Q, over
// every pair (Q, v) (domain side).
struct CensusPass {
  const OperatorSpace& space;
  const std::vector<Vector>& vectors;
  bool roundtrips;
  std::vector<std::atomic<std::uint32_t>>* hits;

  Tally operator()(std::uint64_t begin, std::uint64_t end) const {
    const std::size_t n = space.dim();
    Tally t;
    t.left.assign(n + 1, 0);
    t.right.assign(n + 1, 0);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Matrix q = space.at(idx);
      const FittingPair fp = fitting_decompose(q);
      ++t.right[fp.v.dim()];
      if (roundtrips && !(forward(inverse(q)) == q)) ++t.failures;

      if (!is_nilpotent(q)) continue;
      ++t.nilpotents;
      for (const auto& v : vectors) {
        const std::size_t k = degree(q, v);
        ++t.left[k];
        const Matrix image = forward(q, v);
        if (fitting_dim(image) != k) ++t.violations;
        if (roundtrips) {
          if (!(inverse(image) == NilPointed{q, v})) ++t.failures;
          (*hits)[space.index_of(image)].fetch_add(1, std::memory_order_relaxed);
        }
      }
    }
    return t;
  }
};

Tally merge(const std::vector<Tally>& parts, std::size_t n) {
  Tally out;
  out.left.assign(n + 1, 0);
  out.right.assign(n + 1, 0);
  for (const auto& p : parts) {
    out.nilpotents += p.nilpotents;
    out.failures += p.failures;
    out.violations += p.violations;
    for (std::size_t k = 0; k <= n; ++k) {
      out.left[k] += p.left[k];
      out.right[k] += p.right[k];
    }
  }
  return out;
}

std::vector<DegreeStratum> strata_of(const Tally& t) {
  std::vector<DegreeStratum> out;
  for (std::size_t k = 0; k < t.left.size(); ++k) out.push_back({k, t.left[k], t.right[k]});
  return out;
}

bool strata_balanced(const std::vector<DegreeStratum>& strata) {
  return std::all_of(strata.begin(), strata.end(),
                     [](const DegreeStratum& s) { return s.left_count == s.right_count; });
}

}  // namespace

// ---------------------------------------------------------------- OperatorSpace

OperatorSpace::OperatorSpace(FieldPtr field, std::size_t n, std::uint64_t budget)
    : field_(std::move(field)), n_(n), size_(budgeted_power(field_->order(), n * n, budget)) {}

Matrix OperatorSpace::at(std::uint64_t idx) const {
  if (idx >= size_) throw Error(Errc::dimension_mismatch, "operator index out of range");
  const std::uint64_t q = field_->order();
  std::vector<Code> data(n_ * n_);
  for (std::size_t i = data.size(); i-- > 0;) {
    data[i] = static_cast<Code>(idx % q);
    idx /= q;
  }
  return Matrix(field_, n_, n_, std::move(data));
}

std::uint64_t OperatorSpace::index_of(const Matrix& t) const {
  require_same_field(field_, t.field());
  if (t.rows() != n_ || t.cols() != n_) throw Error(Errc::dimension_mismatch, "operator has the wrong size");
  std::uint64_t idx = 0;
  for (Code c : t.data()) idx = idx * field_->order() + c;
  return idx;
}

std::vector<Matrix> enumerate_operators(const FieldPtr& field, std::size_t n, std::uint64_t budget) {
  const OperatorSpace space(field, n, budget);
  std::vector<Matrix> out;
  out.reserve(space.size());
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) out.push_back(space.at(idx));
  return out;
}

std::vector<Vector> enumerate_vectors(const FieldPtr& field, std::size_t n, std::uint64_t budget) {
  const std::uint64_t total = budgeted_power(field->order(), n, budget);
  std::vector<Vector> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Code> entries(n);
    std::uint64_t rest = idx;
    for (std::size_t i = n; i-- > 0;) {
      entries[i] = static_cast<Code>(rest % field->order());
      rest /= field->order();
    }
    out.emplace_back(field, std::move(entries));
  }
  return out;
}

// ---------------------------------------------------------------- reports

bool NilpotentCount::ratio_is_inverse_space_size() const noexcept {
  return ratio_numerator == 1 && ratio_denominator == ipow(q, n);
}

bool DegreeTable::success() const noexcept { return stratum_violations == 0 && strata_balanced(strata); }

bool CensusReport::success() const noexcept {
  return nilpotent_count == expected_nilpotents && roundtrip_failures == 0 && surjectivity_gap == 0 &&
         injectivity_collisions == 0 && stratum_violations == 0 && strata_balanced(per_degree);
}

bool JoyalReport::success() const noexcept {
  return eventually_constant == expected_eventually_constant && trees == expected_trees &&
         eventually_constant == std::uint64_t{n} * trees && roundtrip_failures == 0;
}

NilpotentCount count_nilpotents(const FieldPtr& field, std::size_t n, const CensusOptions& options) {
  const OperatorSpace space(field, n, options.budget);
  const auto parts = run_sharded(space.size(), options.shards, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) count += is_nilpotent(space.at(idx)) ? 1 : 0;
    return count;
  });

  NilpotentCount out;
  out.field = field->spec();
  out.q = field->order();
  out.n = n;
  out.total_operators = space.size();
  out.nilpotent_count = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  out.expected_nilpotents = ipow(out.q, n * (n == 0 ? 0 : n - 1));
  const std::uint64_t g = std::gcd(out.nilpotent_count, out.total_operators);
  out.ratio_numerator = out.nilpotent_count / g;
  out.ratio_denominator = out.total_operators / g;
  return out;
}

CensusReport verify_theorem(const FieldPtr& field, std::size_t n, const CensusOptions& options) {
  const auto start = Clock::now();
  const OperatorSpace space(field, n, options.budget);
  const auto vectors = enumerate_vectors(field, n, options.budget);
  std::vector<std::atomic<std::uint32_t>> hits(space.size());

  const Tally t = merge(run_sharded(space.size(), options.shards, CensusPass{space, vectors, true, &hits}), n);

  CensusReport out;
  out.field = field->spec();
  out.q = field->order();
  out.n = n;
  out.total_operators = space.size();
  out.nilpotent_count = t.nilpotents;
  out.expected_nilpotents = ipow(out.q, n * (n == 0 ? 0 : n - 1));
  out.domain_size = t.nilpotents * vectors.size();
  out.roundtrip_failures = t.failures;
  for (const auto& h : hits) {
    const std::uint32_t c = h.load(std::memory_order_relaxed);
    if (c == 0) ++out.surjectivity_gap;
    if (c > 1) out.injectivity_collisions += c - 1;
  }
  out.stratum_violations = t.violations;
  out.per_degree = strata_of(t);
  out.elapsed_seconds = seconds_since(start);
  return out;
}

DegreeTable verify_degree_refinement(const FieldPtr& field, std::size_t n, const CensusOptions& options) {
  const OperatorSpace space(field, n, options.budget);
  const auto vectors = enumerate_vectors(field, n, options.budget);
  const Tally t = merge(run_sharded(space.size(), options.shards, CensusPass{space, vectors, false, nullptr}), n);

  DegreeTable out;
  out.field = field->spec();
  out.q = field->order();
  out.n = n;
  out.strata = strata_of(t);
  out.stratum_violations = t.violations;
  return out;
}

JoyalReport verify_joyal(std::uint32_t n, const CensusOptions& options) {
  const auto start = Clock::now();
  JoyalReport out;
  out.n = n;
  out.functions = function_count(n, options.budget);
  out.expected_eventually_constant = ipow(n, n - 1);
  out.expected_trees = n >= 2 ? ipow(n, n - 2) : 1;

  struct FunctionTally {
    std::uint64_t eventually_constant = 0;
    std::uint64_t failures = 0;
  };
  const auto fparts = run_sharded(out.functions, options.shards, [n](std::uint64_t begin, std::uint64_t end) {
    FunctionTally t;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const EndoFunction f = function_at(n, idx);
      if (is_eventually_constant(f)) ++t.eventually_constant;
      if (!(joyal_forward(joyal_inverse(f)) == f)) ++t.failures;
    }
    return t;
  });
  for (const auto& p : fparts) {
    out.eventually_constant += p.eventually_constant;
    out.roundtrip_failures += p.failures;
  }

  const auto trees = enumerate_trees(n, options.budget);
  out.trees = trees.size();
  out.pointed_trees = budgeted_power(n, 2, options.budget) * out.trees;
  if (out.pointed_trees > options.budget) throw Error(Errc::budget_exceeded, "too many pointed trees");
  const auto tparts = run_sharded(trees.size(), options.shards, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t failures = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex v2 = 0; v2 < n; ++v2) {
          const PointedTree p{trees[i], v, v2};
          if (!(joyal_inverse(joyal_forward(p)) == p)) ++failures;
        }
      }
    }
    return failures;
  });
  out.roundtrip_failures += std::accumulate(tparts.begin(), tparts.end(), std::uint64_t{0});
  out.elapsed_seconds = seconds_since(start);
  return out;
}

}  // namespace nilbij
