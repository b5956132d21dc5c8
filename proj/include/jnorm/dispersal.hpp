#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jnorm/core.hpp"

namespace jnorm {

// Ordered family of disjoint index pairs (n1<n2)(n3<n4)... with the
// flattened list strictly increasing.
class TwoSet {
 public:
  using Pair = std::pair<std::uint64_t, std::uint64_t>;

  TwoSet() = default;
  explicit TwoSet(std::vector<Pair> pairs);
  static TwoSet from_flat(const std::vector<std::uint64_t>& indices);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::vector<std::uint64_t> flat() const;
  // View as a DSet with block size 2 (for (1,-1)-variation evaluation).
  DSet as_dset() const { return DSet(flat(), 2); }

 private:
  std::vector<Pair> pairs_;
};

struct DispersedDecomposition {
  std::vector<TwoSet> classes;
  std::size_t dispersal = 1;  // the d of "d-dispersed"
};

// Single pair, or every next pair starts at least d after the previous
// pair ends: d(2j+1) >= d(2j) + d.
bool is_d_dispersed(const TwoSet& delta, std::size_t d);

// Greedy left-to-right: each pair joins the lowest-indexed class whose
// maximum element m satisfies m + d <= first(pair); otherwise a new class
// is opened.  The class count never exceeds floor(d/2) + 2.
DispersedDecomposition decompose_dispersed(const TwoSet& omega, std::size_t d);

// Each pair (a,b) becomes the (d+1)-component {a, b, b+1, ..., b+d-1}.
// Requires delta to be d-dispersed, else the components collide.
DSet extend_to_block_set(const TwoSet& delta, std::size_t d);

// Disjointness, union, dispersal of every class, and the class-count bound.
bool validate_decomposition(const TwoSet& omega, const DispersedDecomposition& dec);

}  // namespace jnorm
