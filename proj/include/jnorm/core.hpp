#pragma once

#include <cstdint>
#include <vector>

#include "jnorm/rational.hpp"

namespace jnorm {

// Defining vector e = (e_1,...,e_d) with e_1 != 0.
class EVector {
 public:
  explicit EVector(std::vector<Rat> coords);

  std::size_t d() const { return coords_.size(); }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(std::size_t i) const { return coords_[i - 1]; }  // 1-based

  Rat sum() const;
  Rat l2_sq() const;  // sum of squares of coordinates
  // Partial sums e_1, e_1+e_2, ..., e_1+...+e_d.
  std::vector<Rat> partial_sums() const;

  // The special (d+1)-vector (1,-1,0,...,0).
  static EVector block_difference(std::size_t d);
  // (1,-1), the James space vector.
  static EVector james() { return block_difference(1); }

 private:
  std::vector<Rat> coords_;
};

// Finite-support stand-in for a null sequence: equal to values on [1,n],
// zero beyond.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Rat> values) : values_(std::move(values)) {}

  std::size_t support_length() const { return values_.size(); }
  const std::vector<Rat>& values() const { return values_; }
  // 1-based, zero outside the support.
  Rat at(std::size_t m) const {
    return (m >= 1 && m <= values_.size()) ? values_[m - 1] : Rat(0);
  }
  bool is_zero() const;

 private:
  std::vector<Rat> values_;
};

// Strictly increasing index set of size k*d, split into k consecutive
// d-blocks.  The empty set is admitted with variation 0.
class DSet {
 public:
  DSet(std::vector<std::uint64_t> indices, std::size_t block_size);

  std::size_t block_size() const { return block_size_; }
  std::size_t k() const { return indices_.size() / block_size_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  // 1-based block; indices of component i as a span into the flat list.
  std::vector<std::uint64_t> component(std::size_t i) const;

 private:
  std::vector<std::uint64_t> indices_;
  std::size_t block_size_;
};

Rat scalar_product(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Squared (e,omega)-variation: sum over blocks of (e * x(omega;i))^2.
Rat variation_sq(const EVector& e, const Sequence& x, const DSet& omega);

// Finite horizon n*d within which the supremum over all d-sets is attained.
std::size_t padded_horizon(const EVector& e, const Sequence& x);

struct NormResult {
  Rat squared;
  DSet witness;  // attains the supremum; empty when the norm is 0
};

// Exact squared e-variation norm via interval-split dynamic programming.
Rat e_norm_sq(const EVector& e, const Sequence& x);
NormResult e_norm_sq_with_witness(const EVector& e, const Sequence& x);

// Exhaustive reference for e_norm_sq; refuses horizons above the cap.
std::size_t brute_force_cap();  // env JNORM_BRUTE_CAP, default 14
Rat e_norm_sq_bruteforce(const EVector& e, const Sequence& x);
Rat e_norm_sq_bruteforce(const EVector& e, const Sequence& x, std::size_t cap);

Rat l2_norm_sq(const Sequence& x);

// Squared-difference variation norm, e = (1,-1).
Rat james_norm_sq(const Sequence& x);

}  // namespace jnorm
