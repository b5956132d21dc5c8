#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jnorm/core.hpp"

namespace jnorm {

// A verified inequality failed to hold; distinct from input errors so the
// CLI can map it to its own exit code.
struct math_check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Matrix = std::vector<std::vector<Rat>>;

// (d+1)x(d+1) matrix whose row i is e with a zero inserted at position i.
Matrix insertion_matrix(const EVector& e);

// Exact determinant by rational Gaussian elimination.
Rat det_oracle(const Matrix& m);

// (-1)^d * (prod e_i) * (sum e_i); agrees with det_oracle on the
// insertion matrix for every e.
Rat det_closed_form(const EVector& e);

// ||e||_2^2, the squared continuity constant of l_2 -> J(e).
Rat lemma7_constant_sq(const EVector& e);
bool check_lemma7(const EVector& e, const Sequence& x);

// Chebyshev-minimax constant: min over y with y_1 = 1 of the sup norm of
// L'y, where L' is the insertion matrix of the nonzero coordinates of e.
// Requires sum(e) != 0.  Solved by exact simplex.
Rat lemma9_constant(const EVector& e);
struct MinimaxSolution {
  Rat constant;
  std::vector<Rat> y;  // optimal point, y[0] == 1, length d'+1
};
MinimaxSolution lemma9_minimax(const EVector& e);
// Nonzero coordinates of e, in order.
EVector reduce_nonzero(const EVector& e);

// Some leave-one-out d'-tuple from {1,...,d'+1} satisfies
// |sum e'_i x(n(i))| >= C |x(1)|.  x must have length d'+1.
bool check_lemma9(const EVector& e, const std::vector<Rat>& x, const Rat& C);

// (d+1)/C^2: for every x, l2_norm_sq(x) <= bound * e_norm_sq(e, x).
Rat lemma10_lower_bound_sq(const EVector& e);
bool check_lemma10(const EVector& e, const Sequence& x);

// C^2 (d-1) with C the largest absolute partial sum over i < d.
// Requires sum(e) == 0 and d >= 2.
Rat lemma11_constant_sq(const EVector& e);
// Splitting the chained in-block differences into disjoint-pair families
// costs a factor 2 once d >= 3 (a single family suffices for d = 2).
Rat chain_split_factor(std::size_t d);
// e_norm_sq(e,x) <= chain_split_factor(d) * lemma11_constant_sq(e) * james_norm_sq(x).
bool check_lemma11(const EVector& e, const Sequence& x);

// e_norm_sq(u_d, x) <= (4/e_1^2) * e_norm_sq(e, x), reproved stepwise via
// the two deleted d-sets of the optimal (d+1)-set.
bool check_lemma12(const EVector& e, const Sequence& x);

// james_norm_sq(x) <= (floor(d/2)+2) * e_norm_sq(u_d, x), reproved via
// dispersed decomposition of the optimal 2-set and its block extension.
bool check_lemma13(std::size_t d, const Sequence& x);

enum class LemmaId { L7, L9, L10, L11, L12, L13 };
int lemma_number(LemmaId id);

struct BoundCertificate {
  LemmaId lemma;
  Rat constant_sq;
  std::size_t samples_checked = 0;
  std::optional<Sequence> witness_of_tightness;
};

enum class Verdict { Hilbert, James };

struct Classification {
  Verdict verdict;
  BoundCertificate upper;
  BoundCertificate lower;
};

// Theorem 5/6 dichotomy: Hilbert iff sum(e) != 0, with sampled two-sided
// certificates.  The verdict itself is the exact sign test only.
Classification classify(const EVector& e, std::size_t samples = 200, std::uint64_t seed = 1);

std::string certificate_json(const BoundCertificate& cert, Verdict regime);
std::string classification_json(const Classification& cls);

// Deterministic random rational sequence, numerators in [-9,9],
// denominators in [1,9]; shared by certificates and the CLI.
Sequence random_sequence(std::uint64_t seed, std::size_t max_support);

}  // namespace jnorm
