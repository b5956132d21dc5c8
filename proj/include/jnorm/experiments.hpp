#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jnorm/core.hpp"

namespace jnorm {

enum class SequenceKind { Plateau, Alternating, RandomRational, Decay };

SequenceKind parse_kind(const std::string& name);  // throws on unknown name
std::string kind_name(SequenceKind kind);

struct GeneratorSpec {
  SequenceKind kind = SequenceKind::Plateau;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// plateau: (1,...,1); alternating: (1,-1,1,...); decay: (1,1/2,...,1/n);
// random_rational: numerators in [-9,9], denominators in [1,9].
Sequence generate(const GeneratorSpec& spec);

struct SweepRow {
  std::size_t n = 0;
  Rat e_norm_sq;
  Rat l2_sq;
  Rat james_sq;
  double ratio_l2_over_e = 0.0;  // sqrt(l2_sq / e_norm_sq), needs e_norm_sq > 0
};

// Truncation rows n = 1..n_max for the chosen family: bounded ratios in
// the Hilbert regime, sqrt(n)-growth for plateau in the James regime.
std::vector<SweepRow> dichotomy_sweep(const EVector& e, SequenceKind kind, std::size_t n_max,
                                      std::uint64_t seed = 0);

// Columns "n,e_norm_sq,l2_sq,james_sq,ratio_l2_over_e"; rationals as p/q.
std::string emit_csv(const std::vector<SweepRow>& rows);

// Minimal polyline chart of ratio versus n.  Throws on empty input.
std::string emit_svg(const std::vector<SweepRow>& rows);

}  // namespace jnorm
