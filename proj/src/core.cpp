#include "jnorm/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace jnorm {

EVector::EVector(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("EVector: empty coordinate list");
  if (coords_[0] == 0) throw std::invalid_argument("EVector: e_1 must be nonzero");
}

Rat EVector::sum() const {
  Rat s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

Rat EVector::l2_sq() const {
  Rat s = 0;
  for (const auto& c : coords_) s += c * c;
  return s;
}

std::vector<Rat> EVector::partial_sums() const {
  std::vector<Rat> out;
  out.reserve(coords_.size());
  Rat s = 0;
  for (const auto& c : coords_) {
    s += c;
    out.push_back(s);
  }
  return out;
}

EVector EVector::block_difference(std::size_t d) {
  if (d == 0) throw std::invalid_argument("block_difference: d must be positive");
  std::vector<Rat> c(d + 1, Rat(0));
  c[0] = 1;
  c[1] = -1;
  return EVector(std::move(c));
}

bool Sequence::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rat& v) { return v == 0; });
}

DSet::DSet(std::vector<std::uint64_t> indices, std::size_t block_size)
    : indices_(std::move(indices)), block_size_(block_size) {
  if (block_size_ == 0) throw std::invalid_argument("DSet: zero block size");
  if (indices_.size() % block_size_ != 0)
    throw std::invalid_argument("DSet: index count not a multiple of the block size");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1) throw std::invalid_argument("DSet: indices start at 1");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw std::invalid_argument("DSet: indices must be strictly increasing");
  }
}

std::vector<std::uint64_t> DSet::component(std::size_t i) const {
  if (i < 1 || i > k()) throw std::out_of_range("DSet: component index");
  auto first = indices_.begin() + static_cast<std::ptrdiff_t>((i - 1) * block_size_);
  return std::vector<std::uint64_t>(first, first + static_cast<std::ptrdiff_t>(block_size_));
}

Rat scalar_product(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("scalar_product: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat variation_sq(const EVector& e, const Sequence& x, const DSet& omega) {
  if (omega.block_size() != e.d())
    throw std::invalid_argument("variation_sq: block size differs from e dimension");
  Rat total = 0;
  const auto& idx = omega.indices();
  for (std::size_t b = 0; b < omega.k(); ++b) {
    Rat dot = 0;
    for (std::size_t i = 0; i < e.d(); ++i)
      dot += e.coords()[i] * x.at(idx[b * e.d() + i]);
    total += dot * dot;
  }
  return total;
}

std::size_t padded_horizon(const EVector& e, const Sequence& x) {
  return x.support_length() * e.d();
}

namespace {

// max/min of the linear form e * (x at an increasing d-tuple), tuples drawn
// from positions [a..p]; entry c is the best over the first c coefficients.
struct BlockScan {
  std::vector<std::optional<Rat>> hi, lo;
  explicit BlockScan(std::size_t d) : hi(d + 1), lo(d + 1) {
    hi[0] = Rat(0);
    lo[0] = Rat(0);
  }
  void feed(const Rat& xv, const std::vector<Rat>& ecoords) {
    for (std::size_t c = ecoords.size(); c >= 1; --c) {
      const Rat term = ecoords[c - 1] * xv;
      if (hi[c - 1]) {
        Rat cand = *hi[c - 1] + term;
        if (!hi[c] || cand > *hi[c]) hi[c] = cand;
      }
      if (lo[c - 1]) {
        Rat cand = *lo[c - 1] + term;
        if (!lo[c] || cand < *lo[c]) lo[c] = cand;
      }
    }
  }
};

// Recovers a d-tuple in [a..b] whose linear-form square attains w_target.
std::vector<std::uint64_t> best_block_tuple(const EVector& e, const std::vector<Rat>& xs,
                                            std::size_t a, std::size_t b) {
  const std::size_t d = e.d();
  const std::size_t len = b - a + 1;
  // hi[p][c], lo[p][c] over positions a..a+p-1.
  std::vector<std::vector<std::optional<Rat>>> hi(len + 1), lo(len + 1);
  hi[0].assign(d + 1, std::nullopt);
  lo[0].assign(d + 1, std::nullopt);
  hi[0][0] = Rat(0);
  lo[0][0] = Rat(0);
  for (std::size_t p = 1; p <= len; ++p) {
    hi[p] = hi[p - 1];
    lo[p] = lo[p - 1];
    const Rat& xv = xs[a + p - 2];  // xs is 0-based over positions 1..H
    for (std::size_t c = d; c >= 1; --c) {
      const Rat term = e.coords()[c - 1] * xv;
      if (hi[p - 1][c - 1]) {
        Rat cand = *hi[p - 1][c - 1] + term;
        if (!hi[p][c] || cand > *hi[p][c]) hi[p][c] = cand;
      }
      if (lo[p - 1][c - 1]) {
        Rat cand = *lo[p - 1][c - 1] + term;
        if (!lo[p][c] || cand < *lo[p][c]) lo[p][c] = cand;
      }
    }
  }
  if (!hi[len][d]) throw std::logic_error("best_block_tuple: interval shorter than d");
  const bool use_hi = (*hi[len][d]) * (*hi[len][d]) >= (*lo[len][d]) * (*lo[len][d]);
  const auto& tab = use_hi ? hi : lo;
  Rat value = *tab[len][d];
  std::vector<std::uint64_t> tuple(d);
  std::size_t p = len, c = d;
  while (c > 0) {
    if (p > c && tab[p - 1][c] && *tab[p - 1][c] == value) {
      --p;  // position a+p-1 not used
      continue;
    }
    tuple[c - 1] = static_cast<std::uint64_t>(a + p - 1);
    value -= e.coords()[c - 1] * xs[a + p - 2];
    --p;
    --c;
  }
  return tuple;
}

struct DpResult {
  Rat best;
  std::vector<std::uint64_t> witness;
};

DpResult run_dp(const EVector& e, const Sequence& x, bool want_witness) {
  const std::size_t d = e.d();
  const std::size_t H = padded_horizon(e, x);
  if (H == 0) return {Rat(0), {}};

  std::vector<Rat> xs(H);
  for (std::size_t p = 1; p <= H; ++p) xs[p - 1] = x.at(p);

  // W[a-1][b-1] = best squared block value over d-tuples inside [a,b].
  std::vector<std::vector<std::optional<Rat>>> W(H, std::vector<std::optional<Rat>>(H));
  for (std::size_t a = 1; a <= H; ++a) {
    BlockScan scan(d);
    for (std::size_t p = a; p <= H; ++p) {
      scan.feed(xs[p - 1], e.coords());
      if (scan.hi[d]) {
        Rat h2 = *scan.hi[d] * *scan.hi[d];
        Rat l2 = *scan.lo[d] * *scan.lo[d];
        W[a - 1][p - 1] = h2 >= l2 ? h2 : l2;
      }
    }
  }

  // F[m] = best total over d-sets inside [1,m]; blocks occupy disjoint
  // index intervals, so the last block lives in some suffix interval.
  std::vector<Rat> F(H + 1, Rat(0));
  std::vector<std::size_t> from(H + 1, 0);  // 0 = skip index m, else interval start a
  for (std::size_t m = 1; m <= H; ++m) {
    F[m] = F[m - 1];
    from[m] = 0;
    for (std::size_t a = 1; a + d - 1 <= m; ++a) {
      if (!W[a - 1][m - 1]) continue;
      Rat cand = F[a - 1] + *W[a - 1][m - 1];
      if (cand > F[m]) {
        F[m] = cand;
        from[m] = a;
      }
    }
  }

  DpResult res{F[H], {}};
  if (want_witness) {
    std::vector<std::uint64_t> idx;
    std::size_t m = H;
    while (m > 0) {
      if (from[m] == 0) {
        --m;
        continue;
      }
      std::size_t a = from[m];
      auto tuple = best_block_tuple(e, xs, a, m);
      idx.insert(idx.end(), tuple.rbegin(), tuple.rend());
      m = a - 1;
    }
    std::reverse(idx.begin(), idx.end());
    res.witness = idx;
  }
  return res;
}

}  // namespace

Rat e_norm_sq(const EVector& e, const Sequence& x) { return run_dp(e, x, false).best; }

NormResult e_norm_sq_with_witness(const EVector& e, const Sequence& x) {
  auto r = run_dp(e, x, true);
  NormResult out{r.best, DSet(r.witness, e.d())};
  // The reconstructed witness must reproduce the optimum exactly.
  if (variation_sq(e, x, out.witness) != out.squared)
    throw std::logic_error("e_norm_sq_with_witness: witness reconstruction failed");
  return out;
}

std::size_t brute_force_cap() {
  if (const char* env = std::getenv("JNORM_BRUTE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 62) return static_cast<std::size_t>(v);
  }
  return 14;
}

Rat e_norm_sq_bruteforce(const EVector& e, const Sequence& x) {
  return e_norm_sq_bruteforce(e, x, brute_force_cap());
}

Rat e_norm_sq_bruteforce(const EVector& e, const Sequence& x, std::size_t cap) {
  const std::size_t d = e.d();
  const std::size_t H = padded_horizon(e, x);
  if (H > cap)
    throw std::runtime_error("e_norm_sq_bruteforce: horizon " + std::to_string(H) +
                             " exceeds cap " + std::to_string(cap));
  std::vector<Rat> xs(H);
  for (std::size_t p = 1; p <= H; ++p) xs[p - 1] = x.at(p);

  Rat best = 0;
  const std::uint64_t limit = (H >= 1) ? (std::uint64_t{1} << H) : 1;
  std::vector<std::size_t> pos;
  pos.reserve(H);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto cnt = static_cast<std::size_t>(std::popcount(mask));
    if (cnt % d != 0) continue;
    pos.clear();
    for (std::size_t p = 0; p < H; ++p)
      if (mask & (std::uint64_t{1} << p)) pos.push_back(p);
    Rat total = 0;
    for (std::size_t b = 0; b < cnt; b += d) {
      Rat dot = 0;
      for (std::size_t i = 0; i < d; ++i) dot += e.coords()[i] * xs[pos[b + i]];
      total += dot * dot;
    }
    if (total > best) best = total;
  }
  return best;
}

Rat l2_norm_sq(const Sequence& x) {
  Rat s = 0;
  for (const auto& v : x.values()) s += v * v;
  return s;
}

Rat james_norm_sq(const Sequence& x) { return e_norm_sq(EVector::james(), x); }

}  // namespace jnorm
