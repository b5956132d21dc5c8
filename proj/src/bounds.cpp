#include "jnorm/bounds.hpp"

#include <nlohmann/json.hpp>
#include <random>

#include "jnorm/dispersal.hpp"
#include "jnorm/simplex.hpp"

namespace jnorm {

Matrix insertion_matrix(const EVector& e) {
  const std::size_t d = e.d();
  Matrix m(d + 1, std::vector<Rat>(d + 1, Rat(0)));
  for (std::size_t r = 0; r <= d; ++r) {
    for (std::size_t col = 0; col <= d; ++col) {
      if (col < r)
        m[r][col] = e.coords()[col];
      else if (col > r)
        m[r][col] = e.coords()[col - 1];
    }
  }
  return m;
}

Rat det_oracle(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_oracle: matrix not square");
  Matrix a = m;
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

Rat det_closed_form(const EVector& e) {
  Rat prod = 1;
  for (const auto& c : e.coords()) prod *= c;
  Rat v = prod * e.sum();
  return (e.d() % 2 == 1) ? -v : v;
}

Rat lemma7_constant_sq(const EVector& e) { return e.l2_sq(); }

bool check_lemma7(const EVector& e, const Sequence& x) {
  return e_norm_sq(e, x) <= lemma7_constant_sq(e) * l2_norm_sq(x);
}

EVector reduce_nonzero(const EVector& e) {
  std::vector<Rat> nz;
  for (const auto& c : e.coords())
    if (c != 0) nz.push_back(c);
  return EVector(std::move(nz));
}

MinimaxSolution lemma9_minimax(const EVector& e) {
  if (e.sum() == 0)
    throw std::domain_error("lemma9_minimax: singular regime (coordinate sum is zero)");
  const EVector ep = reduce_nonzero(e);
  const std::size_t dp = ep.d();
  const Matrix L = insertion_matrix(ep);

  // Variables: w = u - v (split into u, v >= 0), then t; minimize t
  // subject to |L(1,w)|_j <= t for every row j.
  const std::size_t n = 2 * dp + 1;
  std::vector<Rat> c(n, Rat(0));
  c[n - 1] = 1;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  for (std::size_t j = 0; j <= dp; ++j) {
    std::vector<Rat> pos(n, Rat(0)), neg(n, Rat(0));
    for (std::size_t k = 1; k <= dp; ++k) {
      pos[k - 1] = L[j][k];
      pos[dp + k - 1] = -L[j][k];
      neg[k - 1] = -L[j][k];
      neg[dp + k - 1] = L[j][k];
    }
    pos[n - 1] = -1;
    neg[n - 1] = -1;
    A.push_back(std::move(pos));
    b.push_back(-L[j][0]);
    A.push_back(std::move(neg));
    b.push_back(L[j][0]);
  }
  LpSolution sol = lp_minimize(c, A, b);
  MinimaxSolution out;
  out.constant = sol.value;
  out.y.assign(dp + 1, Rat(0));
  out.y[0] = 1;
  for (std::size_t k = 1; k <= dp; ++k) out.y[k] = sol.x[k - 1] - sol.x[dp + k - 1];
  if (out.constant <= 0)
    throw math_check_error("lemma9_minimax: nonpositive minimax constant");
  return out;
}

Rat lemma9_constant(const EVector& e) { return lemma9_minimax(e).constant; }

bool check_lemma9(const EVector& e, const std::vector<Rat>& x, const Rat& C) {
  const EVector ep = reduce_nonzero(e);
  const std::size_t dp = ep.d();
  if (x.size() != dp + 1)
    throw std::invalid_argument("check_lemma9: x must have length d'+1");
  Rat target = C * abs(x[0]);
  for (std::size_t omit = 0; omit <= dp; ++omit) {
    Rat v = 0;
    std::size_t ci = 0;
    for (std::size_t pos = 0; pos <= dp; ++pos) {
      if (pos == omit) continue;
      v += ep.coords()[ci++] * x[pos];
    }
    if (abs(v) >= target) return true;
  }
  return false;
}

Rat lemma10_lower_bound_sq(const EVector& e) {
  Rat C = lemma9_constant(e);
  return Rat(e.d() + 1) / (C * C);
}

bool check_lemma10(const EVector& e, const Sequence& x) {
  return l2_norm_sq(x) <= lemma10_lower_bound_sq(e) * e_norm_sq(e, x);
}

Rat lemma11_constant_sq(const EVector& e) {
  if (e.sum() != 0)
    throw std::domain_error("lemma11_constant_sq: requires coordinate sum zero");
  const std::size_t d = e.d();
  if (d < 2) throw std::invalid_argument("lemma11_constant_sq: requires d >= 2");
  Rat best = 0;
  auto ps = e.partial_sums();
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Rat a = abs(ps[i]);
    if (a > best) best = a;
  }
  return best * best * Rat(d - 1);
}

Rat chain_split_factor(std::size_t d) { return d <= 2 ? Rat(1) : Rat(2); }

bool check_lemma11(const EVector& e, const Sequence& x) {
  Rat bound = chain_split_factor(e.d()) * lemma11_constant_sq(e);
  return e_norm_sq(e, x) <= bound * james_norm_sq(x);
}

bool check_lemma12(const EVector& e, const Sequence& x) {
  const std::size_t d = e.d();
  const EVector ud = EVector::block_difference(d);
  const Rat e1sq = e.coords()[0] * e.coords()[0];
  NormResult un = e_norm_sq_with_witness(ud, x);
  Rat en = e_norm_sq(e, x);

  if (!(un.squared <= Rat(4) / e1sq * en)) return false;
  if (un.witness.k() == 0) return true;

  // Delete the first (resp. second) element of each (d+1)-component to get
  // the two d-sets whose variations dominate the block differences.
  std::vector<std::uint64_t> first_deleted, second_deleted;
  for (std::size_t j = 1; j <= un.witness.k(); ++j) {
    auto comp = un.witness.component(j);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i != 0) first_deleted.push_back(comp[i]);
      if (i != 1) second_deleted.push_back(comp[i]);
    }
  }
  DSet omega1(std::move(first_deleted), d);
  DSet omega2(std::move(second_deleted), d);
  Rat v1 = variation_sq(e, x, omega1);
  Rat v2 = variation_sq(e, x, omega2);
  return e1sq * un.squared <= Rat(2) * (v1 + v2) && v1 <= en && v2 <= en;
}

bool check_lemma13(std::size_t d, const Sequence& x) {
  if (d < 1) throw std::invalid_argument("check_lemma13: d must be positive");
  const EVector ud = EVector::block_difference(d);
  const Rat un = e_norm_sq(ud, x);
  const Rat bound = Rat(d / 2 + 2);
  NormResult jn = e_norm_sq_with_witness(EVector::james(), x);
  if (!(jn.squared <= bound * un)) return false;
  if (jn.witness.k() == 0) return true;

  TwoSet omega = TwoSet::from_flat(jn.witness.indices());
  DispersedDecomposition dec = decompose_dispersed(omega, d);
  if (!validate_decomposition(omega, dec)) return false;

  // The decomposition partitions the optimal 2-set, each class extends to
  // a (d+1)-set with identical variation, and each extension is dominated
  // by the u_d norm.
  Rat partition_sum = 0;
  const EVector u1 = EVector::james();
  for (const auto& cls : dec.classes) {
    Rat pair_var = variation_sq(u1, x, cls.as_dset());
    DSet nabla = extend_to_block_set(cls, d);
    if (variation_sq(ud, x, nabla) != pair_var) return false;
    if (!(pair_var <= un)) return false;
    partition_sum += pair_var;
  }
  if (partition_sum != jn.squared) return false;
  return jn.squared <= Rat(dec.classes.size()) * un;
}

int lemma_number(LemmaId id) {
  switch (id) {
    case LemmaId::L7: return 7;
    case LemmaId::L9: return 9;
    case LemmaId::L10: return 10;
    case LemmaId::L11: return 11;
    case LemmaId::L12: return 12;
    case LemmaId::L13: return 13;
  }
  return 0;
}

Sequence random_sequence(std::uint64_t seed, std::size_t max_support) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> len(1, static_cast<int>(max_support));
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rat> vals(static_cast<std::size_t>(len(gen)));
  for (auto& v : vals) v = Rat(num(gen), den(gen));
  return Sequence(std::move(vals));
}

Classification classify(const EVector& e, std::size_t samples, std::uint64_t seed) {
  Classification cls{};
  std::mt19937_64 gen(seed);
  const bool hilbert = e.sum() != 0;
  cls.verdict = hilbert ? Verdict::Hilbert : Verdict::James;

  if (hilbert) {
    cls.upper = {LemmaId::L7, lemma7_constant_sq(e), 0, std::nullopt};
    cls.lower = {LemmaId::L10, lemma10_lower_bound_sq(e), 0, std::nullopt};
    for (std::size_t i = 0; i < samples; ++i) {
      Sequence x = random_sequence(gen(), 6);
      if (!check_lemma7(e, x)) throw math_check_error("classify: lemma 7 check failed");
      if (!check_lemma10(e, x)) throw math_check_error("classify: lemma 10 check failed");
      ++cls.upper.samples_checked;
      ++cls.lower.samples_checked;
    }
  } else {
    Rat upper_sq = chain_split_factor(e.d()) * lemma11_constant_sq(e);
    Rat lower_sq = Rat(e.d() / 2 + 2) * Rat(4) / (e.coords()[0] * e.coords()[0]);
    cls.upper = {LemmaId::L11, upper_sq, 0, std::nullopt};
    cls.lower = {LemmaId::L13, lower_sq, 0, std::nullopt};
    for (std::size_t i = 0; i < samples; ++i) {
      Sequence x = random_sequence(gen(), 6);
      if (!check_lemma11(e, x)) throw math_check_error("classify: lemma 11 check failed");
      if (!check_lemma12(e, x)) throw math_check_error("classify: lemma 12 check failed");
      if (!check_lemma13(e.d(), x)) throw math_check_error("classify: lemma 13 check failed");
      // Composed lower route: james <= (floor(d/2)+2) u_d <= lower_sq * e-norm.
      if (!(james_norm_sq(x) <= lower_sq * e_norm_sq(e, x)))
        throw math_check_error("classify: composed lower bound failed");
      ++cls.upper.samples_checked;
      ++cls.lower.samples_checked;
    }
  }
  return cls;
}

namespace {

nlohmann::json cert_to_json(const BoundCertificate& cert, Verdict regime) {
  return nlohmann::json{{"lemma", lemma_number(cert.lemma)},
                        {"constant_sq", to_string(cert.constant_sq)},
                        {"samples", cert.samples_checked},
                        {"regime", regime == Verdict::Hilbert ? "Hilbert" : "James"}};
}

}  // namespace

std::string certificate_json(const BoundCertificate& cert, Verdict regime) {
  return cert_to_json(cert, regime).dump();
}

std::string classification_json(const Classification& cls) {
  nlohmann::json j{{"verdict", cls.verdict == Verdict::Hilbert ? "Hilbert" : "James"},
                   {"upper", cert_to_json(cls.upper, cls.verdict)},
                   {"lower", cert_to_json(cls.lower, cls.verdict)}};
  return j.dump();
}

}  // namespace jnorm
