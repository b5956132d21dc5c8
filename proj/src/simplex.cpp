#include "jnorm/simplex.hpp"

#include <stdexcept>

namespace jnorm {

namespace {

struct Tableau {
  // rows x (cols + 1); last column is the right-hand side.
  std::vector<std::vector<Rat>> t;
  std::vector<std::size_t> basis;  // basic variable per row
  std::size_t cols = 0;

  void pivot(std::size_t row, std::size_t col) {
    Rat p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }
};

// Minimizes cost over the tableau with Bland's rule; only columns j with
// allowed(j) may enter.  Returns the optimal objective value.
Rat run_simplex(Tableau& tab, const std::vector<Rat>& cost,
                const std::vector<bool>& allowed) {
  for (;;) {
    // Reduced costs relative to the current basis.
    std::vector<Rat> reduced(tab.cols, Rat(0));
    for (std::size_t j = 0; j < tab.cols; ++j) {
      if (!allowed[j]) continue;
      Rat r = cost[j];
      for (std::size_t i = 0; i < tab.t.size(); ++i) r -= cost[tab.basis[i]] * tab.t[i][j];
      reduced[j] = r;
    }
    std::size_t enter = tab.cols;
    for (std::size_t j = 0; j < tab.cols; ++j) {
      if (allowed[j] && reduced[j] < 0) {
        enter = j;
        break;  // Bland: lowest index
      }
    }
    if (enter == tab.cols) break;  // optimal

    std::size_t leave = tab.t.size();
    Rat best_ratio = 0;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
      if (tab.t[i][enter] <= 0) continue;
      Rat ratio = tab.t[i][tab.cols] / tab.t[i][enter];
      if (leave == tab.t.size() || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == tab.t.size()) throw std::runtime_error("lp_minimize: unbounded program");
    tab.pivot(leave, enter);
  }
  Rat obj = 0;
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    obj += cost[tab.basis[i]] * tab.t[i][tab.cols];
  return obj;
}

}  // namespace

LpSolution lp_minimize(const std::vector<Rat>& c, const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b) {
  const std::size_t m = A.size(), n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp_minimize: row count mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("lp_minimize: column count mismatch");

  // Columns: n structural, m slacks, then one artificial per negative row.
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) art_rows.push_back(i);
  const std::size_t n_art = art_rows.size();
  const std::size_t cols = n + m + n_art;

  Tableau tab;
  tab.cols = cols;
  tab.t.assign(m, std::vector<Rat>(cols + 1, Rat(0)));
  tab.basis.assign(m, 0);
  std::size_t art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool neg = b[i] < 0;
    const Rat sign = neg ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * A[i][j];
    tab.t[i][n + i] = sign;  // slack
    tab.t[i][cols] = sign * b[i];
    if (neg) {
      tab.t[i][n + m + art] = 1;
      tab.basis[i] = n + m + art;
      ++art;
    } else {
      tab.basis[i] = n + i;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    std::vector<Rat> phase1(cols, Rat(0));
    for (std::size_t j = n + m; j < cols; ++j) phase1[j] = 1;
    Rat infeas = run_simplex(tab, phase1, allowed);
    if (infeas != 0) throw std::runtime_error("lp_minimize: infeasible program");
    // Drive any artificial still basic (at level zero) out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < n + m) continue;
      std::size_t piv = cols;
      for (std::size_t j = 0; j < n + m; ++j)
        if (tab.t[i][j] != 0) {
          piv = j;
          break;
        }
      if (piv != cols) tab.pivot(i, piv);
      // else: redundant row, harmless to leave in place
    }
  }
  for (std::size_t j = n + m; j < cols; ++j) allowed[j] = false;

  std::vector<Rat> cost(cols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  Rat value = run_simplex(tab, cost, allowed);

  LpSolution sol;
  sol.value = value;
  sol.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][tab.cols];
  return sol;
}

}  // namespace jnorm
