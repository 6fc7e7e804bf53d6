#include "csd/simplex.hpp"

#include <stdexcept>
#include <string>

namespace csd {

namespace {

enum class InternalSense { LE, GE, EQ };  // after rhs sign normalization

struct Tableau {
  RationalMatrix m;        // (rows+1) x (cols+1); last row objective, last col rhs
  std::vector<int> basis;  // basic column per constraint row
  int rows = 0;
  int cols = 0;

  Rational& at(int i, int j) { return m(i, j); }
  Rational& rhs(int i) { return m(i, cols); }
  Rational& obj(int j) { return m(rows, j); }
  Rational& objval() { return m(rows, cols); }

  void pivot(int r, int c) {
    Rational p = m(r, c);  // copy: the division overwrites m(r, c) itself
    m.row(r) /= p;
    for (int i = 0; i <= rows; ++i) {
      if (i == r) continue;
      Rational f = m(i, c);
      if (f != 0) m.row(i) -= f * m.row(r);
    }
    basis[r] = c;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& prob, const LpOptions& opts) {
  const int m = static_cast<int>(prob.constraints.rows());
  const int k = static_cast<int>(prob.constraints.cols());
  if (prob.rhs.size() != m || static_cast<int>(prob.sense.size()) != m ||
      prob.objective.size() != k)
    throw std::invalid_argument("LP dimensions disagree");
  if (m == 0 || k == 0) throw std::invalid_argument("LP needs at least one row and column");

  // Normalize row signs, assign slack/artificial columns.
  RationalMatrix a = prob.constraints;
  RationalVector b = prob.rhs;
  std::vector<InternalSense> sense(m);
  std::vector<char> negated(m, 0);
  for (int i = 0; i < m; ++i) {
    bool le = prob.sense[i] == RowSense::LessEq;
    if (b[i] < 0) {
      a.row(i) = -a.row(i);
      b[i] = -b[i];
      negated[i] = 1;
      sense[i] = le ? InternalSense::GE : InternalSense::EQ;
    } else {
      sense[i] = le ? InternalSense::LE : InternalSense::EQ;
    }
  }

  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int next = k;
  for (int i = 0; i < m; ++i)
    if (sense[i] != InternalSense::EQ) slack_col[i] = next++;
  const int art_start = next;
  for (int i = 0; i < m; ++i)
    if (sense[i] != InternalSense::LE) art_col[i] = next++;
  const int cols = next;

  Tableau t;
  t.rows = m;
  t.cols = cols;
  t.m = RationalMatrix::Zero(m + 1, cols + 1);
  t.basis.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) t.at(i, j) = a(i, j);
    t.rhs(i) = b[i];
    if (slack_col[i] >= 0)
      t.at(i, slack_col[i]) = sense[i] == InternalSense::LE ? Rational(1) : Rational(-1);
    if (art_col[i] >= 0) t.at(i, art_col[i]) = 1;
    t.basis[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
  }

  // Rebuilds the objective row for cost vector c (zero outside structurals
  // unless phase 1): entries hold z_j - c_j, rhs cell holds the objective.
  auto load_objective = [&](auto cost_of) {
    t.m.row(m).setZero();
    for (int i = 0; i < m; ++i) {
      Rational cb = cost_of(t.basis[i]);
      if (cb != 0) t.m.row(m) += cb * t.m.row(i);
    }
    for (int j = 0; j < cols; ++j) t.obj(j) -= cost_of(j);
  };

  // Bland: entering = lowest eligible column, leaving = lowest basic column
  // among minimum ratios. max_col bars artificial columns in phase 2.
  auto iterate = [&](int max_col, const std::optional<Rational>& stop_above) -> LpStatus {
    for (;;) {
      if (stop_above && t.objval() > *stop_above) return LpStatus::Optimal;
      int enter = -1;
      for (int j = 0; j < max_col; ++j)
        if (t.obj(j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (t.at(i, enter) <= 0) continue;
        Rational ratio = t.rhs(i) / t.at(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && t.basis[i] < t.basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      t.pivot(leave, enter);
    }
  };

  LpSolution sol;

  // Phase 1: maximize -(sum of artificials); feasible iff it reaches 0.
  if (art_start < cols) {
    load_objective([&](int j) { return j >= art_start ? Rational(-1) : Rational(0); });
    LpStatus st = iterate(cols, std::nullopt);
    if (st == LpStatus::Unbounded)
      throw std::logic_error("phase 1 unbounded");  // impossible: objective <= 0
    if (t.objval() != 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Pivot leftover artificials out; an all-zero row is redundant and inert.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art_start) continue;
      for (int j = 0; j < art_start; ++j)
        if (t.at(i, j) != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }

  // Phase 2 on the real objective, artificial columns barred.
  load_objective([&](int j) { return j < k ? prob.objective[j] : Rational(0); });
  LpStatus st = iterate(art_start, opts.stop_above);
  if (st == LpStatus::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.stopped_early = opts.stop_above && t.objval() > *opts.stop_above;
  sol.objective = t.objval();
  sol.primal = RationalVector::Zero(k);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < k) sol.primal[t.basis[i]] = t.rhs(i);

  // Duals: the objective-row entry at a row's slack column equals that row's
  // dual in the original orientation (the rhs negation cancels against the
  // surplus sign); equality rows read their artificial column, sign-flipped
  // when the row was negated.
  sol.dual = RationalVector::Zero(m);
  for (int i = 0; i < m; ++i) {
    if (slack_col[i] >= 0)
      sol.dual[i] = t.obj(slack_col[i]);
    else
      sol.dual[i] = negated[i] ? Rational(-t.obj(art_col[i])) : t.obj(art_col[i]);
  }
  return sol;
}

}  // namespace csd
