#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gvpt/localp2.hpp"
#include "gvpt/series.hpp"

namespace gvpt {

struct ExpansionWindow {
  int d_max = 1;
  int q_min = 0;
  int q_max = 0;
  // Applied to the finished product only; the expansion itself is exact in s.
  std::optional<Window> s_window;
};

// Degree -> genus -> n^g.
using GVTable = std::map<int, std::map<int, Integer>>;
using RefinedTables = std::map<int, RefinedTable>;

// Product formula for Z_PT from GV invariants, in variables (q, Q).
LaurentSeries ztpt_unrefined(const GVTable& gv, const ExpansionWindow& w);

// Motivic product formula, in variables (q, s, Q) with s = L^{1/2}. The
// table's jR labels the spin carried by q and its jL the spin carried by s.
LaurentSeries ztpt_refined(const RefinedTables& tables, const ExpansionWindow& w);

// Coefficient of q^{1 - g(d) + n} Q^d.
Integer pt_from_ztpt(const LaurentSeries& z, int d, int n);

struct Mismatch {
  int d = 0;
  int n = 0;
  Integer expected;
  Integer got;
};

struct CheckedEntry {
  int d = 0;
  int n = 0;
  Integer value;
};

struct CrosscheckReport {
  std::vector<CheckedEntry> checked;
  std::vector<Mismatch> mismatches;
  bool pass = false;
};

// Rebuilds Z_PT from gv_solve(1..d_max) and compares every pt_invariant(d, n).
CrosscheckReport crosscheck_unrefined(int d_max, int q_max = 12);

// Compares a refined product, specialized at s = s_value, with the unrefined
// product of the unrefined tables, over the window.
CrosscheckReport refined_consistency(const RefinedTables& tables, const ExpansionWindow& w,
                                     int s_value);

struct NaiveReport {
  int genus = 0;
  int n_curves = 0;
  int order = 0;
  bool pass = false;
};

// n (1+tx)^{2g} / ((1-t)(1-tx^2)) against the Hilbert-scheme generating series.
NaiveReport naive_check(int genus, int n_curves, int order_t);

nlohmann::json to_json(const CrosscheckReport& r);
nlohmann::json to_json(const NaiveReport& r);

}  // namespace gvpt
