#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gvpt/series.hpp"

namespace gvpt {

int arithmetic_genus(int d);
int chow_dim(int d);

// Euler characteristic of Hilb^n(P^2).
Integer hilb_p2_euler(int n);

// PT invariant of local P^2 in class d with q-exponent 1 - g(d) + n, 0 <= n <= d + 1.
Integer pt_invariant(int d, int n);

// Contribution of reducible curves to that invariant.
Integer correction(int d, int n);

// Coefficient of n^h in the degree-d PT invariant at offset n.
Integer gv_coefficient(int h, int p_a, int n);

// Genus -> value (for GV rows) or offset n -> value (for PT rows).
struct IntRow {
  int degree = 0;
  std::map<int, Integer> values;
  bool operator==(const IntRow&) const = default;
};

IntRow pt_row(int d);
IntRow gv_solve(int d);

// sum_g n^g (q^{1/2} + q^{-1/2})^{2g} as a Laurent polynomial in q.
LaurentSeries bps_from_gv(const std::map<int, Integer>& gv);
std::map<int, Integer> gv_from_bps(const LaurentSeries& poly);

// Keys are (2 jL, 2 jR).
using SpinPair = std::pair<int, int>;

class RefinedTable {
 public:
  RefinedTable() = default;
  RefinedTable(std::initializer_list<std::pair<const SpinPair, int>> init);

  const std::map<SpinPair, Integer>& entries() const { return entries_; }
  void add(SpinPair spins, const Integer& n);
  // Parity of 2jL + 2jR shared by all entries; throws if it is not shared.
  std::optional<int> parity() const;

  bool operator==(const RefinedTable&) const = default;

 private:
  std::map<SpinPair, Integer> entries_;
};

// chi_j(x) = sum_{m=-j}^{j} x^{2m}, with the exponent 2m stored directly.
// The polynomial is sum N chi_jL(r) chi_jR(q) in variables (q, r).
LaurentSeries rbps_from_refined(const RefinedTable& table);
RefinedTable refined_from_rbps(const LaurentSeries& poly);

// Sets r = -1 and converts the resulting BPS polynomial to genus expansion.
std::map<int, Integer> unrefine(const RefinedTable& table);

nlohmann::json to_json(const IntRow& row);
IntRow int_row_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RefinedTable& table, int degree);
RefinedTable refined_from_json(const nlohmann::json& j);

}  // namespace gvpt
