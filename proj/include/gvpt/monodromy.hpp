#pragma once

#include <vector>

#include "gvpt/series.hpp"

namespace gvpt {

// a(l) + b(l) t in Z[l, t]/(t^2 - 1). The t part is the sign local system of
// the double cover over the locus of nodal curves.
class MonodromyElem {
 public:
  MonodromyElem() = default;
  MonodromyElem(std::vector<Integer> trivial, std::vector<Integer> twisted);

  static MonodromyElem one() { return l_power(0); }
  static MonodromyElem l_power(int k);
  static MonodromyElem t_l_power(int k);
  // (1 + t) l^k
  static MonodromyElem pair_l_power(int k);

  const std::vector<Integer>& trivial() const { return trivial_; }
  const std::vector<Integer>& twisted() const { return twisted_; }
  Integer trivial_at(int k) const;
  Integer twisted_at(int k) const;

  // Adds c l^k, or c t l^k when twisted is set.
  void add_at(int k, const Integer& c, bool twisted = false);
  MonodromyElem& operator+=(const MonodromyElem& o);
  bool operator==(const MonodromyElem& o) const;

  // Total rank after t -> 1, l -> 1.
  Integer total_rank() const;

 private:
  void trim();
  std::vector<Integer> trivial_;
  std::vector<Integer> twisted_;
};

MonodromyElem operator+(const MonodromyElem& a, const MonodromyElem& b);
MonodromyElem operator*(const MonodromyElem& a, const MonodromyElem& b);
MonodromyElem operator*(const Integer& c, const MonodromyElem& a);

// Pushforward of the constant sheaf on the smooth locus Hilbert schemes and on
// the punctual Hilbert schemes of a node.
MonodromyElem l_system(int m);
MonodromyElem m_system(int m);

// Same quantities counted cell by cell, with the swap of branches acting on cells.
MonodromyElem l_system_oracle(int m);
MonodromyElem m_system_oracle(int m);

// sum_{i=0}^k M_i L_{k-i}
MonodromyElem hilbert_pushforward(int k);
MonodromyElem lhs_closed_form(int k);

// P_n from its closed display, and from the coefficient of q^{n+1} in
// ql/((1-q)(1-ql)) + l Sym^2(q sum_k F_k[-1] q^k).
MonodromyElem rhs_pn(int n);
MonodromyElem rhs_from_series(int n);

// Sym^2(F[-1]) for F with trivial monodromy: distinct classes pair to
// (1+t), a class with itself gives t.
MonodromyElem sym2_odd_shift(const MonodromyElem& f);

struct Deg2Row {
  int k = 0;
  bool lhs_matches_closed_form = false;
  bool rhs_matches_series = false;
  bool rhs_equals_l_times_lhs = false;
  bool systems_match_oracles = false;
  bool pass() const {
    return lhs_matches_closed_form && rhs_matches_series && rhs_equals_l_times_lhs &&
           systems_match_oracles;
  }
};

struct Deg2Report {
  std::vector<Deg2Row> rows;
  bool pass = false;
};

Deg2Report verify_deg2(int k_max);

nlohmann::json to_json(const MonodromyElem& e);
MonodromyElem monodromy_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Deg2Report& r);

}  // namespace gvpt
