#pragma once

#include <map>
#include <vector>

#include "gvpt/series.hpp"

namespace gvpt {

// Cohomological degree -> dimension. Zero dimensions are never stored.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, int>> init);

  static GradedDims unit() { return GradedDims{{0, 1}}; }

  const std::map<int, Integer>& dims() const { return dims_; }
  Integer at(int degree) const;
  void add(int degree, const Integer& dim);
  bool is_zero() const { return dims_.empty(); }
  Integer total() const;
  Integer euler_characteristic() const;

  // Raises every degree by a.
  GradedDims shifted(int a) const;

  bool operator==(const GradedDims&) const = default;

 private:
  std::map<int, Integer> dims_;
};

GradedDims operator+(const GradedDims& a, const GradedDims& b);
GradedDims tensor(const GradedDims& a, const GradedDims& b);

// Symmetric and alternating powers with the Koszul sign rule.
GradedDims graded_sym(const GradedDims& h, int n);
GradedDims graded_alt(const GradedDims& h, int n);

// Sym^n of h shifted by a.
GradedDims shift_parity(const GradedDims& h, int a, int n);

// Poincare polynomial in r.
LaurentSeries poincare(const GradedDims& h, const VarContext& ctx, const std::string& r = "r");

enum class Parity { Even, Odd };
enum class PowerKind { Sym, Alt };

// sum_n chi(Sym^n or Alt^n) q^n for a one-dimensional-per-degree Euler count.
LaurentSeries euler_sym_series(const Integer& chi, Parity parity, PowerKind kind, int order);

// sum_n P(Sym^n h, r) p^n (or Alt^n) from the product formula, in variables (p, r).
LaurentSeries sym_poincare_closed(const GradedDims& h, int order_p,
                                  PowerKind kind = PowerKind::Sym);

// Coefficients F_0, ..., F_M of a q-series of graded spaces.
class GradedSeries {
 public:
  explicit GradedSeries(int order);
  static GradedSeries unit(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const GradedDims& operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
  GradedDims& operator[](int m) { return coeffs_.at(static_cast<std::size_t>(m)); }

  bool operator==(const GradedSeries&) const = default;

 private:
  std::vector<GradedDims> coeffs_;
};

GradedSeries direct_sum(const GradedSeries& a, const GradedSeries& b);

// Coefficient of q^m is the sum over multisets {m_1..m_n} of nonnegative
// integers with total m of the tensor product of Sym^{j_k}(F_k), j_k being the
// multiplicity of k.
GradedSeries sym_power_series(const GradedSeries& f, int n);

struct BettiComponent {
  int degree = 1;
  GradedSeries series{0};
  int weight = 0;
};

// sum_n P(Sym^n G, r) p^n for G = sum_k F_k Q^k, in variables (p, r, q). Each
// component of curve class k with weight w contributes r^{w i} to Sym^i.
LaurentSeries betti_series(const std::vector<BettiComponent>& g, int order_p);

// sum_k P(C^[k], x) t^k for n disjoint smooth genus-g curves, variables (t, x).
LaurentSeries macdonald_series(int genus, int n_curves, int order_t);

GradedDims curve_dims(int genus);

nlohmann::json to_json(const GradedDims& h);
GradedDims dims_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GradedSeries& s);

}  // namespace gvpt
