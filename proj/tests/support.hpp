#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "gvpt/series.hpp"
#include "gvpt/symprod.hpp"

namespace gvpt::testing {

// Univariate series from dense coefficients starting at exponent lo.
inline LaurentSeries univariate(const std::string& var, const std::vector<long>& coeffs, int lo = 0) {
  LaurentSeries s(VarContext({var}));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    s.add_term(Monomial(std::vector<int>{lo + static_cast<int>(i)}), coeffs[i]);
  }
  return s;
}

inline std::vector<Integer> dense(const LaurentSeries& s, int lo, int hi) {
  std::vector<Integer> v;
  for (int e = lo; e <= hi; ++e) v.push_back(s.coefficient({e}));
  return v;
}

inline std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random sparse series in the given context with exponents in [lo, hi].
inline LaurentSeries random_series(std::mt19937& rng, const VarContext& ctx, int lo, int hi,
                                   int max_terms = 6) {
  LaurentSeries s(ctx);
  int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < ctx.size(); ++i) m[i] = uniform(rng, lo, hi);
    s.add_term(m, uniform(rng, -9, 9));
  }
  return s;
}

// Random graded dimensions with total dimension at most max_total.
inline GradedDims random_dims(std::mt19937& rng, int max_total, int lo = 0, int hi = 4) {
  GradedDims h;
  int total = uniform(rng, 1, max_total);
  for (int i = 0; i < total; ++i) h.add(uniform(rng, lo, hi), 1);
  return h;
}

// A basis vector of a bigraded space: q-weight and cohomological degree.
struct Basis {
  int weight;
  int degree;
};

inline std::vector<Basis> basis_of(const GradedDims& h, int weight = 0) {
  std::vector<Basis> out;
  for (const auto& [d, c] : h.dims()) {
    for (long i = 0; i < c.get_si(); ++i) out.push_back({weight, d});
  }
  return out;
}

// Counts monomials in Sym^n (alt = false) or Alt^n of the span of the basis.
// Under Sym, odd vectors square to zero; under Alt, even ones do.
inline std::map<std::pair<int, int>, long> brute_power(const std::vector<Basis>& basis, int n, bool alt) {
  std::map<std::pair<int, int>, long> out;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t i, int left, int w, int d) {
    if (left == 0) {
      ++out[{w, d}];
      return;
    }
    if (i == basis.size()) return;
    bool odd = basis[i].degree % 2 != 0;
    int cap = (odd != alt) ? 1 : left;
    for (int j = 0; j <= std::min(cap, left); ++j) {
      rec(i + 1, left - j, w + j * basis[i].weight, d + j * basis[i].degree);
    }
  };
  rec(0, n, 0, 0);
  return out;
}

inline GradedDims brute_dims(const GradedDims& h, int n, bool alt) {
  GradedDims out;
  for (const auto& [key, c] : brute_power(basis_of(h), n, alt)) out.add(key.second, c);
  return out;
}

}  // namespace gvpt::testing
