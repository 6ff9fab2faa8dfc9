#include "gvpt/correspond.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "gvpt/symprod.hpp"

namespace gvpt {

namespace {

// (1 + sign q^qexp s^sexp Q^d)^exponent
struct FactorKey {
  int qexp = 0;
  int sexp = 0;
  int d = 0;
  int sign = 1;
  auto operator<=>(const FactorKey&) const = default;
};

using FactorMap = std::map<FactorKey, Integer>;

void validate(const ExpansionWindow& w) {
  if (w.d_max < 1) throw std::invalid_argument("window needs d_max >= 1");
  if (w.q_min > w.q_max) throw std::invalid_argument("window needs q_min <= q_max");
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Smallest shift c with qexp + c d >= 0 for every factor, so that truncating
// the shifted q-degree from above is compatible with multiplication.
int q_shift(const std::map<int, int>& min_qexp) {
  int c = 0;
  for (const auto& [d, m] : min_qexp) {
    if (m < 0) c = std::max(c, (-m + d - 1) / d);
  }
  return c;
}

// Expands the product in shifted coordinates q' = q + c deg_Q, then maps back.
LaurentSeries expand(const FactorMap& factors, bool with_s, const ExpansionWindow& w, int c) {
  const int qp_max = w.q_max + c * w.d_max;
  VarContext inner = with_s ? VarContext({"q", "s", "Q"}, {"s"}) : VarContext({"q", "Q"});
  const std::size_t iQ = with_s ? 2 : 1;
  auto windowed = [&](LaurentSeries s) {
    s.set_window(0, 0, qp_max);
    s.set_window(iQ, 0, w.d_max);
    return s;
  };

  LaurentSeries z = windowed(LaurentSeries::constant(inner, 1));
  for (const auto& [key, e] : factors) {
    if (e == 0) continue;
    Monomial m;
    m[0] = key.qexp + c * key.d;
    if (with_s) m[1] = key.sexp;
    m[iQ] = key.d;
    LaurentSeries base = windowed(LaurentSeries::constant(inner, 1));
    base.add_term(m, key.sign);
    if (base.terms().size() == 1) continue;
    z = mul(z, binom_pow(base, e));
  }

  VarContext outer = with_s ? VarContext({"q", "s", "Q"}, {"s"}) : VarContext({"q", "Q"});
  LaurentSeries out(outer);
  out.set_window(0, w.q_min, w.q_max);
  if (with_s && w.s_window) out.set_window(1, w.s_window->lo, w.s_window->hi);
  out.set_window(iQ, 0, w.d_max);
  for (const auto& [m, coeff] : z.terms()) {
    Monomial back = m;
    back[0] = m[0] - c * m[iQ];
    out.add_term(back, coeff);
  }
  return out;
}

}  // namespace

LaurentSeries ztpt_unrefined(const GVTable& gv, const ExpansionWindow& w) {
  validate(w);
  std::map<int, int> min_qexp;
  for (const auto& [d, row] : gv) {
    if (d < 1) throw std::invalid_argument("curve degree must be positive");
    if (d > w.d_max) continue;
    for (const auto& [g, n] : row) {
      if (g < 0) throw std::invalid_argument("negative genus");
      if (n == 0) continue;
      int lowest = g == 0 ? 1 : 1 - g;
      auto it = min_qexp.find(d);
      min_qexp[d] = it == min_qexp.end() ? lowest : std::min(it->second, lowest);
    }
  }
  const int c = q_shift(min_qexp);
  const int qp_max = w.q_max + c * w.d_max;

  FactorMap factors;
  for (const auto& [d, row] : gv) {
    if (d > w.d_max) continue;
    for (const auto& [g, n] : row) {
      if (n == 0) continue;
      if (g == 0) {
        for (int j = 1; j + c * d <= qp_max; ++j) {
          factors[{j, 0, d, -parity_sign(j)}] += Integer(j) * n;
        }
        continue;
      }
      for (int k = 0; k <= 2 * g - 2; ++k) {
        int qexp = g - 1 - k;
        if (qexp + c * d > qp_max) continue;
        Integer e = binomial(2 * g - 2, k) * n;
        if (parity_sign(k + g) < 0) e = -e;
        factors[{qexp, 0, d, parity_sign(g - k)}] += e;
      }
    }
  }
  return expand(factors, false, w, c);
}

LaurentSeries ztpt_refined(const RefinedTables& tables, const ExpansionWindow& w) {
  validate(w);
  std::map<int, int> min_qexp;
  for (const auto& [d, table] : tables) {
    if (d < 1) throw std::invalid_argument("curve degree must be positive");
    if (d > w.d_max) continue;
    table.parity();
    for (const auto& [spins, n] : table.entries()) {
      int lowest = 1 - spins.second;
      auto it = min_qexp.find(d);
      min_qexp[d] = it == min_qexp.end() ? lowest : std::min(it->second, lowest);
    }
  }
  const int c = q_shift(min_qexp);
  const int qp_max = w.q_max + c * w.d_max;

  FactorMap factors;
  for (const auto& [d, table] : tables) {
    if (d > w.d_max) continue;
    for (const auto& [spins, n] : table.entries()) {
      const int two_q_spin = spins.second;
      const int two_s_spin = spins.first;
      Integer e = n;
      if ((two_q_spin + two_s_spin) % 2 != 0) e = -e;
      for (int m = 1; m - two_q_spin + c * d <= qp_max; ++m) {
        for (int mq = -two_q_spin; mq <= two_q_spin; mq += 2) {
          const int qexp = m - mq;
          if (qexp + c * d > qp_max) continue;
          // (-q)^qexp enters with a minus sign.
          const int sign = -parity_sign(qexp);
          for (int ms = -two_s_spin; ms <= two_s_spin; ms += 2) {
            for (int j = 0; j <= m - 1; ++j) {
              factors[{qexp, -m + 1 + 2 * j - ms, d, sign}] += e;
            }
          }
        }
      }
    }
  }
  return expand(factors, true, w, c);
}

Integer pt_from_ztpt(const LaurentSeries& z, int d, int n) {
  const auto& ctx = z.context();
  std::vector<int> e(ctx.size(), 0);
  e[ctx.index_of("q")] = 1 - arithmetic_genus(d) + n;
  e[ctx.index_of("Q")] = d;
  return z.coefficient(e);
}

CrosscheckReport crosscheck_unrefined(int d_max, int q_max) {
  if (d_max < 1 || d_max > 5) throw std::invalid_argument("crosscheck needs 1 <= dmax <= 5");
  GVTable gv;
  for (int d = 1; d <= d_max; ++d) gv[d] = gv_solve(d).values;
  ExpansionWindow w;
  w.d_max = d_max;
  w.q_min = std::min(0, 1 - arithmetic_genus(d_max));
  w.q_max = q_max;
  LaurentSeries z = ztpt_unrefined(gv, w);

  CrosscheckReport report;
  for (int d = 1; d <= d_max; ++d) {
    for (int n = 0; n <= d + 1; ++n) {
      Integer expected = pt_invariant(d, n);
      Integer got = pt_from_ztpt(z, d, n);
      report.checked.push_back({d, n, got});
      if (expected != got) report.mismatches.push_back({d, n, expected, got});
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

CrosscheckReport refined_consistency(const RefinedTables& tables, const ExpansionWindow& w,
                                     int s_value) {
  LaurentSeries refined = specialize(ztpt_refined(tables, w), "s", s_value);
  GVTable gv;
  for (const auto& [d, table] : tables) gv[d] = unrefine(table);
  LaurentSeries unrefined = ztpt_unrefined(gv, w);

  CrosscheckReport report;
  for (int d = 1; d <= w.d_max; ++d) {
    for (int q = w.q_min; q <= w.q_max; ++q) {
      Integer expected = unrefined.coefficient({q, d});
      Integer got = refined.coefficient({q, d});
      int n = q - 1 + arithmetic_genus(d);
      report.checked.push_back({d, n, got});
      if (expected != got) report.mismatches.push_back({d, n, expected, got});
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

NaiveReport naive_check(int genus, int n_curves, int order_t) {
  LaurentSeries pt_side = macdonald_series(genus, n_curves, order_t);
  VarContext ctx({"t", "x"});
  auto windowed = [&](LaurentSeries s) {
    s.set_window(0, 0, order_t);
    return s;
  };
  auto one_plus = [&](int sign, int tx, int xx) {
    LaurentSeries b = windowed(LaurentSeries::constant(ctx, 1));
    b.add_term(Monomial(std::vector<int>{tx, xx}), sign);
    return b;
  };
  LaurentSeries gv_side = windowed(LaurentSeries::constant(ctx, n_curves));
  gv_side = mul(gv_side, binom_pow(one_plus(1, 1, 1), 2 * genus));
  gv_side = mul(gv_side, binom_pow(one_plus(-1, 1, 0), -1));
  gv_side = mul(gv_side, binom_pow(one_plus(-1, 1, 2), -1));
  return {genus, n_curves, order_t, gv_side.terms() == pt_side.terms()};
}

nlohmann::json to_json(const CrosscheckReport& r) {
  nlohmann::json checked = nlohmann::json::array();
  for (const auto& c : r.checked) checked.push_back({{"d", c.d}, {"n", c.n}, {"value", c.value.get_str()}});
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back(
        {{"d", m.d}, {"n", m.n}, {"expected", m.expected.get_str()}, {"got", m.got.get_str()}});
  }
  return {{"checked", checked}, {"mismatches", mismatches}, {"pass", r.pass}};
}

nlohmann::json to_json(const NaiveReport& r) {
  return {{"genus", r.genus}, {"n_curves", r.n_curves}, {"order", r.order}, {"pass", r.pass}};
}

}  // namespace gvpt
