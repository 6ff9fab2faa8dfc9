#include "gvpt/symprod.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace gvpt {

GradedDims::GradedDims(std::initializer_list<std::pair<const int, int>> init) {
  for (const auto& [d, c] : init) add(d, c);
}

Integer GradedDims::at(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? Integer(0) : it->second;
}

void GradedDims::add(int degree, const Integer& dim) {
  if (dim == 0) return;
  Integer& v = dims_[degree];
  v += dim;
  if (v < 0) throw std::invalid_argument("negative dimension in degree " + std::to_string(degree));
  if (v == 0) dims_.erase(degree);
}

Integer GradedDims::total() const {
  Integer t = 0;
  for (const auto& [d, c] : dims_) t += c;
  return t;
}

Integer GradedDims::euler_characteristic() const {
  Integer t = 0;
  for (const auto& [d, c] : dims_) t += (d % 2 == 0) ? c : Integer(-c);
  return t;
}

GradedDims GradedDims::shifted(int a) const {
  GradedDims r;
  for (const auto& [d, c] : dims_) r.dims_[d + a] = c;
  return r;
}

GradedDims operator+(const GradedDims& a, const GradedDims& b) {
  GradedDims r = a;
  for (const auto& [d, c] : b.dims()) r.add(d, c);
  return r;
}

GradedDims tensor(const GradedDims& a, const GradedDims& b) {
  GradedDims r;
  for (const auto& [da, ca] : a.dims()) {
    for (const auto& [db, cb] : b.dims()) r.add(da + db, ca * cb);
  }
  return r;
}

namespace {

bool is_even(int d) { return d % 2 == 0; }

// Sym^i or Alt^i of a c-dimensional space concentrated in degree j.
GradedDims single_degree_power(int j, const Integer& c, int i, bool symmetric) {
  GradedDims r;
  Integer dim = symmetric ? binomial(c + i - 1, i) : binomial(c, i);
  r.add(i * j, dim);
  return r;
}

GradedDims graded_power(const GradedDims& h, int n, PowerKind kind) {
  if (n < 0) throw std::invalid_argument("power must be nonnegative");
  std::vector<GradedDims> dp(static_cast<std::size_t>(n) + 1);
  dp[0] = GradedDims::unit();
  for (const auto& [j, c] : h.dims()) {
    bool symmetric = (kind == PowerKind::Sym) == is_even(j);
    std::vector<GradedDims> next(dp.size());
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= k; ++i) {
        if (dp[static_cast<std::size_t>(k - i)].is_zero()) continue;
        GradedDims p = single_degree_power(j, c, i, symmetric);
        if (p.is_zero()) continue;
        next[static_cast<std::size_t>(k)] =
            next[static_cast<std::size_t>(k)] + tensor(dp[static_cast<std::size_t>(k - i)], p);
      }
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(n)];
}

}  // namespace

GradedDims graded_sym(const GradedDims& h, int n) { return graded_power(h, n, PowerKind::Sym); }

GradedDims graded_alt(const GradedDims& h, int n) { return graded_power(h, n, PowerKind::Alt); }

GradedDims shift_parity(const GradedDims& h, int a, int n) {
  GradedDims base = is_even(a) ? graded_sym(h, n) : graded_alt(h, n);
  return base.shifted(n * a);
}

LaurentSeries poincare(const GradedDims& h, const VarContext& ctx, const std::string& r) {
  std::size_t v = ctx.index_of(r);
  LaurentSeries s(ctx);
  for (const auto& [d, c] : h.dims()) {
    Monomial m;
    m[v] = d;
    s.add_term(m, c);
  }
  return s;
}

LaurentSeries euler_sym_series(const Integer& chi, Parity parity, PowerKind kind, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  VarContext ctx({"q"});
  bool sym = kind == PowerKind::Sym;
  bool even = parity == Parity::Even;
  // sym/even (1-q)^-chi, sym/odd (1-q)^chi, alt/even (1+q)^chi, alt/odd (1+q)^-chi
  int sign = sym ? -1 : 1;
  Integer e = even ? chi : Integer(-chi);
  if (sym) e = -e;
  LaurentSeries base = LaurentSeries::constant(ctx, 1);
  base.add_term(Monomial(std::vector<int>{1}), sign);
  base.set_window(0, 0, order);
  return binom_pow(base, e);
}

LaurentSeries sym_poincare_closed(const GradedDims& h, int order_p, PowerKind kind) {
  if (order_p < 0) throw std::invalid_argument("order must be nonnegative");
  VarContext ctx({"p", "r"});
  LaurentSeries result = LaurentSeries::constant(ctx, 1);
  result.set_window(0, 0, order_p);
  for (const auto& [j, c] : h.dims()) {
    int sign_j = is_even(j) ? 1 : -1;
    LaurentSeries base = LaurentSeries::constant(ctx, 1);
    base.set_window(0, 0, order_p);
    Integer e;
    if (kind == PowerKind::Sym) {
      base.add_term(Monomial(std::vector<int>{1, j}), -sign_j);
      e = -sign_j * c;
    } else {
      base.add_term(Monomial(std::vector<int>{1, j}), sign_j);
      e = sign_j * c;
    }
    result = mul(result, binom_pow(base, e));
  }
  return result;
}

GradedSeries::GradedSeries(int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

GradedSeries GradedSeries::unit(int order) {
  GradedSeries s(order);
  s[0] = GradedDims::unit();
  return s;
}

GradedSeries direct_sum(const GradedSeries& a, const GradedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  GradedSeries r(a.order());
  for (int m = 0; m <= a.order(); ++m) r[m] = a[m] + b[m];
  return r;
}

GradedSeries sym_power_series(const GradedSeries& f, int n) {
  if (n < 0) throw std::invalid_argument("power must be nonnegative");
  const int order = f.order();
  std::map<std::pair<int, int>, GradedDims> cache;
  auto sym = [&](int k, int j) -> const GradedDims& {
    auto key = std::make_pair(k, j);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, graded_sym(f[k], j)).first;
    return it->second;
  };

  GradedSeries out(order);
  // Choose the multiplicity j_k of each value k in turn.
  std::function<void(int, int, int, const GradedDims&)> rec =
      [&](int k, int left, int weight, const GradedDims& acc) {
        if (left == 0) {
          out[weight] = out[weight] + acc;
          return;
        }
        if (k > order) return;
        for (int j = 0; j <= left; ++j) {
          int w = weight + j * k;
          if (w > order) break;
          const GradedDims& s = sym(k, j);
          if (s.is_zero()) continue;
          rec(k + 1, left - j, w, j == 0 ? acc : tensor(acc, s));
        }
      };
  rec(0, n, 0, GradedDims::unit());
  return out;
}

LaurentSeries betti_series(const std::vector<BettiComponent>& g, int order_p) {
  if (order_p < 0) throw std::invalid_argument("order must be nonnegative");
  int order_q = g.empty() ? 0 : g.front().series.order();
  for (const auto& c : g) {
    if (c.series.order() != order_q) throw std::invalid_argument("inconsistent truncation orders");
    if (c.degree < 1) throw std::invalid_argument("component degree must be positive");
  }
  VarContext ctx({"p", "r", "q"});
  auto windowed = [&](LaurentSeries s) {
    s.set_window(0, 0, order_p);
    s.set_window(2, 0, order_q);
    return s;
  };
  LaurentSeries result = windowed(LaurentSeries::constant(ctx, 1));
  for (const auto& c : g) {
    LaurentSeries factor = windowed(LaurentSeries(ctx));
    for (int i = 0; c.degree * i <= order_p; ++i) {
      GradedSeries s = sym_power_series(c.series, i);
      for (int m = 0; m <= order_q; ++m) {
        for (const auto& [d, dim] : s[m].dims()) {
          factor.add_term(Monomial(std::vector<int>{c.degree * i, d + c.weight * i, m}), dim);
        }
      }
    }
    result = mul(result, factor);
  }
  return result;
}

GradedDims curve_dims(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  GradedDims h;
  h.add(0, 1);
  h.add(1, 2 * genus);
  h.add(2, 1);
  return h;
}

LaurentSeries macdonald_series(int genus, int n_curves, int order_t) {
  if (order_t < 0) throw std::invalid_argument("order must be nonnegative");
  GradedDims h = curve_dims(genus);
  VarContext ctx({"t", "x"});
  LaurentSeries s(ctx);
  s.set_window(0, 0, order_t);
  for (int k = 0; k <= order_t; ++k) {
    GradedDims sym = graded_sym(h, k);
    for (const auto& [d, dim] : sym.dims()) {
      s.add_term(Monomial(std::vector<int>{k, d}), dim * n_curves);
    }
  }
  return s;
}

namespace {

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  Integer v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument("expected an integer");
  }
  return v;
}

}  // namespace

nlohmann::json to_json(const GradedDims& h) {
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [d, c] : h.dims()) dims[std::to_string(d)] = integer_json(c);
  return {{"dims", dims}};
}

GradedDims dims_from_json(const nlohmann::json& j) {
  const nlohmann::json& dims = j.contains("dims") ? j.at("dims") : j;
  if (!dims.is_object()) throw std::invalid_argument("expected an object of degree: dim");
  GradedDims h;
  for (const auto& [key, value] : dims.items()) {
    std::size_t pos = 0;
    int d = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument("bad degree key " + key);
    Integer c = integer_from_json(value);
    if (c < 0) throw std::invalid_argument("negative dimension");
    h.add(d, c);
  }
  return h;
}

nlohmann::json to_json(const GradedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int m = 0; m <= s.order(); ++m) coeffs.push_back(to_json(s[m]).at("dims"));
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

}  // namespace gvpt
