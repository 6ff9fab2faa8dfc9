#include "gvpt/localp2.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvpt {

namespace {

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
}

std::string spin_label(SpinPair s) {
  return std::to_string(s.first) + "," + std::to_string(s.second);
}

Integer parse_integer(const std::string& s) {
  Integer v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad integer " + s);
  return v;
}

int parse_int_key(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad index " + s);
  return v;
}

// q + 2 + q^{-1}
LaurentSeries bps_generator(const VarContext& ctx) {
  LaurentSeries g = LaurentSeries::constant(ctx, 2);
  g.add_term(Monomial(std::vector<int>{1}), 1);
  g.add_term(Monomial(std::vector<int>{-1}), 1);
  return g;
}

LaurentSeries generator_power(const VarContext& ctx, int g) {
  LaurentSeries base = bps_generator(ctx);
  LaurentSeries r = LaurentSeries::constant(ctx, 1);
  for (int i = 0; i < g; ++i) r = mul(r, base);
  return r;
}

}  // namespace

int arithmetic_genus(int d) {
  require_degree(d);
  return (d - 1) * (d - 2) / 2;
}

int chow_dim(int d) {
  require_degree(d);
  return d * (d + 3) / 2;
}

Integer hilb_p2_euler(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int rep = 0; rep < 3; ++rep) {
      for (int i = k; i <= n; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

Integer pt_invariant(int d, int n) {
  require_degree(d);
  if (n < 0 || n > d + 1) throw std::invalid_argument("pt_invariant needs 0 <= n <= d + 1");
  int c = chow_dim(d);
  Integer v = Integer(c - n + 1) * hilb_p2_euler(n);
  return ((c + n) % 2 == 0) ? v : Integer(-v);
}

Integer correction(int d, int n) {
  require_degree(d);
  if (n < 0 || n > d + 1) throw std::invalid_argument("correction needs 0 <= n <= d + 1");
  // A line has no reducible members.
  if (n <= d - 2 || d == 1) return 0;
  auto line_split = [&](int points) {
    Integer s = 0;
    for (int i = 0; i <= points; ++i) s += pt_invariant(d - 1, i) * pt_invariant(1, points - i);
    return s;
  };
  if (n == d - 1 && d >= 3) return line_split(0);
  if (n == d && d >= 5) return line_split(1);
  if (n == d + 1 && d >= 6) return line_split(2);
  if (n == d + 1 && d == 5) return line_split(2) + pt_invariant(3, 0) * pt_invariant(2, 0);
  std::ostringstream os;
  os << "no reducible-curve formula for d=" << d << ", n=" << n;
  throw std::invalid_argument(os.str());
}

Integer gv_coefficient(int h, int p_a, int n) {
  if (h < 0 || n < 0 || n > p_a) throw std::invalid_argument("gv_coefficient needs h >= 0, 0 <= n <= p_a");
  if (h == 0) return n == p_a ? 1 : 0;
  int top = 2 * h - 2;
  int k = h - 2 + p_a - n;
  if (k < 0 || k > top) return 0;
  return binomial(top, k);
}

IntRow pt_row(int d) {
  IntRow row;
  row.degree = d;
  for (int n = 0; n <= d + 1; ++n) row.values[n] = pt_invariant(d, n);
  return row;
}

IntRow gv_solve(int d) {
  require_degree(d);
  if (d > 5) throw std::invalid_argument("degree must be <= 5");
  const int p_a = arithmetic_genus(d);
  IntRow row;
  row.degree = d;
  for (int n = 0; n <= p_a; ++n) {
    Integer rhs = pt_invariant(d, n) - correction(d, n);
    for (const auto& [h, v] : row.values) rhs -= gv_coefficient(h, p_a, n) * v;
    const int unknown = p_a - n;
    Integer lead = gv_coefficient(unknown, p_a, n);
    if (lead == 0 || rhs % lead != 0) throw std::domain_error("non-integral GV solve");
    row.values[unknown] = rhs / lead;
  }
  return row;
}

LaurentSeries bps_from_gv(const std::map<int, Integer>& gv) {
  VarContext ctx({"q"});
  LaurentSeries r(ctx);
  for (const auto& [g, n] : gv) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (n != 0) r += n * generator_power(ctx, g);
  }
  return r;
}

std::map<int, Integer> gv_from_bps(const LaurentSeries& poly) {
  if (poly.context().size() != 1) throw std::invalid_argument("BPS polynomial must be univariate");
  const std::string& q = poly.context().name(0);
  if (!symmetry_check(poly, q)) throw std::invalid_argument("BPS polynomial is not symmetric under q <-> 1/q");
  std::map<int, Integer> gv;
  LaurentSeries rest = poly;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().rbegin();
    const int g = m[0];
    // The generator power is monic, so the peeled coefficient is always integral.
    gv[g] = c;
    rest -= c * generator_power(poly.context(), g);
  }
  return gv;
}

RefinedTable::RefinedTable(std::initializer_list<std::pair<const SpinPair, int>> init) {
  for (const auto& [s, n] : init) add(s, n);
}

void RefinedTable::add(SpinPair spins, const Integer& n) {
  if (spins.first < 0 || spins.second < 0) throw std::invalid_argument("spins must be nonnegative");
  if (n == 0) return;
  Integer& v = entries_[spins];
  v += n;
  if (v == 0) entries_.erase(spins);
}

std::optional<int> RefinedTable::parity() const {
  std::optional<int> p;
  for (const auto& [s, n] : entries_) {
    int q = (s.first + s.second) % 2;
    if (p && *p != q) throw std::invalid_argument("mixed parity of 2jL + 2jR at " + spin_label(s));
    p = q;
  }
  return p;
}

LaurentSeries rbps_from_refined(const RefinedTable& table) {
  VarContext ctx({"q", "r"});
  LaurentSeries r(ctx);
  for (const auto& [s, n] : table.entries()) {
    const auto [a, b] = s;
    for (int x = -a; x <= a; x += 2) {
      for (int y = -b; y <= b; y += 2) r.add_term(Monomial(std::vector<int>{y, x}), n);
    }
  }
  return r;
}

RefinedTable refined_from_rbps(const LaurentSeries& poly) {
  const std::size_t iq = poly.context().index_of("q");
  const std::size_t ir = poly.context().index_of("r");
  if (poly.context().size() != 2) throw std::invalid_argument("refined BPS polynomial must be in (q, r)");
  if (!symmetry_check(poly, "q") || !symmetry_check(poly, "r")) {
    throw std::invalid_argument("refined BPS polynomial is not symmetric");
  }
  // Exponents keyed by (r, q) so the last entry is the leading term.
  std::map<std::pair<int, int>, Integer> rest;
  for (const auto& [m, c] : poly.terms()) rest[{m[ir], m[iq]}] = c;
  RefinedTable table;
  while (!rest.empty()) {
    const auto [lead, n] = *rest.rbegin();
    const auto [a, b] = lead;
    if (n < 0) {
      throw std::domain_error("negative multiplicity at (2jL, 2jR) = (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
    }
    table.add({a, b}, n);
    for (int x = -a; x <= a; x += 2) {
      for (int y = -b; y <= b; y += 2) {
        auto it = rest.find({x, y});
        if (it == rest.end()) {
          rest.emplace(std::make_pair(x, y), -n);
        } else {
          it->second -= n;
          if (it->second == 0) rest.erase(it);
        }
      }
    }
  }
  table.parity();
  return table;
}

std::map<int, Integer> unrefine(const RefinedTable& table) {
  VarContext ctx({"q"});
  LaurentSeries bps(ctx);
  for (const auto& [s, n] : table.entries()) {
    const auto [a, b] = s;
    Integer weight = Integer(a + 1) * n;
    if (a % 2 != 0) weight = -weight;
    for (int y = -b; y <= b; y += 2) bps.add_term(Monomial(std::vector<int>{y}), weight);
  }
  return gv_from_bps(bps);
}

nlohmann::json to_json(const IntRow& row) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [k, v] : row.values) values[std::to_string(k)] = v.get_str();
  return {{"degree", row.degree}, {"values", values}};
}

IntRow int_row_from_json(const nlohmann::json& j) {
  IntRow row;
  row.degree = j.at("degree").get<int>();
  for (const auto& [k, v] : j.at("values").items()) row.values[parse_int_key(k)] = parse_integer(v.get<std::string>());
  return row;
}

nlohmann::json to_json(const RefinedTable& table, int degree) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [s, n] : table.entries()) values[spin_label(s)] = n.get_str();
  return {{"degree", degree}, {"values", values}};
}

RefinedTable refined_from_json(const nlohmann::json& j) {
  RefinedTable t;
  for (const auto& [k, v] : j.at("values").items()) {
    auto comma = k.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("refined index must be \"2jL,2jR\"");
    t.add({parse_int_key(k.substr(0, comma)), parse_int_key(k.substr(comma + 1))},
          parse_integer(v.get<std::string>()));
  }
  t.parity();
  return t;
}

}  // namespace gvpt
