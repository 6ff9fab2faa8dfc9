#include "gvpt/monodromy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gvpt {

namespace {

void add_into(std::vector<Integer>& dst, const std::vector<Integer>& src) {
  if (dst.size() < src.size()) dst.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Integer at_or_zero(const std::vector<Integer>& v, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= v.size()) return 0;
  return v[static_cast<std::size_t>(k)];
}

void require_nonnegative(int m) {
  if (m < 0) throw std::invalid_argument("index must be nonnegative");
}

// sum_{j=0}^{a} l^j
MonodromyElem geom(int a) {
  return MonodromyElem(std::vector<Integer>(static_cast<std::size_t>(a) + 1, Integer(1)), {});
}

// Adds c l^shift f (1 + t) for f with trivial monodromy.
void add_paired(MonodromyElem& r, const MonodromyElem& f, int shift) {
  const auto& v = f.trivial();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    r.add_at(static_cast<int>(i) + shift, v[i]);
    r.add_at(static_cast<int>(i) + shift, v[i], true);
  }
}

const MonodromyElem kOnePlusT = MonodromyElem::pair_l_power(0);

}  // namespace

MonodromyElem::MonodromyElem(std::vector<Integer> trivial, std::vector<Integer> twisted)
    : trivial_(std::move(trivial)), twisted_(std::move(twisted)) {
  trim();
}

MonodromyElem MonodromyElem::l_power(int k) {
  require_nonnegative(k);
  std::vector<Integer> a(static_cast<std::size_t>(k) + 1);
  a.back() = 1;
  return MonodromyElem(std::move(a), {});
}

MonodromyElem MonodromyElem::t_l_power(int k) {
  require_nonnegative(k);
  std::vector<Integer> b(static_cast<std::size_t>(k) + 1);
  b.back() = 1;
  return MonodromyElem({}, std::move(b));
}

MonodromyElem MonodromyElem::pair_l_power(int k) { return l_power(k) + t_l_power(k); }

Integer MonodromyElem::trivial_at(int k) const { return at_or_zero(trivial_, k); }
Integer MonodromyElem::twisted_at(int k) const { return at_or_zero(twisted_, k); }

void MonodromyElem::trim() {
  while (!trivial_.empty() && trivial_.back() == 0) trivial_.pop_back();
  while (!twisted_.empty() && twisted_.back() == 0) twisted_.pop_back();
}

void MonodromyElem::add_at(int k, const Integer& c, bool twisted) {
  require_nonnegative(k);
  auto& v = twisted ? twisted_ : trivial_;
  if (v.size() <= static_cast<std::size_t>(k)) v.resize(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] += c;
  trim();
}

MonodromyElem& MonodromyElem::operator+=(const MonodromyElem& o) {
  add_into(trivial_, o.trivial_);
  add_into(twisted_, o.twisted_);
  trim();
  return *this;
}

bool MonodromyElem::operator==(const MonodromyElem& o) const {
  return trivial_ == o.trivial_ && twisted_ == o.twisted_;
}

Integer MonodromyElem::total_rank() const {
  Integer s = 0;
  for (const auto& c : trivial_) s += c;
  for (const auto& c : twisted_) s += c;
  return s;
}

MonodromyElem operator+(const MonodromyElem& a, const MonodromyElem& b) {
  MonodromyElem r = a;
  return r += b;
}

MonodromyElem operator*(const MonodromyElem& a, const MonodromyElem& b) {
  std::vector<Integer> triv = poly_mul(a.trivial(), b.trivial());
  add_into(triv, poly_mul(a.twisted(), b.twisted()));
  std::vector<Integer> tw = poly_mul(a.trivial(), b.twisted());
  add_into(tw, poly_mul(a.twisted(), b.trivial()));
  return MonodromyElem(std::move(triv), std::move(tw));
}

MonodromyElem operator*(const Integer& c, const MonodromyElem& a) {
  std::vector<Integer> triv = a.trivial();
  std::vector<Integer> tw = a.twisted();
  for (auto& x : triv) x *= c;
  for (auto& x : tw) x *= c;
  return MonodromyElem(std::move(triv), std::move(tw));
}

MonodromyElem l_system(int m) {
  require_nonnegative(m);
  if (m == 0) return MonodromyElem::one();
  int n = (m + 1) / 2;
  Integer a = (m % 2 == 0) ? n + 1 : n;
  return a * MonodromyElem::l_power(m) + Integer(n) * MonodromyElem::t_l_power(m);
}

MonodromyElem m_system(int m) {
  require_nonnegative(m);
  if (m == 0) return MonodromyElem::one();
  int n = (m + 1) / 2;
  Integer a = (m % 2 == 0) ? n : n - 1;
  return MonodromyElem::one() + a * MonodromyElem::l_power(1) +
         Integer(n - 1) * MonodromyElem::t_l_power(1);
}

MonodromyElem l_system_oracle(int m) {
  require_nonnegative(m);
  // Cells A_0..A_m, each an affine space of dimension m; the branch swap
  // sends A_k to A_{m-k}.
  MonodromyElem r;
  for (int k = 0; k <= m; ++k) {
    int partner = m - k;
    if (k < partner) r += MonodromyElem::pair_l_power(m);
    else if (k == partner) r += MonodromyElem::l_power(m);
  }
  return r;
}

MonodromyElem m_system_oracle(int m) {
  require_nonnegative(m);
  // A chain of rational curves C_1..C_{m-1}; the swap sends C_i to C_{m-i}.
  MonodromyElem r = MonodromyElem::one();
  for (int i = 1; i <= m - 1; ++i) {
    int partner = m - i;
    if (i < partner) r += MonodromyElem::pair_l_power(1);
    else if (i == partner) r += MonodromyElem::l_power(1);
  }
  return r;
}

MonodromyElem hilbert_pushforward(int k) {
  require_nonnegative(k);
  MonodromyElem r;
  for (int i = 0; i <= k; ++i) r += m_system(i) * l_system(k - i);
  return r;
}

MonodromyElem lhs_closed_form(int k) {
  require_nonnegative(k);
  MonodromyElem base;
  MonodromyElem paired;
  if (k % 2 == 0) {
    int n = k / 2;
    base = geom(2 * n);
    for (int i = 0; i <= n - 1; ++i) {
      paired += Integer((n - i) + 2 * i * (n - i)) * MonodromyElem::l_power(2 * i + 1);
    }
    for (int i = 1; i <= n; ++i) {
      paired += Integer(i + 2 * i * (n - i)) * MonodromyElem::l_power(2 * i);
    }
  } else {
    int n = (k - 1) / 2;
    for (int i = 0; i <= n; ++i) {
      base += MonodromyElem::l_power(2 * n - 2 * i);
      paired += Integer(n + 1 + 2 * i * (n - i)) * MonodromyElem::l_power(2 * n - 2 * i + 1);
      paired += Integer(2 * (i + 1) * (n - i)) * MonodromyElem::l_power(2 * n - 2 * i);
    }
  }
  return base + paired * kOnePlusT;
}

MonodromyElem rhs_pn(int k) {
  require_nonnegative(k);
  const MonodromyElem l = MonodromyElem::l_power(1);
  MonodromyElem r = l * geom(k);
  int n = k / 2;
  // Off-diagonal pairs of q-degrees c < k - 1 - c.
  for (int c = 0; c <= n - 1; ++c) add_paired(r, geom(c) * geom(k - 1 - c), 2);
  if (k % 2 == 1) {
    // Sym^2 of the middle q-degree.
    for (int i = 0; i <= n; ++i) r.add_at(2 * i + 2, 1, true);
    for (int i = 1; i <= n; ++i) {
      for (int j = 0; j <= i - 1; ++j) {
        r.add_at(i + j + 2, 1);
        r.add_at(i + j + 2, 1, true);
      }
    }
  }
  return r;
}

MonodromyElem sym2_odd_shift(const MonodromyElem& f) {
  if (!f.twisted().empty()) throw std::invalid_argument("sym2_odd_shift expects trivial monodromy");
  const auto& c = f.trivial();
  MonodromyElem r;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] < 0) throw std::invalid_argument("negative multiplicity");
    if (c[e] == 0) continue;
    int deg = static_cast<int>(2 * e + 1);
    // A class paired with itself is odd, so the swap acts by -1.
    r.add_at(deg, c[e], true);
    Integer same = binomial(c[e], 2);
    r.add_at(deg, same);
    r.add_at(deg, same, true);
    for (std::size_t e2 = e + 1; e2 < c.size(); ++e2) {
      Integer cross = c[e] * c[e2];
      r.add_at(static_cast<int>(e + e2 + 1), cross);
      r.add_at(static_cast<int>(e + e2 + 1), cross, true);
    }
  }
  return r;
}

MonodromyElem rhs_from_series(int n) {
  require_nonnegative(n);
  const MonodromyElem l = MonodromyElem::l_power(1);
  // F_k = sum_{j<=k} l^j; the first summand contributes l F_n at q^{n+1}.
  MonodromyElem r = l * geom(n);
  // l Sym^2(sum_k F_k[-1] q^{k+1}) at q^{n+1}: q-degrees a + b = n - 1.
  int total = n - 1;
  for (int a = 0; 2 * a <= total; ++a) {
    int b = total - a;
    if (a < b) {
      add_paired(r, geom(a) * geom(b), 2);
    } else {
      r += l * sym2_odd_shift(geom(a));
    }
  }
  return r;
}

Deg2Report verify_deg2(int k_max) {
  require_nonnegative(k_max);
  std::vector<MonodromyElem> ls;
  std::vector<MonodromyElem> ms;
  for (int m = 0; m <= k_max; ++m) {
    ls.push_back(l_system(m));
    ms.push_back(m_system(m));
  }
  const MonodromyElem l = MonodromyElem::l_power(1);
  Deg2Report report;
  report.pass = true;
  for (int k = 0; k <= k_max; ++k) {
    MonodromyElem h;
    for (int i = 0; i <= k; ++i) {
      h += ms[static_cast<std::size_t>(i)] * ls[static_cast<std::size_t>(k - i)];
    }
    MonodromyElem p = rhs_pn(k);
    Deg2Row row;
    row.k = k;
    row.lhs_matches_closed_form = h == lhs_closed_form(k);
    row.rhs_matches_series = p == rhs_from_series(k);
    row.rhs_equals_l_times_lhs = p == l * h;
    row.systems_match_oracles = ls[static_cast<std::size_t>(k)] == l_system_oracle(k) &&
                                ms[static_cast<std::size_t>(k)] == m_system_oracle(k);
    report.pass = report.pass && row.pass();
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::json to_json(const MonodromyElem& e) {
  auto strs = [](const std::vector<Integer>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : v) a.push_back(c.get_str());
    return a;
  };
  return {{"trivial", strs(e.trivial())}, {"twisted", strs(e.twisted())}};
}

MonodromyElem monodromy_from_json(const nlohmann::json& j) {
  auto ints = [](const nlohmann::json& a) {
    std::vector<Integer> v;
    for (const auto& s : a) {
      Integer c;
      if (c.set_str(s.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
      v.push_back(c);
    }
    return v;
  };
  return MonodromyElem(ints(j.at("trivial")), ints(j.at("twisted")));
}

nlohmann::json to_json(const Deg2Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"lhs_matches_closed_form", row.lhs_matches_closed_form},
                    {"rhs_matches_series", row.rhs_matches_series},
                    {"rhs_equals_l_times_lhs", row.rhs_equals_l_times_lhs},
                    {"systems_match_oracles", row.systems_match_oracles}});
  }
  int k_max = r.rows.empty() ? -1 : r.rows.back().k;
  return {{"k_max", k_max}, {"rows", rows}, {"pass", r.pass}};
}

}  // namespace gvpt
