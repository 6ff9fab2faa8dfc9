#include "gvpt/series.hpp"

#include <algorithm>
#include <sstream>

namespace gvpt {

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

bool Monomial::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

VarContext::VarContext(std::vector<std::string> names, std::vector<std::string> doubled) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many variables");
  auto d = std::make_shared<Data>();
  d->doubled.assign(names.size(), false);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
    }
  }
  d->names = std::move(names);
  for (const auto& v : doubled) {
    auto it = std::find(d->names.begin(), d->names.end(), v);
    if (it == d->names.end()) throw std::invalid_argument("unknown doubled variable " + v);
    d->doubled[static_cast<std::size_t>(it - d->names.begin())] = true;
  }
  data_ = std::move(d);
}

const std::vector<std::string>& VarContext::names() const {
  static const std::vector<std::string> empty;
  return data_ ? data_->names : empty;
}

std::size_t VarContext::index_of(const std::string& name) const {
  const auto& n = names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw std::invalid_argument("unknown variable " + name);
  return static_cast<std::size_t>(it - n.begin());
}

bool VarContext::operator==(const VarContext& o) const {
  if (data_ == o.data_) return true;
  if (!data_ || !o.data_) return size() == o.size();
  return data_->names == o.data_->names && data_->doubled == o.data_->doubled;
}

LaurentSeries::LaurentSeries(VarContext ctx)
    : ctx_(std::move(ctx)), windows_(ctx_.size()) {}

LaurentSeries LaurentSeries::constant(const VarContext& ctx, const Integer& c) {
  LaurentSeries s(ctx);
  s.add_term(Monomial{}, c);
  return s;
}

LaurentSeries LaurentSeries::monomial(const VarContext& ctx, std::span<const int> exps,
                                      const Integer& c) {
  if (exps.size() != ctx.size()) throw std::invalid_argument("exponent arity mismatch");
  LaurentSeries s(ctx);
  s.add_term(Monomial(exps), c);
  return s;
}

LaurentSeries& LaurentSeries::set_window(std::size_t var, int lo, int hi) {
  if (var >= ctx_.size()) throw std::invalid_argument("window variable out of range");
  if (lo > hi) throw WindowError("empty window");
  auto& w = windows_[var];
  if (w) {
    lo = std::max(lo, w->lo);
    hi = std::min(hi, w->hi);
    if (lo > hi) throw WindowError("incompatible windows");
  }
  w = Window{lo, hi};
  std::erase_if(terms_, [&](const auto& kv) { return !w->contains(kv.first[var]); });
  return *this;
}

LaurentSeries& LaurentSeries::set_window(const std::string& var, int lo, int hi) {
  return set_window(ctx_.index_of(var), lo, hi);
}

bool LaurentSeries::in_window(const Monomial& m) const {
  for (std::size_t i = 0; i < windows_.size(); ++i) {
    if (windows_[i] && !windows_[i]->contains(m[i])) return false;
  }
  return true;
}

Integer LaurentSeries::coefficient(std::span<const int> exps) const {
  if (exps.size() != ctx_.size()) throw std::invalid_argument("exponent arity mismatch");
  Monomial m(exps);
  for (std::size_t i = 0; i < windows_.size(); ++i) {
    if (windows_[i] && !windows_[i]->contains(m[i])) {
      std::ostringstream os;
      os << "exponent " << m[i] << " of " << ctx_.name(i) << " outside window ["
         << windows_[i]->lo << ", " << windows_[i]->hi << "]";
      throw WindowError(os.str());
    }
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentSeries::coefficient(std::initializer_list<int> exps) const {
  return coefficient(std::span<const int>(exps.begin(), exps.size()));
}

void LaurentSeries::add_term(const Monomial& m, const Integer& c) {
  if (c == 0 || !in_window(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  return ctx_ == o.ctx_ && windows_ == o.windows_ && terms_ == o.terms_;
}

LaurentSeries combine_windows(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("operands have different variable contexts");
  LaurentSeries r(a.ctx_);
  for (std::size_t i = 0; i < r.windows_.size(); ++i) {
    const auto& wa = a.windows_[i];
    const auto& wb = b.windows_[i];
    if (wa && wb) {
      Window w{std::max(wa->lo, wb->lo), std::min(wa->hi, wb->hi)};
      if (w.lo > w.hi) throw WindowError("incompatible windows for " + a.ctx_.name(i));
      r.windows_[i] = w;
    } else {
      r.windows_[i] = wa ? wa : wb;
    }
  }
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  LaurentSeries r = combine_windows(*this, o);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return *this = std::move(r);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  LaurentSeries r = combine_windows(*this, o);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return *this = std::move(r);
}

LaurentSeries& LaurentSeries::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r = a;
  return r += b;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r = a;
  return r -= b;
}

LaurentSeries operator-(const LaurentSeries& a) {
  LaurentSeries r = a;
  return r *= Integer(-1);
}

LaurentSeries operator*(const Integer& c, const LaurentSeries& a) {
  LaurentSeries r = a;
  return r *= c;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r = combine_windows(a, b);
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma + mb;
      if (!r.in_window(m)) continue;
      prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(m, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentSeries shift(const LaurentSeries& a, std::span<const int> exps) {
  if (exps.size() != a.context().size()) throw std::invalid_argument("exponent arity mismatch");
  Monomial d(exps);
  LaurentSeries r(a.context());
  for (std::size_t i = 0; i < a.windows().size(); ++i) {
    if (a.windows()[i]) r.set_window(i, a.windows()[i]->lo, a.windows()[i]->hi);
  }
  for (const auto& [m, c] : a.terms()) r.add_term(m + d, c);
  return r;
}

Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

namespace {

// Every power of u must eventually leave the window. Accept when some
// nonnegative weight (one windowed variable, or all windowed variables at
// once) is at least 1 on every monomial of u and the window bounds it above.
bool terminates(const LaurentSeries& u) {
  std::vector<std::size_t> windowed;
  for (std::size_t i = 0; i < u.windows().size(); ++i) {
    if (u.windows()[i]) windowed.push_back(i);
  }
  auto positive_under = [&](const std::vector<std::size_t>& vars) {
    for (const auto& [m, c] : u.terms()) {
      long w = 0;
      for (auto v : vars) w += m[v];
      if (w < 1) return false;
    }
    return true;
  };
  for (auto v : windowed) {
    if (positive_under({v})) return true;
  }
  return !windowed.empty() && positive_under(windowed);
}

}  // namespace

LaurentSeries binom_pow(const LaurentSeries& base, const Integer& e) {
  const Monomial zero;
  auto it = base.terms().find(zero);
  if (it == base.terms().end() || it->second != 1) {
    throw std::domain_error("binom_pow: constant term must be 1");
  }
  LaurentSeries u = base;
  u.add_term(zero, -1);

  LaurentSeries one = LaurentSeries::constant(base.context(), 1);
  for (std::size_t i = 0; i < base.windows().size(); ++i) {
    if (base.windows()[i]) one.set_window(i, base.windows()[i]->lo, base.windows()[i]->hi);
  }
  if (u.is_zero() || e == 0) return one;
  if (e < 0 && !terminates(u)) {
    throw std::domain_error("binom_pow: expansion does not terminate in the window");
  }

  LaurentSeries result = one;
  LaurentSeries power = one;
  for (long k = 1;; ++k) {
    if (e > 0 && k > e) break;
    power = mul(power, u);
    if (power.is_zero()) break;
    Integer c = binomial(e, k);
    for (const auto& [m, v] : power.terms()) result.add_term(m, c * v);
  }
  return result;
}

bool symmetry_check(const LaurentSeries& s, const std::string& var) {
  std::size_t v = s.context().index_of(var);
  for (const auto& [m, c] : s.terms()) {
    Monomial mirror = m;
    mirror[v] = -m[v];
    auto it = s.terms().find(mirror);
    if (it == s.terms().end() || it->second != c) return false;
  }
  return true;
}

LaurentSeries specialize(const LaurentSeries& s, const std::string& var, int value) {
  if (value != 1 && value != -1) throw std::invalid_argument("specialize: value must be 1 or -1");
  std::size_t v = s.context().index_of(var);
  std::vector<std::string> names;
  std::vector<std::string> doubled;
  for (std::size_t i = 0; i < s.context().size(); ++i) {
    if (i == v) continue;
    names.push_back(s.context().name(i));
    if (s.context().is_doubled(i)) doubled.push_back(s.context().name(i));
  }
  LaurentSeries r(VarContext(names, doubled));
  std::size_t j = 0;
  for (std::size_t i = 0; i < s.context().size(); ++i) {
    if (i == v) continue;
    if (s.windows()[i]) r.set_window(j, s.windows()[i]->lo, s.windows()[i]->hi);
    ++j;
  }
  for (const auto& [m, c] : s.terms()) {
    Monomial out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < s.context().size(); ++i) {
      if (i != v) out[k++] = m[i];
    }
    bool negate = value == -1 && (m[v] % 2 != 0);
    r.add_term(out, negate ? Integer(-c) : c);
  }
  return r;
}

LaurentSeries restrict_to(const LaurentSeries& s, const std::string& var, int lo, int hi) {
  LaurentSeries r = s;
  r.set_window(var, lo, hi);
  return r;
}

nlohmann::json to_json(const LaurentSeries& s) {
  nlohmann::json j;
  j["vars"] = s.context().names();
  nlohmann::json doubled = nlohmann::json::array();
  nlohmann::json windows = nlohmann::json::object();
  for (std::size_t i = 0; i < s.context().size(); ++i) {
    if (s.context().is_doubled(i)) doubled.push_back(s.context().name(i));
    if (s.windows()[i]) windows[s.context().name(i)] = {s.windows()[i]->lo, s.windows()[i]->hi};
  }
  if (!doubled.empty()) j["doubled"] = doubled;
  if (!windows.empty()) j["window"] = windows;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) {
    std::vector<int> e(s.context().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i];
    terms.push_back({{"e", e}, {"c", c.get_str()}});
  }
  j["terms"] = terms;
  return j;
}

LaurentSeries series_from_json(const nlohmann::json& j) {
  auto names = j.at("vars").get<std::vector<std::string>>();
  std::vector<std::string> doubled;
  if (j.contains("doubled")) doubled = j.at("doubled").get<std::vector<std::string>>();
  LaurentSeries s(VarContext(names, doubled));
  if (j.contains("window")) {
    for (const auto& [name, w] : j.at("window").items()) {
      s.set_window(name, w.at(0).get<int>(), w.at(1).get<int>());
    }
  }
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<std::vector<int>>();
    if (e.size() != names.size()) throw std::invalid_argument("term arity mismatch");
    Integer c;
    if (c.set_str(t.at("c").get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad coefficient " + t.at("c").get<std::string>());
    }
    Monomial m(e);
    if (!s.in_window(m)) throw WindowError("term outside window");
    s.add_term(m, c);
  }
  return s;
}

}  // namespace gvpt
