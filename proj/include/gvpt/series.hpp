#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace gvpt {

using Integer = mpz_class;

inline constexpr std::size_t kMaxVars = 8;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Exponent vector. Slots past the context size stay zero, so the default
// ordering is lexicographic on the live variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }

  Monomial operator+(const Monomial& o) const;
  bool is_zero() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<int, kMaxVars> e_{};
};

struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int e) const { return lo <= e && e <= hi; }
  bool operator==(const Window&) const = default;
};

// Ordered variable names. A doubled variable stores twice the true exponent,
// e.g. s with s^k meaning L^{k/2}.
class VarContext {
 public:
  VarContext() = default;
  explicit VarContext(std::vector<std::string> names, std::vector<std::string> doubled = {});

  std::size_t size() const { return data_ ? data_->names.size() : 0; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const;
  bool is_doubled(std::size_t i) const { return data_->doubled.at(i); }
  std::size_t index_of(const std::string& name) const;

  bool operator==(const VarContext& o) const;

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<bool> doubled;
  };
  std::shared_ptr<const Data> data_;
};

class LaurentSeries {
 public:
  using TermMap = std::map<Monomial, Integer>;

  LaurentSeries() = default;
  explicit LaurentSeries(VarContext ctx);

  static LaurentSeries constant(const VarContext& ctx, const Integer& c);
  static LaurentSeries monomial(const VarContext& ctx, std::span<const int> exps,
                                const Integer& c = 1);

  const VarContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  const std::optional<Window>& window(std::size_t var) const { return windows_.at(var); }
  const std::vector<std::optional<Window>>& windows() const { return windows_; }

  // Restricts (never widens) the window of one variable.
  LaurentSeries& set_window(std::size_t var, int lo, int hi);
  LaurentSeries& set_window(const std::string& var, int lo, int hi);

  // Throws WindowError if a windowed exponent lies outside its window.
  Integer coefficient(std::span<const int> exps) const;
  Integer coefficient(std::initializer_list<int> exps) const;

  void add_term(const Monomial& m, const Integer& c);
  bool is_zero() const { return terms_.empty(); }
  bool in_window(const Monomial& m) const;

  bool operator==(const LaurentSeries& o) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Integer& c);

 private:
  friend LaurentSeries mul(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries combine_windows(const LaurentSeries&, const LaurentSeries&);

  VarContext ctx_;
  std::vector<std::optional<Window>> windows_;
  TermMap terms_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const Integer& c, const LaurentSeries& a);

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

// Multiplies by a monomial; terms pushed out of the window are dropped.
LaurentSeries shift(const LaurentSeries& a, std::span<const int> exps);

// (1 + u)^e for any integer e. Throws std::domain_error when the constant term
// is not 1 or when the powers of u would never leave the window.
LaurentSeries binom_pow(const LaurentSeries& base, const Integer& e);

// Coefficientwise x -> x^{-1} symmetry in one variable.
bool symmetry_check(const LaurentSeries& s, const std::string& var);

// Substitutes var = value (value must be 1 or -1) and drops the variable.
LaurentSeries specialize(const LaurentSeries& s, const std::string& var, int value);

// Keeps only the terms whose exponent in var lies in [lo, hi].
LaurentSeries restrict_to(const LaurentSeries& s, const std::string& var, int lo, int hi);

Integer binomial(const Integer& n, long k);

nlohmann::json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const nlohmann::json& j);

}  // namespace gvpt
