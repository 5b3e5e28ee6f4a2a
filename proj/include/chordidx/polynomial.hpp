#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "chordidx/checked.hpp"

namespace chordidx {

/// Integer Laurent polynomial in one variable; no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, std::int64_t exponent);

  void add_term(std::int64_t exponent, std::int64_t coeff);
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(std::int64_t exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const;

  /// p(t) -> p(t^-1)
  LaurentPoly inverted() const;
  /// p(t) -> p(t^n)
  LaurentPoly power_substituted(std::int64_t n) const;
  std::int64_t at_one() const;

  /// Terms `c*t^e` by ascending exponent joined with " + "; "0" when empty.
  std::string to_string(char var = 't') const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

/// Element of Z[s^±1]/(s^k - 1) with k = modulus >= 0. Exponents are stored
/// reduced into [0, k) for k > 0; k = 0 keeps full Laurent exponents.
class CyclicPoly {
 public:
  CyclicPoly() = default;
  explicit CyclicPoly(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t reduce(std::int64_t exponent) const;
  void add_term(std::int64_t exponent, std::int64_t coeff);
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t at_one() const;
  std::string to_string(char var = 's') const;

  friend bool operator==(const CyclicPoly&, const CyclicPoly&) = default;
  friend auto operator<=>(const CyclicPoly&, const CyclicPoly&) = default;

 private:
  std::int64_t modulus_ = 0;
  std::map<std::int64_t, std::int64_t> terms_;
};

/// Integer polynomial in two commuting indeterminates x, y.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  static BivariatePoly constant(std::int64_t c);
  static BivariatePoly x(std::int64_t c = 1);
  static BivariatePoly y(std::int64_t c = 1);

  void add_term(int x_exp, int y_exp, std::int64_t coeff);
  const std::map<std::pair<int, int>, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator*(std::int64_t k, const BivariatePoly& p);
  /// Value at x = y = 1.
  std::int64_t at_one() const;
  std::string to_string() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> terms_;
};

namespace detail {
inline bool coeff_is_zero(std::int64_t c) { return c == 0; }
inline bool coeff_is_zero(const BivariatePoly& c) { return c.is_zero(); }
inline void coeff_add(std::int64_t& a, std::int64_t b) { a = chordidx::add(a, b); }
inline void coeff_add(BivariatePoly& a, const BivariatePoly& b) { a += b; }
}  // namespace detail

/// Finitely supported map Key -> Coeff with zero coefficients dropped; the
/// free module underlying the group rings and formal sums.
template <class Key, class Coeff>
class FreeModule {
 public:
  void add(const Key& key, const Coeff& coeff) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!detail::coeff_is_zero(coeff)) terms_.emplace(key, coeff);
      return;
    }
    detail::coeff_add(it->second, coeff);
    if (detail::coeff_is_zero(it->second)) terms_.erase(it);
  }

  FreeModule& operator+=(const FreeModule& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const FreeModule&, const FreeModule&) = default;

 private:
  std::map<Key, Coeff> terms_;
};

}  // namespace chordidx
