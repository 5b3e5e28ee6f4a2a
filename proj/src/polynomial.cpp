#include "chordidx/polynomial.hpp"

#include <sstream>

#include "chordidx/error.hpp"

namespace chordidx {

namespace {

void add_into(std::map<std::int64_t, std::int64_t>& terms, std::int64_t e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (inserted) return;
  it->second = add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

std::string render(const std::map<std::int64_t, std::int64_t>& terms, char var) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) out << " + ";
    first = false;
    out << c << '*' << var << '^' << e;
  }
  return out.str();
}

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, std::int64_t exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(std::int64_t exponent, std::int64_t coeff) { add_into(terms_, exponent, coeff); }

std::int64_t LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, neg(c));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e, neg(c));
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(neg(e), c);
  return p;
}

LaurentPoly LaurentPoly::power_substituted(std::int64_t n) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(mul(e, n), c);
  return p;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = add(s, c);
  return s;
}

std::string LaurentPoly::to_string(char var) const { return render(terms_, var); }

CyclicPoly::CyclicPoly(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 0) fail(ErrorCode::kInvalidArgument, "cyclic polynomial modulus must be non-negative");
}

std::int64_t CyclicPoly::reduce(std::int64_t exponent) const {
  return modulus_ == 0 ? exponent : floor_mod(exponent, modulus_);
}

void CyclicPoly::add_term(std::int64_t exponent, std::int64_t coeff) { add_into(terms_, reduce(exponent), coeff); }

std::int64_t CyclicPoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = add(s, c);
  return s;
}

std::string CyclicPoly::to_string(char var) const { return render(terms_, var); }

BivariatePoly BivariatePoly::constant(std::int64_t c) {
  BivariatePoly p;
  p.add_term(0, 0, c);
  return p;
}

BivariatePoly BivariatePoly::x(std::int64_t c) {
  BivariatePoly p;
  p.add_term(1, 0, c);
  return p;
}

BivariatePoly BivariatePoly::y(std::int64_t c) {
  BivariatePoly p;
  p.add_term(0, 1, c);
  return p;
}

void BivariatePoly::add_term(int x_exp, int y_exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(x_exp, y_exp), coeff);
  if (inserted) return;
  it->second = add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, neg(c));
  return *this;
}

BivariatePoly operator*(std::int64_t k, const BivariatePoly& p) {
  BivariatePoly r;
  for (const auto& [m, c] : p.terms_) r.add_term(m.first, m.second, mul(k, c));
  return r;
}

std::int64_t BivariatePoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& [m, c] : terms_) s = add(s, c);
  return s;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c << "*x^" << m.first << "*y^" << m.second;
  }
  return out.str();
}

}  // namespace chordidx
