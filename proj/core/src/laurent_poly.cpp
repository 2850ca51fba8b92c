#include "vknot/laurent_poly.hpp"

#include <cstdlib>

namespace vknot {

LaurentPoly::LaurentPoly(std::map<int, Coefficient> coeffs) {
  for (const auto& [e, c] : coeffs) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coefficient c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly::Coefficient LaurentPoly::coefficient(int exponent) const noexcept {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly::Coefficient LaurentPoly::at_one() const noexcept {
  Coefficient s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly::Coefficient LaurentPoly::l1_norm() const noexcept {
  Coefficient s = 0;
  for (const auto& [e, c] : coeffs_) s += c < 0 ? -c : c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    const Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 't';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace vknot
