#include "blob/laurent.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace blob {

LaurentPoly::LaurentPoly(Int constant) { set(0, std::move(constant)); }

LaurentPoly LaurentPoly::monomial(int exponent, Int coefficient) {
  LaurentPoly p;
  p.set(exponent, std::move(coefficient));
  return p;
}

void LaurentPoly::set(int exponent, Int coefficient) {
  if (coefficient != 0) _terms[exponent] = std::move(coefficient);
}

bool LaurentPoly::is_constant() const {
  return _terms.empty() || (_terms.size() == 1 && _terms.begin()->first == 0);
}

Int LaurentPoly::coefficient(int exponent) const {
  auto it = _terms.find(exponent);
  return it == _terms.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  assert(!_terms.empty());
  return _terms.begin()->first;
}

int LaurentPoly::max_exponent() const {
  assert(!_terms.empty());
  return _terms.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other._terms) {
    Int sum = coefficient(e) + c;
    if (sum == 0) {
      _terms.erase(e);
    } else {
      _terms[e] = std::move(sum);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other._terms) {
    Int diff = coefficient(e) - c;
    if (diff == 0) {
      _terms.erase(e);
    } else {
      _terms[e] = std::move(diff);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly result;
  for (const auto& [ea, ca] : _terms) {
    for (const auto& [eb, cb] : other._terms) {
      result._terms[ea + eb] += ca * cb;
    }
  }
  for (auto it = result._terms.begin(); it != result._terms.end();) {
    if (it->second == 0) {
      it = result._terms.erase(it);
    } else {
      ++it;
    }
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly result;
  for (const auto& [e, c] : _terms) result._terms[e + d] = c;
  return result;
}

Int LaurentPoly::eval_at_one() const {
  Int total = 0;
  for (const auto& [e, c] : _terms) total += c;
  return total;
}

bool LaurentPoly::has_negative_coefficient() const {
  for (const auto& [e, c] : _terms) {
    if (c < 0) return true;
  }
  return false;
}

bool LaurentPoly::is_bar_symmetric() const {
  for (const auto& [e, c] : _terms) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (_terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (c < 0) c = -c;
    int e = it->first;
    if (c != 1 || e == 0) out << c;
    if (e != 0) {
      out << 't';
      if (e != 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace blob
