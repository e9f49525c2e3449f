#include "cisys/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cisys/error.hpp"

namespace cisys {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t k, const Rational& c) {
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e.at(k) = 1;
  p.add_term(e, c);
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

int MPoly::degree_in(std::size_t k) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[k]));
  return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != nvars_) throw Error("MPoly: exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return r;
  Exponents e(r.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::derivative(std::size_t k, int order) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] < order) continue;
    Rational f = c;
    for (int j = 0; j < order; ++j) f *= (e[k] - j);
    Exponents d = e;
    d[k] = static_cast<std::uint8_t>(d[k] - order);
    r.add_term(d, f);
  }
  return r;
}

MPoly MPoly::derivative(const Exponents& alpha) const {
  MPoly r = *this;
  for (std::size_t k = 0; k < alpha.size() && !r.is_zero(); ++k)
    if (alpha[k] > 0) r = r.derivative(k, alpha[k]);
  return r;
}

MPoly MPoly::substitute(std::size_t k, const Rational& value) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[k] = 0;
    Rational f = c;
    for (int j = 0; j < e[k]; ++j) f *= value;
    r.add_term(d, f);
  }
  return r;
}

MPoly MPoly::zero_prefix(std::size_t count) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    for (std::size_t k = 0; k < count && !vanishes; ++k) vanishes = e[k] != 0;
    if (!vanishes) r.add_term(e, c);
  }
  return r;
}

UPoly MPoly::to_upoly(std::size_t k) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(k) + 1)), Rational(0));
  for (const auto& [e, x] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != k && e[j] != 0) throw Error("MPoly::to_upoly: foreign variable present");
    c[e[k]] += x;
  }
  return UPoly(std::move(c));
}

std::string MPoly::str(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (has_var) vars << "*";
      vars << name(k);
      if (e[k] > 1) vars << "^" << static_cast<int>(e[k]);
      has_var = true;
    }
    if (!has_var) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << vars.str();
    }
  }
  return os.str();
}

}  // namespace cisys
