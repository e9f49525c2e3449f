#include "cisys/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "cisys/error.hpp"

namespace cisys {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(k)];
}

Rational UPoly::eval(const Rational& s0) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s0 + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error("UPoly::divmod: division by zero polynomial");
  r = a;
  std::vector<Rational> qc(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0,
                           Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rational f = r.leading() / b.leading();
    qc[static_cast<size_t>(shift)] = f;
    r -= UPoly::monomial(f, shift) * b;
  }
  q = UPoly(std::move(qc));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly m = *this;
  m *= Rational(1) / leading();
  return m;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> UPoly::rational_roots() const {
  if (is_zero()) throw Error("UPoly::rational_roots: zero polynomial has every root");
  std::vector<Rational> roots;
  // Strip the factor s^k.
  size_t low = 0;
  while (c_[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Rational> rest(c_.begin() + static_cast<long>(low), c_.end());
  if (rest.size() > 1) {
    Integer lcm_den = 1;
    for (const auto& x : rest) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                       x.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& x : rest) ints.emplace_back(Rational(x * lcm_den).get_num());
    const UPoly p(rest);
    for (const auto& num : positive_divisors(ints.front())) {
      for (const auto& den : positive_divisors(ints.back())) {
        for (int sign : {-1, 1}) {
          Rational cand(sign * num, den);
          cand.canonicalize();
          if (p.eval(cand) == 0 &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& x = c_[static_cast<size_t>(k)];
    if (x == 0) continue;
    Rational mag = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "s";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace cisys
