#include "cisys/uea.hpp"

#include <algorithm>
#include <sstream>

#include "cisys/error.hpp"

namespace cisys {

PBWElement PBWElement::monomial(Word w, const UPoly& c) {
  if (!std::is_sorted(w.begin(), w.end())) throw Error("PBWElement::monomial: word not normally ordered");
  PBWElement e;
  e.add_term(w, c);
  return e;
}

int PBWElement::degree() const {
  // WordOrder sorts by length, so the last key is the longest.
  return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size());
}

UPoly PBWElement::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? UPoly() : it->second;
}

void PBWElement::add_term(const Word& m, const UPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

PBWElement& PBWElement::operator*=(const UPoly& k) {
  if (k.is_zero()) {
    t_.clear();
    return *this;
  }
  Terms out;
  for (auto& [m, c] : t_) {
    UPoly p = c * k;
    if (!p.is_zero()) out.emplace(m, std::move(p));
  }
  t_ = std::move(out);
  return *this;
}

PBWElement PBWElement::at(const Rational& s0) const {
  PBWElement r;
  for (const auto& [m, c] : t_) r.add_term(m, UPoly(c.eval(s0)));
  return r;
}

bool PBWElement::depends_on_s() const {
  return std::any_of(t_.begin(), t_.end(), [](const auto& t) { return !t.second.is_constant(); });
}

PBWElement Enveloping::lmul_word(std::size_t x, const Word& w) const {
  if (w.empty() || x <= w.front()) {
    Word m;
    m.reserve(w.size() + 1);
    m.push_back(static_cast<std::uint16_t>(x));
    m.insert(m.end(), w.begin(), w.end());
    return PBWElement::monomial(std::move(m));
  }
  // x y r = y (x r) + [x, y] r
  const std::size_t y = w.front();
  const Word rest(w.begin() + 1, w.end());
  PBWElement out = left_multiply(y, lmul_word(x, rest));
  for (const auto& [k, c] : L_->bracket_basis(x, y).terms()) {
    PBWElement t = lmul_word(k, rest);
    t *= UPoly(c);
    out += t;
  }
  return out;
}

PBWElement Enveloping::rmul_word(const Word& w, std::size_t x) const {
  if (w.empty() || w.back() <= x) {
    Word m = w;
    m.push_back(static_cast<std::uint16_t>(x));
    return PBWElement::monomial(std::move(m));
  }
  // r y x = (r x) y + r [y, x]
  const std::size_t y = w.back();
  const Word rest(w.begin(), w.end() - 1);
  PBWElement out = right_multiply(rmul_word(rest, x), y);
  for (const auto& [k, c] : L_->bracket_basis(y, x).terms()) {
    PBWElement t = rmul_word(rest, k);
    t *= UPoly(c);
    out += t;
  }
  return out;
}

PBWElement Enveloping::left_multiply(std::size_t x, const PBWElement& a) const {
  PBWElement out;
  for (const auto& [m, c] : a.terms()) {
    PBWElement t = lmul_word(x, m);
    t *= c;
    out += t;
  }
  return out;
}

PBWElement Enveloping::left_multiply(const Element& y, const PBWElement& a) const {
  PBWElement out;
  for (const auto& [i, c] : y.terms()) {
    PBWElement t = left_multiply(i, a);
    t *= UPoly(c);
    out += t;
  }
  return out;
}

PBWElement Enveloping::right_multiply(const PBWElement& a, std::size_t x) const {
  PBWElement out;
  for (const auto& [m, c] : a.terms()) {
    PBWElement t = rmul_word(m, x);
    t *= c;
    out += t;
  }
  return out;
}

PBWElement Enveloping::normal_order(std::span<const std::size_t> word) const {
  PBWElement acc = PBWElement::one();
  for (std::size_t x : word) {
    if (x >= L_->dim()) throw DomainError("normal_order: basis position out of range");
    acc = right_multiply(acc, x);
  }
  return acc;
}

PBWElement Enveloping::multiply(const PBWElement& a, const PBWElement& b) const {
  PBWElement out;
  for (const auto& [mb, cb] : b.terms()) {
    PBWElement acc = a;
    for (std::size_t x : mb) acc = right_multiply(acc, x);
    acc *= cb;
    out += acc;
  }
  return out;
}

std::vector<int> Enveloping::weight(const Word& w) const {
  std::vector<int> wt(static_cast<std::size_t>(L_->rank()), 0);
  for (std::size_t x : w) {
    const auto& b = L_->basis(x);
    if (b.kind != BasisIndex::Kind::RootVector) continue;
    for (std::size_t k = 0; k < wt.size(); ++k) wt[k] += b.root.coords[k];
  }
  return wt;
}

int Enveloping::grade(const Word& w) const {
  int g = 0;
  for (std::size_t x : w) g += L_->basis(x).grade;
  return g;
}

std::string Enveloping::str(const PBWElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (i) mono << "*";
      mono << L_->basis(m[i]).label;
      if (j - i > 1) mono << "^" << (j - i);
      i = j;
    }
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      const Rational x = c.constant_term();
      negative = x < 0;
      const Rational mag = abs(x);
      if (m.empty() || mag != 1) coeff = mag.get_str();
    } else {
      coeff = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff;
    if (!coeff.empty() && !m.empty()) os << "*";
    os << mono.str();
  }
  return os.str();
}

PBWElement normal_order(const LieAlgebra& L, std::span<const std::size_t> word) {
  return Enveloping(L).normal_order(word);
}

PBWElement multiply(const LieAlgebra& L, const PBWElement& a, const PBWElement& b) {
  return Enveloping(L).multiply(a, b);
}

std::vector<Word> enumerate_monomials(const std::vector<std::size_t>& generators, int max_degree) {
  std::vector<std::size_t> gens = generators;
  std::sort(gens.begin(), gens.end());
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t g : gens) {
        if (!w.empty() && g < w.back()) continue;
        Word v = w;
        v.push_back(static_cast<std::uint16_t>(g));
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::size_t> nbar_generators(const LieAlgebra& L) {
  std::vector<std::size_t> g;
  for (std::size_t i = L.nbar_begin(); i < L.nbar_end(); ++i) g.push_back(i);
  return g;
}

}  // namespace cisys
