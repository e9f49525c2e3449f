#include "cisys/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "cisys/error.hpp"
#include "cisys/hash.hpp"
#include "cisys/linalg.hpp"

namespace cisys {

Element Element::basis(std::size_t i, const Rational& c) {
  Element e;
  e.add_term(i, c);
  return e;
}

Rational Element::coeff(std::size_t i) const {
  auto it = c_.find(i);
  return it == c_.end() ? Rational(0) : it->second;
}

void Element::add_term(std::size_t i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [i, c] : o.c_) add_term(i, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [i, c] : o.c_) add_term(i, -c);
  return *this;
}

Element& Element::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [i, c] : c_) c *= k;
  return *this;
}

namespace {

int sign_of(const Root& a) { return a.is_positive() ? 1 : -1; }

// Asymmetry function eps(a, b) = prod eps(alpha_i, alpha_j)^{a_i b_j} with
// eps(alpha_i, alpha_j) = -1 iff i == j, or i < j and the nodes are linked.
int asymmetry(const RootSystem& rs, const Root& a, const Root& b) {
  const auto& cm = rs.cartan();
  int parity = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] % 2 == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] % 2 == 0) continue;
      if (i == j || (i < j && cm[i][j] != 0)) parity ^= 1;
    }
  }
  return parity ? -1 : 1;
}

}  // namespace

void LieAlgebra::layout_basis() {
  basis_.clear();
  root_pos_.clear();
  const int r = rs_.rank();
  std::vector<Root> nbar, levi_neg, levi_pos, n;
  for (const auto& a : rs_.positives()) {
    const int g = rs_.lattice_inner(a.coords, gamma_.coords);
    if (g == 0) {
      levi_pos.push_back(a);
      levi_neg.push_back(-a);
    } else {
      n.push_back(a);
      nbar.push_back(-a);
    }
  }
  auto push_root = [&](const Root& a, Block b) {
    BasisIndex bi;
    bi.kind = BasisIndex::Kind::RootVector;
    bi.root = a;
    bi.grade = rs_.lattice_inner(a.coords, gamma_.coords);
    bi.block = b;
    bi.label = "X[" + a.label() + "]";
    root_pos_[a] = basis_.size();
    basis_.push_back(std::move(bi));
  };
  for (const auto& a : nbar) push_root(a, Block::NBar);
  for (const auto& a : levi_neg) push_root(a, Block::Levi);
  cartan_pos_.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    BasisIndex bi;
    bi.kind = BasisIndex::Kind::Cartan;
    bi.cartan = i;
    bi.block = Block::Levi;
    bi.label = "H[" + std::to_string(i + 1) + "]";
    cartan_pos_[static_cast<std::size_t>(i)] = basis_.size();
    basis_.push_back(std::move(bi));
  }
  for (const auto& a : levi_pos) push_root(a, Block::Levi);
  for (const auto& a : n) push_root(a, Block::N);
  n_nbar_ = nbar.size();
  n_levi_ = levi_neg.size() + levi_pos.size() + static_cast<std::size_t>(r);
}

std::size_t LieAlgebra::position(const Root& a) const {
  auto it = root_pos_.find(a);
  if (it == root_pos_.end()) throw DomainError("no root vector for " + a.label());
  return it->second;
}

Element LieAlgebra::coroot(const Root& a) const {
  Element h;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    h.add_term(cartan_pos_[i], a.coords[i]);
  return h;
}

Element LieAlgebra::bracket(const Element& a, const Element& b) const {
  Element r;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      const Element& t = bracket_basis(i, j);
      if (t.is_zero()) continue;
      const Rational f = ci * cj;
      for (const auto& [k, ck] : t.terms()) r.add_term(k, f * ck);
    }
  return r;
}

Rational LieAlgebra::killing(const Element& a, const Element& b) const {
  Rational s = 0;
  for (const auto& [i, ci] : a.terms()) {
    const auto& bi = basis_[i];
    if (bi.kind == BasisIndex::Kind::RootVector) {
      const Root neg = -bi.root;
      s += ci * b.coeff(position(neg));
    } else {
      for (const auto& [j, cj] : b.terms()) {
        const auto& bj = basis_[j];
        if (bj.kind != BasisIndex::Kind::Cartan) continue;
        s += ci * cj * rs_.gram()(static_cast<std::size_t>(bi.cartan), static_cast<std::size_t>(bj.cartan));
      }
    }
  }
  return s;
}

Rational LieAlgebra::structure_constant(const Root& a, const Root& b) const {
  const Root sum = a + b;
  if (!rs_.contains(sum)) return 0;
  return bracket_basis(position(a), position(b)).coeff(position(sum));
}

bool LieAlgebra::in_block(const Element& x, Block b) const {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const auto& t) { return basis_[t.first].block == b; });
}

Rational LieAlgebra::dchi(const Element& z) const {
  if (!in_block(z, Block::Levi)) throw DomainError("dchi: element is not in l: " + element_str(z));
  Rational s = 0;
  for (const auto& [i, c] : z.terms()) {
    const auto& bi = basis_[i];
    if (bi.kind != BasisIndex::Kind::Cartan) continue;
    std::vector<int> e(static_cast<std::size_t>(rank()), 0);
    e[static_cast<std::size_t>(bi.cartan)] = 1;
    s += c * rs_.lattice_inner(gamma_.coords, e);
  }
  return s;
}

std::string LieAlgebra::element_str(const Element& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x.terms()) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << "*";
    os << basis_[i].label;
  }
  return os.str();
}

std::string LieAlgebra::table_text() const {
  std::ostringstream os;
  os << rs_.spec().name() << "\n";
  for (const auto& b : basis_) os << b.label << "\n";
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const auto& [k, c] : bracket_basis(i, j).terms())
        os << i << " " << j << " " << k << " " << c.get_str() << "\n";
  return os.str();
}

std::uint64_t LieAlgebra::table_hash() const { return fnv1a64(table_text()); }

nlohmann::json LieAlgebra::table_json() const {
  nlohmann::json j;
  j["family"] = std::string(1, rs_.spec().name()[0]);
  j["rank"] = rank();
  j["basis"] = nlohmann::json::array();
  for (const auto& b : basis_) j["basis"].push_back(b.label);
  j["brackets"] = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j2 = i + 1; j2 < dim(); ++j2)
      for (const auto& [k, c] : bracket_basis(i, j2).terms())
        j["brackets"].push_back({i, j2, k, c.get_str()});
  return j;
}

std::vector<std::string> check_normalizations(const LieAlgebra& L) {
  std::vector<std::string> bad;
  const auto& rs = L.roots();
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element s = L.bracket_basis(i, j) + L.bracket_basis(j, i);
      if (!s.is_zero()) bad.push_back("antisymmetry fails for " + L.basis(i).label + ", " + L.basis(j).label);
    }
  for (const auto& a : rs.all_roots()) {
    const Element xa = L.root_vector(a), xm = L.root_vector(-a);
    if (a.is_positive() && !(L.bracket(xa, xm) == L.coroot(a)))
      bad.push_back("[X_a, X_-a] != H_a for a = " + a.label());
    if (L.killing(xa, xm) != 1) bad.push_back("B(X_a, X_-a) != 1 for a = " + a.label());
    if (rs.lattice_inner(a.coords, a.coords) != 2) bad.push_back("(a, a) != 2 for a = " + a.label());
    // [H_a, X_b] = b(H_a) X_b with b(H_a) = (b, a).
    for (const auto& b : rs.all_roots()) {
      const Element lhs = L.bracket(L.coroot(a), L.root_vector(b));
      const Element rhs = Rational(rs.lattice_inner(b.coords, a.coords)) * L.root_vector(b);
      if (!(lhs == rhs)) bad.push_back("[H_a, X_b] != (b, a) X_b for a = " + a.label() + ", b = " + b.label());
      const Root sum = a + b;
      if (!sum.is_zero() && !rs.contains(sum) && !L.bracket(xa, L.root_vector(b)).is_zero())
        bad.push_back("[X_a, X_b] != 0 with a + b not a root: " + a.label() + ", " + b.label());
      if (rs.contains(sum)) {
        const Rational N = L.structure_constant(a, b);
        if (N != 1 && N != -1) bad.push_back("N_{a,b} not +-1 for " + a.label() + ", " + b.label());
      }
    }
  }
  return bad;
}

namespace {

bool jacobi_holds(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const Element x = Element::basis(i), y = Element::basis(j), z = Element::basis(k);
  Element s = L.bracket(x, L.bracket(y, z));
  s += L.bracket(y, L.bracket(z, x));
  s += L.bracket(z, L.bracket(x, y));
  return s.is_zero();
}

std::string triple_label(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  return "Jacobi fails for (" + L.basis(i).label + ", " + L.basis(j).label + ", " + L.basis(k).label + ")";
}

}  // namespace

std::vector<std::string> check_jacobi_exhaustive(const LieAlgebra& L, std::size_t max_report) {
  std::vector<std::string> bad;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (!jacobi_holds(L, i, j, k) && bad.size() < max_report) bad.push_back(triple_label(L, i, j, k));
  return bad;
}

void LieAlgebra::validate() const {
  auto bad = check_normalizations(*this);
  if (!bad.empty()) throw Error("Chevalley basis construction failed: " + bad.front());
  // ad(z) is a derivation for every z in the generating set {X_{+-alpha_i}},
  // hence for all of g.
  std::vector<std::size_t> gens;
  for (const auto& a : rs_.simples()) {
    gens.push_back(position(a));
    gens.push_back(position(-a));
  }
  for (std::size_t z : gens)
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!jacobi_holds(*this, z, i, j))
          throw Error("Chevalley basis construction failed: " + triple_label(*this, z, i, j));
}

LieAlgebra build_chevalley(const RootSystem& rs) {
  LieAlgebra L;
  L.rs_ = rs;
  L.gamma_ = highest_root(rs);
  L.layout_basis();
  const std::size_t n = L.dim();
  L.table_.assign(n * n, Element{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& bi = L.basis_[i];
      const auto& bj = L.basis_[j];
      Element& out = L.table_[i * n + j];
      using K = BasisIndex::Kind;
      if (bi.kind == K::Cartan && bj.kind == K::Cartan) continue;
      if (bi.kind == K::Cartan) {
        std::vector<int> e(static_cast<std::size_t>(rs.rank()), 0);
        e[static_cast<std::size_t>(bi.cartan)] = 1;
        out.add_term(j, rs.lattice_inner(bj.root.coords, e));
        continue;
      }
      if (bj.kind == K::Cartan) {
        std::vector<int> e(static_cast<std::size_t>(rs.rank()), 0);
        e[static_cast<std::size_t>(bj.cartan)] = 1;
        out.add_term(i, -rs.lattice_inner(bi.root.coords, e));
        continue;
      }
      const Root& a = bi.root;
      const Root& b = bj.root;
      const Root sum = a + b;
      if (sum.is_zero()) {
        // X_a = sign(a) E_a with [E_a, E_-a] = -a gives [X_a, X_-a] = H_a.
        out = L.coroot(a);
      } else if (rs.contains(sum)) {
        const int c = sign_of(a) * sign_of(b) * sign_of(sum) * asymmetry(rs, a, b);
        out.add_term(L.position(sum), c);
      }
    }
  }
  L.validate();
  return L;
}

LieAlgebra lie_algebra_from_json(const nlohmann::json& j) {
  const std::string name = j.at("family").get<std::string>() + std::to_string(j.at("rank").get<int>());
  const RootSystem rs = build_root_system(RootSystemSpec::parse(name));
  LieAlgebra L;
  L.rs_ = rs;
  L.gamma_ = highest_root(rs);
  L.layout_basis();
  const auto labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != L.dim()) throw SpecError("basis size mismatch in structure-constant table");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != L.basis_[i].label) throw SpecError("basis label mismatch at position " + std::to_string(i));
  const std::size_t n = L.dim();
  L.table_.assign(n * n, Element{});
  for (const auto& t : j.at("brackets")) {
    const auto i = t.at(0).get<std::size_t>(), k = t.at(1).get<std::size_t>(), m = t.at(2).get<std::size_t>();
    if (i >= n || k >= n || m >= n || i >= k) throw SpecError("bad bracket entry in structure-constant table");
    const Rational c = parse_rational(t.at(3).get<std::string>());
    L.table_[i * n + k].add_term(m, c);
    L.table_[k * n + i].add_term(m, -c);
  }
  L.validate();
  return L;
}

std::array<std::size_t, 5> HeisenbergDecomposition::dims() const {
  std::array<std::size_t, 5> d{};
  for (std::size_t k = 0; k < 5; ++k) d[k] = parts[k].size();
  return d;
}

HeisenbergDecomposition heisenberg_grading(const LieAlgebra& L) {
  HeisenbergDecomposition h;
  h.gamma = L.gamma();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const int g = L.basis(i).grade;
    if (g < -2 || g > 2) throw Error("ad(H_gamma) eigenvalue outside -2..2");
    h.parts[static_cast<std::size_t>(g + 2)].push_back(i);
  }
  return h;
}

Rational dchi(const LieAlgebra& L, const Element& z) { return L.dchi(z); }
Element bracket(const LieAlgebra& L, const Element& a, const Element& b) { return L.bracket(a, b); }
Rational killing(const LieAlgebra& L, const Element& a, const Element& b) { return L.killing(a, b); }

std::string DeletedDiagram::str() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) os << " ";
    os << "{";
    for (std::size_t k = 0; k < components[c].size(); ++k) {
      if (k) os << ",";
      os << "a" << components[c][k] + 1;
    }
    os << "}";
  }
  return os.str();
}

DeletedDiagram deleted_dynkin(const LieAlgebra& L) {
  const auto& rs = L.roots();
  const int r = rs.rank();
  std::vector<int> kept;
  for (int i = 0; i < r; ++i)
    if (rs.lattice_inner(rs.simples()[static_cast<std::size_t>(i)].coords, L.gamma().coords) == 0) kept.push_back(i);
  DeletedDiagram d;
  std::vector<bool> used(static_cast<std::size_t>(r), false);
  for (int start : kept) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start}, stack{start};
    used[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : kept) {
        if (used[static_cast<std::size_t>(w)] || rs.cartan()[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == 0) continue;
        used[static_cast<std::size_t>(w)] = true;
        comp.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    d.components.push_back(std::move(comp));
  }
  return d;
}

Element project_to_component(const LieAlgebra& L, const std::vector<int>& component, const Element& z) {
  if (!L.in_block(z, Block::Levi)) throw DomainError("project_to_component: element is not in l");
  const auto& gram = L.roots().gram();
  auto in_component = [&](const Root& a) {
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (a.coords[i] != 0 && std::find(component.begin(), component.end(), static_cast<int>(i)) == component.end())
        return false;
    return true;
  };
  Element out;
  std::vector<Rational> hcoef(static_cast<std::size_t>(L.rank()));
  for (const auto& [i, c] : z.terms()) {
    const auto& b = L.basis(i);
    if (b.kind == BasisIndex::Kind::RootVector) {
      if (in_component(b.root)) out.add_term(i, c);
    } else {
      hcoef[static_cast<std::size_t>(b.cartan)] = c;
    }
  }
  // Orthogonal projection of the Cartan part onto span{H_i : i in C}.
  const std::size_t m = component.size();
  Matrix g(m, m);
  std::vector<Rational> rhs(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto ia = static_cast<std::size_t>(component[a]);
    for (std::size_t b = 0; b < m; ++b) g(a, b) = gram(ia, static_cast<std::size_t>(component[b]));
    for (std::size_t k = 0; k < hcoef.size(); ++k) rhs[a] += gram(ia, k) * hcoef[k];
  }
  auto d = solve(g, rhs);
  if (!d) throw Error("project_to_component: singular component Gram matrix");
  for (std::size_t a = 0; a < m; ++a) out.add_term(L.cartan_position(component[a]), (*d)[a]);
  return out;
}

std::size_t generated_levi_module_dim(const LieAlgebra& L, const Element& seed) {
  // Grow a span by ad(l) until it stabilizes; rows of `rows` stay in RREF.
  const std::size_t n = L.dim();
  std::vector<Element> span;
  auto add_if_new = [&](const Element& x) {
    Matrix m(span.size() + 1, n);
    for (std::size_t r = 0; r < span.size(); ++r)
      for (const auto& [k, c] : span[r].terms()) m(r, k) = c;
    for (const auto& [k, c] : x.terms()) m(span.size(), k) = c;
    if (rank(m) > span.size()) {
      span.push_back(x);
      return true;
    }
    return false;
  };
  if (seed.is_zero()) return 0;
  add_if_new(seed);
  for (std::size_t cur = 0; cur < span.size(); ++cur)
    for (std::size_t z = L.levi_begin(); z < L.levi_end(); ++z) {
      const Element y = L.bracket(Element::basis(z), span[cur]);
      if (!y.is_zero()) add_if_new(y);
    }
  return span.size();
}

}  // namespace cisys
