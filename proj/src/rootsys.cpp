#include "cisys/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cisys/error.hpp"

namespace cisys {

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  if (text.size() < 2) throw SpecError("invalid Cartan type '" + text + "'");
  RootSystemSpec spec;
  switch (text[0]) {
    case 'A': case 'a': spec.family = Family::A; break;
    case 'D': case 'd': spec.family = Family::D; break;
    case 'E': case 'e': spec.family = Family::E; break;
    default:
      throw SpecError("unsupported family in '" + text + "' (simply-laced A, D, E only)");
  }
  const std::string digits = text.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw SpecError("invalid rank in Cartan type '" + text + "'");
  spec.rank = std::stoi(digits);
  spec.validate();
  return spec;
}

void RootSystemSpec::validate() const {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 3) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw SpecError("invalid family/rank pair " + name());
}

std::string RootSystemSpec::name() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

int Root::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool Root::is_positive() const { return height() > 0; }

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords.at(i);
  return r;
}

std::string Root::label() const {
  std::ostringstream os;
  const bool neg = height() < 0;
  if (neg) os << "-";
  const bool wide = std::any_of(coords.begin(), coords.end(), [](int c) { return c > 9 || c < -9; });
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (wide && i > 0) os << ",";
    os << (neg ? -coords[i] : coords[i]);
  }
  return os.str();
}

bool height_lex_less(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords < b.coords;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(const RootSystemSpec& spec) {
  const int r = spec.rank;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  auto link = [&](int i, int j) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  };
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
  }
  return a;
}

}  // namespace

std::size_t classical_root_count(const RootSystemSpec& spec) {
  const auto r = static_cast<std::size_t>(spec.rank);
  switch (spec.family) {
    case Family::A: return r * (r + 1);
    case Family::D: return 2 * r * (r - 1);
    case Family::E: return r == 6 ? 72 : r == 7 ? 126 : 240;
  }
  return 0;
}

int RootSystem::lattice_inner(const std::vector<int>& a, const std::vector<int>& b) const {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * cartan_[i][j] * b[j];
  }
  return s;
}

std::size_t RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) throw DomainError("not a root of " + spec_.name() + ": " + r.label());
  return it->second;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  index_of(a);
  index_of(b);
  return lattice_inner(a.coords, b.coords);
}

Root RootSystem::reflect(const Root& a, const Root& b) const {
  const int c = lattice_inner(b.coords, a.coords);
  Root r = b;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= c * a.coords[i];
  return r;
}

RootSystem build_root_system(const RootSystemSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec_ = spec;
  rs.cartan_ = cartan_matrix(spec);
  const auto r = static_cast<std::size_t>(spec.rank);
  rs.gram_ = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.gram_(i, j) = rs.cartan_[i][j];
  for (std::size_t i = 0; i < r; ++i) {
    Root a{std::vector<int>(r, 0)};
    a.coords[i] = 1;
    rs.simples_.push_back(a);
  }
  // Closure of the simple roots under simple reflections gives every root.
  std::set<Root> seen(rs.simples_.begin(), rs.simples_.end());
  std::vector<Root> frontier = rs.simples_;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& b : frontier) {
      for (const auto& a : rs.simples_) {
        Root c = rs.reflect(a, b);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& x : seen) {
    const bool pos = std::all_of(x.coords.begin(), x.coords.end(), [](int c) { return c >= 0; });
    const bool neg = std::all_of(x.coords.begin(), x.coords.end(), [](int c) { return c <= 0; });
    if (!pos && !neg) throw Error("root closure produced a mixed-sign vector " + x.label());
    if (pos) rs.positives_.push_back(x);
  }
  std::sort(rs.positives_.begin(), rs.positives_.end(), height_lex_less);
  rs.all_ = rs.positives_;
  for (const auto& x : rs.positives_) rs.all_.push_back(-x);
  if (rs.all_.size() != seen.size() || rs.all_.size() != classical_root_count(spec))
    throw Error("root count mismatch for " + spec.name());
  for (std::size_t i = 0; i < rs.all_.size(); ++i) rs.index_[rs.all_[i]] = i;
  return rs;
}

Root highest_root(const RootSystem& rs) {
  const auto& pos = rs.positives();
  const Root& top = pos.back();
  if (pos.size() >= 2 && pos[pos.size() - 2].height() == top.height())
    throw Error("highest root is not unique; root system is reducible");
  return top;
}

Rational root_inner(const RootSystem& rs, const Root& a, const Root& b) { return rs.inner(a, b); }

nlohmann::json RootSystem::to_json() const {
  nlohmann::json j;
  j["family"] = std::string(1, spec_.name()[0]);
  j["rank"] = spec_.rank;
  j["simple_roots"] = nlohmann::json::array();
  for (const auto& a : simples_) j["simple_roots"].push_back(a.coords);
  j["roots"] = nlohmann::json::array();
  for (const auto& a : all_) j["roots"].push_back(a.coords);
  return j;
}

RootSystem root_system_from_json(const nlohmann::json& j) {
  const std::string name = j.at("family").get<std::string>() + std::to_string(j.at("rank").get<int>());
  RootSystem rs = build_root_system(RootSystemSpec::parse(name));
  std::vector<std::vector<int>> roots = j.at("roots").get<std::vector<std::vector<int>>>();
  std::vector<std::vector<int>> expect;
  for (const auto& a : rs.all_roots()) expect.push_back(a.coords);
  if (roots != expect) throw SpecError("root list in JSON does not match " + name);
  return rs;
}

}  // namespace cisys
