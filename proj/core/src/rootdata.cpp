#include "weylthick/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <cstdio>
#include <regex>

#include "json.hpp"
#include "weylthick/error.hpp"

namespace weylthick {

// ---------------------------------------------------------------------------
// DynkinDiagram

DynkinDiagram::DynkinDiagram(std::size_t nodes, std::vector<DynkinEdge> edges) : nodes_(nodes), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.a >= nodes_ || e.b >= nodes_) throw PreconditionError("Dynkin edge references a missing node");
    if (e.a == e.b) throw PreconditionError("Dynkin diagram has a loop");
    if (e.label != 3 && e.label != 4 && e.label != 6) throw PreconditionError("Dynkin edge label must be 3, 4 or 6");
    if (e.a > e.b) std::swap(e.a, e.b);
    for (std::size_t j = 0; j < i; ++j) {
      if (edges_[j].a == e.a && edges_[j].b == e.b) throw PreconditionError("Dynkin diagram has parallel edges");
    }
  }
}

DynkinDiagram DynkinDiagram::from_cartan(const IntMatrix& cartan) {
  std::vector<DynkinEdge> edges;
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    for (std::size_t j = i + 1; j < cartan.size(); ++j) {
      if (cartan[i][j] == 0) continue;
      static constexpr int label_of_bond[] = {2, 3, 4, 6};
      const int bond = cartan[i][j] * cartan[j][i];
      if (bond < 1 || bond > 3) throw PreconditionError("Cartan bond multiplicity must be 1, 2 or 3");
      edges.push_back({i, j, label_of_bond[bond]});
    }
  }
  return DynkinDiagram(cartan.size(), std::move(edges));
}

std::optional<int> DynkinDiagram::label(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_) {
    if (e.a == a && e.b == b) return e.label;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> DynkinDiagram::components() const {
  std::vector<std::size_t> comp(nodes_, nodes_);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < nodes_; ++start) {
    if (comp[start] != nodes_) continue;
    std::vector<std::size_t> members{start};
    comp[start] = out.size();
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& e : edges_) {
        std::size_t other = nodes_;
        if (e.a == members[k]) other = e.b;
        if (e.b == members[k]) other = e.a;
        if (other != nodes_ && comp[other] == nodes_) {
          comp[other] = out.size();
          members.push_back(other);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool DynkinDiagram::has_simple_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const DynkinEdge& e) { return e.label == 3; });
}

DynkinDiagram DynkinDiagram::remove_node(std::size_t node) const {
  if (node >= nodes_) throw PreconditionError("remove_node: no such node");
  auto renumber = [node](std::size_t i) { return i > node ? i - 1 : i; };
  std::vector<DynkinEdge> kept;
  for (const auto& e : edges_) {
    if (e.a != node && e.b != node) kept.push_back({renumber(e.a), renumber(e.b), e.label});
  }
  return DynkinDiagram(nodes_ - 1, std::move(kept));
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

RationalVector half_integer_vector(std::initializer_list<int> doubled) {
  RationalVector v(doubled.size());
  std::size_t i = 0;
  for (int d : doubled) v[i++] = Rational(d, 2);
  return v;
}

RationalVector e_minus_e(std::size_t dim, std::size_t i, std::size_t j) {
  RationalVector v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

}  // namespace

RootSystem RootSystem::from_simple_roots(std::string name, std::vector<RationalVector> simple_roots,
                                         std::optional<RationalMatrix> form, std::size_t root_bound) {
  if (simple_roots.empty()) throw PreconditionError("root system needs at least one simple root");
  const std::size_t dim = simple_roots.front().size();
  for (const auto& a : simple_roots) {
    if (a.size() != dim) throw PreconditionError("simple roots of differing dimension");
    if (a.is_zero()) throw PreconditionError("zero simple root");
  }
  if (form && (form->rows() != dim || form->cols() != dim)) throw PreconditionError("form has wrong shape");

  RootSystem rs;
  rs.name_ = std::move(name);
  rs.simple_ = std::move(simple_roots);
  rs.form_ = std::move(form);
  const std::size_t n = rs.simple_.size();

  rs.gram_ = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram_(i, j) = rs.inner(rs.simple_[i], rs.simple_[j]);

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = 2 * rs.gram_(i, j) / rs.gram_(i, i);
      if (a.get_den() != 1) throw PreconditionError("simple roots do not form a crystallographic system");
      rs.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
      if (i != j && (rs.cartan_[i][j] > 0 || rs.cartan_[i][j] < -3))
        throw PreconditionError("Cartan entry out of range for a finite root system");
    }
  }
  rs.diagram_ = DynkinDiagram::from_cartan(rs.cartan_);

  // Closure of the simple roots under simple reflections.
  std::map<RationalVector, int> seen;
  std::vector<RationalVector> found;
  std::deque<std::size_t> queue;
  for (const auto& a : rs.simple_) {
    if (seen.emplace(a, 0).second) {
      found.push_back(a);
      queue.push_back(found.size() - 1);
    }
  }
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector img = rs.reflect_simple(found[cur], i);
      if (seen.emplace(img, 0).second) {
        found.push_back(std::move(img));
        queue.push_back(found.size() - 1);
        if (found.size() > root_bound)
          throw PreconditionError("root closure exceeds " + std::to_string(root_bound) +
                                  " roots; input is not of finite type");
      }
    }
  }


  struct Entry {
    RationalVector root;
    std::vector<Rational> coeffs;
    Rational height;
  };
  std::vector<Entry> positive;
  for (auto& r : found) {
    RationalVector c = solve(rs.gram_, RationalVector(rs.simple_pairings(r)));
    const bool nonneg = std::all_of(c.coords().begin(), c.coords().end(), [](const Rational& x) { return sgn(x) >= 0; });
    const bool nonpos = std::all_of(c.coords().begin(), c.coords().end(), [](const Rational& x) { return sgn(x) <= 0; });
    if (!nonneg && !nonpos) throw VerificationError("root " + r.to_string() + " is neither positive nor negative");
    if (!nonneg) continue;
    Rational h = 0;
    for (const auto& x : c.coords()) h += x;
    positive.push_back({r, std::vector<Rational>(c.coords().begin(), c.coords().end()), h});
  }
  if (positive.size() * 2 != found.size()) throw VerificationError("root set is not symmetric under negation");
  std::sort(positive.begin(), positive.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
  });
  for (const auto& e : positive) {
    rs.roots_.push_back(e.root);
    rs.coefficients_.push_back(e.coeffs);
  }
  for (const auto& e : positive) {
    rs.roots_.push_back(-e.root);
    std::vector<Rational> neg = e.coeffs;
    for (auto& x : neg) x = -x;
    rs.coefficients_.push_back(std::move(neg));
  }

  for (std::size_t i = 0; i < n; ++i) {
    RationalVector target(n);
    target[i] = rs.gram_(i, i) / 2;
    RationalVector c = solve(rs.gram_, target);
    RationalVector w(dim);
    for (std::size_t k = 0; k < n; ++k) w += c[k] * rs.simple_[k];
    rs.weights_.push_back(std::move(w));
  }

  for (const auto& comp : rs.diagram_.components()) rs.components_.push_back({"", comp});
  return rs;
}

std::optional<std::size_t> RootSystem::find_root(const RationalVector& v) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i] == v) return i;
  }
  return std::nullopt;
}

Rational RootSystem::inner(const RationalVector& u, const RationalVector& v) const {
  if (!form_) return dot(u, v);
  if (u.size() != v.size() || u.size() != form_->rows()) throw PreconditionError("dimension mismatch in inner product");
  return dot(u, form_->apply(v));
}

RationalVector RootSystem::reflect(const RationalVector& v, const RationalVector& root) const {
  const Rational pairing = inner(v, root);
  if (sgn(pairing) == 0) return v;
  return v - (2 * pairing / norm2(root)) * root;
}

RationalMatrix RootSystem::reflection_matrix(const RationalVector& root) const {
  const std::size_t dim = ambient_dim();
  RationalMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    RationalVector col = reflect(RationalVector::unit(dim, c), root);
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = col[r];
  }
  return m;
}

std::vector<Rational> RootSystem::simple_pairings(const RationalVector& v) const {
  std::vector<Rational> out;
  out.reserve(simple_.size());
  for (const auto& a : simple_) out.push_back(inner(v, a));
  return out;
}

RationalVector RootSystem::project_to_root_span(const RationalVector& v) const {
  if (v.size() != ambient_dim()) throw PreconditionError("vector has dimension " + std::to_string(v.size()) +
                                                          ", ambient dimension is " + std::to_string(ambient_dim()));
  RationalVector c = solve(gram_, RationalVector(simple_pairings(v)));
  RationalVector out(ambient_dim());
  for (std::size_t k = 0; k < rank(); ++k) out += c[k] * simple_[k];
  return out;
}

RationalVector RootSystem::weight_combination(std::span<const Rational> coefficients) const {
  if (coefficients.size() != rank()) throw PreconditionError("weight combination needs one coefficient per simple root");
  RationalVector out(ambient_dim());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(coefficients[i]) != 0) out += coefficients[i] * weights_[i];
  }
  return out;
}

std::vector<std::vector<std::size_t>> RootSystem::diagram_automorphisms() const {
  const std::size_t n = rank();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t img = 0; img < n; ++img) {
      if (used[img]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = cartan_[i][j] == cartan_[img][perm[j]] && cartan_[j][i] == cartan_[perm[j]][img];
      }
      if (!ok) continue;
      used[img] = true;
      perm[i] = img;
      self(self, i + 1);
      used[img] = false;
    }
  };
  extend(extend, 0);
  return out;
}

// ---------------------------------------------------------------------------
// construction

RootSystem named_system(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  const std::string name = std::string(1, family) + std::to_string(rank);
  auto bad = [&] { return ParseError("unknown root system type '" + name + "'"); };
  if (rank < 1) throw bad();
  const auto n = static_cast<std::size_t>(rank);
  std::vector<RationalVector> simple;
  switch (family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) simple.push_back(e_minus_e(n + 1, i, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      if ((family == 'D' && n < 4) || n < 2) throw bad();
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e_minus_e(n, i, i + 1));
      if (family == 'B') {
        simple.push_back(RationalVector::unit(n, n - 1));
      } else if (family == 'C') {
        simple.push_back(Rational(2) * RationalVector::unit(n, n - 1));
      } else {
        RationalVector last(n);
        last[n - 2] = 1;
        last[n - 1] = 1;
        simple.push_back(last);
      }
      break;
    case 'G':
      if (n != 2) throw bad();
      simple.push_back(RationalVector{1, -1, 0});
      simple.push_back(RationalVector{-2, 1, 1});
      break;
    case 'F':
      if (n != 4) throw bad();
      simple.push_back(RationalVector{0, 1, -1, 0});
      simple.push_back(RationalVector{0, 0, 1, -1});
      simple.push_back(RationalVector{0, 0, 0, 1});
      simple.push_back(half_integer_vector({1, -1, -1, -1}));
      break;
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      simple.push_back(half_integer_vector({1, -1, -1, -1, -1, -1, -1, 1}));
      RationalVector a2(8);
      a2[0] = 1;
      a2[1] = 1;
      simple.push_back(a2);
      for (std::size_t i = 2; i < n; ++i) simple.push_back(e_minus_e(8, i - 1, i - 2));
      break;
    }
    default:
      throw bad();
  }
  RootSystem rs = RootSystem::from_simple_roots(name, std::move(simple));
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  rs.set_components({{name, all}});
  return rs;
}

RootSystem direct_sum(std::span<const RootSystem> factors) {
  if (factors.empty()) throw PreconditionError("direct sum of no factors");
  if (factors.size() == 1) return factors.front();
  std::size_t dim = 0;
  bool euclidean = true;
  std::string name;
  for (const auto& f : factors) {
    dim += f.ambient_dim();
    euclidean = euclidean && f.euclidean();
    name += (name.empty() ? "" : "x") + f.name();
  }
  std::vector<RationalVector> simple;
  std::optional<RationalMatrix> form;
  if (!euclidean) form = RationalMatrix(dim, dim);
  std::vector<RootComponent> components;
  std::size_t offset = 0;
  std::size_t simple_offset = 0;
  for (const auto& f : factors) {
    for (const auto& a : f.simple_roots()) {
      RationalVector padded(dim);
      for (std::size_t i = 0; i < a.size(); ++i) padded[offset + i] = a[i];
      simple.push_back(std::move(padded));
    }
    if (form) {
      for (std::size_t r = 0; r < f.ambient_dim(); ++r) {
        for (std::size_t c = 0; c < f.ambient_dim(); ++c) {
          (*form)(offset + r, offset + c) =
              f.inner(RationalVector::unit(f.ambient_dim(), r), RationalVector::unit(f.ambient_dim(), c));
        }
      }
    }
    for (const auto& comp : f.components()) {
      RootComponent shifted{comp.name, {}};
      for (auto i : comp.simple_indices) shifted.simple_indices.push_back(i + simple_offset);
      components.push_back(std::move(shifted));
    }
    offset += f.ambient_dim();
    simple_offset += f.rank();
  }
  RootSystem rs = RootSystem::from_simple_roots(name, std::move(simple), std::move(form));
  rs.set_components(std::move(components));
  return rs;
}

RootSystem from_cartan_matrix(const IntMatrix& cartan, std::string name) {
  const std::size_t n = cartan.size();
  if (n == 0) throw PreconditionError("empty Cartan matrix");
  for (const auto& row : cartan) {
    if (row.size() != n) throw PreconditionError("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw PreconditionError("Cartan diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int a = cartan[i][j];
      if (a > 0 || a < -3) throw PreconditionError("Cartan off-diagonal entries must lie in {0,-1,-2,-3}");
      if ((a == 0) != (cartan[j][i] == 0)) throw PreconditionError("Cartan matrix zero pattern is not symmetric");
      if (a * cartan[j][i] > 3) throw PreconditionError("Cartan bond multiplicity exceeds 3");
    }
  }
  // Symmetrizer d_i = (alpha_i, alpha_i) / 2 with d_i A_ij = d_j A_ji.
  std::vector<Rational> d(n);
  std::vector<bool> assigned(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (assigned[start]) continue;
    d[start] = 1;
    assigned[start] = true;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        Rational dj = d[i] * cartan[i][j] / cartan[j][i];
        if (!assigned[j]) {
          d[j] = dj;
          assigned[j] = true;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw PreconditionError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  RationalMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = d[i] * cartan[i][j];
  std::vector<RationalVector> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(RationalVector::unit(n, i));
  RootSystem rs = RootSystem::from_simple_roots(std::move(name), std::move(simple), std::move(form));
  if (rs.cartan() != cartan) throw VerificationError("realized Cartan matrix differs from the input");
  return rs;
}

RootSystem parse_system(std::string_view spec) {
  std::string text(spec);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  const bool looks_like_path = text.find('/') != std::string::npos || text.find('.') != std::string::npos ||
                               std::filesystem::exists(text);
  if (looks_like_path) {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open Cartan matrix document '" + text + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("Cartan matrix document is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_array()) throw ParseError("Cartan matrix document must be a JSON array of integer rows");
    IntMatrix cartan;
    for (const auto& row : doc) {
      if (!row.is_array()) throw ParseError("Cartan matrix rows must be arrays");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ParseError("Cartan matrix entries must be integers");
        r.push_back(x.get<int>());
      }
      cartan.push_back(std::move(r));
    }
    return from_cartan_matrix(cartan, std::filesystem::path(text).stem().string());
  }

  static const std::regex factor_re("([A-Ga-g])([0-9]+)");
  std::vector<RootSystem> factors;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find_first_of("xX", pos);
    const std::string token = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch m;
    if (!std::regex_match(token, m, factor_re))
      throw ParseError("unknown root system type '" + (token.empty() ? text : token) + "'");
    factors.push_back(named_system(m[1].str()[0], std::stoi(m[2].str())));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return direct_sum(factors);
}

// ---------------------------------------------------------------------------
// angles

namespace {

void require_direction(const RationalVector& v) {
  if (v.is_zero()) throw PreconditionError("zero vector is not a direction");
}

}  // namespace

AngleClass angle_class(const RootSystem& rs, const RationalVector& u, const RationalVector& v) {
  require_direction(u);
  require_direction(v);
  const int s = sgn(rs.inner(u, v));
  return s > 0 ? AngleClass::acute : (s == 0 ? AngleClass::right : AngleClass::obtuse);
}

Radius Radius::exact(int k, int d) {
  const int g = std::gcd(k, d);
  k /= g;
  d /= g;
  struct Row {
    int k, d, sign, num, den;
  };
  static constexpr Row table[] = {
      {1, 6, 1, 3, 4}, {1, 4, 1, 1, 2},  {1, 3, 1, 1, 4},  {1, 2, 0, 0, 1},
      {2, 3, -1, 1, 4}, {3, 4, -1, 1, 2}, {5, 6, -1, 3, 4},
  };
  for (const auto& row : table) {
    if (row.k == k && row.d == d) {
      Radius r;
      r.exact_ = true;
      r.k_ = k;
      r.d_ = d;
      r.radians_ = std::numbers::pi * k / d;
      r.cos_sign_ = row.sign;
      r.cos2_ = Rational(row.num, row.den);
      return r;
    }
  }
  throw PreconditionError("radius " + std::to_string(k) + "pi/" + std::to_string(d) + " has no exact cosine");
}

Radius Radius::approximate(double radians) {
  if (!(radians > 0.0 && radians < std::numbers::pi)) throw PreconditionError("radius must lie in (0, pi)");
  Radius r;
  r.radians_ = radians;
  return r;
}

Radius Radius::parse(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+03C0 in UTF-8
    if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xCF &&
        static_cast<unsigned char>(text[i + 1]) == 0x80) {
      s += "pi";
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    }
  }
  static const std::regex pi_re("([0-9]+)?\\*?pi(/([0-9]+))?");
  std::smatch m;
  if (std::regex_match(s, m, pi_re)) {
    const int k = m[1].matched ? std::stoi(m[1].str()) : 1;
    const int d = m[3].matched ? std::stoi(m[3].str()) : 1;
    if (k <= 0 || d <= 0) throw ParseError("bad radius '" + std::string(text) + "'");
    try {
      return exact(k, d);
    } catch (const PreconditionError&) {
      return approximate(std::numbers::pi * k / d);
    }
  }
  try {
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad radius '" + std::string(text) + "'");
    return approximate(value);
  } catch (const std::logic_error&) {
    throw ParseError("bad radius '" + std::string(text) + "'");
  }
}

double Radius::radians() const { return radians_; }

std::string Radius::to_string() const {
  if (!exact_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", radians_);
    return buf;
  }
  return (k_ == 1 ? std::string() : std::to_string(k_)) + "pi/" + std::to_string(d_);
}

AngleComparison compare_angle_to(const RootSystem& rs, const RationalVector& u, const RationalVector& v,
                                 const Radius& r, double tolerance) {
  require_direction(u);
  require_direction(v);
  const Rational d = rs.inner(u, v);
  AngleComparison out;
  int cos_cmp = 0;  // sign of cos(angle) - cos(r)
  if (r.is_exact()) {
    const int sd = sgn(d);
    const int sc = r.cos_sign();
    if (sd != sc) {
      cos_cmp = sd > sc ? 1 : -1;
    } else if (sd != 0) {
      const Rational lhs = d * d;
      const Rational rhs = r.cos_squared() * rs.norm2(u) * rs.norm2(v);
      const int t = cmp(lhs, rhs);
      cos_cmp = sd > 0 ? t : -t;
    }
  } else {
    out.approximate = true;
    const double c = d.get_d() / std::sqrt(rs.norm2(u).get_d() * rs.norm2(v).get_d());
    const double diff = c - std::cos(r.radians());
    if (std::abs(diff) < tolerance) {
      out.ambiguous = true;
    } else {
      cos_cmp = diff > 0 ? 1 : -1;
    }
  }
  out.result = cos_cmp > 0 ? Comparison::less : (cos_cmp == 0 ? Comparison::equal : Comparison::greater);
  return out;
}

// ---------------------------------------------------------------------------
// type points

TypePoint TypePoint::make(const RootSystem& rs, const RationalVector& v) {
  TypePoint t;
  t.vector_ = rs.project_to_root_span(v);
  if (t.vector_.is_zero()) throw PreconditionError("type point " + v.to_string() + " is zero on the span of the roots");
  const auto pairings = rs.simple_pairings(t.vector_);
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    const int s = sgn(pairings[i]);
    if (s < 0) throw PreconditionError("type point " + v.to_string() + " is outside the closed fundamental chamber");
    if (s == 0) t.stabilizer_.push_back(i);
  }
  return t;
}

TypePoint fundamental_vertex(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw PreconditionError("no vertex of type " + std::to_string(i + 1));
  return TypePoint::make(rs, rs.fundamental_weight(i));
}

TypePoint iota_invariant_center(const RootSystem& rs) {
  std::vector<Rational> ones(rs.rank(), Rational(1));
  return TypePoint::make(rs, rs.weight_combination(ones));
}

bool is_root_type(const RootSystem& rs, const TypePoint& t) {
  for (const auto& r : rs.roots()) {
    if (positively_proportional(t.vector(), r)) return true;
  }
  return false;
}

TypePoint random_regular_type(const RootSystem& rs, std::mt19937_64& rng, int max_coefficient) {
  std::uniform_int_distribution<int> dist(1, max_coefficient);
  std::vector<Rational> c(rs.rank());
  for (auto& x : c) x = dist(rng);
  return TypePoint::make(rs, rs.weight_combination(c));
}

TypePoint random_iota_invariant_type(const RootSystem& rs, std::span<const std::size_t> iota, std::mt19937_64& rng,
                                     int max_coefficient) {
  if (iota.size() != rs.rank()) throw PreconditionError("iota permutation has wrong size");
  std::uniform_int_distribution<int> dist(1, max_coefficient);
  std::vector<Rational> c(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) c[i] = iota[i] < i ? c[iota[i]] : Rational(dist(rng));
  return TypePoint::make(rs, rs.weight_combination(c));
}

}  // namespace weylthick
