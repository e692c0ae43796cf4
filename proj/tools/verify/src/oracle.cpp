#include "weylthick/verify/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

#include "weylthick/error.hpp"

namespace weylthick::oracle {

namespace {

RationalVector reflect(const RootSystem& rs, const RationalVector& v, const RationalVector& a) {
  const Rational c = 2 * rs.inner(v, a) / rs.inner(a, a);
  RationalVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * a[i];
  return out;
}

RationalMatrix reflection(const RootSystem& rs, const RationalVector& a) {
  const std::size_t d = rs.ambient_dim();
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const RationalVector col = reflect(rs, RationalVector::unit(d, j), a);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

std::size_t find_point(const std::vector<RationalVector>& points, const RationalVector& v) {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == v) return i;
  throw VerificationError("oracle: image is not an orbit point: " + v.to_string());
}

}  // namespace

std::size_t inversion_count(const RootSystem& rs, const RationalMatrix& m) {
  std::set<RationalVector> positive(rs.roots().begin(), rs.roots().begin() + static_cast<long>(rs.positive_count()));
  std::size_t n = 0;
  for (std::size_t i = 0; i < rs.positive_count(); ++i)
    if (!positive.count(m.apply(rs.root(i)))) ++n;
  return n;
}

bool negates_simple_roots(const RootSystem& rs, const RationalMatrix& m) {
  for (const auto& a : rs.simple_roots())
    if (!(m.apply(a) == -a)) return false;
  return true;
}

NaiveGroup naive_group(const RootSystem& rs, std::size_t bound) {
  std::vector<RationalMatrix> gens;
  for (const auto& a : rs.simple_roots()) gens.push_back(reflection(rs, a));
  NaiveGroup g;
  std::set<std::vector<Rational>> seen;
  const auto id = RationalMatrix::identity(rs.ambient_dim());
  seen.insert(flatten(id));
  g.elements.push_back(id);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto& s : gens) {
      RationalMatrix next = g.elements[head] * s;
      if (seen.insert(flatten(next)).second) {
        if (g.elements.size() >= bound) throw VerificationError("oracle: group closure exceeds bound");
        g.elements.push_back(std::move(next));
      }
    }
  }
  std::size_t best = 0;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const std::size_t len = inversion_count(rs, g.elements[i]);
    g.lengths.push_back(len);
    if (len > best) {
      best = len;
      g.longest = i;
      ties = 1;
    } else if (len == best) {
      ++ties;
    }
  }
  if (ties != 1) throw VerificationError("oracle: maximal length is not unique");
  return g;
}

std::vector<std::size_t> minus_longest_permutation(const RootSystem& rs, const NaiveGroup& g) {
  const auto& w0 = g.elements[g.longest];
  std::vector<std::size_t> perm;
  for (const auto& a : rs.simple_roots()) {
    const RationalVector image = -w0.apply(a);
    std::size_t found = rs.rank();
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (rs.simple_root(j) == image) found = j;
    if (found == rs.rank()) throw VerificationError("oracle: -w0 does not permute the simple roots");
    perm.push_back(found);
  }
  return perm;
}

std::vector<RationalVector> naive_orbit(const RootSystem& rs, const RationalVector& base) {
  std::vector<RationalVector> points{base};
  std::set<RationalVector> seen{base};
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (const auto& a : rs.simple_roots()) {
      RationalVector next = reflect(rs, points[head], a);
      if (seen.insert(next).second) points.push_back(std::move(next));
    }
  }
  return points;
}

Relation unfolding_relation(const RootSystem& rs, const std::vector<RationalVector>& points) {
  const std::size_t n = points.size();
  std::map<RationalVector, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(points[i], i);
  Relation leq(n, std::vector<char>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    leq[p][p] = 1;
    for (std::size_t r = 0; r < rs.positive_count(); ++r) {
      if (rs.inner(points[p], rs.root(r)) > 0) {
        auto it = index.find(reflect(rs, points[p], rs.root(r)));
        if (it == index.end()) throw VerificationError("oracle: orbit not closed under reflections");
        leq[p][it->second] = 1;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  return leq;
}

std::vector<std::size_t> naive_antipodes(const NaiveGroup& g, const std::vector<RationalVector>& points) {
  std::vector<std::size_t> out;
  for (const auto& p : points) out.push_back(find_point(points, g.elements[g.longest].apply(p)));
  return out;
}

bool closed_downward(const Relation& leq, const Members& m) {
  for (std::size_t q = 0; q < m.size(); ++q) {
    if (!m[q]) continue;
    for (std::size_t p = 0; p < m.size(); ++p)
      if (leq[p][q] && !m[p]) return false;
  }
  return true;
}

bool fat(const std::vector<std::size_t>& antipode, const Members& m) {
  for (std::size_t p = 0; p < m.size(); ++p)
    if (!m[p] && !m[antipode[p]]) return false;
  return true;
}

bool slim(const std::vector<std::size_t>& antipode, const Members& m) {
  for (std::size_t p = 0; p < m.size(); ++p)
    if (m[p] && m[antipode[p]]) return false;
  return true;
}

Members complement(const std::vector<std::size_t>& antipode, const Members& m) {
  Members out(m.size(), 0);
  for (std::size_t p = 0; p < m.size(); ++p)
    if (!m[p]) out[antipode[p]] = 1;
  return out;
}

std::vector<Members> all_ideals(const Relation& leq) {
  const std::size_t n = leq.size();
  if (n > 24) throw PreconditionError("oracle: subset scan limited to 24 points");
  std::vector<Members> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Members m(n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1;
    if (closed_downward(leq, m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<std::size_t>> balanced_by_scan(const Relation& leq, const std::vector<std::size_t>& antipode) {
  const std::size_t n = leq.size();
  if (n > 24) throw PreconditionError("oracle: subset scan limited to 24 points");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Members m(n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1;
    if (!fat(antipode, m) || !slim(antipode, m) || !closed_downward(leq, m)) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) members.push_back(i);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_balanced_backtracking(const Relation& leq, const std::vector<std::size_t>& antipode) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> below_count(n, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p) below_count[q] += leq[p][q] ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below_count[a] < below_count[b]; });
  std::vector<std::vector<std::size_t>> strictly_below(n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p)
      if (p != q && leq[p][q]) strictly_below[q].push_back(p);

  std::vector<int> state(n, -1);  // -1 undecided, 0 out, 1 in
  const auto can_include = [&](std::size_t p) {
    for (auto b : strictly_below[p])
      if (state[b] != 1) return false;
    return true;
  };
  // p out forces its antipode in, which needs every point below it
  const auto can_exclude = [&](std::size_t p) {
    for (auto b : strictly_below[antipode[p]])
      if (state[b] == 0) return false;
    return true;
  };
  std::uint64_t count = 0;
  const auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    const std::size_t p = order[i];
    const int forced = state[antipode[p]] == -1 ? -1 : 1 - state[antipode[p]];
    if (antipode[p] == p) return;
    if (forced != 0 && can_include(p)) {
      state[p] = 1;
      self(self, i + 1);
    }
    if (forced != 1 && can_exclude(p)) {
      state[p] = 0;
      self(self, i + 1);
    }
    state[p] = -1;
  };
  go(go, 0);
  return count;
}

bool has_induced_a2(const DynkinDiagram& d) {
  const std::size_t n = d.node_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != 2) continue;
    std::size_t a = n;
    std::size_t b = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      (a == n ? a : b) = i;
    }
    if (d.label(a, b) == 3) return true;
  }
  return false;
}

bool proportional_positive(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size() || u.is_zero() || v.is_zero()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return dot(u, v) > 0;
}

std::optional<bool> ball_member_float(const RootSystem& rs, const RationalVector& u, const RationalVector& theta,
                                      double radians, double margin) {
  const long double uv = rs.inner(u, theta).get_d();
  const long double uu = rs.inner(u, u).get_d();
  const long double tt = rs.inner(theta, theta).get_d();
  const long double c = uv / std::sqrt(uu * tt);
  const long double cr = std::cos(static_cast<long double>(radians));
  if (std::fabs(c - cr) < margin) return std::nullopt;
  return c > cr;
}

Members star_by_elements(const NaiveGroup& g, const RationalVector& base_a, const std::vector<RationalVector>& points_a,
                         const Members& source, const RationalVector& base_b,
                         const std::vector<RationalVector>& points_b) {
  Members out(points_b.size(), 0);
  for (const auto& w : g.elements) {
    if (source[find_point(points_a, w.apply(base_a))]) out[find_point(points_b, w.apply(base_b))] = 1;
  }
  return out;
}

RationalVector permute_simple(const RootSystem& rs, const std::vector<std::size_t>& perm, const RationalVector& v) {
  const std::size_t r = rs.rank();
  RationalMatrix gram(r, r);
  RationalVector rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = rs.inner(rs.simple_root(i), rs.simple_root(j));
    rhs[i] = rs.inner(v, rs.simple_root(i));
  }
  const RationalVector c = solve(gram, rhs);
  RationalVector out(rs.ambient_dim());
  for (std::size_t i = 0; i < r; ++i) out += c[i] * rs.simple_root(perm[i]);
  return out;
}

}  // namespace weylthick::oracle
