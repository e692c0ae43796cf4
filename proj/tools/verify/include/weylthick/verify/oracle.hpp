#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "weylthick/rational.hpp"
#include "weylthick/rootdata.hpp"

// Brute-force reference implementations. Nothing here uses the library's
// group, order or thickening code; inputs are plain root data and point
// lists, outputs are plain containers.

namespace weylthick::oracle {

using Relation = std::vector<std::vector<char>>;  // rel[p][q] != 0 iff p <= q
using Members = std::vector<char>;

/// W as the closure of the simple reflection matrices, stored densely.
struct NaiveGroup {
  std::vector<RationalMatrix> elements;
  std::vector<std::size_t> lengths;  // inversion counts
  std::size_t longest = 0;           // index of the unique element of maximal length
};

/// Throws VerificationError if more than `bound` matrices appear or the
/// maximal length is attained twice.
NaiveGroup naive_group(const RootSystem& rs, std::size_t bound = 20000);

/// Number of positive roots sent to negative roots.
std::size_t inversion_count(const RootSystem& rs, const RationalMatrix& m);

/// m alpha_i = -alpha_i for every simple root.
bool negates_simple_roots(const RootSystem& rs, const RationalMatrix& m);

/// -w0 on simple roots as an index permutation.
std::vector<std::size_t> minus_longest_permutation(const RootSystem& rs, const NaiveGroup& g);

/// Closure of `base` under simple reflections, in discovery order.
std::vector<RationalVector> naive_orbit(const RootSystem& rs, const RationalVector& base);

/// p <= q iff q is reached from p by reflections r_alpha with <p, alpha> > 0
/// for a positive root alpha (unfolding), transitively closed by Warshall.
Relation unfolding_relation(const RootSystem& rs, const std::vector<RationalVector>& points);

/// index of g.longest * points[p]
std::vector<std::size_t> naive_antipodes(const NaiveGroup& g, const std::vector<RationalVector>& points);

bool closed_downward(const Relation& leq, const Members& m);
bool fat(const std::vector<std::size_t>& antipode, const Members& m);
bool slim(const std::vector<std::size_t>& antipode, const Members& m);
Members complement(const std::vector<std::size_t>& antipode, const Members& m);

/// Every subset of the points, filtered by closure. Requires n <= 24.
std::vector<Members> all_ideals(const Relation& leq);

/// All balanced subsets by scanning every subset; member lists are sorted
/// and the result is in lexicographic order. Requires n <= 24.
std::vector<std::vector<std::size_t>> balanced_by_scan(const Relation& leq, const std::vector<std::size_t>& antipode);

/// Number of balanced subsets by plain backtracking: points are decided in
/// order of increasing down-set size, each point's status is forced once its
/// antipode is decided, a member must have all of its lower points in, and a
/// non-member must not exclude anything below its antipode. No propagation,
/// no components, no cache.
std::uint64_t count_balanced_backtracking(const Relation& leq, const std::vector<std::size_t>& antipode);

/// Induced two-node subdiagrams with label 3, by subset enumeration.
bool has_induced_a2(const DynkinDiagram& d);

/// u = c v with c > 0, by cross products of coordinates.
bool proportional_positive(const RationalVector& u, const RationalVector& v);

/// angle(u, theta) <= r in long double arithmetic; nullopt when the cosine
/// difference is within `margin` and cannot be decided.
std::optional<bool> ball_member_float(const RootSystem& rs, const RationalVector& u, const RationalVector& theta,
                                      double radians, double margin = 1e-9);

/// Chambers w sigma with w base_a in `source`, read off at w base_b.
Members star_by_elements(const NaiveGroup& g, const RationalVector& base_a, const std::vector<RationalVector>& points_a,
                         const Members& source, const RationalVector& base_b,
                         const std::vector<RationalVector>& points_b);

/// Linear map alpha_i -> alpha_perm[i] applied to a vector of the root span.
RationalVector permute_simple(const RootSystem& rs, const std::vector<std::size_t>& perm, const RationalVector& v);

}  // namespace weylthick::oracle
