#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylthick/rational.hpp"

namespace weylthick {

using IntMatrix = std::vector<std::vector<int>>;

struct DynkinEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  int label = 3;  // 3, 4 or 6: bond multiplicity 1, 2, 3
};

/// Undirected labeled Coxeter/Dynkin graph. Arrow direction (long/short) is
/// not recorded; the packing reduction only needs the labels.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  /// Throws PreconditionError on loops, parallel edges, or bad labels.
  DynkinDiagram(std::size_t nodes, std::vector<DynkinEdge> edges);

  /// Edge {i,j} iff A_ij != 0; bond A_ij * A_ji = 1, 2, 3 gives label 3, 4, 6.
  static DynkinDiagram from_cartan(const IntMatrix& cartan);

  std::size_t node_count() const { return nodes_; }
  std::span<const DynkinEdge> edges() const { return edges_; }
  std::optional<int> label(std::size_t a, std::size_t b) const;

  std::vector<std::vector<std::size_t>> components() const;
  bool irreducible() const { return nodes_ > 0 && components().size() == 1; }
  bool has_simple_edge() const;

  /// Diagram of the link of a vertex of type `node`: that node and its edges
  /// removed, remaining nodes renumbered in order.
  DynkinDiagram remove_node(std::size_t node) const;

 private:
  std::size_t nodes_ = 0;
  std::vector<DynkinEdge> edges_;
};

/// One irreducible factor: its name when known (e.g. "B3") and the simple
/// root indices it occupies.
struct RootComponent {
  std::string name;
  std::vector<std::size_t> simple_indices;
};

/// Finite crystallographic root system with an exact rational realization.
///
/// Named types use the Bourbaki realizations in a Euclidean ambient space
/// (A_n in the sum-zero hyperplane of R^{n+1}, G2 likewise in R^3, F4 with
/// half-integers, E_n in R^8). Systems read from a Cartan matrix are realized
/// in the basis of simple roots with the symmetrized Gram matrix as the form.
///
/// Roots are ordered positive first (by height, then coefficient vector),
/// followed by the negatives in the same order, so that
/// roots()[i + N] == -roots()[i] for N = positive_count().
///
/// Cartan convention: A_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), so
/// row i belongs to the reflecting root and s_i(alpha_j) = alpha_j - A_ij alpha_i.
class RootSystem {
 public:
  /// `form` is the Gram matrix of the ambient inner product; nullopt means the
  /// standard dot product. Throws PreconditionError if closure of the simple
  /// roots under simple reflections exceeds `root_bound` (non-finite input).
  static RootSystem from_simple_roots(std::string name, std::vector<RationalVector> simple_roots,
                                      std::optional<RationalMatrix> form = std::nullopt,
                                      std::size_t root_bound = 4096);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return simple_.size(); }
  std::size_t ambient_dim() const { return simple_.empty() ? 0 : simple_.front().size(); }
  bool euclidean() const { return !form_.has_value(); }

  const std::vector<RationalVector>& simple_roots() const { return simple_; }
  const RationalVector& simple_root(std::size_t i) const { return simple_[i]; }
  const std::vector<RationalVector>& roots() const { return roots_; }
  const RationalVector& root(std::size_t i) const { return roots_[i]; }
  std::size_t positive_count() const { return roots_.size() / 2; }
  bool is_positive(std::size_t root) const { return root < positive_count(); }
  std::size_t negative_of(std::size_t root) const {
    return root < positive_count() ? root + positive_count() : root - positive_count();
  }
  /// Coefficients of root i in the basis of simple roots (integers).
  const std::vector<Rational>& root_coefficients(std::size_t i) const { return coefficients_[i]; }
  std::optional<std::size_t> find_root(const RationalVector& v) const;

  const IntMatrix& cartan() const { return cartan_; }
  const DynkinDiagram& diagram() const { return diagram_; }
  const std::vector<RootComponent>& components() const { return components_; }

  Rational inner(const RationalVector& u, const RationalVector& v) const;
  Rational norm2(const RationalVector& v) const { return inner(v, v); }

  RationalVector reflect(const RationalVector& v, const RationalVector& root) const;
  RationalVector reflect_simple(const RationalVector& v, std::size_t i) const { return reflect(v, simple_[i]); }
  RationalMatrix reflection_matrix(const RationalVector& root) const;

  /// <v, alpha_i> for every simple root.
  std::vector<Rational> simple_pairings(const RationalVector& v) const;

  /// omega_i with <omega_i, alpha_j^vee> = delta_ij, inside the span of the roots.
  const RationalVector& fundamental_weight(std::size_t i) const { return weights_[i]; }

  /// Orthogonal projection onto the span of the roots.
  RationalVector project_to_root_span(const RationalVector& v) const;

  /// Sum of weights with the given coefficients.
  RationalVector weight_combination(std::span<const Rational> coefficients) const;

  /// Permutations of the simple indices preserving the Cartan matrix.
  std::vector<std::vector<std::size_t>> diagram_automorphisms() const;

  void set_components(std::vector<RootComponent> components) { components_ = std::move(components); }

 private:
  RootSystem() = default;

  std::string name_;
  std::vector<RationalVector> simple_;
  std::optional<RationalMatrix> form_;
  std::vector<RationalVector> roots_;
  std::vector<std::vector<Rational>> coefficients_;
  RationalMatrix gram_;  // of the simple roots
  IntMatrix cartan_;
  DynkinDiagram diagram_;
  std::vector<RootComponent> components_;
  std::vector<RationalVector> weights_;
};

/// Irreducible named type in the Bourbaki realization. Families A(n>=1),
/// B(n>=2), C(n>=2), D(n>=4), E6, E7, E8, F4, G2.
RootSystem named_system(char family, int rank);

/// Orthogonal direct sum; ambient spaces are concatenated.
RootSystem direct_sum(std::span<const RootSystem> factors);

/// Validates a Cartan matrix document and realizes it. Throws PreconditionError
/// for invalid entries, non-symmetrizable input, or non-finite type.
RootSystem from_cartan_matrix(const IntMatrix& cartan, std::string name = "cartan");

/// "A2", "B3", "A1xA1", "G2xA1", ... or a path to a JSON Cartan matrix.
RootSystem parse_system(std::string_view spec);

enum class AngleClass { acute, right, obtuse };

/// Sign of the inner product. Throws PreconditionError on a zero vector.
AngleClass angle_class(const RootSystem& rs, const RationalVector& u, const RationalVector& v);

enum class Comparison { less, equal, greater };

/// Radius of a metric ball on the model sphere.
///
/// Exact radii are the seven multiples of pi with rational cos^2
/// (pi/6, pi/4, pi/3, pi/2, 2pi/3, 3pi/4, 5pi/6); any other value is held as
/// a double and compared approximately.
class Radius {
 public:
  /// k pi / d; must be one of the seven exact radii.
  static Radius exact(int k, int d);
  static Radius approximate(double radians);
  /// "pi/2", "2pi/3", "5*pi/6", or a decimal number of radians.
  static Radius parse(std::string_view text);

  bool is_exact() const { return exact_; }
  double radians() const;
  /// sign of cos r (exact radii only)
  int cos_sign() const { return cos_sign_; }
  /// cos^2 r (exact radii only)
  const Rational& cos_squared() const { return cos2_; }
  std::string to_string() const;

 private:
  bool exact_ = false;
  int k_ = 0;
  int d_ = 1;
  double radians_ = 0.0;
  int cos_sign_ = 0;
  Rational cos2_;
};

inline constexpr double kDefaultTolerance = 1e-12;

struct AngleComparison {
  Comparison result = Comparison::equal;
  bool approximate = false;
  /// approximate mode only: |cos angle - cos r| fell under the tolerance
  bool ambiguous = false;
};

/// Three-way comparison of angle(u, v) with r. Exact radii use sign
/// bookkeeping on <u,v>^2 against cos^2 r |u|^2 |v|^2; others compare cosines
/// in double precision and flag ties within `tolerance` as ambiguous.
AngleComparison compare_angle_to(const RootSystem& rs, const RationalVector& u, const RationalVector& v,
                                 const Radius& r, double tolerance = kDefaultTolerance);

/// A point of the closed fundamental chamber.
class TypePoint {
 public:
  /// Projects v onto the span of the roots, then requires <v, alpha_i> >= 0
  /// for all i and v != 0. Throws PreconditionError otherwise.
  static TypePoint make(const RootSystem& rs, const RationalVector& v);

  const RationalVector& vector() const { return vector_; }
  /// Indices of the simple reflections fixing the point.
  const std::vector<std::size_t>& stabilizer_gens() const { return stabilizer_; }
  bool regular() const { return stabilizer_.empty(); }

 private:
  RationalVector vector_;
  std::vector<std::size_t> stabilizer_;
};

/// The vertex of the fundamental chamber of type i (the direction of omega_i).
TypePoint fundamental_vertex(const RootSystem& rs, std::size_t i);

/// Direction of the sum of the fundamental weights. Regular and fixed by the
/// standard involution, because iota permutes the weights.
TypePoint iota_invariant_center(const RootSystem& rs);

/// True iff t is positively proportional to some root.
bool is_root_type(const RootSystem& rs, const TypePoint& t);

/// Sum c_i omega_i with c_i uniform in [1, max_coefficient].
TypePoint random_regular_type(const RootSystem& rs, std::mt19937_64& rng, int max_coefficient = 1000);

/// Same, with c_i = c_{iota(i)}.
TypePoint random_iota_invariant_type(const RootSystem& rs, std::span<const std::size_t> iota,
                                     std::mt19937_64& rng, int max_coefficient = 1000);

}  // namespace weylthick
