#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylthick/rational.hpp"
#include "weylthick/rootdata.hpp"

namespace weylthick {

/// Word over simple reflections, 0-based letters.
using Word = std::vector<std::uint8_t>;

/// "e" for the empty word; 1-based digits ("121") for rank <= 9, otherwise
/// dot-separated ("1.10.2").
std::string format_word(const Word& word, std::size_t rank);
Word parse_word(std::string_view text, std::size_t rank);

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

class WeylElement {
 public:
  const RationalMatrix& matrix() const { return matrix_; }
  /// The lexicographically smallest reduced word.
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  /// perm[i] = index of w(root i). This is the element's identity.
  const std::vector<std::uint32_t>& root_permutation() const { return perm_; }

 private:
  friend class WeylGroup;
  RationalMatrix matrix_;
  Word word_;
  std::vector<std::uint32_t> perm_;
};

/// The finite Weyl group of a root system, generated by breadth-first
/// closure over simple reflections. Elements are indexed by (length,
/// lexicographic reduced word); index 0 is the identity.
class WeylGroup {
 public:
  /// Throws PreconditionError when the closure exceeds `bound` elements.
  static std::shared_ptr<const WeylGroup> generate(std::shared_ptr<const RootSystem> rs,
                                                   std::size_t bound = kDefaultGroupBound);

  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  std::size_t rank() const { return rs_->rank(); }

  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity() const { return 0; }
  std::size_t w0_index() const { return w0_; }

  /// s_s * w
  std::size_t left(std::size_t w, std::size_t s) const { return left_[w * rank() + s]; }
  /// w * s_s (the Cayley graph edges)
  std::size_t right(std::size_t w, std::size_t s) const { return right_[w * rank() + s]; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::optional<std::size_t> find(std::span<const std::uint32_t> perm) const;
  std::size_t from_word(const Word& word) const;
  /// Element index of the reflection in the given root.
  std::size_t reflection(std::size_t root) const;

  RationalVector act(std::size_t w, const RationalVector& v) const { return elements_[w].matrix().apply(v); }

 private:
  WeylGroup() = default;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::size_t w0_ = 0;
};

const WeylElement& longest_element(const WeylGroup& g);

/// True iff w acts as -1 on the span of the roots (ambient directions
/// orthogonal to every root, such as the diagonal for A_n, are ignored).
bool is_minus_identity(const RootSystem& rs, const WeylElement& w);

/// The diagram automorphism iota = -w0 on simple-root indices.
std::vector<std::size_t> iota_permutation(const WeylGroup& g);

/// The W-orbit of a type point, identified with the cosets W / W_base.
///
/// Points are indexed in the order of their minimal-length representatives,
/// so index 0 is the base point (the orbit point in the fundamental chamber).
class Orbit {
 public:
  static std::shared_ptr<const Orbit> build(std::shared_ptr<const WeylGroup> group, TypePoint base);

  const WeylGroup& group() const { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const { return group_; }
  const RootSystem& root_system() const { return group_->root_system(); }
  const TypePoint& base() const { return base_; }

  std::size_t size() const { return points_.size(); }
  const RationalVector& point(std::size_t p) const { return points_[p]; }
  /// Minimal-length element mapping the base point to point p.
  std::size_t rep(std::size_t p) const { return rep_[p]; }
  std::size_t level(std::size_t p) const { return group_->element(rep_[p]).length(); }
  std::size_t stabilizer_order() const { return group_->order() / points_.size(); }

  /// Index of w * base.
  std::size_t point_of(std::size_t element) const { return point_of_[element]; }
  /// Index of s_s * point(p).
  std::size_t simple_action(std::size_t p, std::size_t s) const { return simple_action_[p * group_->rank() + s]; }
  std::optional<std::size_t> index_of(const RationalVector& v) const;

  /// All elements fixing the base point, in group order.
  std::vector<std::size_t> stabilizer_elements() const;

 private:
  Orbit() = default;

  std::shared_ptr<const WeylGroup> group_;
  TypePoint base_;
  std::vector<RationalVector> points_;
  std::vector<std::size_t> rep_;
  std::vector<std::size_t> point_of_;
  std::vector<std::size_t> simple_action_;
  std::map<RationalVector, std::size_t> lookup_;
};

inline std::shared_ptr<const Orbit> orbit_of(std::shared_ptr<const WeylGroup> group, TypePoint base) {
  return Orbit::build(std::move(group), std::move(base));
}

/// "regular" (iota-invariant center), "vertex:i" (1-based), or a rational
/// vector literal lying in the closed fundamental chamber.
TypePoint parse_orbit_spec(const RootSystem& rs, std::string_view spec);

}  // namespace weylthick
