#include "weylthick/order.hpp"

#include <algorithm>
#include <numeric>

#include "weylthick/error.hpp"

namespace weylthick {

Poset::Poset(std::vector<Bitset> below) : below_(std::move(below)) {
  const std::size_t n = below_.size();
  above_.assign(n, Bitset(n));
  for (std::size_t q = 0; q < n; ++q) {
    if (below_[q].size() != n) throw VerificationError("poset row has wrong size");
    if (!below_[q].test(q)) throw VerificationError("poset is not reflexive at " + std::to_string(q));
    below_[q].for_each([&](std::size_t p) { above_[p].set(q); });
  }
  for (std::size_t q = 0; q < n; ++q) {
    bool closed = true;
    below_[q].for_each([&](std::size_t p) {
      if (closed && !below_[p].is_subset_of(below_[q])) closed = false;
    });
    if (!closed) throw VerificationError("poset relation is not transitive at " + std::to_string(q));
    Bitset both = below_[q] & above_[q];
    if (both.count() != 1) throw VerificationError("poset relation is not antisymmetric at " + std::to_string(q));
  }
  // Transitive reduction: covers of q are the maximal elements of {p < q}.
  for (std::size_t q = 0; q < n; ++q) {
    Bitset strict = below_[q];
    strict.reset(q);
    Bitset shadow(n);
    strict.for_each([&](std::size_t r) {
      Bitset under = below_[r];
      under.reset(r);
      shadow |= under;
    });
    (strict - shadow).for_each([&](std::size_t p) { covers_.emplace_back(p, q); });
  }
}

std::optional<std::size_t> Poset::minimum() const {
  for (std::size_t p = 0; p < size(); ++p) {
    if (above_[p].count() == size()) return p;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::maximum() const {
  for (std::size_t q = 0; q < size(); ++q) {
    if (below_[q].count() == size()) return q;
  }
  return std::nullopt;
}

Poset folding_leq_geometric(const Orbit& orbit) {
  const auto& rs = orbit.root_system();
  const std::size_t n = orbit.size();
  const std::size_t npos = rs.positive_count();

  // folds[q]: images of q under the single special foldings that move it.
  std::vector<std::vector<std::size_t>> folds(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < npos; ++a) {
      if (sgn(rs.inner(orbit.point(q), rs.root(a))) >= 0) continue;
      auto img = orbit.index_of(rs.reflect(orbit.point(q), rs.root(a)));
      if (!img) throw VerificationError("folded point left the orbit");
      folds[q].push_back(*img);
    }
  }
  // Breadth-first reachability from every point.
  std::vector<Bitset> below(n, Bitset(n));
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    Bitset& seen = below[q];
    seen.set(q);
    queue.assign(1, q);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto p : folds[queue[head]]) {
        if (seen.test(p)) continue;
        // Reachability from an already finished point is its whole down-set.
        if (p < q) {
          seen |= below[p];
          continue;
        }
        seen.set(p);
        queue.push_back(p);
      }
    }
  }
  return Poset(std::move(below));
}

Bitset bruhat_lower_interval(const WeylGroup& g, std::size_t v) {
  Bitset reach(g.order());
  reach.set(g.identity());
  std::vector<std::size_t> members{g.identity()};
  for (auto letter : g.element(v).word()) {
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t x = g.right(members[i], letter);
      if (!reach.test(x)) {
        reach.set(x);
        members.push_back(x);
      }
    }
  }
  return reach;
}

bool bruhat_leq(const WeylGroup& g, std::size_t u, std::size_t v) {
  if (g.element(u).length() > g.element(v).length()) return false;
  return bruhat_lower_interval(g, v).test(u);
}

Poset quotient_poset(const Orbit& orbit) {
  const auto& g = orbit.group();
  const std::size_t n = orbit.size();
  // rep index -> orbit index, only for minimal representatives
  std::vector<std::size_t> rep_to_point(g.order(), n);
  for (std::size_t p = 0; p < n; ++p) rep_to_point[orbit.rep(p)] = p;
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t q = 0; q < n; ++q) {
    bruhat_lower_interval(g, orbit.rep(q)).for_each([&](std::size_t u) {
      if (rep_to_point[u] != n) below[q].set(rep_to_point[u]);
    });
  }
  return Poset(std::move(below));
}

CrossValidation cross_validate(const Poset& geometric, const Poset& subword) {
  CrossValidation report;
  if (geometric.size() != subword.size()) throw PreconditionError("cross_validate: posets of different size");
  const std::size_t n = geometric.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      ++report.pairs_checked;
      if (geometric.leq(p, q) != subword.leq(p, q)) report.disagreements.emplace_back(p, q);
    }
  }
  return report;
}

CrossValidation cross_validate(const Orbit& orbit) {
  return cross_validate(folding_leq_geometric(orbit), quotient_poset(orbit));
}

std::vector<std::size_t> antipode_pairing(const Orbit& orbit) {
  const auto& g = orbit.group();
  std::vector<std::size_t> out(orbit.size());
  for (std::size_t p = 0; p < orbit.size(); ++p) out[p] = orbit.point_of(g.multiply(g.w0_index(), orbit.rep(p)));
  for (std::size_t p = 0; p < orbit.size(); ++p) {
    if (out[out[p]] != p) throw VerificationError("antipode pairing is not an involution");
  }
  return out;
}

std::shared_ptr<const OrderedOrbit> OrderedOrbit::build(std::shared_ptr<const Orbit> orbit) {
  auto o = std::shared_ptr<OrderedOrbit>(new OrderedOrbit());
  o->orbit_ = std::move(orbit);
  o->poset_ = folding_leq_geometric(*o->orbit_);
  const auto check = cross_validate(o->poset_, quotient_poset(*o->orbit_));
  if (!check.agree()) {
    const auto [p, q] = check.disagreements.front();
    const auto& g = o->orbit_->group();
    throw VerificationError("folding order and subword order disagree on (" +
                            format_word(g.element(o->orbit_->rep(p)).word(), g.rank()) + ", " +
                            format_word(g.element(o->orbit_->rep(q)).word(), g.rank()) + ")");
  }
  o->antipode_ = antipode_pairing(*o->orbit_);
  return o;
}

std::shared_ptr<const OrderedOrbit> OrderedOrbit::build(std::shared_ptr<const WeylGroup> group, TypePoint base) {
  return build(Orbit::build(std::move(group), std::move(base)));
}

std::optional<std::size_t> OrderedOrbit::antipode_fixed_point() const {
  for (std::size_t p = 0; p < antipode_.size(); ++p) {
    if (antipode_[p] == p) return p;
  }
  return std::nullopt;
}

}  // namespace weylthick
