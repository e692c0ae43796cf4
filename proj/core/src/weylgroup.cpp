#include "weylthick/weylgroup.hpp"

#include <algorithm>
#include <cctype>

#include "weylthick/error.hpp"

namespace weylthick {

std::string format_word(const Word& word, std::size_t rank) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (rank > 9 && i) out += '.';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t rank) {
  Word w;
  if (text == "e" || text.empty()) return w;
  auto push = [&](int letter) {
    if (letter < 1 || static_cast<std::size_t>(letter) > rank)
      throw ParseError("word letter " + std::to_string(letter) + " out of range");
    w.push_back(static_cast<std::uint8_t>(letter - 1));
  };
  if (rank > 9 || text.find('.') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find('.', pos);
      auto tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad word '" + std::string(text) + "'");
      push(std::stoi(std::string(tok)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return w;
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad word '" + std::string(text) + "'");
    push(c - '0');
  }
  return w;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const WeylGroup> WeylGroup::generate(std::shared_ptr<const RootSystem> rs, std::size_t bound) {
  const std::size_t n = rs->rank();
  const std::size_t nroots = rs->roots().size();
  const std::size_t npos = rs->positive_count();

  std::map<RationalVector, std::uint32_t> root_index;
  for (std::size_t i = 0; i < nroots; ++i) root_index.emplace(rs->root(i), static_cast<std::uint32_t>(i));
  std::vector<std::vector<std::uint32_t>> simple_perm(n, std::vector<std::uint32_t>(nroots));
  std::vector<RationalMatrix> simple_matrix;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < nroots; ++r) {
      auto it = root_index.find(rs->reflect_simple(rs->root(r), s));
      if (it == root_index.end()) throw VerificationError("root set not closed under simple reflection");
      simple_perm[s][r] = it->second;
    }
    simple_matrix.push_back(rs->reflection_matrix(rs->simple_root(s)));
  }

  struct Node {
    std::vector<std::uint32_t> perm;
    Word word;
    std::size_t parent = 0;  // index within the previous level
    std::uint8_t letter = 0;
  };

  std::vector<std::vector<Node>> levels;
  std::vector<std::uint32_t> id(nroots);
  for (std::size_t r = 0; r < nroots; ++r) id[r] = static_cast<std::uint32_t>(r);
  levels.push_back({Node{id, {}, 0, 0}});
  std::map<std::vector<std::uint32_t>, int> seen_level;
  seen_level.emplace(id, 0);
  std::size_t total = 1;

  while (true) {
    const auto& cur = levels.back();
    const int k = static_cast<int>(levels.size()) - 1;
    std::vector<Node> next;
    std::map<std::vector<std::uint32_t>, std::size_t> next_index;
    for (std::size_t x = 0; x < cur.size(); ++x) {
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> y(nroots);
        for (std::size_t r = 0; r < nroots; ++r) y[r] = simple_perm[s][cur[x].perm[r]];
        auto seen = seen_level.find(y);
        if (seen != seen_level.end() && seen->second <= k) continue;
        Word word;
        word.reserve(cur[x].word.size() + 1);
        word.push_back(static_cast<std::uint8_t>(s));
        word.insert(word.end(), cur[x].word.begin(), cur[x].word.end());
        auto it = next_index.find(y);
        if (it == next_index.end()) {
          next_index.emplace(y, next.size());
          seen_level.emplace(y, k + 1);
          next.push_back(Node{std::move(y), std::move(word), x, static_cast<std::uint8_t>(s)});
          if (++total > bound)
            throw PreconditionError("Weyl group closure exceeds " + std::to_string(bound) +
                                    " elements; input is not finite or too large");
        } else if (word < next[it->second].word) {
          // smaller left descent found; keep the lexicographically least reduced word
          next[it->second].word = std::move(word);
          next[it->second].parent = x;
          next[it->second].letter = static_cast<std::uint8_t>(s);
        }
      }
    }
    if (next.empty()) break;
    // Parents index into the previous level's final order, which is already sorted.
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.word < b.word; });
    levels.push_back(std::move(next));
  }

  auto g = std::shared_ptr<WeylGroup>(new WeylGroup());
  g->rs_ = rs;
  std::vector<std::size_t> level_offset;
  std::size_t offset = 0;
  for (const auto& lvl : levels) {
    level_offset.push_back(offset);
    offset += lvl.size();
  }
  g->elements_.reserve(offset);
  const std::size_t dim = rs->ambient_dim();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (auto& node : levels[k]) {
      WeylElement e;
      e.word_ = std::move(node.word);
      e.perm_ = std::move(node.perm);
      if (k == 0) {
        e.matrix_ = RationalMatrix::identity(dim);
      } else {
        const auto& parent = g->elements_[level_offset[k - 1] + node.parent];
        e.matrix_ = simple_matrix[node.letter] * parent.matrix_;
      }
      std::size_t inversions = 0;
      for (std::size_t r = 0; r < npos; ++r) inversions += e.perm_[r] >= npos ? 1 : 0;
      if (inversions != e.word_.size())
        throw VerificationError("element " + format_word(e.word_, n) + " has inversion count " +
                                std::to_string(inversions) + " but word length " + std::to_string(e.word_.size()));
      g->index_.emplace(e.perm_, g->elements_.size());
      g->elements_.push_back(std::move(e));
    }
  }

  const std::size_t order = g->elements_.size();
  g->left_.resize(order * n);
  g->right_.resize(order * n);
  std::vector<std::uint32_t> y(nroots);
  for (std::size_t w = 0; w < order; ++w) {
    const auto& p = g->elements_[w].perm_;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t r = 0; r < nroots; ++r) y[r] = simple_perm[s][p[r]];
      g->left_[w * n + s] = g->index_.at(y);
      for (std::size_t r = 0; r < nroots; ++r) y[r] = p[simple_perm[s][r]];
      g->right_[w * n + s] = g->index_.at(y);
    }
  }
  if (levels.back().size() != 1) throw VerificationError("longest element is not unique");
  g->w0_ = order - 1;
  return g;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& pa = elements_[a].perm_;
  const auto& pb = elements_[b].perm_;
  std::vector<std::uint32_t> c(pa.size());
  for (std::size_t r = 0; r < pa.size(); ++r) c[r] = pa[pb[r]];
  return index_.at(c);
}

std::size_t WeylGroup::inverse(std::size_t a) const {
  const auto& pa = elements_[a].perm_;
  std::vector<std::uint32_t> c(pa.size());
  for (std::size_t r = 0; r < pa.size(); ++r) c[pa[r]] = static_cast<std::uint32_t>(r);
  return index_.at(c);
}

std::optional<std::size_t> WeylGroup::find(std::span<const std::uint32_t> perm) const {
  auto it = index_.find(std::vector<std::uint32_t>(perm.begin(), perm.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::from_word(const Word& word) const {
  std::size_t w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= rank()) throw PreconditionError("word letter out of range");
    w = left(w, *it);
  }
  return w;
}

std::size_t WeylGroup::reflection(std::size_t root) const {
  const auto& rs = *rs_;
  std::vector<std::uint32_t> perm(rs.roots().size());
  for (std::size_t r = 0; r < perm.size(); ++r) {
    auto idx = rs.find_root(rs.reflect(rs.root(r), rs.root(root)));
    if (!idx) throw VerificationError("reflection does not permute the roots");
    perm[r] = static_cast<std::uint32_t>(*idx);
  }
  auto found = find(perm);
  if (!found) throw VerificationError("reflection is not a group element");
  return *found;
}

const WeylElement& longest_element(const WeylGroup& g) { return g.element(g.w0_index()); }

bool is_minus_identity(const RootSystem& rs, const WeylElement& w) {
  for (const auto& a : rs.simple_roots()) {
    if (w.matrix().apply(a) != -a) return false;
  }
  return true;
}

std::vector<std::size_t> iota_permutation(const WeylGroup& g) {
  const auto& rs = g.root_system();
  const auto& w0 = longest_element(g);
  std::vector<std::size_t> out(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    RationalVector img = -w0.matrix().apply(rs.simple_root(i));
    bool found = false;
    for (std::size_t j = 0; j < rs.rank() && !found; ++j) {
      if (rs.simple_root(j) == img) {
        out[i] = j;
        found = true;
      }
    }
    if (!found) throw VerificationError("-w0 does not permute the simple roots");
  }
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Orbit> Orbit::build(std::shared_ptr<const WeylGroup> group, TypePoint base) {
  auto o = std::shared_ptr<Orbit>(new Orbit());
  const auto& g = *group;
  const auto& rs = g.root_system();
  o->group_ = group;
  o->base_ = std::move(base);
  o->point_of_.resize(g.order());
  std::vector<RationalVector> value(g.order());
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (w == 0) {
      value[w] = o->base_.vector();
    } else {
      const auto s = g.element(w).word().front();
      value[w] = rs.reflect_simple(value[g.left(w, s)], s);
    }
    auto [it, inserted] = o->lookup_.emplace(value[w], o->points_.size());
    if (inserted) {
      o->points_.push_back(value[w]);
      o->rep_.push_back(w);
    }
    o->point_of_[w] = it->second;
  }
  if (g.order() % o->points_.size() != 0) throw VerificationError("orbit size does not divide the group order");
  const std::size_t n = g.rank();
  o->simple_action_.resize(o->points_.size() * n);
  for (std::size_t p = 0; p < o->points_.size(); ++p) {
    for (std::size_t s = 0; s < n; ++s) o->simple_action_[p * n + s] = o->point_of_[g.left(o->rep_[p], s)];
  }
  return o;
}

std::optional<std::size_t> Orbit::index_of(const RationalVector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Orbit::stabilizer_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < point_of_.size(); ++w) {
    if (point_of_[w] == 0) out.push_back(w);
  }
  return out;
}

TypePoint parse_orbit_spec(const RootSystem& rs, std::string_view spec) {
  if (spec == "regular") return iota_invariant_center(rs);
  if (spec.starts_with("vertex:")) {
    const auto idx = spec.substr(7);
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad vertex index in '" + std::string(spec) + "'");
    const int i = std::stoi(std::string(idx));
    if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
      throw ParseError("vertex index " + std::to_string(i) + " out of range 1.." + std::to_string(rs.rank()));
    return fundamental_vertex(rs, static_cast<std::size_t>(i - 1));
  }
  try {
    return TypePoint::make(rs, parse_vector(spec));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace weylthick
