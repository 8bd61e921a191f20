#pragma once

// Permutation groups given by generators: deterministic Schreier-Sims with
// explicit transversals, plus a breadth-first closure used as an independent
// check on small groups.

#include <optional>
#include <unordered_set>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

/// Enumerates the group generated by `gens` by breadth-first closure.
/// Returns nullopt as soon as more than `limit` elements are found.
/// Element order is deterministic: identity first, then BFS over generators
/// in the given order.
inline std::optional<std::vector<Perm>> enumerate_group(std::span<const Perm> gens, std::size_t degree,
                                                        std::size_t limit) {
  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_set<Perm> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elements[head], g);
      if (seen.insert(next).second) {
        if (elements.size() >= limit) return std::nullopt;
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

inline constexpr std::size_t kBfsCrossCheckLimit = 100000;

class PermGroup {
 public:
  PermGroup(std::vector<Perm> generators, std::size_t degree)
      : degree_(degree), generators_(std::move(generators)) {
    if (degree_ == 0) throw Error("PermGroup: degree must be >= 1");
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw Error("PermGroup: generator degree mismatch");
    schreier_sims();
    for (const auto& g : generators_)
      if (!contains(g)) throw std::logic_error("PermGroup: generator fails membership test");
  }

  explicit PermGroup(std::vector<Perm> generators)
      : PermGroup(generators, generators.empty() ? throw Error("PermGroup: empty generator list needs a degree")
                                                 : generators.front().degree()) {}

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }

  /// Product of the basic orbit lengths.
  BigInt order() const {
    BigInt order = 1;
    for (const auto& level : levels_) order *= level.orbit.size();
    return order;
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = strip(g, 0);
    return level == levels_.size() && residue.is_identity();
  }

 private:
  struct Level {
    std::vector<Point> orbit;
    // transversal[b] maps the base point to b; empty optional outside orbit
    std::vector<std::optional<Perm>> transversal;
  };

  // Sifts g from `from` downward; returns residue and the level where it stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      Point beta = g(base_[l]);
      const auto& u = levels_[l].transversal[beta];
      if (!u) return {std::move(g), l};
      g = compose(inverse(*u), g);
    }
    return {std::move(g), levels_.size()};
  }

  std::vector<Perm> level_generators(std::size_t l) const {
    std::vector<Perm> out;
    for (const auto& s : strong_) {
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < l && fixes_prefix; ++k) fixes_prefix = s.fixes(base_[k]);
      if (fixes_prefix) out.push_back(s);
    }
    return out;
  }

  void rebuild_level(std::size_t l) {
    Level level;
    level.transversal.assign(degree_, std::nullopt);
    Point b = base_[l];
    level.transversal[b] = Perm::identity(degree_);
    level.orbit.push_back(b);
    auto gens = level_generators(l);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      Point cur = level.orbit[head];
      for (const auto& s : gens) {
        Point next = s(cur);
        if (!level.transversal[next]) {
          level.transversal[next] = compose(s, *level.transversal[cur]);
          level.orbit.push_back(next);
        }
      }
    }
    levels_[l] = std::move(level);
  }

  void add_base_point_moved_by(const Perm& g) {
    for (Point i = 0; i < degree_; ++i) {
      if (!g.fixes(i)) {
        base_.push_back(i);
        levels_.emplace_back();
        return;
      }
    }
  }

  void schreier_sims() {
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
      strong_.push_back(g);
      bool moves_base = std::any_of(base_.begin(), base_.end(), [&](Point b) { return !g.fixes(b); });
      if (!moves_base) add_base_point_moved_by(g);
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);

    // Invariant: levels above i carry a verified BSGS of their stabilizers.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      std::size_t lvl = static_cast<std::size_t>(i);
      auto new_level = verify_level(lvl);
      if (new_level) {
        i = static_cast<std::ptrdiff_t>(*new_level);
      } else {
        --i;
      }
    }
  }

  // Checks every Schreier generator of level `l`. On the first one that does
  // not sift, extends the strong generating set and returns the level to
  // resume from.
  std::optional<std::size_t> verify_level(std::size_t l) {
    // strong generators added while working on higher levels may also lie
    // in this stabilizer
    rebuild_level(l);
    auto gens = level_generators(l);
    const Level& level = levels_[l];
    for (Point beta : level.orbit) {
      const Perm& u_beta = *level.transversal[beta];
      for (const auto& s : gens) {
        Point image = s(beta);
        const Perm& u_image = *level.transversal[image];
        if (compose(s, u_beta) == u_image) continue;
        Perm h = compose(inverse(u_image), compose(s, u_beta));
        auto [residue, stop] = strip(std::move(h), l + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size()) add_base_point_moved_by(residue);
        strong_.push_back(residue);
        for (std::size_t k = l + 1; k <= stop; ++k) rebuild_level(k);
        return stop;
      }
    }
    return std::nullopt;
  }

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Point> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

/// Exact order of the group generated by `gens`. Whenever the Schreier-Sims
/// order is at most kBfsCrossCheckLimit, a BFS enumeration runs as well and
/// the two counts must agree.
inline BigInt group_order(std::span<const Perm> gens, std::size_t degree) {
  PermGroup group(std::vector<Perm>(gens.begin(), gens.end()), degree);
  BigInt order = group.order();
  if (order <= kBfsCrossCheckLimit) {
    auto elements = enumerate_group(gens, degree, kBfsCrossCheckLimit);
    if (!elements || BigInt(elements->size()) != order)
      throw std::logic_error("group_order: Schreier-Sims and BFS closure disagree");
  }
  return order;
}

inline BigInt group_order(std::span<const Perm> gens) {
  if (gens.empty()) return 1;
  return group_order(gens, gens.front().degree());
}

}  // namespace ybe
