#pragma once

// Finite involutive non-degenerate set-theoretic solutions of the
// Yang-Baxter equation, stored as the table of left actions sigma_x.
// The map is r(x, y) = (sigma_x(y), gamma_y(x)) with
// gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ybe/perm.hpp"
#include "ybe/perm_group.hpp"

namespace ybe {

/// Family tag and parameters a solution was built from. Metadata only.
struct FamilyInfo {
  std::string name;
  nlohmann::json params = nlohmann::json::object();

  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

class Solution {
 public:
  Solution() = default;

  explicit Solution(std::vector<Perm> sigma) : sigma_(std::move(sigma)) {
    if (sigma_.empty()) throw Error("Solution: X must be non-empty");
    for (const auto& row : sigma_)
      if (row.degree() != sigma_.size()) throw Error("Solution: sigma row has wrong degree");
    sigma_inv_.reserve(sigma_.size());
    for (const auto& row : sigma_) sigma_inv_.push_back(inverse(row));
  }

  std::size_t size() const { return sigma_.size(); }
  const Perm& sigma(Point x) const { return sigma_[x]; }
  const Perm& sigma_inv(Point x) const { return sigma_inv_[x]; }
  const std::vector<Perm>& sigma_table() const { return sigma_; }

  /// gamma_y(x) by the defining formula; always computable.
  Point gamma(Point y, Point x) const { return sigma_inv_[sigma_[x](y)](x); }

  // Coordinate decoding of each point; empty when not provided.
  std::vector<std::vector<std::int64_t>> labels;
  std::optional<FamilyInfo> family;

 private:
  std::vector<Perm> sigma_;
  std::vector<Perm> sigma_inv_;
};

inline void check_point(const Solution& s, Point x, const char* what) {
  if (x >= s.size()) throw Error(std::string(what) + ": point out of range");
}

/// r(x, y) = (sigma_x(y), sigma^{-1}_{sigma_x(y)}(x)).
inline std::pair<Point, Point> eval_r(const Solution& s, Point x, Point y) {
  check_point(s, x, "eval_r");
  check_point(s, y, "eval_r");
  Point u = s.sigma(x)(y);
  return {u, s.sigma_inv(u)(x)};
}

/// gamma table indexed by y, or nullopt if some gamma_y is not a bijection.
inline std::optional<std::vector<Perm>> try_derive_gamma(const Solution& s) {
  const auto n = static_cast<Point>(s.size());
  std::vector<Perm> table;
  table.reserve(n);
  for (Point y = 0; y < n; ++y) {
    std::vector<Point> images(n);
    std::vector<bool> hit(n, false);
    for (Point x = 0; x < n; ++x) {
      images[x] = s.gamma(y, x);
      if (hit[images[x]]) return std::nullopt;
      hit[images[x]] = true;
    }
    table.emplace_back(std::move(images), Perm::Trusted{});
  }
  return table;
}

inline std::vector<Perm> derive_gamma(const Solution& s) {
  auto table = try_derive_gamma(s);
  if (!table) throw Error("derive_gamma: some gamma_y is not bijective (solution is degenerate)");
  return *std::move(table);
}

/// Sigma rows are bijections by type; this checks the gamma half.
inline bool check_nondegenerate(const Solution& s) { return try_derive_gamma(s).has_value(); }

/// sigma_x sigma_{sigma_x^{-1}(y)} == sigma_y sigma_{sigma_y^{-1}(x)} for all x, y.
inline bool check_ybe(const Solution& s) {
  const auto n = static_cast<Point>(s.size());
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      const Perm& lhs_inner = s.sigma(s.sigma_inv(x)(y));
      const Perm& rhs_inner = s.sigma(s.sigma_inv(y)(x));
      for (Point z = 0; z < n; ++z)
        if (s.sigma(x)(lhs_inner(z)) != s.sigma(y)(rhs_inner(z))) return false;
    }
  }
  return true;
}

inline bool check_involutive(const Solution& s) {
  const auto n = static_cast<Point>(s.size());
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto [u, v] = eval_r(s, x, y);
      if (eval_r(s, u, v) != std::pair{x, y}) return false;
    }
  }
  return true;
}

/// The group generated by the sigma_x acts transitively.
inline bool is_indecomposable(const Solution& s) {
  return orbit(s.sigma_table(), 0, s.size()).size() == s.size();
}

inline bool is_irretractable(const Solution& s) {
  std::vector<Perm> rows = s.sigma_table();
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

/// An equivalence relation on X, blocks numbered by first occurrence.
class Partition {
 public:
  Partition() = default;

  /// Renumbers arbitrary labels so that blocks appear in ascending order of
  /// their smallest point.
  explicit Partition(std::span<const std::size_t> labels) {
    std::map<std::size_t, std::size_t> renumber;
    block_id_.reserve(labels.size());
    for (auto label : labels) {
      auto [it, inserted] = renumber.try_emplace(label, renumber.size());
      block_id_.push_back(it->second);
    }
    block_count_ = renumber.size();
  }

  static Partition discrete(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return Partition(ids);
  }
  static Partition full(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

  std::size_t size() const { return block_id_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(Point x) const { return block_id_[x]; }
  const std::vector<std::size_t>& block_ids() const { return block_id_; }

  /// True iff every block of this partition lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    std::vector<std::optional<std::size_t>> image(block_count_);
    for (std::size_t i = 0; i < size(); ++i) {
      auto& slot = image[block_id_[i]];
      if (slot && *slot != coarser.block_id_[i]) return false;
      slot = coarser.block_id_[i];
    }
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> block_id_;
  std::size_t block_count_ = 0;
};

/// Induced solution on the blocks of `part`. Throws if `part` is not a
/// congruence (the induced sigma is ill-defined) or if the result fails
/// any validity check.
inline Solution quotient_by(const Solution& s, const Partition& part) {
  if (part.size() != s.size()) throw Error("quotient_by: partition size mismatch");
  const std::size_t k = part.block_count();
  const auto n = static_cast<Point>(s.size());
  constexpr auto unset = std::numeric_limits<Point>::max();
  std::vector<std::vector<Point>> rows(k, std::vector<Point>(k, unset));
  for (Point x = 0; x < n; ++x) {
    auto bx = part.block_of(x);
    for (Point y = 0; y < n; ++y) {
      auto by = part.block_of(y);
      auto image = static_cast<Point>(part.block_of(s.sigma(x)(y)));
      if (rows[bx][by] == unset) {
        rows[bx][by] = image;
      } else if (rows[bx][by] != image) {
        throw Error("quotient_by: partition is not a congruence");
      }
    }
  }
  std::vector<Perm> sigma;
  sigma.reserve(k);
  for (auto& row : rows) sigma.emplace_back(std::move(row));
  Solution q(std::move(sigma));
  if (!check_ybe(q) || !check_involutive(q) || !check_nondegenerate(q))
    throw std::logic_error("quotient_by: induced map is not a solution");
  return q;
}

/// Retract: classes of x ~ y iff sigma_x == sigma_y, with the induced solution.
inline std::pair<Solution, Partition> retract(const Solution& s) {
  std::map<Perm, std::size_t> classes;
  std::vector<std::size_t> labels;
  labels.reserve(s.size());
  for (const auto& row : s.sigma_table()) {
    auto [it, inserted] = classes.try_emplace(row, classes.size());
    labels.push_back(it->second);
  }
  Partition part(labels);
  return {quotient_by(s, part), part};
}

/// Least n with |Ret^n(X)| = 1; nullopt if the retract tower stabilises
/// above one point. A one-point solution has level 0.
inline std::optional<std::size_t> multipermutation_level(const Solution& s) {
  Solution current = s;
  std::size_t level = 0;
  while (current.size() > 1) {
    auto [next, part] = retract(current);
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
    ++level;
  }
  return level;
}

/// f(sigma_x(y)) == sigma'_{f(x)}(f(y)) for all x, y.
inline bool is_homomorphism(std::span<const Point> f, const Solution& s, const Solution& t) {
  if (f.size() != s.size()) throw Error("is_homomorphism: map is not total on X");
  for (Point v : f)
    if (v >= t.size()) throw Error("is_homomorphism: map value outside Y");
  const auto n = static_cast<Point>(s.size());
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (f[s.sigma(x)(y)] != t.sigma(f[x])(f[y])) return false;
  return true;
}

/// Fiber sizes of a surjective homomorphism, indexed by the points of Y.
/// All fibers over an indecomposable source must be equal; that is asserted.
inline std::vector<std::size_t> fiber_profile(std::span<const Point> f, const Solution& s, const Solution& t) {
  if (!is_homomorphism(f, s, t)) throw Error("fiber_profile: map is not a homomorphism");
  std::vector<std::size_t> sizes(t.size(), 0);
  for (Point v : f) ++sizes[v];
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) throw Error("fiber_profile: map is not surjective");
  if (is_indecomposable(s) && std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
    throw std::logic_error("fiber_profile: unequal fibers over an indecomposable solution");
  return sizes;
}

/// The permutation group generated by the sigma_x.
inline PermGroup permutation_group(const Solution& s) { return PermGroup(s.sigma_table(), s.size()); }

}  // namespace ybe
