#pragma once

// The natural left brace on the permutation group G(X,r) = <sigma_x>.
//
// The structure group of (X,r) is modelled inside Z^X x| Sym(X): an element is
// (v, pi) with v its additive coordinate vector and pi its image under
// x -> sigma_x, and (v, pi)(w, tau) = (v + pi.w, pi tau) where pi.e_x =
// e_{pi(x)}. The kernel of the projection to Sym(X) is the socle, a full-rank
// lattice L in Z^X, and G(X,r) = Z^X / L as a brace: addition of coset
// vectors, multiplication by composing permutations.
//
// L is found by breadth-first search over permutations. Whenever two paths
// reach the same permutation with coordinate vectors that differ modulo the
// current L, the difference is added to L (kept in Hermite normal form) and
// the search restarts. At the fixpoint the set of reached (v + L, pi) is
// closed under multiplication by every generator and its inverse, so it
// contains the whole structure group, which forces ker = L.

#include <map>
#include <optional>
#include <unordered_map>

#include "ybe/brace.hpp"
#include "ybe/perm_group.hpp"
#include "ybe/solution.hpp"

namespace ybe {

inline constexpr std::size_t kMaxStructureBraceOrder = 10000;

using IntVector = std::vector<BigInt>;

/// Integer lattice kept as an upper-triangular Hermite normal form: row i,
/// when present, has a positive pivot in column i, zeros to its left, and
/// entries above other pivots reduced into [0, pivot).
class SocleLattice {
 public:
  explicit SocleLattice(std::size_t dim) : rows_(dim) {}

  std::size_t dimension() const { return rows_.size(); }
  bool full_rank() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.has_value(); });
  }

  /// Canonical representative of v + L.
  IntVector reduce(IntVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!rows_[i] || v[i] == 0) continue;
      const auto& row = *rows_[i];
      BigInt q = floor_div(v[i], row[i]);
      if (q == 0) continue;
      for (std::size_t k = i; k < v.size(); ++k) v[k] -= q * row[k];
    }
    return v;
  }

  bool contains(const IntVector& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
  }

  /// Adds v to the lattice. Returns false if it was already a member.
  bool insert(IntVector v) {
    v = reduce(std::move(v));
    bool changed = false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (v[i] == 0) continue;
      changed = true;
      if (!rows_[i]) {
        if (v[i] < 0)
          for (auto& x : v) x = -x;
        rows_[i] = std::move(v);
        break;
      }
      // Replace (row, v) by a unimodular combination with gcd pivot and v[i] = 0.
      auto& row = *rows_[i];
      BigInt a = row[i], b = v[i];
      auto [g, s, t] = extended_gcd(a, b);
      IntVector new_row(v.size()), new_v(v.size());
      for (std::size_t k = i; k < v.size(); ++k) {
        new_row[k] = s * row[k] + t * v[k];
        new_v[k] = (a / g) * v[k] - (b / g) * row[k];
      }
      row = std::move(new_row);
      v = std::move(new_v);
    }
    if (changed) normalize();
    return changed;
  }

  /// Index [Z^n : L]; zero when L is not of full rank.
  BigInt index() const {
    BigInt det = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!rows_[i]) return 0;
      det *= (*rows_[i])[i];
    }
    return det;
  }

  /// Basis rows, each padded with leading zeros; absent pivots omitted.
  std::vector<IntVector> basis() const {
    std::vector<IntVector> out;
    for (const auto& r : rows_)
      if (r) out.push_back(*r);
    return out;
  }

 private:
  static BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }

  static std::tuple<BigInt, BigInt, BigInt> extended_gcd(BigInt a, BigInt b) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      BigInt q = a / b;
      std::tie(a, b) = std::make_tuple(b, BigInt(a - q * b));
      std::tie(s0, s1) = std::make_tuple(s1, BigInt(s0 - q * s1));
      std::tie(t0, t1) = std::make_tuple(t1, BigInt(t0 - q * t1));
    }
    if (a < 0) return {BigInt(-a), BigInt(-s0), BigInt(-t0)};
    return {a, s0, t0};
  }

  void normalize() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!rows_[i]) continue;
      auto& row = *rows_[i];
      if (row[i] < 0)
        for (auto& x : row) x = -x;
      // reduce entries of earlier rows above this pivot
      for (std::size_t r = 0; r < i; ++r) {
        if (!rows_[r]) continue;
        auto& upper = *rows_[r];
        BigInt q = floor_div(upper[i], row[i]);
        if (q == 0) continue;
        for (std::size_t k = i; k < row.size(); ++k) upper[k] -= q * row[k];
      }
    }
  }

  std::vector<std::optional<IntVector>> rows_;
};

struct PermutationBrace {
  FiniteBrace brace;
  std::vector<Perm> perm_of;       // element index -> permutation
  std::vector<IntVector> coset_rep;  // element index -> canonical coordinate vector
  SocleLattice lattice;

  /// Element index of a permutation in G(X,r).
  std::optional<Point> index_of(const Perm& p) const {
    auto it = std::find(perm_of.begin(), perm_of.end(), p);
    if (it == perm_of.end()) return std::nullopt;
    return static_cast<Point>(it - perm_of.begin());
  }
};

/// nullopt when |G(X,r)| exceeds `max_order` (the result is "not computed").
inline std::optional<PermutationBrace> build_permutation_brace(const Solution& s,
                                                               std::size_t max_order = kMaxStructureBraceOrder) {
  const std::size_t n = s.size();
  if (group_order(s.sigma_table(), n) > max_order) return std::nullopt;

  // Right multiplication by the generator (e_x, sigma_x) and its inverse
  // (-e_{sigma_x^{-1}(x)}, sigma_x^{-1}):
  //   (v, pi)(e_x, sigma_x) = (v + e_{pi(x)}, pi sigma_x).
  struct Step {
    Point coord;
    int sign;
    const Perm* perm;
  };
  std::vector<Step> steps;
  for (Point x = 0; x < n; ++x) steps.push_back({x, +1, &s.sigma(x)});
  for (Point x = 0; x < n; ++x) steps.push_back({s.sigma_inv(x)(x), -1, &s.sigma_inv(x)});

  SocleLattice lattice(n);
  std::vector<Perm> perms;
  std::vector<IntVector> reps;
  std::unordered_map<Perm, Point> index;
  for (;;) {
    perms = {Perm::identity(n)};
    reps = {IntVector(n, 0)};
    index = {{perms.front(), 0}};
    bool grew = false;
    for (std::size_t head = 0; head < perms.size() && !grew; ++head) {
      for (const auto& step : steps) {
        IntVector w = reps[head];
        w[perms[head](step.coord)] += step.sign;
        w = lattice.reduce(std::move(w));
        Perm next = compose(perms[head], *step.perm);
        auto it = index.find(next);
        if (it == index.end()) {
          index.emplace(next, static_cast<Point>(perms.size()));
          perms.push_back(std::move(next));
          reps.push_back(std::move(w));
          continue;
        }
        if (w != reps[it->second]) {
          IntVector diff(n);
          for (std::size_t k = 0; k < n; ++k) diff[k] = w[k] - reps[it->second][k];
          lattice.insert(std::move(diff));
          grew = true;
          break;
        }
      }
    }
    if (!grew) break;
  }
  if (!lattice.full_rank()) throw std::logic_error("build_permutation_brace: socle lattice is not of full rank");

  const auto order = static_cast<Point>(perms.size());
  std::map<IntVector, Point> by_vector;
  for (Point i = 0; i < order; ++i) by_vector.emplace(reps[i], i);
  if (by_vector.size() != order) throw std::logic_error("build_permutation_brace: coset map is not injective");

  Table add(order, std::vector<Point>(order)), mul(order, std::vector<Point>(order));
  for (Point a = 0; a < order; ++a) {
    for (Point b = 0; b < order; ++b) {
      IntVector sum(n);
      for (std::size_t k = 0; k < n; ++k) sum[k] = reps[a][k] + reps[b][k];
      auto it = by_vector.find(lattice.reduce(std::move(sum)));
      if (it == by_vector.end()) throw std::logic_error("build_permutation_brace: coset sum not reached");
      add[a][b] = it->second;

      mul[a][b] = index.at(compose(perms[a], perms[b]));
      // the vector law (v + pi.w) must land in the same coset
      IntVector prod = reps[a];
      for (std::size_t k = 0; k < n; ++k) prod[perms[a](static_cast<Point>(k))] += reps[b][k];
      if (lattice.reduce(std::move(prod)) != reps[mul[a][b]])
        throw std::logic_error("build_permutation_brace: multiplication inconsistent with coset vectors");
    }
  }
  return PermutationBrace{FiniteBrace(std::move(add), std::move(mul)), std::move(perms), std::move(reps),
                          std::move(lattice)};
}

/// lambda_{sigma_x}(sigma_y) == sigma_{sigma_x(y)} in the computed brace.
inline bool check_lambda_on_generators(const Solution& s, const PermutationBrace& pb) {
  const auto n = static_cast<Point>(s.size());
  std::vector<Point> idx(n);
  for (Point x = 0; x < n; ++x) {
    auto i = pb.index_of(s.sigma(x));
    if (!i) return false;
    idx[x] = *i;
  }
  const auto& B = pb.brace;
  for (Point x = 0; x < n; ++x) {
    Point minus = B.neg(idx[x]);
    for (Point y = 0; y < n; ++y) {
      Point lam = B.add(minus, B.mul(idx[x], idx[y]));
      if (lam != idx[s.sigma(x)(y)]) return false;
    }
  }
  return true;
}

/// Lattice index equals |G(X,r)| from Schreier-Sims.
inline bool socle_index_check(const Solution& s, const SocleLattice& lattice) {
  return lattice.index() == group_order(s.sigma_table(), s.size());
}

}  // namespace ybe
