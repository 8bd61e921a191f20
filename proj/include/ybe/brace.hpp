#pragma once

// Finite left braces as dense tables. (B, +) is an abelian group, (B, o) a
// group, and a o (b + c) + a = a o b + a o c for all a, b, c.

#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

inline constexpr std::size_t kMaxBraceTableSize = 4096;
inline constexpr std::size_t kMaxExhaustiveIdealSearch = 256;

using Table = std::vector<std::vector<Point>>;

class FiniteBrace {
 public:
  FiniteBrace(Table add, Table mul) : add_(std::move(add)), mul_(std::move(mul)) {
    const auto n = add_.size();
    if (n == 0) throw Error("FiniteBrace: empty table");
    if (n > kMaxBraceTableSize) throw Error("FiniteBrace: order exceeds table limit");
    if (mul_.size() != n) throw Error("FiniteBrace: table sizes differ");
    for (const auto* t : {&add_, &mul_})
      for (const auto& row : *t) {
        if (row.size() != n) throw Error("FiniteBrace: tables must be square");
        for (Point v : row)
          if (v >= n) throw Error("FiniteBrace: table entry out of range");
      }
    zero_ = find_identity(add_);
    one_ = find_identity(mul_);
  }

  std::size_t size() const { return add_.size(); }
  Point add(Point a, Point b) const { return add_[a][b]; }
  Point mul(Point a, Point b) const { return mul_[a][b]; }
  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }

  /// Neutral element of +, or size() if there is none.
  Point zero() const { return zero_; }
  /// Neutral element of o, or size() if there is none.
  Point one() const { return one_; }

  // The following assume verify_brace() holds.
  Point neg(Point a) const { return solve(add_, a, zero_); }
  Point sub(Point a, Point b) const { return add(a, neg(b)); }
  Point inv(Point a) const { return solve(mul_, a, one_); }

 private:
  Point find_identity(const Table& t) const {
    const auto n = static_cast<Point>(t.size());
    for (Point e = 0; e < n; ++e) {
      bool ok = true;
      for (Point a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
      if (ok) return e;
    }
    return n;
  }

  static Point solve(const Table& t, Point a, Point target) {
    const auto& row = t[a];
    auto it = std::find(row.begin(), row.end(), target);
    if (it == row.end()) throw Error("FiniteBrace: element has no inverse");
    return static_cast<Point>(it - row.begin());
  }

  Table add_, mul_;
  Point zero_ = 0, one_ = 0;
};

namespace detail {

inline bool is_group(const Table& t, Point e, bool abelian) {
  const auto n = static_cast<Point>(t.size());
  if (e >= n) return false;
  for (Point a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (Point b = 0; b < n; ++b) {
      if (seen[t[a][b]]) return false;  // rows must be bijective for inverses to exist
      seen[t[a][b]] = true;
      if (abelian && t[a][b] != t[b][a]) return false;
    }
  }
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

}  // namespace detail

/// Group axioms for both operations, shared neutral element, and the brace
/// identity a o (b + c) + a = a o b + a o c on all triples.
inline bool verify_brace(const FiniteBrace& B) {
  if (!detail::is_group(B.add_table(), B.zero(), true)) return false;
  if (!detail::is_group(B.mul_table(), B.one(), false)) return false;
  if (B.zero() != B.one()) return false;
  const auto n = static_cast<Point>(B.size());
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c)
        if (B.add(B.mul(a, B.add(b, c)), a) != B.add(B.mul(a, b), B.mul(a, c))) return false;
  return true;
}

/// lambda_a(b) = -a + a o b, checked to be an automorphism of (B, +).
inline Perm lambda(const FiniteBrace& B, Point a) {
  const auto n = static_cast<Point>(B.size());
  if (a >= n) throw Error("lambda: element out of range");
  std::vector<Point> images(n);
  Point minus_a = B.neg(a);
  for (Point b = 0; b < n; ++b) images[b] = B.add(minus_a, B.mul(a, b));
  Perm l(std::move(images));
  for (Point b = 0; b < n; ++b)
    for (Point c = 0; c < n; ++c)
      if (l(B.add(b, c)) != B.add(l(b), l(c))) throw Error("lambda: not an additive automorphism; brace is corrupt");
  return l;
}

inline std::vector<Perm> lambda_table(const FiniteBrace& B) {
  std::vector<Perm> out;
  out.reserve(B.size());
  for (Point a = 0; a < B.size(); ++a) out.push_back(lambda(B, a));
  return out;
}

/// A subset given as a membership mask.
using Subset = std::vector<bool>;

inline Subset subset_of(std::size_t n, std::initializer_list<Point> members) {
  Subset s(n, false);
  for (Point m : members) s.at(m) = true;
  return s;
}

inline std::vector<Point> members(const Subset& s) {
  std::vector<Point> out;
  for (Point i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

inline bool is_additive_subgroup(const FiniteBrace& B, const Subset& S) {
  if (S.size() != B.size() || !S[B.zero()]) return false;
  auto m = members(S);
  for (Point a : m)
    for (Point b : m)
      if (!S[B.sub(a, b)]) return false;
  return true;
}

inline bool is_lambda_stable(const FiniteBrace& B, const Subset& S) {
  auto m = members(S);
  for (Point a = 0; a < B.size(); ++a) {
    Point minus_a = B.neg(a);
    for (Point b : m)
      if (!S[B.add(minus_a, B.mul(a, b))]) return false;
  }
  return true;
}

inline bool is_left_ideal(const FiniteBrace& B, const Subset& S) {
  return is_additive_subgroup(B, S) && is_lambda_stable(B, S);
}

/// Normal subgroup of (B, o), lambda-stable. Such a set is necessarily an
/// additive subgroup as well; a violation of that means the tables are not a
/// brace and is reported as an error.
inline bool is_ideal(const FiniteBrace& B, const Subset& S) {
  if (S.size() != B.size() || !S[B.one()]) return false;
  auto m = members(S);
  for (Point a : m)
    for (Point b : m)
      if (!S[B.mul(a, B.inv(b))]) return false;
  for (Point g = 0; g < B.size(); ++g) {
    Point g_inv = B.inv(g);
    for (Point a : m)
      if (!S[B.mul(B.mul(g, a), g_inv)]) return false;
  }
  if (!is_lambda_stable(B, S)) return false;
  if (!is_additive_subgroup(B, S)) throw std::logic_error("is_ideal: ideal is not an additive subgroup");
  return true;
}

/// {a : a o b = a + b for all b}; asserted to be an ideal.
inline Subset socle(const FiniteBrace& B) {
  const auto n = static_cast<Point>(B.size());
  Subset s(n, false);
  for (Point a = 0; a < n; ++a) {
    bool in = true;
    for (Point b = 0; b < n && in; ++b) in = B.mul(a, b) == B.add(a, b);
    s[a] = in;
  }
  if (!is_ideal(B, s)) throw std::logic_error("socle: socle is not an ideal");
  return s;
}

/// Brace on the cosets a + I. Cosets are numbered by their smallest element.
struct QuotientBrace {
  FiniteBrace brace;
  std::vector<Point> coset_of;  // element -> coset index
};

inline QuotientBrace quotient_brace(const FiniteBrace& B, const Subset& I) {
  if (!is_ideal(B, I)) throw Error("quotient_brace: subset is not an ideal");
  const auto n = static_cast<Point>(B.size());
  constexpr auto unset = std::numeric_limits<Point>::max();
  std::vector<Point> coset_of(n, unset);
  std::vector<Point> reps;
  auto ideal = members(I);
  for (Point a = 0; a < n; ++a) {
    if (coset_of[a] != unset) continue;
    auto idx = static_cast<Point>(reps.size());
    reps.push_back(a);
    for (Point i : ideal) coset_of[B.add(a, i)] = idx;
  }
  const auto k = reps.size();
  Table add(k, std::vector<Point>(k)), mul(k, std::vector<Point>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      add[x][y] = coset_of[B.add(reps[x], reps[y])];
      mul[x][y] = coset_of[B.mul(reps[x], reps[y])];
    }
  QuotientBrace q{FiniteBrace(std::move(add), std::move(mul)), std::move(coset_of)};
  if (!verify_brace(q.brace)) throw std::logic_error("quotient_brace: quotient is not a brace");
  return q;
}

/// Smallest ideal containing `seed`: closure under +, -, every lambda_a and
/// conjugation in (B, o).
inline Subset ideal_closure(const FiniteBrace& B, std::span<const Point> seed) {
  const auto n = static_cast<Point>(B.size());
  Subset in(n, false);
  std::vector<Point> elems;
  std::vector<Point> work(seed.begin(), seed.end());
  work.push_back(B.zero());
  auto lambdas = lambda_table(B);
  std::vector<Point> inverses(n);
  for (Point g = 0; g < n; ++g) inverses[g] = B.inv(g);
  while (!work.empty()) {
    Point x = work.back();
    work.pop_back();
    if (in[x]) continue;
    in[x] = true;
    elems.push_back(x);
    work.push_back(B.neg(x));
    for (Point y : elems) work.push_back(B.add(x, y));
    for (Point a = 0; a < n; ++a) {
      work.push_back(lambdas[a](x));
      work.push_back(B.mul(B.mul(a, x), inverses[a]));
    }
  }
  return in;
}

enum class Simplicity { simple, not_simple, not_computed };

/// A nonzero brace is simple iff {0} and B are its only ideals, i.e. iff the
/// ideal generated by every nonzero element is B. Exhaustive only up to
/// kMaxExhaustiveIdealSearch elements.
inline Simplicity is_simple_brace(const FiniteBrace& B) {
  if (B.size() <= 1) throw Error("is_simple_brace: brace must be nonzero");
  if (B.size() > kMaxExhaustiveIdealSearch) return Simplicity::not_computed;
  for (Point g = 0; g < B.size(); ++g) {
    if (g == B.zero()) continue;
    Point seed[] = {g};
    auto ideal = ideal_closure(B, seed);
    if (std::find(ideal.begin(), ideal.end(), false) != ideal.end()) return Simplicity::not_simple;
  }
  return Simplicity::simple;
}

/// Trivial brace on Z/m: a o b = a + b.
inline FiniteBrace trivial_brace(std::size_t m) {
  Table add(m, std::vector<Point>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) add[a][b] = static_cast<Point>((a + b) % m);
  return FiniteBrace(add, add);
}

}  // namespace ybe
