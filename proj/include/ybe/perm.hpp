#pragma once

// Permutations of {0..N-1}.
//
// Composition convention, used everywhere in this library:
//   compose(p, q)(i) == p(q(i))
// i.e. the right-hand factor is applied first.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ybe {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Perm {
 public:
  Perm() = default;

  /// Identity of the given degree.
  static Perm identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Perm(std::move(images), Trusted{});
  }

  /// Validates that `images` is a bijection of {0..N-1}.
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("Perm: degree must be >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (Point v : images_) {
      if (v >= images_.size() || seen[v])
        throw Error("Perm: images do not form a permutation");
      seen[v] = true;
    }
  }

  Perm(std::initializer_list<Point> images) : Perm(std::vector<Point>(images)) {}

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point at(Point i) const {
    if (i >= images_.size()) throw Error("Perm: point out of range");
    return images_[i];
  }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool fixes(Point i) const { return images_[i] == i; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // Skips validation; for results of operations on valid perms.
  struct Trusted {};
  Perm(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

 private:
  std::vector<Point> images_;
};

/// result(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p(q(static_cast<Point>(i)));
  return Perm(std::move(out), Perm::Trusted{});
}

inline Perm inverse(const Perm& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p(static_cast<Point>(i))] = static_cast<Point>(i);
  return Perm(std::move(out), Perm::Trusted{});
}

/// p^k for k >= 0.
inline Perm power(const Perm& p, std::uint64_t k) {
  Perm result = Perm::identity(p.degree());
  Perm base = p;
  while (k) {
    if (k & 1u) result = compose(result, base);
    base = compose(base, base);
    k >>= 1u;
  }
  return result;
}

/// Cycle lengths, in order of the smallest point of each cycle.
inline std::vector<std::size_t> cycle_lengths(const Perm& p) {
  std::vector<bool> seen(p.degree(), false);
  std::vector<std::size_t> lengths;
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

/// Least k >= 1 with p^k = id.
inline BigInt element_order(const Perm& p) {
  BigInt order = 1;
  for (std::size_t len : cycle_lengths(p)) {
    BigInt l = len;
    order = order / boost::multiprecision::gcd(order, l) * l;
  }
  return order;
}

/// Smallest set containing `point` closed under every generator (and hence
/// under their inverses, the generated group being finite). Sorted ascending.
inline std::vector<Point> orbit(std::span<const Perm> gens, Point point, std::size_t degree) {
  if (point >= degree) throw Error("orbit: point out of range");
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("orbit: degree mismatch");
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue{point};
  seen[point] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Point cur = queue[head];
    for (const auto& g : gens) {
      Point next = g(cur);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline std::vector<Point> orbit(std::span<const Perm> gens, Point point) {
  if (gens.empty()) throw Error("orbit: degree unknown for empty generator list");
  return orbit(gens, point, gens.front().degree());
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// True iff order = p^k for some k >= 0.
inline bool is_p_group(const BigInt& order, std::uint64_t p) {
  if (!is_prime(p)) throw Error("is_p_group: " + std::to_string(p) + " is not prime");
  if (order < 1) throw Error("is_p_group: order must be >= 1");
  BigInt rest = order;
  while (rest % p == 0) rest /= p;
  return rest == 1;
}

/// Prime divisors of n in ascending order; trial division up to `bound`
/// (any remaining cofactor > 1 is reported as well).
inline std::vector<std::uint64_t> prime_divisors(BigInt n, std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d <= bound && n > 1; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) {
    if (n > std::numeric_limits<std::uint64_t>::max())
      throw Error("prime_divisors: cofactor exceeds 64 bits");
    primes.push_back(static_cast<std::uint64_t>(n));
  }
  return primes;
}

}  // namespace ybe

template <>
struct std::hash<ybe::Perm> {
  std::size_t operator()(const ybe::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};
