#pragma once

// Solution congruences and simplicity.
//
// A partition of X is the kernel of an epimorphism of solutions exactly when
// it is compatible with both halves of r:
//   u ~ u', v ~ v'  =>  sigma_u(v) ~ sigma_u'(v')  and  gamma_v(u) ~ gamma_v'(u').
// Such a partition induces a solution on its blocks and the projection is an
// epimorphism; conversely the kernel of an epimorphism has this property.
//
// A solution with |X| > 1 is therefore simple iff its only congruences are
// the discrete and the full partition. Any proper non-discrete congruence C
// identifies some x != y, and then the smallest congruence containing (x, y)
// is contained in C, hence is not full. So it suffices to check that the
// principal congruence of every pair x < y is the full partition.

#include <atomic>
#include <deque>
#include <thread>

#include "ybe/solution.hpp"

namespace ybe {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// True if a merge happened.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t set_size(std::size_t x) { return size_[find(x)]; }

  Partition to_partition() {
    std::vector<std::size_t> labels(parent_.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = find(i);
    return Partition(labels);
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Smallest congruence containing all of `pairs`.
inline Partition congruence_closure(const Solution& s, std::span<const std::pair<Point, Point>> pairs) {
  const auto n = static_cast<Point>(s.size());
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    // (a, b) joins the generating set; push its images under every one-sided
    // substitution. Compatibility for general u ~ u', v ~ v' follows by
    // transitivity.
    for (Point z = 0; z < n; ++z) {
      work.emplace_back(s.sigma(a)(z), s.sigma(b)(z));
      work.emplace_back(s.sigma(z)(a), s.sigma(z)(b));
      work.emplace_back(s.gamma(a, z), s.gamma(b, z));
      work.emplace_back(s.gamma(z, a), s.gamma(z, b));
    }
  }
  return uf.to_partition();
}

inline Partition principal_congruence(const Solution& s, Point x, Point y) {
  check_point(s, x, "principal_congruence");
  check_point(s, y, "principal_congruence");
  std::pair<Point, Point> seed{x, y};
  return congruence_closure(s, std::span(&seed, 1));
}

/// True iff the partition is closed under the congruence rules.
inline bool is_congruence(const Solution& s, const Partition& part) {
  const auto n = static_cast<Point>(s.size());
  // Checking one-sided substitutions over all related pairs is equivalent to
  // the two-sided rule.
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      if (part.block_of(a) != part.block_of(b)) continue;
      for (Point z = 0; z < n; ++z) {
        if (part.block_of(s.sigma(a)(z)) != part.block_of(s.sigma(b)(z))) return false;
        if (part.block_of(s.sigma(z)(a)) != part.block_of(s.sigma(z)(b))) return false;
        if (part.block_of(s.gamma(a, z)) != part.block_of(s.gamma(b, z))) return false;
        if (part.block_of(s.gamma(z, a)) != part.block_of(s.gamma(z, b))) return false;
      }
    }
  }
  return true;
}

struct SimplicityReport {
  bool simple = false;
  std::size_t closures = 0;
  // First pair (in ascending order) whose principal congruence is proper.
  std::optional<std::pair<Point, Point>> witness;
};

/// Runs the principal congruence of every pair x < y, split over `threads`
/// workers. The verdict and witness do not depend on the thread count.
inline SimplicityReport simplicity_report(const Solution& s, unsigned threads = 1) {
  if (s.size() <= 1) throw Error("is_simple: simplicity is only defined for |X| > 1");
  const auto n = static_cast<Point>(s.size());
  std::vector<std::pair<Point, Point>> pairs;
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y) pairs.emplace_back(x, y);

  std::atomic<std::size_t> first_bad{pairs.size()};
  std::atomic<std::size_t> closures{0};
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < pairs.size(); i += stride) {
      if (i > first_bad.load()) return;
      closures.fetch_add(1);
      if (principal_congruence(s, pairs[i].first, pairs[i].second).block_count() != 1) {
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
  }

  SimplicityReport report;
  report.closures = closures.load();
  report.simple = first_bad.load() == pairs.size();
  if (!report.simple) report.witness = pairs[first_bad.load()];
  return report;
}

inline bool is_simple(const Solution& s, unsigned threads = 1) { return simplicity_report(s, threads).simple; }

/// For a simple solution: indecomposable when |X| > 2 and irretractable when
/// |X| is not prime. A false result indicates a bug upstream.
inline bool check_simplicity_corollaries(const Solution& s) {
  const auto n = s.size();
  bool indecomposable_ok = n <= 2 || is_indecomposable(s);
  bool irretractable_ok = is_prime(n) || is_irretractable(s);
  return indecomposable_ok && irretractable_ok;
}

}  // namespace ybe
