#pragma once

// Explicit families of solutions.
//
// Points are encoded mixed-radix with the leftmost coordinate most
// significant: for X = Z/r0 x Z/r1 x Z/r2 the point (x, y, z) has index
// (x * r1 + y) * r2 + z. The coordinates of every point are stored in
// Solution::labels.

#include <array>
#include <set>

#include "ybe/solution.hpp"

namespace ybe {

// Families are materialised as dense n x n tables.
inline constexpr std::size_t kMaxFamilySize = 4096;

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1u;
  }
  return result;
}

inline std::uint64_t checked_pow(std::uint64_t p, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint32_t>::max() / p) throw Error("parameter power is too large");
    r *= p;
  }
  return r;
}

inline void check_family_size(std::uint64_t size) {
  if (size > kMaxFamilySize)
    throw Error("instance has " + std::to_string(size) + " points; the table limit is " +
                std::to_string(kMaxFamilySize));
}

// Mixed-radix codec.
template <std::size_t K>
class Radix {
 public:
  explicit Radix(std::array<std::int64_t, K> radices) : radices_(radices) {
    size_ = 1;
    for (auto r : radices_) size_ *= static_cast<std::size_t>(r);
  }

  std::size_t size() const { return size_; }

  Point encode(std::array<std::int64_t, K> coords) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < K; ++k) idx = idx * radices_[k] + static_cast<std::size_t>(mod(coords[k], radices_[k]));
    return static_cast<Point>(idx);
  }

  std::array<std::int64_t, K> decode(Point idx) const {
    std::array<std::int64_t, K> coords{};
    std::size_t rest = idx;
    for (std::size_t k = K; k-- > 0;) {
      coords[k] = static_cast<std::int64_t>(rest % radices_[k]);
      rest /= radices_[k];
    }
    return coords;
  }

  std::vector<std::vector<std::int64_t>> labels() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      auto c = decode(static_cast<Point>(i));
      out.emplace_back(c.begin(), c.end());
    }
    return out;
  }

 private:
  std::array<std::int64_t, K> radices_;
  std::size_t size_;
};

// Builds the sigma table from a coordinate formula.
template <std::size_t K, class Formula>
Solution tabulate(const Radix<K>& radix, Formula&& formula) {
  const auto n = static_cast<Point>(radix.size());
  std::vector<Perm> sigma;
  sigma.reserve(n);
  for (Point a = 0; a < n; ++a) {
    auto ac = radix.decode(a);
    std::vector<Point> row(n);
    for (Point x = 0; x < n; ++x) row[x] = radix.encode(formula(ac, radix.decode(x)));
    sigma.emplace_back(std::move(row));
  }
  Solution s(std::move(sigma));
  s.labels = radix.labels();
  return s;
}

inline std::int64_t delta(bool equal) { return equal ? 1 : 0; }

}  // namespace detail

/// All sigma_x = id.
inline Solution trivial_solution(std::size_t n) {
  if (n < 1) throw Error("trivial_solution: n must be >= 1");
  detail::check_family_size(n);
  Solution s(std::vector<Perm>(n, Perm::identity(n)));
  s.family = FamilyInfo{"trivial", {{"n", n}}};
  return s;
}

/// Z/n with s(i, j) = (j - 1, i + 1): sigma_i(j) = j - 1.
inline Solution cyclic_solution(std::size_t n) {
  if (n < 1) throw Error("cyclic_solution: n must be >= 1");
  detail::check_family_size(n);
  std::vector<Point> shift(n);
  for (std::size_t j = 0; j < n; ++j) shift[j] = static_cast<Point>((j + n - 1) % n);
  Solution s(std::vector<Perm>(n, Perm(shift)));
  s.family = FamilyInfo{"cyclic", {{"n", n}}};
  return s;
}

/// A family (j_a) over Z/modulus.
struct JFamily {
  std::string tag;
  std::uint64_t modulus = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::int64_t a) const { return values[static_cast<std::size_t>(detail::mod(a, modulus))]; }
};

/// j_0 = 1 and j_a = m1 + 1 for a != 0, over Z/m.
inline JFamily j_family_remark22(std::uint64_t m, std::uint64_t m1) {
  JFamily j{"remark22", m, std::vector<std::int64_t>(m, static_cast<std::int64_t>((m1 + 1) % m))};
  j.values[0] = 1 % static_cast<std::int64_t>(m);
  return j;
}

/// j_0 = 1 and j_a = 0 for a != 0, over Z/m.
inline JFamily j_family_remark31(std::uint64_t m) {
  JFamily j{"remark31", m, std::vector<std::int64_t>(m, 0)};
  j.values[0] = 1 % static_cast<std::int64_t>(m);
  return j;
}

namespace detail {

// sigma_(a1,a2)(x, y) = (x + a2, y - j_{x + a2 - a1}) on (Z/m)^2.
inline Solution square_family(const JFamily& j) {
  const auto m = static_cast<std::int64_t>(j.modulus);
  check_family_size(static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m));
  Radix<2> radix({m, m});
  return tabulate(radix, [&](const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& c) {
    return std::array<std::int64_t, 2>{c[0] + a[1], c[1] - j[c[0] + a[1] - a[0]]};
  });
}

}  // namespace detail

/// Indecomposable, irretractable, non-simple solution on (Z/m)^2, m = m1 m2.
inline Solution remark22(std::uint64_t m, std::uint64_t m1, std::uint64_t m2) {
  if (m1 <= 1 || m2 <= 1) throw Error("remark22: m1 and m2 must be > 1");
  if (m != m1 * m2) throw Error("remark22: m must equal m1 * m2");
  Solution s = detail::square_family(j_family_remark22(m, m1));
  s.family = FamilyInfo{"remark22", {{"m", m}, {"m1", m1}, {"m2", m2}}};
  return s;
}

/// Simple solution on (Z/m)^2.
inline Solution remark31(std::uint64_t m) {
  if (m <= 1) throw Error("remark31: m must be > 1");
  Solution s = detail::square_family(j_family_remark31(m));
  s.family = FamilyInfo{"remark31", {{"m", m}}};
  return s;
}

/// Closed form of sigma^{-1}_(a,b,c)(x,y,z) for theorem23:
/// (x + c, y + 1, z + delta_{(a,b),(x,y)}), reduced mod (m, n, m).
inline std::array<std::int64_t, 3> theorem23_inverse_formula(std::int64_t m, std::int64_t n,
                                                             const std::array<std::int64_t, 3>& a,
                                                             const std::array<std::int64_t, 3>& x) {
  using detail::delta;
  using detail::mod;
  return {mod(x[0] + a[2], m), mod(x[1] + 1, n), mod(x[2] + delta(a[0] == x[0] && a[1] == x[1]), m)};
}

/// Indecomposable irretractable non-simple solution on Z/m x Z/n x Z/m with
/// epimorphism (a, b, c) -> b onto cyclic_solution(n).
inline Solution theorem23(std::uint64_t m, std::uint64_t n) {
  if (m <= 1 || n <= 1) throw Error("theorem23: m and n must be > 1");
  detail::check_family_size(m * n * m);
  const auto mm = static_cast<std::int64_t>(m);
  const auto nn = static_cast<std::int64_t>(n);
  detail::Radix<3> radix({mm, nn, mm});
  Solution s = detail::tabulate(radix, [&](const std::array<std::int64_t, 3>& a, const std::array<std::int64_t, 3>& x) {
    std::int64_t x1 = detail::mod(x[0] - a[2], mm);
    std::int64_t y1 = detail::mod(x[1] - 1, nn);
    return std::array<std::int64_t, 3>{x1, y1, x[2] - detail::delta(a[0] == x1 && a[1] == y1)};
  });
  for (Point ai = 0; ai < s.size(); ++ai)
    for (Point xi = 0; xi < s.size(); ++xi)
      if (s.sigma_inv(ai)(xi) != radix.encode(theorem23_inverse_formula(mm, nn, radix.decode(ai), radix.decode(xi))))
        throw std::logic_error("theorem23: table inverse disagrees with the closed form");
  s.family = FamilyInfo{"theorem23", {{"m", m}, {"n", n}}};
  return s;
}

/// Closed form of sigma^{-1}_(a,b,c)(x,y,z) for theorem_main:
/// (x + c, y + pi(x + c - a), z + delta_{a,x} delta_{b,y}) with pi reduction mod p.
inline std::array<std::int64_t, 3> theorem_main_inverse_formula(std::int64_t p, std::int64_t pn,
                                                                const std::array<std::int64_t, 3>& a,
                                                                const std::array<std::int64_t, 3>& x) {
  using detail::delta;
  using detail::mod;
  return {mod(x[0] + a[2], pn), mod(x[1] + mod(x[0] + a[2] - a[0], p), p),
          mod(x[2] + delta(a[0] == x[0] && a[1] == x[1]), pn)};
}

/// Simple solution of cardinality p^(2n+1) on Z/p^n x Z/p x Z/p^n.
inline Solution theorem_main(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw Error("theorem_main: p must be prime");
  if (n < 1) throw Error("theorem_main: n must be >= 1");
  const auto pn = static_cast<std::int64_t>(detail::checked_pow(p, n));
  const auto pp = static_cast<std::int64_t>(p);
  detail::check_family_size(static_cast<std::uint64_t>(pn) * p * static_cast<std::uint64_t>(pn));
  detail::Radix<3> radix({pn, pp, pn});
  Solution s = detail::tabulate(radix, [&](const std::array<std::int64_t, 3>& a, const std::array<std::int64_t, 3>& x) {
    std::int64_t x1 = detail::mod(x[0] - a[2], pn);
    std::int64_t y1 = detail::mod(x[1] + detail::mod(a[0] - x[0], pp), pp);
    return std::array<std::int64_t, 3>{x1, y1, x[2] - detail::delta(a[0] == x1 && a[1] == y1)};
  });
  for (Point ai = 0; ai < s.size(); ++ai)
    for (Point xi = 0; xi < s.size(); ++xi)
      if (s.sigma_inv(ai)(xi) != radix.encode(theorem_main_inverse_formula(pp, pn, radix.decode(ai), radix.decode(xi))))
        throw std::logic_error("theorem_main: table inverse disagrees with the closed form");
  s.family = FamilyInfo{"theorem_main", {{"p", p}, {"n", n}}};
  return s;
}

inline bool is_known_fermat_prime(std::uint64_t p) {
  return p == 3 || p == 5 || p == 17 || p == 257 || p == 65537;
}

/// Smallest u in Z/p^n of multiplicative order exactly q (q prime).
inline std::uint64_t find_order_q_multiplier(std::uint64_t p, std::uint64_t n, std::uint64_t q) {
  if (!is_prime(p) || p == 2) throw Error("find_order_q_multiplier: p must be an odd prime");
  if (!is_prime(q) || q == 2 || (p - 1) % q != 0)
    throw Error("find_order_q_multiplier: q must be an odd prime dividing p - 1");
  const std::uint64_t modulus = detail::checked_pow(p, n);
  for (std::uint64_t u = 2; u < modulus; ++u)
    if (detail::powmod(u, q, modulus) == 1) return u;
  throw Error("find_order_q_multiplier: no element of order q");
}

/// One representative per nonzero orbit of multiplication by `multiplier`,
/// chosen so that the set is closed under negation: scanning 1..N-1, the
/// smallest unclaimed element becomes a representative and its negative
/// immediately represents the negated orbit.
inline std::vector<std::uint64_t> orbit_reps_with_negation_pairing(std::uint64_t modulus, std::uint64_t multiplier) {
  if (modulus % 2 == 0) throw Error("orbit_reps_with_negation_pairing: modulus must be odd");
  std::vector<bool> claimed(modulus, false);
  auto claim_orbit = [&](std::uint64_t a) {
    std::uint64_t cur = a;
    do {
      claimed[cur] = true;
      cur = detail::mulmod(cur, multiplier, modulus);
    } while (cur != a);
  };
  std::vector<std::uint64_t> reps;
  for (std::uint64_t a = 1; a < modulus; ++a) {
    if (claimed[a]) continue;
    claim_orbit(a);
    std::uint64_t neg = modulus - a;
    if (claimed[neg]) throw std::logic_error("orbit_reps_with_negation_pairing: -a lies in the orbit of a");
    reps.push_back(a);
    reps.push_back(neg);
    claim_orbit(neg);
  }
  return reps;
}

/// j_0 = 1 and j_{t^k(rep)} = t^k(-1) + 1 for every representative.
inline JFamily build_j_family_42(std::uint64_t modulus, std::uint64_t multiplier, std::span<const std::uint64_t> reps) {
  JFamily j{"theorem42", modulus, std::vector<std::int64_t>(modulus, -1)};
  j.values[0] = 1 % static_cast<std::int64_t>(modulus);
  for (std::uint64_t rep : reps) {
    std::uint64_t point = rep;
    std::uint64_t image_of_minus_one = modulus - 1;
    do {
      if (j.values[point] != -1) throw Error("build_j_family_42: representatives share an orbit");
      j.values[point] = static_cast<std::int64_t>((image_of_minus_one + 1) % modulus);
      point = detail::mulmod(point, multiplier, modulus);
      image_of_minus_one = detail::mulmod(image_of_minus_one, multiplier, modulus);
    } while (point != rep);
  }
  if (std::find(j.values.begin(), j.values.end(), -1) != j.values.end())
    throw Error("build_j_family_42: representatives do not cover every orbit");
  return j;
}

/// Parameters and choices behind one theorem42 instance.
struct Theorem42Data {
  std::uint64_t p = 0, q = 0, n = 0;
  std::uint64_t modulus = 0;
  std::uint64_t multiplier = 0;
  std::vector<std::uint64_t> reps;
  JFamily j;
};

inline void validate_theorem42_params(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  if (!is_prime(p) || p == 2) throw Error("theorem42: p must be an odd prime");
  if (is_known_fermat_prime(p)) throw Error("theorem42: p must not be a Fermat prime");
  if (!is_prime(q) || q == 2 || (p - 1) % q != 0) throw Error("theorem42: q must be an odd prime dividing p - 1");
  if (n < 1) throw Error("theorem42: n must be >= 1");
}

inline Theorem42Data theorem42_data(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  validate_theorem42_params(p, q, n);
  Theorem42Data d;
  d.p = p;
  d.q = q;
  d.n = n;
  d.modulus = detail::checked_pow(p, n);
  d.multiplier = find_order_q_multiplier(p, n, q);
  d.reps = orbit_reps_with_negation_pairing(d.modulus, d.multiplier);
  d.j = build_j_family_42(d.modulus, d.multiplier, d.reps);
  return d;
}

/// sigma_(a1,a2)(c1,c2) = (t(c1) + a2, t(c2 - j_{t(c1) + a2 - a1})) on (Z/p^n)^2.
inline Solution theorem42(const Theorem42Data& d) {
  const auto N = static_cast<std::int64_t>(d.modulus);
  detail::check_family_size(d.modulus * d.modulus);
  const auto t = static_cast<std::int64_t>(d.multiplier);
  auto apply_t = [&](std::int64_t v) { return detail::mod(detail::mod(v, N) * t, N); };
  detail::Radix<2> radix({N, N});
  Solution s = detail::tabulate(radix, [&](const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& c) {
    std::int64_t first = apply_t(c[0]) + a[1];
    return std::array<std::int64_t, 2>{first, apply_t(c[1] - d.j[first - a[0]])};
  });
  s.family = FamilyInfo{"theorem42",
                        {{"p", d.p}, {"q", d.q}, {"n", d.n}, {"multiplier", d.multiplier}, {"reps", d.reps}}};
  return s;
}

inline Solution theorem42(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  validate_theorem42_params(p, q, n);
  detail::check_family_size(detail::checked_pow(p, 2 * n));
  return theorem42(theorem42_data(p, q, n));
}

/// V_a as the generator g of the subgroup gZ/N, g | N. Iterates
///   V_1 = <j_c - j_{c + t^z(a)}>,  V_m = V_{m-1} + <j_c - j_{c+v} : v in V_{m-1}>
/// to a fixpoint.
inline std::uint64_t compute_Va(const JFamily& j, std::uint64_t multiplier, std::uint64_t a) {
  const auto N = j.modulus;
  if (a % N == 0) throw Error("compute_Va: a must be nonzero");
  const auto sN = static_cast<std::int64_t>(N);
  auto absorb = [&](std::uint64_t g, std::int64_t shift) {
    for (std::int64_t c = 0; c < sN; ++c)
      g = std::gcd(g, static_cast<std::uint64_t>(detail::mod(j[c] - j[c + shift], sN)));
    return g;
  };
  std::uint64_t g = N;
  std::uint64_t orbit_point = a % N;
  do {
    g = absorb(g, static_cast<std::int64_t>(orbit_point));
    orbit_point = detail::mulmod(orbit_point, multiplier, N);
  } while (orbit_point != a % N);
  // Subgroups of Z/N form a finite chain under this iteration.
  for (std::uint64_t step = 0; step < N; ++step) {
    std::uint64_t next = g;
    for (std::uint64_t v = g; v < N; v += g) next = absorb(next, static_cast<std::int64_t>(v));
    if (next == g) break;
    g = next;
  }
  return g;
}

/// Primes dividing |G(X,r)| but not |X|. Requires an indecomposable solution.
inline std::vector<std::uint64_t> is_singular_witness(const Solution& s, const BigInt& group_order) {
  if (!is_indecomposable(s)) throw Error("is_singular_witness: solution is not indecomposable");
  std::vector<std::uint64_t> out;
  // prime divisors of the order of a group on |X| points are at most |X|
  for (auto prime : prime_divisors(group_order, s.size()))
    if (s.size() % prime != 0) out.push_back(prime);
  return out;
}

}  // namespace ybe
