#pragma once

#include <algorithm>
#include <vector>

#include "ratlink/laurent.hpp"
#include "ratlink/rational.hpp"

namespace ratlink {

// Seed values of the twist recursion: x0 is the unknot, x-1 the two-component
// unlink z^-1(a - a^-1).
inline Laurent2 seed_x0() { return Laurent2::one(); }
inline Laurent2 seed_xm1() {
  Laurent2 x = a_minus_ainv();
  Laurent2 r;
  for (const auto& [key, c] : x.terms()) r.add_term(c, key.second, -1);
  return r;
}

/// Twist recursion over the canonical expansion:
///   x_m = z * ladder(e_m b_m) * x_{m-1} + a^(e_m b_m) * x_{m-2},
/// with e_m = (-1)^(m-1), x_0 = 1, x_-1 = z^-1(a - a^-1).
inline Laurent2 homfly_recursive(const EvenCF& cf) {
  Laurent2 prev2 = seed_xm1();
  Laurent2 prev1 = seed_x0();
  for (size_t m = 1; m <= cf.terms.size(); ++m) {
    long long eb = (m % 2 == 1) ? cf.terms[m - 1] : -cf.terms[m - 1];
    Laurent2 lad = ladder(eb);
    Laurent2 zlad;
    for (const auto& [key, c] : lad.terms())
      zlad.add_term(c, key.second, key.first + 1);
    Laurent2 cur = zlad * prev1 +
                   Laurent2::monomial(1, static_cast<int>(eb), 0) * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

/// All strictly decreasing level sequences n = c_1 > ... > c_l with steps of
/// 1 or 2 ending at 0 or -1, never containing both; lexicographically sorted.
inline std::vector<std::vector<int>> enumerate_paths(int n) {
  if (n < 1) throw domain_error("path enumeration needs n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur{n};
  auto dfs = [&](auto&& self, int level) -> void {
    if (level == 0 || level == -1) {
      out.push_back(cur);
      return;
    }
    for (int step : {1, 2}) {
      int next = level - step;
      if (next < -1) continue;
      if (next == -1 && step == 1) continue;  // would pass through 0 first
      cur.push_back(next);
      self(self, next);
      cur.pop_back();
    }
  };
  dfs(dfs, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Path-sum form of the twist recursion: every path contributes
/// z^k(c) * x_{c_l} * prod ladder-factors (step-1 edges) * prod a-powers
/// (step-2 edges). The sum is accumulated by descending the levels once and
/// sharing path prefixes, so it stays polynomial although the number of
/// paths is Fibonacci in n; for small n it is byte-identical to summing the
/// enumerated paths one by one.
inline Laurent2 homfly_pathsum(const EvenCF& cf) {
  const int n = static_cast<int>(cf.terms.size());
  if (n == 0) throw domain_error("empty expansion");
  // arrive[c + 1] = sum over partial paths n = c_1 > ... > c of the
  // accumulated factors, z recorded per step-1 edge as it is taken
  std::vector<Laurent2> arrive(n + 2);
  arrive[n + 1] = Laurent2::one();
  for (int c = n; c >= 1; --c) {
    const Laurent2& cur = arrive[c + 1];
    if (cur.is_zero()) continue;
    long long eb = (c % 2 == 1) ? cf.terms[c - 1] : -cf.terms[c - 1];
    Laurent2 lad = ladder(eb);
    Laurent2 zlad;
    for (const auto& [key, co] : lad.terms())
      zlad.add_term(co, key.second, key.first + 1);
    arrive[c] += cur * zlad;  // step to c - 1
    if (c - 2 >= -1)          // step to c - 2
      arrive[c - 1] += cur * Laurent2::monomial(1, static_cast<int>(eb), 0);
  }
  return arrive[1] + arrive[0] * seed_xm1();
}

/// rho_k: sum over subsets C of {1..n} with C and C-1 disjoint and
/// |C| = (n-k)/2 of
///   prod_{m in C} a^((-1)^(m+1) b_m) *
///   prod_{m not in C union (C-1)} (1 - a^((-1)^(m+1) b_m)).
inline Laurent2 rho(const EvenCF& cf, int k) {
  const int n = static_cast<int>(cf.terms.size());
  if ((n - k) % 2 != 0 || n - k < 0)
    throw domain_error("rho parity mismatch between n and k");
  const int want = (n - k) / 2;
  auto signed_b = [&](int m) {  // m is 1-based
    return (m % 2 == 1) ? cf.terms[m - 1] : -cf.terms[m - 1];
  };
  Laurent2 sum;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int m, int count) -> void {
    if (count == want) {
      Laurent2 term = Laurent2::one();
      size_t ci = 0;
      for (int j = 1; j <= n; ++j) {
        bool in_c = ci < chosen.size() && chosen[ci] == j;
        if (in_c) ++ci;
        bool in_cm1 =
            std::binary_search(chosen.begin(), chosen.end(), j + 1);
        long long eb = signed_b(j);
        if (in_c) {
          term *= Laurent2::monomial(1, static_cast<int>(eb), 0);
        } else if (!in_cm1) {
          Laurent2 f = Laurent2::one();
          f.add_term(-1, static_cast<int>(eb), 0);
          term *= f;
        }
      }
      sum += term;
      return;
    }
    if (m > n || n - m + 1 < want - count) return;
    // skip m
    self(self, m + 1, count);
    // take m, then m+1 is excluded (C and C-1 disjoint)
    chosen.push_back(m);
    self(self, m + 2, count + 1);
    chosen.pop_back();
  };
  dfs(dfs, 1, 0);
  return sum;
}

/// All rho values at once, indexed by |C| = (n-k)/2. Computed left to right
/// with the membership of the current index as state, so the admissible
/// subsets (no two consecutive members) are shared rather than enumerated.
/// Agrees with rho(cf, k) term by term.
inline std::vector<Laurent2> rho_all(const EvenCF& cf) {
  const int n = static_cast<int>(cf.terms.size());
  auto factor_out = [&](int m) {  // m not in C union (C-1), 1-based
    long long eb = (m % 2 == 1) ? cf.terms[m - 1] : -cf.terms[m - 1];
    Laurent2 f = Laurent2::one();
    f.add_term(-1, static_cast<int>(eb), 0);
    return f;
  };
  auto factor_in = [&](int m) {  // m in C
    long long eb = (m % 2 == 1) ? cf.terms[m - 1] : -cf.terms[m - 1];
    return Laurent2::monomial(1, static_cast<int>(eb), 0);
  };
  const int cmax = (n + 1) / 2;
  // dp[in][size]: partial sums over prefixes 1..m; `in` flags m in C; the
  // factor of an index outside C is applied once the next membership is known
  std::vector<std::vector<Laurent2>> dp(2,
                                        std::vector<Laurent2>(cmax + 1));
  if (n == 0) return {Laurent2::one()};
  dp[0][0] = Laurent2::one();
  dp[1][1] = factor_in(1);
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<Laurent2>> nx(2,
                                          std::vector<Laurent2>(cmax + 1));
    for (int in = 0; in < 2; ++in)
      for (int sz = 0; sz <= cmax; ++sz) {
        const Laurent2& cur = dp[in][sz];
        if (cur.is_zero()) continue;
        // m joins C: forbidden after a member (C and C-1 disjoint); the
        // (m-1)-factor is dropped because m-1 lands in C-1
        if (in == 0 && sz + 1 <= cmax)
          nx[1][sz + 1] += cur * factor_in(m);
        // m stays out: m-1, if outside C, now definitely gets its factor
        nx[0][sz] += (in == 1) ? cur : cur * factor_out(m - 1);
      }
    dp = std::move(nx);
  }
  std::vector<Laurent2> out(cmax + 1);
  for (int sz = 0; sz <= cmax; ++sz)
    out[sz] = dp[1][sz] + dp[0][sz] * factor_out(n);
  return out;
}

enum class LinkKind { knot, link };

/// Grouped closed form: sum over k of z^k (a - a^-1)^-k rho_k, with k even
/// from 0 (knots) or odd from -1 (links). The k = -1 term multiplies by
/// (a - a^-1) instead of dividing.
inline Laurent2 homfly_grouped(const EvenCF& cf, LinkKind kind) {
  const int n = static_cast<int>(cf.terms.size());
  if ((kind == LinkKind::knot) != (n % 2 == 0))
    throw domain_error("link kind inconsistent with expansion length");
  Laurent2 sum;
  const std::vector<Laurent2> rhos = rho_all(cf);
  for (int k = (kind == LinkKind::knot) ? 0 : -1; k <= n; k += 2) {
    const Laurent2& r = rhos[(n - k) / 2];
    if (k == -1) {
      Laurent2 prod = r * a_minus_ainv();
      for (const auto& [key, c] : prod.terms())
        sum.add_term(c, key.second, key.first - 1);
    } else {
      Laurent2 q = div_exact_a_minus_ainv(r, k);
      for (const auto& [key, c] : q.terms())
        sum.add_term(c, key.second, key.first + k);
    }
  }
  return sum;
}

inline Laurent2 homfly_grouped(const EvenCF& cf) {
  return homfly_grouped(
      cf, cf.is_knot_cf() ? LinkKind::knot : LinkKind::link);
}

/// Closed form for the torus link T(2,n) with counter-directed strands:
/// z^-1 a^n (a - a^-1) + z * ladder(n).
inline Laurent2 torus_homfly(long long n) {
  if (n % 2 != 0) throw domain_error("torus formula requires even n");
  Laurent2 head = a_minus_ainv();
  Laurent2 sum;
  for (const auto& [key, c] : head.terms())
    sum.add_term(c, key.second + static_cast<int>(n), key.first - 1);
  Laurent2 lad = ladder(n);
  for (const auto& [key, c] : lad.terms())
    sum.add_term(c, key.second, key.first + 1);
  return sum;
}

enum class Method { recursive, pathsum, grouped };

/// Top-level evaluator: normalizes the input (odd-numerator knots and
/// negative-orientation links go through the numerator shift), expands, and
/// dispatches. All three methods return identical polynomials.
inline Laurent2 homfly(const OrientedLinkSpec& spec,
                       Method method = Method::recursive) {
  Rational r = spec.fraction;
  if (r.is_unknot()) return Laurent2::one();
  if (r.is_knot()) {
    if ((r.p() & 1) != 0) r = numerator_shift(r);
  } else if (spec.orientation == Orientation::negative) {
    r = numerator_shift(r);
  }
  EvenCF cf = even_cf(r);
  switch (method) {
    case Method::recursive:
      return homfly_recursive(cf);
    case Method::pathsum:
      return homfly_pathsum(cf);
    case Method::grouped:
      return homfly_grouped(cf);
  }
  throw internal_error("unknown method");
}

}  // namespace ratlink
