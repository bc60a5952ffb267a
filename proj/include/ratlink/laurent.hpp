#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ratlink/rational.hpp"

namespace ratlink {

/// Sparse exact Laurent polynomial in (a, z). Terms are kept in canonical
/// order (ascending z power, then ascending a power) and never store zero
/// coefficients.
class Laurent2 {
 public:
  using Key = std::pair<int, int>;  // (z power, a power)
  using Map = std::map<Key, Int>;

  Laurent2() = default;

  static Laurent2 zero() { return Laurent2(); }
  static Laurent2 one() { return monomial(1, 0, 0); }

  static Laurent2 monomial(Int coeff, int apow, int zpow) {
    Laurent2 x;
    if (coeff != 0) x.t_[{zpow, apow}] = std::move(coeff);
    return x;
  }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Int& coeff, int apow, int zpow) {
    if (coeff == 0) return;
    auto it = t_.find({zpow, apow});
    if (it == t_.end()) {
      t_[{zpow, apow}] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) t_.erase(it);
    }
  }

  Laurent2& operator+=(const Laurent2& o) {
    for (const auto& [k, c] : o.t_) add_term(c, k.second, k.first);
    return *this;
  }

  friend Laurent2 operator+(Laurent2 x, const Laurent2& y) { return x += y; }

  Laurent2 operator-() const {
    Laurent2 x = *this;
    for (auto& [k, c] : x.t_) c = -c;
    return x;
  }

  Laurent2& operator-=(const Laurent2& o) { return *this += -o; }
  friend Laurent2 operator-(Laurent2 x, const Laurent2& y) { return x -= y; }

  friend Laurent2 operator*(const Laurent2& x, const Laurent2& y) {
    Laurent2 r;
    for (const auto& [kx, cx] : x.t_)
      for (const auto& [ky, cy] : y.t_)
        r.add_term(cx * cy, kx.second + ky.second, kx.first + ky.first);
    return r;
  }

  Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }

  Laurent2 pow(int k) const {
    if (k < 0) throw internal_error("negative power of a Laurent2");
    Laurent2 r = one(), b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      if (k > 1) b *= b;
    }
    return r;
  }

  friend bool operator==(const Laurent2& x, const Laurent2& y) {
    return x.t_ == y.t_;
  }

 private:
  Map t_;
};

/// a - a^-1, the skein denominator.
inline Laurent2 a_minus_ainv() {
  Laurent2 x = Laurent2::monomial(1, 1, 0);
  x.add_term(-1, -1, 0);
  return x;
}

/// Expanded Laurent form of (1 - a^n)/(a - a^-1) for even n:
/// -a - a^3 - ... - a^(n-1) when n > 0, a^-1 + a^-3 + ... + a^(n+1) when
/// n < 0, zero when n = 0.
inline Laurent2 ladder(long long n) {
  if (n % 2 != 0) throw domain_error("ladder requires an even twist count");
  Laurent2 x;
  if (n > 0)
    for (long long e = 1; e <= n - 1; e += 2)
      x.add_term(-1, static_cast<int>(e), 0);
  else
    for (long long e = -1; e >= n + 1; e -= 2)
      x.add_term(1, static_cast<int>(e), 0);
  return x;
}

namespace detail {

// Exact division of a univariate Laurent coefficient map by (v - v^-1),
// processing from the top exponent down. Exponents dipping below the input
// minimum signal a nonzero remainder.
inline std::map<int, Int> div_map_v_minus_vinv(std::map<int, Int> f) {
  std::map<int, Int> g;
  if (f.empty()) return g;
  const int emin = f.begin()->first;
  while (!f.empty()) {
    auto top = std::prev(f.end());
    int e = top->first;
    if (e < emin)
      throw internal_error("non-exact division by (v - v^-1)");
    Int c = top->second;
    f.erase(top);
    g[e - 1] += c;
    if (g[e - 1] == 0) g.erase(e - 1);
    auto it = f.find(e - 2);
    if (it == f.end()) {
      f[e - 2] = c;
    } else {
      it->second += c;
      if (it->second == 0) f.erase(it);
    }
  }
  return g;
}

}  // namespace detail

/// Exact quotient x / (a - a^-1)^k; throws internal_error when the division
/// leaves a remainder (that always indicates a formula bug, never valid data).
inline Laurent2 div_exact_a_minus_ainv(const Laurent2& x, int k) {
  if (k < 0) throw domain_error("negative division power");
  Laurent2 r = x;
  for (int step = 0; step < k; ++step) {
    // split by z power, divide each a-slice
    std::map<int, std::map<int, Int>> slices;
    for (const auto& [key, c] : r.terms()) slices[key.first][key.second] = c;
    Laurent2 q;
    for (auto& [zp, slice] : slices)
      for (const auto& [ap, c] : detail::div_map_v_minus_vinv(std::move(slice)))
        q.add_term(c, ap, zp);
    r = std::move(q);
  }
  return r;
}

/// Mirror reflection: a -> -a^-1, z -> z.
inline Laurent2 mirror_subst(const Laurent2& x) {
  Laurent2 r;
  for (const auto& [key, c] : x.terms()) {
    int i = key.second;
    r.add_term((i % 2 == 0) ? c : -c, -i, key.first);
  }
  return r;
}

/// Univariate exact Laurent polynomial with a variable tag. Tag A is the
/// bracket variable, s stands for t^(1/2) in Jones values, t for Conway.
class Laurent1 {
 public:
  enum class Var { A, S, T };
  using Map = std::map<int, Int>;

  explicit Laurent1(Var v) : var_(v) {}

  static Laurent1 monomial(Var v, Int coeff, int pow) {
    Laurent1 x(v);
    if (coeff != 0) x.t_[pow] = std::move(coeff);
    return x;
  }
  static Laurent1 one(Var v) { return monomial(v, 1, 0); }

  Var var() const { return var_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Int& coeff, int pow) {
    if (coeff == 0) return;
    auto it = t_.find(pow);
    if (it == t_.end()) {
      t_[pow] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) t_.erase(it);
    }
  }

  Laurent1& operator+=(const Laurent1& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(c, e);
    return *this;
  }
  friend Laurent1 operator+(Laurent1 x, const Laurent1& y) { return x += y; }

  Laurent1 operator-() const {
    Laurent1 x = *this;
    for (auto& [e, c] : x.t_) c = -c;
    return x;
  }
  Laurent1& operator-=(const Laurent1& o) { return *this += -o; }
  friend Laurent1 operator-(Laurent1 x, const Laurent1& y) { return x -= y; }

  friend Laurent1 operator*(const Laurent1& x, const Laurent1& y) {
    x.check(y);
    Laurent1 r(x.var_);
    for (const auto& [ex, cx] : x.t_)
      for (const auto& [ey, cy] : y.t_) r.add_term(cx * cy, ex + ey);
    return r;
  }
  Laurent1& operator*=(const Laurent1& o) { return *this = *this * o; }

  Laurent1 pow(int k) const {
    if (k < 0) throw internal_error("negative power of a Laurent1");
    Laurent1 r = one(var_), b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      if (k > 1) b *= b;
    }
    return r;
  }

  friend bool operator==(const Laurent1& x, const Laurent1& y) {
    return x.var_ == y.var_ && x.t_ == y.t_;
  }

 private:
  void check(const Laurent1& o) const {
    if (var_ != o.var_) throw internal_error("mixed Laurent1 variable tags");
  }

  Var var_;
  Map t_;
};

/// Conway reduction: a = 1, z renamed to t.
inline Laurent1 conway_reduce(const Laurent2& x) {
  Laurent1 r(Laurent1::Var::T);
  for (const auto& [key, c] : x.terms()) r.add_term(c, key.first);
  return r;
}

/// Jones reduction via a = t^-1, z = t^(1/2) - t^(-1/2), expressed in
/// s = t^(1/2): a = s^-2, z = s - s^-1. Negative z powers are cleared by
/// exact division, so the result is an honest Laurent polynomial in s.
inline Laurent1 jones_reduce(const Laurent2& x) {
  using V = Laurent1::Var;
  if (x.is_zero()) return Laurent1(V::S);
  int zmin = x.terms().begin()->first.first;
  int shift = zmin < 0 ? -zmin : 0;
  Laurent1 sms = Laurent1::monomial(V::S, 1, 1);
  sms.add_term(-1, -1);  // s - s^-1
  Laurent1 num(V::S);
  std::map<int, Laurent1> zpow_cache;
  for (const auto& [key, c] : x.terms()) {
    auto [zp, ap] = key;
    auto it = zpow_cache.find(zp);
    if (it == zpow_cache.end())
      it = zpow_cache.emplace(zp, sms.pow(zp + shift)).first;
    Laurent1 term = it->second;
    term *= Laurent1::monomial(V::S, c, -2 * ap);
    num += term;
  }
  for (int i = 0; i < shift; ++i) {
    Laurent1 q(V::S);
    for (const auto& [e, c] : detail::div_map_v_minus_vinv(num.terms()))
      q.add_term(c, e);
    num = std::move(q);
  }
  return num;
}

/// Whether a Jones value has integer t powers only (even s exponents).
inline bool even_s_powers_only(const Laurent1& j) {
  for (const auto& [e, c] : j.terms())
    if (e % 2 != 0) return false;
  return true;
}

/// Knot determinant |J(-1)|: the Jones value at t = -1, i.e. s^2 = -1.
inline Int determinant(const Laurent2& x) {
  Laurent1 j = jones_reduce(x);
  Int v = 0;
  for (const auto& [e, c] : j.terms()) {
    if (e % 2 != 0)
      throw domain_error("determinant is defined for knots only");
    v += ((e / 2) % 2 == 0) ? c : -c;
  }
  return abs(v);
}

namespace detail {

inline void append_apoly_term(std::string& out, bool first, const Int& c,
                              int apow, const char* var) {
  Int ac = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += (c < 0) ? " - " : " + ";
  }
  bool unit = (ac == 1);
  if (!unit || apow == 0) out += ac.str();
  if (apow != 0) {
    if (!unit) out += "*";
    out += var;
    if (apow != 1) out += "^" + std::to_string(apow);
  }
}

}  // namespace detail

/// Frozen canonical rendering: z groups ascending, a powers ascending inside
/// each group; "z^-1*(-a + a^3) + z*(-a)" style.
inline std::string to_canonical_string(const Laurent2& x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto it = x.terms().begin();
  while (it != x.terms().end()) {
    int zp = it->first.first;
    std::string group;
    bool first = true;
    for (; it != x.terms().end() && it->first.first == zp; ++it) {
      detail::append_apoly_term(group, first, it->second, it->first.second,
                                "a");
      first = false;
    }
    if (!out.empty()) out += " + ";
    if (zp == 0) {
      out += group;
    } else {
      out += "z";
      if (zp != 1) out += "^" + std::to_string(zp);
      out += "*(" + group + ")";
    }
  }
  return out;
}

inline std::string to_canonical_string(const Laurent1& x) {
  const char* var = x.var() == Laurent1::Var::A   ? "A"
                    : x.var() == Laurent1::Var::S ? "s"
                                                  : "t";
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    detail::append_apoly_term(out, first, c, e, var);
    first = false;
  }
  return out;
}

/// JSON rendering: canonical-order array of {"a": i, "z": j, "c": "coeff"}.
inline std::string to_json_string(const Laurent2& x) {
  std::string out = "[";
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    if (!first) out += ",";
    first = false;
    out += "{\"a\":" + std::to_string(key.second) +
           ",\"z\":" + std::to_string(key.first) + ",\"c\":\"" + c.str() +
           "\"}";
  }
  return out + "]";
}

inline std::string to_json_string(const Laurent1& x) {
  const char* var = x.var() == Laurent1::Var::A   ? "A"
                    : x.var() == Laurent1::Var::S ? "s"
                                                  : "t";
  std::string out = "[";
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    if (!first) out += ",";
    first = false;
    out += std::string("{\"") + var + "\":" + std::to_string(e) + ",\"c\":\"" +
           c.str() + "\"}";
  }
  return out + "]";
}

/// Jones values of knots have even s exponents; rewrite them in t.
inline Laurent1 s_to_t(const Laurent1& j) {
  if (j.var() != Laurent1::Var::S)
    throw internal_error("s_to_t expects an s-polynomial");
  Laurent1 r(Laurent1::Var::T);
  for (const auto& [e, c] : j.terms()) {
    if (e % 2 != 0)
      throw domain_error("half-integer t powers: link Jones stays in s");
    r.add_term(c, e / 2);
  }
  return r;
}

}  // namespace ratlink
