#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ratlink {

using Int = boost::multiprecision::cpp_int;

/// Bad user input or out-of-domain argument (CLI exit code 2).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant, e.g. a non-exact division (CLI exit code 3).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Exact rational pair. den == 0 encodes infinity (num fixed to 1), which is a
/// legal intermediate of continued-fraction evaluation.
struct Fraction {
  Int num;
  Int den;

  Fraction() : num(0), den(1) {}
  Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) {
      num = 1;
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_infinity() const { return den == 0; }

  friend bool operator==(const Fraction& x, const Fraction& y) {
    return x.num == y.num && x.den == y.den;
  }
};

/// Irreducible fraction p/q identifying a rational link: q >= 1, gcd(|p|,q)=1,
/// |p| < q, except the unknot 1/1 (-1/1 normalizes to it as well).
class Rational {
 public:
  Rational(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (q_ == 0) throw domain_error("zero denominator");
    if (q_ < 0) {
      p_ = -p_;
      q_ = -q_;
    }
    Int g = gcd(abs(p_), q_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
    }
    if (abs(p_) == q_) {
      if (q_ != 1) throw internal_error("unreduced fraction");
      p_ = 1;  // -1/1 and 1/1 are the same trivial knot
    } else if (abs(p_) > q_) {
      throw domain_error("fraction out of range: |p/q| must not exceed 1");
    }
    if (p_ == 0) throw domain_error("zero numerator does not define a link");
  }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  bool is_unknot() const { return q_ == 1; }
  bool is_knot() const { return (q_ & 1) != 0; }   // odd q (includes unknot)
  bool is_link() const { return (q_ & 1) == 0; }   // even q, two components
  bool pq_even() const { return ((p_ & 1) == 0) || ((q_ & 1) == 0); }

  Fraction frac() const { return Fraction(p_, q_); }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.p_ == y.p_ && x.q_ == y.q_;
  }

 private:
  Int p_;
  Int q_;
};

/// Parses "[-]digits/digits" (signs tolerated on both parts, "-2/-3" -> 2/3).
inline Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw domain_error("cannot parse fraction: " + text);
  auto chk = [&](const std::string& s) {
    if (s.empty()) throw domain_error("cannot parse fraction: " + text);
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw domain_error("cannot parse fraction: " + text);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw domain_error("cannot parse fraction: " + text);
  };
  std::string ps = text.substr(0, slash), qs = text.substr(slash + 1);
  chk(ps);
  chk(qs);
  return Rational(Int(ps), Int(qs));
}

/// Canonical continued-fraction denominator sequence: all terms even, nonzero.
struct EvenCF {
  std::vector<long long> terms;

  size_t length() const { return terms.size(); }
  /// Knots have even-length canonical expansions, links odd-length.
  bool is_knot_cf() const { return terms.size() % 2 == 0; }

  friend bool operator==(const EvenCF& x, const EvenCF& y) {
    return x.terms == y.terms;
  }
};

/// Evaluates [b1,...,bn] = 1/(b1 + 1/(b2 + ...)) bottom-up in exact pair
/// arithmetic; 1/0 = infinity and 1/infinity = 0 are resolved en route, so
/// zero terms are tolerated even though canonical sequences never carry them.
inline Fraction eval_cf(const std::vector<long long>& terms) {
  Int num = 0, den = 1;  // value of the empty tail
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Int b = *it;
    // 1/(b + num/den) = den/(b*den + num)
    Int nn = den, nd = b * den + num;
    num = std::move(nn);
    den = std::move(nd);
  }
  return Fraction(std::move(num), std::move(den));
}

enum class Orientation { positive, negative, knot };

/// A rational link together with its orientation class. Knots carry the
/// `knot` label (their two orientations are isotopic).
struct OrientedLinkSpec {
  Rational fraction;
  Orientation orientation;
};

inline OrientedLinkSpec make_spec(Rational r, Orientation o) {
  if (r.is_knot()) return {std::move(r), Orientation::knot};
  if (o == Orientation::knot)
    throw domain_error("even denominator requires a link orientation");
  return {std::move(r), o};
}

/// p -> p - q (p > 0) or p + q (p < 0); flips the parity of the numerator and
/// switches between the two orientation classes of a link.
inline Rational numerator_shift(const Rational& r) {
  if (r.is_unknot()) throw domain_error("numerator shift undefined for 1/1");
  return Rational(r.p() > 0 ? Int(r.p() - r.q()) : Int(r.p() + r.q()), r.q());
}

/// Unique expansion of p/q (pq even, 0 < |p| < q) into even nonzero terms.
/// Step: pick the even b among floor(q/p), floor(q/p)+1, recurse on q/p - b.
inline EvenCF even_cf(const Rational& r) {
  if (r.is_unknot()) throw domain_error("1/1 has no even expansion");
  if (!r.pq_even())
    throw domain_error("odd*odd fraction: apply numerator_shift first");
  EvenCF cf;
  Int p = r.p(), q = r.q();
  while (p != 0) {
    Int b = floor_div(q, p);
    if ((b & 1) != 0) ++b;
    if (b == 0) throw internal_error("even_cf produced a zero term");
    cf.terms.push_back(b.convert_to<long long>());
    // q/p - b = (q - b*p)/p, irreducible since gcd(p, q) = 1
    Int np = q - b * p, nq = p;
    if (nq < 0) {
      np = -np;
      nq = -nq;
    }
    p = std::move(np);
    q = std::move(nq);
  }
  return cf;
}

/// Reversed sequence; corresponds to rotating the canonical diagram. The
/// evaluated numerators satisfy p*pbar = (-1)^(n+1) (mod q) where n is the
/// sequence length, since reversal transposes the transfer-matrix product.
/// For odd n (links) the reversed sequence yields the same HOMFLY
/// polynomial; for even n (knots) it yields the mirror.
inline EvenCF dual_cf(const EvenCF& cf) {
  EvenCF out = cf;
  std::reverse(out.terms.begin(), out.terms.end());
  return out;
}

namespace detail {

// Collapses zero terms in place: [.., x, 0, y, ..] -> [.., x+y, ..] and a
// trailing [.., x, 0] -> [..]. A leading zero is left alone; it is a transient
// state of the rewrite loop and disappears with the next rule application.
inline void collapse_zeros(std::vector<long long>& s) {
  for (size_t k = 0; k < s.size();) {
    if (s[k] != 0) {
      ++k;
      continue;
    }
    if (k == 0) {
      ++k;
      continue;
    }
    if (k + 1 == s.size()) {
      s.erase(s.end() - 2, s.end());  // x + 1/0 = infinity, 1/infinity = 0
      k = k >= 2 ? k - 2 : 0;
    } else {
      s[k - 1] += s[k + 1];
      s.erase(s.begin() + k, s.begin() + k + 2);
      k = k >= 2 ? k - 2 : 0;
    }
  }
}

}  // namespace detail

/// Converts an arbitrary nonzero-term sequence with even numerator*denominator
/// product into the canonical even expansion by local rewriting at the first
/// odd term s (t is its successor):
///   (1) [S,s,t,T] -> [S,s+1,-1,1-t,-T]   if t > 0
///   (2) [S,s,t,T] -> [S,s-1,1,-1-t,-T]   if t < 0
/// (the tail T is negated, which is what makes each step value-preserving),
/// plus zero collapsing. An all-even prefix followed by a single odd term
/// cannot occur: it would force an odd*odd fraction.
inline EvenCF to_even_cf_rewrite(const std::vector<long long>& terms) {
  Fraction value = eval_cf(terms);
  if (value.is_infinity() || value.num == 0 || abs(value.num) >= value.den)
    throw domain_error("sequence does not evaluate to a link fraction");
  if (((value.num & 1) != 0) && ((value.den & 1) != 0))
    throw domain_error("odd*odd value has no even expansion");

  std::vector<long long> s = terms;
  size_t guard = 1000 * (terms.size() + 10) + 100000;
  while (guard-- > 0) {
    detail::collapse_zeros(s);
    size_t j = 0;
    while (j < s.size() && s[j] % 2 == 0) ++j;
    if (j == s.size()) {
      if (!s.empty() && s[0] == 0)
        throw internal_error("rewrite stuck on a leading zero");
      EvenCF cf{std::move(s)};
      if (!(eval_cf(cf.terms) == value))
        throw internal_error("rewrite changed the fraction value");
      return cf;
    }
    if (j + 1 == s.size())
      throw internal_error("odd trailing term despite even value parity");
    const long long t = s[j + 1];
    const long long d = (t > 0) ? 1 : -1;  // rule (1) or rule (2)
    std::vector<long long> out(s.begin(), s.begin() + j);
    out.push_back(s[j] + d);
    out.push_back(-d);
    out.push_back(d - t);
    for (size_t m = j + 2; m < s.size(); ++m) out.push_back(-s[m]);
    s = std::move(out);
  }
  throw internal_error("rewrite did not terminate");
}

/// Oriented equivalence of two rational link specs: equal denominators and
/// p1 = p2 or p1*p2 = 1 modulo q (knots) / 2q (links, compared in the
/// positive-orientation normalization).
inline bool equivalent(const OrientedLinkSpec& s1, const OrientedLinkSpec& s2) {
  Rational r1 = s1.fraction, r2 = s2.fraction;
  if (r1.is_knot() != r2.is_knot()) return false;
  if (r1.is_unknot() || r2.is_unknot()) return r1 == r2;
  if (!r1.is_knot()) {
    if (s1.orientation == Orientation::negative) r1 = numerator_shift(r1);
    if (s2.orientation == Orientation::negative) r2 = numerator_shift(r2);
  }
  if (r1.q() != r2.q()) return false;
  Int m = r1.is_knot() ? r1.q() : 2 * r1.q();
  auto md = [&](Int x) { return ((x % m) + m) % m; };
  Int a = md(r1.p()), b = md(r2.p());
  return a == b || md(a * b) == 1;
}

}  // namespace ratlink
