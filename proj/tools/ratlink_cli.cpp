// Command-line front end: invariants of a single fraction, table generation,
// and the verification sweeps.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratlink/ratlink.hpp"

using namespace ratlink;

namespace {

// --- rendering --------------------------------------------------------------

std::string latex_coeff(const Int& c, bool first, bool lone) {
  Int ac = abs(c);
  std::string out;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += (c < 0) ? " - " : " + ";
  }
  if (ac != 1 || lone) out += ac.str();
  return out;
}

std::string latex_pow(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^{" + std::to_string(e) + "}";
}

std::string to_latex(const Laurent2& x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto it = x.terms().begin();
  while (it != x.terms().end()) {
    int zp = it->first.first;
    std::string group;
    bool first = true;
    for (; it != x.terms().end() && it->first.first == zp; ++it) {
      group += latex_coeff(it->second, first, it->first.second == 0);
      group += latex_pow("a", it->first.second);
      first = false;
    }
    if (!out.empty()) out += " + ";
    if (zp == 0) {
      out += group;
    } else {
      out += latex_pow("z", zp) + "\\left(" + group + "\\right)";
    }
  }
  return out;
}

std::string to_latex(const Laurent1& x) {
  const char* var = x.var() == Laurent1::Var::A   ? "A"
                    : x.var() == Laurent1::Var::S ? "s"
                                                  : "t";
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    out += latex_coeff(c, first, e == 0);
    out += latex_pow(var, e);
    first = false;
  }
  return out;
}

// Jones values of knots use integer t powers; links stay in s = t^(1/2).
Laurent1 jones_for_output(const OrientedLinkSpec& s) {
  Laurent1 j = jones_reduce(homfly(s));
  if (s.fraction.is_knot()) return s_to_t(j);
  return j;
}

std::string orientation_label(const OrientedLinkSpec& s) {
  switch (s.orientation) {
    case Orientation::positive:
      return "pos";
    case Orientation::negative:
      return "neg";
    default:
      return "knot";
  }
}

// --- invariant command ------------------------------------------------------

int cmd_invariant(const std::string& kind, const std::string& fraction,
                  const std::string& orientation, const std::string& method,
                  const std::string& format) {
  Rational r = parse_fraction(fraction);
  Orientation o = Orientation::knot;
  if (r.is_link())
    o = orientation == "neg" ? Orientation::negative : Orientation::positive;
  OrientedLinkSpec s = make_spec(std::move(r), o);
  Method m = method == "pathsum"   ? Method::pathsum
             : method == "grouped" ? Method::grouped
                                   : Method::recursive;
  if (kind == "homfly") {
    Laurent2 h = homfly(s, m);
    if (format == "json")
      std::cout << to_json_string(h) << "\n";
    else if (format == "latex")
      std::cout << to_latex(h) << "\n";
    else
      std::cout << to_canonical_string(h) << "\n";
    return 0;
  }
  if (kind == "det") {
    if (!s.fraction.is_knot())
      throw domain_error("determinant is defined for knots only");
    Int d = determinant(homfly(s, m));
    if (format == "json")
      std::cout << "{\"det\":\"" << d.str() << "\"}\n";
    else
      std::cout << d.str() << "\n";
    return 0;
  }
  Laurent1 v = kind == "conway" ? conway_reduce(homfly(s, m))
                                : jones_for_output(s);
  if (format == "json")
    std::cout << to_json_string(v) << "\n";
  else if (format == "latex")
    std::cout << to_latex(v) << "\n";
  else
    std::cout << to_canonical_string(v) << "\n";
  return 0;
}

// --- table command ----------------------------------------------------------

struct TableRow {
  long long p, q;
  std::string orientation;
  std::string alt_numerator;  // odd-numerator cross-reference for knots
  std::string homfly, jones, conway, det;
};

std::vector<TableRow> build_table(long long max_q, bool dedupe) {
  std::vector<TableRow> rows;
  std::vector<OrientedLinkSpec> kept;
  for (long long q = 2; q <= max_q; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      // knots are listed once, under the even-numerator representative
      if (q % 2 == 1 && p % 2 == 1) continue;
      std::vector<Orientation> os;
      if (q % 2 == 1)
        os = {Orientation::knot};
      else
        os = {Orientation::positive, Orientation::negative};
      for (Orientation o : os) {
        OrientedLinkSpec s = make_spec(Rational(p, q), o);
        if (dedupe) {
          bool dup = false;
          for (const auto& k : kept)
            if (equivalent(k, s)) {
              dup = true;
              break;
            }
          if (dup) continue;
          kept.push_back(s);
        }
        Laurent2 h = homfly(s);
        TableRow row;
        row.p = p;
        row.q = q;
        row.orientation = orientation_label(s);
        if (q % 2 == 1) {
          Rational alt = numerator_shift(s.fraction);
          row.alt_numerator = alt.p().str();
        }
        row.homfly = to_canonical_string(h);
        row.jones = to_canonical_string(jones_for_output(s));
        row.conway = to_canonical_string(conway_reduce(h));
        if (q % 2 == 1) row.det = determinant(h).str();
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void render_table(const std::vector<TableRow>& rows, const std::string& format,
                  std::ostream& os) {
  if (format == "csv") {
    os << "p,q,orientation,homfly,jones,conway,det\n";
    for (const auto& r : rows)
      os << r.p << "," << r.q << "," << r.orientation << ","
         << csv_quote(r.homfly) << "," << csv_quote(r.jones) << ","
         << csv_quote(r.conway) << "," << r.det << "\n";
  } else if (format == "md") {
    os << "| p/q | orientation | p' | HOMFLY | Jones | Conway | det |\n"
       << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      os << "| " << r.p << "/" << r.q << " | " << r.orientation << " | "
         << r.alt_numerator << " | " << r.homfly << " | " << r.jones << " | "
         << r.conway << " | " << r.det << " |\n";
  } else if (format == "latex") {
    os << "\\begin{tabular}{lll}\n\\hline\n"
       << "$p/q$ & orientation & $P$ \\\\\n\\hline\n";
    for (const auto& r : rows) {
      OrientedLinkSpec s =
          make_spec(Rational(r.p, r.q), r.orientation == "neg"
                                            ? Orientation::negative
                                        : r.orientation == "pos"
                                            ? Orientation::positive
                                            : Orientation::knot);
      os << "$" << r.p << "/" << r.q << "$ & " << r.orientation << " & $"
         << to_latex(homfly(s)) << "$ \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  } else {  // json
    os << "[";
    bool first = true;
    for (const auto& r : rows) {
      if (!first) os << ",";
      first = false;
      os << "\n  {\"p\":" << r.p << ",\"q\":" << r.q << ",\"orientation\":\""
         << r.orientation << "\"";
      if (!r.alt_numerator.empty()) os << ",\"alt_p\":" << r.alt_numerator;
      os << ",\"homfly\":\"" << json_escape(r.homfly) << "\",\"jones\":\""
         << json_escape(r.jones) << "\",\"conway\":\""
         << json_escape(r.conway) << "\"";
      if (!r.det.empty()) os << ",\"det\":" << r.det;
      os << "}";
    }
    os << "\n]\n";
  }
}

int cmd_table(long long max_q, const std::string& format, bool dedupe,
              const std::string& out) {
  if (max_q < 2) throw domain_error("--max-q must be at least 2");
  auto rows = build_table(max_q, dedupe);
  if (out.empty()) {
    render_table(rows, format, std::cout);
  } else {
    std::ofstream f(out);
    if (!f) throw domain_error("cannot open output file: " + out);
    render_table(rows, format, f);
  }
  return 0;
}

// --- verify command ---------------------------------------------------------

struct VerifyReport {
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      std::cout << "counterexample: " << what << "\n";
    }
  }
};

EvenCF normalized_cf(const OrientedLinkSpec& s) {
  Rational r = s.fraction;
  if (r.is_knot()) {
    if ((r.p() & 1) != 0) r = numerator_shift(r);
  } else if (s.orientation == Orientation::negative) {
    r = numerator_shift(r);
  }
  return even_cf(r);
}

int cmd_verify(long long max_q, int oracle_max_crossings) {
  if (max_q < 2) throw domain_error("--max-q must be at least 2");
  VerifyReport rep;
  for (long long q = 2; q <= max_q; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      const std::string name = std::to_string(p) + "/" + std::to_string(q);
      std::vector<Orientation> os;
      if (q % 2 == 1)
        os = {Orientation::knot};
      else
        os = {Orientation::positive, Orientation::negative};
      for (Orientation o : os) {
        OrientedLinkSpec s = make_spec(Rational(p, q), o);
        const std::string tag = name + " (" + orientation_label(s) + ")";
        Laurent2 h = homfly(s, Method::recursive);
        rep.check(homfly(s, Method::pathsum) == h, tag + " path sum");
        rep.check(homfly(s, Method::grouped) == h, tag + " grouped form");
        rep.check(homfly(make_spec(Rational(-p, q), o)) == mirror_subst(h),
                  tag + " mirror rule");
        bool parity = true;
        for (const auto& [key, c] : h.terms()) {
          if (q % 2 == 1)
            parity = parity && key.first >= 0 && key.first % 2 == 0;
          else
            parity = parity && key.first >= -1 &&
                     (key.first % 2 + 2) % 2 == 1;
        }
        rep.check(parity, tag + " z-parity");
        if (q % 2 == 1)
          rep.check(determinant(h) == q, tag + " determinant law");
        // Jones oracle up to the crossing budget
        EvenCF cf = normalized_cf(s);
        long long crossings = 0;
        for (long long b : cf.terms) crossings += std::abs(b);
        if (crossings <= oracle_max_crossings) {
          OrientedDiagram od =
              orient_positive(build_natural_diagram(cf.terms));
          rep.check(jones_via_bracket(od, oracle_max_crossings) ==
                        jones_reduce(h),
                    tag + " bracket oracle");
        } else {
          ++rep.skipped;
        }
      }
      // duality + roundtrip on the canonical expansion
      if ((p % 2 == 0) || (q % 2 == 0)) {
        EvenCF cf = even_cf(Rational(p, q));
        rep.check(eval_cf(cf.terms) == Fraction(p, q), name + " roundtrip");
        Laurent2 h = homfly_recursive(cf);
        Laurent2 d = homfly_recursive(dual_cf(cf));
        rep.check(cf.terms.size() % 2 == 1 ? d == h : d == mirror_subst(h),
                  name + " duality");
      }
    }
  // torus skein identity
  for (long long n = -12; n <= 12; n += 2) {
    Laurent2 lhs = Laurent2::monomial(1, 1, 0) * torus_homfly(n - 2) -
                   Laurent2::monomial(1, -1, 0) * torus_homfly(n);
    rep.check(lhs == Laurent2::monomial(1, 0, 1),
              "torus skein at n=" + std::to_string(n));
  }
  std::cout << "passed: " << rep.passed << ", failed: " << rep.failed
            << ", oracle skipped: " << rep.skipped << "\n";
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HOMFLY engine for rational (2-bridge) knots and links"};
  app.require_subcommand(1);

  std::string fraction, orientation = "pos", method = "recursive",
              format = "text";
  auto add_invariant = [&](const std::string& name, const std::string& desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("fraction", fraction, "link fraction p/q")->required();
    c->add_option("--orientation", orientation, "link orientation")
        ->check(CLI::IsMember({"pos", "neg"}));
    c->add_option("--method", method, "evaluation method")
        ->check(CLI::IsMember({"recursive", "pathsum", "grouped"}));
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    return c;
  };
  add_invariant("homfly", "HOMFLY polynomial in (a, z)");
  add_invariant("jones", "Jones polynomial (t for knots, s = t^(1/2) for links)");
  add_invariant("conway", "Conway polynomial in t");
  add_invariant("det", "knot determinant |J(-1)|");

  long long max_q = 9;
  std::string table_format = "csv", out_file;
  bool dedupe = false;
  CLI::App* table = app.add_subcommand("table", "tabulate invariants");
  table->add_option("--max-q", max_q, "largest denominator")->required();
  table->add_option("--format", table_format, "table format")
      ->check(CLI::IsMember({"csv", "md", "latex", "json"}));
  table->add_flag("--dedupe", dedupe,
                  "one row per oriented equivalence class");
  table->add_option("--out", out_file, "write to a file instead of stdout");

  long long verify_max_q = 9;
  int oracle_max_crossings = 14;
  CLI::App* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--max-q", verify_max_q, "largest denominator")
      ->required();
  verify->add_option("--oracle-max-crossings", oracle_max_crossings,
                     "bracket oracle crossing budget (0 skips the oracle)");

  try {
    app.parse(argc, argv);
    for (const char* kind : {"homfly", "jones", "conway", "det"})
      if (app.get_subcommand(kind)->parsed())
        return cmd_invariant(kind, fraction, orientation, method, format);
    if (table->parsed())
      return cmd_table(max_q, table_format, dedupe, out_file);
    return cmd_verify(verify_max_q, oracle_max_crossings);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
