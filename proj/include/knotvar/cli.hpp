#pragma once

// Command-line front end. run() is separate from main() so tests can drive it.

#include "knotvar/closedform.hpp"
#include "knotvar/exactpoly.hpp"
#include "knotvar/ffield.hpp"
#include "knotvar/knot.hpp"
#include "knotvar/matgroups.hpp"
#include "knotvar/repcount.hpp"
#include "knotvar/strata.hpp"
#include "knotvar/trends.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace knotvar::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kHypothesis = 2, kUsage = 3 };

/// Named pass/fail lines.
class Suite {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    checks_.push_back({name, ok, detail});
  }
  template <typename A, typename B>
  void equal(const std::string& name, const A& got, const B& want) {
    std::ostringstream ss;
    ss << "got " << got << ", want " << want;
    check(name, got == want, ss.str());
  }
  void append(const Suite& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }
  bool ok() const {
    for (const auto& c : checks_)
      if (!c.ok) return false;
    return true;
  }
  std::size_t size() const { return checks_.size(); }
  void print(std::ostream& os) const {
    std::size_t fails = 0;
    for (const auto& c : checks_) {
      os << (c.ok ? "PASS " : "FAIL ") << c.name;
      if (!c.ok && !c.detail.empty()) os << ": " << c.detail;
      os << '\n';
      fails += !c.ok;
    }
    os << (checks_.size() - fails) << "/" << checks_.size() << " checks passed\n";
  }

 private:
  struct Entry {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Entry> checks_;
};

inline GroupKind parse_group(const std::string& s) {
  if (s == "gl1") return GroupKind::GL1;
  if (s == "gl2") return GroupKind::GL2;
  if (s == "agl1") return GroupKind::AGL1;
  if (s == "agl2") return GroupKind::AGL2;
  throw std::invalid_argument("unknown group: " + s);
}

inline GroupDescriptor descriptor(GroupKind g, Field f) {
  switch (g) {
    case GroupKind::GL1: return GroupDescriptor::gl1(std::move(f));
    case GroupKind::GL2: return GroupDescriptor::gl2(std::move(f));
    case GroupKind::AGL1: return GroupDescriptor::agl1(std::move(f));
    case GroupKind::AGL2: return GroupDescriptor::agl2(std::move(f));
  }
  throw std::invalid_argument("invalid group");
}

inline const std::vector<std::pair<std::int64_t, std::int64_t>>& agl1_knots() {
  static const std::vector<std::pair<std::int64_t, std::int64_t>> k = {{1, 1}, {2, 3}, {3, 5},
                                                                        {4, 5}, {3, 7}, {4, 9}};
  return k;
}

inline std::string qtag(std::uint64_t q) { return "q=" + std::to_string(q); }
inline std::string ktag(std::int64_t m, std::int64_t n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

inline Suite suite_ffield(std::uint64_t max_q) {
  Suite s;
  for (const auto& pp : prime_powers(max_q)) {
    Field f = make_field(pp.p, pp.k);
    const FieldCtx& F = *f;
    bool inv_ok = true, frob_ok = true;
    for (Code a = 1; a < F.q(); ++a) inv_ok = inv_ok && F.mul(a, F.inv(a)) == 1;
    for (Code a = 0; a < F.q() && F.q() <= 32; ++a)
      for (Code b = 0; b < F.q(); ++b)
        frob_ok = frob_ok && F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b));
    s.check("ffield inverses " + qtag(pp.q), inv_ok);
    s.check("ffield frobenius additive " + qtag(pp.q), frob_ok);
    bool roots_ok = true;
    for (std::uint64_t l = 1; l <= 30; ++l) roots_ok = roots_ok && unity_root_count(F, l) == unity_root_count_gcd(pp.q, l);
    s.check("roots of unity " + qtag(pp.q), roots_ok);
  }
  if (max_q >= 9) {
    auto moduli = irreducible_monics(3, 2, 2);
    Field a = make_field_with_modulus(3, moduli[0]), b = make_field_with_modulus(3, moduli[1]);
    s.equal("F_9 modulus independence agl1 (5,7)", count_reduced(GroupDescriptor::agl1(a), 7, 5),
            count_reduced(GroupDescriptor::agl1(b), 7, 5));
    s.equal("F_9 modulus independence gl2 (5,7)", count_reduced(GroupDescriptor::gl2(a), 7, 5),
            count_reduced(GroupDescriptor::gl2(b), 7, 5));
  }
  return s;
}

inline Suite suite_agl1(std::uint64_t max_q) {
  Suite s;
  for (const auto& [m, n] : agl1_knots())
    for (const auto& pp : prime_powers(max_q)) {
      if (!hypotheses_ok(pp.q, m, n, GroupKind::AGL1)) continue;
      Field f = make_field(pp.p, pp.k);
      auto d = GroupDescriptor::agl1(f);
      BigInt got = count_reduced(d, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
      s.equal("agl1 " + ktag(m, n) + " " + qtag(pp.q), got, finite_value(motive_agl1(m, n), pp.q, m, n));
      if (pp.q <= 16)
        s.equal("agl1 fibers=reduced " + ktag(m, n) + " " + qtag(pp.q),
                count_power_fibers(d, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)), got);
    }
  return s;
}

inline Suite suite_agl2(std::uint64_t max_q, const CountOptions& opt) {
  Suite s;
  for (const auto& pp : prime_powers(std::min<std::uint64_t>(max_q, kAgl2TrendCap))) {
    if (!hypotheses_ok(pp.q, 3, 5, GroupKind::AGL2) || !is_clean(pp.q, 3, 5)) continue;
    Field f = make_field(pp.p, pp.k);
    BigInt got = count_agl2_reduced(f, 5, 3, opt);
    s.equal("agl2 (3,5) published formula " + qtag(pp.q), got, finite_value(motive_agl2(3, 5), pp.q, 3, 5));
    s.equal("agl2 (3,5) corrected formula " + qtag(pp.q), got, finite_value(corrected_motive_agl2(3, 5), pp.q, 3, 5));
  }
  if (max_q >= 3) {
    Field f3 = make_field(3, 1);
    auto d = GroupDescriptor::agl2(f3);
    s.equal("agl2 fibers=reduced (5,1) q=3", count_power_fibers(d, 5, 1), count_reduced(d, 5, 1));
    s.equal("agl2 (5,1) q=3 equals |G|", count_reduced(d, 5, 1), d.order());
  }
  return s;
}

inline Suite suite_lemmas(std::uint64_t max_q) {
  Suite s;
  const std::vector<std::pair<std::int64_t, std::int64_t>> cusp_knots = {{3, 5}, {4, 5}, {5, 7}, {4, 9}};
  for (const auto& pp : prime_powers(max_q)) {
    Field f = make_field(pp.p, pp.k);
    const FieldCtx& F = *f;
    for (const auto& [m, n] : cusp_knots) {
      bool ok = true;
      for (Code t = 1; t < F.q(); ++t) {
        auto [x, y] = cusp_param(F, m, n, t);
        ok = ok && cusp_inv(F, m, n, x, y) == t;
      }
      s.check("cusp inverse " + ktag(m, n) + " " + qtag(pp.q), ok);
    }
    if (pp.q <= 31) {
      PmAudit a = pm_class_audit(f);
      s.check("pm audit " + qtag(pp.q), a.ok(),
              std::to_string(a.stable_point_pairs) + "," + std::to_string(a.stable_line_pairs) + "," +
                  std::to_string(a.regular_semisimple));
    }
    if (hypotheses_ok(pp.q, 3, 5, GroupKind::AGL1)) {
      Agl1Strata st = agl1_stratified_count(F, 5, 3);
      s.equal("agl1 strata sum (3,5) " + qtag(pp.q), st.total(), count_reduced(GroupDescriptor::agl1(f), 5, 3));
    }
  }
  return s;
}

inline Suite suite_symbolic() {
  Suite s;
  const std::int64_t m = 3, n = 5;
  MotiveExpr irr = 0;
  for (auto fam : {StratumFamily::IRR1, StratumFamily::IRR2, StratumFamily::IRR3, StratumFamily::IRR4,
                   StratumFamily::IRR5})
    irr += stratum_motive(fam, m, n);
  s.check("irreducible strata sum to the closing display", irr == irr_total_display(m, n));
  MotiveExpr a = stratum_motive(StratumFamily::A1, m, n) + stratum_motive(StratumFamily::A2, m, n) +
                 stratum_motive(StratumFamily::A3, m, n);
  s.check("A strata sum to the A total", a == a_total_display(m, n));
  s.check("B strata sum to the B total",
          stratum_motive(StratumFamily::B1, m, n) + stratum_motive(StratumFamily::B2, m, n) == b_total_display(m, n));
  s.check("C strata sum to the C total",
          stratum_motive(StratumFamily::C1, m, n) + stratum_motive(StratumFamily::C2, m, n) == c_total_display(m, n));
  s.check("family totals sum to the agl2 motive",
          irr_total_display(m, n) + a_total_display(m, n) + b_total_display(m, n) + c_total_display(m, n) ==
              motive_agl2(m, n));
  const MotiveExpr q = MotiveExpr::q();
  s.check("corrected motive differs by q^5 - q^4 and the one-line strata",
          motive_agl2(m, n) - corrected_motive_agl2(m, n) == q.pow(5) - q.pow(4) - d_total(m, n));
  s.check("one-line strata vanish without nontrivial roots of unity",
          specialize(d_total(m, n), 1, 1) == IntPoly{} && specialize(d_total(m, n), 1, 5) == IntPoly{});
  for (const auto& [mm, nn] : agl1_knots()) {
    IntPoly want = specialize(((nn - 1) * (mm - 1) + 1) * (q.pow(2) - q), 1, 1);
    s.check("agl1 complex specialization " + ktag(mm, nn), complex_specialization(motive_agl1(mm, nn), mm, nn) == want);
  }
  MotiveExpr gl2irr_q2 = gl2_irr_motive(m, n) * q.pow(2);
  MotiveExpr lhs = stratum_motive(StratumFamily::IRR5, m, n);
  MotiveExpr rhs = gl2irr_q2 - ell_orbits(m, n) * (q.pow(3) - 2 * q.pow(2)) * (q.pow(3) - q);
  s.check("fifth irreducible stratum bookkeeping", lhs == rhs);
  MotiveExpr x = MotiveExpr::xi_m(), y = MotiveExpr::xi_n();
  s.check("ell closed form", ell_orbits(m, n) == (x * y * (x - 1) * (y - 1)).divided_by(4));
  return s;
}

inline Suite run_suite(const std::string& name, std::uint64_t max_q, const CountOptions& opt) {
  Suite s;
  if (name == "ffield" || name == "all") s.append(suite_ffield(max_q));
  if (name == "agl1" || name == "all") s.append(suite_agl1(max_q));
  if (name == "agl2" || name == "all") s.append(suite_agl2(max_q, opt));
  if (name == "lemmas" || name == "all") s.append(suite_lemmas(max_q));
  if (name == "symbolic" || name == "all") s.append(suite_symbolic());
  if (s.size() == 0) throw std::invalid_argument("unknown suite: " + name);
  return s;
}

/// Parses and dispatches; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point counts and motives of torus-knot representation varieties"};
  app.require_subcommand(1);

  std::string group = "agl1", tier = "reduced", format = "text", suite = "all", out_path, gnuplot_path;
  std::int64_t m = 3, n = 5;
  std::uint64_t q = 7, limit = 3000, max_q = 13;
  std::size_t modulus_index = 0;
  unsigned threads = 1;
  bool force = false, strata = false, twist = false, progress = false, corrected = false;

  auto knot_opts = [&](CLI::App* c) {
    c->add_option("--m", m, "knot parameter m (relation A^n = B^m)")->required();
    c->add_option("--n", n, "knot parameter n")->required();
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    c->add_flag("--progress", progress, "progress lines on stderr");
    c->add_flag("--force", force, "run outside the closed-form hypotheses");
  };
  auto field_opts = [&](CLI::App* c) {
    c->add_option("--q", q, "field order (prime power)")->required();
    c->add_option("--modulus-index", modulus_index, "index of the irreducible modulus in lexicographic order");
  };

  auto* c_count = app.add_subcommand("count", "exact |Rep(G)(F_q)|");
  knot_opts(c_count);
  field_opts(c_count);
  common(c_count);
  c_count->add_option("--group", group)->check(CLI::IsMember({"gl1", "gl2", "agl1", "agl2"}));
  c_count->add_option("--tier", tier)->check(CLI::IsMember({"naive", "fibers", "reduced"}));
  c_count->add_flag("--strata", strata, "stratified CSV (agl2)");
  c_count->add_flag("--twist-census", twist, "irreducible twist census (agl2)");

  auto* c_motive = app.add_subcommand("motive", "closed-form motive");
  knot_opts(c_motive);
  c_motive->add_option("--group", group)->check(CLI::IsMember({"agl1", "agl2"}));
  c_motive->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_motive->add_flag("--corrected", corrected, "agl2 with the equivariant A3 count and the one-line strata");
  c_motive->add_flag("--force", force);

  auto* c_epoly = app.add_subcommand("epoly", "complex specialization xi_l = l");
  knot_opts(c_epoly);
  c_epoly->add_option("--group", group)->check(CLI::IsMember({"agl1", "agl2"}));
  c_epoly->add_flag("--corrected", corrected);
  c_epoly->add_flag("--force", force);

  auto* c_predict = app.add_subcommand("predict", "closed form evaluated over F_q");
  knot_opts(c_predict);
  c_predict->add_option("--q", q)->required();
  c_predict->add_option("--group", group)->check(CLI::IsMember({"agl1", "agl2"}));
  c_predict->add_flag("--corrected", corrected);
  c_predict->add_flag("--force", force);

  auto* c_gap = app.add_subcommand("gap", "exact agl2 count minus closed form");
  knot_opts(c_gap);
  field_opts(c_gap);
  common(c_gap);

  auto* c_trends = app.add_subcommand("trends", "trend CSV over prime powers");
  knot_opts(c_trends);
  common(c_trends);
  c_trends->add_option("--group", group)->check(CLI::IsMember({"agl1", "agl2"}));
  c_trends->add_option("--limit", limit);
  c_trends->add_option("--out", out_path, "CSV path (default stdout)");
  c_trends->add_option("--gnuplot", gnuplot_path, "write a gnuplot script for the CSV");

  auto* c_residue = app.add_subcommand("residue-evidence", "primes 1 and 2 mod nm");
  knot_opts(c_residue);
  c_residue->add_option("--limit", limit);

  auto* c_density = app.add_subcommand("density", "right-trend density");
  knot_opts(c_density);
  common(c_density);
  c_density->add_option("--limit", limit);
  c_density->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* c_verify = app.add_subcommand("verify", "property suites");
  common(c_verify);
  c_verify->add_option("--suite", suite)->check(CLI::IsMember({"ffield", "agl1", "agl2", "lemmas", "symbolic", "all"}));
  c_verify->add_option("--max-q", max_q);

  auto* c_selftest = app.add_subcommand("selftest", "quick consistency checks");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CountOptions opt;
  opt.threads = threads;
  if (progress) opt.progress = &err;

  auto field = [&]() { return make_field_of_order(q, modulus_index); };
  auto probe_note = [&](GroupKind g) {
    PrimePower pp;
    if (!as_prime_power(q, pp)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    std::string v = hypothesis_violations(q, m, n, g);
    if (v.empty()) return true;
    if (!force) throw HypothesisError(v);
    out << "# outside-theorem probe: " << v << '\n';
    return false;
  };
  auto motive_for = [&](GroupKind g) {
    if (g == GroupKind::AGL1) return motive_agl1(m, n);
    return corrected ? corrected_motive_agl2(m, n, force) : motive_agl2(m, n, force);
  };

  try {
    if (*c_count) {
      GroupKind g = parse_group(group);
      probe_note(g);
      Field f = field();
      out << to_decimal(count(descriptor(g, f), static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m),
                              parse_tier(tier), opt))
          << '\n';
      if (strata || twist) {
        if (g != GroupKind::AGL2) throw std::invalid_argument("--strata and --twist-census need --group agl2");
        StratifiedResult r = stratified_count(f, n, m, opt, force);
        if (strata) write_stratified_csv(out, r);
        if (twist) {
          out << "irreducible_pairs=" << r.schur.irr_pairs << '\n'
              << "twisted_irreducible_pairs=" << r.schur.twisted_irr_pairs << '\n'
              << "nonscalar_power=" << r.schur.nonscalar_power << '\n'
              << "not_diagonalizable=" << r.schur.not_diagonalizable << '\n'
              << "repeated_eigenvalues=" << r.schur.repeated_eigenvalues << '\n';
        }
      }
      return kOk;
    }
    if (*c_motive) {
      MotiveExpr e = motive_for(parse_group(group));
      if (format == "json")
        out << e.to_json().dump() << '\n';
      else
        out << e.str() << '\n';
      return kOk;
    }
    if (*c_epoly) {
      out << complex_specialization(motive_for(parse_group(group)), m, n).str("q") << '\n';
      return kOk;
    }
    if (*c_predict) {
      GroupKind g = parse_group(group);
      probe_note(g);
      out << to_decimal(finite_value(motive_for(g), q, m, n)) << '\n';
      return kOk;
    }
    if (*c_gap) {
      probe_note(GroupKind::AGL2);
      Field f = field();
      BigInt exact = count_agl2_reduced(f, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m), opt);
      BigInt published = finite_value(motive_agl2(m, n, force), q, m, n);
      BigInt fixed = finite_value(corrected_motive_agl2(m, n, force), q, m, n);
      out << "q=" << q << " m=" << m << " n=" << n << " clean=" << (is_clean(q, m, n) ? 1 : 0) << '\n'
          << "count=" << to_decimal(exact) << '\n'
          << "formula=" << to_decimal(published) << '\n'
          << "gap=" << to_decimal(exact - published) << '\n'
          << "corrected_formula=" << to_decimal(fixed) << '\n'
          << "corrected_gap=" << to_decimal(exact - fixed) << '\n';
      return kOk;
    }
    if (*c_trends) {
      auto recs = trend_scan(m, n, parse_group(group), limit, opt);
      if (out_path.empty()) {
        write_trend_csv(out, recs);
      } else {
        std::ofstream fs(out_path);
        if (!fs) throw std::runtime_error("cannot write " + out_path);
        write_trend_csv(fs, recs);
      }
      if (!gnuplot_path.empty()) {
        std::ofstream gs(gnuplot_path);
        if (!gs) throw std::runtime_error("cannot write " + gnuplot_path);
        write_gnuplot(gs, out_path.empty() ? "trends.csv" : out_path, m, n);
      }
      return kOk;
    }
    if (*c_residue) {
      ResidueReport r = residue_evidence(m, n, limit);
      auto show = [&](const char* name, const std::vector<ResidueWitness>& ws, bool insufficient) {
        out << name << " mod " << r.modulus << ":";
        for (const auto& w : ws) out << ' ' << w.p;
        out << (insufficient ? "  (insufficient data below " + std::to_string(limit) + ")" : std::string()) << '\n';
        for (const auto& w : ws) out << "  p=" << w.p << " count=" << to_decimal(w.count) << " trend=" << w.trend.str("t") << '\n';
      };
      show("class 1", r.class1, r.insufficient1);
      show("class 2", r.class2, r.insufficient2);
      if (r.polynomials_distinct) out << "trend polynomials distinct: " << (*r.polynomials_distinct ? "yes" : "no") << '\n';
      return kOk;
    }
    if (*c_density) {
      DensityReport d = density_report(m, n, limit, opt);
      if (format == "json") {
        out << d.summary().dump(2) << '\n';
      } else {
        out << "prime powers <= " << limit << ": " << d.total << '\n'
            << "right trend: " << d.right << " (" << d.right_trend_fraction.str() << ")\n";
        for (const auto& t : d.trends)
          out << "  d_m=" << t.d_m << " d_n=" << t.d_n << " coeff=" << to_decimal(t.coeff) << " points=" << t.count_points << '\n';
      }
      return kOk;
    }
    if (*c_verify || *c_selftest) {
      Suite s;
      if (*c_verify) {
        s = run_suite(suite, max_q, opt);
      } else {
        for (const char* name : {"ffield", "agl1", "lemmas", "symbolic"}) s.append(run_suite(name, 16, opt));
      }
      s.print(out);
      return s.ok() ? kOk : kVerifyFailed;
    }
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << " (use --force to probe anyway)\n";
    return kHypothesis;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace knotvar::cli
