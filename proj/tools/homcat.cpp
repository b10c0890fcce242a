// Command-line front end: parse module files, dispatch the homological
// operations, render human- and machine-readable reports.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "homcat/bgg.hpp"
#include "homcat/corpus.hpp"
#include "homcat/koszul.hpp"
#include "homcat/modfile.hpp"
#include "homcat/report.hpp"

using namespace homcat;

namespace {

std::string verdict_name(Thm15Verdict v) {
  switch (v) {
    case Thm15Verdict::verified: return "verified";
    case Thm15Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Thm15Verdict::counterexample: return "counterexample";
  }
  return "?";
}

std::string verdict_name(Lemma13Verdict v) {
  switch (v) {
    case Lemma13Verdict::verified: return "verified";
    case Lemma13Verdict::hypothesis_fails: return "hypothesis-fails";
    case Lemma13Verdict::conclusion_fails: return "conclusion-fails";
  }
  return "?";
}

std::string verdict_name(Lemma14Verdict v) {
  switch (v) {
    case Lemma14Verdict::verified: return "verified";
    case Lemma14Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Lemma14Verdict::conclusion_fails: return "conclusion-fails";
  }
  return "?";
}

void describe_module(Report& rep, const std::string& prefix, const DegreewiseModule& m) {
  rep.put(prefix + ".kind", kind_name(m.algebra.kind));
  rep.put(prefix + ".nvars", static_cast<long>(m.algebra.nvars));
  rep.put(prefix + ".total_dim", m.total_dim());
  if (!m.is_zero()) {
    rep.put(prefix + ".lo", static_cast<long>(m.lo));
    rep.put(prefix + ".hi", static_cast<long>(m.hi()));
    std::ostringstream os;
    for (size_t i = 0; i < m.dims.size(); ++i) os << (i ? "," : "") << m.dims[i];
    rep.put(prefix + ".dims", os.str());
  }
}

struct SweepStats {
  long run = 0, pass = 0, vacuous = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homological calculator for graded exterior and symmetric modules"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output format: human or machine")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string file, file2;
  long length = 5, bound = 4, trials = 12, power = 1, imax = 3, extbound = 2;
  long dmin = -3, dmax = 3, qmin = 0, qmax = 2, hi = 5, m_param = 0, r_param = 1, i_param = 1;
  long nvars = 3, count = 50;
  std::uint64_t seed = 0;
  bool do_export = false, round_trip = false;
  std::string corpus_name, suite;

  auto* c_validate = app.add_subcommand("validate", "check the module file invariants");
  c_validate->add_option("file", file)->required();

  auto* c_betti = app.add_subcommand("betti", "graded Betti numbers of the minimal resolution");
  c_betti->add_option("file", file)->required();
  c_betti->add_option("--length", length);

  auto* c_linear = app.add_subcommand("linear", "test linearity of the resolution");
  c_linear->add_option("file", file)->required();
  c_linear->add_option("--bound", bound);

  auto* c_nice = app.add_subcommand("nice", "multiplication-complex niceness battery");
  c_nice->add_option("file", file)->required();
  c_nice->add_option("--trials", trials);
  c_nice->add_option("--seed", seed);

  auto* c_cohom = app.add_subcommand("cohomology", "twisted cohomology table");
  c_cohom->add_option("file", file)->required();
  c_cohom->add_option("--dmin", dmin);
  c_cohom->add_option("--dmax", dmax);
  c_cohom->add_option("--qmin", qmin);
  c_cohom->add_option("--qmax", qmax);

  auto* c_rank = app.add_subcommand("rank", "generic fiber rank");
  c_rank->add_option("file", file)->required();
  c_rank->add_option("--trials", trials);
  c_rank->add_option("--seed", seed);

  auto* c_rigid = app.add_subcommand("rigid", "stable endomorphisms and self-extensions");
  c_rigid->add_option("file", file)->required();
  c_rigid->add_option("--extbound", extbound);

  auto* c_thm = app.add_subcommand("theorem15", "rigid indecomposable sheaf-module check");
  c_thm->add_option("file", file)->required();

  auto* c_serre = app.add_subcommand("serre", "stable Serre duality dimension check");
  c_serre->add_option("fileX", file)->required();
  c_serre->add_option("fileY", file2)->required();
  c_serre->add_option("--m", m_param);

  auto* c_tau = app.add_subcommand("tau", "translate power of a module");
  c_tau->add_option("file", file)->required();
  c_tau->add_option("--power", power);
  c_tau->add_flag("--export", do_export);

  auto* c_arv = app.add_subcommand("arvanish", "translate-power Hom vanishing");
  c_arv->add_option("fileB", file)->required();
  c_arv->add_option("fileC", file2)->required();
  c_arv->add_option("--imax", imax);

  auto* c_scan = app.add_subcommand("scan", "translate-orbit component scan");
  c_scan->add_option("fileB", file)->required();
  c_scan->add_option("fileC", file2)->required();
  c_scan->add_option("--imax", imax);

  auto* c_dual = app.add_subcommand("dual", "linear dual over the polynomial side");
  c_dual->add_option("file", file)->required();
  c_dual->add_option("--hi", hi);
  c_dual->add_flag("--export", do_export);
  c_dual->add_flag("--round-trip", round_trip);

  auto* c_gamma = app.add_subcommand("gamma", "two-step reduction");
  c_gamma->add_option("file", file)->required();
  c_gamma->add_flag("--export", do_export);

  auto* c_l11 = app.add_subcommand("lemma11", "extension splitting vs two-step reduction");
  c_l11->add_option("file", file)->required();

  auto* c_l12 = app.add_subcommand("lemma12", "semisimple-over-linear extensions split");
  c_l12->add_option("file", file)->required();
  c_l12->add_option("--m", m_param);
  c_l12->add_option("--r", r_param);

  auto* c_l13 = app.add_subcommand("lemma13", "truncation self-extension implication");
  c_l13->add_option("file", file)->required();
  c_l13->add_option("--i", i_param);

  auto* c_l14 = app.add_subcommand("lemma14", "rigid two-step endomorphism check");
  c_l14->add_option("file", file)->required();

  auto* c_corpus = app.add_subcommand("corpus", "named built-in modules");
  c_corpus->add_option("name", corpus_name)->required();
  c_corpus->add_option("--nvars", nvars);
  c_corpus->add_flag("--export", do_export);

  auto* c_sweep = app.add_subcommand("sweep", "seeded batch verification runs");
  c_sweep->add_option("suite", suite)->required()
      ->check(CLI::IsMember({"lemma14", "serre", "lemma11", "lemma12"}));
  c_sweep->add_option("--seed", seed);
  c_sweep->add_option("--count", count);
  c_sweep->add_option("--nvars", nvars);

  CLI11_PARSE(app, argc, argv);
  const bool machine = format == "machine";

  Report rep;
  rep.put("seed", static_cast<long>(seed));
  try {
    if (c_validate->parsed()) {
      const DegreewiseModule m = load_module_raw(file);
      const ValidationReport v = validate(m);
      rep.put("valid", v.ok);
      if (v.ok) {
        describe_module(rep, "module", m);
        rep.human("module is valid");
      } else {
        const Violation& first = v.violations.front();
        rep.put("violation", first.relation);
        rep.put("var", static_cast<long>(first.var_a));
        rep.put("degree", static_cast<long>(first.degree));
        rep.human("invalid: " + first.detail);
        rep.exit_code = 2;
      }
    } else if (c_betti->parsed()) {
      const BettiTable t = betti_table(load_module(file), static_cast<int>(length));
      rep.human(render_betti(t));
      for (const auto& [ij, cnt] : t.beta)
        if (cnt != 0)
          rep.put("beta." + std::to_string(ij.first) + "." + std::to_string(ij.second), cnt);
    } else if (c_linear->parsed()) {
      const LinearVerdict v = is_linear(load_module(file), static_cast<int>(bound));
      rep.put("linear", v.linear);
      rep.put("bound", bound);
      if (v.linear) {
        rep.human("linear through the bound");
      } else {
        rep.put("witness.i", static_cast<long>(v.witness->first));
        rep.put("witness.j", static_cast<long>(v.witness->second));
        rep.human("not linear");
        rep.exit_code = 1;
      }
    } else if (c_nice->parsed()) {
      const NiceResult v = is_nice(load_module(file), static_cast<int>(trials), seed);
      const char* name = v.verdict == NiceVerdict::nice_certified_randomized
                             ? "nice-certified-randomized"
                             : v.verdict == NiceVerdict::not_nice ? "not-nice" : "inconclusive";
      rep.put("verdict", std::string(name));
      if (v.concentration) rep.put("concentration", static_cast<long>(*v.concentration));
      if (v.witness) {
        std::ostringstream os;
        for (size_t i = 0; i < v.witness->size(); ++i)
          os << (i ? "," : "") << format_rat((*v.witness)[i]);
        rep.put("witness", os.str());
        rep.exit_code = 1;
      }
      rep.human(std::string("verdict: ") + name);
    } else if (c_cohom->parsed()) {
      const CohomologyTable t =
          cohomology_table(load_module(file), static_cast<int>(dmin), static_cast<int>(dmax),
                           static_cast<int>(qmin), static_cast<int>(qmax));
      std::ostringstream grid;
      grid << "q\\d";
      for (int d = t.dmin; d <= t.dmax; ++d) grid << "\t" << d;
      rep.human(grid.str());
      for (int q = t.qmax; q >= t.qmin; --q) {
        std::ostringstream line;
        line << q;
        for (int d = t.dmin; d <= t.dmax; ++d) {
          const long v = t.at(q, d);
          line << "\t" << (v == 0 ? std::string(".") : std::to_string(v));
        }
        rep.human(line.str());
      }
      for (int q = t.qmin; q <= t.qmax; ++q)
        for (int d = t.dmin; d <= t.dmax; ++d) {
          rep.human("h " + std::to_string(q) + " " + std::to_string(d) + " " +
                    std::to_string(t.at(q, d)));
          rep.put("h." + std::to_string(q) + "." + std::to_string(d), t.at(q, d));
        }
    } else if (c_rank->parsed()) {
      rep.put("rank", sheaf_rank(load_module(file), static_cast<int>(trials), seed));
    } else if (c_rigid->parsed()) {
      const RigidityReport r = rigidity_report(load_module(file), static_cast<int>(extbound));
      rep.put("end", r.end_stable_dim);
      rep.put("indecomposable", r.indecomposable);
      rep.put("residue", static_cast<long>(r.residue_dim));
      for (const auto& [i, v] : r.ext_self) rep.put("ext" + std::to_string(i), v);
    } else if (c_thm->parsed()) {
      const Thm15Result r = theorem15_check(load_module(file));
      rep.put("verified", r.verdict == Thm15Verdict::verified);
      rep.put("verdict", verdict_name(r.verdict));
      rep.put("reason", r.reason);
      rep.put("end", r.end_stable_dim);
      rep.put("ext1", r.ext1);
      rep.human(verdict_name(r.verdict) + ": " + r.reason);
      if (r.verdict == Thm15Verdict::counterexample) rep.exit_code = 1;
    } else if (c_serre->parsed()) {
      const SerreCheck r =
          serre_check(load_module(file), load_module(file2), static_cast<int>(m_param));
      rep.put("lhs", r.lhs_dim);
      rep.put("rhs", r.rhs_dim);
      rep.put("equal", r.equal);
      rep.put("m", m_param);
      if (!r.equal) rep.exit_code = 1;
    } else if (c_tau->parsed()) {
      const DegreewiseModule t = tau(load_module(file), static_cast<int>(power));
      describe_module(rep, "tau", t);
      if (do_export) {
        std::cout << serialize_module(t);
        return 0;
      }
    } else if (c_arv->parsed()) {
      const auto rows =
          ar_vanishing_check(load_module(file), load_module(file2), static_cast<int>(imax));
      bool all = true;
      for (const auto& r : rows) {
        rep.put("stable." + std::to_string(r.i), r.stable_dim);
        all = all && r.pass;
      }
      rep.put("all_zero", all);
      if (!all) rep.exit_code = 1;
    } else if (c_scan->parsed()) {
      const ScanResult r =
          component_scan(load_module(file), load_module(file2), static_cast<int>(imax));
      rep.put("same_component", r.same_component);
      if (r.same_component) rep.put("tau_power", static_cast<long>(r.tau_power));
      rep.human(r.same_component ? "same-component" : "distinct-components");
    } else if (c_dual->parsed()) {
      const DualityCertificate cert =
          koszul_dual(load_module(file), static_cast<int>(hi), round_trip);
      describe_module(rep, "dual", cert.dual);
      if (round_trip) rep.put("round_trip_ok", cert.round_trip_ok);
      if (do_export) {
        std::cout << serialize_module(cert.dual);
        return 0;
      }
      if (round_trip && !cert.round_trip_ok) rep.exit_code = 1;
    } else if (c_gamma->parsed()) {
      const DegreewiseModule g = gamma_reduce(load_module(file));
      describe_module(rep, "gamma", g);
      if (do_export) {
        std::cout << serialize_module(g);
        return 0;
      }
    } else if (c_l11->parsed()) {
      const Lemma11Result r = lemma11_check(load_extension(file));
      rep.put("split_s", r.split_S);
      rep.put("split_gamma", r.split_Gamma);
      rep.put("agree", r.agree);
      if (!r.agree) rep.exit_code = 1;
    } else if (c_l12->parsed()) {
      const bool ok = lemma12_check(load_module(file), static_cast<int>(m_param),
                                    static_cast<int>(r_param));
      rep.put("splits", ok);
      if (!ok) rep.exit_code = 1;
    } else if (c_l13->parsed()) {
      const Lemma13Result r = lemma13_check(load_module(file), static_cast<int>(i_param));
      rep.put("verdict", verdict_name(r.verdict));
      rep.put("ext_trunc_full", r.ext_trunc_full);
      rep.put("ext_trunc_trunc", r.ext_trunc_trunc);
      if (r.verdict == Lemma13Verdict::conclusion_fails) rep.exit_code = 1;
    } else if (c_l14->parsed()) {
      const Lemma14Result r = lemma14_check(load_module(file));
      rep.put("verdict", verdict_name(r.verdict));
      rep.put("reason", r.reason);
      rep.put("end_dim", r.end_dim);
      if (r.ext_self >= 0) rep.put("ext1", r.ext_self);
      rep.human(verdict_name(r.verdict) + ": " + r.reason);
      if (r.verdict == Lemma14Verdict::conclusion_fails) rep.exit_code = 1;
    } else if (c_corpus->parsed()) {
      const CorpusEntry e = builtin(corpus_name, static_cast<int>(nvars));
      if (do_export) {
        std::cout << serialize_module(e.module);
        return 0;
      }
      describe_module(rep, "module", e.module);
      for (const auto& [k, v] : e.expected) rep.put("expected." + k, v);
    } else if (c_sweep->parsed()) {
      Rng rng(seed);
      SweepStats stats;
      const AlgebraKind ext{Kind::exterior, static_cast<int>(nvars)};
      const AlgebraKind two{Kind::twostep, static_cast<int>(nvars)};
      if (suite == "lemma14") {
        for (long t = 0; t < count; ++t) {
          const int d0 = 1 + static_cast<int>(rng.range(0, 2));
          const int d1 = 1 + static_cast<int>(rng.range(0, 2));
          const auto m = random_module(two, {{0, d0}, {1, d1}}, rng.fork());
          if (m.is_zero()) continue;
          const Lemma14Result r = lemma14_check(m);
          ++stats.run;
          if (r.verdict == Lemma14Verdict::verified) ++stats.pass;
          if (r.verdict == Lemma14Verdict::hypothesis_not_met) ++stats.vacuous;
          if (r.verdict == Lemma14Verdict::conclusion_fails) {
            rep.put("counterexample_seed", static_cast<long>(t));
            rep.exit_code = 1;
          }
        }
      } else if (suite == "serre") {
        std::vector<DegreewiseModule> pool = {construct_simple(ext, 0),
                                              shift(truncate(construct_free(ext, {0}), 1), 1)};
        for (long t = 0; t < count; ++t) {
          const auto a = pool[rng.range(0, static_cast<long>(pool.size()) - 1)];
          const auto b = random_module(ext, {{0, 1}, {1, 2}, {2, 1}}, rng.fork());
          const int m = static_cast<int>(rng.range(-2, 2));
          const SerreCheck r = serre_check(a, strip_free_summands(b).core, m);
          ++stats.run;
          if (r.equal)
            ++stats.pass;
          else
            rep.exit_code = 1;
        }
      } else if (suite == "lemma11") {
        const auto families = symmetric_linear_corpus(static_cast<int>(nvars));
        const int window = 5;
        long made = 0;
        while (made < count) {
          const auto& fm = families[rng.range(0, static_cast<long>(families.size()) - 1)];
          const auto& fn = families[rng.range(0, static_cast<long>(families.size()) - 1)];
          const DegreewiseModule M = fm.build(window), N = fn.build(window);
          const Ext1Result e = ext1_0(M, N);
          ExtensionClass cls;
          if (e.dim == 0 || rng.range(0, 3) == 0) {
            cls.source = M;
            cls.target = N;
          } else {
            cls = e.basis[rng.range(0, e.dim - 1)];
          }
          const Lemma11Result r = lemma11_check(cls);
          ++stats.run;
          ++made;
          if (r.agree)
            ++stats.pass;
          else
            rep.exit_code = 1;
        }
      } else if (suite == "lemma12") {
        const auto families = symmetric_linear_corpus(static_cast<int>(nvars));
        for (long t = 0; t < count; ++t) {
          const auto& fa = families[rng.range(0, static_cast<long>(families.size()) - 1)];
          const int m = static_cast<int>(rng.range(0, 2));
          const int r = 1 + static_cast<int>(rng.range(0, 1));
          const bool ok = lemma12_check(fa.build(6), m, r);
          ++stats.run;
          if (ok)
            ++stats.pass;
          else
            rep.exit_code = 1;
        }
      }
      rep.put("run", stats.run);
      rep.put("pass", stats.pass);
      rep.put("vacuous", stats.vacuous);
      rep.human("sweep " + suite + ": " + std::to_string(stats.pass) + "/" +
                std::to_string(stats.run) + " pass");
    }
  } catch (const input_error& e) {
    rep.put("error", std::string(e.what()));
    rep.human(std::string("input error: ") + e.what());
    rep.exit_code = 2;
  } catch (const property_error& e) {
    rep.put("error", std::string(e.what()));
    rep.human(std::string("property failure: ") + e.what());
    rep.exit_code = 1;
  } catch (const internal_error& e) {
    rep.put("error", std::string(e.what()));
    rep.human(std::string("internal inconsistency: ") + e.what());
    rep.exit_code = 2;
  }

  rep.render(std::cout, machine);
  return rep.exit_code;
}
