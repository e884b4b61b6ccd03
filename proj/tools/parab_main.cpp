#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include "parab/asymptotics.hpp"
#include "parab/cache.hpp"
#include "parab/errors.hpp"
#include "parab/serialize.hpp"
#include "parab/threadpool.hpp"
#include "parab/torsion.hpp"
#include "parab/verify.hpp"
#include "parab/verlinde.hpp"

namespace {

using namespace parab;

struct GlobalOpts {
  std::string format = "json";
  std::string cache_dir;
  std::string output;
  unsigned threads = 1;
};

std::unique_ptr<CacheStore> make_store(const GlobalOpts& g) {
  if (!g.cache_dir.empty()) return std::make_unique<CacheStore>(g.cache_dir);
  if (const char* env = std::getenv("PARAB_CACHE_DIR"); env && *env)
    return std::make_unique<CacheStore>(env);
  return nullptr;
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  out << text;
}

void emit_json(const GlobalOpts& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

int fail_with_record(const GlobalOpts& g, const std::string& kind,
                     const std::string& what, int code) {
  Json j;
  j["error"] = kind;
  j["what"] = what;
  emit_json(g, j);
  return code;
}

Json int_str(const Int& v) { return v.get_str(); }

std::vector<std::pair<long, long>> hyperbolic_pairs(long pmax) {
  std::vector<std::pair<long, long>> out;
  for (long p = 3; p <= pmax; p += 2)
    for (long q = 3; q < p; q += 2)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

int cmd_riley(const GlobalOpts& g, long p, long q) {
  TwoBridgeParams tb = make_params(p, q);
  Json j;
  j["p"] = tb.p;
  j["q"] = tb.q;
  j["ell"] = tb.ell;
  j["ell_prime"] = tb.ell_prime;
  j["eps"] = tb.eps;
  j["riley"] = poly_to_json(riley(tb));
  emit_json(g, j);
  return 0;
}

int cmd_frobenius(const GlobalOpts& g, long p, long q) {
  auto store = make_store(g);
  ParabolicAlgebra v = build_algebra_cached(p, q, store.get());
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["omega"] = poly_to_json(v.omega.rep());
  j["iota"] = poly_to_json(v.iota.rep());
  std::vector<int> diag;
  for (long k = 0; k + 1 < p; ++k) {
    int s = (k % 2 == 0) ? 1 : -1;
    diag.push_back(s * eps_at(p, q, k + 1));
  }
  j["eta_diagonal"] = diag;
  emit_json(g, j);
  return 0;
}

int cmd_signature(const GlobalOpts& g, long p, long q, long genus,
                  const std::vector<long>& colors) {
  auto store = make_store(g);
  ParabolicAlgebra v = build_algebra_cached(p, q, store.get());
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["g"] = genus;
  j["colors"] = colors;
  if (colors.empty())
    j["sigma"] = int_str(v.signature(genus));
  else
    j["sigma"] = rational_string(v.colored_signature(genus, colors));
  emit_json(g, j);
  return 0;
}

int cmd_torsion(const GlobalOpts& g, long p, long q, int rep,
                const std::string& formula) {
  auto store = make_store(g);
  ParabolicAlgebra v = build_algebra_cached(p, q, store.get());
  TorsionPair t = (rep == 1) ? tau1(v) : tau2(v);
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["rep"] = rep;
  j["formula"] = formula;
  j["tau"] = poly_to_json(formula == "raw" ? t.raw.rep() : t.simple.rep());
  j["match"] = t.match();
  emit_json(g, j);
  return 0;
}

int cmd_invsum(const GlobalOpts& g, long pmax) {
  auto store = make_store(g);
  auto pairs = hyperbolic_pairs(pmax);
  struct Row {
    long p, q;
    Rational s1, s2, expect1;
  };
  std::vector<Row> rows(pairs.size());
  parallel_for(pairs.size(), g.threads, [&](size_t i) {
    auto [p, q] = pairs[i];
    ParabolicAlgebra v = build_algebra_cached(p, q, store.get());
    rows[i] = {p, q, inverse_sum_tau1(v), inverse_sum_tau2(v),
               expected_inverse_sum_tau1(v.tb)};
  });
  if (g.format == "json") {
    Json arr = Json::array();
    for (const Row& r : rows) {
      Json j;
      j["p"] = r.p;
      j["q"] = r.q;
      j["sum1"] = rational_string(r.s1);
      j["sum2"] = rational_string(r.s2);
      j["expected1"] = rational_string(r.expect1);
      arr.push_back(j);
    }
    emit_json(g, arr);
  } else {
    std::ostringstream out;
    out << "p,q,sum1,sum2,expected1\n";
    for (const Row& r : rows)
      out << r.p << "," << r.q << "," << rational_string(r.s1) << ","
          << rational_string(r.s2) << "," << rational_string(r.expect1) << "\n";
    emit(g, out.str());
  }
  return 0;
}

int cmd_asymptotic(const GlobalOpts& g, long a, long b, long c, long d, long gmax,
                   long nmax) {
  MatrixParams m = make_matrix_params(a, b, c, d);
  HTriple h = h_polynomials(m);
  ConditionH ch = condition_h(h);

  std::vector<RatioRow> rows;
  if (nmax >= 11 && ch.ok()) {
    std::vector<long> ns;
    for (long n = 11; n <= nmax; n += 2) ns.push_back(n);
    rows.resize(ns.size());
    parallel_for(ns.size(), g.threads, [&](size_t i) {
      rows[i] = ratio_table(m, 2, {ns[i]})[0];
    });
  }

  if (g.format == "csv") {
    std::ostringstream out;
    out << "n,pn,qn,sigma,dim,ratio,limit,err\n";
    for (const RatioRow& r : rows)
      out << r.n << "," << r.pn << "," << r.qn << "," << r.sigma.get_str() << ","
          << r.dim.get_str() << "," << rational_string(r.ratio) << ","
          << rational_string(r.limit) << "," << rational_string(r.err) << "\n";
    emit(g, out.str());
    return 0;
  }

  Json j;
  j["a"] = a;
  j["b"] = b;
  j["c"] = c;
  j["d"] = d;
  j["alpha"] = alpha_sequence(m);
  j["h1"] = poly_to_json(h.h1);
  j["h2"] = poly_to_json(h.h2);
  j["h3"] = poly_to_json(h.h3);
  Json cj;
  cj["h1_squarefree"] = ch.h1_squarefree;
  cj["h1_h3_coprime"] = ch.h1_h3_coprime;
  cj["ok"] = ch.ok();
  j["conditionH"] = cj;
  if (ch.ok()) {
    LimitAlgebra w = build_limit_algebra(m);
    j["omegaW"] = poly_to_json(w.omega_w.rep());
    Json traces;
    for (long gg = 2; gg <= gmax; ++gg)
      traces[std::to_string(gg)] = rational_string(limit_trace(w, gg));
    j["limit_traces"] = traces;
  } else {
    j["omegaW"] = nullptr;
    j["limit_traces"] = Json::object();
  }
  Json arr = Json::array();
  for (const RatioRow& r : rows) {
    Json row;
    row["n"] = r.n;
    row["pn"] = r.pn;
    row["qn"] = r.qn;
    row["sigma"] = int_str(r.sigma);
    row["dim"] = int_str(r.dim);
    row["ratio"] = rational_string(r.ratio);
    row["limit"] = rational_string(r.limit);
    row["err"] = rational_string(r.err);
    arr.push_back(row);
  }
  j["ratio_rows"] = arr;
  emit_json(g, j);
  return 0;
}

int cmd_qlemma(const GlobalOpts& g, long a, long b, long c, long d) {
  MatrixParams m = make_matrix_params(a, b, c, d);
  BivariateTriple t = bivariate_polys(m);
  QlemmaReport rep = qlemma_report(m);
  Json j;
  j["a"] = a;
  j["b"] = b;
  j["c"] = c;
  j["d"] = d;
  j["sign_q"] = t.sign_q;
  j["sign_r"] = t.sign_r;
  Json cl;
  cl["symmetries"] = rep.symmetries;
  cl["extreme_v"] = rep.extreme_v;
  cl["newton"] = rep.newton;
  cl["u_pm_one"] = rep.u_pm_one;
  cl["expansion_h1"] = rep.expansion_h1;
  cl["expansion_h2"] = rep.expansion_h2;
  cl["expansion_h3"] = rep.expansion_h3;
  j["clauses"] = cl;
  j["all"] = rep.all();
  emit_json(g, j);
  return rep.all() ? 0 : 1;
}

int cmd_sweep(const GlobalOpts& g, long dmax) {
  std::vector<SweepRow> rows = condition_h_sweep(dmax, g.threads);
  if (g.format == "json") {
    Json arr = Json::array();
    for (const SweepRow& r : rows) {
      Json j;
      j["b"] = r.b;
      j["d"] = r.d;
      j["a"] = r.a;
      j["c"] = r.c;
      j["ok"] = r.ok;
      arr.push_back(j);
    }
    emit_json(g, arr);
  } else {
    std::ostringstream out;
    out << "b,d,a,c,ok\n";
    for (const SweepRow& r : rows)
      out << r.b << "," << r.d << "," << r.a << "," << r.c << "," << (r.ok ? 1 : 0)
          << "\n";
    emit(g, out.str());
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, long pmax) {
  SuiteReport rep = run_suite(suite, pmax, g.threads);
  Json j;
  j["suite"] = rep.suite;
  j["pmax"] = pmax;
  j["checked"] = rep.checked;
  j["failed"] = rep.failed;
  j["first_counterexample"] = rep.first_counterexample;
  j["pass"] = rep.pass();
  emit_json(g, j);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact invariants of two-bridge knots: defining polynomials, torsions,\n"
      "signatures, and the asymptotic limit algebra of a congruence seed matrix"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir,
                 "directory for per-(p,q) artifacts; default $PARAB_CACHE_DIR");
  app.add_option("-o,--output", g.output, "write to a file instead of stdout");
  app.add_option("--threads", g.threads, "worker count for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  long p = 0, q = 0, genus = 2;
  long ma = 0, mb = 0, mc = 0, md = 0;
  long pmax = 25, dmax = 100, nmax = 0, gmax = 6;
  int rep = 1;
  std::string formula = "simple", suite;
  std::vector<long> colors;
  std::function<int()> job;

  auto add_pq = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "odd numerator >= 3")->required();
    cmd->add_option("--q", q, "odd coprime partner, 0 < q < p")->required();
  };
  auto add_abcd = [&](CLI::App* cmd) {
    cmd->add_option("--a", ma)->required();
    cmd->add_option("--b", mb)->required();
    cmd->add_option("--c", mc)->required();
    cmd->add_option("--d", md)->required();
  };

  CLI::App* c_riley = app.add_subcommand("riley", "defining polynomial and sign data");
  add_pq(c_riley);
  c_riley->callback([&] { job = [&] { return cmd_riley(g, p, q); }; });

  CLI::App* c_frob =
      app.add_subcommand("frobenius", "algebra data: form element, involution, pairing");
  add_pq(c_frob);
  c_frob->callback([&] { job = [&] { return cmd_frobenius(g, p, q); }; });

  CLI::App* c_tor = app.add_subcommand("torsion", "torsion element, both routes");
  add_pq(c_tor);
  c_tor->add_option("--rep", rep, "1 tautological, 2 adjoint")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  c_tor->add_option("--formula", formula, "which representative to print")
      ->check(CLI::IsMember({"simple", "raw"}))
      ->capture_default_str();
  c_tor->callback([&] { job = [&] { return cmd_torsion(g, p, q, rep, formula); }; });

  CLI::App* c_inv =
      app.add_subcommand("invsum", "inverse torsion sums over all pairs up to --pmax "
                                   "(csv columns p,q,sum1,sum2,expected1)");
  c_inv->add_option("--pmax", pmax, "largest p")->required();
  c_inv->callback([&] { job = [&] { return cmd_invsum(g, pmax); }; });
  c_inv->parse_complete_callback([&] {
    if (!app.get_option("--format")->count()) g.format = "csv";
  });

  CLI::App* c_sig = app.add_subcommand("signature", "genus-g trace invariant");
  add_pq(c_sig);
  c_sig->add_option("--g", genus, "genus >= 1 (0 allowed with --colors)")
      ->capture_default_str();
  c_sig->add_option("--colors", colors, "comma-separated color indices")
      ->delimiter(',');
  c_sig->callback([&] { job = [&] { return cmd_signature(g, p, q, genus, colors); }; });

  CLI::App* c_asy = app.add_subcommand(
      "asymptotic", "limit algebra of a seed matrix, with optional ratio rows");
  add_abcd(c_asy);
  c_asy->add_option("--g", gmax, "largest genus in the trace map")
      ->capture_default_str();
  c_asy->add_option("--nmax", nmax,
                    "emit ratio rows for odd n in [11, nmax]; 0 disables");
  c_asy->callback(
      [&] { job = [&] { return cmd_asymptotic(g, ma, mb, mc, md, gmax, nmax); }; });

  CLI::App* c_ql =
      app.add_subcommand("qlemma", "clause-by-clause bivariate identity report");
  add_abcd(c_ql);
  c_ql->callback([&] { job = [&] { return cmd_qlemma(g, ma, mb, mc, md); }; });

  CLI::App* c_sw = app.add_subcommand(
      "conditionH-sweep", "semi-simplicity condition over all seeds with d < dmax "
                          "(csv columns b,d,a,c,ok; ok is 1 or 0)");
  c_sw->add_option("--dmax", dmax, "exclusive bound on d")->capture_default_str();
  c_sw->callback([&] { job = [&] { return cmd_sweep(g, dmax); }; });
  c_sw->parse_complete_callback([&] {
    if (!app.get_option("--format")->count()) g.format = "csv";
  });

  CLI::App* c_ver = app.add_subcommand("verify", "run a named property suite");
  c_ver->add_option("--suite", suite, "identities|torsion|sums|reciprocity|asymptotics")
      ->required()
      ->check(CLI::IsMember(
          {"identities", "torsion", "sums", "reciprocity", "asymptotics"}));
  c_ver->add_option("--pmax", pmax, "sweep bound")->capture_default_str();
  c_ver->callback([&] { job = [&] { return cmd_verify(g, suite, pmax); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return job();
  } catch (const invalid_params& e) {
    return fail_with_record(g, "invalid_params", e.what(), 2);
  } catch (const not_invertible& e) {
    return fail_with_record(g, "not_invertible", e.what(), 1);
  } catch (const condition_h_fails& e) {
    return fail_with_record(g, "condition_h_fails", e.what(), 1);
  } catch (const specialization_mismatch& e) {
    return fail_with_record(g, "specialization_mismatch", e.what(), 1);
  } catch (const precision_exhausted& e) {
    return fail_with_record(g, "precision_exhausted", e.what(), 1);
  } catch (const integrality_violation& e) {
    return fail_with_record(g, "integrality_violation", e.what(), 1);
  } catch (const internal_inconsistency& e) {
    return fail_with_record(g, "internal_inconsistency", e.what(), 1);
  } catch (const std::exception& e) {
    return fail_with_record(g, "error", e.what(), 1);
  }
}
