// One line per acceptance criterion: PASS/FAIL, elapsed time and time limit.
// Exit status is nonzero when any criterion fails or exceeds its limit.

#include "oracles.hpp"
#include "typedtrees/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace typedtrees;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const PropertyResult& r) {
    require(r.passed, r.name + ": " + r.counterexample);
    instances += r.instances;
  }
  long instances = 0;
};

std::vector<long> longs(const IntSeries& s, int to) {
  std::vector<long> out;
  for (int n = 1; n <= to; ++n) out.push_back(s[static_cast<std::size_t>(n)].get_si());
  return out;
}

std::string join(const std::vector<long>& v) {
  std::string out;
  for (long x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

Lambda lam(Rational red, Rational green) {
  Lambda l;
  l.set(0, red);
  l.set(1, green);
  return l;
}

// ---------------------------------------------------------------- 1

Outcome enumeration() {
  Outcome o;
  struct Case {
    int D, T, n;
    std::vector<long> expected;
  };
  for (const Case& c : {Case{1, 1, 8, {1, 1, 2, 4, 9, 20, 48, 115}}, Case{1, 2, 6, {1, 2, 7, 26, 107, 458}}}) {
    const auto series = longs(tree_series(c.D, c.T, c.n), c.n);
    auto gen = plain_enumerator(c.D, c.T);
    std::vector<long> generated;
    for (int n = 1; n <= c.n; ++n) generated.push_back(static_cast<long>(gen.trees(n).size()));
    std::vector<long> transported;
    const IntSeries merged = tree_series(c.T * c.D, 1, c.n);
    for (int n = 1; n <= c.n; ++n) {
      const Integer v = merged[static_cast<std::size_t>(n)];
      o.require(v % c.T == 0, "transport not divisible");
      transported.push_back(Integer(v / c.T).get_si());
    }
    const std::string tag = "t_{" + std::to_string(c.D) + "," + std::to_string(c.T) + "}";
    o.require(series == c.expected, tag + " series " + join(series));
    o.require(generated == c.expected, tag + " generation " + join(generated));
    o.require(transported == c.expected, tag + " transport " + join(transported));
  }
  o.detail = o.ok ? "series, generation and transport agree" : o.detail;
  return o;
}

// ---------------------------------------------------------------- 2

Outcome closed_forms() {
  Outcome o;
  for (int D = 1; D <= 3; ++D)
    for (int T = 1; T <= 3; ++T) {
      const IntSeries s = tree_series(D, T, 7);
      for (int n = 1; n <= 7; ++n) {
        try {
          o.require(closed_form_check(D, T, n) == s[static_cast<std::size_t>(n)],
                    "closed form differs at D=" + std::to_string(D) + " T=" + std::to_string(T) + " n=" + std::to_string(n));
        } catch (const std::exception& e) {
          o.require(false, e.what());
        }
      }
    }
  const auto report = tree_discrepancy_report();
  std::vector<std::pair<int, std::string>> flagged;
  for (const auto& e : report) flagged.push_back({e.n, e.formula});
  const std::vector<std::pair<int, std::string>> expected{
      {2, "D^2t"}, {3, "D^2T(3D+1)/2"}, {4, "D^2T(8S^2T^2+3DT+1)/3"}};
  o.require(flagged == expected, "discrepancy report has " + std::to_string(report.size()) + " entries");
  o.require(restricted_discrepancy_report().empty(), "restricted forms flagged");
  if (o.ok) o.detail = "63 values, report flags " + std::to_string(report.size()) + " typos";
  return o;
}

// ---------------------------------------------------------------- 3

Outcome restricted_counts() {
  Outcome o;
  const std::vector<long> expected{1, 1, 3, 10, 39, 160};
  o.require(longs(restricted_tree_series(1, 2, 6), 6) == expected, "series " + join(longs(restricted_tree_series(1, 2, 6), 6)));
  auto gen = plain_enumerator(1, 2);
  for (TypeId t0 = 0; t0 < 2; ++t0) {
    std::vector<long> g;
    for (int n = 1; n <= 6; ++n) g.push_back(static_cast<long>(gen.restricted(n, t0).size()));
    o.require(g == expected, "generation " + join(g));
  }
  for (int D = 1; D <= 3; ++D)
    for (int T = 1; T <= 3; ++T) {
      const IntSeries s = restricted_tree_series(D, T, 4);
      for (const auto& form : restricted_closed_forms()) {
        if (form.n > 4) continue;
        const Rational v = evaluate_formula(form.corrected, {{'D', D}, {'T', T}});
        o.require(v == Rational(s[static_cast<std::size_t>(form.n)]), "closed form " + form.corrected);
      }
    }
  if (o.ok) o.detail = "t'_{1,2}(1..6) = " + join(expected);
  return o;
}

// ---------------------------------------------------------------- 4-10

Outcome suite(const std::function<void(Outcome&)>& body) {
  Outcome o;
  body(o);
  if (o.ok) o.detail = std::to_string(o.instances) + " instances";
  return o;
}

VerifyContext single_semigroup() { return VerifyContext::standard(); }

// ---------------------------------------------------------------- 11

struct Golden {
  std::vector<std::string> args;
  std::string expected;
};

Outcome goldens(const std::string& matrix_file) {
  const std::vector<Golden> cases{
      // canonical forms
      {{"pair", "a[green:c,red:b]", "a[red:b,green:c]"}, "1"},
      {{"pair", "a[red:c,red:b]", "a[red:b,red:c]"}, "1"},
      {{"pair", "a[red:b,red:b]", "a[red:b,red:b]"}, "2"},
      {{"enumerate", "--forests", "-n", "2", "-T", "2", "--decorations", "a"}, "a a\na[red:a]\na[green:a]"},
      {{"count", "--forests", "-n", "2", "-T", "2"}, "1\t1\n2\t3"},
      // small counts
      {{"count", "-D", "3", "-T", "2", "-n", "2"}, "1\t3\n2\t18"},
      {{"count", "-T", "1", "-n", "3"}, "1\t1\n2\t1\n3\t2"},
      {{"count", "--restricted", "-n", "2", "-T", "2"}, "1\t1\n2\t1"},
      // grafting
      {{"graft", "a[red:b]", "c", "--type", "red"}, "a[red:b,red:c]"},
      {{"graft", "a[red:b]", "c", "--at", "/0", "--type", "green"}, "a[red:b[green:c]]"},
      {{"prelie", "--type", "red", "a[red:b]", "c"}, "1 * a[red:b,red:c] + 1 * a[red:b[red:c]]"},
      {{"prelie", "--lambda", "red=2,green=3", "a[red:b]", "c"},
       "2 * a[red:b,red:c] + 3 * a[red:b,green:c] + 2 * a[red:b[red:c]] + 3 * a[red:b[green:c]]"},
      // star and CK
      {{"--lambda", "red=2,green=3", "star", "a[red:b]", "c"},
       "1 * a[red:b] c + 2 * a[red:b,red:c] + 3 * a[red:b,green:c] + 2 * a[red:b[red:c]] + 3 * a[red:b[green:c]]"},
      {{"ck", "--lambda", "red=1,green=1", "a[red:b]"}, "1 * a[red:b] | 1 + 1 * 1 | a[red:b] + 1 * a | b"},
      {{"ck", "a"}, "1 * a | 1 + 1 * 1 | a"},
      {{"--lambda", "red=2,green=3", "ck", "a[red:b]"}, "1 * a[red:b] | 1 + 1 * 1 | a[red:b] + 2 * a | b"},
      {{"--lambda", "red=2,green=3", "ck", "a[red:b,red:c]"},
       "1 * a[red:b,red:c] | 1 + 1 * 1 | a[red:b,red:c] + 2 * a[red:c] | b + 4 * a | b c + 2 * a[red:b] | c"},
      {{"--lambda", "red=2,green=3", "ck", "a[red:b,green:c]"},
       "1 * a[red:b,green:c] | 1 + 1 * 1 | a[red:b,green:c] + 2 * a[green:c] | b + 6 * a | b c + 3 * a[red:b] | c"},
      {{"pair", "a[red:b]", "a[green:b]"}, "0"},
      // contraction coproduct
      {{"delta", "x"}, "1 * x | x"},
      {{"delta", "x[red:x]"}, "1 * x[red:x] | x x + 1 * x | x[red:x]"},
      {{"delta", "x[red:x,red:x]"}, "1 * x[red:x,red:x] | x x x + 2 * x[red:x] | x x[red:x] + 1 * x | x[red:x,red:x]"},
      // edge-type substitution with M = (2 3; 5 7)
      {{"phi", "--matrix", matrix_file, "x[red:y]"}, "2 * x[red:y] + 5 * x[green:y]"},
      {{"phi", "--matrix", matrix_file, "x[red:z,green:y]"},
       "6 * x[red:y,red:z] + 15 * x[red:y,green:z] + 14 * x[red:z,green:y] + 35 * x[green:y,green:z]"},
      // Ψ*
      {{"--lambda", "red=2,green=3", "psi-star", "x"}, "1 * {x}"},
      {{"--lambda", "red=2,green=3", "psi-star", "x[red:x]"}, "2 * {x}[_:{x}]"},
      {{"--lambda", "red=2,green=3", "psi-star", "x[green:x]"}, "3 * {x}[_:{x}] + 1 * {x[green:x]}"},
      // operad
      {{"compose", "--classical", "1[red:2]", "1", "1[green:2]"}, "1 * 1[red:3,green:2] + 1 * 1[green:2[red:3]]"},
      {{"compose", "--classical", "1[green:2]", "2", "1[red:2]"}, "1 * 1[green:2[red:3]]"},
      {{"compose", "--classical", "1", "1", "1[red:2,green:3]"}, "1 * 1[red:2,green:3]"},
  };
  Outcome o;
  for (const auto& g : cases) {
    std::vector<std::string> args{"typedtrees"};
    args.insert(args.end(), g.args.begin(), g.args.end());
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    std::string cmd;
    for (const auto& a : g.args) cmd += (cmd.empty() ? "" : " ") + a;
    o.require(code == 0 && out.str() == g.expected + "\n", "`" + cmd + "` gave `" + out.str() + err.str() + "`");
    ++o.instances;
  }
  if (o.ok) o.detail = std::to_string(o.instances) + " commands byte-exact";
  return o;
}

}  // namespace

int main() {
  const std::string matrix_file = "acceptance_matrix.txt";
  std::ofstream(matrix_file) << "2 3\n5 7\n";

  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "enumeration", 10, enumeration},
      {2, "closed forms", 5, closed_forms},
      {3, "restricted counts", 10, restricted_counts},
      {4, "multiple pre-Lie identity", 60,
       [] {
         return suite([](Outcome& o) {
           auto ctx = VerifyContext::standard();
           o.require(check_multiple_prelie(ctx, 6));
         });
       }},
      {5, "NAP suite", 60,
       [] {
         return suite([](Outcome& o) {
           auto ctx = VerifyContext::standard();
           o.require(check_nap_coassociativity(ctx, 5));
           o.require(check_nap_compatibility(ctx, 5));
           o.require(check_nap_kernel(ctx, 5));
         });
       }},
      {6, "Hopf suite", 120,
       [] {
         return suite([](Outcome& o) {
           auto ctx = VerifyContext::standard();
           o.require(check_ck_coassociativity(ctx, 5));
           o.require(check_ck_multiplicativity(ctx, 5));
           o.require(check_antipode(ctx, 5));
           o.require(check_star_associativity(ctx, 5));
           o.require(check_star_compatibility(ctx, 5));
           o.require(check_ck_algorithms(ctx, 5));
           for (const auto& l : ctx.lambdas())
             for (int n = 1; n <= 5; ++n)
               for (const auto& t : ctx.trees(n)) {
                 o.require(ck_coproduct(Forest(t), l) == oracle::ck_by_subsets(t, l), "edge-subset oracle at " + ctx.show(t));
                 ++o.instances;
               }
         });
       }},
      {7, "duality", 120,
       [] {
         return suite([](Outcome& o) {
           auto ctx = VerifyContext::standard();
           o.require(check_duality(ctx, 5));
         });
       }},
      {8, "cointeraction", 60,
       [] {
         return suite([](Outcome& o) {
           auto ctx = single_semigroup();
           o.require(check_delta_coassociativity(ctx, 4));
           o.require(check_delta_multiplicativity(ctx, 4));
           o.require(check_cointeraction(ctx, 4));
         });
       }},
      {9, "operad suite", 120,
       [] {
         return suite([](Outcome& o) {
           auto ctx = VerifyContext::standard();
           o.require(check_operad_axioms(ctx.alphabets().types, 3));
           o.require(check_operad_dimensions(5, 2));
           o.require(check_permutative(4, 2));
           o.require(check_operad_bridge(ctx, 4));
         });
       }},
      {10, "morphism suite", 120,
       [] {
         return suite([](Outcome& o) {
           auto ctx = VerifyContext::standard();
           o.require(check_phi_functoriality(ctx, 4));
           o.require(check_phi_prelie(ctx, 4));
           o.require(check_phi_hopf(ctx, 4));
           o.require(check_change_matrices(ctx));
           o.require(check_psi_star_morphism(ctx, 4));
           o.require(check_psi_adjoint(ctx, 4));
           o.require(check_psi_star_bijective(ctx, 4));
         });
       }},
      {11, "worked examples", 5, [&] { return goldens(matrix_file); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " " << c.name << ": " << o.detail;
    if (!in_time) line << " (over time limit)";
    line << " [" << std::fixed << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.limit << " s]";
    std::cout << line.str() << std::endl;
  }
  std::remove(matrix_file.c_str());
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
