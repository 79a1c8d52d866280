#pragma once

// Command-line front end. run() parses arguments, dispatches to a subcommand
// and writes deterministic text; exit 0 on success, 1 on a domain error, 2 on
// a usage error.

#include "typedtrees/generate.hpp"
#include "typedtrees/hopf.hpp"
#include "typedtrees/literal.hpp"
#include "typedtrees/morphisms.hpp"
#include "typedtrees/operad.hpp"
#include "typedtrees/prelie.hpp"
#include "typedtrees/series.hpp"
#include "typedtrees/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace typedtrees::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Type names used when --types is not given: red, green, blue, then t3, t4...
inline std::vector<std::string> default_type_names(int n) {
  static const char* const named[] = {"red", "green", "blue"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 3 ? named[i] : "t" + std::to_string(i));
  return out;
}

/// Decoration names used when neither --decorations nor a literal names them.
inline std::vector<std::string> default_decoration_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "d" + std::to_string(i));
  return out;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

namespace detail {

// Reads tree literals without an alphabet, recording decoration names.
struct CollectSyntax {
  using dec_type = std::string;
  std::set<std::string>* names;

  std::string parse_dec(Cursor& in) const {
    std::string s = in.identifier();
    names->insert(s);
    return s;
  }
  std::string dec_name(const std::string& s) const { return s; }
  TypeId parse_type(Cursor& in) const {
    in.identifier();
    return 0;
  }
  std::string type_name(TypeId) const { return "_"; }
};

inline void collect_decorations(const std::string& text, std::set<std::string>& names) {
  const CollectSyntax syn{&names};
  auto forest = [&](std::string_view s) {
    try {
      parse_forest(s, syn);
    } catch (const ParseError&) {
      // reported properly once the alphabet is known
    }
  };
  if (text.find(" * ") == std::string::npos) {
    forest(text);
    return;
  }
  try {
    parse_lincomb<int>(text, [&](std::string_view key) {
      forest(key);
      return 0;
    });
  } catch (const std::invalid_argument&) {
  }
}

}  // namespace detail

/// Options shared by all subcommands.
struct Settings {
  std::string decorations;
  std::string types;
  std::string semigroup;
  std::string lambda;
  std::string t0;
  int D = 0;
  int T = 0;
  int n = 6;
};

class Session {
 public:
  Session(const Settings& s, const std::vector<std::string>& literals) : alphabets_(make(s, literals)) {
    if (!s.semigroup.empty()) install_semigroup(s.semigroup);
    if (!s.lambda.empty()) lambda_ = Lambda::parse(s.lambda, alphabets_.types);
    t0_ = s.t0.empty() ? 0 : alphabets_.types.id(s.t0);
  }

  const Alphabets& alphabets() const { return alphabets_; }
  NamedSyntax syntax() const { return NamedSyntax{&alphabets_}; }
  TypeId t0() const { return t0_; }
  bool has_lambda() const { return lambda_.has_value(); }
  /// The given λ, or λ_t = 1 for every type.
  Lambda lambda() const { return lambda_ ? *lambda_ : Lambda::uniform(alphabets_.types.size()); }

  Tree tree(const std::string& text) const { return parse_tree(text, syntax()); }
  Forest forest(const std::string& text) const { return parse_forest(text, syntax()); }

  LinComb<Tree> trees(const std::string& text) const {
    if (text.find(" * ") == std::string::npos) return LinComb<Tree>(tree(text));
    return parse_lincomb<Tree>(text, [&](std::string_view k) { return parse_tree(k, syntax()); });
  }
  LinComb<Forest> forests(const std::string& text) const {
    if (text.find(" * ") == std::string::npos) return LinComb<Forest>(forest(text));
    return parse_lincomb<Forest>(text, [&](std::string_view k) { return parse_forest(k, syntax()); });
  }

  std::string show(const Tree& t) const { return render(t, syntax()); }
  std::string show(const Forest& f) const { return render(f, syntax()); }

 private:
  static Alphabets make(const Settings& s, const std::vector<std::string>& literals) {
    std::vector<std::string> types;
    if (!s.types.empty()) {
      types = split_list(s.types);
      if (s.T && s.T != static_cast<int>(types.size())) throw UsageError("-T disagrees with --types");
    } else {
      types = default_type_names(s.T ? s.T : 2);
    }
    std::vector<std::string> decs;
    if (!s.decorations.empty()) {
      decs = split_list(s.decorations);
      if (s.D && s.D != static_cast<int>(decs.size())) throw UsageError("-D disagrees with --decorations");
    } else if (s.D) {
      decs = default_decoration_names(s.D);
    } else {
      std::set<std::string> seen;
      for (const auto& l : literals) detail::collect_decorations(l, seen);
      decs.assign(seen.begin(), seen.end());
      if (decs.empty()) decs = default_decoration_names(1);
    }
    return Alphabets{DecorationAlphabet(std::move(decs)), TypeAlphabet(std::move(types))};
  }

  // `max`, or a table `a+b=c,...` listing every unordered pair once.
  void install_semigroup(const std::string& text) {
    auto& decs = alphabets_.decorations;
    if (text == "max") {
      decs.set_max_semigroup();
      return;
    }
    const auto n = static_cast<std::size_t>(decs.size());
    DecorationAlphabet::Table table(n, std::vector<DecId>(n, -1));
    for (const auto& item : split_list(text)) {
      const auto plus = item.find('+');
      const auto eq = item.find('=');
      if (plus == std::string::npos || eq == std::string::npos || eq < plus) {
        throw UsageError("semigroup entry '" + item + "' is not of the form x+y=z");
      }
      const DecId a = decs.id(item.substr(0, plus));
      const DecId b = decs.id(item.substr(plus + 1, eq - plus - 1));
      const DecId c = decs.id(item.substr(eq + 1));
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
      table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = c;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table[a][b] < 0) throw AlphabetError("semigroup table lacks " + decs.names()[a] + "+" + decs.names()[b]);
    decs.set_semigroup(std::move(table));
  }

  Alphabets alphabets_;
  std::optional<Lambda> lambda_;
  TypeId t0_ = 0;
};

inline std::vector<Lambda> standard_lambdas(int num_types) {
  Lambda mixed = Lambda::uniform(num_types, 1);
  mixed.set(0, Rational(2, 3));
  if (num_types > 1) mixed.set(1, Rational(-5));
  return {Lambda::uniform(num_types, 1), Lambda::single(0, 1), mixed};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Typed decorated rooted trees: enumeration, products, Hopf algebras, morphisms, operad"};
  app.name("typedtrees");
  app.set_config("--config", "", "Read options from a key=value file");
  app.get_config_formatter_base()->arrayDelimiter(';');
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--decorations", s.decorations, "Decoration names, comma separated (default: names used in the input)");
  app.add_option("--types", s.types, "Edge type names, comma separated (default: red,green)");
  app.add_option("--semigroup", s.semigroup, "Semigroup law on decorations: max, or a table a+b=c,...");
  app.add_option("--lambda", s.lambda, "Parameter vector type=rational,... (omitted types are 0; default all 1)");
  app.add_option("--t0", s.t0, "Distinguished type (default: the first type)");
  app.add_option("-D,--num-decorations", s.D, "Number of decorations")->check(CLI::PositiveNumber);
  app.add_option("-T,--num-types", s.T, "Number of edge types")->check(CLI::PositiveNumber);
  app.add_option("-n,--degree", s.n, "Maximal degree")->check(CLI::NonNegativeNumber);

  std::vector<std::string> literals;
  std::function<void(Session&)> action;
  auto literal = [&](CLI::App* sub, const char* name, std::string& target, const char* help) {
    sub->add_option(name, target, help)->required();
  };

  // count
  auto* count = app.add_subcommand("count", "Count trees, forests or restricted trees by vertex number");
  std::string kind = "trees";
  std::string method = "series";
  bool report = false;
  count->add_flag_callback("--trees", [&] { kind = "trees"; }, "Count trees (default)");
  count->add_flag_callback("--forests", [&] { kind = "forests"; }, "Count forests");
  count->add_flag_callback("--restricted", [&] { kind = "restricted"; }, "Count trees without a root edge of type t0");
  count->add_option("--method", method, "series, generate, transport (trees only) or closed (trees only, n <= 7)")
      ->check(CLI::IsMember({"series", "generate", "transport", "closed"}));
  count->add_flag("--report", report, "Print the discrepancy report of the printed closed forms instead");
  count->callback([&] {
    action = [&](Session& ss) {
      if (report) {
        for (const auto* which : {"trees", "restricted"}) {
          const auto entries =
              std::string(which) == "trees" ? tree_discrepancy_report() : restricted_discrepancy_report();
          for (const auto& e : entries) {
            out << which << "\tn=" << e.n << "\tD=" << e.D << "\tT=" << e.T << "\t" << e.formula << "\t" << e.reason
                << "\n";
          }
        }
        return;
      }
      const int D = ss.alphabets().decorations.size();
      const int T = ss.alphabets().types.size();
      const int n = s.n;
      IntSeries values(static_cast<std::size_t>(n) + 1, 0);
      if (method == "series") {
        if (kind == "trees") values = tree_series(D, T, n);
        if (kind == "forests") values = forest_series(tree_series(D, T, n), n);
        if (kind == "restricted") values = restricted_tree_series(D, T, n);
      } else if (method == "generate") {
        auto gen = plain_enumerator(D, T);
        for (int k = 1; k <= n; ++k) {
          std::size_t c = 0;
          if (kind == "trees") c = gen.trees(k).size();
          if (kind == "forests") c = gen.forests(k).size();
          if (kind == "restricted") c = gen.restricted(k, ss.t0()).size();
          values[static_cast<std::size_t>(k)] = static_cast<unsigned long>(c);
        }
      } else {
        if (kind != "trees") throw UsageError("--method " + method + " applies to --trees only");
        if (method == "transport") {
          const IntSeries one = tree_series(T * D, 1, n);
          for (int k = 1; k <= n; ++k) values[static_cast<std::size_t>(k)] = one[static_cast<std::size_t>(k)] / T;
        } else {
          if (n > 7) throw std::invalid_argument("closed forms are known for n <= 7 only");
          for (int k = 1; k <= n; ++k) values[static_cast<std::size_t>(k)] = closed_form_check(D, T, k);
        }
      }
      for (int k = 1; k <= n; ++k) out << k << "\t" << to_string(values[static_cast<std::size_t>(k)]) << "\n";
    };
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List all trees or forests with n vertices in canonical order");
  std::string ekind = "trees";
  enumerate->add_flag_callback("--trees", [&] { ekind = "trees"; }, "List trees (default)");
  enumerate->add_flag_callback("--forests", [&] { ekind = "forests"; }, "List forests");
  enumerate->add_flag_callback("--restricted", [&] { ekind = "restricted"; }, "List trees without a root edge of type t0");
  enumerate->callback([&] {
    action = [&](Session& ss) {
      const BasisKind k = ekind == "trees" ? BasisKind::trees : ekind == "forests" ? BasisKind::forests : BasisKind::restricted;
      const auto basis = generate_basis(k, ss.alphabets().decorations.size(), ss.alphabets().types.size(), s.n,
                                        k == BasisKind::restricted ? std::optional<TypeId>(ss.t0()) : std::nullopt);
      if (k == BasisKind::forests) {
        for (const auto& f : basis.forests) out << ss.show(f) << "\n";
      } else {
        for (const auto& t : basis.trees) out << ss.show(t) << "\n";
      }
    };
  });

  // graft
  auto* graft = app.add_subcommand("graft", "Graft S onto the vertex of T at an address such as / or /0/1");
  std::string g_t, g_s, g_at = "/", g_type;
  graft->add_option("--at", g_at, "Vertex address: child indices in canonical order");
  graft->add_option("--type", g_type, "Type of the new edge")->required();
  literal(graft, "T", g_t, "Receiving tree");
  literal(graft, "S", g_s, "Grafted tree");
  graft->callback([&] {
    literals = {g_t, g_s};
    action = [&](Session& ss) {
      if (g_at.empty() || g_at[0] != '/') throw UsageError("address must start with '/'");
      Address addr;
      std::stringstream in(g_at.substr(1));
      std::string part;
      while (std::getline(in, part, '/')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
          throw UsageError("bad address component '" + part + "'");
        }
        addr.push_back(std::stoi(part));
      }
      const Tree r = graft_at(ss.tree(g_t), addr, ss.tree(g_s), ss.alphabets().types.id(g_type));
      out << ss.show(r) << "\n";
    };
  });

  // prelie
  auto* prelie = app.add_subcommand("prelie", "Grafting product x •_t y, or x •_λ y with --lambda");
  std::string p_x, p_y, p_type;
  prelie->add_option("--type", p_type, "Edge type of the product");
  literal(prelie, "x", p_x, "Tree or linear combination");
  literal(prelie, "y", p_y, "Tree or linear combination");
  prelie->callback([&] {
    literals = {p_x, p_y};
    action = [&](Session& ss) {
      if (p_type.empty() == !ss.has_lambda()) throw UsageError("give exactly one of --type and --lambda");
      const Lambda w = p_type.empty() ? ss.lambda() : Lambda::single(ss.alphabets().types.id(p_type));
      out << render(prelie_product(ss.trees(p_x), ss.trees(p_y), w), [&](const Tree& t) { return ss.show(t); }) << "\n";
    };
  });

  // nap
  auto* nap = app.add_subcommand("nap", "NAP coproduct ρ_t, or ρ_μ with --mu");
  std::string n_x, n_type, n_mu;
  nap->add_option("--type", n_type, "Edge type t");
  nap->add_option("--mu", n_mu, "Parameter vector μ");
  literal(nap, "x", n_x, "Tree or linear combination");
  nap->callback([&] {
    literals = {n_x};
    action = [&](Session& ss) {
      if (n_type.empty() == n_mu.empty()) throw UsageError("give exactly one of --type and --mu");
      const auto& types = ss.alphabets().types;
      const Lambda mu = n_mu.empty() ? Lambda::single(types.id(n_type)) : Lambda::parse(n_mu, types);
      auto key = [&](const Tensor2<Tree>& k) {
        return render_tensor(k, [&](const Tree& t) { return ss.show(t); }, [&](const Tree& t) { return ss.show(t); });
      };
      out << render(nap_coproduct(ss.trees(n_x), mu), key) << "\n";
    };
  });

  auto forest_key = [](const Session& ss) { return [&ss](const Forest& f) { return ss.show(f); }; };
  auto pair_key = [](const Session& ss) {
    return [&ss](const ForestPair<DecId>& k) {
      auto f = [&ss](const Forest& x) { return ss.show(x); };
      return render_tensor(k, f, f);
    };
  };

  // star
  auto* star = app.add_subcommand("star", "Product x ⋆_λ y of forests");
  std::string s_x, s_y;
  literal(star, "x", s_x, "Forest or linear combination");
  literal(star, "y", s_y, "Forest or linear combination");
  star->callback([&] {
    literals = {s_x, s_y};
    action = [&](Session& ss) {
      LinComb<Forest> r;
      for (const auto& [a, ca] : ss.forests(s_x))
        for (const auto& [b, cb] : ss.forests(s_y)) r.add(gl_product(a, b, ss.lambda()), ca * cb);
      out << render(r, forest_key(ss)) << "\n";
    };
  });

  // ck
  auto* ck = app.add_subcommand("ck", "Connes-Kreimer coproduct Δ^{CK_λ}");
  std::string c_x, c_alg = "cuts";
  ck->add_option("--algorithm", c_alg, "cuts or recursive")->check(CLI::IsMember({"cuts", "recursive"}));
  literal(ck, "x", c_x, "Forest or linear combination");
  ck->callback([&] {
    literals = {c_x};
    action = [&](Session& ss) {
      const auto alg = c_alg == "cuts" ? CkAlgorithm::cuts : CkAlgorithm::recursive;
      out << render(ck_coproduct(ss.forests(c_x), ss.lambda(), alg), pair_key(ss)) << "\n";
    };
  });

  // antipode
  auto* anti = app.add_subcommand("antipode", "Antipode of H^{CK_λ}");
  std::string a_x;
  literal(anti, "x", a_x, "Forest or linear combination");
  anti->callback([&] {
    literals = {a_x};
    action = [&](Session& ss) { out << render(antipode(ss.forests(a_x), ss.lambda()), forest_key(ss)) << "\n"; };
  });

  // delta
  auto* delta = app.add_subcommand("delta", "Contraction coproduct δ (needs a semigroup law unless D = 1)");
  std::string d_x;
  literal(delta, "x", d_x, "Forest or linear combination");
  delta->callback([&] {
    literals = {d_x};
    action = [&](Session& ss) {
      out << render(contraction_coproduct(ss.forests(d_x), ss.alphabets().decorations), pair_key(ss)) << "\n";
    };
  });

  // pair
  auto* pair = app.add_subcommand("pair", "Pairing <x, y> = sum of δ_{F,F'} s_F");
  std::string r_x, r_y;
  literal(pair, "x", r_x, "Forest or linear combination");
  literal(pair, "y", r_y, "Forest or linear combination");
  pair->callback([&] {
    literals = {r_x, r_y};
    action = [&](Session& ss) { out << to_string(pairing(ss.forests(r_x), ss.forests(r_y))) << "\n"; };
  });

  // phi
  auto* phi = app.add_subcommand("phi", "Edge-type substitution Φ_M");
  std::string m_file, m_x;
  phi->add_option("--matrix", m_file, "File with one matrix row per line (rows: target types)")->required();
  literal(phi, "x", m_x, "Forest or linear combination");
  phi->callback([&] {
    literals = {m_x};
    action = [&](Session& ss) {
      const Matrix m = Matrix::parse(read_file(m_file));
      const auto nt = static_cast<std::size_t>(ss.alphabets().types.size());
      if (m.rows() != nt || m.cols() != nt) throw std::invalid_argument("matrix must be T x T");
      out << render(phi_M(ss.forests(m_x), m), forest_key(ss)) << "\n";
    };
  });

  // psi-star
  auto* psi = app.add_subcommand("psi-star", "Ψ*_{t0}: forests to forests decorated by restricted trees");
  std::string ps_x;
  literal(psi, "x", ps_x, "Forest or linear combination");
  psi->callback([&] {
    literals = {ps_x};
    action = [&](Session& ss) {
      const MetaSyntax msyn{&ss.alphabets()};
      out << render(psi_star(ss.forests(ps_x), ss.t0(), ss.lambda()), [&](const MetaForest& f) { return render(f, msyn); })
          << "\n";
    };
  });

  // compose
  auto* compose = app.add_subcommand("compose", "Operadic composition T ∘_a S of labeled trees");
  std::string o_t, o_s;
  int o_a = 0;
  bool classical = false;
  compose->add_flag("--classical", classical, "Trees labeled 1..n and 1..m; renumber as in ∘_i");
  literal(compose, "T", o_t, "Labeled tree");
  compose->add_option("a", o_a, "Label of T")->required();
  literal(compose, "S", o_s, "Labeled tree");
  compose->callback([&] {
    action = [&](Session& ss) {
      const LabelSyntax syn{&ss.alphabets().types};
      const LabeledTree t = parse_tree(o_t, syn), u = parse_tree(o_s, syn);
      const auto r = classical ? operad_compose_classical(t, o_a, u) : operad_compose(t, o_a, u);
      out << render(r, [&](const LabeledTree& x) { return render(x, syn); }) << "\n";
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive property checks on all small instances");
  std::string suite = "all";
  int max_size = 4;
  verify->add_option("--suite", suite, "prelie, hopf, duality, operad, morphisms, cointeraction or all")
      ->check(CLI::IsMember({"prelie", "hopf", "duality", "operad", "morphisms", "cointeraction", "all"}));
  verify->add_option("--max-size", max_size, "Largest total instance size")->check(CLI::NonNegativeNumber);
  int exit_code = 0;
  verify->callback([&] {
    action = [&](Session& ss) {
      const auto lambdas = ss.has_lambda() ? std::vector<Lambda>{ss.lambda()} : standard_lambdas(ss.alphabets().types.size());
      VerifyContext ctx(ss.alphabets(), lambdas, ss.t0());
      for (const auto& r : run_suite(suite, ctx, max_size)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances)";
        if (!r.passed) {
          out << ": " << r.counterexample;
          exit_code = 1;
        }
        out << "\n";
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Session session(s, literals);
    action(session);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace typedtrees::cli
