#include <sstream>
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "svectkit/checks.hpp"
#include "svectkit/parse.hpp"
#include "svectkit/tubular.hpp"

using json = nlohmann::ordered_json;
using namespace svectkit;

namespace {

int max_n_cap() {
  const char* env = std::getenv("SVECTKIT_MAX_N");
  if (!env) return 30;
  int v = std::atoi(env);
  return v > 0 ? v : 30;
}

json lelt_j(const LElt& x) {
  return json{{"l", {x.l[0], x.l[1], x.l[2]}}, {"m", x.m}};
}

std::vector<int> parse_weight_list(const std::string& s) {
  std::vector<int> w;
  std::stringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
  return w;
}

int run_info(int a, int b, int c, bool as_json) {
  WeightTriple w(a, b, c);
  auto inv = invariants_of_triple(w);
  auto cy = cy_dimension(w);
  auto orlov = orlov_trichotomy(w);
  long long h = coxeter_number(w);
  const char* orlov_name =
      orlov.kind == OrlovCase::Equivalent
          ? "equivalent"
          : (orlov.kind == OrlovCase::CohWindow ? "sheaf-window"
                                                : "stable-window");
  if (as_json) {
    json j;
    j["weights"] = {a, b, c};
    j["pbar"] = inv.pbar;
    j["euler_char"] = inv.euler_char.str();
    j["gorenstein"] = inv.gorenstein;
    j["omega"] = lelt_j(inv.omega);
    j["dominant"] = lelt_j(inv.dominant);
    j["delta_omega"] = inv.delta_omega;
    j["coxeter_number"] = h;
    j["cy_dimension"] = std::to_string(cy.num) + "/" + std::to_string(cy.den);
    j["cy_canceled"] = cy.canceled.str();
    j["orlov"] = orlov_name;
    j["orlov_window_size"] = orlov.window.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "weights        " << w.str() << "\n"
              << "pbar           " << inv.pbar << "\n"
              << "euler char     " << inv.euler_char.str() << "\n"
              << "gorenstein     " << inv.gorenstein << "\n"
              << "omega          " << inv.omega.str() << "\n"
              << "dominant       " << inv.dominant.str() << "\n"
              << "delta(omega)   " << inv.delta_omega << "\n"
              << "coxeter number " << h << "\n"
              << "cy dimension   " << cy.num << "/" << cy.den
              << " (canceled " << cy.canceled.str() << ")\n"
              << "orlov          " << orlov_name << ", window size "
              << orlov.window.size() << "\n";
  }
  return 0;
}

int run_coxpol(const std::string& symbol, bool factor) {
  TypeSymbol s = parse_symbol(symbol);
  IntPoly p = coxpol(s);
  std::cout << s.str() << ": " << p.str() << "\n";
  if (factor) {
    auto f = factor_cyclotomic(p);
    std::cout << "factorization: " << f.str() << "\n";
  }
  return 0;
}

int run_classify(int n, int r) {
  if (n > max_n_cap()) {
    std::cerr << "n exceeds SVECTKIT_MAX_N cap\n";
    return 2;
  }
  auto matches = classify_nakayama(n, r);
  if (matches.empty()) {
    std::cout << "no match\n";
    return 0;
  }
  for (const auto& m : matches) {
    std::cout << m.key();
    if (!is_expected_stable_match(n, r, m)) std::cout << " spontaneous";
    std::cout << "\n";
  }
  return 0;
}

int run_table_hs(int max_n) {
  for (int n = 2; n <= max_n; ++n)
    for (int r = 2; r <= n; ++r) {
      auto matches = classify_nakayama(n, r);
      if (matches.empty()) continue;
      std::cout << n << "\t" << r << "\t";
      bool first = true;
      for (const auto& m : matches) {
        if (!first) std::cout << " ";
        std::cout << m.str();
        if (!is_expected_stable_match(n, r, m)) std::cout << "!";
        first = false;
      }
      std::cout << "\n";
    }
  return 0;
}

int run_table_ade(int max_p) {
  // the <2,3,n> series with its degenerate small members
  for (int n = 2; n <= max_p; ++n) {
    WeightTriple w(2, 3, n);
    auto cy = cy_dimension(w);
    auto inv = invariants_of_triple(w);
    long long h = coxeter_number(w);
    std::string type;
    switch (n) {
      case 2: type = "A2"; break;
      case 3: type = "D4"; break;
      case 4: type = "E6"; break;
      case 5: type = "E8"; break;
      case 6: type = "(2,3,6)"; break;
      default: type = "<2,3," + std::to_string(n) + ">"; break;
    }
    std::cout << n << "\t" << type << "\t" << cy.num << "/" << cy.den << "\t"
              << inv.euler_char.str() << "\t" << h;
    if (n == 2) std::cout << "\t# degenerate weight triple (2,2,3)";
    std::cout << "\n";
  }
  return 0;
}

int run_slope_map(const std::string& type, const std::string& qs,
                  bool inverse) {
  TubularType t = tubular_type_from_weights(parse_weight_list(type));
  size_t slash = qs.find('/');
  Rat q = slash == std::string::npos
              ? Rat(std::stoll(qs))
              : Rat(std::stoll(qs.substr(0, slash)),
                    std::stoll(qs.substr(slash + 1)));
  Rat r = inverse ? alpha_inv(t, q) : alpha(t, q);
  std::cout << r.str() << "\n";
  return 0;
}

int run_cover(const std::string& frac) {
  size_t slash = frac.find('/');
  long long d = 0, r = 1;
  if (slash == std::string::npos) {
    d = std::stoll(frac);
    r = 1;
  } else {
    d = std::stoll(frac.substr(0, slash));
    r = std::stoll(frac.substr(slash + 1));
  }
  auto cov = cover_structure_236(d, r);
  for (const auto& s : cov)
    std::cout << s.twist.str() << "\tx" << s.mult << "\n";
  return 0;
}

int run_bundle(const std::string& weights, const std::string& expr) {
  auto wl = parse_weight_list(weights);
  if (wl.size() != 3) {
    std::cerr << "--weights needs three comma-separated values\n";
    return 2;
  }
  WeightTriple w(wl[0], wl[1], wl[2]);
  ExtBundleExpr e = parse_bundle(w, expr);
  ExtBundleExpr c = canonical_form(e);
  auto h = hulls(e);
  json j;
  j["input"] = expr;
  j["canonical"] = {{"base", lelt_j(c.base)},
                    {"interior", lelt_j(c.interior)}};
  j["rank"] = 2;
  j["det"] = lelt_j(det_of(e));
  j["slope"] = slope_of(e).str();
  json inj = json::array(), proj = json::array();
  for (const auto& t : h.injective_twists) inj.push_back(lelt_j(t));
  for (const auto& t : h.projective_twists) proj.push_back(lelt_j(t));
  j["injective_hull_twists"] = inj;
  j["projective_cover_twists"] = proj;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_check(const std::string& suite) {
  struct Named {
    const char* name;
    CheckResult (*fn)();
  };
  Named suites[] = {{"picard", check_picard},
                    {"bundles", check_bundles},
                    {"ktheory", check_ktheory},
                    {"coxzoo", check_coxzoo},
                    {"tubular", check_tubular}};
  bool all_ok = true;
  for (const auto& s : suites) {
    if (!suite.empty() && suite != s.name) continue;
    for (const auto& [name, ok] : s.fn()) {
      std::cout << (ok ? "PASS" : "FAIL") << "  " << s.name << ": " << name
                << "\n";
      all_ok = all_ok && ok;
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of stable vector-bundle categories over "
               "weighted projective lines"};
  app.require_subcommand(1);

  int a = 2, b = 3, c = 7;
  bool as_json = false;
  auto* info = app.add_subcommand("info", "invariants of a weight triple");
  info->add_option("a", a)->required();
  info->add_option("b", b)->required();
  info->add_option("c", c)->required();
  info->add_flag("--json", as_json);

  std::string symbol;
  bool factor = false;
  auto* cox = app.add_subcommand("coxpol", "Coxeter polynomial of a symbol");
  cox->add_option("symbol", symbol)->required();
  cox->add_flag("--factor", factor);

  int n = 0, r = 0;
  auto* cls = app.add_subcommand("classify",
                                 "geometric matches of a Nakayama algebra");
  cls->add_option("n", n)->required();
  cls->add_option("r", r)->required();

  std::string table_kind;
  int max_n = 0;
  auto* tab = app.add_subcommand("table", "derived-equivalence tables");
  tab->add_option("kind", table_kind)->required()->check(
      CLI::IsMember({"hs", "ade"}));
  tab->add_option("--max-n", max_n);

  std::string tub_type, tub_q;
  bool inverse = false;
  auto* slope = app.add_subcommand("slope-map", "tubular slope map");
  slope->add_option("type", tub_type)->required();
  slope->add_option("q", tub_q)->required();
  slope->add_flag("--inverse", inverse);

  std::string cover_frac;
  auto* cov = app.add_subcommand("cover", "slope-q cover structure, (2,3,6)");
  cov->add_option("q", cover_frac)->required();

  std::string weights, bundle_expr;
  auto* bun = app.add_subcommand("bundle", "extension-bundle report");
  bun->add_option("--weights", weights)->required();
  bun->add_option("expr", bundle_expr)->required();

  std::string suite;
  auto* chk = app.add_subcommand("check", "run invariant suites");
  chk->add_option("suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return run_info(a, b, c, as_json);
    if (cox->parsed()) return run_coxpol(symbol, factor);
    if (cls->parsed()) return run_classify(n, r);
    if (tab->parsed()) {
      int cap = max_n_cap();
      int lim = max_n > 0 ? std::min(max_n, cap) : (table_kind == "hs" ? 14 : 9);
      return table_kind == "hs" ? run_table_hs(lim) : run_table_ade(lim);
    }
    if (slope->parsed()) return run_slope_map(tub_type, tub_q, inverse);
    if (cov->parsed()) return run_cover(cover_frac);
    if (bun->parsed()) return run_bundle(weights, bundle_expr);
    if (chk->parsed()) return run_check(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
