#include "petrie/algebra.hpp"
#include "petrie/certificates.hpp"
#include "petrie/extensions.hpp"
#include "petrie/io.hpp"
#include "petrie/perm.hpp"
#include "petrie/petrie.hpp"
#include "petrie/simengine.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace petrie;
using nlohmann::json;

namespace {

struct Globals {
  std::string output = "text";
  int jobs = 1;
  std::string cache_dir;
  int bound = 0;  // 0: mode default
  bool weak = false;
  bool fresh = false;
};

bool as_json(const Globals& g) { return g.output == "json"; }

Permutation parse_padded(const std::string& text, int degree) {
  Permutation p = parse_permutation(text);
  if (degree > p.degree()) {
    std::vector<int> v = p.images();
    for (int i = p.degree() + 1; i <= degree; ++i) v.push_back(i);
    p = Permutation(std::move(v));
  } else if (degree > 0 && degree < p.degree()) {
    throw PreconditionError("permutation " + text + " does not fit in degree " + std::to_string(degree));
  }
  return p;
}

std::vector<int> parse_ints(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + tok);
    }
  }
  return out;
}

ExtensionSpec parse_spec(const std::string& text) {
  try {
    return spec_from_json(json::parse(text));
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("spec is not valid JSON: ") + ex.what());
  }
}

std::string cache_root(const Globals& g) {
  if (!g.cache_dir.empty()) return g.cache_dir;
  if (const char* env = std::getenv("PETRIE_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/petrie";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/petrie";
  return ".petrie-cache";
}

Bounds bounds_from(const Globals& g, Mode mode) { return g.bound > 0 ? bounds_for(mode, g.bound) : default_bounds(mode); }

std::string bounds_text(Mode mode, Bounds b) {
  switch (mode) {
    case Mode::Right: return "n <= " + std::to_string(b.n);
    case Mode::Left: return "m <= " + std::to_string(b.m);
    case Mode::TwoSided: return "m <= " + std::to_string(b.m) + ", n <= " + std::to_string(b.n);
  }
  return {};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// matrix ------------------------------------------------------------------

int cmd_matrix(const Globals& g, const std::string& text, int degree, bool with_minpoly) {
  const Permutation p = parse_padded(text, degree);
  const IntMatrix m = petrie_matrix(p);
  const auto cp = charpoly(m);
  if (as_json(g)) {
    json j = {{"schema_version", 1},
              {"permutation", p.images()},
              {"cycles", to_cycle_string(p)},
              {"matrix", matrix_json(m)},
              {"det", det(m).str()},
              {"trace", trace(m).str()},
              {"charpoly", cp.to_string()}};
    if (with_minpoly) j["minpoly"] = minpoly(m).to_string();
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "permutation: " << to_string(p) << "  " << to_cycle_string(p) << '\n'
            << format_matrix(m) << "det: " << det(m) << '\n'
            << "trace: " << trace(m) << '\n'
            << "charpoly: " << cp << '\n';
  if (with_minpoly) std::cout << "minpoly: " << minpoly(m) << '\n';
  return 0;
}

// simtest -----------------------------------------------------------------

int cmd_simtest(const Globals& g, const std::string& a_text, const std::string& b_text, const std::string& mode_text,
                bool certify) {
  const Permutation a = parse_permutation(a_text);
  const Permutation b = parse_permutation(b_text);
  const Mode mode = parse_mode(mode_text);
  const Strength strength = g.weak ? Strength::WeaklySimilar : Strength::Similar;
  const Bounds bounds = bounds_from(g, mode);
  const Verdict v = check_pair(a, b, mode, strength, bounds, {certify});
  if (as_json(g)) {
    json j = to_json(v);
    j["sigma"] = a.images();
    j["rho"] = b.images();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(v.outcome) << " (" << to_string(mode) << ", " << to_string(strength) << ", "
              << bounds_text(mode, bounds) << ")\n";
    if (v.refutation) {
      const Refutation& r = *v.refutation;
      std::cout << "  witness: " << describe(r.spec) << '\n'
                << "  extended: " << to_cycle_string(r.sigma) << " vs " << to_cycle_string(r.rho) << '\n'
                << "  discriminator: " << to_string(r.discriminator) << '\n'
                << "    " << r.value_sigma << '\n'
                << "    " << r.value_rho << '\n'
                << "  replay: petrie extend " << quote(to_string(a)) << " --spec " << quote(to_json(r.spec).dump())
                << "\n          petrie extend " << quote(to_string(b)) << " --spec " << quote(to_json(r.spec).dump())
                << '\n';
    }
    if (v.certificate)
      std::cout << "  certificate: " << v.certificate->name << " (" << v.certificate->witnesses
                << " extension witnesses verified)\n";
    if (v.outcome == Verdict::Outcome::ConsistentUpTo)
      std::cout << "  no separating extension within the bound; this is bounded evidence, not a proof\n";
    std::cout << "  checked:";
    for (const auto& e : v.log) {
      if (mode == Mode::TwoSided) std::cout << " (" << e.shape.m << "," << e.shape.n << "):" << e.checked;
      else std::cout << ' ' << (mode == Mode::Right ? e.shape.n : e.shape.m) << ':' << e.checked;
    }
    std::cout << "\n  base petrie matrices similar: " << (v.petrie_similar ? "yes" : "no") << '\n';
  }
  return v.refuted() ? 1 : 0;
}

// classify ----------------------------------------------------------------

int cmd_classify(const Globals& g, int n, const std::string& mode_text) {
  const Mode mode = parse_mode(mode_text);
  const Strength strength = g.weak ? Strength::WeaklySimilar : Strength::Similar;
  const Bounds bounds = bounds_from(g, mode);
  if (n < 3) throw PreconditionError("--n must be >= 3");
  if (n > 6) std::cerr << "warning: classifying S_" << n << " is expensive\n";
  const auto file = cache_path(cache_root(g), n, mode, strength, bounds);
  std::optional<ClassificationReport> report;
  bool cached = false;
  if (!g.fresh && (report = load_cached(file))) cached = true;
  if (!report) {
    report = classify(n, mode, strength, bounds, {g.jobs, true});
    store_cached(file, *report);
  }
  if (as_json(g)) {
    std::cout << to_json(*report).dump(2) << '\n';
    return 0;
  }
  std::cout << "S_" << n << ", " << to_string(mode) << ", " << to_string(strength) << ", "
            << bounds_text(mode, bounds) << (cached ? " (cached)" : "") << '\n';
  if (report->classes.empty()) std::cout << "  no nontrivial classes\n";
  for (const auto& c : report->classes) {
    std::cout << "  {";
    for (std::size_t i = 0; i < c.members.size(); ++i) std::cout << (i ? ", " : "") << to_cycle_string(c.members[i]);
    std::cout << "}  " << (c.certified ? "certified" : "candidate")
              << (c.petrie_similar ? ", base matrices similar" : "") << '\n';
  }
  std::cout << "  refuted pairs: " << report->refutations.size() << "\n  report: " << file.string() << '\n';
  return 0;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  int m = 1, n = 0, s = 1, t = 0, k = 5, j = 0;
  std::string low, high, spec, pi, mu, sigma, rho, left, right, base_witness;
  bool assert_base_similar = false;
};

std::optional<RightSpec> right_spec_for(const VerifyArgs& a, int k, int n) {
  if (!a.spec.empty()) {
    auto spec = parse_spec(a.spec);
    if (!std::holds_alternative<RightSpec>(spec)) throw PreconditionError("--spec must be a right spec here");
    return std::get<RightSpec>(spec);
  }
  if (n <= 0) return std::nullopt;
  RightSpec r;
  r.filler.first = k + 1;
  for (int i = 0; i < n; ++i) r.filler.images.push_back(k + 1 + i);
  r.slot = a.t > 0 ? a.t : k + 1;
  return r;
}

int report_witness(const Globals& g, const ConjugacyWitness& w, bool extra_ok, const std::string& extra) {
  const bool pass = w.verified && extra_ok;
  if (as_json(g)) {
    json j = to_json(w);
    j["result"] = pass ? "PASS" : "FAIL";
    if (!extra.empty()) j["note"] = extra;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << w.theorem << ' ' << w.params.dump() << '\n'
              << "source: " << to_cycle_string(w.source) << "  target: " << to_cycle_string(w.target) << '\n'
              << "H (row i = h(J_i)):\n"
              << format_matrix(w.H) << "det H: " << det(w.H) << '\n';
    if (!extra.empty()) std::cout << extra << '\n';
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

int report_fail(const Globals& g, const std::string& theorem, const std::string& why) {
  if (as_json(g))
    std::cout << json{{"schema_version", 1}, {"theorem", theorem}, {"result", "FAIL"}, {"error", why}}.dump(2) << '\n';
  else
    std::cout << theorem << ": " << why << "\nFAIL\n";
  return 1;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  if (a.theorem == "7") {
    Thm7Params p;
    p.m = a.m;
    p.n = a.n;
    p.s = a.s;
    p.t = a.t;
    p.low = parse_ints(a.low);
    p.high = parse_ints(a.high);
    return report_witness(g, build_thm7(p).witness, true, "");
  }
  if (a.theorem == "8") return report_witness(g, sigma_nk_chain(a.k), true, "");
  if (a.theorem == "9") {
    const Permutation mu = parse_permutation(a.mu);
    const auto r = build_lemma9_basis(mu, a.k);
    const bool pass = (r.det == 1 || r.det == -1) && r.sum_identity && r.same_lattice;
    if (as_json(g)) {
      std::cout << json{{"schema_version", 1},       {"theorem", "lemma-9"},
                        {"mu", mu.images()},         {"k", a.k},
                        {"det", r.det.str()},        {"sum_identity", r.sum_identity},
                        {"same_lattice", r.same_lattice}, {"result", pass ? "PASS" : "FAIL"}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "lemma-9 basis for " << to_cycle_string(mu) << ", k = " << a.k << '\n'
                << format_matrix(r.basis.matrix()) << "det: " << r.det << '\n'
                << "sum identity: " << (r.sum_identity ? "holds" : "fails") << '\n'
                << "same lattice: " << (r.same_lattice ? "yes" : "no") << '\n'
                << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
  }
  if (a.theorem == "10") {
    Permutation sigma, rho;
    int j = a.j;
    int k = a.k;
    if (!a.pi.empty()) {
      const Permutation pi = parse_permutation(a.pi);
      std::tie(sigma, rho) = thm10_pair_from_pi(pi, k);
      j = pi.degree();
    } else {
      sigma = parse_permutation(a.sigma);
      rho = parse_permutation(a.rho);
      k = sigma.degree();
    }
    const auto spec = right_spec_for(a, k, std::max(a.n, 1));
    return report_witness(g, build_thm10(sigma, rho, j, *spec), true, "");
  }
  if (a.theorem == "12") {
    const auto spec = right_spec_for(a, a.k, a.n);
    std::string note;
    bool ok = true;
    if (a.assert_base_similar) {
      auto [alpha, theta] = family_thm12(a.k);
      ok = similar(petrie_matrix(alpha), petrie_matrix(theta));
      note = std::string("base petrie matrices similar: ") + (ok ? "yes" : "no");
    }
    return report_witness(g, build_thm12(a.k, spec), ok, note);
  }
  if (a.theorem == "13") {
    const auto spec = right_spec_for(a, a.k, std::max(a.n, 1));
    return report_witness(g, build_thm13(a.k, *spec), true, "");
  }
  if (a.theorem == "5") {
    const Permutation sigma = parse_permutation(a.sigma.empty() ? "(13)@4" : a.sigma);
    const Permutation rho = parse_permutation(a.rho.empty() ? "(13)(24)@4" : a.rho);
    RatMatrix G;
    if (!a.base_witness.empty()) G = witness_from_json(json::parse(read_text_file(a.base_witness))).H;
    else if (a.sigma.empty() && a.rho.empty()) G = thm5_remark_base_witness();
    else throw PreconditionError("--theorem 5 needs --base-witness for a custom pair");
    const int k = sigma.degree();
    DirectSumShape shape;
    shape.left = parse_ints(a.left);
    const auto right = parse_ints(a.right.empty() && a.left.empty() ? "2 1" : a.right);
    shape.right.first = static_cast<int>(shape.left.size()) + k + 1;
    for (int x : right) shape.right.images.push_back(x + shape.right.first - 1);  // relative 1..n
    try {
      return report_witness(g, lift_thm5(sigma, rho, G, shape), true, "");
    } catch (const EigenvalueOneError& ex) {
      const Permutation se = direct_sum(sigma, shape), re = direct_sum(rho, shape);
      const bool sim = similar(petrie_matrix(se), petrie_matrix(re));
      return report_fail(g, "theorem-5-lift",
                         std::string(ex.what()) + "; extended pair " + to_cycle_string(se) + " / " +
                             to_cycle_string(re) + " petrie matrices similar: " + (sim ? "yes" : "no"));
    }
  }
  if (a.theorem == "s4") {
    auto spec = parse_spec(a.spec.empty()
                               ? R"({"kind":"two-sided","left":{"filler":[1],"slot":1},"right":{"filler":[6],"slot":6}})"
                               : a.spec);
    if (!std::holds_alternative<TwoSidedSpec>(spec)) throw PreconditionError("--spec must be two-sided here");
    return report_witness(g, build_s4_two_sided(std::get<TwoSidedSpec>(spec)), true, "");
  }
  throw PreconditionError("unknown theorem: " + a.theorem);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petrie matrices of permutations: similarity of extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--output", g.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads for classify")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "classification cache (default $PETRIE_CACHE_DIR)");
  app.add_option("--bound", g.bound, "extension size bound (default 3, two-sided 2)")->check(CLI::PositiveNumber);
  app.add_flag("--weak", g.weak, "test weak similarity (characteristic polynomials)");
  app.add_flag("--fresh", g.fresh, "ignore cached reports");

  std::string perm_a, perm_b, mode = "right", spec;
  int degree = 0, n = 0;
  bool with_minpoly = false, no_certify = false;

  auto* matrix = app.add_subcommand("matrix", "Petrie matrix with det, trace, charpoly");
  matrix->add_option("perm", perm_a, "permutation")->required();
  matrix->add_option("--degree", degree, "pad with fixed points up to this degree");
  matrix->add_flag("--minpoly", with_minpoly, "also print the minimal polynomial");

  auto* simtest = app.add_subcommand("simtest", "bounded similarity check of a pair");
  simtest->add_option("a", perm_a)->required();
  simtest->add_option("b", perm_b)->required();
  simtest->add_option("--mode", mode, "right, left or two-sided");
  simtest->add_flag("--no-certify", no_certify, "skip the certificate search");

  auto* classify_cmd = app.add_subcommand("classify", "classes of S_n under bounded similarity");
  classify_cmd->add_option("--n", n, "degree")->required();
  classify_cmd->add_option("--mode", mode, "right, left or two-sided");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "build and check a conjugacy witness");
  verify->add_option("--theorem", va.theorem, "5, 7, 8, 9, 10, 12, 13 or s4")->required();
  verify->add_option("--m", va.m);
  verify->add_option("--n", va.n);
  verify->add_option("--s", va.s);
  verify->add_option("--t", va.t);
  verify->add_option("--k", va.k);
  verify->add_option("--j", va.j);
  verify->add_option("--low", va.low, "low filler values, in position order");
  verify->add_option("--high", va.high, "high filler values, in position order");
  verify->add_option("--spec", va.spec, "extension spec JSON");
  verify->add_option("--pi", va.pi, "pi for the thm10 pair");
  verify->add_option("--mu", va.mu, "mu for lemma9");
  verify->add_option("--sigma", va.sigma);
  verify->add_option("--rho", va.rho);
  verify->add_option("--left", va.left, "thm5 left block");
  verify->add_option("--right", va.right, "thm5 right block, relative values 1..n");
  verify->add_option("--base-witness", va.base_witness, "witness JSON file for the base pair");
  verify->add_flag("--assert-base-similar", va.assert_base_similar);

  auto* extend_cmd = app.add_subcommand("extend", "apply an extension spec");
  extend_cmd->add_option("base", perm_a)->required();
  extend_cmd->add_option("--spec", spec, "spec JSON")->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual permutation");
  dual_cmd->add_option("perm", perm_a)->required();
  dual_cmd->add_option("--degree", degree);

  auto* graph = app.add_subcommand("graph", "Petrie digraph as DOT");
  graph->add_option("perm", perm_a)->required();
  graph->add_option("--degree", degree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*matrix) return cmd_matrix(g, perm_a, degree, with_minpoly);
    if (*simtest) return cmd_simtest(g, perm_a, perm_b, mode, !no_certify);
    if (*classify_cmd) return cmd_classify(g, n, mode);
    if (*verify) return cmd_verify(g, va);
    if (*extend_cmd) {
      const Permutation base = parse_permutation(perm_a);
      const Permutation out = extend(base, parse_spec(spec));
      if (as_json(g))
        std::cout << json{{"schema_version", 1}, {"permutation", out.images()}, {"cycles", to_cycle_string(out)}}.dump(2)
                  << '\n';
      else
        std::cout << to_cycle_string(out) << "\n" << to_string(out) << '\n';
      return 0;
    }
    if (*dual_cmd) {
      const Permutation out = dual(parse_padded(perm_a, degree));
      if (as_json(g))
        std::cout << json{{"schema_version", 1}, {"permutation", out.images()}, {"cycles", to_cycle_string(out)}}.dump(2)
                  << '\n';
      else
        std::cout << to_cycle_string(out) << "\n" << to_string(out) << '\n';
      return 0;
    }
    if (*graph) {
      std::cout << export_digraph(parse_padded(perm_a, degree));
      return 0;
    }
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
