#pragma once

// exotic-invariants command line front end.
//
// run() is kept separate from main() so the test suites can drive the exact
// argument handling and capture both streams. Exit status: 0 success,
// 1 domain error, 2 usage error.

#include "exotic/exotic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace exotic::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Raised for malformed invocations that CLI11 itself accepts (unknown
/// operation names, wrong positional counts).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON encoders. Integers stay JSON integers when they fit, rationals are
// always "p/q" strings.

inline Json integer_json(const Integer &x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json group_json(const AbelianGroup &g) {
  Json torsion = Json::array();
  for (const auto &t : g.torsion()) torsion.push_back(integer_json(t));
  return {{"free_rank", g.free_rank()},
          {"torsion", torsion},
          {"text", g.to_string()}};
}

inline Json graded_json(const GradedGroups &h) {
  Json arr = Json::array();
  for (const auto &[deg, g] : h.groups())
    arr.push_back({{"degree", deg}, {"group", group_json(g)}});
  return arr;
}

inline Json matrix_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json bundle_json(const MilnorBundle &b) { return {{"m", b.m}, {"n", b.n}}; }

inline Json fluxed_json(const FluxedBundle &fb) {
  return {{"bundle", bundle_json(fb.bundle)}, {"flux", fb.flux}};
}

inline Json rationals_json(const std::vector<Rational> &values) {
  Json arr = Json::array();
  for (const auto &v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

inline Json diamond_json(const HodgeDiamond &d) {
  Json grid = Json::array();
  for (const auto &row : d.grid()) grid.push_back(row);
  return grid;
}

// ---------------------------------------------------------------------------
// Text helpers

template <class Range> std::string join(const Range &r, const char *sep = ", ") {
  std::ostringstream os;
  bool first = true;
  for (const auto &x : r) {
    os << (first ? "" : sep) << x;
    first = false;
  }
  return os.str();
}

inline std::string graded_text(const GradedGroups &h) {
  std::ostringstream os;
  for (const auto &[deg, g] : h.groups()) os << "  H^" << deg << " = " << g << '\n';
  return os.str();
}

inline std::string matrix_text(const IntMatrix &m) {
  std::size_t width = 1;
  for (const auto &e : m.entries()) width = std::max(width, e.get_str().size());
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << ' ';
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << ' ' << std::setw(static_cast<int>(width)) << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the JSON payload and writes the table form
// into `text`.

inline Json milnor_payload(std::int64_t m, std::int64_t n, std::ostream &text) {
  const MilnorBundle b{m, n};
  const CharClasses cc = characteristic_classes(b);
  const GradedGroups h = bundle_cohomology(b);
  Json j = {{"bundle", bundle_json(b)},
            {"canonical", bundle_json(canonical_form(b))},
            {"euler", cc.euler},
            {"pontryagin", cc.pontryagin},
            {"principal", cc.principal},
            {"homotopy_sphere", cc.homotopy_sphere},
            {"cohomology", graded_json(h)}};
  text << b << "  (canonical " << canonical_form(b) << ")\n"
       << "  euler class      " << cc.euler << '\n'
       << "  pontryagin class " << cc.pontryagin << '\n'
       << "  principal        " << (cc.principal ? "yes" : "no") << '\n'
       << "  homotopy sphere  " << (cc.homotopy_sphere ? "yes" : "no") << '\n';
  if (cc.homotopy_sphere) {
    const int lambda = lambda_invariant(b);
    j["lambda"] = lambda;
    j["exotic"] = lambda != 0;
    text << "  lambda (mod 7)   " << lambda
         << (lambda != 0 ? "  exotic" : "  standard") << '\n';
  } else {
    j["lambda"] = nullptr;
    j["exotic"] = nullptr;
  }
  text << "cohomology:\n" << graded_text(h);
  return j;
}

inline Json tdual_payload(std::int64_t m, std::int64_t k, std::int64_t flux,
                          bool principal, std::ostream &text) {
  const FluxedBundle input{with_euler(m, k), flux};
  if (!principal) {
    const FluxedBundle dual = euler_preserving_dual(input);
    text << input << "  <->  " << dual << "   (Euler class " << k << ")\n";
    return {{"mode", "euler-preserving"},
            {"input", fluxed_json(input)},
            {"dual", fluxed_json(dual)}};
  }
  const FluxedBundle dual = principal_dual(input);
  Json j = {{"mode", "principal"},
            {"input", fluxed_json(input)},
            {"dual", fluxed_json(dual)}};
  text << input << "  <->  " << dual << '\n';
  const std::int64_t pm = dual.flux; // principal index of the input
  if (pm != 0 || flux != 0) {
    const AbelianGroup h7 = correspondence_h7(pm, flux);
    const std::int64_t lifted = lifted_flux(pm, flux);
    j["correspondence_h7"] = group_json(h7);
    j["lifted_flux"] = lifted;
    text << "  H^7(correspondence) = " << h7 << '\n'
         << "  lifted flux         = " << lifted << '\n';
  } else {
    j["correspondence_h7"] = nullptr;
    j["lifted_flux"] = nullptr;
  }
  return j;
}

inline Json brieskorn_payload(const std::vector<int> &exps, bool with_spectrum,
                              std::ostream &text) {
  const BrieskornPham bp(exps);
  const MilnorAlgebra alg = milnor_number_and_basis(bp);
  const WeightedDegree wd = weights_and_degree(bp);
  const TypeAndGorenstein tg = canonical_type(bp);
  const Rational least = reciprocal_sum(bp);
  Json j = {{"exponents", exps},
            {"mu", alg.mu},
            {"ell", wd.ell},
            {"weights", wd.weights},
            {"type", std::string(to_string(tg.type))},
            {"gorenstein", to_fraction_string(tg.gorenstein)},
            {"spectrum_min", to_fraction_string(least)}};
  text << "exponents     (" << join(exps) << ")\n"
       << "milnor number " << alg.mu << '\n'
       << "degree        " << wd.ell << '\n'
       << "weights       (" << join(wd.weights) << ")\n"
       << "type          " << to_string(tg.type) << '\n'
       << "gorenstein    " << to_fraction_string(tg.gorenstein) << '\n';
  if (with_spectrum) {
    const auto sp = spectrum(bp);
    j["spectrum"] = rationals_json(sp);
    std::vector<std::string> s;
    for (const auto &v : sp) s.push_back(to_fraction_string(v));
    text << "spectrum      {" << join(s) << "}\n"
         << "spectrum min  " << to_fraction_string(least) << '\n';
  }
  return j;
}

inline Json lattice_payload(const std::vector<int> &exps, int cartan,
                            std::ostream &text) {
  if (cartan > 0 || exps.empty()) {
    if (cartan <= 0) throw UsageError("lattice needs exponents or --cartan N");
    const IntMatrix g = a_lattice(cartan);
    text << "A_" << cartan << " Cartan matrix (det " << determinant(g) << "):\n"
         << matrix_text(g);
    return {{"cartan", cartan},
            {"gram", matrix_json(g)},
            {"determinant", integer_json(determinant(g))}};
  }
  const BrieskornPham bp(exps);
  const MilnorLattice lat = milnor_lattice(bp);
  const Integer det = determinant(lat.gram);
  Json index = Json::array();
  for (const auto &t : lat.index_set) index.push_back(t);
  text << "Milnor lattice of (" << join(exps) << "), rank "
       << lat.index_set.size() << ", det " << det << ":\n"
       << matrix_text(lat.gram);
  return {{"exponents", exps},
          {"mu", lat.index_set.size()},
          {"index_set", index},
          {"gram", matrix_json(lat.gram)},
          {"determinant", integer_json(det)}};
}

inline Json spectrum_payload(const std::vector<int> &exps, std::ostream &text) {
  const BrieskornPham bp(exps);
  const auto sp = spectrum(bp);
  std::vector<std::string> s;
  for (const auto &v : sp) s.push_back(to_fraction_string(v));
  const Rational center(static_cast<long>(bp.variables()), 2);
  text << "spectrum of (" << join(exps) << "), " << sp.size() << " values:\n  "
       << join(s) << '\n'
       << "  min " << to_fraction_string(reciprocal_sum(bp))
       << ", symmetric about " << to_fraction_string(center) << '\n';
  return {{"exponents", exps},
          {"spectrum", rationals_json(sp)},
          {"min", to_fraction_string(reciprocal_sum(bp))},
          {"center", to_fraction_string(center)}};
}

inline void require_args(const std::string &op, const std::vector<std::int64_t> &a,
                         std::size_t n) {
  if (a.size() != n)
    throw UsageError(op + " takes " + std::to_string(n) + " integer argument(s)");
}

inline Json config_json(const GroupConfig &cfg) {
  return {{"order", cfg.order},
          {"coeff", cfg.coeff},
          {"coeff_generates", cfg.coeff_generates()}};
}

inline Json theta7_payload(const std::string &op, const std::vector<std::int64_t> &a,
                           const GroupConfig &cfg, std::ostream &text) {
  Json j = {{"op", op}, {"config", config_json(cfg)}};
  if (op == "sigma33") {
    require_args(op, a, 2);
    const auto x = sigma33(a[0], a[1], cfg);
    j["result"] = x.residue();
    text << "sigma33(" << a[0] << ", " << a[1] << ") = " << x << '\n';
  } else if (op == "compose") {
    require_args(op, a, 2);
    const auto x = compose(Theta7Element(a[0], cfg), Theta7Element(a[1], cfg));
    j["result"] = x.residue();
    text << a[0] << " # " << a[1] << " = " << x << '\n';
  } else if (op == "inverse") {
    require_args(op, a, 1);
    const auto x = Theta7Element(a[0], cfg).inverse();
    j["result"] = x.residue();
    text << "-" << a[0] << " = " << x << '\n';
  } else if (op == "steps") {
    require_args(op, a, 3);
    const auto l = de_sapio_steps(Theta7Element(a[0], cfg), Theta7Element(a[1], cfg),
                                  Theta7Element(a[2], cfg));
    j["result"] = l;
    text << l << " connected sum(s) with " << a[1] << " take " << a[0] << " to "
         << a[2] << " in Z_" << cfg.order << '\n';
  } else {
    throw UsageError("unknown theta7 operation '" + op +
                     "' (sigma33, compose, inverse, steps)");
  }
  return j;
}

inline Json sigma8_payload(const std::string &op, const std::vector<std::int64_t> &a,
                           const GroupConfig &cfg, std::ostream &text) {
  Json j = {{"op", op}, {"config", config_json(cfg)}};
  if (op == "sigma-tilde") {
    require_args(op, a, 3);
    const auto x = sigma_tilde8(a[0], a[1], a[2], cfg);
    j["result"] = x.residue();
    text << "sigma~(" << a[0] << ", " << a[1] << ", " << a[2] << ") = " << x << '\n';
  } else if (op == "compose") {
    require_args(op, a, 2);
    const auto x = compose(Sigma8Element(a[0], cfg), Sigma8Element(a[1], cfg));
    j["result"] = x.residue();
    text << a[0] << " * " << a[1] << " = " << x << '\n';
  } else if (op == "log-transform") {
    require_args(op, a, 2);
    const auto delta = log_transform(Sigma8Element(a[0], cfg), Sigma8Element(a[1], cfg));
    j["result"] = delta.residue();
    const auto pre = sigma_tilde8_preimage(delta);
    if (pre) j["preimage"] = *pre;
    else j["preimage"] = nullptr;
    text << "log transform " << a[0] << " -> " << a[1] << ": delta = " << delta;
    if (pre) text << " = sigma~(" << join(*pre) << ")";
    text << '\n';
  } else {
    throw UsageError("unknown sigma8 operation '" + op +
                     "' (sigma-tilde, compose, log-transform)");
  }
  return j;
}

inline Json fano_payload(const std::string &op, const std::vector<std::int64_t> &a,
                         std::ostream &text) {
  Json j = {{"op", op}};
  if (op == "compose") {
    require_args(op, a, 2);
    const RepClass r = fano_moduli_compose({a[0]}, {a[1]});
    j["result"] = r.exponent;
    text << "[q -> q^" << a[0] << "] * [q -> q^" << a[1] << "] = [q -> q^" << r.exponent
         << "]\n";
  } else if (op == "orbifold") {
    require_args(op, a, 1);
    const bool ok = is_orbifold_rep({a[0]});
    j["result"] = ok;
    text << "l = " << a[0] << ": " << (ok ? "orbifold quotient" : "not an orbifold rep")
         << '\n';
  } else {
    throw UsageError("unknown fano operation '" + op + "' (compose, orbifold)");
  }
  return j;
}

inline Json isotropy_payload(int k, std::int64_t l, std::ostream &text) {
  const auto entries = link_isotropies(k, l);
  const auto w = link_weights(k);
  Json arr = Json::array();
  text << "k = " << k << ", weights (" << join(w) << "), rho = q -> q^" << l << '\n';
  for (const auto &e : entries) {
    arr.push_back({{"support", e.support},
                   {"b", e.b},
                   {"isotropy", {e.b, e.rep_order}},
                   {"cyclic", e.cyclic()}});
    text << "  {" << join(e.support) << "}  Z_" << e.b << " x Z_" << e.rep_order
         << (e.cyclic() ? "  (cyclic)" : "") << '\n';
  }
  return {{"k", k},
          {"l", l},
          {"weights", w},
          {"pairwise_coprime_weights", link_weights_pairwise_coprime(k)},
          {"supports", arr}};
}

inline Json hodge_payload(const std::string &branch, std::ostream &text) {
  EulerBranch br;
  if (branch == "unit") br = EulerBranch::Unit;
  else if (branch == "nonunit") br = EulerBranch::NonUnit;
  else throw UsageError("--branch must be unit or nonunit");
  const auto diamonds = enumerate_admissible_diamonds(br);
  Json arr = Json::array();
  text << diamonds.size() << " admissible diamond(s) on the " << branch
       << " branch\n";
  for (const auto &d : diamonds) {
    arr.push_back(diamond_json(d));
    text << '\n' << d.to_triangle();
  }
  return {{"branch", branch}, {"count", diamonds.size()}, {"diamonds", arr}};
}

inline Json kunneth_payload(std::optional<std::int64_t> m, std::optional<std::int64_t> k,
                            std::optional<int> sphere, std::ostream &text) {
  GradedGroups left;
  Json j;
  if (sphere) {
    left = GradedGroups::sphere(*sphere);
    j["factor"] = "S^" + std::to_string(*sphere);
    text << "H^*(S^" << *sphere << " x S^1):\n";
  } else {
    if (!m || !k) throw UsageError("kunneth needs --m and --k, or --sphere D");
    left = bundle_cohomology(with_euler(*m, *k));
    j["factor"] = bundle_json(with_euler(*m, *k));
    text << "H^*(" << with_euler(*m, *k) << " x S^1):\n";
  }
  const GradedGroups circle = GradedGroups::sphere(1);
  const GradedGroups h = kunneth(left, circle);
  const auto tors = torsion_degrees(h);
  j["cohomology"] = graded_json(h);
  j["torsion_degrees"] = tors;
  j["tor_degrees"] = kunneth_tor_degrees(left, circle);
  // H^5 = H^4 (x) H^1(S^1) repeats the torsion of H^4
  const bool extra = std::find(tors.begin(), tors.end(), 5) != tors.end();
  j["degree5_torsion"] = extra;
  text << graded_text(h);
  if (extra) {
    j["note"] = "H^5 = H^4(M) (x) H^1(S^1) is torsion as well as H^4";
    text << "  note: H^5 = H^4(M) (x) H^1(S^1) is torsion as well as H^4\n";
  } else {
    j["note"] = nullptr;
  }
  return j;
}

inline Json family_payload(int from, int to, std::ostream &text) {
  Json rows = Json::array();
  if (from <= to) {
    require_family_index(from);
    require_family_index(to);
  }
  text << std::left << std::setw(4) << "k" << std::setw(20) << "exponents"
       << std::setw(6) << "mu" << std::setw(10) << "2(6k-2)" << std::setw(6) << "ell"
       << std::setw(24) << "weights" << std::setw(7) << "type" << "gorenstein\n";
  for (int k = from; k <= to; ++k) {
    const FamilyMember fm = milnor_family(k);
    const auto &bp = fm.singularity;
    const std::int64_t mu = milnor_number_and_basis(bp).mu;
    const std::int64_t expected = 2 * (6 * static_cast<std::int64_t>(k) - 2);
    const WeightedDegree wd = weights_and_degree(bp);
    const TypeAndGorenstein tg = canonical_type(bp);
    rows.push_back({{"k", k},
                    {"exponents", bp.exponents()},
                    {"mu", mu},
                    {"mu_matches", mu == expected},
                    {"ell", wd.ell},
                    {"weights", wd.weights},
                    {"type", std::string(to_string(tg.type))},
                    {"gorenstein", to_fraction_string(tg.gorenstein)},
                    {"links_homotopy_sphere", fm.links_homotopy_sphere}});
    text << std::setw(4) << k << std::setw(20) << "(" + join(bp.exponents()) + ")"
         << std::setw(6) << mu << std::setw(10)
         << (std::to_string(expected) + (mu == expected ? " ok" : " !!")) << std::setw(6)
         << wd.ell << std::setw(24) << "(" + join(wd.weights) + ")" << std::setw(7)
         << to_string(tg.type) << to_fraction_string(tg.gorenstein) << '\n';
  }
  return {{"from", from}, {"to", to}, {"rows", rows}};
}

// ---------------------------------------------------------------------------

inline void emit(std::ostream &out, const std::string &command, Json payload,
                 bool json, const std::string &text) {
  if (!json) {
    out << text;
    return;
  }
  payload["schema_version"] = kSchemaVersion;
  payload["command"] = command;
  out << payload.dump(2) << '\n';
}

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Exact invariants of Milnor bundles, exotic spheres and "
               "Brieskorn-Pham singularities",
               "exotic-invariants"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of a table")->configurable(false);

  GroupConfig cfg;
  const auto add_group_flags = [&](CLI::App *sub) {
    sub->add_option("--order", cfg.order, "Order N of the cyclic model")
      ->capture_default_str();
    sub->add_option("--coeff", cfg.coeff, "Value c of the generating map at (1,1)")
      ->capture_default_str();
  };
  const auto add_json_flag = [&](CLI::App *sub) { sub->add_flag("--json", json); };

  std::ostringstream text;
  Json payload;
  std::string command;

  std::int64_t m = 0, n = 0, k = 0, flux = 0, l = 0;
  std::optional<std::int64_t> opt_m, opt_k;
  std::optional<int> opt_sphere;
  std::vector<int> exps;
  std::vector<std::int64_t> ints;
  std::string op, branch = "unit";
  bool with_spectrum = false, principal = false;
  int cartan = 0, kk = 1, from = kFamilyMin, to = kFamilyMax;

  std::vector<std::pair<CLI::App *, std::function<Json()>>> handlers;
  const auto sub = [&](const std::string &name, const std::string &desc,
                       std::function<Json()> body) {
    CLI::App *s = app.add_subcommand(name, desc);
    add_json_flag(s);
    handlers.emplace_back(s, std::move(body));
    return s;
  };

  {
    auto *s = sub("milnor", "Characteristic classes, lambda and cohomology of M_{m,n}",
                  [&] { return milnor_payload(m, n, text); });
    s->add_option("m", m)->required();
    s->add_option("n", n)->required();
  }
  {
    auto *s = sub("tdual", "Spherical T-dual of (M_{m,k-m}, [flux])",
                  [&] { return tdual_payload(m, k, flux, principal, text); });
    s->add_option("--m", m)->required();
    s->add_option("--k", k, "Euler class")->required();
    s->add_option("--flux", flux)->required();
    s->add_flag("--principal", principal, "Use the principal duality M_{m,0} -> M_{0,-j}");
  }
  {
    auto *s = sub("brieskorn", "Invariants of x_0^{a_0} + ... + x_n^{a_n}",
                  [&] { return brieskorn_payload(exps, with_spectrum, text); });
    s->add_option("exponents", exps)->required();
    s->add_flag("--spectrum", with_spectrum);
  }
  {
    auto *s = sub("lattice", "Milnor lattice gram matrix, or an A_n Cartan matrix",
                  [&] { return lattice_payload(exps, cartan, text); });
    s->add_option("exponents", exps);
    s->add_option("--cartan", cartan, "Print the A_N Cartan matrix instead");
  }
  {
    auto *s = sub("spectrum", "Singularity spectrum as exact fractions",
                  [&] { return spectrum_payload(exps, text); });
    s->add_option("exponents", exps)->required();
  }
  {
    auto *s = sub("theta7", "Z_N model of homotopy 7-spheres under connected sum",
                  [&] { return theta7_payload(op, ints, cfg, text); });
    s->add_option("op", op, "sigma33 | compose | inverse | steps")->required();
    s->add_option("args", ints);
    add_group_flags(s);
  }
  {
    auto *s = sub("sigma8", "Z_N model of homotopy S^7 x S^1 under log transforms",
                  [&] { return sigma8_payload(op, ints, cfg, text); });
    s->add_option("op", op, "sigma-tilde | compose | log-transform")->required();
    s->add_option("args", ints);
    add_group_flags(s);
  }
  {
    auto *s = sub("fano", "Moduli group on representation classes q -> q^l",
                  [&] { return fano_payload(op, ints, text); });
    s->add_option("op", op, "compose | orbifold")->required();
    s->add_option("args", ints);
  }
  {
    auto *s = sub("isotropy", "Torus isotropy on W^7_{6k-1,3} x S^1",
                  [&] { return isotropy_payload(kk, l, text); });
    s->add_option("k", kk)->required();
    s->add_option("l", l)->required();
  }
  {
    auto *s = sub("hodge", "Admissible Hodge diamonds of homotopy Hopf manifolds",
                  [&] { return hodge_payload(branch, text); });
    s->add_option("--branch", branch, "unit (k = +-1) or nonunit")->capture_default_str();
  }
  {
    auto *s = sub("kunneth", "Cohomology of M_{m,k-m} x S^1 or S^D x S^1",
                  [&] { return kunneth_payload(opt_m, opt_k, opt_sphere, text); });
    s->add_option("--m", opt_m);
    s->add_option("--k", opt_k);
    s->add_option("--sphere", opt_sphere);
  }
  {
    auto *s = sub("family-report", "Table over u^{6k-1} + v^3 + z_0^2 + z_1^2 + z_2^2",
                  [&] { return family_payload(from, to, text); });
    s->add_option("--from", from)->capture_default_str();
    s->add_option("--to", to)->capture_default_str();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto &[s, body] : handlers) {
    if (!s->parsed()) continue;
    command = s->get_name();
    try {
      payload = body();
    } catch (const DomainError &e) {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    } catch (const UsageError &e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    emit(out, command, std::move(payload), json, text.str());
    return kExitOk;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

} // namespace exotic::cli
