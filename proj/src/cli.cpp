#include "slicebound/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slicebound/io.hpp"

namespace slicebound {

using nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

// A file path, or a catalog reference such as "trefoil" or "torus(2,5)".
SeifertMatrix load_knot(const std::string& ref) {
  if (ref == "-" || file_exists(ref)) return parse_knot(read_input(ref));
  return catalog(ref);
}

Rational resolve_precision(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv("SLICEBOUND_PRECISION"); env && *env) text = env;
  }
  if (text.empty()) return kDefaultPrecision;
  const Rational p = parse_rational(text);
  if (p <= 0) throw InputError("precision must be positive");
  return p;
}

std::string interval_string(const IsolatingInterval& iv) {
  if (iv.lo == iv.hi) return to_decimal(iv.lo, 9);
  return "(" + to_decimal(iv.lo, 9) + ", " + to_decimal(iv.hi, 9) + ")";
}

bool perfect_square(const Rational& q) {
  const Rational a = abs(q);
  return a.get_den() == 1 && mpz_perfect_square_p(a.get_num().get_mpz_t()) != 0;
}

int cmd_invariants(const std::string& ref, const Rational& precision, bool as_json, std::ostream& out) {
  const SeifertMatrix s = load_knot(ref);
  const LaurentPoly delta = alexander_polynomial(s).representative();
  const long sigma = hermitian_signature_at(s, CirclePoint::minus_one()).value;
  const SignatureFunction f = signature_function(s);
  const RhoValue rho = rho_integral(s, precision);
  const AlexanderModule module = smith_form(present(s));
  const Rational at_one = delta.eval(1), at_minus_one = delta.eval(-1);
  const bool fm_one = at_one == 1 || at_one == -1;
  const bool fm_sig = f.identically_zero();
  const bool fm_square = perfect_square(at_minus_one);

  if (as_json) {
    ordered_json j;
    j["knot"] = s.name();
    j["size"] = s.size();
    j["alexander_polynomial"] = delta.to_string();
    j["signature_at_minus_one"] = sigma;
    ordered_json jumps = ordered_json::array();
    for (const auto& iv : f.jumps()) jumps.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}});
    j["signature_function"]["jump_polynomial"] = f.jump_polynomial().to_string("x");
    j["signature_function"]["jumps"] = jumps;
    j["signature_function"]["arc_values"] = f.arc_values();
    j["rho0"] = ordered_json::parse(rho_json(rho));
    ordered_json factors = ordered_json::array();
    for (const auto& d : module.invariant_factors) factors.push_back(d.to_string());
    j["invariant_factors"] = factors;
    j["min_generators"] = min_generators(module);
    j["fox_milnor"]["delta_at_one_is_unit"] = fm_one;
    j["fox_milnor"]["signature_function_vanishes"] = fm_sig;
    j["fox_milnor"]["delta_at_minus_one_is_square"] = fm_square;
    j["fox_milnor"]["delta_at_minus_one"] = to_string(at_minus_one);
    out << j.dump(2) << "\n";
    return kExitCertified;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "knot: " << (s.name().empty() ? "(unnamed)" : s.name()) << " (" << s.size() << "x" << s.size()
      << " Seifert matrix)\n";
  out << "Alexander polynomial: " << delta.to_string() << "\n";
  out << "signature at -1: " << sigma << "\n";
  out << "signature function: arcs " << f.arc_values().size() << ", values";
  for (long v : f.arc_values()) out << " " << v;
  out << "\n";
  for (std::size_t i = 0; i < f.jumps().size(); ++i)
    out << "  jump " << i + 1 << " at x = " << interval_string(f.jumps()[i]) << "\n";
  out << "rho0: " << to_decimal(rho.value(), 9) << " +- " << decimal_upper_bound(rho.error_bound()) << "\n";
  out << "  exact form: " << exact_form_string(rho) << "\n";
  out << "invariant factors:";
  if (module.invariant_factors.empty()) out << " none";
  for (const auto& d : module.invariant_factors) out << " [" << d.to_string() << "]";
  out << "\n";
  out << "mu (minimal generators): " << min_generators(module) << "\n";
  out << "Fox-Milnor necessary conditions:\n";
  out << "  Delta(1) = +-1: " << yn(fm_one) << "\n";
  out << "  signature function identically 0: " << yn(fm_sig) << "\n";
  out << "  |Delta(-1)| = " << to_string(abs(at_minus_one)) << " a perfect square: " << yn(fm_square) << "\n";
  return kExitCertified;
}

KnotDescription describe(const KnotCopies& kc, const Rational& precision) {
  const long k = static_cast<long>(kc.copies);
  const Rational per_copy = k > 0 ? precision / k : precision;
  return {kc.knot, kc.copies, k * rho_integral(kc.knot, per_copy)};
}

int cmd_certify(const std::string& path, const std::optional<std::string>& c_flag, const std::optional<long>& g_flag,
                const Rational& precision, bool as_json, std::ostream& out) {
  const FamilySpec spec = parse_family(read_input(path));
  std::size_t g = 0;
  if (g_flag) {
    if (*g_flag < 1) throw InputError("--g must be positive");
    g = static_cast<std::size_t>(*g_flag);
  } else if (spec.g) {
    g = *spec.g;
  } else {
    throw InputError("genus g missing: pass --g or set \"g\" in the family file");
  }
  Rational c;
  if (c_flag)
    c = parse_rational(*c_flag);
  else if (spec.c)
    c = *spec.c;
  else
    throw InputError("constant C missing: pass --C or set \"C\" in the family file");
  if (c <= 0) throw InputError("C must be positive");
  check_family_parameter(spec.n);

  KnotDescription j, jp;
  std::string source;
  if (spec.j) {
    j = describe(*spec.j, precision);
    jp = describe(*spec.jp, precision);
    source = "user-supplied";
  } else {
    const SeifertMatrix seed = spec.seed ? *spec.seed : catalog("trefoil");
    const JSequence seq = build_J_sequence(c, g, seed, precision);
    j = seq.j;
    jp = seq.jp;
    source = "built from seed " + (seed.name().empty() ? std::string("(unnamed)") : seed.name());
  }
  const Family family = build_family({g, spec.n, j, jp});
  const MetabolizerCertificate cert = verify_p3(family);
  const BoundReport report = certify_family_genus(c, g, j.rho, jp.rho);
  if (!recheck(report)) throw std::logic_error("certify: report failed its own recheck");

  const int code = report.outcome == Outcome::certified ? kExitCertified
                   : report.outcome == Outcome::refuted ? kExitRefuted
                                                        : kExitUndecidable;
  if (as_json) {
    ordered_json doc;
    doc["family"]["n"] = spec.n;
    doc["family"]["g"] = g;
    doc["family"]["seifert_size"] = family.seifert.size();
    doc["family"]["metabolizer_rank"] = cert.basis.size();
    doc["family"]["J"] = j.to_string();
    doc["family"]["Jp"] = jp.to_string();
    doc["family"]["J_source"] = source;
    doc["report"] = ordered_json::parse(report_json(report));
    doc["exit_code"] = code;
    out << doc.dump(2) << "\n";
    return code;
  }
  out << "family: n = " << spec.n << ", g = " << g << ", Seifert matrix " << family.seifert.size() << "x"
      << family.seifert.size() << "\n";
  out << "metabolizer: rank " << cert.basis.size() << ", checked\n";
  out << "J  = " << j.to_string() << " (" << source << "), rho = " << to_decimal(j.rho.value(), 9) << " +- "
      << decimal_upper_bound(j.rho.error_bound()) << "\n";
  out << "J' = " << jp.to_string() << ", rho = " << to_decimal(jp.rho.value(), 9) << " +- "
      << decimal_upper_bound(jp.rho.error_bound()) << "\n";
  for (const auto& rule : report.fired_rules)
    out << "rule " << rule.name << ": " << rule.anchor << "\n  " << rule.instantiation << " -> "
        << to_string(rule.holds) << "\n";
  out << "outcome: " << to_string(report.outcome) << "\n";
  out << "conclusion: " << report.conclusion << "\n";
  if (!report.diagnostic.empty()) out << "diagnostic: " << report.diagnostic << "\n";
  return code;
}

int cmd_lw(long beta2, long sign, long self_int, long d, bool as_json, std::ostream& out) {
  if (d < 1) throw InputError("d must be a positive integer");
  if (beta2 < 0) throw InputError("beta2 must be nonnegative");
  const auto bound = lee_wilczynski(beta2, sign, self_int, d);
  if (as_json) {
    ordered_json j;
    j["beta2"] = beta2;
    j["sign"] = sign;
    j["self_int"] = self_int;
    j["d"] = d;
    if (bound)
      j["genus_lower_bound"] = *bound;
    else
      j["genus_lower_bound"] = "no information";
    out << j.dump(2) << "\n";
  } else if (bound) {
    out << "minimal genus >= " << *bound << "\n";
  } else {
    out << "no information\n";
  }
  return kExitCertified;
}

int cmd_catalog(const std::string& name, bool as_json, std::ostream& out) {
  if (!name.empty()) {
    out << serialize_knot(catalog(name));
    return kExitCertified;
  }
  if (as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& n : catalog_names()) j.push_back(n);
    out << j.dump(2) << "\n";
    return kExitCertified;
  }
  for (const auto& n : catalog_names()) out << n << "\n";
  return kExitCertified;
}

int cmd_cyclotomic(long n, bool as_json, std::ostream& out) {
  if (n < 1 || static_cast<std::uint64_t>(n) > kFactorizationLimit)
    throw InputError("n must lie in [1, " + std::to_string(kFactorizationLimit) + "]");
  const auto un = static_cast<std::uint64_t>(n);
  const LaurentPoly phi = cyclotomic(un);
  const Rational at_one = eval_at_one(phi);
  std::string factors = "1";
  bool prime_power = false;
  std::size_t distinct = 0;
  if (un >= 2) {
    const Factorization f = factorize(un);
    prime_power = f.prime_power;
    distinct = f.distinct();
    factors.clear();
    for (const auto& [p, e] : f.primes)
      factors += (factors.empty() ? "" : " * ") + std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
  }
  const bool levine = at_one == 1 || at_one == -1;
  if (as_json) {
    ordered_json j;
    j["n"] = n;
    j["phi"] = phi.to_string();
    j["degree"] = phi.high();
    j["phi_at_one"] = to_string(at_one);
    j["factorization"] = factors;
    j["prime_power"] = prime_power;
    j["distinct_primes"] = distinct;
    j["alexander_polynomial"] = levine;
    out << j.dump(2) << "\n";
    return kExitCertified;
  }
  out << "Phi_" << n << "(t) = " << phi.to_string() << "\n";
  out << "degree: " << phi.high() << "\n";
  out << "Phi_" << n << "(1) = " << to_string(at_one) << "\n";
  out << "n = " << factors << (prime_power ? " (prime power)" : "") << "\n";
  out << "Alexander polynomial of a knot: " << (levine ? "yes" : "no") << "\n";
  return kExitCertified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact knot invariants and slice genus certification", "slicebound"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string precision_flag;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--precision", precision_flag, "error bound for rho (default 1e-6, env SLICEBOUND_PRECISION)");

  auto* inv = app.add_subcommand("invariants", "classical invariants of a knot file or catalog entry");
  std::string knot_ref;
  inv->add_option("knot", knot_ref, "JSON knot file, '-' for stdin, or catalog name")->required();
  inv->fallthrough();

  auto* cert = app.add_subcommand("certify", "certify the genus of the example family");
  std::string family_path;
  std::optional<std::string> c_flag;
  std::optional<long> g_flag;
  cert->add_option("family", family_path, "JSON family file or '-'")->required();
  cert->add_option("--C", c_flag, "bound on |rho| over all characters (rational)");
  cert->add_option("--g", g_flag, "number of summand pairs");
  cert->fallthrough();

  auto* lw = app.add_subcommand("lw", "genus bound for a class in a closed 4-manifold");
  long beta2 = 0, sign = 0, self_int = 0, d = 1;
  lw->add_option("--beta2", beta2)->required();
  lw->add_option("--sign", sign)->required();
  lw->add_option("--self-int", self_int)->required();
  lw->add_option("--d", d)->required();
  lw->fallthrough();

  auto* cat = app.add_subcommand("catalog", "list catalog entries or print one as a knot file");
  std::string cat_name;
  cat->add_option("name", cat_name, "entry such as trefoil or torus(2,5)");
  cat->fallthrough();

  auto* cyc = app.add_subcommand("cyclotomic", "cyclotomic polynomial facts");
  long cyc_n = 0;
  cyc->add_option("n", cyc_n)->required();
  cyc->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const Rational precision = resolve_precision(precision_flag);
    if (*inv) return cmd_invariants(knot_ref, precision, as_json, out);
    if (*cert) return cmd_certify(family_path, c_flag, g_flag, precision, as_json, out);
    if (*lw) return cmd_lw(beta2, sign, self_int, d, as_json, out);
    if (*cat) return cmd_catalog(cat_name, as_json, out);
    if (*cyc) return cmd_cyclotomic(cyc_n, as_json, out);
  } catch (const ParseError& e) {
    err << "parse error (line " << e.line() << ", column " << e.column() << "): " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidSeifertMatrix& e) {
    err << "invalid Seifert matrix: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace slicebound
