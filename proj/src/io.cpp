#include "slicebound/io.hpp"

#include <regex>
#include <sstream>

#include "json.hpp"

namespace slicebound {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t pos = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 1, 1); }

Integer integer_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()), 10);
  if (v.is_string()) {
    static const std::regex re("[+-]?[0-9]+");
    const auto s = v.get<std::string>();
    if (!std::regex_match(s, re)) schema_error(where + ": '" + s + "' is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  }
  schema_error(where + ": expected an integer");
}

long small_integer(const json& v, const std::string& where) {
  const Integer z = integer_field(v, where);
  if (!z.fits_slong_p()) schema_error(where + ": integer out of range");
  return z.get_si();
}

SeifertMatrix knot_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("knot: expected a JSON object");
  if (doc.contains("catalog")) {
    if (!doc["catalog"].is_string()) schema_error("knot: 'catalog' must be a string");
    std::vector<long> params;
    if (doc.contains("params")) {
      if (!doc["params"].is_array()) schema_error("knot: 'params' must be an array");
      for (const auto& p : doc["params"]) params.push_back(small_integer(p, "knot params"));
    }
    return catalog(doc["catalog"].get<std::string>(), params);
  }
  if (!doc.contains("matrix")) schema_error("knot: expected 'matrix' or 'catalog'");
  const json& m = doc["matrix"];
  if (!m.is_array()) schema_error("knot: 'matrix' must be an array of rows");
  const std::size_t n = m.size();
  IntMatrix entries(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n)
      schema_error("knot: row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      entries(i, j) = integer_field(m[i][j], "matrix entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema_error("knot: 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return SeifertMatrix(entries, name);
}

}  // namespace

SeifertMatrix parse_knot(const std::string& text) { return knot_from_json(parse_json(text)); }

std::string serialize_knot(const SeifertMatrix& s) {
  std::ostringstream out;
  out << "{\n  \"name\": " << json(s.name()).dump() << ",\n  \"matrix\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t j = 0; j < s.size(); ++j) out << (j == 0 ? "" : ", ") << '"' << to_string(s(i, j)) << '"';
    out << "]";
  }
  out << (s.size() == 0 ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

FamilySpec parse_family(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_error("family: expected a JSON object");
  FamilySpec f;
  if (!doc.contains("n")) schema_error("family: missing 'n'");
  const long n = small_integer(doc["n"], "family n");
  if (n < 1) schema_error("family: 'n' must be positive");
  f.n = static_cast<std::uint64_t>(n);
  if (doc.contains("g")) {
    const long g = small_integer(doc["g"], "family g");
    if (g < 1) schema_error("family: 'g' must be positive");
    f.g = static_cast<std::size_t>(g);
  }
  if (doc.contains("C")) {
    const json& c = doc["C"];
    if (c.is_string())
      f.c = parse_rational(c.get<std::string>());
    else if (c.is_number_integer())
      f.c = Rational(static_cast<long>(c.get<long long>()));
    else
      schema_error("family: 'C' must be a string or an integer");
  }
  if (doc.contains("seed")) f.seed = knot_from_json(doc["seed"]);
  auto copies = [&](const char* key) -> std::optional<KnotCopies> {
    if (!doc.contains(key)) return std::nullopt;
    const json& v = doc[key];
    if (!v.is_object() || !v.contains("knot")) schema_error(std::string("family: '") + key + "' needs a 'knot'");
    KnotCopies kc{knot_from_json(v["knot"]), 1};
    if (v.contains("copies")) {
      const long k = small_integer(v["copies"], std::string("family ") + key + " copies");
      if (k < 0) schema_error(std::string("family: '") + key + "' copies must be nonnegative");
      kc.copies = static_cast<std::size_t>(k);
    }
    return kc;
  };
  f.j = copies("J");
  f.jp = copies("Jp");
  if (f.j.has_value() != f.jp.has_value()) schema_error("family: 'J' and 'Jp' must be given together");
  return f;
}

Rational parse_rational(const std::string& text) {
  static const std::regex fraction("([+-]?[0-9]+)(?:/([0-9]+))?");
  static const std::regex decimal("([+-]?)([0-9]*)(?:\\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    const std::string num = m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str();
    const Integer den = m[2].matched ? Integer(m[2].str(), 10) : Integer(1);
    if (den == 0) throw DomainError("'" + text + "': zero denominator");
    return make_rational(Integer(num, 10), den);
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string digits = m[2].str() + m[3].str();
    Rational q(Integer(digits.empty() ? "0" : digits, 10));
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(m[3].length());
    if (exponent > 1000 || exponent < -1000) throw DomainError("'" + text + "': exponent out of range");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0)
      q *= Rational(scale);
    else
      q /= Rational(scale);
    return m[1].str() == "-" ? Rational(-q) : q;
  }
  throw DomainError("'" + text + "' is not a rational number");
}

std::string decimal_upper_bound(const Rational& q) {
  if (q < 0) throw DomainError("decimal_upper_bound: negative input");
  if (q == 0) return "0";
  auto pow10 = [](long e) -> Rational {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    if (e >= 0) return Rational(p);
    return make_rational(1, p);
  };
  long e = 0;
  while (q >= pow10(e + 1)) ++e;
  while (q < pow10(e)) --e;
  Integer mant = ceil(q / pow10(e - 2));
  if (mant >= 1000) {
    mant = 100;
    ++e;
  }
  const std::string digits = to_string(mant);
  return digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
}

std::string exact_form_string(const RhoValue& r) {
  std::ostringstream out;
  out << to_string(r.constant());
  const auto& terms = r.exact_form();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const long c = terms[i].coefficient;
    out << (c < 0 ? " - " : " + ") << std::labs(c) << "*acos(x" << i + 1 << "/2)/pi";
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& iv = terms[i].interval;
    out << "; x" << i + 1;
    if (iv.lo == iv.hi)
      out << " = " << to_string(iv.lo);
    else
      out << " = root of " << (terms[i].poly ? terms[i].poly->to_string("x") : "?") << " in (" << to_string(iv.lo)
          << ", " << to_string(iv.hi) << ")";
  }
  if (terms.empty() && r.error_bound() != 0) out << " (enclosure without symbolic form)";
  return out.str();
}

namespace {

ordered_json rho_object(const RhoValue& r) {
  ordered_json j;
  j["value"] = to_decimal(r.value(), 12);
  j["error_bound"] = decimal_upper_bound(r.error_bound());
  if (r.error_bound() == 0) j["exact"] = to_string(r.value());
  j["exact_form"] = exact_form_string(r);
  return j;
}

}  // namespace

std::string rho_json(const RhoValue& r, int indent) { return rho_object(r).dump(indent); }

std::string report_json(const BoundReport& r, int indent) {
  ordered_json j;
  j["inputs"]["C"] = to_string(r.c);
  j["inputs"]["g"] = r.g;
  j["inputs"]["rho_J"] = rho_object(r.rho_j);
  j["inputs"]["rho_Jp"] = rho_object(r.rho_jp);
  j["fired_rules"] = ordered_json::array();
  for (const auto& rule : r.fired_rules) {
    ordered_json f;
    f["name"] = rule.name;
    f["anchor"] = rule.anchor;
    f["instantiation"] = rule.instantiation;
    f["holds"] = to_string(rule.holds);
    j["fired_rules"].push_back(f);
  }
  j["patterns_checked"] = r.patterns_checked;
  if (r.pattern_minimum) j["pattern_minimum_lower_bound"] = to_string(*r.pattern_minimum);
  j["outcome"] = to_string(r.outcome);
  if (r.genus_lower_bound)
    j["genus_lower_bound"] = *r.genus_lower_bound;
  else
    j["genus_lower_bound"] = "no information";
  j["conclusion"] = r.conclusion;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j.dump(indent);
}

}  // namespace slicebound
