#pragma once

// JSON knot and family files, and report serialization.
//
// Knot file:    {"name": "trefoil", "matrix": [["-1", "1"], ["0", "-1"]]}
//          or   {"catalog": "torus", "params": [2, 5]}
// Family file:  {"n": 30, "g": 1, "C": "10", "seed": <knot>}
//          or   {"n": 30, "g": 2, "J": {"knot": <knot>, "copies": 14},
//                                 "Jp": {"knot": <knot>, "copies": 42}}
// Integers may be given as JSON strings (canonical) or numbers.

#include <optional>
#include <stdexcept>
#include <string>

#include "slicebound/bounds.hpp"
#include "slicebound/construct.hpp"

namespace slicebound {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws ParseError (malformed JSON or schema), InvalidSeifertMatrix or
/// DomainError (unknown catalog entry).
SeifertMatrix parse_knot(const std::string& text);

/// Canonical knot file; parse_knot(serialize_knot(s)) == s.
std::string serialize_knot(const SeifertMatrix& s);

struct KnotCopies {
  SeifertMatrix knot;
  std::size_t copies = 1;
};

struct FamilySpec {
  std::uint64_t n = 0;
  std::optional<std::size_t> g;
  std::optional<Rational> c;
  std::optional<SeifertMatrix> seed;
  std::optional<KnotCopies> j;
  std::optional<KnotCopies> jp;
};

FamilySpec parse_family(const std::string& text);

/// "10", "-3/4", "0.25", "1e-6", "2.5E3".
Rational parse_rational(const std::string& text);

/// Decimal upper bound with three significant digits, e.g. "1.00e-6".
std::string decimal_upper_bound(const Rational& q);

std::string exact_form_string(const RhoValue& r);

std::string rho_json(const RhoValue& r, int indent = 2);
std::string report_json(const BoundReport& r, int indent = 2);

}  // namespace slicebound
