// Surface grammar, canonical printing, cirquentization, AST JSON form.
//
// Grammar (ASCII): `T` top, `F` bottom, letters `[a-z][a-z0-9_]*`, `~`
// negation, `+[n]` chor with disjunctive cluster n, `*[n]` chand with
// conjunctive cluster n, `&` pand, `|` por, `->` implication, parentheses.
// Precedence: ~  >  +[n]/*[n]  >  &  >  |  >  ->; all binary connectives
// are left-associative except ->, which is right-associative. `~` over a
// compound and `->` are expanded away while parsing, so the result carries
// negation only on letters. The cluster token may also be written with an
// explicit polarity tag (`+[d3]`); a wrong-polarity tag (`+[c3]`) is an error.

#pragma once

#include <stdexcept>
#include <string>

#include "cl16/cirquent.hpp"

#include <json.hpp>

namespace cl16 {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

Cirquent parse(const std::string& text);

// Also accepts bare `+[]` / `*[]`; those choice nodes carry placeholder
// clusters until cirquentize assigns fresh ones.
Cirquent parseExtended(const std::string& text);

// Canonical text with minimal parentheses; parse(print(c)) == c.
std::string print(const Cirquent& c);

// Gives every placeholder choice connective a fresh cluster (the smallest
// index of its polarity not occurring anywhere in the result), left to right.
Cirquent cirquentize(const Cirquent& c);

nlohmann::json astToJson(const Cirquent& c);
Cirquent astFromJson(const nlohmann::json& j);

}  // namespace cl16
