#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mulprob/value.hpp"

namespace mulprob {

// Ket text notation:
//
//   Element   ::= Ident | '(' ')' | '(' Value (',' Value)* ')'
//   Multiset  ::= '[' (Nat Value (',' Nat Value)*)? ']'
//   Dist      ::= '<' Rat Value (',' Rat Value)* '>'
//   Predicate ::= '(' Ident ':' Rat (',' Ident ':' Rat)* ')'
//   Channel   ::= '{' Value ':' Dist (',' Value ':' Dist)* '}'
//   Value     ::= Element | Multiset | Dist
//   Rat       ::= Int | Int '/' PosInt
//   Ident     ::= [A-Za-z_][A-Za-z0-9_]*
//
// Two-element tuples are pairs; pairs nest as (a,(b,c)). Whitespace between
// tokens is ignored on input. Output is canonical: entries sorted by element
// order, ", " between entries, no spaces inside tuples, rationals always as
// lowest-terms p/q.

std::string format(const Value& v);
std::string format(const Multiset& m);
std::string format(const Dist& d);
std::string format(const Predicate& p);

using Parsed = std::variant<Value, Predicate>;

// All parsers reject trailing input. Errors are ParseError, including
// distribution weights that do not sum to 1 and predicate values outside
// [0,1].
Parsed parse(std::string_view text);
Value parse_value(std::string_view text);
Multiset parse_multiset(std::string_view text);
Dist parse_dist(std::string_view text);
Predicate parse_predicate(std::string_view text);

// A channel given by its table of rows; keys must be distinct.
using ChannelTable = std::vector<std::pair<Value, Dist>>;
ChannelTable parse_channel(std::string_view text);

}  // namespace mulprob
