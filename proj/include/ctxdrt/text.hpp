// Linear concrete syntax for DRSs and context formulas.
//
//   drs   := '[' refs '|' conds ']'
//   refs  := (ident (',' ident)*)?
//   conds := (cond (',' cond)*)?
//   cond  := atom | 'not' drs | drs '=>' drs | drs 'or' drs | 'alpha' ':' drs
//   atom  := ident '(' ident (',' ident)* ')'
//   ident := [a-z][a-zA-Z0-9_]*
//
//   lcon  := lterm ('|' lterm)*
//   lterm := lfac ('&' lfac)*
//   lfac  := drs | 'in' '(' drs ',' lcon ')' | '(' lcon ')'
//
// '#' starts a comment running to the end of the line.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ctxdrt/drs.hpp"
#include "ctxdrt/lcon.hpp"

namespace ctxdrt {

Drs parse_drs(std::string_view text);
// A sequence of DRSs, e.g. one meaning postulate per block.
std::vector<Drs> parse_drs_list(std::string_view text);
LConFormula parse_lcon(std::string_view text);

std::string print_drs(const Drs& k);
std::string print_condition(const Condition& c);
std::string print_lcon(const LConFormula& f);

// "line L, column C" for a byte offset.
std::string describe_position(std::string_view text, std::size_t offset);

}  // namespace ctxdrt
