#pragma once

#include <string>
#include <string_view>

#include "ssg/automaton.hpp"
#include "ssg/rn.hpp"

namespace ssg {

// Group-definition format, one directive per line, '#' starts a comment:
//
//   group <name>
//   alphabet <d>
//   state <name> perm <i0> ... <i(d-1)> -> <t0> ... <t(d-1)>
//
// perm entries are the images of 0..d-1; a transition target of "id" names
// the implicit identity state. Throws ParseError with line and column.
GroupPtr parse_group(std::string_view text);
std::string print_group(const AutomatonGroup& group);

// Element format:
//
//   rn <name> over <groupname>
//   row <alpha> -> <beta> act <word>
//
// Addresses are digit strings, '^' for the empty address; words are products
// like "a.b'.c" (apostrophe = inverse, "id" allowed).
struct NamedElement {
    std::string name;
    RNElement element;
};
NamedElement parse_rn(std::string_view text, const GroupPtr& group);
std::string print_rn(const NamedElement& named);

// "alpha(beta)" rational points, e.g. "0(01)" or "(1)".
RationalPoint parse_point(int d, std::string_view text);

// "a.b'.c" words; "id" is the identity.
GroupWord parse_word(const GroupPtr& group, std::string_view text);

Address parse_address(int d, std::string_view text);

}  // namespace ssg
