#pragma once

#include <string>
#include <vector>

#include "skewcc/code_maps.hpp"
#include "skewcc/ring_code.hpp"

namespace skewcc {

// Text forms used by the CLI and the file formats. All parsers throw
// errc::parse_error with a position when the input does not scan.

// "p:3 r:2 mod:[2,2,1]" (the describe() form; mod optional).
FieldRef parse_field_text(const std::string& text);

// Flag form "p,r" / "p,r,c0,c1,...,cr" / the describe() form above.
FieldRef parse_field_flag(const std::string& flag);

// "[1,2,0]" or "1,2,0"; entries reduce into the field, so "-1" means the
// additive inverse of 1.
std::vector<Code> parse_code_list(const FieldSpec& f, const std::string& text);

// Single field element, same entry syntax as the lists.
Code parse_scalar(const FieldSpec& f, const std::string& text);

// Ascending coefficient list, "[2,1]" = x + 2.
SkewPoly parse_poly(const FieldAutomorphism& theta, const std::string& text);

// "perm:[2,3,1] exps:[1,0,1]", permutation images 1-based.
RingAutomorphism parse_ring_aut(RingRef ring, const std::string& text);

// "[[1,1],[0,1]]", row-major.
MapMatrix parse_matrix(FieldRef field, const std::string& text);

// Code files: JSON object {"field": {"p","r","mod"}, "n", "rows"} with the
// canonical generator matrix. Loading canonicalizes, so save/load/save is
// byte-identical.
std::string code_to_json(const LinearCode& c);
LinearCode code_from_json(const std::string& text);
void save_code(const std::string& path, const LinearCode& c);
LinearCode load_code(const std::string& path);

// Ring code files: {"field", "t", "n", "components": [rows per component]}.
std::string ring_code_to_json(const RingLinearCode& c);
RingLinearCode ring_code_from_json(const std::string& text);
void save_ring_code(const std::string& path, const RingLinearCode& c);
RingLinearCode load_ring_code(const std::string& path);

}  // namespace skewcc
