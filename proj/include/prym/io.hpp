#pragma once

#include "prym/families.hpp"

#include <string>
#include <vector>

namespace prym {

// Element rendering and parsing in the group's native notation: comma-joined
// residue tuples for groups given by cyclic factors, cycle words for
// permutation groups.
std::string format_element(const FiniteGroup& G, int x);
int parse_element(const FiniteGroup& G, const std::string& token);

// Splits a run of element tokens on whitespace that sits outside parentheses,
// so cycle words such as "(1,2)(3,4)" stay whole.
std::vector<std::string> split_element_tokens(const std::string& text);

// Group description block inside a text file:
//   abelian <f1> <f2> ...
// or
//   perm <degree>
//   <cycle word>          (one line per generator)
// Blank lines and lines starting with '#' are skipped.  `pos` is the index of
// the first unread line and is advanced past the block; errors cite 1-based
// line numbers.
std::shared_ptr<const FiniteGroup> parse_group_lines(const std::vector<std::string>& lines,
                                                     size_t& pos);

// Round-trip through FiniteGroup::token(): "abelian[2,6]",
// "perm[5;(1,2,3,4,5);(2,5)(3,4)]".
std::shared_ptr<const FiniteGroup> parse_group_token(const std::string& token);

// A full datum file: a group block followed by one `K:` line (subgroup
// generators) and one `mv:` line (branch entries), in either order.  The
// subgroup is closed over but NOT checked for normality here; validation
// reports that separately.
OwnedDatum parse_datum_text(const std::string& text);

// Inverses of the two parsers above, emitting the same file formats.
std::string group_to_text(const FiniteGroup& G);
std::string datum_to_text(const OwnedDatum& datum);

// Line-delimited findings records with stable field order:
//   group=... s=... mv=... K=... gt=... g=... r=... Ntilde=... N=... qh=... flags=...
// mv and K elements are ';'-joined; flags are ','-joined with "-" for none.
std::string flags_string(const CoverInvariants& inv);
std::string format_record_prefix(const FiniteGroup& G, const std::vector<int>& mv,
                                 const std::vector<int>& k_gens);
std::string format_record_suffix(const CoverInvariants& inv);
std::string format_finding_record(const FiniteGroup& G, const std::vector<int>& mv,
                                  const std::vector<int>& k_gens, const CoverInvariants& inv);

struct ParsedRecord {
    OwnedDatum datum;
    CoverInvariants stored;   // numeric fields and flags as written in the line
};
bool looks_like_record(const std::string& line);
ParsedRecord parse_finding_record(const std::string& line);

// Printable character table: header, one line per class, one line per row.
// Non-rational values are printed as sums of e-th roots of unity "z<e>^<j>"
// with positive integer coefficients; rational values print plainly.
std::string chartab_text(const CharacterTable& tab);

// One line of the family-verification table, ending in MATCH or MISMATCH.
std::string family_row_text(const FamilyRow& row);

} // namespace prym
