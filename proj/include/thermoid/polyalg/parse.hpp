#pragma once

#include <istream>
#include <string_view>
#include <vector>

#include "thermoid/polyalg/polynomial.hpp"

namespace thermoid::polyalg {

/// Parses a polynomial over `vars`. Accepts the canonical rendering
/// ("3*x^2*y - 1/2") as well as implicit multiplication by juxtaposition
/// ("x312 x421 - 1") and parentheses. Throws ParseError on bad input or unknown
/// variable names.
Polynomial parse_polynomial(std::string_view text, const VariableSet& vars);

struct RelationFile {
  VariableSet vars;
  std::vector<Polynomial> relations;
};

/// Reads the relation-file format: a "vars: n1 n2 ..." header, then one
/// polynomial per line; '#' starts a comment, blank lines are ignored.
RelationFile read_relation_file(std::istream& in);

}  // namespace thermoid::polyalg
