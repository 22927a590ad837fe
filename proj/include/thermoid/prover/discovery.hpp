#pragma once

#include <span>
#include <string>
#include <vector>

#include "thermoid/polyalg/groebner.hpp"

namespace thermoid::prover {

/// Reduced Groebner basis of the relations: every member is an identity among the
/// coded derivatives.
polyalg::GroebnerBasis discover(std::span<const polyalg::Polynomial> relations,
                                const polyalg::VariableSet& vars, const polyalg::MonomialOrder& order);

/// Relations among coded first derivatives, written with xabc for (a,b,c) and
/// x1..x4 for x, y, u, v: the Maxwell relation, the inverse-table entries
/// expressed through (3,1,2), (3,2,1), (4,1,2), (4,2,1), and the energy partials.
struct ReferenceSystem {
  /// Declared variable list order, duplicates removed, then any variable that only
  /// occurs in the relations (lowest precedence).
  polyalg::VariableSet vars;
  std::vector<polyalg::Polynomial> relations;
  /// The 47-element basis previously obtained for these relations.
  std::vector<polyalg::Polynomial> reference_basis;
  /// The declared variable list as given, including its repeated entry.
  std::vector<std::string> declared_order;
};

const ReferenceSystem& reference_system();

struct BasisComparison {
  std::size_t reference_total = 0;
  std::size_t reference_in_computed = 0;
  std::size_t computed_total = 0;
  std::size_t computed_in_reference = 0;
  bool identical_reduced_bases = false;
  std::vector<std::string> failures;

  bool ideals_equal() const {
    return reference_in_computed == reference_total && computed_in_reference == computed_total;
  }
};

/// Two-way ideal membership between `computed` and the reference basis (the
/// reference side is completed to a Groebner basis in the same order first).
BasisComparison compare_with_reference(const polyalg::GroebnerBasis& computed);

}  // namespace thermoid::prover
