#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thermoid/cli/expression.hpp"
#include "thermoid/models/gas_model.hpp"
#include "thermoid/polyalg/polynomial.hpp"
#include "thermoid/ratfun/rational_function.hpp"

namespace thermoid::prover {

struct Identity {
  cli::Expression lhs;
  cli::Expression rhs;
  std::string label;

  /// Parses "LHS = RHS". The label defaults to the trimmed input text.
  static Identity parse(std::string_view text, std::string label = {});
};

enum class Status { proved, refuted, inconclusive };

std::string_view to_string(Status s) noexcept;

struct NumericResidual {
  std::string model;
  models::StatePoint state;
  double lhs = 0;
  double rhs = 0;
  double residual = 0;
  /// Evaluation hit a vanishing denominator; lhs/rhs/residual are meaningless.
  bool degenerate = false;
};

struct VerificationReport {
  std::string label;
  Status status = Status::inconclusive;
  /// Normal form of lhs.num * rhs.den - rhs.num * lhs.den modulo the constraint ideal.
  polyalg::Polynomial reduced_difference;
  /// Non-constant reduced denominators assumed nonzero.
  std::vector<polyalg::Polynomial> side_conditions;
  std::vector<NumericResidual> numeric_residuals;
  /// Both sides after reduction modulo the constraint ideal.
  ratfun::RationalFunction lhs_value;
  ratfun::RationalFunction rhs_value;
  /// Largest |lhs - rhs| / (1 + |lhs| + |rhs|) over non-degenerate evaluations.
  double max_relative_residual = 0;
};

struct VerifyOptions {
  /// Reduce modulo <M, MX, MY>. When false, only identities that hold for
  /// arbitrary f and g are proved.
  bool use_constraints = true;
  /// Relative threshold above which a numeric disagreement refutes the identity.
  double refute_threshold = 1e-6;
};

/// Symbolic proof by ideal membership, with numeric refutation as fallback.
/// Throws DegenerateCoordinates when a denominator lies in the constraint ideal.
VerificationReport verify(const Identity& id, std::span<const models::GasModel> models,
                          std::span<const models::StatePoint> states, const VerifyOptions& options = {});

/// The four Maxwell relations, each written as (coded derivative) = (its partner):
///   D(3,1,4) = D(2,4,1), D(3,2,4) = -D(1,4,2), D(4,2,3) = D(1,3,2), D(4,1,3) = -D(2,3,1).
std::vector<Identity> maxwell_relations();

/// Reads "LHS = RHS" lines; '#' starts a comment. Throws ParseError with the line number.
std::vector<Identity> parse_identity_file(std::string_view text);

}  // namespace thermoid::prover
