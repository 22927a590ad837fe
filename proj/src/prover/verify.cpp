#include "thermoid/prover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermoid/error.hpp"
#include "thermoid/models/evaluate.hpp"
#include "thermoid/prover/constraints.hpp"
#include "thermoid/prover/expand.hpp"

namespace thermoid::prover {

using polyalg::Polynomial;
using ratfun::RationalFunction;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// ParseError prefixes its message with the position; recover the bare text.
std::string bare_message(const ParseError& e) {
  std::string_view m = e.what();
  const auto colon = m.find(": ");
  return std::string(colon == std::string_view::npos ? m : m.substr(colon + 2));
}

cli::Expression parse_side(std::string_view text, std::size_t offset) {
  try {
    return cli::parse_expression(text);
  } catch (const ParseError& e) {
    throw ParseError(bare_message(e), e.position() + offset);
  }
}

// Sign-normalized primitive form, so that side conditions differing by a constant
// factor are listed once.
Polynomial canonical_condition(const Polynomial& p) {
  return RationalFunction(ratfun::constant(1), p).denominator();
}

}  // namespace

Identity Identity::parse(std::string_view text, std::string label) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected 'LHS = RHS'", text.size() + 1);
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '='", text.find('=', eq + 1) + 1);
  Identity id{parse_side(text.substr(0, eq), 0), parse_side(text.substr(eq + 1), eq + 1), std::move(label)};
  if (id.label.empty()) id.label = trim(text);
  return id;
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::proved: return "proved";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

VerificationReport verify(const Identity& id, std::span<const models::GasModel> models,
                          std::span<const models::StatePoint> states, const VerifyOptions& options) {
  const ConstraintSystem* cs = options.use_constraints ? &ConstraintSystem::instance() : nullptr;
  const auto reduce_poly = [cs](const Polynomial& p) { return cs ? cs->reduce(p) : p; };

  Expansion lhs = expand_tracked(id.lhs);
  Expansion rhs = expand_tracked(id.rhs);

  VerificationReport report;
  report.label = id.label;

  std::vector<Polynomial> denominators = lhs.denominators;
  for (Polynomial& d : rhs.denominators) denominators.push_back(std::move(d));
  for (const Polynomial& d : denominators) {
    Polynomial r = reduce_poly(d);
    if (r.is_zero())
      throw DegenerateCoordinates("denominator " + d.to_string(ratfun::kCanonicalOrder) +
                                  " vanishes modulo the constraint ideal");
    if (r.is_constant()) continue;
    r = canonical_condition(r);
    if (std::find(report.side_conditions.begin(), report.side_conditions.end(), r) == report.side_conditions.end())
      report.side_conditions.push_back(std::move(r));
  }

  report.lhs_value = cs ? cs->reduce(lhs.value) : lhs.value;
  report.rhs_value = cs ? cs->reduce(rhs.value) : rhs.value;
  const Polynomial difference = lhs.value.numerator() * rhs.value.denominator() -
                                rhs.value.numerator() * lhs.value.denominator();
  report.reduced_difference = reduce_poly(difference);

  bool refuted = false;
  for (const models::GasModel& model : models) {
    for (models::StatePoint s : states) {
      if (!model.in_domain(s)) continue;
      NumericResidual row{model.name(), s};
      try {
        const models::PrimitiveValuation values = model.valuation(s);
        row.lhs = models::evaluate(lhs.value, values);
        row.rhs = models::evaluate(rhs.value, values);
        row.residual = std::abs(row.lhs - row.rhs);
        const double relative = row.residual / (1 + std::abs(row.lhs) + std::abs(row.rhs));
        report.max_relative_residual = std::max(report.max_relative_residual, relative);
        if (relative > options.refute_threshold) refuted = true;
      } catch (const DegenerateCoordinates&) {
        row.degenerate = true;
      }
      report.numeric_residuals.push_back(std::move(row));
    }
  }

  if (report.reduced_difference.is_zero())
    report.status = Status::proved;
  else
    report.status = refuted ? Status::refuted : Status::inconclusive;
  return report;
}

std::vector<Identity> maxwell_relations() {
  return {
      Identity::parse("D(3,1,4) = D(2,4,1)"),
      Identity::parse("D(3,2,4) = -D(1,4,2)"),
      Identity::parse("D(4,2,3) = D(1,3,2)"),
      Identity::parse("D(4,1,3) = -D(2,3,1)"),
  };
}

std::vector<Identity> parse_identity_file(std::string_view text) {
  std::vector<Identity> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    try {
      out.push_back(Identity::parse(body));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + bare_message(e), e.position());
    }
  }
  return out;
}

}  // namespace thermoid::prover
