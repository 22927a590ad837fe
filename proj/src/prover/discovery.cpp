#include "thermoid/prover/discovery.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "thermoid/polyalg/parse.hpp"

namespace thermoid::prover {

using polyalg::Polynomial;

polyalg::GroebnerBasis discover(std::span<const Polynomial> relations, const polyalg::VariableSet& vars,
                                const polyalg::MonomialOrder& order) {
  if (relations.empty()) return polyalg::GroebnerBasis(vars, {}, order, true);
  return polyalg::buchberger(relations, order);
}

namespace {

constexpr const char* kRelations[] = {
    "x312 x421 - x321 x412 - 1", "x134 - x421", "x143 + x321",
    "x234 + x412", "x243 - x312", "x421 x341 - x321", "x314 x421 - 1",
    "x241 x421 - 1", "x214 x421 + x412", "x342 x412 - x312", "x324 x412 + 1",
    "x412 x142 - 1", "x124 x412 + x421", "x432 x312 - x412", "x423 x312 - 1",
    "x132 x312 - 1", "x123 x312 + x321", "x431 x321 - x421", "x413 x321 + 1",
    "x231 x321 - 1", "x213 x321 + x312", "x612 - x2 - x3 x412",
    "x621 - x3 x421", "x512 - x2 + x4 x312", "x521 + x4 x321",
    "x712 + x4 x312", "x721 + x1 + x4 x321", "x812 - x3 x412",
    "x821 + x1 - x3 x421",
};

constexpr const char* kDeclaredOrder =
    "x1 x2 x3 x4 x112 x121 x212 x221 x312 x321 x412 x421 "
    "x134 x143 x234 x243 x341 x314 x241 x214 x342 x324 x142 "
    "x124 x432 x423 x132 x123 x431 x413 x231 x123 x512 x521 "
    "x612 x621 x712 x721 x812 x821";

constexpr const char* kReferenceBasis[] = {
    "x213 x621 + x712 + x213 x721 - x213 x821",
    "x521 - x621 - x721 + x821",
    "x512 - x612 - x712 + x812",
    "x231 + x413",
    "-x231^2 x621 + x431 x712 + x213 x431 x721 - x431 x812 - x213 x431 x821",
    "-1 + x123 x213",
    "x621 + x123 x712 + x721 - x821",
    "x123 x231^2 x621 + x431 x621 + x123 x431 x812",
    "x132 + x123 x231",
    "x123 x231 + x423",
    "-x123 x231^2 - x431 + x432",
    "x621 + x124 x812",
    "x124 x231^2 - x431 + x124 x213 x431",
    "x123 x124 x231^2 - x123 x431 + x124 x431",
    "1 - x124 x213 + x142 x231",
    "x124 x231 + x142 x431",
    "x142 + x324",
    "x342 x712 + x213 x342 x721 + x142^2 x213 x812 - x342 x812 - x213 x342 x821",
    "x142 x213 + x231 x342",
    "-x124 x213 + x342 x431",
    "x342 x621 - x142^2 x812 + x123 x342 x812",
    "x142^2 - x123 x342 + x124 x342",
    "x214 x712 + x213 x214 x721 - x213 x812 - x213 x214 x821",
    "x214 x621 + x812",
    "-x231^2 - x213 x431 + x214 x431",
    "-1 + x124 x214",
    "-x142^2 x213 x214 - x213 x342 + x214 x342",
    "x142 x214 + x241",
    "x142 x214 + x314",
    "-x142^2 x214 + x341 - x342",
    "x243 x712 + x213 x243 x721 + x142 x213 x812 - x243 x812 - x213 x243 x821",
    "x213 + x231 x243",
    "x243 x621 - x142 x812 + x123 x243 x812",
    "x142 - x123 x243 + x124 x243",
    "x142 x243 - x342",
    "-x142 x213 x214 - x213 x243 + x214 x243",
    "-x231 + x234 + x243 x431",
    "x143 - x123 x243",
    "x134 + x123 x243 x431",
    "x421 + x123 x243 x431",
    "x231 + x412 - x243 x431",
    "x123 x243 + x321",
    "-x243 + x312",
    "x4 + x231 x621 + x231 x721 - x231 x821",
    "x3 - x142 x812",
    "x2 - x612 + x812",
    "x1 - x621 + x821",};

ReferenceSystem build_reference() {
  ReferenceSystem sys;
  std::istringstream in(kDeclaredOrder);
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::string name; in >> name;) {
    sys.declared_order.push_back(name);
    if (seen.insert(name).second) names.push_back(name);
  }
  const std::regex identifier("x[0-9]+");
  for (const char* rel : kRelations) {
    const std::string text(rel);
    for (std::sregex_iterator it(text.begin(), text.end(), identifier), end; it != end; ++it)
      if (seen.insert(it->str()).second) names.push_back(it->str());
  }
  sys.vars = polyalg::VariableSet(std::move(names));
  for (const char* rel : kRelations) sys.relations.push_back(polyalg::parse_polynomial(rel, sys.vars));
  for (const char* g : kReferenceBasis) sys.reference_basis.push_back(polyalg::parse_polynomial(g, sys.vars));
  return sys;
}

}  // namespace

const ReferenceSystem& reference_system() {
  static const ReferenceSystem sys = build_reference();
  return sys;
}

BasisComparison compare_with_reference(const polyalg::GroebnerBasis& computed) {
  const ReferenceSystem& sys = reference_system();
  const polyalg::MonomialOrder order = computed.order();
  const polyalg::GroebnerBasis reference = polyalg::buchberger(sys.reference_basis, order);

  BasisComparison cmp;
  cmp.reference_total = sys.reference_basis.size();
  cmp.computed_total = computed.size();
  for (const Polynomial& g : sys.reference_basis) {
    if (computed.contains(g))
      ++cmp.reference_in_computed;
    else
      cmp.failures.push_back("reference element not in computed ideal: " + g.to_string(order));
  }
  for (const Polynomial& g : computed.generators()) {
    if (reference.contains(g))
      ++cmp.computed_in_reference;
    else
      cmp.failures.push_back("computed element not in reference ideal: " + g.to_string(order));
  }
  cmp.identical_reduced_bases = std::equal(reference.generators().begin(), reference.generators().end(),
                                           computed.generators().begin(), computed.generators().end());
  return cmp;
}

}  // namespace thermoid::prover
