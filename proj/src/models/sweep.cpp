#include "thermoid/models/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "thermoid/derivcalc/calculus.hpp"
#include "thermoid/derivcalc/enumerate.hpp"
#include "thermoid/error.hpp"
#include "thermoid/models/evaluate.hpp"
#include "thermoid/models/oracle.hpp"

namespace thermoid::models {

namespace {

// A coordinate pair whose gradients are parallel to this relative precision is
// not a chart at the state.
constexpr double kChartTolerance = 1e-9;

bool is_chart(derivcalc::QuantityCode b, derivcalc::QuantityCode c, const PrimitiveValuation& values) {
  using ratfun::Axis;
  const double bx = evaluate(derivcalc::base_partial(b, Axis::x), values);
  const double by = evaluate(derivcalc::base_partial(b, Axis::y), values);
  const double cx = evaluate(derivcalc::base_partial(c, Axis::x), values);
  const double cy = evaluate(derivcalc::base_partial(c, Axis::y), values);
  return std::abs(bx * cy - by * cx) > kChartTolerance * std::hypot(bx, by) * std::hypot(cx, cy);
}

bool is_defined(const derivcalc::DerivTriple& t, const PrimitiveValuation& values) {
  return is_chart(t.b, t.c, values);
}

bool is_defined(const derivcalc::SecondDerivSpec& s, const PrimitiveValuation& values) {
  return is_defined(s.inner, values) && is_chart(s.d, s.e, values);
}

template <class Spec, class Symbolic, class Oracle>
bool check_one(SweepResult& r, const Spec& spec, const PrimitiveValuation& values, Symbolic symbolic,
               Oracle oracle) {
  double sym = 0;
  double num = 0;
  try {
    if (!is_defined(spec, values)) throw DegenerateCoordinates("not a chart");
    sym = evaluate(symbolic(spec), values);
    num = oracle(spec);
  } catch (const DegenerateCoordinates&) {
    ++r.degenerate;
    return false;
  }
  ++r.checked;
  const double dev = std::abs(sym - num) / std::max(1.0, std::abs(sym));
  if (r.worst.empty() || dev > r.max_deviation) {
    r.max_deviation = dev;
    r.worst = derivcalc::to_string(spec);
  }
  return true;
}

}  // namespace

SweepResult sweep_triples(const GasModel& model, StatePoint s) {
  const PrimitiveValuation values = model.valuation(s);
  SweepResult r;
  for (const derivcalc::DerivTriple& t : derivcalc::triples())
    check_one(r, t, values, derivcalc::deriv_triple,
              [&](const derivcalc::DerivTriple& spec) { return oracle_triple(model, spec, s); });
  return r;
}

SweepResult sweep_seconds(const GasModel& model, StatePoint s, std::size_t sample, std::uint64_t seed) {
  const PrimitiveValuation values = model.valuation(s);
  std::vector<derivcalc::SecondDerivSpec> all;
  for (const derivcalc::SecondDerivSpec& spec : derivcalc::seconds()) all.push_back(spec);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  SweepResult r;
  for (const derivcalc::SecondDerivSpec& spec : all) {
    if (r.checked == sample) break;
    check_one(r, spec, values, derivcalc::second_deriv,
              [&](const derivcalc::SecondDerivSpec& sp) { return oracle_second(model, sp, s); });
  }
  return r;
}

}  // namespace thermoid::models
