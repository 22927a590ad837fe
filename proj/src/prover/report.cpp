#include "thermoid/prover/report.hpp"

#include <iomanip>
#include <sstream>

namespace thermoid::prover {

namespace {

std::string poly_text(const polyalg::Polynomial& p) { return p.to_string(ratfun::kCanonicalOrder); }

std::string num_text(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string format_report(const VerificationReport& r) {
  std::ostringstream os;
  os << "identity: " << r.label << '\n';
  os << "status: " << to_string(r.status) << '\n';
  os << "lhs: " << r.lhs_value.to_string() << '\n';
  os << "rhs: " << r.rhs_value.to_string() << '\n';
  os << "reduced_difference: " << poly_text(r.reduced_difference) << '\n';
  os << "side_conditions:";
  if (r.side_conditions.empty()) os << " none";
  os << '\n';
  for (const auto& c : r.side_conditions) os << "  " << poly_text(c) << " != 0\n";
  os << "max_relative_residual: " << num_text(r.max_relative_residual) << '\n';
  os << "residuals:\n";
  for (const NumericResidual& row : r.numeric_residuals) {
    os << "  " << row.model << " at " << models::to_string(row.state) << ": ";
    if (row.degenerate)
      os << "degenerate\n";
    else
      os << "lhs=" << num_text(row.lhs) << " rhs=" << num_text(row.rhs) << " residual=" << num_text(row.residual)
         << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["identity"] = r.label;
  j["status"] = std::string(to_string(r.status));
  j["lhs"] = r.lhs_value.to_string();
  j["rhs"] = r.rhs_value.to_string();
  j["reduced_difference"] = poly_text(r.reduced_difference);
  j["side_conditions"] = nlohmann::json::array();
  for (const auto& c : r.side_conditions) j["side_conditions"].push_back(poly_text(c));
  j["max_relative_residual"] = r.max_relative_residual;
  j["residuals"] = nlohmann::json::array();
  for (const NumericResidual& row : r.numeric_residuals) {
    nlohmann::json e{{"model", row.model}, {"x", row.state.x}, {"y", row.state.y}, {"degenerate", row.degenerate}};
    if (!row.degenerate) {
      e["lhs"] = row.lhs;
      e["rhs"] = row.rhs;
      e["residual"] = row.residual;
    }
    j["residuals"].push_back(std::move(e));
  }
  return j;
}

}  // namespace thermoid::prover
