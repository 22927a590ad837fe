#include "thermoid/models/state_grid.hpp"

#include <charconv>
#include <string>

#include "thermoid/error.hpp"

namespace thermoid::models {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view s) {
  std::string owned(trim(s));
  if (owned.empty()) throw UsageError("empty number");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed number '" + owned + "'");
  }
  if (used != owned.size()) throw UsageError("malformed number '" + owned + "'");
  return v;
}

std::size_t parse_count(std::string_view s) {
  s = trim(s);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || n == 0)
    throw UsageError("grid point count must be a positive integer, got '" + std::string(s) + "'");
  return n;
}

}  // namespace

double parse_number(std::string_view text) {
  auto parts = split(text, '/');
  if (parts.size() == 1) return parse_decimal(parts[0]);
  if (parts.size() != 2) throw UsageError("malformed number '" + std::string(text) + "'");
  double den = parse_decimal(parts[1]);
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return parse_decimal(parts[0]) / den;
}

std::vector<StatePoint> state_grid(double x0, double x1, std::size_t n, double y0, double y1,
                                   std::size_t m) {
  if (n == 0 || m == 0) throw UsageError("grid needs at least one point per axis");
  std::vector<StatePoint> out;
  out.reserve(n * m);
  auto at = [](double lo, double hi, std::size_t i, std::size_t count) {
    return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out.push_back(StatePoint{at(x0, x1, i, n), at(y0, y1, j, m)});
  return out;
}

std::vector<StatePoint> parse_state_grid(std::string_view text) {
  auto axes = split(text, ',');
  if (axes.size() != 2) throw UsageError("grid must look like x0:x1:n,y0:y1:m");
  auto xs = split(axes[0], ':');
  auto ys = split(axes[1], ':');
  if (xs.size() != 3 || ys.size() != 3) throw UsageError("grid must look like x0:x1:n,y0:y1:m");
  return state_grid(parse_number(xs[0]), parse_number(xs[1]), parse_count(xs[2]), parse_number(ys[0]),
                    parse_number(ys[1]), parse_count(ys[2]));
}

StatePoint parse_state(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("state must look like x,y");
  return StatePoint{parse_number(parts[0]), parse_number(parts[1])};
}

}  // namespace thermoid::models
