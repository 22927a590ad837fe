#include "thermoid/polyalg/variable_set.hpp"

#include "thermoid/error.hpp"

namespace thermoid::polyalg {

VariableSet::VariableSet() : data_(std::make_shared<const Data>()) {}

VariableSet::VariableSet(std::vector<std::string> names) {
  Data data;
  data.index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw UsageError("variable names must be non-empty");
    if (!data.index.emplace(names[i], i).second)
      throw UsageError("duplicate variable name '" + names[i] + "'");
  }
  data.names = std::move(names);
  data_ = std::make_shared<const Data>(std::move(data));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool operator==(const VariableSet& lhs, const VariableSet& rhs) noexcept {
  return lhs.data_ == rhs.data_ || lhs.data_->names == rhs.data_->names;
}

}  // namespace thermoid::polyalg
