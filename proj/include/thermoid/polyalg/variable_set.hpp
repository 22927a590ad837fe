#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace thermoid::polyalg {

/// Ordered list of distinct variable names. Position 0 has the highest precedence
/// in every monomial order. Copies share the same immutable storage.
class VariableSet {
 public:
  VariableSet();
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return data_->names.size(); }
  const std::string& name(std::size_t index) const { return data_->names.at(index); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableSet& lhs, const VariableSet& rhs) noexcept;

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace thermoid::polyalg
