#include "setshare/universe.hpp"

#include "setshare/error.hpp"

namespace setshare {

VariableUniverse::VariableUniverse() : data_(std::make_shared<const Data>()) {}

VariableUniverse::VariableUniverse(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw LimitError("at most " + std::to_string(kMaxVariables) + " variables are supported, got " +
                     std::to_string(names.size()));
  }
  Data data;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw SemanticError("empty variable name");
    if (!data.index.emplace(names[i], i).second) {
      throw SemanticError("variable '" + names[i] + "' declared twice");
    }
  }
  data.names = std::move(names);
  data_ = std::make_shared<const Data>(std::move(data));
}

std::optional<std::size_t> VariableUniverse::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableUniverse::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw PreconditionError("variable '" + std::string(name) + "' is not in the universe");
}

VarSet VariableUniverse::set_of(const std::vector<std::string>& names) const {
  VarSet out;
  for (const auto& n : names) out.insert(require(n));
  return out;
}

std::string VariableUniverse::format_group(VarSet set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set) {
    if (!first) out += ',';
    out += name(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string VariableUniverse::format_list(VarSet set) const {
  std::string out;
  for (std::size_t i : set) {
    if (!out.empty()) out += ' ';
    out += name(i);
  }
  return out;
}

}  // namespace setshare
