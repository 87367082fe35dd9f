#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace setshare {

/// A subset of a variable universe, stored as a bitmask over declaration indices.
class VarSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VarSet() = default;
  static constexpr VarSet from_bits(std::uint64_t bits) { return VarSet(bits); }
  static constexpr VarSet singleton(std::size_t index) { return VarSet(std::uint64_t{1} << index); }
  static constexpr VarSet first_n(std::size_t n) {
    return VarSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VarSet& insert(std::size_t index) {
    bits_ |= std::uint64_t{1} << index;
    return *this;
  }
  constexpr VarSet& erase(std::size_t index) {
    bits_ &= ~(std::uint64_t{1} << index);
    return *this;
  }

  constexpr VarSet& operator|=(VarSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VarSet& operator&=(VarSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VarSet& operator-=(VarSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VarSet operator|(VarSet a, VarSet b) { return a |= b; }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return a &= b; }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return a -= b; }
  friend constexpr bool operator==(VarSet, VarSet) = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Canonical group order: by cardinality, then lexicographically over declaration order.
constexpr bool canonical_less(VarSet a, VarSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // The lowest differing index decides: the set holding it has the smaller element there.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VarSet a, VarSet b) const { return canonical_less(a, b); }
};

/// The finite, ordered set X of program variables an analysis ranges over.
/// Copies share the underlying name table.
class VariableUniverse {
 public:
  static constexpr std::size_t kMaxVariables = 64;

  VariableUniverse();
  /// Throws SemanticError on empty or duplicate names, LimitError beyond kMaxVariables.
  explicit VariableUniverse(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t index) const { return data_->names.at(index); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws PreconditionError for variables outside X.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  VarSet all() const { return VarSet::first_n(size()); }
  VarSet set_of(const std::vector<std::string>& names) const;

  /// `{a,b}` with members in declaration order; `{}` for the empty set.
  std::string format_group(VarSet set) const;
  /// Space-separated names in declaration order.
  std::string format_list(VarSet set) const;

  friend bool operator==(const VariableUniverse& a, const VariableUniverse& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace setshare
