#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "detideal/errors.hpp"

namespace detideal {

// Monomial exponent vectors are fixed-size arrays; see monomial.hpp.
inline constexpr std::size_t kMaxVars = 32;

inline bool is_valid_variable_name(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s[0])) return false;
    for (char c : s) {
        if (!alpha(c) && !digit(c)) return false;
    }
    return true;
}

// Ordered list of distinct variable names.  Position in the list is the
// variable's index; earlier means greater in every supported term order,
// so a declaration [a1,...,a5,b1,...,b5] gives a1 > ... > a5 > b1 > ... > b5.
class VariableSet {
  public:
    VariableSet() = default;

    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw DomainError("a polynomial ring needs at least one variable");
        if (names_.size() > kMaxVars) {
            throw CapacityError("too many variables: " + std::to_string(names_.size()) +
                                " (limit " + std::to_string(kMaxVars) + ")");
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!is_valid_variable_name(names_[i])) {
                throw DomainError("invalid variable name \"" + names_[i] + "\"");
            }
            auto [it, inserted] = index_.emplace(names_[i], i);
            (void)it;
            if (!inserted) throw DomainError("duplicate variable name \"" + names_[i] + "\"");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& n) const { return index_.count(n) != 0; }

    std::size_t index(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw DomainError("unknown variable \"" + n + "\"");
        return it->second;
    }

    bool operator==(const VariableSet& o) const { return names_ == o.names_; }
    bool operator!=(const VariableSet& o) const { return !(*this == o); }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detideal
