#pragma once

#include <memory>
#include <string>
#include <vector>

#include "detideal/field.hpp"
#include "detideal/variables.hpp"

namespace detideal {

// A polynomial ring is a variable list plus a coefficient field.  Rings are
// shared immutably; equality is by content, so two independently constructed
// rings with the same variables and field are interchangeable.
class Ring {
  public:
    Ring(std::vector<std::string> var_names, FieldConfig field)
        : vars_(std::move(var_names)), field_(field) {}

    const VariableSet& vars() const { return vars_; }
    const FieldConfig& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }

    bool operator==(const Ring& o) const { return vars_ == o.vars_ && field_ == o.field_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = field_.kind == FieldKind::Rationals ? "Q[" : "GF(" + std::to_string(field_.p) + ")[";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) s += ",";
            s += vars_.name(i);
        }
        return s + "]";
    }

  private:
    VariableSet vars_;
    FieldConfig field_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> var_names, FieldConfig field) {
    return std::make_shared<const Ring>(std::move(var_names), field);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw RingMismatchError("operands live in different rings");
}

}  // namespace detideal
