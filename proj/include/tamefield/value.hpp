#pragma once

#include "tamefield/ogroup.hpp"

#include <optional>
#include <string>

namespace tamefield {

/// An element of vK, or +infinity (the value of 0).
class Value {
public:
    Value() = default;  // infinity
    Value(OGroupElem v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    static Value infinity() { return Value(); }

    bool is_infinite() const { return !v_.has_value(); }
    const OGroupElem& elem() const;

    bool operator==(const Value& other) const;
    std::strong_ordering operator<=>(const Value& other) const;

    Value operator+(const Value& other) const;

    std::string to_string() const;

private:
    std::optional<OGroupElem> v_;
};

inline const Value& min(const Value& a, const Value& b) { return b < a ? b : a; }

}  // namespace tamefield
