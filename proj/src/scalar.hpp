#pragma once

#include <string>
#include <variant>

#include "errors.hpp"
#include "jsonx.hpp"

namespace skillkit {

/// A JSON scalar (string, integer, float, or bool). Param values, parameter
/// defaults, and substitution arguments are all scalars; the original JSON
/// type is preserved for lossless round-trips.
class ScalarValue {
public:
    ScalarValue() : value_(std::string{}) {}
    explicit ScalarValue(std::string s) : value_(std::move(s)) {}
    explicit ScalarValue(const char* s) : value_(std::string(s)) {}
    explicit ScalarValue(long long i) : value_(i) {}
    explicit ScalarValue(int i) : value_(static_cast<long long>(i)) {}
    explicit ScalarValue(double d) : value_(d) {}
    explicit ScalarValue(bool b) : value_(b) {}

    static ScalarValue from_json(const ojson& v, const std::string& path) {
        if (v.is_string()) return ScalarValue(v.get<std::string>());
        if (v.is_boolean()) return ScalarValue(v.get<bool>());
        if (v.is_number_integer()) return ScalarValue(v.get<long long>());
        if (v.is_number_float()) return ScalarValue(v.get<double>());
        throw SchemaError(path, "expected a scalar (string, number, or bool)");
    }

    ojson to_json() const {
        ojson out;
        std::visit([&](const auto& v) { out = v; }, value_);
        return out;
    }

    bool is_string() const { return std::holds_alternative<std::string>(value_); }
    bool is_int() const { return std::holds_alternative<long long>(value_); }
    bool is_float() const { return std::holds_alternative<double>(value_); }
    bool is_bool() const { return std::holds_alternative<bool>(value_); }

    const std::string& as_string() const { return std::get<std::string>(value_); }
    long long as_int() const { return std::get<long long>(value_); }
    double as_float() const {
        return is_int() ? static_cast<double>(as_int()) : std::get<double>(value_);
    }
    bool as_bool() const { return std::get<bool>(value_); }

    /// Canonical text rendering: strings verbatim, everything else as its JSON
    /// literal ("true", "1", "1.5").
    std::string to_text() const {
        if (is_string()) return as_string();
        return to_json().dump();
    }

    bool operator==(const ScalarValue& other) const = default;

private:
    std::variant<std::string, long long, double, bool> value_;
};

} // namespace skillkit
