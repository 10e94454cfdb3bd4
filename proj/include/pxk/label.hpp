#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

namespace pxk {

// Opaque vertex/facet token.  Either an integer or a string; integers order
// before strings, integers by value, strings lexicographically.  This gives a
// total order used for all canonical sorting.
class Label {
public:
    Label() : v_(std::int64_t{0}) {}
    explicit Label(std::int64_t n) : v_(n) {}
    explicit Label(std::string s) : v_(std::move(s)) {}

    // A token consisting solely of an optional sign and decimal digits is an
    // integer label; anything else is a string label.
    static Label parse(const std::string& tok);

    bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
    const std::string& as_string() const { return std::get<std::string>(v_); }

    std::string str() const {
        return is_int() ? std::to_string(as_int()) : as_string();
    }

    friend bool operator==(const Label& a, const Label& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        if (a.is_int() != b.is_int())
            return a.is_int() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_int())
            return a.as_int() <=> b.as_int();
        return a.as_string() <=> b.as_string();
    }

private:
    std::variant<std::int64_t, std::string> v_;
};

inline Label Label::parse(const std::string& tok) {
    if (tok.empty()) return Label(std::string());
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return Label(tok);
    for (std::size_t k = i; k < tok.size(); ++k)
        if (tok[k] < '0' || tok[k] > '9') return Label(tok);
    if (tok.size() - i > 18) return Label(tok); // too long for int64, keep as string
    return Label(std::int64_t(std::stoll(tok)));
}

} // namespace pxk

template <>
struct std::hash<pxk::Label> {
    std::size_t operator()(const pxk::Label& l) const {
        return l.is_int() ? std::hash<std::int64_t>{}(l.as_int())
                          : std::hash<std::string>{}(l.as_string());
    }
};
