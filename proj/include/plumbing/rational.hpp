#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plumbing {

// All arithmetic in this library is exact. The criteria implemented here are
// open/closed sign conditions, so there is no floating-point mode at all.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Renders "p" for integers and "p/q" otherwise, never decimals.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string vec_to_string(const RatVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v[i]);
    }
    return out;
}

// Accepts "p" or "p/q" with optional sign; rejects q = 0.
inline std::optional<Rat> parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) return std::nullopt;
        return Rat(Int(std::string(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rat(Int(std::string(num)), d);
}

inline std::optional<RatVec> parse_rational_csv(std::string_view text) {
    RatVec out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        auto r = parse_rational(piece);
        if (!r) return std::nullopt;
        out.push_back(*r);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace plumbing
