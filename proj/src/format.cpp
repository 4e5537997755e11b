#include "hball/format.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hball {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("malformed complex literal '" + std::string(whole) + "'");
    }
    return v;
}

double parse_coefficient(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") {
        return 1.0;
    }
    if (s == "-") {
        return -1.0;
    }
    return parse_real(s, whole);
}

}  // namespace

std::string format_real(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_real failed");
    }
    return std::string(buf.data(), ptr);
}

std::string format_complex(Complex z) {
    std::string out = format_real(z.real());
    const double im = z.imag();
    if (std::signbit(im)) {
        out += '-';
        out += format_real(-im);
    } else {
        out += '+';
        out += format_real(im);
    }
    out += 'i';
    return out;
}

std::string format_vector(const CVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_complex(v[i]);
    }
    out += ')';
    return out;
}

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty complex literal");
    }
    if (s.back() != 'i') {
        return {parse_real(s, text), 0.0};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_coefficient(body, text)};
    }
    return {parse_real(trim(body.substr(0, split)), text), parse_coefficient(trim(body.substr(split)), text)};
}

CVec parse_vector(std::string_view text, std::size_t dim_hint) {
    std::string_view s = trim(text);
    if (s.size() >= 2 && (s.front() == 'e' || s.front() == 'E') && std::isdigit(static_cast<unsigned char>(s[1]))) {
        std::size_t k = 0;
        const auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
        if (ec != std::errc{} || ptr != s.data() + s.size() || k == 0) {
            throw std::invalid_argument("malformed basis vector '" + std::string(text) + "'");
        }
        const std::size_t dim = dim_hint == 0 ? k : dim_hint;
        if (k > dim) {
            throw std::invalid_argument("basis index exceeds dimension in '" + std::string(text) + "'");
        }
        return CVec::unit(dim, k - 1);
    }
    if (s.empty() || s.front() != '(') {
        return CVec{parse_complex(s)};
    }
    if (s.back() != ')') {
        throw std::invalid_argument("unterminated vector literal '" + std::string(text) + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<Complex> entries;
    while (true) {
        const std::size_t comma = s.find(',');
        entries.push_back(parse_complex(s.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return CVec(std::move(entries));
}

}  // namespace hball
