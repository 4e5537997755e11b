#include "hball/cli_spec.hpp"

#include "hball/format.hpp"

#include <charconv>
#include <cmath>

namespace hball {

namespace {

double parse_number(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError("bad value for " + std::string(key) + ": '" + std::string(text) + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0 || v > 64) {
        throw UsageError("bad dimension for " + std::string(key) + ": '" + std::string(text) + "'");
    }
    return v;
}

std::pair<std::string_view, std::string_view> split_pair(std::string_view item) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw UsageError("expected key=value, got '" + std::string(item) + "'");
    }
    return {item.substr(0, eq), item.substr(eq + 1)};
}

}  // namespace

BuiltinSpec parse_generator_spec(std::string_view text) {
    std::string_view dim_part;
    if (const auto at = text.find('@'); at != std::string_view::npos) {
        dim_part = text.substr(at + 1);
        text = text.substr(0, at);
    }
    std::string_view params;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        params = text.substr(colon + 1);
        text = text.substr(0, colon);
    }

    BuiltinSpec spec;
    bool found = false;
    for (const auto kind : {BuiltinKind::Example1, BuiltinKind::Example2, BuiltinKind::Example3, BuiltinKind::Example4,
                            BuiltinKind::Example5, BuiltinKind::Zero, BuiltinKind::ScaledIdentity}) {
        if (builtin_name(kind) == text) {
            spec.kind = kind;
            found = true;
        }
    }
    if (!found) {
        throw UsageError("unknown generator '" + std::string(text) + "'");
    }
    if (spec.kind == BuiltinKind::Example2 || spec.kind == BuiltinKind::Example3) {
        spec.dim = 2;
    }

    while (!params.empty()) {
        const auto comma = params.find(',');
        const auto [key, value] = split_pair(params.substr(0, comma));
        if (key == "chi" && spec.kind == BuiltinKind::Example1) {
            spec.chi = parse_number(key, value);
        } else if (key == "c" && spec.kind == BuiltinKind::ScaledIdentity) {
            spec.scale = parse_number(key, value);
        } else {
            throw UsageError("unknown parameter '" + std::string(key) + "' for " + builtin_name(spec.kind));
        }
        params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
    }

    if (!dim_part.empty()) {
        const auto [key, value] = split_pair(dim_part);
        if (key == "m") {
            if (spec.kind != BuiltinKind::Example2 && spec.kind != BuiltinKind::Example3) {
                throw UsageError("@m applies to example2 and example3 only");
            }
            spec.dim = 1 + parse_count(key, value);
        } else if (key == "n") {
            spec.dim = parse_count(key, value);
        } else {
            throw UsageError("unknown dimension key '" + std::string(key) + "' (use m or n)");
        }
    }
    try {
        validate(spec);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return spec;
}

std::string generator_spec_text(const BuiltinSpec& spec) {
    std::string out = builtin_name(spec.kind);
    if (spec.kind == BuiltinKind::Example1) {
        out += ":chi=" + format_real(spec.chi);
    } else if (spec.kind == BuiltinKind::ScaledIdentity) {
        out += ":c=" + format_real(spec.scale);
    }
    return out + "@n=" + std::to_string(spec.dim);
}

BoundaryPoint parse_boundary_point(std::string_view text, std::size_t dim) {
    try {
        const CVec v = parse_vector(text, dim);
        require_same_dim(v, CVec::zeros(dim));
        return BoundaryPoint(v);
    } catch (const std::logic_error& e) {
        throw UsageError("bad boundary point '" + std::string(text) + "': " + e.what());
    }
}

BallPoint parse_ball_point(std::string_view text, std::size_t dim) {
    try {
        const CVec v = parse_vector(text, dim);
        require_same_dim(v, CVec::zeros(dim));
        return BallPoint(v);
    } catch (const std::logic_error& e) {
        throw UsageError("bad ball point '" + std::string(text) + "': " + e.what());
    }
}

}  // namespace hball
