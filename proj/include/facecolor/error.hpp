#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facecolor {

enum class ErrorCode {
    empty,
    non_simple,
    bad_involution,
    disconnected,
    edge_multiplicity,
    pinched_vertex,
    not_triangulation,
    flip_blocked,
    too_small,
    too_large,
    not_tripartite,
    not_simple,
    not_d_angulation,
    bad_range,
    bad_argument,
    unknown_name,
    not_found,
    parse_error,
    internal_contract,
};

std::string_view to_string(ErrorCode code);

/// Raised on contract violations by every module; `code()` is stable across releases.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace facecolor
