#include "facecolor/error.hpp"

namespace facecolor {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::empty: return "EMPTY";
    case ErrorCode::non_simple: return "NON_SIMPLE";
    case ErrorCode::bad_involution: return "BAD_INVOLUTION";
    case ErrorCode::disconnected: return "DISCONNECTED";
    case ErrorCode::edge_multiplicity: return "EDGE_MULTIPLICITY";
    case ErrorCode::pinched_vertex: return "PINCHED_VERTEX";
    case ErrorCode::not_triangulation: return "NOT_TRIANGULATION";
    case ErrorCode::flip_blocked: return "FLIP_BLOCKED";
    case ErrorCode::too_small: return "TOO_SMALL";
    case ErrorCode::too_large: return "TOO_LARGE";
    case ErrorCode::not_tripartite: return "NOT_TRIPARTITE";
    case ErrorCode::not_simple: return "NOT_SIMPLE";
    case ErrorCode::not_d_angulation: return "NOT_D_ANGULATION";
    case ErrorCode::bad_range: return "BAD_RANGE";
    case ErrorCode::bad_argument: return "BAD_ARGUMENT";
    case ErrorCode::unknown_name: return "UNKNOWN_NAME";
    case ErrorCode::not_found: return "NOT_FOUND";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::internal_contract: return "INTERNAL_CONTRACT";
    }
    return "UNKNOWN";
}

}  // namespace facecolor
