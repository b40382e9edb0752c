#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutbound {

enum class Errc {
    malformed_line,
    duplicate_edge,
    negative_weight,
    self_loop,
    vertex_out_of_range,
    invalid_parameter,
    disconnected,
    not_induced,
    not_bipartite,
    triangle_found,
    precondition_violated,
    not_a_matching,
    size_guard_exceeded,
    internal_assertion,
};

inline std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::malformed_line: return "malformed_line";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::negative_weight: return "negative_weight";
    case Errc::self_loop: return "self_loop";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::disconnected: return "disconnected";
    case Errc::not_induced: return "not_induced";
    case Errc::not_bipartite: return "not_bipartite";
    case Errc::triangle_found: return "triangle_found";
    case Errc::precondition_violated: return "precondition_violated";
    case Errc::not_a_matching: return "not_a_matching";
    case Errc::size_guard_exceeded: return "size_guard_exceeded";
    case Errc::internal_assertion: return "internal_assertion";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

    /// Input problems (bad files, bad parameters) as opposed to broken invariants.
    bool is_input_error() const noexcept
    {
        switch (code_) {
        case Errc::malformed_line:
        case Errc::duplicate_edge:
        case Errc::negative_weight:
        case Errc::self_loop:
        case Errc::vertex_out_of_range:
        case Errc::invalid_parameter:
            return true;
        default:
            return false;
        }
    }

private:
    Errc code_;
};

inline void require(bool condition, Errc code, const std::string& message)
{
    if (!condition)
        throw Error(code, message);
}

} // namespace cutbound
