#pragma once

#include <stdexcept>
#include <string>

namespace centralizer {

enum class errc {
    size_mismatch,
    out_of_shape,
    empty_partition,
    domain_error,
    t_out_of_range,
    not_a_corner,
    malformed_path,
    incompatible_pair,
    invalid_context,
    nu_too_large,
    parity_error,
    invalid_pair,
    negative_count,
    level_out_of_range,
    vertex_not_found,
    unknown_format,
    n_out_of_range,
    non_integer_multiplicity,
    scale_exceeded,
    parse_error,
};

inline const char* errc_name(errc code)
{
    switch (code) {
    case errc::size_mismatch: return "SizeMismatch";
    case errc::out_of_shape: return "OutOfShape";
    case errc::empty_partition: return "EmptyPartition";
    case errc::domain_error: return "DomainError";
    case errc::t_out_of_range: return "TOutOfRange";
    case errc::not_a_corner: return "NotACorner";
    case errc::malformed_path: return "MalformedPath";
    case errc::incompatible_pair: return "IncompatiblePair";
    case errc::invalid_context: return "InvalidContext";
    case errc::nu_too_large: return "NuTooLarge";
    case errc::parity_error: return "ParityError";
    case errc::invalid_pair: return "InvalidPair";
    case errc::negative_count: return "NegativeCount";
    case errc::level_out_of_range: return "LevelOutOfRange";
    case errc::vertex_not_found: return "VertexNotFound";
    case errc::unknown_format: return "UnknownFormat";
    case errc::n_out_of_range: return "NOutOfRange";
    case errc::non_integer_multiplicity: return "NonIntegerMultiplicity";
    case errc::scale_exceeded: return "ScaleExceeded";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. The code identifies the contract that
/// was violated; what() carries a human-readable message prefixed by its name.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
    {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace centralizer
