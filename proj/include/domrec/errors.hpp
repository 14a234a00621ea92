#pragma once

#include <stdexcept>
#include <string>

namespace domrec {

enum class Errc {
    endpoint_out_of_range,
    self_loop,
    duplicate_label,
    malformed_header,
    truncated_body,
    non_canonical_padding,
    unsupported_size,
    vertex_out_of_range,
    vertex_not_in_set,
    cardinality_mismatch,
    parameter_undefined_or_infinite,
    empty_host,
    unsupported_kind,
    no_construction_for_variant,
    parameter_mismatch,
    unknown_variant,
    parse_error,
    invalid_argument,
};

/// All library failures surface as Error; code() identifies the condition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace domrec
