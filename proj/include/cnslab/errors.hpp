#pragma once

#include <stdexcept>
#include <string>

namespace cnslab {

/// Error codes for every failure the library can signal. Tests dispatch on
/// the code; the message carries context (offending element, base, ...).
enum class Errc {
    not_positive,
    not_squarefree,
    field_mismatch,
    not_divisible,
    not_quadratic,
    not_cns,
    ring_mismatch,
    no_digit,
    ambiguous_digit,
    non_terminating,
    digit_out_of_range,
    zero_input,
    zero_polynomial,
    factorization_incomplete,
    unit_input,
    not_dependent,
    dependent_bases,
    index_out_of_range,
    not_gap_case,
    empty_input,
    domain_error,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace cnslab
