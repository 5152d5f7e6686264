#pragma once

#include <stdexcept>
#include <string>

namespace glab {

// Input/contract violations.
struct invalid_facet : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct empty_complex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_a_face : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct apex_in_complex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_pure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_normal_pseudomanifold : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct term_budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cone_parameter_degenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_witness_face : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conditions that a fresh specialization (of the frame or of the auxiliary
// point) is expected to clear; callers run bounded resample loops on these.
struct resample_needed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_hit : resample_needed {
    using resample_needed::resample_needed;
};
struct derivative_at_pole : resample_needed {
    using resample_needed::resample_needed;
};
struct zero_bracket_collision : resample_needed {
    using resample_needed::resample_needed;
};
struct singular_solve : resample_needed {
    using resample_needed::resample_needed;
};

} // namespace glab
