#pragma once

#include <stdexcept>
#include <string>

namespace tightsfs {

enum class errc {
    overflow,
    division_by_zero,
    parse_error,
    non_negative_input,
    strict_mode_impossible,
    invalid_continued_fraction,
    invalid_fiber,
    bad_shift,
    not_rational,
    integer_already,
    expansion_impossible,
    not_integral,
    framing_too_large,
    invalid_slope,
    not_normalizable,
    invalid_state,
    unsupported_regime,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace tightsfs
