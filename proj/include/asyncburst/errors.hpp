#ifndef ASYNCBURST_ERRORS_HPP
#define ASYNCBURST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asyncburst {

enum class errc {
    row_not_stochastic,
    star_not_positive,
    bad_star_index,
    dimension_mismatch,
    lambda_out_of_range,
    threshold_out_of_range,
    length_mismatch,
    symbol_out_of_range,
    invalid_params,
    invalid_hypothesis,
    not_achievable,
    insufficient_data,
    too_large,
    delta_out_of_range,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace asyncburst

#endif
