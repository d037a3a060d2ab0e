#pragma once

#include <stdexcept>
#include <string>

namespace selforth {

// Error categories used across the library. Every throwing operation
// documents which of these it can raise.
enum class errc {
    not_prime,
    reducible_modulus,
    degree_zero,
    division_by_zero,
    tower_mismatch,
    wrong_count,
    not_a_basis,
    too_large,
    bad_range,
    not_coprime,
    empty_code,
    length_mismatch,
    bad_set,
    condition_not_met,
    non_consecutive_s,
    parse_error,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace selforth
