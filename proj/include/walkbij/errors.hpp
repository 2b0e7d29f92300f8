#pragma once

#include <stdexcept>
#include <string>

namespace walkbij {

// Failure to decode textual input (walk strings, ballot strings, step-set
// files). The CLI reports these as usage errors (exit code 2).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Stable identifiers for violated operation preconditions.
enum class errc {
    minimum_is_zero,
    not_in_image,
    bad_endpoint,
    not_positive,
    no_such_step,
    empty_sequence,
    not_ugly,
    not_bad,
    no_winner,
    no_negative_visit,
    not_enough_visits,
    bad_input,
    even_length,
    odd_length,
    no_flips,
    cap_exceeded,
    unknown_map,
    unknown_stat,
    non_unit_constant_term,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::minimum_is_zero: return "MinimumIsZero";
        case errc::not_in_image: return "NotInImage";
        case errc::bad_endpoint: return "BadEndpoint";
        case errc::not_positive: return "NotPositive";
        case errc::no_such_step: return "NoSuchStep";
        case errc::empty_sequence: return "EmptySequence";
        case errc::not_ugly: return "NotUgly";
        case errc::not_bad: return "NotBad";
        case errc::no_winner: return "NoWinner";
        case errc::no_negative_visit: return "NoNegativeVisit";
        case errc::not_enough_visits: return "NotEnoughVisits";
        case errc::bad_input: return "BadInput";
        case errc::even_length: return "EvenLength";
        case errc::odd_length: return "OddLength";
        case errc::no_flips: return "NoFlips";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::unknown_map: return "UnknownMap";
        case errc::unknown_stat: return "UnknownStat";
        case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    }
    return "UnknownError";
}

// Thrown when an operation is applied outside its domain. what() starts with
// the errc name so CLI output and tests can match on it.
class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

} // namespace walkbij
