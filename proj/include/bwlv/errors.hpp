#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bwlv {

// Base class for every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter fell outside its documented range.
struct range_violation : error {
    explicit range_violation(std::string field_, const std::string& detail = {})
        : error("range violation: " + field_ + (detail.empty() ? "" : " (" + detail + ")")),
          field(std::move(field_)) {}
    std::string field;
};

// A cross-role coefficient pair failed alpha[i][j] == -alpha[j][i].
struct antisymmetry_violation : error {
    antisymmetry_violation() : error("antisymmetry violation: alpha matrix") {}
    explicit antisymmetry_violation(const std::string& detail)
        : error("antisymmetry violation: " + detail) {}
};

// An expanded rate form was requested with a vanishing denominator.
struct singular_form : error {
    explicit singular_form(std::string which_, std::string zero_denominators_ = {})
        : error("singular " + which_ + " form" +
                (zero_denominators_.empty() ? "" : ": zero denominator(s) " + zero_denominators_)),
          which(std::move(which_)), zero_denominators(std::move(zero_denominators_)) {}
    std::string which;              // "prey", "predator" or "closed"
    std::string zero_denominators;  // e.g. "lambda1, xi_d"
};

struct parse_error : error {
    parse_error(std::size_t line_, const std::string& what_)
        : error("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
    std::size_t line;
};

struct dimension_mismatch : error {
    dimension_mismatch(std::size_t expected_, std::size_t got_)
        : error("dimension mismatch: expected " + std::to_string(expected_) + ", got " +
                std::to_string(got_)),
          expected(expected_), got(got_) {}
    std::size_t expected, got;
};

struct index_out_of_range : error {
    index_out_of_range(std::size_t index_, std::size_t size_)
        : error("index " + std::to_string(index_) + " out of range [0, " + std::to_string(size_) +
                ")"),
          index(index_), size(size_) {}
    std::size_t index, size;
};

// Integration diagnostics; populations are never clamped, they fail loudly.
struct nonfinite_state : error {
    explicit nonfinite_state(double t_)
        : error("non-finite population at t = " + std::to_string(t_)), t(t_) {}
    double t;
};

struct negative_population : error {
    negative_population(double t_, std::size_t species_)
        : error("population of species " + std::to_string(species_) +
                " crossed below zero at t = " + std::to_string(t_)),
          t(t_), species(species_) {}
    double t;
    std::size_t species;
};

struct nonpositive_population : error {
    nonpositive_population() : error("population must be strictly positive") {}
};

struct nonpositive_count : error {
    explicit nonpositive_count(double t_)
        : error("non-positive count in series at t = " + std::to_string(t_)), t(t_) {}
    double t;
};

struct fewer_than_two_samples : error {
    fewer_than_two_samples() : error("series needs at least two samples") {}
};

struct nonpositive_gestation : error {
    nonpositive_gestation() : error("gestation periods must be strictly positive") {}
};

}  // namespace bwlv
