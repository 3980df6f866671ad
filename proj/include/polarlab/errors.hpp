#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polarlab {

enum class errc {
    degree_zero,            // operation needs degree >= 1
    degree_mismatch,        // declared leading coefficient is numerically zero
    zero_leading,           // leading coefficient must be nonzero
    non_divisor,            // block index must divide the degree
    bad_annulus,            // outer radius must exceed inner radius
    non_positive_radius,    // circle radius must be > 0
    non_positive_tolerance, // tolerance must be > 0
    tolerance_unreachable,  // evaluation budget exhausted before reaching eps
    degenerate_denominator, // A-quantity denominator <= 0
    precondition_violated,  // see precondition_error::report
    bad_theorem,            // unknown theorem identifier
    bad_file,               // file parsed but does not match the schema
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// One named precondition of a bound evaluator or trial, with its outcome.
struct Precondition {
    std::string name;
    bool satisfied = false;
};

using PreconditionReport = std::vector<Precondition>;

class precondition_error : public error {
  public:
    explicit precondition_error(PreconditionReport report)
        : error(errc::precondition_violated, describe(report)), report_(std::move(report)) {}

    const PreconditionReport& report() const noexcept { return report_; }

  private:
    static std::string describe(const PreconditionReport& report) {
        std::string out;
        for (const auto& p : report) {
            if (p.satisfied) continue;
            if (!out.empty()) out += "; ";
            out += p.name;
        }
        return out.empty() ? std::string("(unspecified)") : out;
    }

    PreconditionReport report_;
};

} // namespace polarlab
