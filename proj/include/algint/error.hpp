#ifndef ALGINT_ERROR_HPP
#define ALGINT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace algint {

/// Failure categories raised by library operations. Each maps onto one of the
/// precondition/contract errors named by the operation that raises it.
enum class ErrorKind {
    invalid_argument,
    undefined_input,
    derivative_vanishes,
    no_real_root,
    degenerate_body,
    constraint_violation,
    unsupported_degree,
    out_of_domain,
    no_prime,
    degenerate_pair,
    diagonal_violation,
    budget_exceeded,
    empty_tiling,
    inexact_power,
    internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::undefined_input: return "undefined-input";
    case ErrorKind::derivative_vanishes: return "derivative-vanishes";
    case ErrorKind::no_real_root: return "no-real-root";
    case ErrorKind::degenerate_body: return "degenerate-body";
    case ErrorKind::constraint_violation: return "constraint-violation";
    case ErrorKind::unsupported_degree: return "unsupported-degree";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::no_prime: return "no-prime";
    case ErrorKind::degenerate_pair: return "degenerate-pair";
    case ErrorKind::diagonal_violation: return "diagonal-violation";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::empty_tiling: return "empty-tiling";
    case ErrorKind::inexact_power: return "inexact-power";
    case ErrorKind::internal: return "internal-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace algint

#endif
