#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

// Malformed input: files, flags, out-of-range parameters. CLI exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact enumeration would exceed the configured budget. CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string message, double required_bits, double budget_bits)
        : std::runtime_error(std::move(message)),
          required_bits(required_bits),
          budget_bits(budget_bits) {}

    double required_bits;
    double budget_bits;
};

// Weight tensor is outside the admissible polydisc. CLI exit code 2.
class CertificateError : public std::runtime_error {
public:
    CertificateError(std::string message, double delta, double delta_max)
        : std::runtime_error(std::move(message)), delta(delta), delta_max(delta_max) {}

    double delta;     // radius the tensor actually attains
    double delta_max; // gamma / max_degree admission radius
};

// Derivative computation would exceed the cost ceiling. CLI exit code 3.
class CostGuardError : public std::runtime_error {
public:
    CostGuardError(std::string message, int order, double estimate, double ceiling)
        : std::runtime_error(std::move(message)),
          order(order),
          estimate(estimate),
          ceiling(ceiling) {}

    int order;
    double estimate; // estimated elementary products
    double ceiling;
};

} // namespace qhom
