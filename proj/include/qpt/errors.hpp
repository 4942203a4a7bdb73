#pragma once

#include <stdexcept>
#include <string>

namespace qpt {

// Requested construction exceeds the configured degree cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition between cooperating operations was violated.
class contract_error : public std::runtime_error {
public:
    explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The error budget cannot be met (delta0 >= gap).
class infeasible_budget_error : public std::runtime_error {
public:
    explicit infeasible_budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qpt
