#pragma once

#include <stdexcept>
#include <string>

namespace pns {

// A certified hypothesis required by a construction does not hold (or could
// not be certified). `hypothesis` names the gate that failed, e.g.
// "sup_diagonal" or "subproduct".
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string hypothesis, const std::string& message)
        : std::runtime_error(message), hypothesis_(std::move(hypothesis)) {}
    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

// A level query fell below every materialized radius; raising instead of
// silently truncating keeps the level function honest.
class InsufficientDepthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lookup outside the domain of a table-backed t-norm.
class TableDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Scenario config rejected; message carries the field (and position when the
// document itself is malformed).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pns
