#pragma once

#include <stdexcept>
#include <string>

namespace lam {

// Input that violates an operation's precondition (bad degree, unreduced
// fraction, crossing leaves, not a MAC, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two leaves cross where the construction promised they would not.
class CrossingError : public DomainError {
public:
    CrossingError(const std::string& what, std::string first, std::string second)
        : DomainError(what), first_(std::move(first)), second_(std::move(second)) {}
    const std::string& first() const { return first_; }
    const std::string& second() const { return second_; }

private:
    std::string first_;
    std::string second_;
};

} // namespace lam
