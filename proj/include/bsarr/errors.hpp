#ifndef BSARR_ERRORS_HPP
#define BSARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsarr {

// Bad input shape: mismatched variable lists, ranks, partitions, malformed JSON.
class StructuralError : public std::invalid_argument {
public:
    explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but outside an operation's mathematical domain
// (zero polynomial, non-reduced arrangement where reduced is required, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Groebner degree cap exceeded; carries the offending degree and the cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(int degree, int cap)
        : std::runtime_error("degree cap exceeded: reached degree " + std::to_string(degree) +
                             " with cap " + std::to_string(cap)),
          degree(degree), cap(cap) {}
    int degree;
    int cap;
};

}  // namespace bsarr

#endif
