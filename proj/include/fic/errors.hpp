#ifndef FIC_ERRORS_HPP
#define FIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fic {

// An expectation integrand evaluated to NaN/inf at one support point.
class NonFiniteValueError : public std::runtime_error {
public:
    NonFiniteValueError(std::size_t index, const std::string& context)
        : std::runtime_error("non-finite value at support point " + std::to_string(index) +
                             (context.empty() ? "" : " in " + context)),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// The CSIT side information does not determine the cross link gain, so the
// interference-aware split assignment (and with it the gap certificate) is
// undefined. Distinct from a certificate that ran and failed.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// A support direction in which the polytope has no finite maximum.
class UnboundedRegionError : public std::runtime_error {
public:
    explicit UnboundedRegionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fic

#endif
