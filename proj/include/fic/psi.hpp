#ifndef FIC_PSI_HPP
#define FIC_PSI_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace fic {

// Gaussian point-to-point capacity per complex dimension, in bits:
// psi(x) = log2(1 + x) for x >= 0.
inline double psi(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("psi: argument must be finite and >= 0, got " +
                                    std::to_string(x));
    return std::log2(1.0 + x);
}

}  // namespace fic

#endif
