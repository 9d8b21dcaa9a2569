#include "radvar/types.hpp"

#include <cmath>

namespace radvar {

void validate(const QuantumState& state) {
    if (state.n < 0 || state.l < 0) {
        throw std::invalid_argument("QuantumState: n and l must be nonnegative");
    }
}

PotentialSpec PotentialSpec::power_law(double A, double nu, int sign) {
    PotentialSpec pot;
    pot.kind = PotentialKind::PowerLaw;
    pot.A = A;
    pot.nu = nu;
    pot.sign = sign;
    validate(pot);
    return pot;
}

PotentialSpec PotentialSpec::logarithmic() {
    PotentialSpec pot;
    pot.kind = PotentialKind::Logarithmic;
    return pot;
}

void validate(const PotentialSpec& pot) {
    if (pot.kind == PotentialKind::Logarithmic) {
        return;
    }
    if (!(pot.A > 0.0)) {
        throw std::invalid_argument("PotentialSpec: strength A must be positive");
    }
    if (!(pot.nu > -2.0)) {
        throw std::invalid_argument("PotentialSpec: exponent nu must exceed -2");
    }
    if (pot.sign != 1 && pot.sign != -1) {
        throw std::invalid_argument("PotentialSpec: sign must be +1 or -1");
    }
}

int count_nodes(const std::vector<double>& values) {
    int nodes = 0;
    double prev = 0.0;
    for (const double v : values) {
        if (v == 0.0) {
            continue;
        }
        if (prev != 0.0 && ((prev < 0.0) != (v < 0.0))) {
            ++nodes;
        }
        prev = v;
    }
    return nodes;
}

void validate(const RadialGridSpec& grid) {
    if (!(grid.r_min > 0.0) || !(grid.r_max > grid.r_min)) {
        throw std::invalid_argument("RadialGridSpec: require 0 < r_min < r_max");
    }
    if (!(grid.step > 0.0) || grid.step > (grid.r_max - grid.r_min) / 1000.0) {
        throw std::invalid_argument("RadialGridSpec: step must be positive and at most (r_max - r_min)/1000");
    }
}

}  // namespace radvar
