#pragma once

#include <stdexcept>
#include <vector>

namespace radvar {

// Radial quantum numbers: n counts interior nodes, l is the orbital momentum.
struct QuantumState {
    int n = 0;
    int l = 0;
};

void validate(const QuantumState& state);

enum class PotentialKind { PowerLaw, Logarithmic };

// V(r) = sign * A * r^nu for PowerLaw, V(r) = log(r) for Logarithmic.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::PowerLaw;
    double A = 1.0;
    double nu = 1.0;
    int sign = +1;

    static PotentialSpec power_law(double A, double nu, int sign);
    static PotentialSpec logarithmic();
};

void validate(const PotentialSpec& pot);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

enum class Normalization { UnitL2, Raw };
enum class GridUnits { Reduced, Physical };

struct RadialSamples {
    std::vector<double> grid;
    std::vector<double> values;
    Normalization normalization = Normalization::Raw;
    int node_count = 0;
};

// Counts strict sign changes between consecutive nonzero samples.
int count_nodes(const std::vector<double>& values);

struct RadialGridSpec {
    double r_min = 1e-6;
    double r_max = 15.0;
    double step = 0.005;
    GridUnits units = GridUnits::Reduced;
};

void validate(const RadialGridSpec& grid);

}  // namespace radvar
