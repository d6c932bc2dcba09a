#pragma once

#include "galbrun/operators.hpp"

#include <string>
#include <vector>

namespace galbrun {

// Parameters of the built-in steady background scenarios. All shipped flows
// are of the parallel class u0 = (U(y), 0) with y-dependent rho0, c0, p0, so
// wall tangency and steady mass conservation hold identically.
struct ScenarioParams {
    std::string name = "quiescent-uniform"; // | uniform-axial | parallel-shear
    double rho_ref = 1.0;
    double c_ref = 1.0;
    double p_ref = 1.0;
    double mach = 0.3;        // uniform-axial, parallel-shear
    double shear_delta = 0.2; // parallel-shear: tanh layer width
    double rho_amp = 0.0;     // parallel-shear: rho0(y) = rho_ref(1 + rho_amp cos(2 pi y/Ly))
    double gamma = 1.4;       // parallel-shear: polytropic exponent (p = K rho^gamma)
};

// Steady background with analytic derivative fields (nothing here is obtained
// by finite differences; the derivative fields are the scenario's closed
// forms sampled at the nodes).
struct BackgroundFlow {
    GridPtr grid;
    ScenarioParams params;

    VectorField u0;
    ScalarField rho0, c0, p0;
    VectorField phi0; // (u0.grad)u0 + rho0^{-1} grad p0

    TensorField grad_u0;
    VectorField grad_rho0, grad_c0, grad_p0;
    ScalarField D0c0; // u0.grad c0 (steady flow)

    // Node-sampled bounds.
    double rho_min = 0, rho_max = 0, c_min = 0, c_max = 0;
    double max_grad_u0 = 0;      // max spectral norm of grad u0
    double max_c0inv_D0c0 = 0;   // max |D0 c0 / c0|

    // Analytic pointwise background velocity (used by the particle tracer).
    double u0x_at(double y) const;
    static double u0y_at() { return 0.0; }
};

BackgroundFlow make_background(GridPtr grid, const ScenarioParams& params);

struct ValidationEntry {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = true;
    bool gating = true; // informational entries don't affect the report verdict
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool passed = true;
    const ValidationEntry* find(const std::string& name) const;
};

// Residual report: positivity, wall tangency, steady mass conservation,
// state-law consistency (grad p0 = c0^2 grad rho0), momentum balance defining
// phi0 -- all against `tol` -- plus non-gating discrete-vs-analytic derivative
// agreement (interior band) and the computed bounds.
ValidationReport validate_background(const BackgroundFlow& bg, const DiffOperators& op,
                                     double tol = 1e-12);

// Growth rate nu of the displacement energy estimate:
//   nu/2 = tau0^{-1} max{ 1 + tau0*max|grad u0|, tau0*max|D0 c0 / c0| }.
double growth_rate_nu(const BackgroundFlow& bg, double tau0);

// Semigroup growth bound lambda0 of the evolution operator:
//   2*lambda0 = max{0, -min_x lambda_min((B + B^T)(x)) / rho0(x)},
// where B + B^T is block-diagonal: rho0(grad u0 + grad u0^T) on the velocity
// block and -2 rho0 D0c0/c0 on the density block (the grad rho0 couplings of
// B cancel against their transposes).
double lambda0_estimate(const BackgroundFlow& bg);

} // namespace galbrun
