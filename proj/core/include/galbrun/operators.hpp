#pragma once

#include "galbrun/field.hpp"

#include <utility>

namespace galbrun {

// 2x2 tensor field, component (r,c) = d(vector_r)/d(x_c).
struct TensorField {
    ScalarField xx, xy, yx, yy;
    TensorField() = default;
    explicit TensorField(GridPtr grid)
        : xx(grid), xy(grid), yx(grid), yy(grid) {}
};

// First-derivative operators of interior order p (2 or 4): centered periodic
// differences in x, diagonal-norm SBP in y with one-sided closures of order
// p/2. The y operator D = H^{-1}Q satisfies Q + Q^T = diag(-1,0,...,0,1)
// exactly (in floating point), so summation-by-parts holds per column.
class DiffOperators {
public:
    explicit DiffOperators(GridPtr grid);

    const Grid2D& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    int order() const { return grid_->order(); }

    ScalarField apply_dx(const ScalarField& f) const;
    ScalarField apply_dy(const ScalarField& f) const;

    VectorField gradient(const ScalarField& s) const;
    ScalarField divergence(const VectorField& v) const;

    // (u0 . grad) f, componentwise for vector f.
    ScalarField convective(const VectorField& u0, const ScalarField& f) const;
    VectorField convective(const VectorField& u0, const VectorField& f) const;

    // Lie derivative L_u0 w = (u0 . grad) w - (grad u0) w; the Jacobian of u0
    // is supplied analytically (convention: grad_u0(r,c) = d u0_r / d x_c).
    VectorField lie(const VectorField& u0, const TensorField& grad_u0,
                    const VectorField& w) const;

private:
    GridPtr grid_;
};

// Residual of the discrete integration-by-parts identity
//   (rho0 (u0.grad)p, p) = 1/2 d/dt(...) + 1/2 (rho0 (n.u0) p, p)_boundary
// for a time-independent p: returns |(rho0 (u0.grad)p, p) - 1/2 boundary|.
// Exactly antisymmetric in x for x-independent rho0*u0x, so the value is at
// roundoff level for the shipped scenario class.
double check_ibp(const DiffOperators& op, const ScalarField& rho0, const VectorField& u0,
                 const ScalarField& p);

// Max-norm residuals (over the closure-safe interior band) of
//   div(L_u v) - (u.grad)(div v) + (v.grad)(div u)        [divergence of Lie]
//   L_u(s v) - v (u.grad)s - s L_u v                      [product rule]
// with the Jacobians of the analytic test fields supplied exactly.
std::pair<double, double> check_lie_identities(const DiffOperators& op, const VectorField& u,
                                               const TensorField& grad_u, const VectorField& v,
                                               const TensorField& grad_v, const ScalarField& s);

// Diagnostic row bands polluted by the one-sided closures: `first` for single
// derivative applications, `composed` for derivative-of-derivative quantities
// (where the closure error no longer vanishes with dy).
int closure_band_first(const Grid2D& g);
int closure_band_composed(const Grid2D& g);

} // namespace galbrun
