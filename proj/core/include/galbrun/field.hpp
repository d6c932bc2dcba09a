#pragma once

#include "galbrun/grid.hpp"

#include <vector>

namespace galbrun {

// Scalar nodal field. Value-semantic: copies carry their own storage and a
// shared handle to the (immutable) grid, so fields move freely across threads.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(GridPtr grid, double fill = 0.0);

    const Grid2D& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    bool empty() const { return !grid_; }

    double& operator()(int i, int j) { return v_[grid_->idx(i, j)]; }
    double operator()(int i, int j) const { return v_[grid_->idx(i, j)]; }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double a);
    // this += a*o, the workhorse of the RK stages.
    ScalarField& axpy(double a, const ScalarField& o);

    bool finite() const;

private:
    GridPtr grid_;
    std::vector<double> v_;
};

// Two-component vector field stored as separate scalar components.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(GridPtr grid, double fill = 0.0) : x_(grid, fill), y_(grid, fill) {}

    const Grid2D& grid() const { return x_.grid(); }
    const GridPtr& grid_ptr() const { return x_.grid_ptr(); }
    bool empty() const { return x_.empty(); }

    ScalarField& x() { return x_; }
    const ScalarField& x() const { return x_; }
    ScalarField& y() { return y_; }
    const ScalarField& y() const { return y_; }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(double a);
    VectorField& axpy(double a, const VectorField& o);

    bool finite() const;

private:
    ScalarField x_, y_;
};

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* where);

// Discrete inner products over the full domain with measure dx * qy(j)*dy.
// Summation order is fixed: within a row by increasing i, rows combined in
// increasing j (per-row partials, so parallel evaluation is byte-identical).
// The integrand is formed as w*(a*b), which makes the result exactly
// symmetric in (a, b).
double weighted_inner(const ScalarField& a, const ScalarField& b, const ScalarField& w);
double weighted_inner(const VectorField& a, const VectorField& b, const ScalarField& w);
// Unweighted (w == 1) variants.
double inner(const ScalarField& a, const ScalarField& b);
double inner(const VectorField& a, const VectorField& b);

double weighted_norm(const ScalarField& a, const ScalarField& w);
double weighted_norm(const VectorField& a, const ScalarField& w);
double norm(const ScalarField& a);
double norm(const VectorField& a);

// Same inner products restricted to rows j in [band, ny-1-band]; used for the
// wall-excluded diagnostic norms.
double interior_weighted_inner(const ScalarField& a, const ScalarField& b, const ScalarField& w,
                               int band);
double interior_weighted_norm(const ScalarField& a, const ScalarField& w, int band);
double interior_max_norm(const ScalarField& a, int band);
double interior_max_norm(const VectorField& a, int band);
double max_norm(const ScalarField& a);
double max_norm(const VectorField& a);

// Integral of w*a*b over the two wall lines (periodic trapezoid in x, which
// on a uniform periodic grid is dx * plain sum).
double boundary_inner(const ScalarField& a, const ScalarField& b, const ScalarField& w);

} // namespace galbrun
