#include "galbrun/operators.hpp"

#include "galbrun/errors.hpp"
#include "galbrun/threads.hpp"

#include <cmath>

namespace galbrun {

DiffOperators::DiffOperators(GridPtr grid) : grid_(std::move(grid)) {
    if (!grid_) throw structural_error("DiffOperators: null grid");
    if (grid_->order() == 4 && grid_->ny() < 8)
        throw structural_error("DiffOperators: order 4 needs ny >= 8");
}

ScalarField DiffOperators::apply_dx(const ScalarField& f) const {
    require_same_grid(f, f, "apply_dx");
    if (!f.grid().same_as(*grid_)) throw structural_error("apply_dx: wrong grid");
    const Grid2D& g = *grid_;
    const int nx = g.nx();
    ScalarField out(f.grid_ptr());
    // Paired differences so x-constant rows map to exactly zero.
    if (g.order() == 2) {
        const double c = 0.5 / g.dx();
        parallel_rows(g.ny(), [&](int j) {
            for (int i = 0; i < nx; ++i) {
                const int ip = (i + 1 == nx) ? 0 : i + 1;
                const int im = (i == 0) ? nx - 1 : i - 1;
                out(i, j) = (f(ip, j) - f(im, j)) * c;
            }
        });
    } else {
        const double c = 1.0 / (12.0 * g.dx());
        parallel_rows(g.ny(), [&](int j) {
            for (int i = 0; i < nx; ++i) {
                const int ip1 = (i + 1) % nx, ip2 = (i + 2) % nx;
                const int im1 = (i + nx - 1) % nx, im2 = (i + nx - 2) % nx;
                out(i, j) = ((f(im2, j) - f(ip2, j)) + 8.0 * (f(ip1, j) - f(im1, j))) * c;
            }
        });
    }
    return out;
}

namespace {

// Order-4 SBP boundary closure (4 rows x 6 columns), applied mirrored with
// opposite sign at the far wall.
const double kClosure4[4][6] = {
    {-24.0 / 17.0, 59.0 / 34.0, -4.0 / 17.0, -3.0 / 34.0, 0.0, 0.0},
    {-0.5, 0.0, 0.5, 0.0, 0.0, 0.0},
    {4.0 / 43.0, -59.0 / 86.0, 0.0, 59.0 / 86.0, -4.0 / 43.0, 0.0},
    {3.0 / 98.0, 0.0, -59.0 / 98.0, 0.0, 32.0 / 49.0, -4.0 / 49.0},
};

} // namespace

ScalarField DiffOperators::apply_dy(const ScalarField& f) const {
    if (!f.grid().same_as(*grid_)) throw structural_error("apply_dy: wrong grid");
    const Grid2D& g = *grid_;
    const int nx = g.nx(), ny = g.ny();
    const double inv_dy = 1.0 / g.dy();
    ScalarField out(f.grid_ptr());
    if (g.order() == 2) {
        parallel_rows(ny, [&](int j) {
            if (j == 0) {
                for (int i = 0; i < nx; ++i) out(i, 0) = (f(i, 1) - f(i, 0)) * inv_dy;
            } else if (j == ny - 1) {
                for (int i = 0; i < nx; ++i)
                    out(i, ny - 1) = (f(i, ny - 1) - f(i, ny - 2)) * inv_dy;
            } else {
                const double c = 0.5 * inv_dy;
                for (int i = 0; i < nx; ++i) out(i, j) = (f(i, j + 1) - f(i, j - 1)) * c;
            }
        });
    } else {
        parallel_rows(ny, [&](int j) {
            if (j < 4) {
                for (int i = 0; i < nx; ++i) {
                    double s = 0.0;
                    for (int c = 0; c < 6; ++c) s += kClosure4[j][c] * f(i, c);
                    out(i, j) = s * inv_dy;
                }
            } else if (j >= ny - 4) {
                const int r = ny - 1 - j;
                for (int i = 0; i < nx; ++i) {
                    double s = 0.0;
                    for (int c = 0; c < 6; ++c) s -= kClosure4[r][c] * f(i, ny - 1 - c);
                    out(i, j) = s * inv_dy;
                }
            } else {
                const double c = inv_dy / 12.0;
                for (int i = 0; i < nx; ++i)
                    out(i, j) =
                        ((f(i, j - 2) - f(i, j + 2)) + 8.0 * (f(i, j + 1) - f(i, j - 1))) * c;
            }
        });
    }
    return out;
}

VectorField DiffOperators::gradient(const ScalarField& s) const {
    VectorField out(s.grid_ptr());
    out.x() = apply_dx(s);
    out.y() = apply_dy(s);
    return out;
}

ScalarField DiffOperators::divergence(const VectorField& v) const {
    ScalarField out = apply_dx(v.x());
    out += apply_dy(v.y());
    return out;
}

ScalarField DiffOperators::convective(const VectorField& u0, const ScalarField& f) const {
    ScalarField fx = apply_dx(f), fy = apply_dy(f);
    ScalarField out(f.grid_ptr());
    const Grid2D& g = *grid_;
    parallel_rows(g.ny(), [&](int j) {
        for (int i = 0; i < g.nx(); ++i)
            out(i, j) = u0.x()(i, j) * fx(i, j) + u0.y()(i, j) * fy(i, j);
    });
    return out;
}

VectorField DiffOperators::convective(const VectorField& u0, const VectorField& f) const {
    VectorField out(f.grid_ptr());
    out.x() = convective(u0, f.x());
    out.y() = convective(u0, f.y());
    return out;
}

VectorField DiffOperators::lie(const VectorField& u0, const TensorField& grad_u0,
                               const VectorField& w) const {
    VectorField out = convective(u0, w);
    const Grid2D& g = *grid_;
    parallel_rows(g.ny(), [&](int j) {
        for (int i = 0; i < g.nx(); ++i) {
            out.x()(i, j) -= grad_u0.xx(i, j) * w.x()(i, j) + grad_u0.xy(i, j) * w.y()(i, j);
            out.y()(i, j) -= grad_u0.yx(i, j) * w.x()(i, j) + grad_u0.yy(i, j) * w.y()(i, j);
        }
    });
    return out;
}

double check_ibp(const DiffOperators& op, const ScalarField& rho0, const VectorField& u0,
                 const ScalarField& p) {
    const ScalarField conv = op.convective(u0, p);
    const double volume = weighted_inner(conv, p, rho0);
    const Grid2D& g = op.grid();
    double boundary = 0.0;
    for (int j : {0, g.ny() - 1}) {
        const double nsign = (j == 0) ? -1.0 : 1.0; // n.u0 = nsign * u0_y
        double s = 0.0;
        for (int i = 0; i < g.nx(); ++i)
            s += rho0(i, j) * (nsign * u0.y()(i, j)) * (p(i, j) * p(i, j));
        boundary += s * g.dx();
    }
    return std::abs(volume - 0.5 * boundary);
}

std::pair<double, double> check_lie_identities(const DiffOperators& op, const VectorField& u,
                                               const TensorField& grad_u, const VectorField& v,
                                               const TensorField& grad_v, const ScalarField& s) {
    const Grid2D& g = op.grid();
    const GridPtr gp = s.grid_ptr();

    // Identity 1: div(L_u v) = (u.grad)(div v) - (v.grad)(div u).
    const VectorField luv = op.lie(u, grad_u, v);
    ScalarField r1 = op.divergence(luv);
    r1 -= op.convective(u, op.divergence(v));
    r1 += op.convective(v, op.divergence(u));

    // Identity 2: L_u(s v) = v (u.grad)s + s L_u v.
    VectorField sv(gp);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            sv.x()(i, j) = s(i, j) * v.x()(i, j);
            sv.y()(i, j) = s(i, j) * v.y()(i, j);
        }
    const VectorField lhs = op.lie(u, grad_u, sv);
    const ScalarField lus = op.convective(u, s);
    VectorField r2(gp);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            r2.x()(i, j) = lhs.x()(i, j) - v.x()(i, j) * lus(i, j) - s(i, j) * luv.x()(i, j);
            r2.y()(i, j) = lhs.y()(i, j) - v.y()(i, j) * lus(i, j) - s(i, j) * luv.y()(i, j);
        }

    return {interior_max_norm(r1, closure_band_composed(g)),
            interior_max_norm(r2, closure_band_first(g))};
}

int closure_band_first(const Grid2D& g) { return g.closure_rows(); }

int closure_band_composed(const Grid2D& g) {
    // One-sided closure rows plus the interior half-stencil that reads them.
    return g.closure_rows() + g.order() / 2;
}

} // namespace galbrun
