#include "galbrun/field.hpp"

#include "galbrun/errors.hpp"
#include "galbrun/threads.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace galbrun {

ScalarField::ScalarField(GridPtr grid, double fill)
    : grid_(std::move(grid)), v_(grid_->size(), fill) {}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* where) {
    if (a.empty() || b.empty())
        throw structural_error(std::string(where) + ": empty field");
    if (a.grid_ptr() != b.grid_ptr() && !a.grid().same_as(b.grid()))
        throw structural_error(std::string(where) + ": fields live on different grids");
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    require_same_grid(*this, o, "ScalarField::operator+=");
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    require_same_grid(*this, o, "ScalarField::operator-=");
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(double a) {
    for (double& x : v_) x *= a;
    return *this;
}

ScalarField& ScalarField::axpy(double a, const ScalarField& o) {
    require_same_grid(*this, o, "ScalarField::axpy");
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += a * o.v_[k];
    return *this;
}

bool ScalarField::finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    x_ += o.x_;
    y_ += o.y_;
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
}

VectorField& VectorField::operator*=(double a) {
    x_ *= a;
    y_ *= a;
    return *this;
}

VectorField& VectorField::axpy(double a, const VectorField& o) {
    x_.axpy(a, o.x_);
    y_.axpy(a, o.y_);
    return *this;
}

bool VectorField::finite() const { return x_.finite() && y_.finite(); }

namespace {

// Row-partial reduction: each row summed sequentially, rows combined in index
// order; optional second integrand pair is added into the same row partial.
double reduce_rows(const Grid2D& g, int jlo, int jhi,
                   const std::function<double(int, int)>& term) {
    std::vector<double> partial(g.ny(), 0.0);
    parallel_rows(jhi - jlo + 1, [&](int jj) {
        const int j = jlo + jj;
        double s = 0.0;
        for (int i = 0; i < g.nx(); ++i) s += term(i, j);
        partial[j] = s * (g.qy(j) * g.dy() * g.dx());
    });
    double total = 0.0;
    for (int j = jlo; j <= jhi; ++j) total += partial[j];
    return total;
}

} // namespace

double interior_weighted_inner(const ScalarField& a, const ScalarField& b, const ScalarField& w,
                               int band) {
    require_same_grid(a, b, "weighted_inner");
    require_same_grid(a, w, "weighted_inner");
    const Grid2D& g = a.grid();
    if (band < 0 || 2 * band >= g.ny())
        throw structural_error("interior_weighted_inner: band leaves no rows");
    return reduce_rows(g, band, g.ny() - 1 - band,
                       [&](int i, int j) { return w(i, j) * (a(i, j) * b(i, j)); });
}

double weighted_inner(const ScalarField& a, const ScalarField& b, const ScalarField& w) {
    return interior_weighted_inner(a, b, w, 0);
}

double weighted_inner(const VectorField& a, const VectorField& b, const ScalarField& w) {
    require_same_grid(a.x(), b.x(), "weighted_inner");
    require_same_grid(a.x(), w, "weighted_inner");
    const Grid2D& g = w.grid();
    return reduce_rows(g, 0, g.ny() - 1, [&](int i, int j) {
        return w(i, j) * (a.x()(i, j) * b.x()(i, j) + a.y()(i, j) * b.y()(i, j));
    });
}

double inner(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "inner");
    const Grid2D& g = a.grid();
    return reduce_rows(g, 0, g.ny() - 1, [&](int i, int j) { return a(i, j) * b(i, j); });
}

double inner(const VectorField& a, const VectorField& b) {
    require_same_grid(a.x(), b.x(), "inner");
    const Grid2D& g = a.grid();
    return reduce_rows(g, 0, g.ny() - 1, [&](int i, int j) {
        return a.x()(i, j) * b.x()(i, j) + a.y()(i, j) * b.y()(i, j);
    });
}

double weighted_norm(const ScalarField& a, const ScalarField& w) {
    return std::sqrt(weighted_inner(a, a, w));
}

double weighted_norm(const VectorField& a, const ScalarField& w) {
    return std::sqrt(weighted_inner(a, a, w));
}

double norm(const ScalarField& a) { return std::sqrt(inner(a, a)); }
double norm(const VectorField& a) { return std::sqrt(inner(a, a)); }

double interior_weighted_norm(const ScalarField& a, const ScalarField& w, int band) {
    return std::sqrt(interior_weighted_inner(a, a, w, band));
}

double interior_max_norm(const ScalarField& a, int band) {
    const Grid2D& g = a.grid();
    if (band < 0 || 2 * band >= g.ny())
        throw structural_error("interior_max_norm: band leaves no rows");
    double m = 0.0;
    for (int j = band; j < g.ny() - band; ++j)
        for (int i = 0; i < g.nx(); ++i) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double interior_max_norm(const VectorField& a, int band) {
    return std::max(interior_max_norm(a.x(), band), interior_max_norm(a.y(), band));
}

double max_norm(const ScalarField& a) { return interior_max_norm(a, 0); }
double max_norm(const VectorField& a) { return interior_max_norm(a, 0); }

double boundary_inner(const ScalarField& a, const ScalarField& b, const ScalarField& w) {
    require_same_grid(a, b, "boundary_inner");
    require_same_grid(a, w, "boundary_inner");
    const Grid2D& g = a.grid();
    double total = 0.0;
    for (int j : {0, g.ny() - 1}) {
        double s = 0.0;
        for (int i = 0; i < g.nx(); ++i) s += w(i, j) * (a(i, j) * b(i, j));
        total += s * g.dx();
    }
    return total;
}

} // namespace galbrun
