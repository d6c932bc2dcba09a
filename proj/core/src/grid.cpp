#include "galbrun/grid.hpp"

#include "galbrun/errors.hpp"

#include <string>

namespace galbrun {

Grid2D::Grid2D(int nx, int ny, double lx, double ly, int order)
    : nx_(nx), ny_(ny), order_(order), lx_(lx), ly_(ly) {
    if (order != 2 && order != 4)
        throw structural_error("Grid2D: order must be 2 or 4, got " + std::to_string(order));
    if (nx < 8 || ny < 8)
        throw structural_error("Grid2D: nx and ny must be >= 8, got " + std::to_string(nx) +
                               "x" + std::to_string(ny));
    if (!(lx > 0.0) || !(ly > 0.0))
        throw structural_error("Grid2D: domain lengths must be positive");

    dx_ = lx_ / nx_;
    dy_ = ly_ / (ny_ - 1);

    // Diagonal SBP norm of the y-difference operator. The boundary weights sum
    // to (closure_rows - 1/2) per wall, so sum qy = ny - 1 and the discrete
    // measure sum qy*dy equals Ly exactly.
    qy_.assign(ny_, 1.0);
    if (order_ == 2) {
        qy_[0] = qy_[ny_ - 1] = 0.5;
    } else {
        const double w[4] = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};
        for (int k = 0; k < 4; ++k) {
            qy_[k] = w[k];
            qy_[ny_ - 1 - k] = w[k];
        }
    }
}

bool Grid2D::same_as(const Grid2D& other) const {
    return nx_ == other.nx_ && ny_ == other.ny_ && lx_ == other.lx_ && ly_ == other.ly_ &&
           order_ == other.order_;
}

GridPtr make_grid(int nx, int ny, double lx, double ly, int order) {
    return std::make_shared<const Grid2D>(nx, ny, lx, ly, order);
}

} // namespace galbrun
