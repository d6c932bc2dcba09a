#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace galbrun {

// Tensor-product grid on [0,Lx) x [0,Ly]: periodic in x, wall-bounded in y.
// x nodes: x_i = i*dx, i = 0..nx-1, dx = Lx/nx (node nx wraps to node 0).
// y nodes: y_j = j*dy, j = 0..ny-1, dy = Ly/(ny-1); j = 0 and j = ny-1 are
// the wall lines with outward normals (0,-1) and (0,+1).
//
// qy() holds the SBP norm weights of the y-difference operator (order-dependent);
// sum_j qy[j]*dy == Ly exactly, so the discrete measure matches the domain.
class Grid2D {
public:
    Grid2D(int nx, int ny, double lx, double ly, int order);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double lx() const { return lx_; }
    double ly() const { return ly_; }
    int order() const { return order_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }

    double x(int i) const { return dx_ * i; }
    double y(int j) const { return dy_ * j; }

    // Row-major storage with x fastest: value index of node (i,j).
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }
    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }

    // SBP norm weight of y-row j (dimensionless; multiply by dy for measure).
    double qy(int j) const { return qy_[j]; }
    const std::vector<double>& qy() const { return qy_; }

    // Number of one-sided closure rows of the y-difference operator per wall
    // (1 for order 2, 4 for order 4).
    int closure_rows() const { return order_ == 2 ? 1 : 4; }

    bool same_as(const Grid2D& other) const;

private:
    int nx_, ny_, order_;
    double lx_, ly_, dx_, dy_;
    std::vector<double> qy_;
};

using GridPtr = std::shared_ptr<const Grid2D>;

GridPtr make_grid(int nx, int ny, double lx, double ly, int order = 2);

} // namespace galbrun
