#pragma once

#include <vector>

#include "lsnn/network.hpp"

namespace lsnn {

enum class Side { Left, Right };

/// (a, b) x (0, T) with the spatial sides on which inflow data is imposed.
struct SpaceTimeDomain {
    double a = 0.0;
    double b = 1.0;
    double T = 1.0;
    std::vector<Side> inflow_sides;

    void validate() const;
};

/// Time slab (a, b) x (t0, t1); index is 1-based.
struct Block {
    int index = 1;
    double a = 0.0;
    double b = 1.0;
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<Side> inflow_sides;
};

std::vector<Block> make_blocks(const SpaceTimeDomain& domain, int m0);

struct Edge {
    Point midpoint;
    double measure = 0.0;
    Side side = Side::Left;  // meaningful for inflow edges only
};

/// Uniform midpoint-rule mesh over one block. Cells are stored row-major
/// (time rows, then x), cell (r, j) at cells[r * nx + j].
struct BlockMesh {
    Block block;
    double h = 0.0;
    double tau = 0.0;
    int nx = 0;
    int nt = 0;
    std::vector<Point> cells;
    std::vector<Edge> inflow_edges;     // per inflow side, one per time row
    std::vector<Edge> interface_edges;  // bottom edge t = t0, one per column

    double cell_measure() const { return h * tau; }
    double cell_x(int j) const { return block.a + (j + 0.5) * h; }
    double row_t(int r) const { return block.t0 + (r + 0.5) * tau; }
};

/// tau defaults to h. Both extents must be integer multiples of the steps to 1e-9.
BlockMesh build_block_mesh(const Block& block, double h, double tau = 0.0);

}  // namespace lsnn
