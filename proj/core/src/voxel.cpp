#include "perifrac/voxel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "perifrac/profile.hpp"

namespace perifrac {

VoxelSet::VoxelSet(int n_, int m1_, int mp_, double L_) : n(n_), m1(m1_), mp(mp_), L(L_) {
    if (n < 2) throw std::invalid_argument("VoxelSet: n must be >= 2");
    if (m1 <= 0 || mp <= 0) throw std::invalid_argument("VoxelSet: grid dimensions must be > 0");
    if (!(L > 0.0)) throw std::invalid_argument("VoxelSet: box side must be > 0");
    occ.assign(total_cells(), 0);
}

std::int64_t VoxelSet::cells_per_slice() const {
    std::int64_t c = 1;
    for (int k = 0; k < n - 1; ++k) c *= mp;
    return c;
}

double VoxelSet::cell_volume() const {
    return (1.0 / m1) * std::pow(L / mp, n - 1);
}

void VoxelSet::perp_center(std::int64_t j, double* out) const {
    for (int k = n - 2; k >= 0; --k) {
        const int idx = static_cast<int>(j % mp);
        out[k] = -0.5 * L + (idx + 0.5) * (L / mp);
        j /= mp;
    }
}

double VoxelSet::perp_dist2(std::int64_t j) const {
    double c[8];
    perp_center(j, c);
    double d2 = 0.0;
    for (int k = 0; k < n - 1; ++k) d2 += c[k] * c[k];
    return d2;
}

std::int64_t VoxelSet::occupied_count() const {
    return std::accumulate(occ.begin(), occ.end(), std::int64_t{0},
                           [](std::int64_t a, std::uint8_t b) { return a + b; });
}

std::int64_t VoxelSet::interface_count() const {
    const std::int64_t cps = cells_per_slice();
    std::int64_t count = 0;
    std::vector<std::int64_t> stride(n - 1);
    stride[n - 2] = 1;
    for (int k = n - 3; k >= 0; --k) stride[k] = stride[k + 1] * mp;
    for (int i1 = 0; i1 < m1; ++i1) {
        for (std::int64_t j = 0; j < cps; ++j) {
            if (!at(i1, j)) continue;
            bool boundary = false;
            // periodic x1 neighbors
            if (!at((i1 + 1) % m1, j) || !at((i1 + m1 - 1) % m1, j)) boundary = true;
            // transverse neighbors, box boundary counts as empty
            std::int64_t rem = j;
            for (int k = 0; k < n - 1 && !boundary; ++k) {
                const int idx = static_cast<int>((j / stride[k]) % mp);
                if (idx == 0 || !at(i1, j - stride[k])) boundary = true;
                else if (idx == mp - 1 || !at(i1, j + stride[k])) boundary = true;
            }
            (void)rem;
            if (boundary) ++count;
        }
    }
    return count;
}

VoxelSet voxelize(const Profile& p, int m1, int mp, double L) {
    if (L < 2.0 * p.max_value())
        throw std::invalid_argument("voxelize: box side must satisfy L >= 2 max f");
    VoxelSet v(p.n(), m1, mp, L);
    const std::int64_t cps = v.cells_per_slice();
    std::vector<double> r(cps);
    for (std::int64_t j = 0; j < cps; ++j) r[j] = std::sqrt(v.perp_dist2(j));
    for (int i1 = 0; i1 < m1; ++i1) {
        const double f = p.radius_at(v.x1_center(i1));
        for (std::int64_t j = 0; j < cps; ++j) v.at(i1, j) = r[j] <= f ? 1 : 0;
    }
    return v;
}

VoxelSet rearrange_slices(const VoxelSet& v) {
    const std::int64_t cps = v.cells_per_slice();
    // order cells by distance to the axis, ties by lexicographic index
    std::vector<std::int64_t> order(cps);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> d2(cps);
    for (std::int64_t j = 0; j < cps; ++j) d2[j] = v.perp_dist2(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::int64_t a, std::int64_t b) { return d2[a] < d2[b]; });
    VoxelSet out(v.n, v.m1, v.mp, v.L);
    for (int i1 = 0; i1 < v.m1; ++i1) {
        std::int64_t cnt = 0;
        for (std::int64_t j = 0; j < cps; ++j) cnt += v.at(i1, j);
        for (std::int64_t k = 0; k < cnt; ++k) out.at(i1, order[k]) = 1;
    }
    return out;
}

}  // namespace perifrac
