#pragma once

#include <cstdint>
#include <vector>

namespace perifrac {

class Profile;

/// Binary occupancy grid over the slab: m1 cells across x1 in [-1/2, 1/2] and
/// mp cells per transverse axis over the box [-L/2, L/2]^{n-1}.
struct VoxelSet {
    int n = 3;
    int m1 = 0;
    int mp = 0;
    double L = 0.0;
    std::vector<std::uint8_t> occ;  // slice-major, transverse lexicographic

    VoxelSet(int n_, int m1_, int mp_, double L_);

    std::int64_t cells_per_slice() const;
    std::int64_t total_cells() const { return static_cast<std::int64_t>(m1) * cells_per_slice(); }
    double cell_volume() const;

    double x1_center(int i1) const { return -0.5 + (i1 + 0.5) / m1; }
    /// transverse center coordinates of lexicographic cell j (n-1 entries)
    void perp_center(std::int64_t j, double* out) const;
    double perp_dist2(std::int64_t j) const;

    std::uint8_t& at(int i1, std::int64_t j) { return occ[i1 * cells_per_slice() + j]; }
    std::uint8_t at(int i1, std::int64_t j) const { return occ[i1 * cells_per_slice() + j]; }

    std::int64_t occupied_count() const;
    double volume() const { return occupied_count() * cell_volume(); }

    /// occupied cells with at least one empty axis neighbor (x1 wraps, the
    /// transverse box boundary counts as empty)
    std::int64_t interface_count() const;
};

/// cell occupied iff its center satisfies |x'| <= f(|x1|); box must satisfy L >= 2 max f
VoxelSet voxelize(const Profile& p, int m1, int mp, double L);

/// Slice-wise symmetric-decreasing rearrangement: each slice keeps its cell
/// count, occupied cells move to the centers nearest the axis (lexicographic
/// tie-break). Idempotent and exactly volume preserving.
VoxelSet rearrange_slices(const VoxelSet& v);

}  // namespace perifrac
