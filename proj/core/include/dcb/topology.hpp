#pragma once

#include <array>
#include <utility>
#include <vector>

namespace dcb {

enum class Group { A, B, C };

const char* to_string(Group g);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point& p, const Point& q);

struct Cell {
    int id;        // 1-based, cell 1 is the reference cell
    Point center;  // meters
    Group group;
};

struct Interferer {
    Point position;  // meters, absolute coordinates
    int tier;        // 1 or 2
};

// Seven-cell reuse-3 cluster: center cell on group A, ring cells alternating
// B,C,B,C,B,C. Cell centers sit on a hex lattice with spacing sqrt(3)*R; the
// co-channel lattice of each group has spacing D = 3R.
class ClusterLayout {
public:
    static ClusterLayout build(int num_cells, int reuse_factor, double cell_radius_m);

    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int id) const;
    double cell_radius() const { return cell_radius_; }
    int reuse_factor() const { return reuse_factor_; }
    double co_channel_distance() const { return co_channel_distance_; }

    bool adjacent(int a, int b) const;
    std::vector<int> neighbors(int id) const;

    // The two candidate donor sets for a reference cell: its neighbors grouped
    // by frequency group, reference cell's own group excluded. Order between
    // the sets carries no meaning; the borrowing engine ranks them by lendable
    // count at query time.
    std::vector<std::vector<int>> donor_groups(int ref_cell) const;

    // Co-channel lattice points of `group` around the victim cell, restricted
    // to rings 1..max_tier of the lattice. When `group` differs from the
    // victim's own group, the lattice is anchored at the nearest cell of that
    // group (lowest id on ties) and the anchor itself is included as a tier-1
    // entry: the victim's BS transmits the borrowed channel while the anchor
    // lattice keeps using it elsewhere.
    std::vector<Interferer> co_channel_interferers(int victim, Group group, int max_tier) const;

private:
    std::vector<Cell> cells_;
    double cell_radius_ = 0.0;
    int reuse_factor_ = 0;
    double co_channel_distance_ = 0.0;
};

} // namespace dcb
