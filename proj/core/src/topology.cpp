#include "dcb/topology.hpp"

#include "dcb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace dcb {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kGeomEps = 1e-6; // meters
} // namespace

const char* to_string(Group g) {
    switch (g) {
    case Group::A: return "A";
    case Group::B: return "B";
    case Group::C: return "C";
    }
    return "?";
}

double distance(const Point& p, const Point& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

ClusterLayout ClusterLayout::build(int num_cells, int reuse_factor, double cell_radius_m) {
    if (num_cells != 7)
        throw ConfigError("unsupported cluster size " + std::to_string(num_cells) + " (only 7 supported)");
    if (reuse_factor != 3)
        throw ConfigError("unsupported reuse factor " + std::to_string(reuse_factor) + " (only 3 supported)");
    if (!(cell_radius_m > 0.0))
        throw ConfigError("cell radius must be positive");

    ClusterLayout layout;
    layout.cell_radius_ = cell_radius_m;
    layout.reuse_factor_ = reuse_factor;
    layout.co_channel_distance_ = cell_radius_m * std::sqrt(3.0 * reuse_factor);

    const double spacing = std::sqrt(3.0) * cell_radius_m;
    layout.cells_.push_back({1, {0.0, 0.0}, Group::A});
    for (int k = 2; k <= 7; ++k) {
        const double angle = (k - 2) * kPi / 3.0;
        const Group g = (k % 2 == 0) ? Group::B : Group::C;
        layout.cells_.push_back({k, {spacing * std::cos(angle), spacing * std::sin(angle)}, g});
    }
    return layout;
}

const Cell& ClusterLayout::cell(int id) const {
    for (const Cell& c : cells_)
        if (c.id == id)
            return c;
    throw DomainError("no cell with id " + std::to_string(id));
}

bool ClusterLayout::adjacent(int a, int b) const {
    if (a == b)
        return false;
    const double spacing = std::sqrt(3.0) * cell_radius_;
    return std::abs(distance(cell(a).center, cell(b).center) - spacing) < kGeomEps;
}

std::vector<int> ClusterLayout::neighbors(int id) const {
    std::vector<int> out;
    for (const Cell& c : cells_)
        if (adjacent(id, c.id))
            out.push_back(c.id);
    return out;
}

std::vector<std::vector<int>> ClusterLayout::donor_groups(int ref_cell) const {
    const Group own = cell(ref_cell).group;
    std::map<Group, std::vector<int>> by_group;
    for (int n : neighbors(ref_cell)) {
        const Group g = cell(n).group;
        if (g != own)
            by_group[g].push_back(n);
    }
    std::vector<std::vector<int>> out;
    for (auto& [g, members] : by_group) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<Interferer> ClusterLayout::co_channel_interferers(int victim, Group group, int max_tier) const {
    if (max_tier < 1 || max_tier > 2)
        throw ConfigError("max_tier must be 1 or 2, got " + std::to_string(max_tier));

    const Cell& v = cell(victim);

    // Anchor of the group's lattice: the victim itself when it owns the group,
    // otherwise the nearest cell of that group (lowest id on ties).
    Point anchor = v.center;
    bool cross_group = (group != v.group);
    if (cross_group) {
        double best = std::numeric_limits<double>::infinity();
        int best_id = -1;
        for (const Cell& c : cells_) {
            if (c.group != group)
                continue;
            const double d = distance(c.center, v.center);
            if (d < best - kGeomEps || (d < best + kGeomEps && c.id < best_id)) {
                best = d;
                best_id = c.id;
            }
        }
        if (best_id < 0)
            throw DomainError("no cell of the requested group in the layout");
        anchor = cell(best_id).center;
    }

    // Co-channel lattice for reuse 3: triangular lattice of spacing D rotated
    // 30 degrees from the cell lattice axes.
    const double d_cc = co_channel_distance_;
    const Point u{d_cc * std::cos(kPi / 6.0), d_cc * std::sin(kPi / 6.0)};
    const Point w{0.0, d_cc};

    std::vector<Interferer> out;
    if (cross_group)
        out.push_back({anchor, 1});
    for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
            if (i == 0 && j == 0)
                continue;
            const Point p{anchor.x + i * u.x + j * w.x, anchor.y + i * u.y + j * w.y};
            const double d = distance(p, anchor);
            int tier;
            if (d <= d_cc + kGeomEps)
                tier = 1;
            else if (d <= 2.0 * d_cc + kGeomEps)
                tier = 2;
            else
                continue;
            if (tier <= max_tier)
                out.push_back({p, tier});
        }
    }
    return out;
}

} // namespace dcb
