#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frostman/geometry.hpp"

namespace frostman {

// Sticks are the building block: the delta-squares covering a segment of
// length l = delta^(1 - t/2). A stick with direction phi_0 projects into a
// ~delta interval for every direction within delta^(t/2) of phi_0.
struct Stick {
    std::int64_t id = 0;
    std::int64_t dir_index = 0;
    Segment segment;
    std::int64_t disc_id = -1;   // -1 when placed without disc scaffolding
    Vec2 anchor;                 // boundary anchor b_i (high regime only)
    std::uint64_t square_count = 0;

    std::vector<DyadicSquare> squares(Scale scale) const { return supercover(segment, scale); }
};

struct DiscLayout {
    std::vector<Vec2> centers;   // row-major lattice order
    double radius = 0.0;         // R = 10 * delta^(1 - t/2)
    double spacing = 0.0;        // s = 21 * delta^(1 - t/2)
    bool clamped = false;        // single disc clamped to fit the unit square
};

enum class Regime { low, high };

// How the sticks were laid out. disc_low / disc_high follow the disc
// scaffolding; lattice_low and clamped_high are the desk-scale realisations
// used when the disc lattice does not fit the unit square at the given delta.
enum class LayoutMode { disc_low, lattice_low, disc_high, clamped_high };

struct BuildOptions {
    // Above this many covered squares the pset is not materialised; counting
    // queries run against the sticks directly.
    std::uint64_t materialize_cap = 4'000'000;
    // Refuse builds whose stick list itself would not fit in memory.
    std::uint64_t max_sticks = 20'000'000;
};

struct Arrangement {
    double t = 1.0;
    Scale scale;
    Regime regime = Regime::low;
    LayoutMode mode = LayoutMode::lattice_low;

    std::vector<Direction> directions;  // the net, phi_i = (i + 1/2) * pi / m
    std::vector<Stick> sticks;          // stick id == dir_index
    DiscLayout discs;

    bool materialized = false;
    std::vector<DyadicSquare> pset;        // sorted, deduplicated (materialized only)
    std::vector<std::uint8_t> multiplicity;  // parallel to pset
    std::uint64_t pset_size = 0;             // exact in both modes

    // Prefix sums of per-stick cover counts (index i holds the total over
    // sticks [0, i)); used by the implicit counting paths.
    std::vector<std::uint64_t> count_prefix;

    double stick_length() const;  // delta^(1 - t/2)
    int max_multiplicity() const;
};

// m = ceil(pi * delta^(-t/2)) directions (i + 1/2) * pi / m. Consecutive
// spacing pi/m <= delta^(t/2), so the delta^(t/2)-neighbourhoods of the net
// cover [0, pi).
std::vector<Direction> direction_net(Scale scale, double t);

// Exact m without building the net.
std::uint64_t direction_net_size(Scale scale, double t);

// Lattice of discs with radius 10*l and spacing 21*l inside [R, 1-R]^2,
// centered, row-major. Throws ScaleTooCoarse when 21*l > 1 (message names the
// minimal usable k).
DiscLayout build_discs(Scale scale, double t);

// One stick per site, pairwise disjoint covers. Uses the disc sub-lattice
// when m <= n, otherwise a direct site lattice of spacing
// max(l + 4*delta, 0.5/sqrt(m)). Throws RegimeMismatch when m sticks do not
// fit disjointly.
Arrangement arrange_low(Scale scale, double t, const BuildOptions& opt = {});

// Cartwheels: sticks anchored on disc boundaries along their own direction
// ray, stride partition Theta_j = {phi_i : i = j mod n}. Falls back to a
// single clamped disc when the 21*l lattice does not fit. Throws
// RegimeMismatch when even one clamped cartwheel cannot hold the sticks
// (l > R/2).
Arrangement arrange_high(Scale scale, double t, const BuildOptions& opt = {});

// Dispatch: disc-backed low when m <= n, else the low lattice when it fits m
// disjoint sites, else the high (cartwheel) construction.
Arrangement build_arrangement(Scale scale, double t, const BuildOptions& opt = {});

// Line-oriented text format, 17 significant digits. Implicit arrangements
// emit the header and sticks with `pset implicit <size>` in place of the
// square list.
std::string serialize_arrangement(const Arrangement& arr);
Arrangement parse_arrangement(const std::string& text, const BuildOptions& opt = {});

constexpr int kOverlapCap = 8;          // asserted max multiplicity
constexpr double kPsetEnvelopeLo = 0.1;  // |pset| * delta^t envelope
constexpr double kPsetEnvelopeHi = 50.0;

}  // namespace frostman
