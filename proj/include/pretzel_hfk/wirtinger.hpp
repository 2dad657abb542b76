// Wirtinger presentation of the standard three-band pretzel projection.
#pragma once

#include "pretzel_hfk/pretzel.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace pretzel_hfk {

/// Generator symbol raised to +1 or -1.
struct Letter {
    int generator = 0;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct WirtingerPresentation {
    int generator_count = 0;
    std::vector<Word> relators;

    /// Row r, column g: total exponent of generator g in relator r.
    std::vector<std::vector<int>> exponent_matrix() const {
        std::vector<std::vector<int>> m(relators.size(), std::vector<int>(generator_count, 0));
        for (std::size_t r = 0; r < relators.size(); ++r)
            for (const Letter& l : relators[r]) m[r][l.generator] += l.exponent;
        return m;
    }
};

/// One pass of the oriented knot through a crossing.
struct CrossingPassage {
    int crossing = 0;
    bool over = false;
    std::array<int, 2> direction{};  // (dx, dy) in the plane, y pointing up
};

/// Per-crossing data extracted from the traced diagram.
struct CrossingData {
    int over_arc = 0;
    int under_in = 0;
    int under_out = 0;
    int sign = 0;  // +1 right-handed, -1 left-handed
};

namespace detail {

// Band k carries |p_k| crossings stacked top to bottom; between consecutive
// crossings (and at the band ends) each band has a left and a right strand
// position. Crossing numbers run band by band, top to bottom.
struct PretzelDiagram {
    std::array<int, 3> twists{};
    std::array<int, 3> first_crossing{};
    int crossing_count = 0;

    explicit PretzelDiagram(const PretzelParams& p) : twists(p.twists) {
        for (int k = 0; k < 3; ++k) {
            first_crossing[k] = crossing_count;
            crossing_count += std::abs(twists[k]);
        }
    }

    // Walks the closed curve once, starting at the top-left end of band 0
    // heading down, and records every crossing passage in order.
    std::vector<CrossingPassage> trace() const {
        enum Side { kLeft = 0, kRight = 1 };
        std::vector<CrossingPassage> passages;
        int band = 0;
        int level = 0;
        int side = kLeft;
        bool down = true;
        const int limit = 4 * crossing_count + 12;
        for (int step = 0; step < limit; ++step) {
            const int n = std::abs(twists[band]);
            if (down && level < n) {
                // Strand from the top-left to the bottom-right is over for positive twists.
                const bool tl_br = side == kLeft;
                passages.push_back({first_crossing[band] + level, tl_br == (twists[band] > 0),
                                    {side == kLeft ? 1 : -1, -1}});
                ++level;
                side = 1 - side;
            } else if (!down && level > 0) {
                const int top_side = 1 - side;
                const bool tl_br = top_side == kLeft;
                passages.push_back({first_crossing[band] + level - 1, tl_br == (twists[band] > 0),
                                    {side == kLeft ? 1 : -1, 1}});
                --level;
                side = top_side;
            } else {
                // At a band end: the right end of band k joins the left end of band k+1
                // (cyclically), on top and on the bottom alike.
                const bool at_top = level == 0;
                if (side == kRight) {
                    band = (band + 1) % 3;
                    side = kLeft;
                } else {
                    band = (band + 2) % 3;
                    side = kRight;
                }
                level = at_top ? 0 : std::abs(twists[band]);
                down = at_top;
            }
            if (band == 0 && level == 0 && side == kLeft && down && !passages.empty()) break;
        }
        if (static_cast<int>(passages.size()) != 2 * crossing_count)
            throw std::invalid_argument("pretzel diagram does not close up into a single knot");
        return passages;
    }
};

}  // namespace detail

/// Crossing table with arcs labeled by the crossing at which they emerge
/// from an under-pass.
inline std::vector<CrossingData> crossing_data(const PretzelParams& params) {
    if (!params.is_valid_knot()) throw std::invalid_argument("wirtinger: parameters do not describe a knot");
    const detail::PretzelDiagram diagram(params);
    const auto passages = diagram.trace();
    const int n = diagram.crossing_count;
    const int len = static_cast<int>(passages.size());

    int last_under = -1;
    for (int q = len - 1; q >= 0 && last_under < 0; --q)
        if (!passages[q].over) last_under = passages[q].crossing;

    std::vector<CrossingData> data(n);
    std::vector<std::array<int, 2>> over_dir(n), under_dir(n);
    std::vector<int> visits(n, 0);
    int current_arc = last_under;
    for (const CrossingPassage& pass : passages) {
        CrossingData& d = data[pass.crossing];
        ++visits[pass.crossing];
        if (pass.over) {
            d.over_arc = current_arc;
            over_dir[pass.crossing] = pass.direction;
        } else {
            d.under_in = current_arc;
            d.under_out = pass.crossing;
            under_dir[pass.crossing] = pass.direction;
            current_arc = pass.crossing;
        }
    }
    for (int c = 0; c < n; ++c) {
        if (visits[c] != 2) throw std::logic_error("wirtinger: crossing not visited exactly twice");
        const auto& o = over_dir[c];
        const auto& u = under_dir[c];
        const int cross = o[0] * u[1] - o[1] * u[0];
        data[c].sign = cross > 0 ? 1 : -1;
    }
    return data;
}

/// One generator per arc and one relator x_over^e x_in x_over^-e x_out^-1
/// per crossing of sign e.
inline WirtingerPresentation wirtinger(const PretzelParams& params) {
    const auto data = crossing_data(params);
    WirtingerPresentation pres;
    pres.generator_count = static_cast<int>(data.size());
    pres.relators.reserve(data.size());
    for (const CrossingData& d : data) {
        pres.relators.push_back({{d.over_arc, d.sign}, {d.under_in, 1}, {d.over_arc, -d.sign}, {d.under_out, -1}});
    }
    return pres;
}

}  // namespace pretzel_hfk
