// Three-strand pretzel knots: parameter validation, classification into the
// families with closed-form knot Floer homology, and diagram bookkeeping.
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pretzel_hfk {

/// Signed twist counts of the three bands; the sign is the band's handedness.
struct PretzelParams {
    std::array<int, 3> twists{};

    PretzelParams() = default;
    PretzelParams(int p1, int p2, int p3) : twists{p1, p2, p3} {}

    int operator[](std::size_t i) const { return twists[i]; }
    int even_band_count() const {
        return static_cast<int>(std::count_if(twists.begin(), twists.end(), [](int p) { return p % 2 == 0; }));
    }
    bool has_zero_band() const { return std::find(twists.begin(), twists.end(), 0) != twists.end(); }
    /// Knot (single component) with no degenerate band.
    bool is_valid_knot() const { return !has_zero_band() && even_band_count() <= 1; }
    PretzelParams negated() const { return {-twists[0], -twists[1], -twists[2]}; }

    friend bool operator==(const PretzelParams&, const PretzelParams&) = default;
};

/// Positive family parameters (a, b, c).
struct Abc {
    int a = 1;
    int b = 1;
    int c = 1;

    friend bool operator==(const Abc&, const Abc&) = default;
    friend auto operator<=>(const Abc&, const Abc&) = default;
};

/// (-2a, 2b+1, 2c+1)
inline PretzelParams thm1_knot(Abc p) { return {-2 * p.a, 2 * p.b + 1, 2 * p.c + 1}; }
/// (2a, -(2b+1), 2c+1)
inline PretzelParams thm2_knot(Abc p) { return {2 * p.a, -(2 * p.b + 1), 2 * p.c + 1}; }

enum class ClassTag { Thm1, Thm2, MirrorThm1, MirrorThm2, PriorWork, NotAKnot };

inline std::string_view to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::Thm1: return "Thm1";
        case ClassTag::Thm2: return "Thm2";
        case ClassTag::MirrorThm1: return "MirrorThm1";
        case ClassTag::MirrorThm2: return "MirrorThm2";
        case ClassTag::PriorWork: return "PriorWork";
        case ClassTag::NotAKnot: return "NotAKnot";
    }
    return "?";
}

struct PretzelClass {
    ClassTag tag = ClassTag::NotAKnot;
    /// Family parameters; meaningful for the four theorem tags only.
    Abc abc{};
    bool mirrored = false;
    /// Input triple reordered into canonical band order (not sign-flipped).
    PretzelParams canonical{};
    /// Explanation for PriorWork / NotAKnot.
    std::string reason;

    bool has_family() const { return tag != ClassTag::PriorWork && tag != ClassTag::NotAKnot; }
    bool is_thm1_family() const { return tag == ClassTag::Thm1 || tag == ClassTag::MirrorThm1; }
    bool is_thm2_family() const { return tag == ClassTag::Thm2 || tag == ClassTag::MirrorThm2; }
};

/// Band order used everywhere: the even band first, odd bands ascending.
inline PretzelParams canonical_order(PretzelParams p) {
    std::stable_sort(p.twists.begin(), p.twists.end(), [](int x, int y) {
        const bool ex = x % 2 == 0;
        const bool ey = y % 2 == 0;
        if (ex != ey) return ex;
        return x < y;
    });
    return p;
}

namespace detail {

inline bool match_thm1(const PretzelParams& p, Abc& out) {
    // (-2a, 2b+1, 2c+1), b <= c after canonical ordering.
    if (p[0] >= 0 || p[0] % 2 != 0 || p[1] < 3 || p[2] < 3) return false;
    out = {-p[0] / 2, (p[1] - 1) / 2, (p[2] - 1) / 2};
    return true;
}

inline bool match_thm2(const PretzelParams& p, Abc& out) {
    // (2a, -(2b+1), 2c+1)
    if (p[0] <= 0 || p[0] % 2 != 0 || p[1] > -3 || p[2] < 3) return false;
    out = {p[0] / 2, (-p[1] - 1) / 2, (p[2] - 1) / 2};
    return true;
}

}  // namespace detail

inline PretzelClass classify(int p1, int p2, int p3) {
    PretzelClass cls;
    const PretzelParams input{p1, p2, p3};
    cls.canonical = canonical_order(input);
    if (input.has_zero_band()) {
        cls.reason = "zero-twist band: degenerate diagram";
        return cls;
    }
    if (input.even_band_count() > 1) {
        cls.reason = "two or more even bands: the diagram is a multi-component link";
        return cls;
    }
    if (input.even_band_count() == 0) {
        cls.tag = ClassTag::PriorWork;
        cls.reason = "all bands odd: covered by earlier computations for odd pretzel knots";
        return cls;
    }

    const PretzelParams& canon = cls.canonical;
    const PretzelParams flipped = canonical_order(canon.negated());
    if (detail::match_thm1(canon, cls.abc)) {
        cls.tag = ClassTag::Thm1;
    } else if (detail::match_thm2(canon, cls.abc)) {
        cls.tag = ClassTag::Thm2;
    } else if (detail::match_thm1(flipped, cls.abc)) {
        cls.tag = ClassTag::MirrorThm1;
        cls.mirrored = true;
    } else if (detail::match_thm2(flipped, cls.abc)) {
        cls.tag = ClassTag::MirrorThm2;
        cls.mirrored = true;
    } else {
        cls.tag = ClassTag::PriorWork;
        const bool unit_band = std::abs(canon[1]) == 1 || std::abs(canon[2]) == 1;
        cls.reason = unit_band ? "a band with a single crossing: two-bridge (alternating) knot"
                               : "all bands share one handedness: alternating knot";
    }
    return cls;
}

inline PretzelClass classify(const PretzelParams& p) { return classify(p[0], p[1], p[2]); }

struct DiagramInfo {
    int heegaard_genus = 0;
    int crossing_count = 0;
    std::array<int, 3> band_crossings{};
};

/// Heegaard diagram obtained by thickening the standard projection.
inline DiagramInfo diagram_info(const PretzelClass& cls) {
    if (!cls.is_thm1_family()) throw std::invalid_argument("diagram_info: requires a Thm1 or MirrorThm1 class");
    const auto [a, b, c] = cls.abc;
    DiagramInfo info;
    info.band_crossings = {2 * a, 2 * b + 1, 2 * c + 1};
    info.crossing_count = info.band_crossings[0] + info.band_crossings[1] + info.band_crossings[2];
    info.heegaard_genus = 2 * (a + b + c) + 3;
    return info;
}

}  // namespace pretzel_hfk
