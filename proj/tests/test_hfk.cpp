#include "pretzel_hfk/hfk.hpp"
#include "pretzel_hfk/wirtinger.hpp"

#include <gtest/gtest.h>

using namespace pretzel_hfk;

namespace {

const Abc unit{1, 1, 1};
const LaurentPoly t34{{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}};
const BigradedTable t34_table{{{0, 3}, 1}, {{-1, 2}, 1}, {{-2, 0}, 1}, {{-5, -2}, 1}, {{-6, -3}, 1}};

std::vector<Abc> thm1_grid() {
    std::vector<Abc> out;
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = b; c <= 4; ++c) out.push_back({a, b, c});
    return out;
}

std::vector<Abc> cube(int hi) {
    std::vector<Abc> out;
    for (int a = 1; a <= hi; ++a)
        for (int b = 1; b <= hi; ++b)
            for (int c = 1; c <= hi; ++c) out.push_back({a, b, c});
    return out;
}

bool contains(const std::vector<PairingEntry>& pairs, const KauffmanState& src, const KauffmanState& dst) {
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const PairingEntry& e) { return e.source == src && e.target == dst; });
}

}  // namespace

TEST(BigradedTable, SetAndRank) {
    BigradedTable t;
    t.set(0, 1, 2);
    t.add(0, 1, 1);
    EXPECT_EQ(t.rank(0, 1), 3);
    t.set(0, 1, 0);
    EXPECT_TRUE(t.empty());
    EXPECT_THROW(t.set(0, 0, -1), std::invalid_argument);
}

TEST(BigradedTable, DisplayOrder) {
    const auto order = t34_table.display_order();
    ASSERT_EQ(order.size(), 5u);
    EXPECT_EQ(order.front().first, (Bigrading{0, 3}));
    EXPECT_EQ(order.back().first, (Bigrading{-6, -3}));
}

TEST(Reduce, UnitKnot) {
    for (Variant v : {Variant::a, Variant::b}) {
        const BigradedTable t = reduce_two_lines(chain_summary(unit, v));
        EXPECT_EQ(t, t34_table);
        EXPECT_EQ(t.rank_at_s(1), 0);
    }
    EXPECT_TRUE(reduce_two_lines(ChainSummary{}).empty());
}

TEST(ClosedForm, Theorem1Unit) { EXPECT_EQ(theorem1_closed_form(unit, t34), t34_table); }

TEST(ClosedForm, Theorem2TrivialPolynomial) {
    const BigradedTable t = theorem2_closed_form(Abc{1, 2, 3}, LaurentPoly(Integer(1)));
    ASSERT_EQ(t.size(), 1u);
    const auto [g, r] = *t.entries().begin();
    EXPECT_EQ(g.s, 0);
    EXPECT_EQ(r, 1);
    EXPECT_EQ(parity(g.m), 0);
    EXPECT_TRUE(supported_on_two_lines(t, thm2_lower_line(Abc{1, 2, 3})));
}

TEST(ClosedForm, RejectsUnnormalized) {
    EXPECT_THROW((void)theorem1_closed_form(unit, LaurentPoly{{1, 1}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW((void)theorem1_closed_form(unit, -t34), std::invalid_argument);
}

TEST(ClosedForm, TorusT35) {
    const LaurentPoly alex = fox_alexander(wirtinger(thm1_knot({1, 1, 2})));
    EXPECT_EQ(alex, torus_alexander(3, 5));
    EXPECT_EQ(reduce_two_lines(chain_summary(Abc{1, 1, 2}, Variant::b)), theorem1_closed_form({1, 1, 2}, alex));
}

TEST(LiteralParts, DifferFromSummaryOnUnitKnot) {
    // the literal part (6) puts the s = -2 group at m = -3 instead of -5
    const auto diff = table_differences(t34_table, theorem1_literal_parts(unit));
    EXPECT_FALSE(diff.empty());
    EXPECT_EQ(theorem1_literal_parts(unit).rank(0, 3), 1);
}

TEST(Pairing, UnitVariantBSpinOne) {
    const auto pairs = pairing_differential(unit, Variant::b, 1);
    const KauffmanState a10{Family::A, 1, 0, Variant::b}, b02{Family::B, 0, 2, Variant::b};
    ASSERT_TRUE(contains(pairs, a10, b02));
    for (const PairingEntry& e : pairs) {
        EXPECT_EQ(e.kind, PairKind::DlrDisk);
        if (e.source == a10) {
            EXPECT_EQ(e.l, 1);
            EXPECT_EQ(e.r, 0);
        }
    }
}

TEST(Pairing, SpecialPairVariantA) {
    const auto pairs = pairing_differential(unit, Variant::a, 0);
    const KauffmanState a00{Family::A, 0, 0, Variant::a}, b00{Family::B, 0, 0, Variant::a};
    EXPECT_TRUE(contains(pairs, a00, b00));
    EXPECT_FALSE(grading_compatible({{Family::A, 0, 0, Variant::b}, {Family::B, 0, 0, Variant::b}, PairKind::SpecialB0k, {}, {}}, unit));
}

TEST(Pairing, OutsideSupportThrows) {
    EXPECT_THROW((void)pairing_differential(unit, Variant::b, 4), std::out_of_range);
    EXPECT_THROW((void)pairing_differential(classify(2, -3, 3), Variant::b, 0), std::invalid_argument);
}

TEST(MatrixHomology, UnitSpinOne) {
    const ChainSummary sum = chain_summary(unit, Variant::b);
    const MatrixHomology mh = homology_via_matrix(sum, pairing_differential(unit, Variant::b, 1));
    EXPECT_TRUE(mh.torsion_free);
    EXPECT_EQ(mh.table.rank(-1, 1) + mh.table.rank(-2, 1), 0);
    EXPECT_TRUE(mh.complete.at(1));
}

TEST(MatrixHomology, RejectsForeignPairs) {
    const ChainSummary sum = chain_summary(unit, Variant::b);
    EXPECT_THROW((void)homology_via_matrix(sum, pairing_differential(unit, Variant::a, 0)), std::invalid_argument);
}

TEST(Mirror, Transform) {
    const BigradedTable m{{{0, -3}, 1}, {{1, -2}, 1}, {{2, 0}, 1}, {{5, 2}, 1}, {{6, 3}, 1}};
    EXPECT_EQ(mirror_transform(t34_table), m);
    EXPECT_EQ(mirror_transform(m), t34_table);
}

TEST(Symmetry, Examples) {
    EXPECT_TRUE(symmetry_check(t34_table));
    EXPECT_FALSE(symmetry_check(BigradedTable{{{0, 1}, 1}}));
    EXPECT_TRUE(symmetry_check(BigradedTable{}));
}

TEST(Readouts, T34) {
    const HfkResult r = readouts(t34_table, t34);
    EXPECT_EQ(r.genus, 3);
    EXPECT_TRUE(r.fibered);
    EXPECT_EQ(r.total_rank, 5);
    EXPECT_THROW((void)readouts(BigradedTable{}, t34), std::invalid_argument);
}

TEST(Readouts, Thm1FamilyGenusAndFibering) {
    for (const Abc& p : cube(3)) {
        const HfkResult r = readouts(reduce_two_lines(chain_summary(p, Variant::b)), LaurentPoly(Integer(1)));
        EXPECT_EQ(r.genus, p.b + p.c + 1);
        EXPECT_EQ(r.fibered, p.a == 1);
    }
}

// Properties over the parameter grids

TEST(HfkProperty, ReductionEqualsClosedForm) {
    for (const Abc& p : thm1_grid())
        for (Variant v : {Variant::a, Variant::b}) {
            const ChainSummary sum = chain_summary(p, v);
            EXPECT_EQ(reduce_two_lines(sum), theorem1_closed_form(p, euler_characteristic(sum)));
        }
}

TEST(HfkProperty, TwoLineSupportAndSymmetry) {
    for (const Abc& p : cube(3)) {
        const BigradedTable t1 = reduce_two_lines(chain_summary(p, Variant::b));
        EXPECT_TRUE(supported_on_two_lines(t1, p.b + p.c));
        EXPECT_TRUE(symmetry_check(t1));
        const LaurentPoly alex2 = fox_alexander(wirtinger(thm2_knot(p)));
        const BigradedTable t2 = theorem2_closed_form(p, alex2);
        EXPECT_TRUE(supported_on_two_lines(t2, p.c - p.b - 1));
        EXPECT_TRUE(symmetry_check(t2));
        EXPECT_EQ(t2.euler_characteristic(), alex2);
        EXPECT_TRUE(symmetry_check(mirror_transform(t2)));
    }
}

TEST(HfkProperty, TopGroup) {
    for (const Abc& p : cube(4)) {
        const BigradedTable t = reduce_two_lines(chain_summary(p, Variant::b));
        const int top = p.b + p.c + 1;
        EXPECT_EQ(t.max_s(), top);
        EXPECT_EQ(t.rank(0, top), p.a);
        EXPECT_EQ(t.rank_at_s(top), p.a);
        EXPECT_EQ(t.rank(-2 * top, -top), p.a);
    }
}

TEST(HfkProperty, PairsAreCompatibleAndMatrixAgrees) {
    for (const Abc& p : cube(3))
        for (Variant v : {Variant::a, Variant::b}) {
            const ChainSummary sum = chain_summary(p, v);
            const auto pairs = all_pairings(p, v);
            std::set<KauffmanState> seen;
            for (const PairingEntry& e : pairs) {
                EXPECT_TRUE(grading_compatible(e, p));
                EXPECT_TRUE(in_range(e.source, p) && in_range(e.target, p));
                EXPECT_TRUE(seen.insert(e.source).second);
                EXPECT_TRUE(seen.insert(e.target).second);
            }
            const MatrixHomology mh = homology_via_matrix(sum, pairs);
            const BigradedTable red = reduce_two_lines(sum);
            EXPECT_TRUE(mh.torsion_free);
            for (const auto& [s, ok] : mh.complete) {
                if (!ok) continue;
                EXPECT_EQ(mh.table.rank_at_s(s), red.rank_at_s(s)) << "s=" << s;
                for (int m = s - p.b - p.c - 1; m <= s - p.b - p.c; ++m) EXPECT_EQ(mh.table.rank(m, s), red.rank(m, s));
            }
        }
}

TEST(HfkProperty, PairingsCompleteWhenBAtMostC) {
    // variant (b) cancels everything; variant (a) can leave a gap only at s = b - c
    for (const Abc& p : cube(4)) {
        if (p.b > p.c) continue;
        const MatrixHomology mb = homology_via_matrix(chain_summary(p, Variant::b), all_pairings(p, Variant::b));
        EXPECT_TRUE(mb.all_complete()) << p.a << p.b << p.c;
        const MatrixHomology ma = homology_via_matrix(chain_summary(p, Variant::a), all_pairings(p, Variant::a));
        for (const auto& [s, ok] : ma.complete)
            if (s != p.b - p.c || p.a == 1) {
                EXPECT_TRUE(ok) << p.a << p.b << p.c << " s=" << s;
            }
    }
}

TEST(HfkProperty, ParityOfTotalRank) {
    for (const Abc& p : cube(4)) {
        const ChainSummary sum = chain_summary(p, Variant::b);
        const BigradedTable t = reduce_two_lines(sum);
        const Integer det = knot_determinant(euler_characteristic(sum));
        EXPECT_EQ(t.total_rank() % 2, 1);
        EXPECT_EQ(det % 2, 1);
        EXPECT_LE(det, Integer(t.total_rank()));
    }
}
