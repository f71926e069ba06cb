#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "madgad/designs.hpp"
#include "madgad/errors.hpp"
#include "madgad/oracle.hpp"
#include "test_support.hpp"

using namespace madgad;

namespace {

/// Block count by size.
std::map<std::size_t, int> census(const BlockDesign& d) {
    std::map<std::size_t, int> out;
    for (const auto& b : d.blocks) ++out[b.size()];
    return out;
}

}  // namespace

TEST(SteinerTripleSystem, Counts) {
    for (int n : {3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33, 37, 39, 43, 45}) {
        const BlockDesign d = steiner_triple_system(n);
        EXPECT_EQ(static_cast<int>(d.blocks.size()), n * (n - 1) / 6) << n;
        EXPECT_NO_THROW(validate_design(d));
        EXPECT_TRUE(d.complete);
    }
    EXPECT_EQ(steiner_triple_system(9).source, DesignSource::Bose);
    EXPECT_EQ(steiner_triple_system(13).source, DesignSource::Skolem);
    EXPECT_THROW(steiner_triple_system(11), DomainError);
    EXPECT_THROW(steiner_triple_system(8), DomainError);
}

TEST(MaxPartialTripleSystem, LeaveShapes) {
    EXPECT_EQ(max_partial_triple_system(7).leave.size(), 0);
    const Graph six = support(max_partial_triple_system(6).leave);
    EXPECT_TRUE(isomorphic(six, disjoint_union(complete(2), disjoint_union(complete(2), complete(2)))));
    EXPECT_TRUE(isomorphic(support(max_partial_triple_system(11).leave), cycle(4)));
}

TEST(MaxPartialTripleSystem, LeaveMatchesTableUpToThirty) {
    for (int n = 3; n <= 30; ++n) {
        const PackingResult r = max_partial_triple_system(n);
        EXPECT_NO_THROW(validate_design(r.design));
        EXPECT_TRUE(leave_matches_table(n, r.leave)) << n;
        EXPECT_EQ(static_cast<std::int64_t>(r.design.blocks.size()), max_triangle_packing_size(n)) << n;
        EXPECT_EQ(3 * static_cast<std::int64_t>(r.design.blocks.size()) + r.leave.size(), choose2(n));
    }
}

TEST(Planes, Counts) {
    const BlockDesign fano = projective_plane(2);
    EXPECT_EQ(fano.points, 7);
    EXPECT_EQ(census(fano), (std::map<std::size_t, int>{{3, 7}}));
    const BlockDesign ag3 = affine_plane(3);
    EXPECT_EQ(ag3.points, 9);
    EXPECT_EQ(census(ag3), (std::map<std::size_t, int>{{3, 12}}));
    EXPECT_EQ(census(projective_plane(3)), (std::map<std::size_t, int>{{4, 13}}));
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        if (!plane_order_supported(q)) continue;
        const BlockDesign pg = projective_plane(q);
        const BlockDesign ag = affine_plane(q);
        EXPECT_EQ(pg.points, q * q + q + 1);
        EXPECT_EQ(static_cast<int>(pg.blocks.size()), q * q + q + 1);
        EXPECT_EQ(ag.points, q * q);
        EXPECT_EQ(static_cast<int>(ag.blocks.size()), q * q + q);
        EXPECT_NO_THROW(validate_design(pg));
        EXPECT_NO_THROW(validate_design(ag));
    }
    EXPECT_THROW(projective_plane(6), DomainError);
}

TEST(Planes, Truncations) {
    const BlockDesign a = truncate_plane(projective_plane(3), TruncateMode::DeletePoint);
    EXPECT_EQ(a.points, 12);
    EXPECT_EQ(census(a), (std::map<std::size_t, int>{{3, 4}, {4, 9}}));
    const BlockDesign b = truncate_plane(affine_plane(3), TruncateMode::DeletePoint);
    EXPECT_EQ(b.points, 8);
    EXPECT_EQ(census(b), (std::map<std::size_t, int>{{2, 4}, {3, 8}}));
    const BlockDesign c = truncate_plane(affine_plane(3), TruncateMode::DeleteLine);
    EXPECT_EQ(c.points, 6);
    EXPECT_EQ(census(c), (std::map<std::size_t, int>{{2, 9}, {3, 2}}));
    for (const BlockDesign& d : {a, b, c}) EXPECT_NO_THROW(validate_design(d));
    EXPECT_THROW(truncate_plane(projective_plane(3), TruncateMode::DeleteLine), DomainError);
}

TEST(CyclicPlanes, DifferenceSets) {
    EXPECT_TRUE(is_perfect_difference_set({1, 2, 4}, 7));
    EXPECT_TRUE(is_perfect_difference_set({0, 1, 3, 9}, 13));
    EXPECT_FALSE(is_perfect_difference_set({0, 1, 2}, 7));
    for (int q : {2, 3, 4, 5, 7, 8}) {
        const CyclicPlane c = cyclic_plane_difference_set(q);
        const int v = q * q + q + 1;
        EXPECT_TRUE(is_perfect_difference_set(c.difference_set, v)) << q;
        EXPECT_NO_THROW(validate_design(c.design));
        ASSERT_EQ(static_cast<int>(c.design.blocks.size()), v);
        for (int i = 0; i < v; ++i) {
            const auto& block = c.design.blocks[i];
            EXPECT_TRUE(std::binary_search(block.begin(), block.end(), i));
            VertexSet shifted;
            for (int x : block) shifted.push_back((x + 1) % v);
            std::sort(shifted.begin(), shifted.end());
            EXPECT_EQ(shifted, c.design.blocks[(i + 1) % v]);
        }
    }
    EXPECT_THROW(cyclic_plane_difference_set(6), DomainError);
}

TEST(Designs, ValidatorRejectsRepeatedPair) {
    BlockDesign d;
    d.points = 4;
    d.blocks = {{0, 1, 2}, {0, 1, 3}};
    EXPECT_THROW(validate_design(d), ValidationError);
    d.blocks = {{0, 1, 2}};
    d.complete = true;
    EXPECT_THROW(validate_design(d), ValidationError);
}

TEST(Designs, JsonRoundTrip) {
    const BlockDesign d = steiner_triple_system(9);
    const BlockDesign back = design_from_json(design_to_json(d));
    EXPECT_EQ(back.points, d.points);
    EXPECT_EQ(back.blocks, d.blocks);
}
