#include <gtest/gtest.h>

#include <set>

#include "turan/finite_field.hpp"
#include "turan/norm_tower.hpp"
#include "turan/rng.hpp"

namespace turan {
namespace {

TEST(BuildField, SmallOrders)
{
    EXPECT_EQ(build_field(2, 2).order(), 4U);
    const auto f9 = build_field(3, 2);
    EXPECT_EQ(f9.order(), 9U);
    EXPECT_EQ(f9.multiplicative_order(f9.generator()), 8U);
}

TEST(BuildField, RejectsCompositeAndOversized)
{
    try {
        build_field(4, 1);
        FAIL() << "expected NotPrime";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
    try {
        build_field(2, 21);
        FAIL() << "expected TooLarge";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
    EXPECT_NO_THROW(build_field(2, 20));
}

TEST(BuildField, ModulusIsSmallestIrreducible)
{
    // x^2 and x^2 + 1 = (x+2)(x+3) split over GF(5); x^2 + 2 has no root.
    const auto f25 = build_field(5, 2);
    EXPECT_EQ(f25.modulus(), (std::vector<std::uint32_t>{2, 0, 1}));
    for (std::uint32_t r = 0; r < 5; ++r)
        EXPECT_NE((r * r + 2) % 5, 0U) << "root " << r;
    // Each smaller candidate has a root.
    auto has_root = [](std::uint32_t c0) {
        for (std::uint32_t r = 0; r < 5; ++r)
            if ((r * r + c0) % 5 == 0)
                return true;
        return false;
    };
    EXPECT_TRUE(has_root(0));
    EXPECT_TRUE(has_root(1));

    EXPECT_EQ(build_field(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(build_field(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(build_field(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    EXPECT_EQ(build_field(7, 1).modulus(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(build_field(3, 2).modulus_string(), "x^2 + 1");
}

TEST(FieldArithmetic, Axioms)
{
    for (auto [p, m] : {std::pair{2U, 3U}, {3U, 2U}, {5U, 1U}, {7U, 2U}}) {
        const auto f = build_field(p, m);
        std::set<std::uint32_t> powers;
        for (std::uint32_t k = 0; k + 1 < f.order(); ++k)
            powers.insert(f.exp(k).code);
        EXPECT_EQ(powers.size(), f.order() - 1) << "generator must be primitive";
        for (std::uint32_t a = 0; a < f.order(); ++a) {
            const auto x = f.element(a);
            EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
            if (a) {
                EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
            }
            for (std::uint32_t b = 0; b < f.order(); ++b) {
                const auto y = f.element(b);
                EXPECT_EQ(f.mul(x, y), f.mul(y, x));
                EXPECT_EQ(f.mul(x, y), f.mul_polynomial(x, y));
            }
        }
    }
}

TEST(FieldArithmetic, TablesAgreeWithPolynomialBackend)
{
    const auto f = build_field(2, 16);
    ASSERT_TRUE(f.has_log_tables());
    Rng rng(42);
    for (int i = 0; i < 10000; ++i) {
        const auto a = f.element(static_cast<std::uint32_t>(rng.below(f.order())));
        const auto b = f.element(static_cast<std::uint32_t>(rng.below(f.order())));
        ASSERT_EQ(f.mul(a, b), f.mul_polynomial(a, b));
    }
}

TEST(FieldArithmetic, PolynomialBackendAboveTableLimit)
{
    const auto f = build_field(2, 17);
    EXPECT_FALSE(f.has_log_tables());
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto a = f.element(static_cast<std::uint32_t>(1 + rng.below(f.order() - 1)));
        EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
    EXPECT_EQ(f.pow(f.generator(), f.order() - 1), f.one());
}

TEST(FieldArithmetic, ForeignElementRejected)
{
    const auto a = build_field(3, 1);
    const auto b = build_field(3, 1);
    EXPECT_THROW(a.add(a.one(), b.one()), Error);
}

TEST(Norm, IdentityAndGenerator)
{
    const auto t = build_tower(3, 3);
    EXPECT_EQ(t.norm(t.extension().one()), t.base().one());
    // In GF(9), g^4 has order 2, i.e. it is -1 = 2 in GF(3).
    const auto g = t.extension().generator();
    EXPECT_EQ(t.extension().multiplicative_order(g), 8U);
    EXPECT_EQ(t.norm(g), t.base().element(2));
    EXPECT_EQ(t.extension().pow(g, 4), t.embed(t.base().element(2)));
}

TEST(Norm, ZeroIsAnError)
{
    const auto t = build_tower(3, 3);
    try {
        t.norm(t.extension().zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
    }
    EXPECT_THROW(norm_fiber(t, t.base().zero()), Error);
}

TEST(Norm, MultiplicativeAndSurjective)
{
    for (auto [q, s] : {std::pair{3U, 3U}, {4U, 3U}, {5U, 3U}, {2U, 4U}, {3U, 4U}, {8U, 3U}}) {
        const auto t = build_tower(q, s);
        const auto& ext = t.extension();
        for (std::uint32_t a = 1; a < ext.order(); ++a)
            for (std::uint32_t b = 1; b < ext.order(); ++b)
                ASSERT_EQ(t.norm(ext.mul(ext.element(a), ext.element(b))),
                          t.base().mul(t.norm(ext.element(a)), t.norm(ext.element(b))));
        const std::uint64_t expected = (ext.order() - 1) / (q - 1);
        std::size_t covered = 0;
        for (std::uint32_t x = 1; x < q; ++x) {
            const auto fiber = norm_fiber(t, t.base().element(x));
            EXPECT_EQ(fiber.size(), expected) << "q=" << q << " s=" << s << " x=" << x;
            covered += fiber.size();
        }
        EXPECT_EQ(covered, ext.order() - 1u) << "fibers partition the nonzero elements";
    }
}

TEST(Norm, FiberExamples)
{
    const auto t33 = build_tower(3, 3);
    const auto f1 = norm_fiber(t33, t33.base().one());
    EXPECT_EQ(f1.size(), 4U);
    EXPECT_NE(std::find(f1.begin(), f1.end(), t33.extension().one()), f1.end());
    const auto t53 = build_tower(5, 3);
    for (std::uint32_t x = 1; x < 5; ++x)
        EXPECT_EQ(norm_fiber(t53, t53.base().element(x)).size(), 6U);
}

TEST(Tower, EmbeddingIsFrobeniusFixedHomomorphism)
{
    const auto t = build_tower(4, 3);
    EXPECT_EQ(t.extension().order(), 16U);
    EXPECT_EQ(t.extension().degree(), 2U * t.base().degree());
    for (std::uint32_t a = 0; a < 4; ++a) {
        const auto x = t.embed(t.base().element(a));
        EXPECT_EQ(t.extension().pow(x, 4), x);
        EXPECT_EQ(t.restrict_to_base(x), t.base().element(a));
    }
    EXPECT_EQ(t.embed(t.base().one()), t.extension().one());
}

TEST(Tower, RejectsNonPrimePower)
{
    EXPECT_THROW(build_tower(6, 3), Error);
    EXPECT_THROW(build_tower(3, 1), Error);
}

// Enumeration over all C in GF(9), written independently of the library's
// counting routine: solve (A + C) = X (B + C) for each fiber element X.
std::uint64_t solutions_via_fiber(const NormTower& t, FieldElement a, FieldElement b, FieldElement x)
{
    const auto& ext = t.extension();
    std::uint64_t count = 0;
    for (const auto& big_x : norm_fiber(t, x)) {
        if (big_x == ext.one())
            continue;
        // C = (B X - A) / (1 - X)
        const auto c = ext.div(ext.sub(ext.mul(b, big_x), a), ext.sub(ext.one(), big_x));
        if (!ext.add(a, c).is_zero() && !ext.add(b, c).is_zero())
            ++count;
    }
    return count;
}

TEST(NormRatio, ExamplesAtQ3)
{
    const auto t = build_tower(3, 3);
    const auto& ext = t.extension();
    for (std::uint32_t a = 0; a < 9; ++a) {
        for (std::uint32_t b = 0; b < 9; ++b) {
            if (a == b)
                continue;
            const auto A = ext.element(a), B = ext.element(b);
            EXPECT_EQ(count_norm_ratio_solutions(t, A, B, t.base().one()), 3U);
            EXPECT_EQ(count_norm_ratio_solutions(t, A, B, t.base().element(2)), 4U);
            for (std::uint32_t x = 1; x < 3; ++x)
                EXPECT_EQ(count_norm_ratio_solutions(t, A, B, t.base().element(x)),
                          solutions_via_fiber(t, A, B, t.base().element(x)));
        }
    }
}

TEST(NormRatio, LowerBoundAtQ5)
{
    const auto t = build_tower(5, 3);
    const auto& ext = t.extension();
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto a = static_cast<std::uint32_t>(rng.below(25));
        const auto b = static_cast<std::uint32_t>(rng.below(25));
        if (a == b)
            continue;
        const auto x = t.base().element(static_cast<std::uint32_t>(1 + rng.below(4)));
        EXPECT_GE(count_norm_ratio_solutions(t, ext.element(a), ext.element(b), x), 5U);
    }
}

TEST(NormRatio, DegenerateInput)
{
    const auto t = build_tower(3, 3);
    try {
        count_norm_ratio_solutions(t, t.extension().one(), t.extension().one(), t.base().one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
    }
}

std::vector<std::uint32_t> codes(const std::vector<FieldElement>& xs)
{
    std::vector<std::uint32_t> out;
    for (auto x : xs)
        out.push_back(x.code);
    std::sort(out.begin(), out.end());
    return out;
}

TEST(MultSubgroup, Examples)
{
    const auto t5 = build_tower(5, 3);
    EXPECT_EQ(codes(mult_subgroup(t5, 2).elements()), (std::vector<std::uint32_t>{1, 4}));
    EXPECT_EQ(codes(mult_subgroup(t5, 4).elements()), (std::vector<std::uint32_t>{1, 2, 3, 4}));
    const auto t7 = build_tower(7, 3);
    // Cubes mod 7: 1, 8 = 1, 27 = 6, 64 = 1, 125 = 6, 216 = 6 -> roots of y^3 = 1.
    std::vector<std::uint32_t> roots;
    for (std::uint32_t y = 1; y < 7; ++y)
        if (y * y * y % 7 == 1)
            roots.push_back(y);
    EXPECT_EQ(roots, (std::vector<std::uint32_t>{1, 2, 4}));
    EXPECT_EQ(codes(mult_subgroup(t7, 3).elements()), roots);
}

TEST(MultSubgroup, CosetsPartitionUnits)
{
    for (auto [q, r] : {std::pair{5U, 2U}, {7U, 3U}, {7U, 2U}, {9U, 4U}, {13U, 6U}}) {
        const auto t = build_tower(q, 3);
        const auto h = mult_subgroup(t, r);
        EXPECT_EQ(h.elements().size(), r);
        std::vector<std::size_t> sizes(h.coset_count(), 0);
        for (std::uint32_t c = 1; c < q; ++c)
            ++sizes[h.coset_index(t.base().element(c))];
        for (auto s : sizes)
            EXPECT_EQ(s, r);
        for (auto a : h.elements())
            for (auto b : h.elements()) {
                EXPECT_TRUE(h.contains(t.base().mul(a, b)));
                EXPECT_TRUE(h.contains(t.base().inv(a)));
            }
        // Coset labels are multiplicative.
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                EXPECT_EQ(h.coset_index(t.base().mul(t.base().element(a), t.base().element(b))),
                          (h.coset_index(t.base().element(a)) + h.coset_index(t.base().element(b))) % h.coset_count());
    }
}

TEST(MultSubgroup, NotDivisor)
{
    const auto t = build_tower(5, 3);
    try {
        mult_subgroup(t, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDivisor);
    }
}

} // namespace
} // namespace turan
