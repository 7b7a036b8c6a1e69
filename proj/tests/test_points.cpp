#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <padicfun/points.hpp>

using namespace padicfun;

namespace
{

MonomialValue mv(const std::string &text)
{
    return MonomialValue::parse(text);
}

const HalfInt half = HalfInt::from_doubled(1);

// Long division over Q: whether d divides p, coefficients from degree 0 up.
bool divides(std::vector<Rational> d, std::vector<Rational> p)
{
    const auto trim = [](std::vector<Rational> &v) {
        while (!v.empty() && v.back() == 0) {
            v.pop_back();
        }
    };
    trim(d);
    trim(p);
    if (d.empty()) {
        return p.empty();
    }
    while (p.size() >= d.size()) {
        const Rational f = p.back() / d.back();
        const auto shift = p.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            p[shift + i] -= f * d[i];
        }
        trim(p);
    }
    return p.empty();
}

Polynomial power(const Polynomial &p, std::uint64_t e)
{
    auto out = Polynomial::one();
    for (std::uint64_t i = 0; i < e; ++i) {
        out = out * p;
    }
    return out;
}

// A one-place point on shape (1,1) with up-values (c1; c2) and Satake (s1; s2).
ClassicalPoint point11(std::vector<int> k, const std::string &c1, const std::string &c2, const std::string &s1,
                       const std::string &s2)
{
    const GroupShape s({1, 1});
    return ClassicalPoint(AlgebraicWeight(s, std::move(k)), {{"v", UnramifiedCharacter(s, {mv(c1), mv(c2)})}},
                          {{"l", {mv(s1), mv(s2)}}});
}

// Space whose single point has U_v-eigenvalue lambda for the generator (1).
MockFormSpace scalar_space(const std::vector<std::pair<int, int>> &eigen_mult)
{
    const GroupShape s({1});
    MockFormSpace space(AlgebraicWeight(s, {0}));
    for (const auto &[lam, m] : eigen_mult) {
        space.add(ClassicalPoint(space.weight, {{"v", UnramifiedCharacter(s, {MonomialValue(Rational(lam))})}}, {}), m);
    }
    return space;
}

HeckeSelection u_at(const GroupShape &s, std::vector<int> t)
{
    HeckeSelection h;
    h.up.push_back({"v", CocharVector(s, std::move(t))});
    return h;
}

Assignment standard_assignment()
{
    return {{"q", make_symbol_value(4)},  {"W", make_symbol_value(Rational(1, 3))}, {"M", make_symbol_value(5)},
            {"c1", make_symbol_value(2)}, {"c2", make_symbol_value(7)},            {"s1", make_symbol_value(3)},
            {"s2", make_symbol_value(11)}};
}

} // namespace

TEST(ClassicalPoint, Validation)
{
    const GroupShape s({2});
    const AlgebraicWeight k(s, {0, 0});
    EXPECT_THROW(ClassicalPoint(k, {{"v", UnramifiedCharacter::trivial(GroupShape({1, 1}))}}, {}), Error);
    EXPECT_THROW(ClassicalPoint(k, {}, {{"l", {mv("a")}}}), Error);
    // Satake lists are multisets inside each block.
    EXPECT_EQ(ClassicalPoint(k, {}, {{"l", {mv("a"), mv("b")}}}), ClassicalPoint(k, {}, {{"l", {mv("b"), mv("a")}}}));
}

TEST(MockFormSpace, Validation)
{
    MockFormSpace space(AlgebraicWeight(GroupShape({1}), {0}));
    EXPECT_THROW(space.add(ClassicalPoint(AlgebraicWeight(GroupShape({1}), {1}), {}, {})), Error);
    EXPECT_THROW(space.add(ClassicalPoint(space.weight, {}, {}), 0), Error);
}

TEST(TransferPoint, Examples)
{
    const TransferConfig single(GroupShape({2}));
    const ClassicalPoint p2(AlgebraicWeight(GroupShape({2}), {3, 1}),
                            {{"v", UnramifiedCharacter(GroupShape({2}), {mv("a"), mv("b")})}}, {{"l", {mv("s"), mv("t")}}});
    EXPECT_EQ(transfer_point(p2, single), p2);

    const auto out = transfer_point(point11({2, 0}, "c1", "c2", "s1", "s2"), TransferConfig(GroupShape({1, 1})));
    EXPECT_EQ(out.weight.k, (std::vector<int>{2, 1}));
    EXPECT_EQ(out.up.at("v").values, (std::vector<MonomialValue>{mv("M * c1 * q^(1/2)"), mv("M * c2 * q^(-1/2) * W")}));
    auto sat = std::vector<MonomialValue>{mv("M * s1"), mv("M * s2")};
    std::sort(sat.begin(), sat.end());
    EXPECT_EQ(out.satake.at("l"), sat);
}

TEST(TransferPoint, PerPlaceMu)
{
    TransferConfig cfg(GroupShape({1, 1}));
    cfg.place_mu["l"] = "N";
    const auto out = transfer_point(point11({0, 0}, "c1", "c2", "s1", "s2"), cfg);
    EXPECT_EQ(out.up.at("v").values[0], mv("M * c1 * q^(1/2)"));
    auto sat = std::vector<MonomialValue>{mv("N * s1"), mv("N * s2")};
    std::sort(sat.begin(), sat.end());
    EXPECT_EQ(out.satake.at("l"), sat);
}

TEST(TransferPoint, MultiplicativeInUpSystem)
{
    // With the weight fixed, the up-system part of the transfer is affine:
    // T(ab) T(1) = T(a) T(b).
    const TransferConfig cfg(GroupShape({1, 2}), Permutation::from_one_line({2, 1, 3}), half);
    const GroupShape s({1, 2});
    const AlgebraicWeight k(s, {1, 2, 0});
    const auto up = [&](const char *a, const char *b, const char *c) {
        return ClassicalPoint(k, {{"v", UnramifiedCharacter(s, {mv(a), mv(b), mv(c)})}}, {});
    };
    const auto t = [&](const ClassicalPoint &p) { return transfer_point(p, cfg).up.at("v"); };
    const auto pa = up("a", "b", "c"), pb = up("2 * d", "e^(1/2)", "f"), pab = up("2 * a * d", "b * e^(1/2)", "c * f");
    EXPECT_EQ(t(pab) * t(up("1", "1", "1")), t(pa) * t(pb));
}

TEST(TransferPoint, InjectiveOnRandomPoints)
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> co(1, 40), wt(-2, 2);
    const TransferConfig cfg(GroupShape({1, 1}));
    std::vector<ClassicalPoint> pts;
    for (int i = 0; i < 60; ++i) {
        pts.push_back(point11({wt(rng), wt(rng)}, std::to_string(co(rng)), std::to_string(co(rng)), "s1", "s2"));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (!(pts[i] == pts[j])) {
                EXPECT_FALSE(transfer_point(pts[i], cfg) == transfer_point(pts[j], cfg));
            }
        }
    }
}

TEST(Diagram, Examples)
{
    const TransferConfig cfg(GroupShape({1, 1}));
    const std::vector<ClassicalPoint> zh{point11({2, 0}, "c1", "c2", "s1", "s2"), point11({1, 1}, "a", "b", "s", "t")};
    std::vector<ClassicalPoint> zg;
    for (const auto &p : zh) {
        zg.push_back(transfer_point(p, cfg));
    }
    EXPECT_TRUE(diagram_check(zh, zg, cfg).all_matched());

    const auto none = diagram_check(zh, {}, cfg);
    EXPECT_EQ(none.matched_count, 0u);
    EXPECT_EQ(none.matched, (std::vector<bool>{false, false}));

    auto perturbed = zg;
    perturbed[1].satake.at("l")[0] *= mv("2");
    const auto r = diagram_check(zh, perturbed, cfg);
    EXPECT_EQ(r.matched, (std::vector<bool>{true, false}));
}

TEST(Charpoly, Examples)
{
    const auto h = u_at(GroupShape({1}), {1});
    const Assignment none;
    EXPECT_EQ(charpoly(scalar_space({{3, 2}}), h, none).coeffs, (std::vector<Rational>{1, -6, 9}));
    EXPECT_EQ(charpoly(scalar_space({}), h, none), Polynomial::one());
    EXPECT_EQ(charpoly(scalar_space({{2, 1}, {5, 1}}), h, none).coeffs, (std::vector<Rational>{1, -7, 10}));
}

TEST(Charpoly, MultiplicativeOverUnions)
{
    const auto h = u_at(GroupShape({1}), {2});
    const Assignment none;
    const auto a = scalar_space({{2, 1}, {-3, 2}}), b = scalar_space({{7, 3}});
    auto ab = a;
    for (const auto &e : b.entries) {
        ab.add(e.point, e.multiplicity);
    }
    EXPECT_EQ(charpoly(ab, h, none), charpoly(a, h, none) * charpoly(b, h, none));
}

TEST(Eigenvalue, TwistedByWeight)
{
    const auto pt = point11({2, 0}, "c1", "c2", "s1", "s2");
    const auto a = standard_assignment();
    // U at t = (1,0): c1 * W^2 = 2 / 9.
    EXPECT_EQ(eigenvalue(pt, u_at(GroupShape({1, 1}), {1, 0}), a), Rational(2, 9));
    HeckeSelection e1;
    e1.satake.push_back({"l", 1});
    EXPECT_EQ(eigenvalue(pt, e1, a), 14);
    e1.satake.push_back({"l", 2});
    EXPECT_EQ(eigenvalue(pt, e1, a), 14 * 33);
    const GroupShape g({2});
    const ClassicalPoint p2(AlgebraicWeight(g, {0, 0}), {{"v", UnramifiedCharacter::trivial(g)}}, {});
    EXPECT_THROW(eigenvalue(p2, u_at(g, {0, 1}), a), Error);

    HeckeSelection missing;
    missing.up.push_back({"w", CocharVector(GroupShape({1, 1}), {0, 0})});
    EXPECT_THROW(eigenvalue(pt, missing, a), Error);
}

TEST(Divisibility, Examples)
{
    const auto h = u_at(GroupShape({1}), {1});
    const Assignment none;
    const auto s = scalar_space({{2, 1}, {5, 3}});
    EXPECT_TRUE(divisibility_check(s, s, 1, h, none));

    const auto h2 = scalar_space({{3, 2}}), g1 = scalar_space({{3, 1}});
    EXPECT_TRUE(divisibility_check(h2, g1, 2, h, none));
    EXPECT_FALSE(divisibility_check(h2, g1, 1, h, none));

    const auto absent = scalar_space({{4, 1}});
    for (std::uint64_t c = 1; c <= 5; ++c) {
        EXPECT_FALSE(divisibility_check(absent, g1, c, h, none));
    }
}

TEST(Divisibility, AgreesWithLongDivision)
{
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> lam(-3, 3), mult(1, 3), count(1, 3), cc(1, 3);
    const auto h = u_at(GroupShape({1}), {1});
    const Assignment none;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<std::pair<int, int>> eh, eg;
        for (int i = count(rng); i > 0; --i) {
            const int l = lam(rng);
            eh.emplace_back(l == 0 ? 1 : l, mult(rng));
        }
        for (int i = count(rng); i > 0; --i) {
            const int l = lam(rng);
            eg.emplace_back(l == 0 ? 1 : l, mult(rng));
        }
        const auto sh = scalar_space(eh), sg = scalar_space(eg);
        const auto c = static_cast<std::uint64_t>(cc(rng));
        const bool oracle = divides(charpoly(sh, h, none).coeffs, power(charpoly(sg, h, none), c).coeffs);
        EXPECT_EQ(divisibility_check(sh, sg, c, h, none), oracle);
    }
}

TEST(ConstantC, Examples)
{
    EXPECT_EQ(constant_C(1, {1}), 1u);
    EXPECT_EQ(constant_C(3, {2}), 2u);
    EXPECT_EQ(constant_C(4, {2, 3}), 2u);
    EXPECT_THROW(constant_C(1, {}), Error);
    EXPECT_THROW(constant_C(0, {1}), Error);
    EXPECT_THROW(constant_C(1, {0}), Error);
}

TEST(BuildTransferredSpace, Examples)
{
    const TransferConfig cfg(GroupShape({1, 1}));
    const MockFormSpace empty(AlgebraicWeight(GroupShape({1, 1}), {2, 0}));
    const auto te = build_transferred_space(empty, cfg);
    EXPECT_TRUE(te.entries.empty());
    EXPECT_EQ(te.weight.k, (std::vector<int>{2, 1}));

    auto one = empty;
    one.add(point11({2, 0}, "c1", "c2", "s1", "s2"), 3);
    const auto t1 = build_transferred_space(one, cfg);
    ASSERT_EQ(t1.entries.size(), 1u);
    EXPECT_EQ(t1.entries[0].multiplicity, 3);
    EXPECT_EQ(t1.entries[0].point, transfer_point(one.entries[0].point, cfg));
}

TEST(BuildTransferredSpace, EndToEnd)
{
    // H-space: the accessible refinements of a (1,1) principal series, each
    // with multiplicity 2; G-space: the accessible refinements of its
    // transfer with multiplicity 1, so C = 2.
    const TransferConfig cfg(GroupShape({1, 1}));
    MockFormSpace sh(AlgebraicWeight(GroupShape({1, 1}), {2, 0}));
    sh.add(point11({2, 0}, "c1", "c2", "s1", "s2"), 2);
    const auto th = build_transferred_space(sh, cfg);

    MockFormSpace sg(th.weight);
    sg.add(th.entries[0].point, 1);
    const GroupShape g({2});
    // The other refinement of the transferred representation.
    const auto &p = th.entries[0].point;
    sg.add(ClassicalPoint(th.weight, {{"v", UnramifiedCharacter(g, {p.up.at("v").values[1], p.up.at("v").values[0]})}}, p.satake), 1);

    const auto c = constant_C(2, {1});
    for (const auto &h : {u_at(g, {1, 0}), u_at(g, {1, 1}), u_at(g, {-1, -1})}) {
        EXPECT_TRUE(divisibility_check(th, sg, c, h, standard_assignment()));
    }
    // On (1,0) the two refinements separate, so C = 1 is too small.
    EXPECT_FALSE(divisibility_check(th, sg, 1, u_at(g, {1, 0}), standard_assignment()));
}
