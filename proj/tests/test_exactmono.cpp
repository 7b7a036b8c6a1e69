#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <padicfun/laurent.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/rational.hpp>

using namespace padicfun;

namespace
{

MonomialValue mv(const char *text)
{
    return MonomialValue::parse(text);
}

MonomialValue q_half(int doubled)
{
    return MonomialValue::symbol(symbols::q, HalfInt::from_doubled(doubled));
}

// Random monomial over a small symbol pool, half exponents allowed.
MonomialValue random_mv(std::mt19937_64 &rng)
{
    static const std::vector<std::string> pool{"q", "M", "W", "a", "b"};
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5), ex(-4, 4);
    int c = 0;
    while (c == 0) {
        c = num(rng);
    }
    SymbolExponents e;
    for (const auto &s : pool) {
        e[s] = ex(rng);
    }
    return MonomialValue(Rational(c, den(rng)), e);
}

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(HalfInt, RoundTrip)
{
    EXPECT_EQ(HalfInt::parse("1/2").doubled, 1);
    EXPECT_EQ(HalfInt::parse("-3/2").doubled, -3);
    EXPECT_EQ(HalfInt::parse("2").doubled, 4);
    EXPECT_EQ(HalfInt::from_doubled(-3).to_string(), "-3/2");
    EXPECT_EQ(HalfInt::from_int(2).to_string(), "2");
    EXPECT_TRUE(HalfInt::from_doubled(1).is_half_odd());
    EXPECT_FALSE(HalfInt::from_doubled(2).is_half_odd());
    EXPECT_THROW(HalfInt::parse("1/3"), Error);
}

TEST(MonomialValue, MulExamples)
{
    const auto c = mv("5/3 * a^(3/2)");
    EXPECT_EQ(MonomialValue::one() * c, c);

    const auto lhs = MonomialValue(Rational(2), {{"q", 1}}) * MonomialValue(Rational(3), {{"q", 1}});
    EXPECT_EQ(lhs, MonomialValue(Rational(6), {{"q", 2}}));

    const auto cancel = MonomialValue::symbol("M") * MonomialValue::symbol("M", HalfInt::from_int(-1));
    EXPECT_TRUE(cancel.is_one());
    EXPECT_TRUE(cancel.doubled_exponents().empty());
}

TEST(MonomialValue, Invariants)
{
    EXPECT_THROW(MonomialValue(Rational(0)), Error);
    const MonomialValue m(Rational(2), {{"q", 0}, {"a", 2}});
    EXPECT_EQ(m.doubled_exponents().size(), 1u);
    EXPECT_THROW(MonomialValue(Rational(1), {{"", 2}}), Error);
}

TEST(MonomialValue, CanonicalText)
{
    EXPECT_EQ(MonomialValue::one().to_string(), "1");
    EXPECT_EQ(mv("q").to_string(), "1 * q^(2/2)");
    EXPECT_EQ(mv("3/4 * q^(1/2) * M").to_string(), "3/4 * M^(2/2) * q^(1/2)");
    EXPECT_EQ(mv("q^(-1)"), q_half(-2));
    EXPECT_EQ(mv("q^3"), q_half(6));
    EXPECT_THROW(mv("q^(1/3)"), Error);
    EXPECT_THROW(mv("0 * q"), Error);
}

TEST(MonomialValue, ParsePrintRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto m = random_mv(rng);
        EXPECT_EQ(MonomialValue::parse(m.to_string()), m);
    }
}

TEST(MonomialValue, GroupLaws)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_mv(rng), b = random_mv(rng), c = random_mv(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(a.pow(3), a * a * a);
        EXPECT_EQ(a.pow(-2), (a * a).inverse());
        EXPECT_EQ(a / b * b, a);
    }
}

TEST(MvEval, Examples)
{
    Assignment any{{"q", make_symbol_value(5)}};
    EXPECT_EQ(mv_eval(MonomialValue::one(), any), 1);

    Assignment nine{{"q", make_symbol_value(9)}};
    EXPECT_EQ(mv_eval(MonomialValue(Rational(2), {{"q", 2}}), nine), 18);
    EXPECT_EQ(mv_eval(q_half(1), nine), 3);
    EXPECT_EQ(mv_eval(q_half(-3), nine), Rational(1, 27));
}

TEST(MvEval, Errors)
{
    Assignment a{{"q", {Rational(2), std::nullopt}}};
    try {
        mv_eval(q_half(1), a);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonSquareAssignment);
    }
    // Integral exponents do not need the root.
    EXPECT_EQ(mv_eval(q_half(4), a), 4);
    try {
        mv_eval(mv("M"), a);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingSymbol);
    }
    // A declared root must square to the value.
    Assignment bad{{"q", {Rational(9), Rational(2)}}};
    EXPECT_THROW(mv_eval(q_half(1), bad), Error);
}

TEST(MvEval, Homomorphism)
{
    std::mt19937_64 rng(3);
    Assignment assign{{"q", make_symbol_value(Rational(9, 4))},
                      {"M", make_symbol_value(Rational(25))},
                      {"W", make_symbol_value(Rational(1, 16))},
                      {"a", make_symbol_value(Rational(4, 9))},
                      {"b", make_symbol_value(Rational(49))}};
    for (int i = 0; i < 300; ++i) {
        const auto a = random_mv(rng), b = random_mv(rng);
        EXPECT_EQ(mv_eval(a * b, assign), mv_eval(a, assign) * mv_eval(b, assign));
        EXPECT_EQ(mv_eval(MonomialValue(Rational(1), a.doubled_exponents()), assign) > 0, true);
    }
}

TEST(LaurentPoly, RingExamples)
{
    const std::vector<int> b2{2};
    const auto y1 = LaurentPoly::variable(b2, 0), y2 = LaurentPoly::variable(b2, 1);
    const auto one = LaurentPoly::constant(b2, MonomialValue::one());
    const auto p = y1 * y1 - y2.pow(3) + LaurentPoly::variable(b2, 0, -2);

    EXPECT_EQ(lp_mul(one, p), p);
    EXPECT_EQ((y1 + y2) * (y1 - y2), y1.pow(2) - y2.pow(2));
    EXPECT_TRUE(lp_add(p, -p).is_zero());
    EXPECT_TRUE(lp_add(p, -p).terms().empty());
}

TEST(LaurentPoly, BlockSymmetry)
{
    const auto y1 = LaurentPoly::variable({2}, 0), y2 = LaurentPoly::variable({2}, 1);
    EXPECT_TRUE(lp_is_block_symmetric(y1 + y2));
    EXPECT_FALSE(lp_is_block_symmetric(y1));

    const std::vector<int> b11{1, 1};
    const auto x1 = LaurentPoly::variable(b11, 0), x2 = LaurentPoly::variable(b11, 1);
    EXPECT_TRUE(lp_is_block_symmetric(x1 * x2 + x2 * x1));
    EXPECT_TRUE(lp_is_block_symmetric(x1));
}

TEST(LaurentPoly, BlockMismatch)
{
    const auto a = LaurentPoly::variable({2}, 0);
    const auto b = LaurentPoly::variable({1, 1}, 0);
    try {
        lp_add(a, b);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BlockMismatch);
    }
    EXPECT_THROW(lp_mul(a, b), Error);
}

TEST(LaurentPoly, ElementarySymmetric)
{
    const std::vector<int> b3{3};
    const auto y = [&](std::size_t i) { return LaurentPoly::variable(b3, i); };
    EXPECT_EQ(LaurentPoly::elementary(b3, 0, 2), y(0) * y(1) + y(0) * y(2) + y(1) * y(2));
    EXPECT_EQ(LaurentPoly::elementary(b3, 0, 0), LaurentPoly::constant(b3, MonomialValue::one()));
    for (int k = 0; k <= 3; ++k) {
        EXPECT_TRUE(LaurentPoly::elementary(b3, 0, k).is_block_symmetric());
    }
}

// Distributivity and symmetry preservation on random polynomials built from
// symmetric pieces.
TEST(LaurentPoly, RingLawsProperty)
{
    std::mt19937_64 rng(19);
    const std::vector<int> blocks{2, 1};
    std::uniform_int_distribution<int> ex(-2, 2), co(-5, 5), pick(0, 2);
    const auto random_poly = [&] {
        LaurentPoly p(blocks);
        for (int t = 0; t < 4; ++t) {
            int c = co(rng);
            if (c == 0) {
                continue;
            }
            p += LaurentPoly::monomial(blocks, MonomialValue(Rational(c), {{"a", ex(rng)}}),
                                       {ex(rng), ex(rng), ex(rng)});
        }
        return p;
    };
    const auto random_sym = [&] {
        auto p = LaurentPoly::constant(blocks, MonomialValue(Rational(1 + pick(rng))));
        for (int t = 0; t < 2; ++t) {
            const auto blk = static_cast<std::size_t>(pick(rng) % 2);
            const int k = blk == 0 ? 1 + pick(rng) % 2 : 1;
            p = p * LaurentPoly::elementary(blocks, blk, k) + LaurentPoly::elementary(blocks, 1, 1);
        }
        return p;
    };
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        const auto s = random_sym(), t = random_sym();
        ASSERT_TRUE(s.is_block_symmetric());
        EXPECT_TRUE((s * t).is_block_symmetric());
        EXPECT_TRUE((s + t).is_block_symmetric());
    }
}
