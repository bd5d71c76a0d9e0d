#include <random>

#include <gtest/gtest.h>

#include "fibharm/exact.hpp"

using namespace fibharm;

TEST(Rational, NormalizesOnConstruction) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
}

TEST(Rational, DivisionByZero) {
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
    EXPECT_THROW(Rational(0).inv(), DivisionByZero);
    EXPECT_THROW(Rational(3) / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational(0).pow(-2), DivisionByZero);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(-2, 3) * Rational(9, 4), Rational(-3, 2));
    EXPECT_EQ(Rational(2, 3).inv(), Rational(3, 2));
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "3/4", "-12/5", "123456789012345678901234567891/2"}) {
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    }
    EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> d(-9, 9);
    auto draw = [&] {
        long q = 0;
        while (q == 0) q = d(rng);
        return Rational(d(rng), q);
    };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.inv(), Rational(1));
        EXPECT_EQ(rational_neg(rational_neg(a)), a);
        EXPECT_EQ(rational_add(a, rational_neg(a)), Rational(0));
        EXPECT_EQ(Rational::parse(a.to_string()), a);
    }
}

TEST(LogValue, Rendering) {
    EXPECT_EQ(LogValue().to_string(), "0");
    EXPECT_EQ(LogValue(Rational(3, 2)).to_string(), "3/2");
    EXPECT_EQ(LogValue::ln2().to_string(), "(1)*ln2");
    EXPECT_EQ(LogValue(Rational(2), Rational(-2)).to_string(), "2 + (-2)*ln2");
    EXPECT_EQ(LogValue(Rational(0), Rational(-1, 3)).to_string(), "(-1/3)*ln2");
}

TEST(LogValue, ParseRoundTrip) {
    for (const LogValue& v : {LogValue(), LogValue(Rational(-5, 7)), LogValue(Rational(0), Rational(4)),
                              LogValue(Rational(1, 2), Rational(-3, 8))}) {
        EXPECT_EQ(LogValue::parse(v.to_string()), v);
    }
}

TEST(LogValue, DegreeOverflow) {
    const LogValue l = LogValue::ln2();
    EXPECT_THROW(logvalue_mul(l, l), DegreeOverflow);
    EXPECT_THROW(LogValue(1) / l, DegreeOverflow);
    EXPECT_EQ(logvalue_mul(l, LogValue(Rational(3))), LogValue(Rational(0), Rational(3)));
    EXPECT_EQ(logvalue_scale(Rational(1, 2), LogValue(Rational(4), Rational(2))), LogValue(Rational(2), Rational(1)));
}

TEST(LogValue, CoefficientwiseEquality) {
    EXPECT_NE(LogValue(Rational(1)), LogValue::ln2());
    EXPECT_EQ(logvalue_add(LogValue(Rational(1), Rational(2)), LogValue(Rational(-1), Rational(-2))), LogValue());
}

TEST(HalfInt, ParseAndClassify) {
    EXPECT_EQ(HalfInt::parse("-3/2").twice(), -3);
    EXPECT_EQ(HalfInt::parse("4").twice(), 8);
    EXPECT_EQ(HalfInt::parse("6/2").twice(), 6);
    EXPECT_THROW(HalfInt::parse("1/3"), DomainError);
    EXPECT_EQ(half(-3).to_string(), "-3/2");
    EXPECT_EQ(HalfInt(5).to_string(), "5");
    EXPECT_EQ(halfint_classify(half(-3)), HalfIntClass::NegativeHalf);
    EXPECT_EQ(halfint_classify(half(1)), HalfIntClass::PositiveHalf);
    EXPECT_EQ(halfint_classify(HalfInt(0)), HalfIntClass::Zero);
    EXPECT_EQ(halfint_classify(HalfInt(-2)), HalfIntClass::NegInteger);
    EXPECT_EQ(halfint_classify(HalfInt(2)), HalfIntClass::NonNegInteger);
    EXPECT_THROW(half(3).to_integer(), DomainError);
    EXPECT_EQ((half(3) + half(1)).to_integer(), 2);
}
