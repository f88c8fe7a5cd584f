#include "skewmm/errors.hpp"
#include "skewmm/rational.hpp"

#include <gtest/gtest.h>

namespace skewmm {
namespace {

TEST(Rational, CanonicalText)
{
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_EQ(to_string(Rational(-7)), "-7");
    Rational x(6, 4);
    x.canonicalize();
    EXPECT_EQ(to_string(x), "3/2");
    EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
}

TEST(Rational, ParseAcceptsCanonical)
{
    for (const char* s : {"0", "1", "-1", "12", "3/2", "-5/7", "123456789012345678901234567890"}) {
        const auto r = parse_canonical_rational(s);
        ASSERT_TRUE(r.has_value()) << s;
        EXPECT_EQ(to_string(*r), s);
    }
}

TEST(Rational, ParseRejectsNonCanonical)
{
    for (const char* s : {"", "+1", "-0", "01", "3/1", "2/4", "1/-2", "0/5", "1/0", " 1", "1 ",
                          "1.5", "-", "/2", "1/", "1//2", "--1", "0x1", "1/02"}) {
        EXPECT_FALSE(parse_canonical_rational(s).has_value()) << '"' << s << '"';
    }
}

TEST(Rational, InverseOfZeroThrows)
{
    EXPECT_THROW(inverse(Rational(0)), DivisionByZero);
    EXPECT_EQ(inverse(Rational(-2, 3)), Rational(-3, 2));
}

TEST(Rational, ParseSerializeRoundtripProperty)
{
    // Hand-rolled sweep over small fractions in lowest terms.
    for (int num = -30; num <= 30; ++num)
        for (int den = 1; den <= 12; ++den) {
            Rational x(num, den);
            x.canonicalize();
            const std::string s = to_string(x);
            const auto back = parse_canonical_rational(s);
            ASSERT_TRUE(back.has_value()) << s;
            EXPECT_EQ(*back, x);
        }
}

}  // namespace
}  // namespace skewmm
