#include "hball/format.hpp"
#include "hball/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hball;

TEST(Format, RealRoundTrip) {
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
        const double v = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.uniform(-60, 60)));
        EXPECT_EQ(std::stod(format_real(v)), v);
    }
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(format_real(-2.0), "-2");
}

TEST(Format, ComplexForms) {
    EXPECT_EQ(parse_complex("1.5"), Complex(1.5, 0));
    EXPECT_EQ(parse_complex("i"), Complex(0, 1));
    EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
    EXPECT_EQ(parse_complex("2.5i"), Complex(0, 2.5));
    EXPECT_EQ(parse_complex("1-2i"), Complex(1, -2));
    EXPECT_EQ(parse_complex("1e-3+4e2i"), Complex(1e-3, 400));
    EXPECT_EQ(parse_complex(" 0.3+0.4i "), Complex(0.3, 0.4));
    EXPECT_THROW(parse_complex(""), std::invalid_argument);
    EXPECT_THROW(parse_complex("1+"), std::invalid_argument);
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
    EXPECT_THROW(parse_complex("1+2j"), std::invalid_argument);
}

TEST(Format, ComplexRoundTrip) {
    Rng rng(2);
    for (int k = 0; k < 500; ++k) {
        const Complex z(rng.uniform(-10, 10), rng.uniform(-1e-5, 1e-5));
        EXPECT_EQ(parse_complex(format_complex(z)), z);
    }
}

TEST(Format, Vectors) {
    const CVec v({Complex(0.5, -0.25), Complex(0, 1)});
    EXPECT_EQ(parse_vector(format_vector(v)), v);
    EXPECT_EQ(parse_vector("(i, 0)"), CVec({Complex(0, 1), 0.0}));
    EXPECT_EQ(parse_vector("0.3+0.4i"), CVec({Complex(0.3, 0.4)}));
    EXPECT_EQ(parse_vector("e2", 3), CVec::unit(3, 1));
    EXPECT_THROW(parse_vector("e4", 3), std::invalid_argument);
    EXPECT_THROW(parse_vector("(1, 2"), std::invalid_argument);
    EXPECT_THROW(parse_vector("()"), std::invalid_argument);
}
