#include <catch2/catch_amalgamated.hpp>

#include <specalg/half_integer.hpp>

using specalg::HalfInteger;

TEST_CASE("construction from doubled value")
{
    const HalfInteger h = HalfInteger::from_twice(3);
    CHECK(h.twice() == 3);
    CHECK(h.value() == 1.5);
    CHECK(h.is_half_odd());
    CHECK_FALSE(h.is_integer());

    const HalfInteger w = HalfInteger::from_twice(-4);
    CHECK(w.value() == -2.0);
    CHECK(w.is_integer());
    CHECK_FALSE(w.is_half_odd());
}

TEST_CASE("exact conversion from double")
{
    CHECK(HalfInteger::from_double(1.5));
    CHECK(HalfInteger::from_double(1.5)->twice() == 3);
    CHECK(HalfInteger::from_double(-0.5)->twice() == -1);
    CHECK(HalfInteger::from_double(7.0)->twice() == 14);
    CHECK(HalfInteger::from_double(0.0)->twice() == 0);

    SECTION("no tolerance is applied")
    {
        CHECK_FALSE(HalfInteger::from_double(1.4999999999));
        CHECK_FALSE(HalfInteger::from_double(1.5000000001));
        CHECK_FALSE(HalfInteger::from_double(0.2));
        CHECK_FALSE(HalfInteger::from_double(1.0 / 3.0));
    }
    SECTION("non-finite and out-of-range rejected")
    {
        CHECK_FALSE(HalfInteger::from_double(std::numeric_limits<double>::infinity()));
        CHECK_FALSE(HalfInteger::from_double(std::numeric_limits<double>::quiet_NaN()));
        CHECK_FALSE(HalfInteger::from_double(1e16));
    }
}

TEST_CASE("parsing")
{
    CHECK(HalfInteger::parse("3/2")->twice() == 3);
    CHECK(HalfInteger::parse("-1/2")->twice() == -1);
    CHECK(HalfInteger::parse("2")->twice() == 4);
    CHECK(HalfInteger::parse("-7")->twice() == -14);
    CHECK(HalfInteger::parse("1.5")->twice() == 3);
    CHECK(HalfInteger::parse("0.5")->twice() == 1);
    CHECK(HalfInteger::parse("4/2")->twice() == 4);

    CHECK_FALSE(HalfInteger::parse(""));
    CHECK_FALSE(HalfInteger::parse("x"));
    CHECK_FALSE(HalfInteger::parse("3/4"));
    CHECK_FALSE(HalfInteger::parse("/2"));
    CHECK_FALSE(HalfInteger::parse("1.2"));
    CHECK_FALSE(HalfInteger::parse("1.5x"));
}

TEST_CASE("arithmetic stays exact")
{
    const HalfInteger a = HalfInteger::from_twice(3);   // 3/2
    const HalfInteger b = HalfInteger::from_twice(-1);  // -1/2
    CHECK((a + b).twice() == 2);
    CHECK((a - b).twice() == 4);
    CHECK((-a).twice() == -3);
    CHECK((a + std::int64_t{2}).twice() == 7);
    CHECK((a - std::int64_t{3}).twice() == -3);

    // Ladder orbit {nu, nu-1, ..., 1-nu} closes exactly on the negated top.
    HalfInteger nu = HalfInteger::from_twice(5);  // 5/2
    HalfInteger bottom = nu;
    for (int k = 0; k + 1 < nu.twice(); ++k) {
        bottom = bottom - std::int64_t{1};
    }
    CHECK(bottom == -nu + std::int64_t{1});
}

TEST_CASE("ordering and equality")
{
    CHECK(HalfInteger::from_twice(1) < HalfInteger::from_twice(2));
    CHECK(HalfInteger::from_twice(-3) < HalfInteger::from_twice(-1));
    CHECK(HalfInteger::from_twice(4) == HalfInteger::from_twice(4));
    CHECK(HalfInteger::from_twice(4) != HalfInteger::from_twice(3));
}

TEST_CASE("string form")
{
    CHECK(HalfInteger::from_twice(4).str() == "2");
    CHECK(HalfInteger::from_twice(3).str() == "3/2");
    CHECK(HalfInteger::from_twice(-1).str() == "-1/2");
    CHECK(HalfInteger::from_twice(0).str() == "0");
}

TEST_CASE("value round-trips through double exactly")
{
    for (std::int64_t t = -41; t <= 41; ++t) {
        const HalfInteger h = HalfInteger::from_twice(t);
        const auto back = HalfInteger::from_double(h.value());
        REQUIRE(back);
        CHECK(*back == h);
    }
}
