#include <doctest.h>

#include "teflow/date.hpp"
#include "teflow/error.hpp"

using teflow::Date;

TEST_CASE("ISO parse round-trips") {
    const Date d = Date::parse("2000-01-04", "%Y-%m-%d");
    CHECK(d.year == 2000);
    CHECK(d.month == 1);
    CHECK(d.day == 4);
    CHECK(d.iso() == "2000-01-04");
}

TEST_CASE("alternate patterns") {
    CHECK(Date::parse("04/01/2000", "%d/%m/%Y") == Date{2000, 1, 4});
    CHECK(Date::parse("20001231", "%Y%m%d") == Date{2000, 12, 31});
    CHECK(Date::parse("2000/1/4", "%Y/%m/%d") == Date{2000, 1, 4});
}

TEST_CASE("bad dates rejected") {
    CHECK_THROWS_AS(Date::parse("2000-13-01", "%Y-%m-%d"), teflow::ParseError);
    CHECK_THROWS_AS(Date::parse("2001-02-29", "%Y-%m-%d"), teflow::ParseError);
    CHECK_THROWS_AS(Date::parse("2000-01", "%Y-%m-%d"), teflow::ParseError);
    CHECK_THROWS_AS(Date::parse("2000-01-04x", "%Y-%m-%d"), teflow::ParseError);
    CHECK_THROWS_AS(Date::parse("2000-01-04", "%Y-%m"), teflow::ValidationError);
}

TEST_CASE("leap years") {
    CHECK(Date::parse("2000-02-29", "%Y-%m-%d").valid());
    CHECK(Date::parse("2004-02-29", "%Y-%m-%d").valid());
    CHECK_THROWS_AS(Date::parse("1900-02-29", "%Y-%m-%d"), teflow::ParseError);
}

TEST_CASE("serial round-trip and ordering") {
    CHECK(Date{1970, 1, 1}.serial() == 0);
    CHECK(Date{1970, 1, 2}.serial() == 1);
    CHECK(Date{2000, 1, 3}.serial() == 10959);

    Date d{1999, 12, 30};
    for (int i = 0; i < 800; ++i) {
        const Date next = d.plus_days(1);
        CHECK(next.serial() == d.serial() + 1);
        CHECK(d < next);
        CHECK(Date::from_serial(next.serial()) == next);
        d = next;
    }
}

TEST_CASE("plus_days crosses month and year boundaries") {
    CHECK(Date{2000, 12, 31}.plus_days(1) == Date{2001, 1, 1});
    CHECK(Date{2000, 2, 28}.plus_days(1) == Date{2000, 2, 29});
    CHECK(Date{2001, 2, 28}.plus_days(1) == Date{2001, 3, 1});
}
