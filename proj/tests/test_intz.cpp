#include "doctest.h"

#include "affchar/intz.hpp"

#include <limits>
#include <sstream>

using namespace affchar;

TEST_CASE("small-value arithmetic and comparisons") {
  Zint a = 7, b = -3;
  CHECK((a + b).as_int64() == 4);
  CHECK((a - b).as_int64() == 10);
  CHECK((a * b).as_int64() == -21);
  CHECK((-a).as_int64() == -7);
  CHECK(Zint().is_zero());
  CHECK(Zint(0).sign() == 0);
  CHECK(b.sign() == -1);
  CHECK(a.sign() == 1);
  CHECK(b < a);
  CHECK(a <= a);
  CHECK(a != b);
  CHECK(Zint(4) == Zint(4));
}

TEST_CASE("overflow escalates, shrinking demotes back") {
  const long long big = std::numeric_limits<long long>::max();
  Zint x = big;
  CHECK(x.fits_int64());
  Zint y = x + Zint(1);  // crosses the int64 boundary
  CHECK(!y.fits_int64());
  CHECK(y.str() == "9223372036854775808");
  CHECK_THROWS_AS(y.as_int64(), std::overflow_error);
  Zint z = y - Zint(1);  // fits again, must demote
  CHECK(z.fits_int64());
  CHECK(z == x);

  Zint p = Zint(big) * Zint(big);
  CHECK(!p.fits_int64());
  CHECK(p > x);
  CHECK(p.divexact(Zint(big)) == Zint(big));
  CHECK(p.divexact(p) == Zint(1));
}

TEST_CASE("copies are independent across the escalation boundary") {
  Zint y = Zint(std::numeric_limits<long long>::max()) + Zint(1);
  Zint c = y;
  c += Zint(1);
  CHECK(c != y);
  Zint moved = std::move(c);
  CHECK(moved.str() == "9223372036854775809");
}

TEST_CASE("exact division guards its contract") {
  CHECK(Zint(84).divexact(Zint(-12)) == Zint(-7));
  CHECK_THROWS_AS(Zint(5).divexact(Zint(2)), std::domain_error);
  CHECK_THROWS_AS(Zint(5).divexact(Zint(0)), std::domain_error);
  CHECK(Zint(0).divexact(Zint(9)).is_zero());
}

TEST_CASE("printing matches str()") {
  std::ostringstream os;
  os << Zint(-42);
  CHECK(os.str() == "-42");
  CHECK(Zint(0).str() == "0");
}
