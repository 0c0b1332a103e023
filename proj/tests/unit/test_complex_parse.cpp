#include "doctest.h"
#include "singular_weyl/complex_parse.hpp"
#include "singular_weyl/errors.hpp"

using namespace sw;

TEST_CASE("complex literals") {
  CHECK(parse_complex("0+0.5i") == Complex(0, 0.5));
  CHECK(parse_complex("-0.25") == Complex(-0.25, 0));
  CHECK(parse_complex("0.5i") == Complex(0, 0.5));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("1e-1-2i") == Complex(0.1, -2));
  CHECK(parse_complex("schrodinger") == Complex(0, 0.5));
  CHECK(parse_complex("heat") == Complex(-0.25, 0));
  for (const char* bad : {"", "abc", "1+", "i2", "0.5j", "1++2i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex(bad), DomainError);
  }
}

TEST_CASE("format round trip") {
  for (Complex z : {Complex(0, 0.5), Complex(-0.25, 0), Complex(1.5, -2.25)}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
  CHECK(format_complex(Complex(0, 0.5)) == "0+0.5i");
}
