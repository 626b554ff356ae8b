#include <bit>
#include <cstring>
#include <sstream>

#include "doctest.h"
#include "qpsim/field_io.hpp"
#include "support.hpp"

using namespace qpsim;

TEST_CASE("QPSF round trip is bit exact") {
  std::mt19937_64 rng(7);
  const Grid g = make_grid(16, 3.25);
  const VectorField f(g, test::random_values(g.size(), rng), test::random_values(g.size(), rng));
  std::stringstream buffer;
  write_qpsf(buffer, f);
  const VectorField back = read_qpsf(buffer);
  CHECK(back.grid() == g);
  CHECK(std::memcmp(back.vx().data(), f.vx().data(), g.size() * sizeof(cplx)) == 0);
  CHECK(std::memcmp(back.vy().data(), f.vy().data(), g.size() * sizeof(cplx)) == 0);
}

TEST_CASE("QPSF byte layout") {
  const Grid g = make_grid(8, 2.0);
  std::vector<cplx> vx(g.size()), vy(g.size());
  vx[0] = {1.5, -2.0};
  vy[g.size() - 1] = {0.25, 4.0};
  std::stringstream buffer;
  write_qpsf(buffer, VectorField(g, vx, vy));
  const std::string bytes = buffer.str();
  REQUIRE(bytes.size() == 4 + 4 + 8 + 2 * 64 * 16);
  CHECK(bytes.substr(0, 4) == "QPSF");

  const auto u8 = [&](std::size_t i) { return static_cast<unsigned char>(bytes[i]); };
  CHECK(u8(4) == 8);
  CHECK(u8(5) == 0);
  const auto f64_at = [&](std::size_t off) {
    std::uint64_t bits = 0;
    for (int k = 7; k >= 0; --k) bits = (bits << 8) | u8(off + k);
    return std::bit_cast<double>(bits);
  };
  CHECK(f64_at(8) == 2.0);
  CHECK(f64_at(16) == 1.5);
  CHECK(f64_at(24) == -2.0);
  const std::size_t vy_last = 16 + 64 * 16 + 63 * 16;
  CHECK(f64_at(vy_last) == 0.25);
  CHECK(f64_at(vy_last + 8) == 4.0);
}

TEST_CASE("QPSF rejects malformed input") {
  std::stringstream bad_magic("QPSX\x08\0\0\0");
  CHECK_THROWS(read_qpsf(bad_magic));

  const Grid g = make_grid(8, 1.0);
  std::stringstream buffer;
  write_qpsf(buffer, VectorField(g));
  const std::string full = buffer.str();
  std::stringstream truncated(full.substr(0, full.size() - 5));
  CHECK_THROWS(read_qpsf(truncated));
}
