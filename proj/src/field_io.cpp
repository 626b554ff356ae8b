#include "qpsim/field_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qpsim {

namespace {

constexpr std::array<char, 4> kMagic = {'Q', 'P', 'S', 'F'};

template <typename UInt>
void put_le(std::ostream& out, UInt value) {
  std::array<char, sizeof(UInt)> bytes{};
  for (std::size_t i = 0; i < sizeof(UInt); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFFu);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename UInt>
UInt get_le(std::istream& in) {
  std::array<unsigned char, sizeof(UInt)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("qpsf: truncated stream");
  UInt value = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i) value |= static_cast<UInt>(bytes[i]) << (8 * i);
  return value;
}

void put_f64(std::ostream& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_le<std::uint64_t>(in)); }

void put_component(std::ostream& out, std::span<const cplx> values) {
  for (const cplx& v : values) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
}

std::vector<cplx> get_component(std::istream& in, std::size_t count) {
  std::vector<cplx> values(count);
  for (cplx& v : values) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    v = cplx(re, im);
  }
  return values;
}

}  // namespace

void write_qpsf(std::ostream& out, const VectorField& field) {
  out.write(kMagic.data(), kMagic.size());
  put_le(out, static_cast<std::uint32_t>(field.grid().n()));
  put_f64(out, field.grid().half_width());
  put_component(out, field.vx());
  put_component(out, field.vy());
  if (!out) throw std::runtime_error("qpsf: write failed");
}

void write_qpsf(const std::filesystem::path& path, const VectorField& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("qpsf: cannot open " + path.string() + " for writing");
  write_qpsf(out, field);
}

VectorField read_qpsf(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("qpsf: bad magic");
  const auto n = get_le<std::uint32_t>(in);
  const double half_width = get_f64(in);
  if (n > 1u << 15) throw std::runtime_error("qpsf: implausible grid size");
  const Grid grid = Grid::make(static_cast<int>(n), half_width);
  auto vx = get_component(in, grid.size());
  auto vy = get_component(in, grid.size());
  return VectorField(grid, std::move(vx), std::move(vy));
}

VectorField read_qpsf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("qpsf: cannot open " + path.string());
  return read_qpsf(in);
}

}  // namespace qpsim
