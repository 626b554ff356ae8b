#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace qpsim {

using cplx = std::complex<double>;

/// SIMD-aligned complex buffer suitable for the FFT backend. Zero-filled on
/// construction. Move-only.
class FftBuffer {
 public:
  explicit FftBuffer(std::size_t count);
  ~FftBuffer();
  FftBuffer(FftBuffer&& other) noexcept;
  FftBuffer& operator=(FftBuffer&& other) noexcept;
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;

  cplx* data() noexcept { return data_; }
  const cplx* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }
  std::span<cplx> span() noexcept { return {data_, size_}; }
  std::span<const cplx> span() const noexcept { return {data_, size_}; }
  cplx& operator[](std::size_t i) noexcept { return data_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return data_[i]; }

 private:
  cplx* data_ = nullptr;
  std::size_t size_ = 0;
};

enum class FftDirection { Forward, Inverse };

/// In-place unnormalized 2D DFT of an n x n row-major buffer.
/// Forward uses exp(-i k.x); Inverse uses exp(+i k.x) without the 1/n^2.
/// Plans are cached per size; execution is safe from concurrent threads.
void fft2(FftBuffer& buffer, int n, FftDirection direction);

}  // namespace qpsim
