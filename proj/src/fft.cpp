#include "qpsim/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <new>
#include <stdexcept>
#include <utility>

namespace qpsim {

static_assert(sizeof(cplx) == sizeof(fftw_complex), "std::complex<double> must alias fftw_complex");

FftBuffer::FftBuffer(std::size_t count) : size_(count) {
  if (count == 0) return;
  data_ = reinterpret_cast<cplx*>(fftw_alloc_complex(count));
  if (data_ == nullptr) throw std::bad_alloc();
  std::memset(static_cast<void*>(data_), 0, count * sizeof(cplx));
}

FftBuffer::~FftBuffer() {
  if (data_ != nullptr) fftw_free(data_);
}

FftBuffer::FftBuffer(FftBuffer&& other) noexcept
    : data_(std::exchange(other.data_, nullptr)), size_(std::exchange(other.size_, 0)) {}

FftBuffer& FftBuffer::operator=(FftBuffer&& other) noexcept {
  if (this != &other) {
    if (data_ != nullptr) fftw_free(data_);
    data_ = std::exchange(other.data_, nullptr);
    size_ = std::exchange(other.size_, 0);
  }
  return *this;
}

namespace {

// The FFTW planner is not re-entrant; execution of an existing plan on new
// arrays is. Plans are created once per (n, direction) and kept for the
// process lifetime.
fftw_plan plan_for(int n, FftDirection direction) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> plans;

  const int sign = direction == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;

  FftBuffer scratch(static_cast<std::size_t>(n) * n);
  auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_2d(n, n, p, p, sign, FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  plans.emplace(key, plan);
  return plan;
}

}  // namespace

void fft2(FftBuffer& buffer, int n, FftDirection direction) {
  if (buffer.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("fft2: buffer size does not match n*n");
  }
  auto* p = reinterpret_cast<fftw_complex*>(buffer.data());
  fftw_execute_dft(plan_for(n, direction), p, p);
}

}  // namespace qpsim
