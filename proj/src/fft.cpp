#include "pwlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace pwlab {
namespace fft {
namespace {

std::mutex plan_mutex;

struct PlanKey {
  int n;
  int stride;
  int loop1_count, loop1_stride;
  int loop2_count, loop2_stride;
  int sign;
  bool operator<(const PlanKey& o) const {
    return std::tie(n, stride, loop1_count, loop1_stride, loop2_count,
                    loop2_stride, sign) <
           std::tie(o.n, o.stride, o.loop1_count, o.loop1_stride, o.loop2_count,
                    o.loop2_stride, o.sign);
  }
};

// Guru plans are created once per shape with FFTW_UNALIGNED so they can be
// re-executed on any buffer via fftw_execute_dft.
fftw_plan get_plan(const PlanKey& key) {
  static std::map<PlanKey, fftw_plan>* cache = new std::map<PlanKey, fftw_plan>;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache->find(key);
  if (it != cache->end()) return it->second;

  fftw_iodim dim{key.n, key.stride, key.stride};
  fftw_iodim loops[2] = {
      {key.loop1_count, key.loop1_stride, key.loop1_stride},
      {key.loop2_count, key.loop2_stride, key.loop2_stride}};
  int howmany_rank = 0;
  if (key.loop1_count > 1 || key.loop2_count > 1) howmany_rank = 1;
  if (key.loop2_count > 1) howmany_rank = 2;

  std::vector<fftw_complex> scratch(
      static_cast<std::size_t>(key.n) * key.stride * key.loop1_count *
          key.loop2_count / (key.stride > 0 ? 1 : 1) +
      16);
  fftw_plan p = fftw_plan_guru_dft(
      1, &dim, howmany_rank, loops, scratch.data(), scratch.data(), key.sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  (*cache)[key] = p;
  return p;
}

void run_axis(const GridSpec& g, int axis, cd* data, int sign) {
  // Row-major layout: stride of axis a is the product of later extents.
  int strides[3];
  strides[2] = 1;
  strides[1] = g.n[2];
  strides[0] = g.n[1] * g.n[2];

  PlanKey key{};
  key.n = g.n[axis];
  key.stride = strides[axis];
  key.sign = sign;
  // The remaining axes become loop dimensions.
  int li = 0;
  int counts[2] = {1, 1}, lstrides[2] = {1, 1};
  for (int a = 0; a < 3; ++a) {
    if (a == axis || g.n[a] == 1) continue;
    counts[li] = g.n[a];
    lstrides[li] = strides[a];
    ++li;
  }
  key.loop1_count = counts[0];
  key.loop1_stride = lstrides[0];
  key.loop2_count = counts[1];
  key.loop2_stride = lstrides[1];

  fftw_plan p = get_plan(key);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

}  // namespace

void forward_axis(const GridSpec& g, int axis, cd* data) {
  run_axis(g, axis, data, FFTW_FORWARD);
}

void backward_axis(const GridSpec& g, int axis, cd* data) {
  run_axis(g, axis, data, FFTW_BACKWARD);
  const double scale = 1.0 / g.n[axis];
  const std::size_t total = g.size();
  for (std::size_t i = 0; i < total; ++i) data[i] *= scale;
}

void forward_periodic(const GridSpec& g, cd* data) {
  for (int a = 0; a < g.dims; ++a)
    if (g.bc[a] == Boundary::periodic) run_axis(g, a, data, FFTW_FORWARD);
}

void backward_periodic(const GridSpec& g, cd* data) {
  double scale = 1.0;
  for (int a = 0; a < g.dims; ++a) {
    if (g.bc[a] != Boundary::periodic) continue;
    run_axis(g, a, data, FFTW_BACKWARD);
    scale /= g.n[a];
  }
  if (scale != 1.0) {
    const std::size_t total = g.size();
    for (std::size_t i = 0; i < total; ++i) data[i] *= scale;
  }
}

double wavenumber(const GridSpec& g, int axis, int m) {
  const double dk = 2.0 * std::numbers::pi / g.length(axis);
  const int n = g.n[axis];
  return dk * (m <= n / 2 - 1 ? m : m - n);
}

}  // namespace fft
}  // namespace pwlab
