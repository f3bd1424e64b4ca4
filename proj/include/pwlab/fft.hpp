#pragma once

#include <vector>

#include "pwlab/grid.hpp"

namespace pwlab {

// Thin wrapper over FFTW with a process-wide plan cache. Plan creation is
// serialized internally; execution on distinct buffers is concurrency-safe.
namespace fft {

// In-place unnormalized forward / normalized (1/N) backward transform along
// `axis` of a row-major complex array shaped like `g`.
void forward_axis(const GridSpec& g, int axis, cd* data);
void backward_axis(const GridSpec& g, int axis, cd* data);

// Transforms over all *periodic* axes of the grid at once.
void forward_periodic(const GridSpec& g, cd* data);
void backward_periodic(const GridSpec& g, cd* data);

// Angular wavenumber of mode m on a periodic axis (FFT storage order).
// The Nyquist mode maps to -n/2 * 2*pi/L; first-derivative tables zero it.
double wavenumber(const GridSpec& g, int axis, int m);

}  // namespace fft
}  // namespace pwlab
