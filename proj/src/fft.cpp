#include "blindeq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace blindeq::fft {

namespace {

std::mutex g_plan_mutex;

fftw_plan get_plan(size_t n, int sign) {
    static std::map<std::pair<size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = cache.find({n, sign});
    if (it != cache.end()) return it->second;
    // Plan on a scratch buffer with FFTW_UNALIGNED so the plan can later be
    // executed on any caller buffer of the same size.
    fftw_complex* scratch = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    cache.emplace(std::make_pair(n, sign), p);
    return p;
}

} // namespace

void forward(std::complex<double>* data, size_t n) {
    if (n == 0) return;
    fftw_plan p = get_plan(n, FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
}

void inverse(std::complex<double>* data, size_t n) {
    if (n == 0) return;
    fftw_plan p = get_plan(n, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
    const double s = 1.0 / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) data[i] *= s;
}

} // namespace blindeq::fft
