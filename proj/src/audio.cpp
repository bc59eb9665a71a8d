#include "sourceid/audio.hpp"

#include <cmath>
#include <cstdint>

#include "sourceid/errors.hpp"

namespace sourceid {

AudioClip normalize_peak(const AudioClip& clip) {
  double peak = 0.0;
  for (double s : clip.samples) peak = std::max(peak, std::fabs(s));
  if (peak == 0.0)
    throw DataError("normalize_peak: clip '" + clip.id +
                    "' is silent (all-zero), cannot normalize");
  AudioClip out = clip;
  for (double& s : out.samples) s /= peak;
  return out;
}

std::vector<double> resample_linear(const std::vector<double>& in,
                                    int src_rate, int dst_rate) {
  if (src_rate == dst_rate || in.empty()) return in;
  const std::int64_t n_out = std::llround(
      static_cast<double>(in.size()) * dst_rate / src_rate);
  std::vector<double> out(static_cast<std::size_t>(n_out));
  const double step = static_cast<double>(src_rate) / dst_rate;
  for (std::int64_t i = 0; i < n_out; ++i) {
    double pos = i * step;
    auto idx = static_cast<std::size_t>(pos);
    if (idx >= in.size() - 1) {
      out[i] = in.back();
      continue;
    }
    double frac = pos - static_cast<double>(idx);
    out[i] = in[idx] + frac * (in[idx + 1] - in[idx]);
  }
  return out;
}

}  // namespace sourceid
