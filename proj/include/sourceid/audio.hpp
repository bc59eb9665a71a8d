#ifndef SOURCEID_AUDIO_HPP
#define SOURCEID_AUDIO_HPP

#include <string>
#include <vector>

namespace sourceid {

// Canonical ingestion rate; all pipeline stages assume it.
constexpr int kSampleRate = 16000;
// Shortest clip the analysis grid accepts (one 32 ms window).
constexpr int kMinClipSamples = 512;

struct AudioClip {
  std::vector<double> samples;  // mono, in [-1, 1]
  int sample_rate = kSampleRate;
  std::string id;
};

// Scale so the largest |sample| is exactly 1. Division (not multiplication
// by the reciprocal) makes the op exactly idempotent in IEEE arithmetic.
// Throws DataError on an all-zero clip.
AudioClip normalize_peak(const AudioClip& clip);

// Linear-interpolation resampling. Adequate for speech-band content;
// not a polyphase design.
std::vector<double> resample_linear(const std::vector<double>& in,
                                    int src_rate, int dst_rate);

}  // namespace sourceid

#endif
