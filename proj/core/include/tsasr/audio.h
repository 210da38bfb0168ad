// tsasr/audio.h

// Copyright 2026 tsasr authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TSASR_AUDIO_H_
#define TSASR_AUDIO_H_

#include <string>
#include <vector>

#include "tsasr/common.h"

namespace tsasr {

// Sampled mono waveform, amplitudes nominally in [-1, 1].
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 16000;

  int64_t NumSamples() const { return static_cast<int64_t>(samples.size()); }
  double DurationSeconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
  void Validate() const;
};

// Mean squared amplitude over the signal's own extent.
double MeanPower(const AudioSignal &signal);

// PCM 16-bit little-endian mono WAV. Samples outside [-1, 1] are clamped on
// write.
void WriteWav(const std::string &path, const AudioSignal &signal);
AudioSignal ReadWav(const std::string &path);

}  // namespace tsasr

#endif  // TSASR_AUDIO_H_
