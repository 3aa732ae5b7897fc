// Copyright 2026 The fovcodec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic synthetic content for tests.

#include <cstdint>
#include <random>

#include "fovc/plane.hpp"
#include "fovc/video_io.hpp"

namespace fovc::testing {

/// Uniform random plane.
FramePlane random_plane(int width, int height, std::mt19937& rng);

/// Multi-octave value noise with a roughly 1/f spectrum, scaled to [lo, hi].
PlaneArray<double> fractal_texture(int width, int height, std::uint32_t seed, int finest_scale = 2);

/// Clip whose content moves by (dx, dy) pixels per frame: frame t samples a
/// fixed canvas at (row - t dy, col - t dx), so cur(i, j) = prev(i - dy, j - dx)
/// wherever the source lies inside the frame. `detail` in [0, 1] blends white
/// noise into the fractal texture.
VideoSequence pan_clip(int width, int height, int frames, int dx, int dy, std::uint32_t seed,
                       double detail = 0.5);

/// 352x288 clip with natural-image-like statistics: fractal texture with edges,
/// a global 3 px/frame horizontal pan and a small object moving independently.
VideoSequence natural_clip(int frames = 10, std::uint32_t seed = 7);

/// Random clip: each frame is the previous one plus bounded noise.
VideoSequence random_clip(int width, int height, int frames, std::mt19937& rng);

}  // namespace fovc::testing
