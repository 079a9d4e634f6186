#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "wf/tensor.hpp"

namespace wf {

// 8-bit PNG writer emitting stored deflate blocks: no external compressor,
// identical bytes everywhere. channels must be 1 (gray) or 3 (RGB).
void write_png8(const std::filesystem::path& path, int height, int width, int channels,
                const std::vector<std::uint8_t>& pixels);

// Gamma-2.2 preview of a linear [H,W,1|3] tensor, clipped to [0,1].
void write_png_preview(const std::filesystem::path& path, const Tensor& linear);

// Linear scaling preview: maps [0, max(t)] to [0,255]; used for heatmaps.
void write_png_scaled(const std::filesystem::path& path, const Tensor& t);

} // namespace wf
