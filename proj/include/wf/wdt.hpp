#pragma once

// .wdt tensor container: magic "WDT1" | dtype u8 (0 = f32) | ndim u8 |
// dims ndim x u32 LE | payload row-major f32 LE. Round-trips bit-exactly.

#include <filesystem>
#include <string>

#include "wf/tensor.hpp"

namespace wf {

void write_wdt(const std::filesystem::path& path, const Tensor& t);
Tensor read_wdt(const std::filesystem::path& path);

} // namespace wf
