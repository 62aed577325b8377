#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdrforge/image.hpp"

namespace sdrforge {

// PNG, any color type; converted to 8-bit RGB on read.
ImageRgb8 read_png_rgb8(const std::string& path);
void write_png_rgb8(const ImageRgb8& image, const std::string& path);

// 16-bit grayscale PNG, used for the instance-id buffer.
ImageGray16 read_png_gray16(const std::string& path);
void write_png_gray16(const ImageGray16& image, const std::string& path);

// Baseline JPEG via libjpeg. Quality in [0, 100]; 0 is clamped to libjpeg's
// minimum (1), matching "worst quality".
std::vector<uint8_t> jpeg_encode(const ImageRgb8& image, int quality);
ImageRgb8 jpeg_decode(const std::vector<uint8_t>& bytes);

// Dispatches on file extension (.png / .jpg / .jpeg).
ImageRgb8 read_image_rgb8(const std::string& path);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes);

}  // namespace sdrforge
