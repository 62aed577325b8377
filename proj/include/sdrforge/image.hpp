#pragma once

#include <cstdint>
#include <vector>

namespace sdrforge {

// Dense row-major image, `Channels` interleaved samples per pixel.
template <typename T, int Channels>
struct Image {
    int width = 0;
    int height = 0;
    std::vector<T> data;  // size = width * height * Channels

    Image() = default;
    Image(int w, int h, T fill = T{})
        : width(w), height(h),
          data(static_cast<size_t>(w) * h * Channels, fill) {}

    T& at(int x, int y, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * Channels + c];
    }
    const T& at(int x, int y, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * Channels + c];
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    bool operator==(const Image&) const = default;
};

using ImageRgb8 = Image<uint8_t, 3>;
using ImageGray16 = Image<uint16_t, 1>;
using ImageGrayF = Image<double, 1>;

inline uint8_t to_byte(double v) {
    if (v <= 0.0) return 0;
    if (v >= 1.0) return 255;
    return static_cast<uint8_t>(v * 255.0 + 0.5);
}

}  // namespace sdrforge
