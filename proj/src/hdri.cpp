#include "sdrforge/hdri.hpp"

#include <algorithm>
#include <cmath>

#include "sdrforge/errors.hpp"
#include "sdrforge/image_io.hpp"

namespace sdrforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

HdriEnvironment::HdriEnvironment(Image<float, 3> pixels, double yaw_rotation)
    : pixels_(std::move(pixels)), yaw_(yaw_rotation) {
    if (pixels_.width != 2 * pixels_.height || pixels_.height < 1) {
        throw AspectError("equirectangular map must be 2:1, got " +
                          std::to_string(pixels_.width) + "x" +
                          std::to_string(pixels_.height));
    }
    double best = -1.0;
    double sum = 0.0;
    for (int y = 0; y < pixels_.height; ++y) {
        for (int x = 0; x < pixels_.width; ++x) {
            Rgb c{pixels_.at(x, y, 0), pixels_.at(x, y, 1), pixels_.at(x, y, 2)};
            double lum = luminance(c);
            sum += lum;
            if (lum > best) {  // first occurrence wins on ties
                best = lum;
                bright_x_ = x;
                bright_y_ = y;
            }
        }
    }
    mean_luminance_ = sum / static_cast<double>(pixels_.pixel_count());
}

HdriEnvironment HdriEnvironment::with_yaw(double yaw_rotation) const {
    HdriEnvironment copy = *this;
    copy.yaw_ = yaw_rotation;
    return copy;
}

Rgb HdriEnvironment::sample(const Vec3& direction) const {
    // undo the map yaw: looking up dir in a map spun by +yaw equals looking
    // up dir rotated by -yaw in the unspun map
    double lon = std::atan2(direction.y, direction.x) - yaw_;
    double lat = std::asin(std::clamp(direction.z, -1.0, 1.0));

    double u = (lon + kPi) / kTwoPi;
    u -= std::floor(u);  // wrap to [0, 1)
    double v = (kPi / 2 - lat) / kPi;

    double fx = u * pixels_.width - 0.5;
    double fy = v * pixels_.height - 0.5;
    int x0 = static_cast<int>(std::floor(fx));
    int y0 = static_cast<int>(std::floor(fy));
    double tx = fx - x0;
    double ty = fy - y0;

    auto wrap_x = [this](int x) {
        int w = pixels_.width;
        return ((x % w) + w) % w;
    };
    auto clamp_y = [this](int y) {
        return std::clamp(y, 0, pixels_.height - 1);
    };

    Rgb out;
    const double weights[4] = {(1 - tx) * (1 - ty), tx * (1 - ty),
                               (1 - tx) * ty, tx * ty};
    const int xs[4] = {wrap_x(x0), wrap_x(x0 + 1), wrap_x(x0), wrap_x(x0 + 1)};
    const int ys[4] = {clamp_y(y0), clamp_y(y0), clamp_y(y0 + 1), clamp_y(y0 + 1)};
    for (int k = 0; k < 4; ++k) {
        out.r += weights[k] * pixels_.at(xs[k], ys[k], 0);
        out.g += weights[k] * pixels_.at(xs[k], ys[k], 1);
        out.b += weights[k] * pixels_.at(xs[k], ys[k], 2);
    }
    return out;
}

void HdriEnvironment::direction_to_texel(const Vec3& direction, int& x,
                                         int& y) const {
    double lon = std::atan2(direction.y, direction.x);
    double lat = std::asin(std::clamp(direction.z, -1.0, 1.0));
    double u = (lon + kPi) / kTwoPi;
    u -= std::floor(u);
    double v = (kPi / 2 - lat) / kPi;
    x = std::min(static_cast<int>(u * pixels_.width), pixels_.width - 1);
    y = std::min(static_cast<int>(v * pixels_.height), pixels_.height - 1);
}

Vec3 HdriEnvironment::texel_to_direction(int x, int y) const {
    double u = (x + 0.5) / pixels_.width;
    double v = (y + 0.5) / pixels_.height;
    double lon = u * kTwoPi - kPi;
    double lat = kPi / 2 - v * kPi;
    double cl = std::cos(lat);
    return {cl * std::cos(lon), cl * std::sin(lon), std::sin(lat)};
}

Vec3 HdriEnvironment::dominant_light_direction() const {
    Vec3 d = texel_to_direction(bright_x_, bright_y_);
    // spin by the map yaw so the light tracks the rotated background
    double c = std::cos(yaw_), s = std::sin(yaw_);
    return {d.x * c - d.y * s, d.x * s + d.y * c, d.z};
}

HdriEnvironment load_hdri(const std::string& path) {
    ImageRgb8 raw = read_png_rgb8(path);
    Image<float, 3> pixels(raw.width, raw.height);
    for (size_t i = 0; i < raw.data.size(); ++i) {
        pixels.data[i] = raw.data[i] / 255.0f;
    }
    return HdriEnvironment(std::move(pixels));
}

}  // namespace sdrforge
