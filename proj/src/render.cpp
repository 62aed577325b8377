#include "sdrforge/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace sdrforge {

Rgb sample_environment(const Vec3& direction, const HdriEnvironment& env) {
    return env.sample(direction);
}

Rgb shade(const Vec3& unit_normal, const Rgb& base_color,
          const HdriEnvironment& env) {
    double ambient = std::clamp(env.mean_luminance(), 0.0, 1.0);
    double k = 1.0 - ambient;
    Vec3 light = env.dominant_light_direction();
    double diffuse = std::max(0.0, dot(unit_normal, light));
    double intensity = ambient + k * diffuse;
    return {std::clamp(base_color.r * intensity, 0.0, 1.0),
            std::clamp(base_color.g * intensity, 0.0, 1.0),
            std::clamp(base_color.b * intensity, 0.0, 1.0)};
}

namespace {

constexpr double kNearPlane = 0.05;  // meters

struct CameraVertex {
    double x, y, z;  // camera space, -z forward
};

struct ScreenVertex {
    double x, y;   // pixel coordinates
    double inv_w;  // 1 / view depth; linear across the screen triangle
};

// Lighting used for frames without an environment map (random-background
// style): overhead light, mid ambient.
struct FlatLight {
    Vec3 direction{0.0, 0.0, 1.0};
    double ambient = 0.4;
};

Rgb shade_flat(const Vec3& unit_normal, const Rgb& base, const FlatLight& light) {
    double diffuse = std::max(0.0, dot(unit_normal, light.direction));
    double intensity = light.ambient + (1.0 - light.ambient) * diffuse;
    return {std::clamp(base.r * intensity, 0.0, 1.0),
            std::clamp(base.g * intensity, 0.0, 1.0),
            std::clamp(base.b * intensity, 0.0, 1.0)};
}

// Clip a camera-space triangle against z <= -near. Returns 0..4 vertices.
int clip_near(const std::array<CameraVertex, 3>& in, CameraVertex out[4]) {
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        const CameraVertex& a = in[i];
        const CameraVertex& b = in[(i + 1) % 3];
        bool a_in = a.z <= -kNearPlane;
        bool b_in = b.z <= -kNearPlane;
        if (a_in) out[n++] = a;
        if (a_in != b_in) {
            double t = (-kNearPlane - a.z) / (b.z - a.z);
            out[n++] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y),
                        -kNearPlane};
        }
    }
    return n;
}

}  // namespace

RenderOutput rasterize(const SceneFrame& frame) {
    const CameraSpec& cam = frame.camera;
    const int w = cam.image_width;
    const int h = cam.image_height;

    RenderOutput out;
    out.rgb = ImageRgb8(w, h);
    out.instance_ids = Image<uint32_t, 1>(w, h, 0);
    out.depth = Image<double, 1>(w, h, std::numeric_limits<double>::infinity());

    CameraBasis basis = CameraBasis::from(cam);
    const double pixels_per_mm = cam.image_width / cam.sensor_width_mm;
    const double focal_px = cam.focal_length_mm * pixels_per_mm;

    auto to_screen = [&](const CameraVertex& v) -> ScreenVertex {
        double depth = -v.z;
        return {w / 2.0 + v.x * focal_px / depth,
                h / 2.0 - v.y * focal_px / depth, 1.0 / depth};
    };

    FlatLight flat_light;

    // entity order is irrelevant: the depth/id rule fixes every contested
    // pixel independent of draw order
    for (const auto& entity : frame.entities) {
        const Mesh& mesh = *entity.mesh;
        std::vector<CameraVertex> cam_verts(mesh.vertices.size());
        std::vector<Vec3> world_verts(mesh.vertices.size());
        for (size_t i = 0; i < mesh.vertices.size(); ++i) {
            world_verts[i] = entity.pose.apply(mesh.vertices[i]);
            Vec3 rel = world_verts[i] - cam.position;
            cam_verts[i] = {dot(rel, basis.right), dot(rel, basis.up),
                            -dot(rel, basis.forward)};
        }

        for (size_t t = 0; t < mesh.triangles.size(); ++t) {
            const Triangle& tri = mesh.triangles[t];
            std::array<CameraVertex, 3> cv{cam_verts[tri[0]],
                                           cam_verts[tri[1]],
                                           cam_verts[tri[2]]};
            if (cv[0].z > -kNearPlane && cv[1].z > -kNearPlane &&
                cv[2].z > -kNearPlane) {
                continue;  // fully behind the near plane
            }

            // world-space normal, flipped toward the camera (double-sided)
            Vec3 a = world_verts[tri[0]];
            Vec3 n = cross(world_verts[tri[1]] - a, world_verts[tri[2]] - a);
            double n_len = norm(n);
            if (n_len < 1e-18) continue;
            n = n / n_len;
            if (dot(n, cam.position - a) < 0.0) n = -n;

            Rgb color = frame.environment
                            ? shade(n, mesh.base_color, *frame.environment)
                            : shade_flat(n, mesh.base_color, flat_light);
            uint8_t r8 = to_byte(color.r);
            uint8_t g8 = to_byte(color.g);
            uint8_t b8 = to_byte(color.b);

            CameraVertex clipped[4];
            int n_clipped = clip_near(cv, clipped);
            if (n_clipped < 3) continue;

            // fan-triangulate the clipped polygon (3 or 4 vertices)
            for (int sub = 1; sub + 1 < n_clipped; ++sub) {
                ScreenVertex s0 = to_screen(clipped[0]);
                ScreenVertex s1 = to_screen(clipped[sub]);
                ScreenVertex s2 = to_screen(clipped[sub + 1]);

                double area2 = (s1.x - s0.x) * (s2.y - s0.y) -
                               (s1.y - s0.y) * (s2.x - s0.x);
                if (std::abs(area2) < 1e-12) continue;

                int min_x = std::max(0, static_cast<int>(std::floor(
                                            std::min({s0.x, s1.x, s2.x}) - 0.5)));
                int max_x = std::min(w - 1, static_cast<int>(std::ceil(
                                                std::max({s0.x, s1.x, s2.x}))));
                int min_y = std::max(0, static_cast<int>(std::floor(
                                            std::min({s0.y, s1.y, s2.y}) - 0.5)));
                int max_y = std::min(h - 1, static_cast<int>(std::ceil(
                                                std::max({s0.y, s1.y, s2.y}))));

                for (int py = min_y; py <= max_y; ++py) {
                    double cy = py + 0.5;
                    for (int px = min_x; px <= max_x; ++px) {
                        double cx = px + 0.5;
                        double e0 = (s1.x - s0.x) * (cy - s0.y) -
                                    (s1.y - s0.y) * (cx - s0.x);
                        double e1 = (s2.x - s1.x) * (cy - s1.y) -
                                    (s2.y - s1.y) * (cx - s1.x);
                        double e2 = (s0.x - s2.x) * (cy - s2.y) -
                                    (s0.y - s2.y) * (cx - s2.x);
                        bool inside = area2 > 0
                                          ? (e0 >= 0 && e1 >= 0 && e2 >= 0)
                                          : (e0 <= 0 && e1 <= 0 && e2 <= 0);
                        if (!inside) continue;

                        double l0 = e1 / area2;  // barycentric toward s0
                        double l1 = e2 / area2;
                        double l2 = e0 / area2;
                        double inv_w =
                            l0 * s0.inv_w + l1 * s1.inv_w + l2 * s2.inv_w;
                        if (inv_w <= 0.0) continue;
                        double depth = 1.0 / inv_w;

                        double& stored = out.depth.at(px, py);
                        uint32_t& stored_id = out.instance_ids.at(px, py);
                        if (depth < stored ||
                            (depth == stored && entity.instance_id < stored_id)) {
                            stored = depth;
                            stored_id = entity.instance_id;
                            out.rgb.at(px, py, 0) = r8;
                            out.rgb.at(px, py, 1) = g8;
                            out.rgb.at(px, py, 2) = b8;
                        }
                    }
                }
            }
        }
    }

    // background: environment along the pixel ray, or the synthetic image
    for (int py = 0; py < h; ++py) {
        for (int px = 0; px < w; ++px) {
            if (out.instance_ids.at(px, py) != 0) continue;
            if (frame.background_image) {
                const ImageRgb8& bg = *frame.background_image;
                // stretch the background image over the viewport
                int bx = std::min(bg.width - 1, px * bg.width / w);
                int by = std::min(bg.height - 1, py * bg.height / h);
                out.rgb.at(px, py, 0) = bg.at(bx, by, 0);
                out.rgb.at(px, py, 1) = bg.at(bx, by, 1);
                out.rgb.at(px, py, 2) = bg.at(bx, by, 2);
            } else if (frame.environment) {
                Vec3 dir = pixel_ray_direction(cam, basis, px + 0.5, py + 0.5);
                Rgb c = frame.environment->sample(dir);
                out.rgb.at(px, py, 0) = to_byte(c.r);
                out.rgb.at(px, py, 1) = to_byte(c.g);
                out.rgb.at(px, py, 2) = to_byte(c.b);
            }
        }
    }
    return out;
}

}  // namespace sdrforge
