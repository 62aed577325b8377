#include "sdrforge/camera.hpp"

namespace sdrforge {

CameraBasis CameraBasis::from(const CameraSpec& cam) {
    CameraBasis b;
    b.forward = normalized(cam.look_at - cam.position);
    Vec3 world_up{0.0, 0.0, 1.0};
    Vec3 up = world_up - b.forward * dot(world_up, b.forward);
    if (norm(up) < 1e-9) {
        // looking straight along +-Z; any horizontal axis serves as up
        Vec3 alt{1.0, 0.0, 0.0};
        up = alt - b.forward * dot(alt, b.forward);
    }
    b.up = normalized(up);
    b.right = normalized(cross(b.forward, b.up));
    return b;
}

Projected project(const Vec3& world_point, const CameraSpec& cam,
                  const CameraBasis& basis) {
    Vec3 rel = world_point - cam.position;
    double zc = -dot(rel, basis.forward);  // camera looks down -Z
    Projected out;
    if (zc >= -1e-6) {
        out.behind = true;
        return out;
    }
    double xc = dot(rel, basis.right);
    double yc = dot(rel, basis.up);
    double pixels_per_mm = cam.image_width / cam.sensor_width_mm;
    double scale = cam.focal_length_mm * pixels_per_mm / (-zc);
    out.x = cam.image_width / 2.0 + xc * scale;
    out.y = cam.image_height / 2.0 - yc * scale;
    out.depth = -zc;
    return out;
}

Projected project(const Vec3& world_point, const CameraSpec& cam) {
    return project(world_point, cam, CameraBasis::from(cam));
}

Vec3 pixel_ray_direction(const CameraSpec& cam, const CameraBasis& basis,
                         double px, double py) {
    double pixels_per_mm = cam.image_width / cam.sensor_width_mm;
    double f = cam.focal_length_mm * pixels_per_mm;
    double a = (px - cam.image_width / 2.0) / f;
    double b = (cam.image_height / 2.0 - py) / f;
    return normalized(basis.forward + basis.right * a + basis.up * b);
}

}  // namespace sdrforge
