#include "sdrforge/randomizer.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "sdrforge/errors.hpp"

namespace sdrforge {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kMaxCameraAttempts = 8;  // re-samples after the first try

Vec3 uniform_in_flight_box(rng::Stream& s) {
    return {s.uniform(FlightBox::x_min, FlightBox::x_max),
            s.uniform(FlightBox::y_min, FlightBox::y_max),
            s.uniform(FlightBox::z_min, FlightBox::z_max)};
}

struct BezierPath {
    Vec3 p0, p1, p2, p3;

    Vec3 at(double t) const {
        double u = 1.0 - t;
        return p0 * (u * u * u) + p1 * (3 * u * u * t) + p2 * (3 * u * t * t) +
               p3 * (t * t * t);
    }
    Vec3 tangent(double t) const {
        double u = 1.0 - t;
        return (p1 - p0) * (3 * u * u) + (p2 - p1) * (6 * u * t) +
               (p3 - p2) * (3 * t * t);
    }
};

Quat heading_from_velocity(const Vec3& v) {
    if (std::abs(v.x) < 1e-12 && std::abs(v.y) < 1e-12) return Quat{};
    return Quat::yaw(std::atan2(v.y, v.x));
}

// Triangle wave in [-1, 1] with period 1.
double triangle_wave(double x) {
    double f = x - std::floor(x);
    return f < 0.5 ? 4.0 * f - 1.0 : 3.0 - 4.0 * f;
}

// Shared path machinery for drones and birds; only the purpose tag differs.
std::vector<std::vector<Pose>> swarm_like_paths(uint64_t master_seed,
                                                int64_t segment_index,
                                                int n_entities,
                                                int segment_length,
                                                rng::Purpose purpose,
                                                bool flap_scale) {
    rng::Stream s = rng::substream(master_seed, segment_index, 0, purpose);
    BezierPath path{uniform_in_flight_box(s), uniform_in_flight_box(s),
                    uniform_in_flight_box(s), uniform_in_flight_box(s)};

    // constant ring offsets keep entities apart at every frame
    double ring_radius = 2.5 + 0.3 * n_entities;
    double phase0 = s.uniform(0.0, kTwoPi);
    std::vector<double> flap_phase(n_entities, 0.0);
    for (int k = 0; k < n_entities; ++k) {
        flap_phase[k] = flap_scale ? s.uniform(0.0, 1.0) : 0.0;
    }

    std::vector<std::vector<Pose>> trajectories(n_entities);
    for (int k = 0; k < n_entities; ++k) {
        double ang = phase0 + kTwoPi * k / n_entities;
        Vec3 offset{ring_radius * std::cos(ang), ring_radius * std::sin(ang),
                    0.4 * k};
        trajectories[k].resize(segment_length);
        for (int f = 0; f < segment_length; ++f) {
            double t = segment_length > 1
                           ? static_cast<double>(f) / (segment_length - 1)
                           : 0.0;
            Pose& pose = trajectories[k][f];
            pose.translation = path.at(t) + offset;
            pose.rotation = heading_from_velocity(path.tangent(t));
            pose.scale = flap_scale
                             ? 1.0 + 0.25 * triangle_wave(f / 16.0 + flap_phase[k])
                             : 1.0;
        }
    }
    return trajectories;
}

}  // namespace

std::vector<std::vector<Pose>> generate_swarm_path(uint64_t master_seed,
                                                   int64_t segment_index,
                                                   int n_drones,
                                                   int segment_length) {
    return swarm_like_paths(master_seed, segment_index, n_drones,
                            segment_length, rng::Purpose::swarm_path, false);
}

namespace {

CameraSpec draw_camera(rng::Stream& s, const GenerationConfig& config,
                       const Vec3& swarm_centroid) {
    CameraSpec cam;
    cam.image_width = config.image_width;
    cam.image_height = config.image_height;

    double B = config.camera_bound_B;
    cam.position.x = swarm_centroid.x + s.uniform(-B, B);
    cam.position.y = swarm_centroid.y + s.uniform(-B, B);
    // altitude floor bites only when the cube reaches below ground
    double z_lo = std::max(swarm_centroid.z - B, 0.5);
    double z_hi = swarm_centroid.z + B;
    cam.position.z = s.uniform(z_lo, z_hi);

    cam.focal_length_mm = s.uniform(config.focal_min_mm, config.focal_max_mm);

    // jitter the aim point uniformly inside a sphere of radius 0.1 B
    double theta = s.uniform(0.0, kTwoPi);
    double cos_phi = s.uniform(-1.0, 1.0);
    double sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));
    double radius = 0.1 * B * std::cbrt(s.next_double());
    Vec3 jitter{radius * sin_phi * std::cos(theta),
                radius * sin_phi * std::sin(theta), radius * cos_phi};
    cam.look_at = swarm_centroid + jitter;
    return cam;
}

}  // namespace

CameraSpec sample_camera(uint64_t master_seed, int64_t segment_index,
                         int64_t frame_index, const GenerationConfig& config,
                         const Vec3& swarm_centroid) {
    rng::Stream s = rng::substream(master_seed, segment_index, frame_index,
                                   rng::Purpose::camera);
    return draw_camera(s, config, swarm_centroid);
}

EnvironmentChoice select_environment(uint64_t master_seed,
                                     int64_t segment_index,
                                     const GenerationConfig& config) {
    if (config.hdri_library.empty()) {
        throw EmptyLibrary("hdri_library is empty");
    }
    rng::Stream s = rng::substream(master_seed, segment_index, 0,
                                   rng::Purpose::environment);
    EnvironmentChoice choice;
    choice.library_index = static_cast<size_t>(
        s.uniform_int(0, static_cast<int64_t>(config.hdri_library.size()) - 1));
    choice.yaw = s.uniform(0.0, kTwoPi);
    return choice;
}

std::vector<SceneEntity> place_distractors(uint64_t master_seed,
                                           int64_t segment_index, Style style,
                                           const GenerationConfig& config,
                                           uint32_t first_instance_id) {
    if (style != Style::generic_distractors &&
        style != Style::realistic_distractors && style != Style::drones_birds) {
        throw StyleMismatch("style " + style_to_string(style) +
                            " has no distractor entities");
    }

    std::vector<SceneEntity> extras;
    if (style == Style::drones_birds) {
        rng::Stream s = rng::substream(master_seed, segment_index, 0,
                                       rng::Purpose::birds);
        int n_birds = static_cast<int>(s.uniform_int(1, 5));
        auto paths = swarm_like_paths(master_seed, segment_index, n_birds,
                                      config.segment_length,
                                      rng::Purpose::birds, true);
        auto bird_mesh = std::make_shared<const Mesh>(make_bird());
        for (int k = 0; k < n_birds; ++k) {
            SceneEntity e;
            e.mesh = bird_mesh;
            e.category = Category::bird;
            e.trajectory = std::move(paths[k]);
            e.instance_id = first_instance_id + static_cast<uint32_t>(k);
            extras.push_back(std::move(e));
        }
        return extras;
    }

    rng::Stream s = rng::substream(master_seed, segment_index, 0,
                                   rng::Purpose::distractors);
    int count = static_cast<int>(s.uniform_int(3, 12));
    // 120 m box around the flight volume, grounded at z = 0
    const double half = 60.0;
    const Vec3 center{0.0, 0.0, (FlightBox::z_min + FlightBox::z_max) / 2};
    for (int k = 0; k < count; ++k) {
        Rgb color{s.next_double(), s.next_double(), s.next_double()};
        Mesh mesh;
        double scale;
        if (style == Style::generic_distractors) {
            auto kind = static_cast<PrimitiveKind>(s.uniform_int(0, 3));
            double size = s.uniform(0.3, 3.0);
            mesh = make_primitive(kind, size, color);
            scale = 1.0;
        } else {
            auto kind = static_cast<PropKind>(s.uniform_int(0, 3));
            mesh = make_prop(kind, color);
            scale = s.uniform(0.8, 1.25);
        }
        Pose pose;
        pose.translation = {center.x + s.uniform(-half, half),
                            center.y + s.uniform(-half, half),
                            std::max(0.0, center.z + s.uniform(-half, half))};
        pose.rotation = Quat::yaw(s.uniform(0.0, kTwoPi));
        pose.scale = scale;

        SceneEntity e;
        e.mesh = std::make_shared<const Mesh>(std::move(mesh));
        e.category = Category::distractor;
        e.trajectory.assign(config.segment_length, pose);
        e.instance_id = first_instance_id + static_cast<uint32_t>(k);
        extras.push_back(std::move(e));
    }
    return extras;
}

namespace {

enum class BlendMode { normal = 0, multiply, screen, overlay };

double apply_blend(BlendMode mode, double dst, double src) {
    switch (mode) {
        case BlendMode::normal: return src;
        case BlendMode::multiply: return dst * src;
        case BlendMode::screen: return 1.0 - (1.0 - dst) * (1.0 - src);
        case BlendMode::overlay:
            return dst < 0.5 ? 2.0 * dst * src
                             : 1.0 - 2.0 * (1.0 - dst) * (1.0 - src);
    }
    return src;
}

struct Shape {
    int kind;  // 0 ellipse, 1 rectangle, 2 triangle
    double ax, ay, bx, by, cx, cy;  // semantics depend on kind
    Rgb color;
    BlendMode blend;

    bool contains(double x, double y) const {
        switch (kind) {
            case 0: {  // ellipse: center (ax,ay), radii (bx,by)
                double dx = (x - ax) / bx, dy = (y - ay) / by;
                return dx * dx + dy * dy <= 1.0;
            }
            case 1:  // rectangle: corners (ax,ay)-(bx,by), normalized
                return x >= ax && x <= bx && y >= ay && y <= by;
            default: {  // triangle, sign-consistent half planes
                auto side = [x, y](double x0, double y0, double x1, double y1) {
                    return (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0);
                };
                double d0 = side(ax, ay, bx, by);
                double d1 = side(bx, by, cx, cy);
                double d2 = side(cx, cy, ax, ay);
                bool has_neg = d0 < 0 || d1 < 0 || d2 < 0;
                bool has_pos = d0 > 0 || d1 > 0 || d2 > 0;
                return !(has_neg && has_pos);
            }
        }
    }
};

}  // namespace

ImageRgb8 synthesize_random_background(uint64_t master_seed,
                                       int64_t frame_index, int width,
                                       int height) {
    rng::Stream s = rng::substream(master_seed, 0, frame_index,
                                   rng::Purpose::background);
    int palette_size = static_cast<int>(s.uniform_int(3, 6));
    std::vector<Rgb> palette(palette_size);
    for (auto& c : palette) {
        c = {s.next_double(), s.next_double(), s.next_double()};
    }

    std::vector<Rgb> canvas(static_cast<size_t>(width) * height, palette[0]);
    int shape_count = static_cast<int>(s.uniform_int(5, 50));
    double w = width, h = height;
    for (int i = 0; i < shape_count; ++i) {
        Shape shape;
        shape.kind = static_cast<int>(s.uniform_int(0, 2));
        shape.color = palette[s.uniform_int(0, palette_size - 1)];
        shape.blend = static_cast<BlendMode>(s.uniform_int(0, 3));
        switch (shape.kind) {
            case 0:
                shape.ax = s.uniform(0, w);
                shape.ay = s.uniform(0, h);
                shape.bx = s.uniform(0.05, 0.45) * w;
                shape.by = s.uniform(0.05, 0.45) * h;
                break;
            case 1: {
                double x0 = s.uniform(0, w), x1 = s.uniform(0, w);
                double y0 = s.uniform(0, h), y1 = s.uniform(0, h);
                shape.ax = std::min(x0, x1);
                shape.bx = std::max(x0, x1);
                shape.ay = std::min(y0, y1);
                shape.by = std::max(y0, y1);
                break;
            }
            default:
                shape.ax = s.uniform(0, w);
                shape.ay = s.uniform(0, h);
                shape.bx = s.uniform(0, w);
                shape.by = s.uniform(0, h);
                shape.cx = s.uniform(0, w);
                shape.cy = s.uniform(0, h);
                break;
        }
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                if (!shape.contains(x + 0.5, y + 0.5)) continue;
                Rgb& dst = canvas[static_cast<size_t>(y) * width + x];
                dst.r = std::clamp(apply_blend(shape.blend, dst.r, shape.color.r), 0.0, 1.0);
                dst.g = std::clamp(apply_blend(shape.blend, dst.g, shape.color.g), 0.0, 1.0);
                dst.b = std::clamp(apply_blend(shape.blend, dst.b, shape.color.b), 0.0, 1.0);
            }
        }
    }

    ImageRgb8 out(width, height);
    for (size_t i = 0; i < canvas.size(); ++i) {
        out.data[i * 3 + 0] = to_byte(canvas[i].r);
        out.data[i * 3 + 1] = to_byte(canvas[i].g);
        out.data[i * 3 + 2] = to_byte(canvas[i].b);
    }
    return out;
}

EnvironmentLibrary load_environment_library(const GenerationConfig& config,
                                            const std::string& base_dir) {
    EnvironmentLibrary lib;
    for (const auto& entry : config.hdri_library) {
        std::filesystem::path p(entry);
        if (p.is_relative() && !base_dir.empty()) {
            p = std::filesystem::path(base_dir) / p;
        }
        lib.push_back(std::make_shared<const HdriEnvironment>(
            load_hdri(p.string())));
    }
    return lib;
}

namespace {

// The five stand-in drone meshes, built once and shared by every frame.
const std::vector<std::shared_ptr<const Mesh>>& drone_mesh_pool() {
    static const auto pool = [] {
        std::vector<std::shared_ptr<const Mesh>> meshes;
        for (int i = 0; i < 5; ++i) {
            meshes.push_back(std::make_shared<const Mesh>(make_drone(i)));
        }
        return meshes;
    }();
    return pool;
}

bool any_drone_in_view(const std::vector<PlacedEntity>& entities,
                       const CameraSpec& cam) {
    CameraBasis basis = CameraBasis::from(cam);
    for (const auto& e : entities) {
        if (e.category != Category::drone) continue;
        Projected p = project(e.pose.translation, cam, basis);
        if (p.behind) continue;
        if (p.x >= 0 && p.x < cam.image_width && p.y >= 0 &&
            p.y < cam.image_height) {
            return true;
        }
    }
    return false;
}

}  // namespace

SceneFrame build_frame(uint64_t master_seed, int64_t global_frame_index,
                       const GenerationConfig& config,
                       const EnvironmentLibrary& library) {
    SceneFrame frame;
    frame.frame_index = global_frame_index;
    frame.segment_index = global_frame_index / config.segment_length;
    int64_t seg = frame.segment_index;
    int frame_in_segment =
        static_cast<int>(global_frame_index % config.segment_length);

    auto trace = [&frame](const char* tag, uint64_t key) {
        frame.rng_trace.emplace_back(tag, key);
    };

    // swarm size and model mix are per-segment draws
    rng::Stream count_stream =
        rng::substream(master_seed, seg, 0, rng::Purpose::drone_count);
    trace("drone_count",
          rng::derive_key(master_seed, seg, 0, rng::Purpose::drone_count));
    int n_drones = static_cast<int>(
        count_stream.uniform_int(config.drones_min, config.drones_max));

    auto paths = generate_swarm_path(master_seed, seg, n_drones,
                                     config.segment_length);
    trace("swarm_path",
          rng::derive_key(master_seed, seg, 0, rng::Purpose::swarm_path));

    rng::Stream model_stream =
        rng::substream(master_seed, seg, 0, rng::Purpose::drone_model);
    trace("drone_model",
          rng::derive_key(master_seed, seg, 0, rng::Purpose::drone_model));

    const auto& pool = drone_mesh_pool();
    Vec3 centroid{0, 0, 0};
    for (int k = 0; k < n_drones; ++k) {
        PlacedEntity e;
        e.mesh = pool[static_cast<size_t>(model_stream.uniform_int(0, 4))];
        e.category = Category::drone;
        e.pose = paths[k][frame_in_segment];
        e.instance_id = static_cast<uint32_t>(k + 1);
        centroid += e.pose.translation;
        frame.entities.push_back(std::move(e));
    }
    centroid = centroid / static_cast<double>(n_drones);

    if (config.style == Style::drones_birds ||
        config.style == Style::generic_distractors ||
        config.style == Style::realistic_distractors) {
        auto extras = place_distractors(master_seed, seg, config.style, config,
                                        static_cast<uint32_t>(n_drones + 1));
        trace("extras", rng::derive_key(master_seed, seg, 0,
                                        config.style == Style::drones_birds
                                            ? rng::Purpose::birds
                                            : rng::Purpose::distractors));
        for (const auto& entity : extras) {
            PlacedEntity e;
            e.mesh = entity.mesh;
            e.category = entity.category;
            e.pose = entity.trajectory[frame_in_segment];
            e.instance_id = entity.instance_id;
            frame.entities.push_back(std::move(e));
        }
    }

    if (config.style == Style::random_backgrounds) {
        frame.background_image = std::make_shared<const ImageRgb8>(
            synthesize_random_background(master_seed, global_frame_index,
                                         config.image_width,
                                         config.image_height));
        trace("background", rng::derive_key(master_seed, 0, global_frame_index,
                                            rng::Purpose::background));
    } else {
        EnvironmentChoice choice =
            select_environment(master_seed, seg, config);
        trace("environment",
              rng::derive_key(master_seed, seg, 0, rng::Purpose::environment));
        if (choice.library_index >= library.size()) {
            throw EmptyLibrary("environment library not loaded (need index " +
                               std::to_string(choice.library_index) + ")");
        }
        frame.environment = std::make_shared<const HdriEnvironment>(
            library[choice.library_index]->with_yaw(choice.yaw));
    }

    // camera: retry a bounded number of times until a drone is on screen
    trace("camera", rng::derive_key(master_seed, seg, global_frame_index,
                                    rng::Purpose::camera));
    rng::Stream camera_stream = rng::substream(
        master_seed, seg, global_frame_index, rng::Purpose::camera);
    frame.target_visible = false;
    for (int attempt = 0; attempt <= kMaxCameraAttempts; ++attempt) {
        frame.camera = draw_camera(camera_stream, config, centroid);
        if (any_drone_in_view(frame.entities, frame.camera)) {
            frame.target_visible = true;
            break;
        }
    }
    return frame;
}

std::string category_to_string(Category c) {
    switch (c) {
        case Category::drone: return "drone";
        case Category::bird: return "bird";
        case Category::distractor: return "distractor";
    }
    return "?";
}

}  // namespace sdrforge
