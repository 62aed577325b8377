#include "sdrforge/mesh.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdrforge/errors.hpp"

namespace sdrforge {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kSegments = 16;  // fixed tessellation, keeps outputs exact

void append_mesh(Mesh& dst, const Mesh& src, const Vec3& offset,
                 const Vec3& scale) {
    uint32_t base = static_cast<uint32_t>(dst.vertices.size());
    for (const auto& v : src.vertices) {
        dst.vertices.push_back(
            {v.x * scale.x + offset.x, v.y * scale.y + offset.y,
             v.z * scale.z + offset.z});
    }
    for (const auto& t : src.triangles) {
        dst.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
    }
}

}  // namespace

Mesh load_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound(path);

    Mesh mesh;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip comments and surrounding whitespace
        if (auto pos = line.find('#'); pos != std::string::npos) {
            line.erase(pos);
        }
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;

        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) {
                throw ParseError(path + ":" + std::to_string(line_no) +
                                 ": malformed vertex record");
            }
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<uint32_t> indices;
            std::string token;
            while (ls >> token) {
                // accept v, v/vt, v/vt/vn, v//vn forms; only v is used
                size_t slash = token.find('/');
                std::string head = token.substr(0, slash);
                long idx = 0;
                try {
                    idx = std::stol(head);
                } catch (const std::exception&) {
                    throw ParseError(path + ":" + std::to_string(line_no) +
                                     ": malformed face index '" + token + "'");
                }
                if (idx < 0) {
                    // negative indices are relative to the current vertex count
                    idx = static_cast<long>(mesh.vertices.size()) + idx + 1;
                }
                if (idx < 1 || idx > static_cast<long>(mesh.vertices.size())) {
                    throw ParseError(path + ":" + std::to_string(line_no) +
                                     ": face index " + head +
                                     " out of range");
                }
                indices.push_back(static_cast<uint32_t>(idx - 1));
            }
            if (indices.size() < 3) {
                throw ParseError(path + ":" + std::to_string(line_no) +
                                 ": face with fewer than 3 vertices");
            }
            for (size_t i = 1; i + 1 < indices.size(); ++i) {
                mesh.triangles.push_back({indices[0], indices[i], indices[i + 1]});
            }
        }
        // other record types (vn, vt, o, g, s, usemtl, ...) are ignored
    }
    if (mesh.triangles.empty()) {
        throw EmptyMesh(path + ": no faces");
    }
    return mesh;
}

void save_mesh(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& t : mesh.triangles) {
        out << "f " << (t[0] + 1) << ' ' << (t[1] + 1) << ' ' << (t[2] + 1)
            << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

namespace {

Mesh make_box(double sx, double sy, double sz, const Rgb& color) {
    double hx = sx / 2, hy = sy / 2, hz = sz / 2;
    Mesh m;
    m.base_color = color;
    m.vertices = {{-hx, -hy, -hz}, {hx, -hy, -hz}, {hx, hy, -hz}, {-hx, hy, -hz},
                  {-hx, -hy, hz},  {hx, -hy, hz},  {hx, hy, hz},  {-hx, hy, hz}};
    m.triangles = {{0, 2, 1}, {0, 3, 2},   // bottom (z = -hz)
                   {4, 5, 6}, {4, 6, 7},   // top
                   {0, 1, 5}, {0, 5, 4},   // -y
                   {2, 3, 7}, {2, 7, 6},   // +y
                   {1, 2, 6}, {1, 6, 5},   // +x
                   {3, 0, 4}, {3, 4, 7}};  // -x
    return m;
}

Mesh make_sphere(double diameter, const Rgb& color) {
    const int slices = kSegments;      // longitude
    const int stacks = kSegments / 2;  // latitude
    double r = diameter / 2;
    Mesh m;
    m.base_color = color;
    // rings between the poles; poles are single vertices
    m.vertices.push_back({0, 0, r});
    for (int i = 1; i < stacks; ++i) {
        double phi = kPi * i / stacks;  // from +z pole
        for (int j = 0; j < slices; ++j) {
            double theta = 2 * kPi * j / slices;
            m.vertices.push_back({r * std::sin(phi) * std::cos(theta),
                                  r * std::sin(phi) * std::sin(theta),
                                  r * std::cos(phi)});
        }
    }
    m.vertices.push_back({0, 0, -r});
    uint32_t south = static_cast<uint32_t>(m.vertices.size() - 1);
    auto ring = [&](int i, int j) {
        return static_cast<uint32_t>(1 + (i - 1) * slices + (j % slices));
    };
    for (int j = 0; j < slices; ++j) {
        m.triangles.push_back({0, ring(1, j), ring(1, j + 1)});
    }
    for (int i = 1; i + 1 < stacks; ++i) {
        for (int j = 0; j < slices; ++j) {
            uint32_t a = ring(i, j), b = ring(i, j + 1);
            uint32_t c = ring(i + 1, j), d = ring(i + 1, j + 1);
            m.triangles.push_back({a, c, d});
            m.triangles.push_back({a, d, b});
        }
    }
    for (int j = 0; j < slices; ++j) {
        m.triangles.push_back({south, ring(stacks - 1, j + 1), ring(stacks - 1, j)});
    }
    return m;
}

Mesh make_cylinder(double diameter, double height, const Rgb& color) {
    const int n = kSegments;
    double r = diameter / 2, h = height / 2;
    Mesh m;
    m.base_color = color;
    for (int j = 0; j < n; ++j) {
        double t = 2 * kPi * j / n;
        m.vertices.push_back({r * std::cos(t), r * std::sin(t), -h});
    }
    for (int j = 0; j < n; ++j) {
        double t = 2 * kPi * j / n;
        m.vertices.push_back({r * std::cos(t), r * std::sin(t), h});
    }
    uint32_t cb = static_cast<uint32_t>(m.vertices.size());
    m.vertices.push_back({0, 0, -h});
    uint32_t ct = cb + 1;
    m.vertices.push_back({0, 0, h});
    for (int j = 0; j < n; ++j) {
        uint32_t a = j, b = (j + 1) % n;
        uint32_t a2 = n + j, b2 = n + (j + 1) % n;
        m.triangles.push_back({a, b, b2});
        m.triangles.push_back({a, b2, a2});
        m.triangles.push_back({cb, b, a});    // bottom cap
        m.triangles.push_back({ct, a2, b2});  // top cap
    }
    return m;
}

Mesh make_cone(double diameter, double height, const Rgb& color) {
    const int n = kSegments;
    double r = diameter / 2, h = height / 2;
    Mesh m;
    m.base_color = color;
    for (int j = 0; j < n; ++j) {
        double t = 2 * kPi * j / n;
        m.vertices.push_back({r * std::cos(t), r * std::sin(t), -h});
    }
    uint32_t apex = static_cast<uint32_t>(m.vertices.size());
    m.vertices.push_back({0, 0, h});
    uint32_t center = apex + 1;
    m.vertices.push_back({0, 0, -h});
    for (int j = 0; j < n; ++j) {
        uint32_t a = j, b = (j + 1) % n;
        m.triangles.push_back({a, b, apex});
        m.triangles.push_back({center, b, a});
    }
    return m;
}

}  // namespace

Mesh make_primitive(PrimitiveKind kind, double size, const Rgb& color) {
    if (size <= 0.0) {
        throw InvalidSize("primitive size must be positive, got " +
                          std::to_string(size));
    }
    switch (kind) {
        case PrimitiveKind::cube:
            return make_box(size, size, size, color);
        case PrimitiveKind::sphere:
            return make_sphere(size, color);
        case PrimitiveKind::cylinder:
            return make_cylinder(size, size, color);
        case PrimitiveKind::cone:
            return make_cone(size, size, color);
    }
    throw InvalidSize("unknown primitive kind");
}

Mesh make_drone(int model_index) {
    // Per-model proportions: {body w, body d, body h, arm length, arm
    // thickness, rotor diameter, rotor height offset}. Values chosen so the
    // overall diagonal lands near 0.35 m.
    struct Proportions {
        double bw, bd, bh, arm_len, arm_t, rotor_d, rotor_z;
    };
    static const Proportions table[5] = {
        {0.10, 0.10, 0.05, 0.12, 0.015, 0.10, 0.030},   // compact quad
        {0.14, 0.09, 0.06, 0.13, 0.020, 0.11, 0.035},   // wide body
        {0.08, 0.12, 0.04, 0.11, 0.012, 0.09, 0.025},   // slim folder
        {0.11, 0.11, 0.07, 0.14, 0.018, 0.12, 0.040},   // heavy lifter
        {0.09, 0.09, 0.045, 0.10, 0.014, 0.085, 0.028}, // racer
    };
    const Proportions& p = table[((model_index % 5) + 5) % 5];
    Rgb shell{0.25, 0.25, 0.28};

    Mesh drone;
    drone.base_color = shell;
    append_mesh(drone, make_box(p.bw, p.bd, p.bh, shell), {0, 0, 0}, {1, 1, 1});
    // four diagonal arms with a rotor disc at each tip
    Mesh arm = make_box(p.arm_len, p.arm_t, p.arm_t, shell);
    Mesh rotor = make_cylinder(p.rotor_d, 0.006, shell);
    double reach = (p.bw / 2 + p.arm_len / 2) / std::sqrt(2.0);
    for (int k = 0; k < 4; ++k) {
        double ang = kPi / 4 + k * kPi / 2;
        double cx = std::cos(ang), cy = std::sin(ang);
        // arms modelled as axis-aligned bars rotated 45 degrees via vertex bake
        Mesh turned = arm;
        for (auto& v : turned.vertices) {
            double rx = v.x * cx - v.y * cy;
            double ry = v.x * cy + v.y * cx;
            v = {rx, ry, v.z};
        }
        append_mesh(drone, turned, {reach * cx, reach * cy, 0}, {1, 1, 1});
        double tip = (p.bw / 2 + p.arm_len) / std::sqrt(2.0);
        append_mesh(drone, rotor, {tip * cx, tip * cy, p.rotor_z}, {1, 1, 1});
    }
    return drone;
}

Mesh make_bird() {
    // Flattened body plus two swept wing quads; silhouette matters, detail
    // does not. The flap cycle lives in the trajectory scale channel.
    Rgb plumage{0.15, 0.13, 0.12};
    Mesh bird;
    bird.base_color = plumage;
    append_mesh(bird, make_box(0.16, 0.05, 0.05, plumage), {0, 0, 0}, {1, 1, 1});
    uint32_t base = static_cast<uint32_t>(bird.vertices.size());
    // each wing is a thin triangle pair angled slightly upward
    bird.vertices.push_back({0.02, 0.02, 0.01});
    bird.vertices.push_back({-0.04, 0.25, 0.05});
    bird.vertices.push_back({-0.06, 0.02, 0.01});
    bird.vertices.push_back({0.02, -0.02, 0.01});
    bird.vertices.push_back({-0.04, -0.25, 0.05});
    bird.vertices.push_back({-0.06, -0.02, 0.01});
    bird.triangles.push_back({base + 0, base + 1, base + 2});
    bird.triangles.push_back({base + 2, base + 1, base + 0});
    bird.triangles.push_back({base + 3, base + 5, base + 4});
    bird.triangles.push_back({base + 4, base + 5, base + 3});
    // tail fan
    uint32_t t0 = static_cast<uint32_t>(bird.vertices.size());
    bird.vertices.push_back({-0.08, 0.0, 0.0});
    bird.vertices.push_back({-0.16, 0.04, 0.01});
    bird.vertices.push_back({-0.16, -0.04, 0.01});
    bird.triangles.push_back({t0, t0 + 1, t0 + 2});
    bird.triangles.push_back({t0 + 2, t0 + 1, t0});
    return bird;
}

Mesh make_prop(PropKind kind, const Rgb& color) {
    Mesh prop;
    prop.base_color = color;
    switch (kind) {
        case PropKind::car: {
            append_mesh(prop, make_box(4.2, 1.8, 0.9, color), {0, 0, 0.75}, {1, 1, 1});
            append_mesh(prop, make_box(2.2, 1.6, 0.7, color), {-0.2, 0, 1.5}, {1, 1, 1});
            Mesh wheel = make_cylinder(0.6, 0.25, {0.05, 0.05, 0.05});
            for (double sx : {-1.3, 1.3}) {
                for (double sy : {-0.9, 0.9}) {
                    Mesh w = wheel;
                    // lay the cylinder on its side (axis along y)
                    for (auto& v : w.vertices) v = {v.x, v.z, v.y};
                    append_mesh(prop, w, {sx, sy, 0.3}, {1, 1, 1});
                }
            }
            break;
        }
        case PropKind::lamppost: {
            append_mesh(prop, make_cylinder(0.15, 6.0, color), {0, 0, 3.0}, {1, 1, 1});
            append_mesh(prop, make_box(1.2, 0.12, 0.12, color), {0.55, 0, 5.9}, {1, 1, 1});
            append_mesh(prop, make_box(0.5, 0.25, 0.15, {0.9, 0.9, 0.7}),
                        {1.05, 0, 5.8}, {1, 1, 1});
            break;
        }
        case PropKind::traffic_cone: {
            append_mesh(prop, make_box(0.45, 0.45, 0.05, color), {0, 0, 0.025}, {1, 1, 1});
            append_mesh(prop, make_cone(0.3, 0.7, color), {0, 0, 0.4}, {1, 1, 1});
            break;
        }
        case PropKind::sign: {
            append_mesh(prop, make_cylinder(0.08, 2.4, {0.4, 0.4, 0.42}),
                        {0, 0, 1.2}, {1, 1, 1});
            append_mesh(prop, make_box(0.7, 0.04, 0.7, color), {0, 0, 2.6}, {1, 1, 1});
            break;
        }
    }
    return prop;
}

}  // namespace sdrforge
