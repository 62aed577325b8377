#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sdrforge/geometry.hpp"

namespace sdrforge {

using Triangle = std::array<uint32_t, 3>;

// Triangle-only mesh with one solid base color. Immutable after construction
// by convention; shared freely between threads.
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
    Rgb base_color{0.8, 0.8, 0.8};

    Aabb bounds() const {
        Aabb box;
        for (const auto& v : vertices) box.expand(v);
        return box;
    }

    double triangle_area(size_t i) const {
        const Vec3& a = vertices[triangles[i][0]];
        const Vec3& b = vertices[triangles[i][1]];
        const Vec3& c = vertices[triangles[i][2]];
        return 0.5 * norm(cross(b - a, c - a));
    }
};

enum class PrimitiveKind { cube, cone, sphere, cylinder };

// Wavefront OBJ subset: `v` and `f` records, 1-based indices, faces with
// more than 3 vertices are fan-triangulated. Throws FileNotFound,
// ParseError (with line number), EmptyMesh.
Mesh load_mesh(const std::string& path);

// Inverse of load_mesh for meshes produced by this library (v/f records only).
void save_mesh(const Mesh& mesh, const std::string& path);

// Watertight primitive centered at the origin. `size` scales the bounding
// box: the cube has side `size`, the others fit a bounding cylinder/sphere
// of diameter `size`. Curved surfaces use 16 segments (spheres 16x8) so
// output is identical everywhere. Throws InvalidSize.
Mesh make_primitive(PrimitiveKind kind, double size, const Rgb& color);

// Procedural stand-ins for the five quadcopter models: central body, four
// arms, and rotor discs, with distinct proportions per index (0..4).
// Body diagonal is about 0.35 m at scale 1.
Mesh make_drone(int model_index);

// Low-poly winged silhouette, about 0.5 m wingspan.
Mesh make_bird();

enum class PropKind { car, lamppost, traffic_cone, sign };

// Composed-solid props for the realistic-distractor style.
Mesh make_prop(PropKind kind, const Rgb& color);

}  // namespace sdrforge
