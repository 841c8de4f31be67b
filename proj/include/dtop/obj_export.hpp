#pragma once

// ASCII OBJ export of voxel sets: one unit cube per 3-D point, shared
// vertices deduplicated. Lower-dimensional images are embedded at z = 0.

#include <array>
#include <map>
#include <ostream>
#include <vector>

#include "dtop/core.hpp"

namespace dtop {

inline void export_obj(std::ostream& out, const DigitalImage& x) {
    if (x.dimension() > 3) throw std::invalid_argument("obj export supports dimensions up to 3");
    std::map<std::array<int, 3>, int> vertex_ids;
    std::vector<std::array<int, 3>> vertices;
    std::vector<std::array<int, 4>> faces;

    auto vertex = [&](int vx, int vy, int vz) {
        std::array<int, 3> key{vx, vy, vz};
        auto it = vertex_ids.find(key);
        if (it != vertex_ids.end()) return it->second;
        int id = static_cast<int>(vertices.size()) + 1;  // OBJ indices are 1-based
        vertex_ids.emplace(key, id);
        vertices.push_back(key);
        return id;
    };

    static constexpr int corner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                         {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    static constexpr int quad[6][4] = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                       {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};

    for (const Point& p : x.points()) {
        int px = p[0];
        int py = p.dim() > 1 ? p[1] : 0;
        int pz = p.dim() > 2 ? p[2] : 0;
        int ids[8];
        for (int c = 0; c < 8; ++c)
            ids[c] = vertex(px + corner[c][0], py + corner[c][1], pz + corner[c][2]);
        for (const auto& f : quad) faces.push_back({ids[f[0]], ids[f[1]], ids[f[2]], ids[f[3]]});
    }

    for (const auto& v : vertices) out << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
    for (const auto& f : faces) out << "f " << f[0] << " " << f[1] << " " << f[2] << " " << f[3] << "\n";
}

}  // namespace dtop
