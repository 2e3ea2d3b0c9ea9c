/*
decor-uniform

Copyright 2026 The decor-uniform Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "decor_uniform/mesh.hpp"
#include "decor_uniform/metric.hpp"

/** Small closed surfaces for tests and examples */
namespace decor_uniform::corpus
{

inline std::vector<Face> tetrahedron() { return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}; }

inline std::vector<Face> octahedron()
{
    // poles 0 and 5, equator 1..4
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
            {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}

inline std::vector<Face> icosahedron()
{
    return {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
            {1, 6, 2},  {2, 7, 3},  {3, 8, 4},  {4, 9, 5},  {5, 10, 1},
            {2, 6, 7},  {3, 7, 8},  {4, 8, 9},  {5, 9, 10}, {1, 10, 6},
            {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10}};
}

/** @brief n x m periodic grid, each square split along the same diagonal (n, m >= 3) */
inline std::vector<Face> torus_grid(int n, int m)
{
    std::vector<Face> f;
    auto id = [&](int i, int j) { return ((i + n) % n) * m + (j + m) % m; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            f.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return f;
}

/** @brief Genus-2 surface on 10 vertices (36 edges, 24 faces) */
inline std::vector<Face> genus2_small()
{
    return {{0, 4, 1}, {1, 4, 2}, {2, 4, 5}, {2, 5, 3}, {4, 6, 5}, {5, 0, 1},
            {1, 2, 6}, {6, 2, 3}, {6, 3, 0}, {6, 0, 5}, {7, 3, 4}, {7, 4, 0},
            {4, 8, 9}, {4, 3, 8}, {9, 8, 0}, {9, 0, 3}, {3, 1, 8}, {8, 1, 7},
            {8, 7, 0}, {7, 1, 9}, {9, 3, 7}, {3, 5, 1}, {6, 4, 9}, {9, 1, 6}};
}

/** @brief Connected sum of two 4 x 4 tori: 29 vertices, genus 2 */
inline std::vector<Face> genus2_large()
{
    auto a = torus_grid(4, 4);
    auto b = torus_grid(4, 4);
    // glue a's face 0 = (0,4,5) to b's face 0 reversed
    const Face ga = a.front();
    const Face gb = b.front();
    std::vector<int> map(16);
    int next = 16;
    for (int v = 0; v < 16; ++v) {
        if (v == gb[0]) {
            map[v] = ga[0];
        } else if (v == gb[1]) {
            map[v] = ga[2];
        } else if (v == gb[2]) {
            map[v] = ga[1];
        } else {
            map[v] = next++;
        }
    }
    std::vector<Face> out(a.begin() + 1, a.end());
    for (std::size_t f = 1; f < b.size(); ++f) {
        out.push_back({map[b[f][0]], map[b[f][1]], map[b[f][2]]});
    }
    return out;
}

inline int vertex_count(const std::vector<Face>& faces)
{
    int n = 0;
    for (const auto& f : faces) {
        for (int v : f) {
            n = std::max(n, v + 1);
        }
    }
    return n;
}

inline Mesh build(const std::vector<Face>& faces) { return Mesh::build(faces, vertex_count(faces)); }

/** @brief All lengths and all radii equal */
inline DecoratedMetric equilateral(const Mesh& mesh, double length = 1.0, double radius = 0.3)
{
    return {std::vector<double>(mesh.edge_count(), length),
            std::vector<double>(mesh.vertex_count(), radius)};
}

/**
 * @brief Lengths in [0.8, 1.2] and radii in [0.1, 0.25]; any such draw is a
 * valid decorated metric.
 */
template <class Rng>
DecoratedMetric random_metric(const Mesh& mesh, Rng& rng)
{
    std::uniform_real_distribution<double> L(0.8, 1.2);
    std::uniform_real_distribution<double> R(0.1, 0.25);
    DecoratedMetric m;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        m.lengths.push_back(L(rng));
    }
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        m.radii.push_back(R(rng));
    }
    return m;
}

}  // namespace decor_uniform::corpus
