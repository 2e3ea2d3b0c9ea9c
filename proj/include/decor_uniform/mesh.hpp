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
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decor_uniform/errors.hpp"

namespace decor_uniform
{

using VertexId = int;
using EdgeId = int;
using FaceId = int;
using Face = std::array<VertexId, 3>;

/** @brief Undirected edge: canonical (min, max) endpoints and both incident faces */
struct EdgeRecord {
    std::array<VertexId, 2> v;
    std::array<FaceId, 2> f;
};

/** @brief Euler characteristic of a closed surface */
struct EulerData {
    int chi{0};
    int genus() const { return (2 - chi) / 2; }
};

/**
 * @brief The two triangles on either side of an edge.
 *
 * `left` is oriented (i, j, k) and `right` is oriented (j, i, l), so the
 * quadrilateral reads i, l, j, k counterclockwise.
 */
struct Diamond {
    VertexId i, j, k, l;
    FaceId left, right;
};

/**
 * @brief Connectivity of a closed, connected, oriented triangulated surface.
 *
 * Vertices are dense indices 0..n-1. Each face side s is the edge
 * (face[s], face[s+1]). Edge slots are stable across flips: a flipped edge
 * keeps its EdgeId and receives the new diagonal's endpoints.
 */
class Mesh
{
public:
    Mesh() = default;

    /**
     * @brief Build and validate connectivity from a face list.
     *
     * Face orientations are made globally consistent by reorienting faces as
     * needed; the first face keeps the orientation it was given.
     */
    static Mesh build(std::span<const Face> faces, int vertex_count);

    int vertex_count() const { return static_cast<int>(vertex_faces_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const std::array<EdgeId, 3>& face_edges(FaceId f) const { return face_edges_[f]; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    const EdgeRecord& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<FaceId>& vertex_faces(VertexId v) const { return vertex_faces_[v]; }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const
    {
        auto it = edge_index_.find(key(a, b));
        if (it == edge_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /** @brief Side index s of face f such that (face[s], face[s+1]) is edge e */
    int side_of(FaceId f, EdgeId e) const
    {
        for (int s = 0; s < 3; ++s) {
            if (face_edges_[f][s] == e) {
                return s;
            }
        }
        throw Error(ErrorKind::InternalInvariantViolation, "edge not on face");
    }

    Diamond diamond(EdgeId e) const
    {
        const auto& rec = edges_[e];
        const FaceId left = rec.f[0];
        const int s = side_of(left, e);
        const Face& fl = faces_[left];
        Diamond d{};
        d.i = fl[s];
        d.j = fl[(s + 1) % 3];
        d.k = fl[(s + 2) % 3];
        d.left = left;
        d.right = rec.f[1];
        const Face& fr = faces_[d.right];
        for (VertexId v : fr) {
            if (v != d.i && v != d.j) {
                d.l = v;
            }
        }
        return d;
    }

    bool can_flip(EdgeId e) const
    {
        const Diamond d = diamond(e);
        return d.k != d.l && !find_edge(d.k, d.l).has_value();
    }

    /**
     * @brief Replace faces (i,j,k),(j,i,l) by (k,i,l),(l,j,k) in place.
     *
     * Throws FlipForbidden when the opposite diagonal already exists.
     */
    void flip(EdgeId e);

    EulerData euler() const
    {
        return {vertex_count() - edge_count() + face_count()};
    }

private:
    static std::uint64_t key(VertexId a, VertexId b)
    {
        if (a > b) {
            std::swap(a, b);
        }
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }

    void rebuild_face_edges(FaceId f)
    {
        for (int s = 0; s < 3; ++s) {
            face_edges_[f][s] = edge_index_.at(key(faces_[f][s], faces_[f][(s + 1) % 3]));
        }
    }

    std::vector<Face> faces_;
    std::vector<std::array<EdgeId, 3>> face_edges_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<FaceId>> vertex_faces_;
    std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

inline Mesh Mesh::build(std::span<const Face> faces, int vertex_count)
{
    if (vertex_count <= 0) {
        throw Error(ErrorKind::InvalidInput, "vertex_count must be positive");
    }
    if (faces.empty()) {
        throw Error(ErrorKind::InvalidInput, "no faces");
    }
    Mesh m;
    m.faces_.assign(faces.begin(), faces.end());
    const auto nf = static_cast<int>(m.faces_.size());
    for (int f = 0; f < nf; ++f) {
        const Face& t = m.faces_[f];
        for (VertexId v : t) {
            if (v < 0 || v >= vertex_count) {
                throw Error(ErrorKind::InvalidInput,
                            "face " + std::to_string(f) + " has out-of-range vertex " +
                                std::to_string(v));
            }
        }
        if (t[0] == t[1] || t[1] == t[2] || t[2] == t[0]) {
            throw Error(ErrorKind::InvalidInput,
                        "face " + std::to_string(f) + " repeats a vertex");
        }
    }

    // undirected edges with their incident faces
    std::vector<std::vector<FaceId>> edge_faces;
    for (int f = 0; f < nf; ++f) {
        for (int s = 0; s < 3; ++s) {
            const VertexId a = m.faces_[f][s];
            const VertexId b = m.faces_[f][(s + 1) % 3];
            auto [it, inserted] = m.edge_index_.try_emplace(key(a, b), m.edge_count());
            if (inserted) {
                m.edges_.push_back({{std::min(a, b), std::max(a, b)}, {-1, -1}});
                edge_faces.emplace_back();
            }
            edge_faces[it->second].push_back(f);
        }
    }
    for (std::size_t e = 0; e < edge_faces.size(); ++e) {
        const auto& ef = edge_faces[e];
        const auto& v = m.edges_[e].v;
        const std::string name = std::to_string(v[0]) + "-" + std::to_string(v[1]);
        if (ef.size() == 1) {
            throw Error(ErrorKind::BoundaryEdge, "edge " + name + " has one incident face");
        }
        if (ef.size() > 2) {
            throw Error(ErrorKind::NonManifold,
                        "edge " + name + " has " + std::to_string(ef.size()) + " incident faces");
        }
        if (ef[0] == ef[1]) {
            throw Error(ErrorKind::InvalidFacePair, "face glued to itself along " + name);
        }
        m.edges_[e].f = {ef[0], ef[1]};
    }

    m.face_edges_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        m.rebuild_face_edges(f);
        std::array<FaceId, 3> nb{};
        for (int s = 0; s < 3; ++s) {
            const auto& rec = m.edges_[m.face_edges_[f][s]];
            nb[s] = rec.f[0] == f ? rec.f[1] : rec.f[0];
        }
        if (nb[0] == nb[1] || nb[1] == nb[2] || nb[2] == nb[0]) {
            throw Error(ErrorKind::InvalidFacePair,
                        "face " + std::to_string(f) + " shares more than one edge with a neighbor");
        }
    }

    // orient by BFS over faces; this also establishes connectivity
    std::vector<char> visited(nf, 0);
    std::queue<FaceId> queue;
    visited[0] = 1;
    queue.push(0);
    int reached = 1;
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop();
        for (int s = 0; s < 3; ++s) {
            const VertexId a = m.faces_[f][s];
            const VertexId b = m.faces_[f][(s + 1) % 3];
            const auto& rec = m.edges_[m.face_edges_[f][s]];
            const FaceId g = rec.f[0] == f ? rec.f[1] : rec.f[0];
            // consistent iff g traverses the edge as b -> a
            Face& tg = m.faces_[g];
            bool agrees = false;
            for (int t = 0; t < 3; ++t) {
                if (tg[t] == b && tg[(t + 1) % 3] == a) {
                    agrees = true;
                }
            }
            if (!visited[g]) {
                if (!agrees) {
                    std::swap(tg[1], tg[2]);
                    m.rebuild_face_edges(g);
                }
                visited[g] = 1;
                ++reached;
                queue.push(g);
            } else if (!agrees) {
                throw Error(ErrorKind::NonOrientable, "inconsistent orientation at face " +
                                                          std::to_string(g));
            }
        }
    }
    if (reached != nf) {
        throw Error(ErrorKind::Disconnected, "face set has more than one component");
    }

    m.vertex_faces_.assign(vertex_count, {});
    for (int f = 0; f < nf; ++f) {
        for (VertexId v : m.faces_[f]) {
            m.vertex_faces_[v].push_back(f);
        }
    }
    for (VertexId v = 0; v < vertex_count; ++v) {
        const auto& vf = m.vertex_faces_[v];
        if (vf.empty()) {
            throw Error(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " is unused");
        }
        // walk the fan around v; a manifold vertex has a single cycle
        FaceId f = vf.front();
        std::size_t steps = 0;
        do {
            const Face& t = m.faces_[f];
            int c = 0;
            while (t[c] != v) {
                ++c;
            }
            // cross the edge (v, next) to the face on the other side
            const auto& rec = m.edges_[m.face_edges_[f][c]];
            f = rec.f[0] == f ? rec.f[1] : rec.f[0];
            ++steps;
        } while (f != vf.front() && steps <= vf.size());
        if (steps != vf.size()) {
            throw Error(ErrorKind::NonManifold,
                        "vertex " + std::to_string(v) + " has a disconnected link");
        }
    }
    return m;
}

inline void Mesh::flip(EdgeId e)
{
    const Diamond d = diamond(e);
    if (d.k == d.l || find_edge(d.k, d.l).has_value()) {
        throw Error(ErrorKind::FlipForbidden,
                    "edge " + std::to_string(d.i) + "-" + std::to_string(d.j) +
                        ": diagonal " + std::to_string(d.k) + "-" + std::to_string(d.l) +
                        " already present");
    }
    const EdgeId e_il = *find_edge(d.i, d.l);
    const EdgeId e_jk = *find_edge(d.j, d.k);

    edge_index_.erase(key(d.i, d.j));
    edge_index_.emplace(key(d.k, d.l), e);
    edges_[e].v = {std::min(d.k, d.l), std::max(d.k, d.l)};

    faces_[d.left] = {d.k, d.i, d.l};
    faces_[d.right] = {d.l, d.j, d.k};

    auto replace_face = [this](EdgeId edge, FaceId from, FaceId to) {
        auto& f = edges_[edge].f;
        (f[0] == from ? f[0] : f[1]) = to;
    };
    replace_face(e_il, d.right, d.left);
    replace_face(e_jk, d.left, d.right);

    rebuild_face_edges(d.left);
    rebuild_face_edges(d.right);

    auto erase_face = [this](VertexId v, FaceId f) {
        auto& vf = vertex_faces_[v];
        vf.erase(std::find(vf.begin(), vf.end(), f));
    };
    erase_face(d.i, d.right);
    erase_face(d.j, d.left);
    vertex_faces_[d.k].push_back(d.right);
    vertex_faces_[d.l].push_back(d.left);
}

/** @brief Build connectivity (free-function form) */
inline Mesh build_connectivity(std::span<const Face> faces, int vertex_count)
{
    return Mesh::build(faces, vertex_count);
}

inline EulerData euler_characteristic(const Mesh& mesh) { return mesh.euler(); }

/** @brief Copying flip */
inline Mesh flip_connectivity(Mesh mesh, EdgeId e)
{
    mesh.flip(e);
    return mesh;
}

}  // namespace decor_uniform
