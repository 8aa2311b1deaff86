// Built-in spaces used by the verification suites and the DSL literals.

#ifndef CUBECALC_CORPUS_HPP
#define CUBECALC_CORPUS_HPP

#include <set>

#include "ops.hpp"
#include "present.hpp"

namespace cubecalc {

// Ordered simplicial complex on vertices 0..m-1: level k holds the weakly
// monotone tuples whose support spans a face of the complex.
inline SSetPtr from_complex(int m, const std::vector<std::vector<int>>& facets, int D) {
    std::set<std::set<int>> faces;
    for (const auto& f : facets) {
        std::set<int> fs(f.begin(), f.end());
        // all nonempty subsets
        std::vector<int> v(fs.begin(), fs.end());
        for (unsigned msk = 1; msk < (1u << v.size()); ++msk) {
            std::set<int> sub;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (msk & (1u << i)) sub.insert(v[i]);
            faces.insert(sub);
        }
    }
    for (int v = 0; v < m; ++v) faces.insert({v});
    std::vector<std::vector<std::vector<int>>> tuples(D + 1);
    auto spans = [&](const std::vector<int>& t) {
        std::set<int> s(t.begin(), t.end());
        return faces.count(s) != 0;
    };
    for (int k = 0; k <= D; ++k) {
        std::vector<int> cur(k + 1, 0);
        while (true) {
            if (spans(cur)) tuples[k].push_back(cur);
            int t = k;
            while (t >= 0 && cur[t] == m - 1) --t;
            if (t < 0) break;
            ++cur[t];
            for (int u = t + 1; u <= k; ++u) cur[u] = cur[t];
        }
    }
    auto id_of = [&](int k, const std::vector<int>& t) {
        auto it = std::lower_bound(tuples[k].begin(), tuples[k].end(), t);
        if (it == tuples[k].end() || *it != t) throw ValidationError("from_complex: tuple not found");
        return static_cast<SimplexId>(it - tuples[k].begin());
    };
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, static_cast<int>(tuples[k].size()));
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < b.sizes[k]; ++x) {
                std::vector<int> t = tuples[k][x];
                t.erase(t.begin() + i);
                b.face_[k][i][x] = id_of(k - 1, t);
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < b.sizes[k]; ++x) {
                std::vector<int> t = tuples[k][x];
                t.insert(t.begin() + i, t[i]);
                b.degen_[k][i][x] = id_of(k + 1, t);
            }
    b.basepoint = 0;
    return b.finish(true, "from_complex");
}

// boundary of Delta^d: drop every simplex whose support is all of [d]
inline SSetPtr boundary_simplex(int d, int D) {
    auto delta = DeltaModel::get(d, D);
    std::vector<std::vector<char>> keep(D + 1);
    for (int k = 0; k <= D; ++k) {
        keep[k].assign(delta->space->size(k), 0);
        for (SimplexId x = 0; x < delta->space->size(k); ++x) {
            std::set<int> sup(delta->tuples[k][x].begin(), delta->tuples[k][x].end());
            keep[k][x] = sup.size() <= static_cast<std::size_t>(d) ? 1 : 0;
        }
    }
    return subspace(delta->space, keep).space;
}

// Circle with two vertices and two nondegenerate edges between them.
inline SSetPtr circle_two_edges(int D) {
    Presentation p;
    p.D = D;
    p.counts = {2, 2};
    p.faces.resize(2);
    p.faces[1].resize(2);
    // both edges run from vertex 0 (d_1) to vertex 1 (d_0)
    p.faces[1][0] = {FaceRef{0, 1, {}}, FaceRef{0, 0, {}}};
    p.faces[1][1] = {FaceRef{0, 1, {}}, FaceRef{0, 0, {}}};
    p.basepoint = 0;
    return realize(p).space;
}

// Circle with a single vertex and one nondegenerate loop edge.
inline SSetPtr circle_one_vertex(int D) {
    Presentation p;
    p.D = D;
    p.counts = {1, 1};
    p.faces.resize(2);
    p.faces[1].resize(1);
    p.faces[1][0] = {FaceRef{0, 0, {}}, FaceRef{0, 0, {}}};
    p.basepoint = 0;
    return realize(p).space;
}

// Three-edge circle = boundary of Delta^2.
inline SSetPtr circle_three_edges(int D) { return boundary_simplex(2, D); }

// Six-vertex triangulation of the real projective plane.
inline SSetPtr rp2(int D) {
    return from_complex(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}},
                        D);
}

inline SSetPtr sphere_two(int D) { return boundary_simplex(3, D); }

inline SSetPtr torus(int D) {
    auto c = circle_two_edges(D);
    return product(c, c).space;
}

inline SSetPtr zero_sphere(int D) {
    auto X = discrete_sset(2, D);
    auto b = std::make_shared<SimplicialSet>(*X);
    b->basepoint = 0;
    return b;
}

}  // namespace cubecalc

#endif
