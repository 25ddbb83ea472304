#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "latgauge/errors.hpp"

namespace latgauge {

constexpr int kMaxDim = 4;

/// Vertex coordinates, one entry per axis (d <= 4).
using Coords = std::array<int, kMaxDim>;

/// An oriented edge: the positively oriented edge (base, dir) traversed
/// forward (+1) or backward (-1).
struct OrientedEdge {
    int base = 0;        // vertex index
    int dir = 0;         // axis in [0, d)
    int orientation = 1; // +1 or -1
};

/// A step of a plaquette boundary word: positive-edge index plus traversal
/// orientation.
struct WordStep {
    int edge = 0;
    int orientation = 1;
};

/// Plaquette (base vertex, ordered axis pair i < j). Boundary word:
/// +i, +j from the far corner, then -i, -j back to base.
struct Plaquette {
    int base = 0;
    int dir_i = 0;
    int dir_j = 1;
};

/// Closed loop of oriented edges; consecutive edges chain head-to-tail.
struct Loop {
    std::vector<OrientedEdge> edges;
};

/// The d-dimensional discrete torus of side L, with all geometry tables
/// precomputed: vertices (lexicographic, axis 0 fastest), positively
/// oriented edges (edge = vertex*d + dir), plaquettes, and edge->plaquette
/// incidence. d = 1 is allowed so slab slices of d = 2 models reuse the
/// same type; L = 1 has no edges (self-loops are excluded).
class TorusLattice {
  public:
    TorusLattice(int d, int L);

    int dim() const { return d_; }
    int side() const { return L_; }
    int n_vertices() const { return n_vertices_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    int n_plaquettes() const { return static_cast<int>(plaquettes_.size()); }

    Coords coords(int vertex) const;
    int vertex_index(const Coords& c) const;

    /// Neighbor of `vertex` one step along `dir` (sign +1/-1), with wraparound.
    int neighbor(int vertex, int dir, int sign) const {
        return sign > 0 ? neigh_up_[vertex * d_ + dir] : neigh_down_[vertex * d_ + dir];
    }

    /// Index of the positively oriented edge (base, dir), or -1 when L = 1.
    int edge_index(int base, int dir) const {
        return L_ > 1 ? edge_of_slot_[base * d_ + dir] : -1;
    }

    const OrientedEdge& edge(int e) const { return edges_[e]; }
    int edge_tail(int e) const { return edges_[e].base; }
    int edge_head(int e) const { return neigh_up_[edges_[e].base * d_ + edges_[e].dir]; }

    const Plaquette& plaquette(int p) const { return plaquettes_[p]; }

    /// Four-step boundary word of plaquette p.
    const std::array<WordStep, 4>& plaquette_word(int p) const { return words_[p]; }

    /// Plaquettes containing edge e, as (plaquette index, step position 0..3).
    struct Incidence {
        int plaquette;
        int position;
    };
    const std::vector<Incidence>& plaquettes_of_edge(int e) const { return incidence_[e]; }

    /// Torus graph distance sum_i min(|dx_i|, L - |dx_i|).
    int distance(int x, int y) const;

    /// Vertices at exact graph distance r from x (deterministic order).
    std::vector<int> sphere(int x, int r) const;

  private:
    int d_;
    int L_;
    int n_vertices_;
    std::vector<int> neigh_up_;
    std::vector<int> neigh_down_;
    std::vector<int> edge_of_slot_;
    std::vector<OrientedEdge> edges_;
    std::vector<Plaquette> plaquettes_;
    std::vector<std::array<WordStep, 4>> words_;
    std::vector<std::vector<Incidence>> incidence_;
};

/// Closed rectangular loop with corner `corner`, sides R along axes.first
/// and T along axes.second. Throws SideTooLong when R or T exceeds L/2.
Loop rectangular_loop(const TorusLattice& lattice, int corner,
                      std::pair<int, int> axes, int R, int T);

int loop_area(int R, int T);

/// Checks head-to-tail chaining and closure of a loop.
bool loop_is_closed(const TorusLattice& lattice, const Loop& loop);

/// Height-1 slab between the planes x_d = k and x_d = k+1 of the parent
/// torus. The slice is the (d-1)-torus of the same side length; vertical
/// edges are identified by their base point in the lower plane.
struct SlabGeometry {
    const TorusLattice* parent = nullptr;
    int k = 0;
    TorusLattice slice;

    SlabGeometry(const TorusLattice& parent_, int k_);

    /// Parent edge (x, k) -> (x, k+1) for slice vertex x.
    int vertical_edge(int slice_vertex) const;

    /// Parent edge in the lower plane under slice edge e (the A side).
    int bottom_edge(int slice_edge) const;

    /// Parent edge in the upper plane over slice edge e (the B side).
    int top_edge(int slice_edge) const;

  private:
    int lift(int slice_vertex, int plane) const;
};

} // namespace latgauge
