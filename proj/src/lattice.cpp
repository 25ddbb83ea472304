#include "latgauge/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace latgauge {

TorusLattice::TorusLattice(int d, int L) : d_(d), L_(L) {
    if (d < 1 || d > kMaxDim) {
        throw InvalidArgument("lattice dimension must be in [1, 4]");
    }
    if (L < 1) {
        throw InvalidArgument("lattice side must be >= 1");
    }
    n_vertices_ = 1;
    for (int i = 0; i < d_; ++i) {
        n_vertices_ *= L_;
    }

    neigh_up_.resize(static_cast<std::size_t>(n_vertices_) * d_);
    neigh_down_.resize(static_cast<std::size_t>(n_vertices_) * d_);
    int stride = 1;
    for (int dir = 0; dir < d_; ++dir) {
        for (int v = 0; v < n_vertices_; ++v) {
            const int c = (v / stride) % L_;
            const int up = (c + 1) % L_;
            const int down = (c + L_ - 1) % L_;
            neigh_up_[static_cast<std::size_t>(v) * d_ + dir] = v + (up - c) * stride;
            neigh_down_[static_cast<std::size_t>(v) * d_ + dir] = v + (down - c) * stride;
        }
        stride *= L_;
    }

    // Edges: every (vertex, dir) slot unless it would be a self-loop (L = 1).
    edge_of_slot_.assign(static_cast<std::size_t>(n_vertices_) * d_, -1);
    if (L_ > 1) {
        edges_.reserve(static_cast<std::size_t>(n_vertices_) * d_);
        for (int v = 0; v < n_vertices_; ++v) {
            for (int dir = 0; dir < d_; ++dir) {
                edge_of_slot_[static_cast<std::size_t>(v) * d_ + dir] =
                    static_cast<int>(edges_.size());
                edges_.push_back(OrientedEdge{v, dir, +1});
            }
        }
    }

    // Plaquettes and their boundary words.
    if (L_ > 1 && d_ >= 2) {
        plaquettes_.reserve(static_cast<std::size_t>(n_vertices_) * d_ * (d_ - 1) / 2);
        for (int v = 0; v < n_vertices_; ++v) {
            for (int i = 0; i < d_; ++i) {
                for (int j = i + 1; j < d_; ++j) {
                    plaquettes_.push_back(Plaquette{v, i, j});
                }
            }
        }
        words_.resize(plaquettes_.size());
        incidence_.resize(edges_.size());
        for (std::size_t p = 0; p < plaquettes_.size(); ++p) {
            const Plaquette& pl = plaquettes_[p];
            const int vi = neighbor(pl.base, pl.dir_i, +1);
            const int vj = neighbor(pl.base, pl.dir_j, +1);
            words_[p] = {WordStep{edge_index(pl.base, pl.dir_i), +1},
                         WordStep{edge_index(vi, pl.dir_j), +1},
                         WordStep{edge_index(vj, pl.dir_i), -1},
                         WordStep{edge_index(pl.base, pl.dir_j), -1}};
            for (int pos = 0; pos < 4; ++pos) {
                incidence_[words_[p][pos].edge].push_back(
                    Incidence{static_cast<int>(p), pos});
            }
        }
    } else {
        incidence_.resize(edges_.size());
    }
}

Coords TorusLattice::coords(int vertex) const {
    Coords c{};
    for (int i = 0; i < d_; ++i) {
        c[i] = vertex % L_;
        vertex /= L_;
    }
    return c;
}

int TorusLattice::vertex_index(const Coords& c) const {
    int v = 0;
    for (int i = d_ - 1; i >= 0; --i) {
        const int ci = ((c[i] % L_) + L_) % L_;
        v = v * L_ + ci;
    }
    return v;
}

int TorusLattice::distance(int x, int y) const {
    const Coords cx = coords(x);
    const Coords cy = coords(y);
    int dist = 0;
    for (int i = 0; i < d_; ++i) {
        const int delta = std::abs(cx[i] - cy[i]);
        dist += std::min(delta, L_ - delta);
    }
    return dist;
}

std::vector<int> TorusLattice::sphere(int x, int r) const {
    std::vector<int> out;
    for (int v = 0; v < n_vertices_; ++v) {
        if (distance(x, v) == r) {
            out.push_back(v);
        }
    }
    return out;
}

Loop rectangular_loop(const TorusLattice& lattice, int corner,
                      std::pair<int, int> axes, int R, int T) {
    const int L = lattice.side();
    if (R < 1 || T < 1 || 2 * R > L || 2 * T > L) {
        throw SideTooLong("rectangle sides must satisfy 1 <= R,T <= L/2");
    }
    const int ax_i = axes.first;
    const int ax_j = axes.second;
    if (ax_i == ax_j || ax_i < 0 || ax_j < 0 || ax_i >= lattice.dim() || ax_j >= lattice.dim()) {
        throw InvalidArgument("rectangle axes must be two distinct lattice axes");
    }

    Loop loop;
    loop.edges.reserve(2 * (R + T));
    int v = corner;
    for (int s = 0; s < R; ++s) {
        loop.edges.push_back(OrientedEdge{v, ax_i, +1});
        v = lattice.neighbor(v, ax_i, +1);
    }
    for (int s = 0; s < T; ++s) {
        loop.edges.push_back(OrientedEdge{v, ax_j, +1});
        v = lattice.neighbor(v, ax_j, +1);
    }
    for (int s = 0; s < R; ++s) {
        v = lattice.neighbor(v, ax_i, -1);
        loop.edges.push_back(OrientedEdge{v, ax_i, -1});
    }
    for (int s = 0; s < T; ++s) {
        v = lattice.neighbor(v, ax_j, -1);
        loop.edges.push_back(OrientedEdge{v, ax_j, -1});
    }
    return loop;
}

int loop_area(int R, int T) { return R * T; }

bool loop_is_closed(const TorusLattice& lattice, const Loop& loop) {
    if (loop.edges.empty()) {
        return false;
    }
    auto tail = [&](const OrientedEdge& e) {
        return e.orientation > 0 ? e.base : lattice.neighbor(e.base, e.dir, +1);
    };
    auto head = [&](const OrientedEdge& e) {
        return e.orientation > 0 ? lattice.neighbor(e.base, e.dir, +1) : e.base;
    };
    for (std::size_t k = 0; k + 1 < loop.edges.size(); ++k) {
        if (head(loop.edges[k]) != tail(loop.edges[k + 1])) {
            return false;
        }
    }
    return head(loop.edges.back()) == tail(loop.edges.front());
}

SlabGeometry::SlabGeometry(const TorusLattice& parent_, int k_)
    : parent(&parent_), k(k_), slice(parent_.dim() - 1, parent_.side()) {
    if (parent_.dim() < 2) {
        throw InvalidArgument("slab needs a parent of dimension >= 2");
    }
    if (k_ < 0 || k_ >= parent_.side()) {
        throw InvalidArgument("slab height k out of range");
    }
}

int SlabGeometry::lift(int slice_vertex, int plane) const {
    const Coords sc = slice.coords(slice_vertex);
    Coords pc{};
    for (int i = 0; i < slice.dim(); ++i) {
        pc[i] = sc[i];
    }
    pc[parent->dim() - 1] = plane % parent->side();
    return parent->vertex_index(pc);
}

int SlabGeometry::vertical_edge(int slice_vertex) const {
    return parent->edge_index(lift(slice_vertex, k), parent->dim() - 1);
}

int SlabGeometry::bottom_edge(int slice_edge) const {
    const OrientedEdge& e = slice.edge(slice_edge);
    return parent->edge_index(lift(e.base, k), e.dir);
}

int SlabGeometry::top_edge(int slice_edge) const {
    const OrientedEdge& e = slice.edge(slice_edge);
    return parent->edge_index(lift(e.base, k + 1), e.dir);
}

} // namespace latgauge
