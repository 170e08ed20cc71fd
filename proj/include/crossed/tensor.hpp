#pragma once

#include "crossed/complex.hpp"

#include <memory>
#include <vector>

namespace crossed {

/// Graded element of a crossed complex: a word in dimension 1, a formal
/// consequence in dimension 2, a module element above.
struct GradedElem {
    int dim = 0;
    Word w;
    Dim2Elem d2;
    ModuleElem mod;

    static GradedElem word(Word u) { return {1, std::move(u), {}, {}}; }
    static GradedElem dim2(Dim2Elem c) { return {2, {}, std::move(c), {}}; }
    static GradedElem module(int dim, ModuleElem m) { return {dim, {}, {}, std::move(m)}; }
};

struct TensorFactor {
    int vertex;
    Sym gen;
    int dim;
};

/// Free generator of a tensor complex: an ordered tuple of positive-
/// dimension generators from distinct factors, supported on a clique of the
/// underlying graph. Single-factor tuples are the inherited generators.
struct TensorGen {
    std::vector<TensorFactor> factors;
    int dim() const {
        int d = 0;
        for (const TensorFactor& f : factors) d += f.dim;
        return d;
    }
    Sym name() const;   // factor names joined with "(tensor)"
};

/// All cliques of the graph (non-empty, vertices in the well-order),
/// sorted by size then lexicographically.
std::vector<std::vector<int>> nerve_cliques(const GraphSpec& graph);

/// Tensor product of free reduced crossed complexes over the clique nerve
/// of a graph: one factor complex per vertex, coefficient group the graph
/// product of the factor groups, boundaries computed by the bimorphism
/// rules. A complete graph gives the full tensor product.
class TensorComplex {
public:
    const CrossedComplexSpec& spec() const { return *spec_; }
    std::shared_ptr<const CrossedComplexSpec> spec_ptr() const { return spec_; }
    const GraphSpec& graph() const { return graph_; }

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const CrossedComplexSpec& atom(int i) const { return *atoms_[static_cast<std::size_t>(i)]; }
    std::shared_ptr<const CrossedComplexSpec> atom_ptr(int i) const {
        return atoms_[static_cast<std::size_t>(i)];
    }

    const std::vector<TensorGen>& gens(int dim) const;
    const TensorGen* find(Sym name) const;

    /// Universal pairing. a and b are elements of distinct factor complexes
    /// (vertex_a strictly before vertex_b); module coefficients may be given
    /// over the factor group and are embedded. Result lives in this complex.
    GradedElem pair(const GradedElem& a, int vertex_a, const GradedElem& b, int vertex_b) const;
    /// Two-factor convenience: a from the first factor, b from the second.
    GradedElem bim_eval(const GradedElem& a, const GradedElem& b) const;

    RingElem embed_ring(const RingElem& r, int vertex) const;
    ModuleElem embed_module(const ModuleElem& m, int vertex) const;

    /// Boundary of a tuple generator, one dimension down, in expanded form.
    GradedElem tensor_boundary(const TensorGen& t) const;

    /// Display form of the boundary before bimorphism expansion.
    std::string raw_boundary(const TensorGen& t) const;

    friend TensorComplex graph_tensor(const GraphSpec&,
                                      std::vector<std::shared_ptr<const CrossedComplexSpec>>,
                                      int);

private:
    TensorComplex() = default;
    struct Builder;

    GraphSpec graph_;
    std::vector<std::shared_ptr<const CrossedComplexSpec>> atoms_;
    std::shared_ptr<const CrossedComplexSpec> spec_;
    std::map<Sym, TensorGen, SymNameLess> registry_;
    std::vector<std::vector<TensorGen>> by_dim_;   // [n-1] = dim-n tuples
};

/// Graph tensor product. The graph's vertex_groups are taken from the
/// atoms; a boundary term leaving the clique subcomplex is a hard error.
TensorComplex graph_tensor(const GraphSpec& graph,
                           std::vector<std::shared_ptr<const CrossedComplexSpec>> atoms,
                           int maxdim);

/// Full tensor product A (x) B: the graph tensor over a complete 2-vertex
/// graph. Generator names of the factors must be disjoint.
TensorComplex tensor_complex(std::shared_ptr<const CrossedComplexSpec> a,
                             std::shared_ptr<const CrossedComplexSpec> b, int maxdim);

/// Iterated product with flat tuples: the factors of a are kept as separate
/// vertices and b is appended, over a complete graph.
TensorComplex tensor_flatten(const TensorComplex& a,
                             std::shared_ptr<const CrossedComplexSpec> b, int maxdim);

GraphSpec complete_graph(std::vector<std::string> vertices);

} // namespace crossed
