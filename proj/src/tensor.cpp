#include "crossed/tensor.hpp"

#include <algorithm>
#include <functional>

namespace crossed {

Sym TensorGen::name() const {
    std::string out;
    for (const TensorFactor& f : factors) {
        if (!out.empty()) out += "(tensor)";
        out += f.gen.str();
    }
    return Sym::intern(out);
}

std::vector<std::vector<int>> nerve_cliques(const GraphSpec& graph) {
    int n = static_cast<int>(graph.vertices.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> extend = [&](int start) {
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!graph.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            out.push_back(cur);
            extend(v + 1);
            cur.pop_back();
        }
    };
    extend(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

GraphSpec complete_graph(std::vector<std::string> vertices) {
    GraphSpec g;
    g.vertices = std::move(vertices);
    int n = static_cast<int>(g.vertices.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    g.vertex_groups.resize(static_cast<std::size_t>(n));
    return g;
}

// --- builder -----------------------------------------------------------------

struct TensorComplex::Builder {
    TensorComplex t;
    GroupPtr gt;
    CrossedComplexSpec* spec = nullptr;   // owned via t.spec_ (mutable during build)
    std::map<Sym, TensorFactor, SymNameLess> single;   // every factor generator

    const CrossedComplexSpec& atom(int v) const { return *t.atoms_[static_cast<std::size_t>(v)]; }

    GroupElem phi_t(const Word& u) const { return spec->phi().apply(u); }

    RingElem embed_ring(const RingElem& r, int vertex) const {
        RingElem out(gt);
        for (const auto& [e, c] : r.terms())
            out.add_term(gt->embed(vertex, r.group()->from_data(e)).data, c);
        return out;
    }

    ModuleElem embed_module(const ModuleElem& m, int vertex) const {
        ModuleElem out(gt);
        for (const auto& [b, c] : m.terms()) out.add_term(b, embed_ring(c, vertex));
        return out;
    }

    GradedElem zero(int dim) const {
        if (dim == 2) return GradedElem::dim2({});
        return GradedElem::module(dim, ModuleElem::zero(gt));
    }

    GradedElem gen_elem(Sym g, int dim) const {
        if (dim == 1) return GradedElem::word(Word::generator(g));
        if (dim == 2) return GradedElem::dim2(Dim2Elem::generator(g));
        return GradedElem::module(dim, ModuleElem::of(g, RingElem::unit(gt)));
    }

    const TensorFactor& info(Sym g) const {
        auto it = single.find(g);
        if (it == single.end())
            throw Error("tensor: '" + g.str() + "' is not a factor generator");
        return it->second;
    }

    Sym merge(const TensorFactor& f, const TensorGen& rest) const {
        if (!rest.factors.empty() && f.vertex >= rest.factors.front().vertex)
            throw Error("tensor: pairing out of vertex order");
        TensorGen merged;
        merged.factors.push_back(f);
        merged.factors.insert(merged.factors.end(), rest.factors.begin(), rest.factors.end());
        Sym nm = merged.name();
        if (!t.registry_.count(nm))
            throw Error("tensor: boundary term '" + nm.str() +
                        "' leaves the clique subcomplex");
        return nm;
    }

    const TensorGen& tuple_of(Sym g) const {
        auto it = t.registry_.find(g);
        if (it == t.registry_.end()) throw Error("tensor: unknown generator '" + g.str() + "'");
        return it->second;
    }

    // theta(a, b) for a a single factor generator
    GradedElem bim_gen(const TensorFactor& af, const GradedElem& b) const {
        int total = af.dim + b.dim;
        if (b.dim == 1) {
            const Word& v = b.w;
            if (v.empty()) return zero(total);
            if (v.size() == 1) {
                const Letter& l = v.letters()[0];
                Sym merged = merge(af, TensorGen{{info(l.gen)}});
                if (l.exp > 0) {
                    if (total == 2) return GradedElem::dim2(Dim2Elem::generator(merged));
                    return GradedElem::module(total, ModuleElem::of(merged, RingElem::unit(gt)));
                }
                Word vinv = Word::generator(l.gen, -1);
                if (total == 2)
                    return GradedElem::dim2(Dim2Elem::generator(merged, -1, vinv));
                return GradedElem::module(
                    total, ModuleElem::of(merged, RingElem::of(phi_t(vinv), -1)));
            }
            Word first = Word::generator(v.letters()[0].gen, v.letters()[0].exp);
            Word rest;
            {
                std::vector<std::pair<Sym, long long>> raw;
                for (std::size_t i = 1; i < v.letters().size(); ++i)
                    raw.emplace_back(v.letters()[i].gen, v.letters()[i].exp);
                rest = Word::reduced(raw);
            }
            GradedElem a1 = bim_gen(af, GradedElem::word(first));
            GradedElem a2 = bim_gen(af, GradedElem::word(rest));
            if (total == 2)
                return GradedElem::dim2(a1.d2.acted_by(rest) * a2.d2);
            return GradedElem::module(total, a1.mod.acted(phi_t(rest)) + a2.mod);
        }
        if (b.dim == 2) {
            ModuleElem out(gt);
            for (const Dim2Factor& f : b.d2.factors()) {
                Sym merged = merge(af, tuple_of(f.gen));
                out.add_term(merged, RingElem::of(phi_t(f.op), f.exp));
            }
            return GradedElem::module(total, out);
        }
        ModuleElem out(gt);
        for (const auto& [z, rho] : b.mod.terms()) {
            Sym merged = merge(af, tuple_of(z));
            out.add_term(merged, rho);
        }
        return GradedElem::module(total, out);
    }

    // theta(a, b), decomposing a first
    GradedElem bim(const GradedElem& a, const GradedElem& b) const {
        int total = a.dim + b.dim;
        if (a.dim == 1) {
            const Word& u = a.w;
            if (u.empty()) return zero(total);
            if (u.size() == 1) {
                const Letter& l = u.letters()[0];
                if (l.exp > 0) return bim_gen(info(l.gen), b);
                GradedElem e = bim_gen(info(l.gen), b);
                Word xinv = Word::generator(l.gen, -1);
                if (total == 2) return GradedElem::dim2(e.d2.inverse().acted_by(xinv));
                return GradedElem::module(total, (-e.mod).acted(phi_t(xinv)));
            }
            Word first = Word::generator(u.letters()[0].gen, u.letters()[0].exp);
            Word rest;
            {
                std::vector<std::pair<Sym, long long>> raw;
                for (std::size_t i = 1; i < u.letters().size(); ++i)
                    raw.emplace_back(u.letters()[i].gen, u.letters()[i].exp);
                rest = Word::reduced(raw);
            }
            GradedElem a1 = bim(GradedElem::word(first), b);
            GradedElem a2 = bim(GradedElem::word(rest), b);
            if (total == 2)
                return GradedElem::dim2(a2.d2 * a1.d2.acted_by(rest));
            return GradedElem::module(total, a2.mod + a1.mod.acted(phi_t(rest)));
        }
        if (a.dim == 2) {
            ModuleElem out(gt);
            for (const Dim2Factor& f : a.d2.factors()) {
                GradedElem piece = bim_gen(info(f.gen), b);
                out = out + piece.mod.scaled(f.exp).acted(phi_t(f.op));
            }
            return GradedElem::module(total, out);
        }
        ModuleElem out(gt);
        for (const auto& [z, rho] : a.mod.terms()) {
            GradedElem piece = bim_gen(info(z), b);
            out = out + piece.mod.acted(rho);
        }
        return GradedElem::module(total, out);
    }

    // boundary data of a single factor, embedded into the tensor complex
    GradedElem atom_boundary(const TensorFactor& f) const {
        const CrossedComplexSpec& a = atom(f.vertex);
        if (f.dim == 2) return GradedElem::word(a.relator(f.gen));
        if (f.dim == 3) return GradedElem::dim2(a.boundary3(f.gen));
        return GradedElem::module(f.dim - 1, embed_module(a.boundary_n(f.gen), f.vertex));
    }

    GradedElem stored_boundary(const TensorGen& g) const {
        int d = g.dim();
        Sym nm = g.name();
        if (d == 2) return GradedElem::word(spec->relator(nm));
        if (d == 3) return GradedElem::dim2(spec->boundary3(nm));
        return GradedElem::module(d - 1, spec->boundary_n(nm));
    }

    GradedElem boundary_of(const TensorGen& tg) const {
        if (tg.factors.size() == 1) return atom_boundary(tg.factors[0]);

        const TensorFactor& f = tg.factors[0];
        TensorGen rest{std::vector<TensorFactor>(tg.factors.begin() + 1, tg.factors.end())};
        Sym rest_sym = rest.name();
        int m = f.dim;
        int n = rest.dim();

        if (m == 1 && n == 1) {
            Sym y = rest.factors[0].gen;
            Word w = Word::generator(y, -1) * Word::generator(f.gen, -1) *
                     Word::generator(y) * Word::generator(f.gen);
            return GradedElem::word(std::move(w));
        }
        if (m == 1 && n == 2) {
            GradedElem tw =
                bim_gen(f, GradedElem::word(spec->relator(rest_sym)));
            Dim2Elem out = tw.d2.inverse();
            out = out * Dim2Elem::generator(rest_sym, -1);
            out = out * Dim2Elem::generator(rest_sym, 1, Word::generator(f.gen));
            return GradedElem::dim2(std::move(out));
        }
        if (m == 1 && n >= 3) {
            GradedElem tx = bim_gen(f, stored_boundary(rest));
            RingElem c = RingElem::of(phi_t(Word::generator(f.gen))) -
                         RingElem::unit(gt);
            ModuleElem out = -tx.mod + ModuleElem::of(rest_sym, c);
            return GradedElem::module(m + n - 1, std::move(out));
        }
        if (m == 2 && n == 1) {
            Sym y = rest.factors[0].gen;
            Dim2Elem out = Dim2Elem::generator(f.gen, -1);
            out = out * Dim2Elem::generator(f.gen, 1, Word::generator(y));
            GradedElem tw = bim(atom_boundary(f), GradedElem::word(Word::generator(y)));
            out = out * tw.d2;
            return GradedElem::dim2(std::move(out));
        }
        if (m >= 3 && n == 1) {
            Sym y = rest.factors[0].gen;
            GradedElem tw = bim(atom_boundary(f), GradedElem::word(Word::generator(y)));
            RingElem c = RingElem::of(phi_t(Word::generator(y))) - RingElem::unit(gt);
            if (m % 2) c = -c;
            Sym self = TensorGen{{f}}.name();
            ModuleElem out = tw.mod + ModuleElem::of(self, c);
            return GradedElem::module(m + n - 1, std::move(out));
        }
        // m >= 2, n >= 2
        GradedElem t1 = bim(atom_boundary(f), gen_elem(rest_sym, n));
        GradedElem t2 = bim_gen(f, stored_boundary(rest));
        ModuleElem out = t1.mod + (m % 2 ? -t2.mod : t2.mod);
        return GradedElem::module(m + n - 1, std::move(out));
    }
};

// --- construction --------------------------------------------------------------

TensorComplex graph_tensor(const GraphSpec& graph,
                           std::vector<std::shared_ptr<const CrossedComplexSpec>> atoms,
                           int maxdim) {
    if (maxdim < 2) throw DimensionError("graph_tensor: maxdim must be >= 2");
    if (graph.vertices.size() != atoms.size())
        throw Error("graph_tensor: one factor complex per vertex required");

    TensorComplex::Builder b;
    b.t.graph_ = graph;
    b.t.atoms_ = std::move(atoms);
    b.t.graph_.vertex_groups.resize(b.t.atoms_.size());
    for (std::size_t v = 0; v < b.t.atoms_.size(); ++v)
        b.t.graph_.vertex_groups[v] = b.t.atoms_[v]->group();
    b.gt = Group::graph_product(b.t.graph_);

    // disjoint generator names, factor lookup
    for (std::size_t v = 0; v < b.t.atoms_.size(); ++v) {
        const CrossedComplexSpec& a = *b.t.atoms_[v];
        for (int d = 1; d <= a.maxdim(); ++d)
            for (Sym g : a.basis(d)) {
                if (b.single.count(g))
                    throw Error("graph_tensor: generator name '" + g.str() +
                                "' appears in two factors");
                b.single.emplace(g, TensorFactor{static_cast<int>(v), g, d});
            }
    }

    // dimension-1 stratum and phi
    std::vector<Sym> x1;
    EvalHom phi{b.gt, {}};
    for (std::size_t v = 0; v < b.t.atoms_.size(); ++v) {
        const CrossedComplexSpec& a = *b.t.atoms_[v];
        for (Sym g : a.basis(1)) {
            x1.push_back(g);
            phi.images.emplace(
                g, b.gt->embed(static_cast<int>(v), a.phi().apply(Word::generator(g))));
        }
    }
    auto spec = std::make_shared<CrossedComplexSpec>(b.gt, std::move(phi), std::move(x1), maxdim);
    b.spec = spec.get();
    b.t.spec_ = spec;

    // enumerate clique-supported tuples, dimension by dimension
    std::vector<std::vector<int>> cliques = nerve_cliques(b.t.graph_);
    b.t.by_dim_.resize(static_cast<std::size_t>(maxdim));
    for (Sym g : spec->basis(1)) {
        TensorGen tg{{b.single.at(g)}};
        b.t.registry_.emplace(g, tg);
        b.t.by_dim_[0].push_back(tg);
    }

    for (int n = 2; n <= maxdim; ++n) {
        std::vector<TensorGen> tuples;
        for (const std::vector<int>& sigma : cliques) {
            // assignments of positive-dimension generators to every vertex
            // of sigma with total dimension n
            std::vector<std::vector<TensorFactor>> choices;
            for (int v : sigma) {
                std::vector<TensorFactor> local;
                const CrossedComplexSpec& a = b.atom(v);
                for (int d = 1; d <= a.maxdim(); ++d)
                    for (Sym g : a.basis(d)) local.push_back({v, g, d});
                choices.push_back(std::move(local));
            }
            std::vector<std::size_t> pick(sigma.size(), 0);
            if (std::any_of(choices.begin(), choices.end(),
                            [](const auto& c) { return c.empty(); }))
                continue;
            for (;;) {
                TensorGen tg;
                int total = 0;
                for (std::size_t i = 0; i < sigma.size(); ++i) {
                    tg.factors.push_back(choices[i][pick[i]]);
                    total += tg.factors.back().dim;
                }
                if (total == n) tuples.push_back(tg);
                std::size_t i = sigma.size();
                while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
                if (i == 0) break;
            }
        }
        for (const TensorGen& tg : tuples) {
            Sym nm = tg.name();
            GradedElem bd = b.boundary_of(tg);
            if (n == 2) {
                spec->add_relator(nm, bd.w);
            } else if (n == 3) {
                spec->add_gen3(nm, bd.d2);
            } else {
                spec->add_gen_n(n, nm, bd.mod);
            }
            b.t.registry_.emplace(nm, tg);
            b.t.by_dim_[static_cast<std::size_t>(n) - 1].push_back(tg);
        }
    }
    return std::move(b.t);
}

TensorComplex tensor_complex(std::shared_ptr<const CrossedComplexSpec> a,
                             std::shared_ptr<const CrossedComplexSpec> b, int maxdim) {
    GraphSpec g = complete_graph({"A", "B"});
    return graph_tensor(g, {std::move(a), std::move(b)}, maxdim);
}

TensorComplex tensor_flatten(const TensorComplex& a,
                             std::shared_ptr<const CrossedComplexSpec> b, int maxdim) {
    std::vector<std::string> names = a.graph().vertices;
    names.push_back("V" + std::to_string(names.size()));
    GraphSpec g = complete_graph(std::move(names));
    // flattening a non-complete graph would change the basis
    for (std::size_t u = 0; u < a.graph().vertices.size(); ++u)
        for (std::size_t v = u + 1; v < a.graph().vertices.size(); ++v)
            if (!a.graph().has_edge(static_cast<int>(u), static_cast<int>(v)))
                throw Error("tensor_flatten: left factor is not a full tensor product");
    std::vector<std::shared_ptr<const CrossedComplexSpec>> atoms;
    for (int i = 0; i < a.atom_count(); ++i) atoms.push_back(a.atom_ptr(i));
    atoms.push_back(std::move(b));
    return graph_tensor(g, std::move(atoms), maxdim);
}

// --- queries -------------------------------------------------------------------

const std::vector<TensorGen>& TensorComplex::gens(int dim) const {
    static const std::vector<TensorGen> empty;
    if (dim < 1 || dim > static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[static_cast<std::size_t>(dim) - 1];
}

const TensorGen* TensorComplex::find(Sym name) const {
    auto it = registry_.find(name);
    return it == registry_.end() ? nullptr : &it->second;
}

RingElem TensorComplex::embed_ring(const RingElem& r, int vertex) const {
    RingElem out(spec_->group());
    for (const auto& [e, c] : r.terms())
        out.add_term(spec_->group()->embed(vertex, r.group()->from_data(e)).data, c);
    return out;
}

ModuleElem TensorComplex::embed_module(const ModuleElem& m, int vertex) const {
    ModuleElem out(spec_->group());
    for (const auto& [b, c] : m.terms()) out.add_term(b, embed_ring(c, vertex));
    return out;
}

GradedElem TensorComplex::pair(const GradedElem& a, int vertex_a, const GradedElem& b,
                               int vertex_b) const {
    if (vertex_a >= vertex_b) throw Error("pair: factors must be in vertex order");
    Builder helper;
    helper.t = *this;
    helper.gt = spec_->group();
    helper.spec = const_cast<CrossedComplexSpec*>(spec_.get());
    for (const auto& [nm, tg] : registry_)
        if (tg.factors.size() == 1) helper.single.emplace(nm, tg.factors[0]);
    GradedElem ea = a;
    GradedElem eb = b;
    if (ea.dim >= 3 && ea.mod.group() && !ea.mod.group()->same(*helper.gt))
        ea.mod = embed_module(ea.mod, vertex_a);
    if (eb.dim >= 3 && eb.mod.group() && !eb.mod.group()->same(*helper.gt))
        eb.mod = embed_module(eb.mod, vertex_b);
    return helper.bim(ea, eb);
}

GradedElem TensorComplex::bim_eval(const GradedElem& a, const GradedElem& b) const {
    return pair(a, 0, b, atom_count() - 1);
}

GradedElem TensorComplex::tensor_boundary(const TensorGen& t) const {
    Sym nm = t.name();
    if (!registry_.count(nm)) throw Error("tensor_boundary: unknown generator " + nm.str());
    int d = t.dim();
    if (d < 2) throw DimensionError("tensor_boundary: dimension 1 has no boundary data");
    if (d == 2) return GradedElem::word(spec_->relator(nm));
    if (d == 3) return GradedElem::dim2(spec_->boundary3(nm));
    return GradedElem::module(d - 1, spec_->boundary_n(nm));
}

std::string TensorComplex::raw_boundary(const TensorGen& t) const {
    auto nm = [](const TensorGen& g) { return g.name().str(); };
    if (t.factors.size() == 1) {
        return "delta(" + t.factors[0].gen.str() + ") in its factor complex";
    }
    TensorGen rest{std::vector<TensorFactor>(t.factors.begin() + 1, t.factors.end())};
    const TensorFactor& f = t.factors[0];
    int m = f.dim;
    int n = rest.dim();
    std::string a = f.gen.str();
    std::string b = nm(rest);
    if (m == 1 && n == 1)
        return b + "^-1 " + a + "^-1 " + b + " " + a;
    if (m == 1 && n == 2)
        return "(" + a + " (x) d2 " + b + ")^-1 * " + b + "^-1 * " + b + "^" + a;
    if (m == 1)
        return "-(" + a + " (x) d" + std::to_string(n) + " " + b + ") + " + b + "*(" + a +
               " - 1)";
    if (m == 2 && n == 1)
        return a + "^-1 * " + a + "^" + b + " * (d2 " + a + " (x) " + b + ")";
    if (n == 1)
        return (m % 2 ? "-" : "+") + std::string(b) + "*(" + b + " - 1) ... + (d" +
               std::to_string(m) + " " + a + " (x) " + b + ")";
    return "(d" + std::to_string(m) + " " + a + " (x) " + b + ") " + (m % 2 ? "-" : "+") +
           " (" + a + " (x) d" + std::to_string(n) + " " + b + ")";
}

} // namespace crossed
