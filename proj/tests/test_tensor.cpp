#include "crossed/chain.hpp"
#include "crossed/resolution.hpp"
#include "crossed/tensor.hpp"

#include <doctest.h>

#include <memory>

using namespace crossed;

namespace {

std::shared_ptr<const CrossedComplexSpec> pres(const std::string& gen, const std::string& rel,
                                               long long p) {
    GroupPtr g = Group::cyclic(p);
    return std::make_shared<CrossedComplexSpec>(presentation_complex(
        g, {{gen, g->parse_elem("t")}}, {{rel, Word::generator(Sym::intern(gen), p)}}));
}

Sym s(const char* name) { return Sym::intern(name); }

} // namespace

TEST_CASE("nerve cliques") {
    GraphSpec square;
    square.vertices = {"A", "B", "C", "D"};
    square.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    square.vertex_groups.resize(4);
    auto cl = nerve_cliques(square);
    CHECK(cl.size() == 8);   // 4 vertices + 4 edges, no triangles
    int edges = 0;
    for (const auto& c : cl) edges += c.size() == 2;
    CHECK(edges == 4);

    auto k3 = nerve_cliques(complete_graph({"A", "B", "C"}));
    CHECK(k3.size() == 7);   // 3 + 3 + 1

    GraphSpec edgeless;
    edgeless.vertices = {"A", "B"};
    edgeless.vertex_groups.resize(2);
    CHECK(nerve_cliques(edgeless).size() == 2);
}

TEST_CASE("bimorphism on basis pairs and composites") {
    auto A = pres("x", "r", 2);
    auto B = pres("y", "s", 3);
    TensorComplex t = tensor_complex(A, B, 4);

    // basis pair
    GradedElem xy = t.bim_eval(GradedElem::word(Word::generator(s("x"))),
                               GradedElem::word(Word::generator(s("y"))));
    CHECK(xy.dim == 2);
    CHECK(same_factors(xy.d2, Dim2Elem::generator(s("x(tensor)y"))));

    // biadditive in the module range: (r + r') (x) y with r' = r^x
    Dim2Elem rr = Dim2Elem::generator(s("r")) * Dim2Elem::generator(s("r"), 1, Word::generator(s("x")));
    GradedElem lhs = t.bim_eval(GradedElem::dim2(rr), GradedElem::word(Word::generator(s("y"))));
    GradedElem a1 = t.bim_eval(GradedElem::dim2(Dim2Elem::generator(s("r"))),
                               GradedElem::word(Word::generator(s("y"))));
    CHECK(lhs.dim == 3);
    // theta(r^x, y) = (r (x) y) * phi(x)
    ModuleElem expect = a1.mod + a1.mod.acted(t.spec().phi().apply(Word::generator(s("x"))));
    CHECK(lhs.mod == expect);

    // crossed expansion of a length-2 word against a generator
    GradedElem w2 = t.bim_eval(GradedElem::word(Word::generator(s("x"), 2)),
                               GradedElem::word(Word::generator(s("y"))));
    Dim2Elem want = Dim2Elem::generator(s("x(tensor)y")) *
                    Dim2Elem::generator(s("x(tensor)y"), 1, Word::generator(s("x")));
    CHECK(same_factors(w2.d2, want));
}

TEST_CASE("golden boundaries of the length-2 tensor") {
    for (long long p : {2, 3, 4}) {
        for (long long q : {2, 3, 4}) {
            auto A = pres("x", "r", p);
            auto B = pres("y", "s", q);
            TensorComplex t = tensor_complex(A, B, 4);
            const CrossedComplexSpec& spec = t.spec();

            // T1..T4 bases
            CHECK(spec.basis(1).size() == 2);
            CHECK(spec.basis(2).size() == 3);
            CHECK(spec.basis(3).size() == 2);
            CHECK(spec.basis(4).size() == 1);

            // delta2(x (x) y) = y^-1 x^-1 y x
            CHECK(spec.relator(s("x(tensor)y")) == Word::parse("y^-1 x^-1 y x"));

            // delta3(r (x) y) = r^-1 r^y prod_i (x (x) y)^{x^i}
            Dim2Elem ry;
            ry.append(s("r"), -1, Word());
            ry.append(s("r"), 1, Word::generator(s("y")));
            for (long long i = 0; i < p; ++i)
                ry.append(s("x(tensor)y"), 1, Word::generator(s("x"), i));
            CHECK(same_factors(spec.boundary3(s("r(tensor)y")), ry));

            // delta3(x (x) s) = (x (x) delta2 s)^-1 s^-1 s^x
            Dim2Elem xs;
            for (long long i = 0; i < q; ++i)
                xs.append(s("x(tensor)y"), -1, Word::generator(s("y"), i));
            xs.append(s("s"), -1, Word());
            xs.append(s("s"), 1, Word::generator(s("x")));
            CHECK(same_factors(spec.boundary3(s("x(tensor)s")), xs));

            // delta4(r (x) s) = (x (x) s) * norm(x) + (r (x) y) * norm(y)
            GroupPtr gt = spec.group();
            RingElem nx(gt), ny(gt);
            GroupElem ex = spec.phi().apply(Word::generator(s("x")));
            GroupElem ey = spec.phi().apply(Word::generator(s("y")));
            for (long long i = 0; i < p; ++i) nx.add_term(gt->pow(ex, i).data, 1);
            for (long long i = 0; i < q; ++i) ny.add_term(gt->pow(ey, i).data, 1);
            ModuleElem rs = ModuleElem::of(s("x(tensor)s"), nx) + ModuleElem::of(s("r(tensor)y"), ny);
            CHECK(spec.boundary_n(s("r(tensor)s")) == rs);

            ValidateOptions opt;
            opt.samples = 200;
            CHECK(validate_axioms(spec, opt).all_pass());
        }
    }
}

TEST_CASE("tensor with the trivial complex is a copy") {
    auto A = pres("x", "r", 3);
    GroupPtr triv = Group::trivial();
    auto T = std::make_shared<CrossedComplexSpec>(
        CrossedComplexSpec(triv, EvalHom{triv, {}}, {}, 1));
    TensorComplex t = tensor_complex(A, T, 2);
    CHECK(t.spec().basis(1).size() == 1);
    CHECK(t.spec().basis(2).size() == 1);
    CHECK(t.spec().relator(s("r")) == A->relator(s("r")));
    CHECK(validate_axioms(t.spec(), {}).all_pass());
}

TEST_CASE("basis symmetry of the two factor orders") {
    auto A = pres("x", "r", 2);
    auto B = pres("y", "s", 3);
    TensorComplex ab = tensor_complex(A, B, 4);
    TensorComplex ba = tensor_complex(B, A, 4);
    for (int n = 1; n <= 4; ++n) {
        CHECK(ab.gens(n).size() == ba.gens(n).size());
        // a (x) b <-> b (x) a as tuples
        for (const TensorGen& g : ab.gens(n)) {
            if (g.factors.size() == 1) continue;
            TensorGen mirror;
            mirror.factors = {TensorFactor{0, g.factors[1].gen, g.factors[1].dim},
                              TensorFactor{1, g.factors[0].gen, g.factors[0].dim}};
            CHECK(ba.find(mirror.name()) != nullptr);
        }
    }
}

TEST_CASE("homotopy addition identity for three infinite cyclic factors") {
    auto X = std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex("x"));
    auto Y = std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex("y"));
    auto Z = std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex("z"));
    TensorComplex t = graph_tensor(complete_graph({"A", "B", "C"}), {X, Y, Z}, 3);

    CHECK(t.gens(1).size() == 3);
    CHECK(t.gens(2).size() == 3);
    CHECK(t.gens(3).size() == 1);
    Sym hal = s("x(tensor)y(tensor)z");
    const Dim2Elem& d3 = t.spec().boundary3(hal);
    CHECK(delta2(d3, t.spec()).empty());
    CHECK_FALSE(abelianize2(d3, t.spec()).is_zero());   // a genuine identity, not a unit
    CHECK(validate_axioms(t.spec(), {}).all_pass());
}

TEST_CASE("square graph of infinite cyclic groups") {
    GraphSpec square;
    square.vertices = {"A", "B", "C", "D"};
    square.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    square.vertex_groups.resize(4);
    std::vector<std::shared_ptr<const CrossedComplexSpec>> atoms;
    for (const char* n : {"x", "y", "z", "w"})
        atoms.push_back(std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex(n)));
    TensorComplex t = graph_tensor(square, atoms, 3);

    CHECK(t.gens(1).size() == 4);
    CHECK(t.gens(2).size() == 4);
    CHECK(t.gens(3).size() == 0);
    CHECK(t.find(s("x(tensor)y")) != nullptr);
    CHECK(t.find(s("y(tensor)z")) != nullptr);
    CHECK(t.find(s("z(tensor)w")) != nullptr);
    CHECK(t.find(s("x(tensor)w")) != nullptr);
    CHECK(t.find(s("x(tensor)z")) == nullptr);   // diagonal: not a clique
    CHECK(validate_axioms(t.spec(), {}).all_pass());
}

TEST_CASE("edgeless and complete two-vertex graphs") {
    auto A = pres("x", "r", 2);
    auto B = pres("y", "s", 3);

    GraphSpec edgeless;
    edgeless.vertices = {"A", "B"};
    edgeless.vertex_groups.resize(2);
    TensorComplex fp = graph_tensor(edgeless, {A, B}, 4);
    CHECK(fp.gens(2).size() == 2);   // R and S only, no mixed generators
    CHECK(fp.find(s("x(tensor)y")) == nullptr);
    CHECK(validate_axioms(fp.spec(), {}).all_pass());

    // complete graph on two vertices = the ordinary tensor product
    TensorComplex full = graph_tensor(complete_graph({"A", "B"}), {A, B}, 4);
    TensorComplex plain = tensor_complex(A, B, 4);
    for (int n = 1; n <= 4; ++n) {
        REQUIRE(full.gens(n).size() == plain.gens(n).size());
        for (std::size_t i = 0; i < full.gens(n).size(); ++i)
            CHECK(full.gens(n)[i].name() == plain.gens(n)[i].name());
    }
    for (Sym r : plain.spec().basis(2))
        CHECK(full.spec().relator(r) == plain.spec().relator(r));
    for (Sym g3 : plain.spec().basis(3))
        CHECK(same_factors(full.spec().boundary3(g3), plain.spec().boundary3(g3)));
    for (Sym g4 : plain.spec().basis(4))
        CHECK(full.spec().boundary_n(g4) == plain.spec().boundary_n(g4));
}

TEST_CASE("iterated tensor coincides with the triple graph tensor") {
    auto X = std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex("x"));
    auto Y = std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex("y"));
    auto Z = std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex("z"));
    TensorComplex xy = tensor_complex(X, Y, 3);
    TensorComplex xyz = tensor_flatten(xy, Z, 3);
    TensorComplex direct = graph_tensor(complete_graph({"A", "B", "V2"}), {X, Y, Z}, 3);
    for (int n = 1; n <= 3; ++n) {
        REQUIRE(xyz.gens(n).size() == direct.gens(n).size());
        for (std::size_t i = 0; i < xyz.gens(n).size(); ++i)
            CHECK(xyz.gens(n)[i].name() == direct.gens(n)[i].name());
    }
    Sym hal = s("x(tensor)y(tensor)z");
    CHECK(same_factors(xyz.spec().boundary3(hal), direct.spec().boundary3(hal)));
}

TEST_CASE("tensor homology matches the standard resolution of the product") {
    struct Case {
        long long p, q;
    };
    for (Case c : {Case{2, 2}, Case{2, 3}}) {
        auto A = pres("x", "r", c.p);
        auto B = pres("y", "s", c.q);
        TensorComplex t = tensor_complex(A, B, 3);
        ChainComplex tc = to_chain_complex(t.spec(), 3);

        GroupPtr prod = Group::direct_product(Group::cyclic(c.p), Group::cyclic(c.q));
        ChainComplex sc = to_chain_complex(standard_resolution(prod, 3), 3);

        for (int n = 1; n <= 2; ++n) CHECK(homology_over_Z(tc, n) == homology_over_Z(sc, n));
    }
}

TEST_CASE("tensor of full resolutions is exact below the truncation") {
    auto A = std::make_shared<CrossedComplexSpec>(cyclic_resolution(2, 3, "x"));
    auto B = std::make_shared<CrossedComplexSpec>(cyclic_resolution(3, 3, "y"));
    TensorComplex t = graph_tensor(complete_graph({"A", "B"}), {A, B}, 3);
    CHECK(validate_axioms(t.spec(), {}).all_pass());
    ExactnessReport rep = exactness_check(t.spec(), 2);
    CHECK(rep.exact);

    // and its low homology is that of C6
    ChainComplex ch = to_chain_complex(t.spec(), 3);
    CHECK(homology_over_Z(ch, 0) == std::vector<Int>{0});
    CHECK(homology_over_Z(ch, 1) == std::vector<Int>{6});
    CHECK(homology_over_Z(ch, 2) == std::vector<Int>{});
}

TEST_CASE("name collisions between factors are rejected") {
    auto A = pres("x", "r", 2);
    auto B = pres("x", "rr", 3);
    CHECK_THROWS_AS(tensor_complex(A, B, 3), Error);
    // with_prefix resolves the clash
    auto B2 = std::make_shared<CrossedComplexSpec>(with_prefix(*B, "b."));
    TensorComplex t = tensor_complex(A, B2, 3);
    CHECK(t.find(s("x(tensor)b.x")) != nullptr);
}
