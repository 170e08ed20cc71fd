#include "crossed/chain.hpp"
#include "crossed/complex.hpp"
#include "crossed/fox.hpp"
#include "crossed/resolution.hpp"

#include <doctest.h>

using namespace crossed;

TEST_CASE("standard resolution of C2: shape and relators") {
    GroupPtr g = Group::cyclic(2);
    CrossedComplexSpec spec = standard_resolution(g, 4);
    CHECK(spec.basis(1).size() == 2);
    CHECK(spec.basis(2).size() == 4);
    CHECK(spec.basis(3).size() == 8);
    CHECK(spec.basis(4).size() == 16);

    // w(t,t) = [t][t][1]^-1
    CHECK(spec.relator(Sym::intern("[t,t]")).str() == "[t] [t] [1]^-1");
    // phi([a]) = a
    CHECK(g->eq(spec.phi().apply(Word::generator(Sym::intern("[t]"))), g->parse_elem("t")));
}

TEST_CASE("standard resolution delta3 is the stated formula") {
    GroupPtr g = Group::cyclic(2);
    CrossedComplexSpec spec = standard_resolution(g, 3);
    // delta3[t,t,t] = [t,tt][tt,t]^-1 [t,t]^-1 [t,t]^{[t]^-1}
    const Dim2Elem& d = spec.boundary3(Sym::intern("[t,t,t]"));
    Dim2Elem expect;
    expect.append(Sym::intern("[t,1]"), 1, Word());
    expect.append(Sym::intern("[1,t]"), -1, Word());
    expect.append(Sym::intern("[t,t]"), -1, Word());
    expect.append(Sym::intern("[t,t]"), 1, Word::generator(Sym::intern("[t]"), -1));
    CHECK(same_factors(d, expect));
}

TEST_CASE("delta delta vanishes exhaustively on standard resolutions") {
    for (const GroupPtr& g : {Group::cyclic(2), Group::cyclic(3)}) {
        CrossedComplexSpec spec = standard_resolution(g, 3);
        for (Sym x : spec.basis(3)) CHECK(delta2(spec.boundary3(x), spec).empty());
    }
    // identities allowed in tuples: degenerate triples also vanish
    CrossedComplexSpec spec = standard_resolution(Group::cyclic(2), 4);
    for (Sym x : spec.basis(4))
        CHECK(eq2(delta3_of_module(spec.boundary_n(x), spec), Dim2Elem(), spec));
}

TEST_CASE("cyclic resolution boundaries") {
    CrossedComplexSpec spec = cyclic_resolution(3, 6);
    CHECK(spec.relator(Sym::intern("x2")) == Word::generator(Sym::intern("x1"), 3));
    GroupPtr g = spec.group();
    GroupElem t = g->parse_elem("t");

    // even dimensions carry the norm, odd the difference
    RingElem norm(g);
    for (long long k = 0; k < 3; ++k) norm.add_term(g->pow(t, k).data, 1);
    CHECK(spec.boundary_n(Sym::intern("x4")) == ModuleElem::of(Sym::intern("x3"), norm));
    RingElem diff = RingElem::unit(g) - RingElem::of(t);
    CHECK(spec.boundary_n(Sym::intern("x5")) == ModuleElem::of(Sym::intern("x4"), diff));
    CHECK(spec.boundary_n(Sym::intern("x6")) == ModuleElem::of(Sym::intern("x5"), norm));

    CHECK_THROWS_AS(cyclic_resolution(1, 4), Error);
    CHECK_THROWS_AS(cyclic_resolution(3, 1), DimensionError);
}

TEST_CASE("axiom suite passes for the resolution families") {
    for (long long p = 2; p <= 7; ++p) {
        Report rep = validate_axioms(cyclic_resolution(p, 6), {});
        CHECK(rep.all_pass());
    }
    for (const GroupPtr& g :
         {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4), Group::symmetric3()}) {
        ValidateOptions opt;
        opt.samples = 100;
        CHECK(validate_axioms(standard_resolution(g, 4), opt).all_pass());
    }
}

TEST_CASE("chain complex of the cyclic resolution is the periodic complex") {
    CrossedComplexSpec spec = cyclic_resolution(3, 5);
    ChainComplex ch = to_chain_complex(spec, 5);
    GroupPtr g = spec.group();

    // d2 = multiplication by the norm, d3 by 1 - t: flattened over the
    // group basis these act on Z^3
    CHECK(ch.rank(0) == 1);
    CHECK(ch.rank(2) == 1);
    Mat d2 = ch.bdry[2].dense();
    CHECK(d2.rows() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d2.at(i, j) == 1);

    Mat d3 = ch.bdry[3].dense();
    // columns of 1 - t: each column has +1 at g and -1 at g*t
    for (int j = 0; j < 3; ++j) {
        Int colsum = 0;
        for (int i = 0; i < 3; ++i) colsum += d3.at(i, j);
        CHECK(colsum == 0);
        CHECK(d3.at(j, j) == 1);
    }

    // augmentation kills d1
    for (int j = 0; j < ch.aug[1].cols(); ++j) CHECK(ch.aug[1].at(0, j) == 0);
    (void)g;
}

TEST_CASE("homology of cyclic and standard resolutions") {
    for (long long p : {2, 3, 5}) {
        ChainComplex ch = to_chain_complex(cyclic_resolution(p, 5), 4);
        CHECK(homology_over_Z(ch, 0) == std::vector<Int>{0});
        CHECK(homology_over_Z(ch, 1) == std::vector<Int>{Int(p)});
        CHECK(homology_over_Z(ch, 2) == std::vector<Int>{});
        CHECK(homology_over_Z(ch, 3) == std::vector<Int>{Int(p)});
    }
    for (long long p : {2, 3}) {
        ChainComplex st = to_chain_complex(standard_resolution(Group::cyclic(p), 4), 4);
        ChainComplex cy = to_chain_complex(cyclic_resolution(p, 4), 4);
        for (int n = 0; n <= 3; ++n) CHECK(homology_over_Z(st, n) == homology_over_Z(cy, n));
    }
}

TEST_CASE("exactness") {
    CrossedComplexSpec spec = cyclic_resolution(2, 6);
    for (int n = 2; n <= 5; ++n) {
        ExactnessReport rep = exactness_check(spec, n);
        CHECK(rep.exact);
        CHECK(rep.invariants.empty());
    }
    for (int n : {2, 3}) CHECK(exactness_check(standard_resolution(Group::cyclic(2), 4), n).exact);

    // truncation at dimension 2 leaves the identities module as kernel
    for (long long p : {2, 3, 5}) {
        ExactnessReport rep = exactness_check(cyclic_resolution(p, 2), 2);
        CHECK_FALSE(rep.exact);
        CHECK(rep.kernel_rank == p - 1);   // (1 - t) Z[C_p]
    }
}

TEST_CASE("round trip through the module grammar") {
    CrossedComplexSpec spec = cyclic_resolution(5, 6);
    const ModuleElem& m = spec.boundary_n(Sym::intern("x6"));
    CHECK(m.str() == "x5 * (1 1 + 1 t + 1 t^2 + 1 t^3 + 1 t^4)");
}
