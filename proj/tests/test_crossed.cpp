#include "crossed/complex.hpp"
#include "crossed/resolution.hpp"

#include "support/helpers.hpp"

#include <doctest.h>

#include <random>

using namespace crossed;
using namespace crossed::testsupport;

namespace {

// <x | r = x^3> over C3
CrossedComplexSpec small_spec() {
    GroupPtr g = Group::cyclic(3);
    return presentation_complex(g, {{"x", g->parse_elem("t")}}, {{"r", Word::parse("x x x")}});
}

Sym sx = Sym::intern("x");
Sym sr = Sym::intern("r");

} // namespace

TEST_CASE("delta2 of conjugated generators") {
    CrossedComplexSpec spec = small_spec();
    CHECK(delta2(Dim2Elem::generator(sr), spec) == Word::parse("x x x"));
    Word u = Word::parse("x x");
    CHECK(delta2(Dim2Elem::generator(sr, 1, u), spec) == conj(Word::parse("x x x"), u));
    Dim2Elem pair = Dim2Elem::generator(sr, 1, u) * Dim2Elem::generator(sr, -1, u);
    CHECK(delta2(pair, spec).empty());
    CHECK_THROWS_AS(delta2(Dim2Elem::generator(sx), spec), AlphabetError);
}

TEST_CASE("act2 laws") {
    CrossedComplexSpec spec = small_spec();
    Word u = Word::parse("x");
    Word v = Word::parse("x x");
    Dim2Elem c = Dim2Elem::generator(sr, 1, u);
    CHECK(same_factors(act2(c, v), Dim2Elem::generator(sr, 1, u * v)));
    CHECK(same_factors(act2(c, Word()), c));
    CHECK(eq2(act2(act2(c, u), u.inverse()), c, spec));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        Dim2Elem d = random_dim2(rng, spec, 4, 6);
        Word a = random_word(rng, spec.basis(1), 5);
        Word b = random_word(rng, spec.basis(1), 5);
        CHECK(eq2(act2(act2(d, a), b), act2(d, a * b), spec));
        // CM1
        CHECK(delta2(act2(d, a), spec) == conj(delta2(d, spec), a));
    }
}

TEST_CASE("abelianize2") {
    CrossedComplexSpec spec = small_spec();
    GroupPtr g = spec.group();
    CHECK(abelianize2(Dim2Elem::generator(sr), spec) ==
          ModuleElem::of(sr, RingElem::unit(g)));
    Word u = Word::parse("x");
    Dim2Elem cancel = Dim2Elem::generator(sr, 1, u) * Dim2Elem::generator(sr, -1, u);
    CHECK(abelianize2(cancel, spec).is_zero());
    Dim2Elem mixed = Dim2Elem::generator(sr, 1, u) * Dim2Elem::generator(sr, -1, Word());
    ModuleElem expect =
        ModuleElem::of(sr, RingElem::of(g->parse_elem("t")) - RingElem::unit(g));
    CHECK(abelianize2(mixed, spec) == expect);
}

TEST_CASE("peiffer commutators die under delta2 and abelianize2") {
    CrossedComplexSpec spec = small_spec();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        Dim2Elem h = random_dim2(rng, spec, 4, 6);
        Dim2Elem k = random_dim2(rng, spec, 4, 6);
        Dim2Elem p = peiffer(h, k, spec);
        CHECK(delta2(p, spec).empty());
        CHECK(abelianize2(p, spec).is_zero());
        // expansion oracle: ab(h^-1 k^-1 h k^dh) = ab(k)(phi(delta2 h) - 1),
        // and phi kills delta2 h
        RingElem shift = RingElem::of(spec.phi().apply(delta2(h, spec))) -
                         RingElem::unit(spec.group());
        CHECK(abelianize2(k, spec).acted(shift) == abelianize2(p, spec));
        // neutral element in the free crossed module
        CHECK(eq2(mul2(h, p), h, spec));
    }
    Dim2Elem h = Dim2Elem::generator(sr, 1, Word::parse("x"));
    CHECK(eq2(peiffer(h, Dim2Elem(), spec), Dim2Elem(), spec));
}

TEST_CASE("eq2 is a complete invariant") {
    GroupPtr g = Group::cyclic(4);
    CrossedComplexSpec spec = presentation_complex(
        g, {{"a", g->parse_elem("t")}, {"b", g->parse_elem("t^2")}},
        {{"p", Word::parse("a a a a")}, {"q", Word::parse("b a^-2")}});
    Sym sp = Sym::intern("p");
    Sym sq = Sym::intern("q");

    CHECK_FALSE(eq2(Dim2Elem::generator(sp), Dim2Elem::generator(sq), spec));
    CHECK(eq2(Dim2Elem::generator(sp), Dim2Elem::generator(sp), spec));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        Dim2Elem c = random_dim2(rng, spec, 3, 5);
        Dim2Elem d = random_dim2(rng, spec, 3, 5);
        Dim2Elem e = random_dim2(rng, spec, 3, 5);
        // congruence for mul2 and act2
        if (eq2(c, d, spec)) {
            CHECK(eq2(mul2(c, e), mul2(d, e), spec));
            Word u = random_word(rng, spec.basis(1), 4);
            CHECK(eq2(act2(c, u), act2(d, u), spec));
        }
        // c and c * peiffer(d, e) are the same element
        CHECK(eq2(c, mul2(c, peiffer(d, e, spec)), spec));
        // CM2 rewriting invariance
        CHECK(eq2(mul2(c, d), mul2(d, act2(c, delta2(d, spec))), spec));
        // abelianize respects the action through phi
        Word u = random_word(rng, spec.basis(1), 4);
        CHECK(abelianize2(act2(c, u), spec) ==
              abelianize2(c, spec).acted(spec.phi().apply(u)));
    }
}

TEST_CASE("eq2 over nonabelian coefficients") {
    // presentation of S3: phi sends a to a 3-cycle, b to a transposition
    GroupPtr g = Group::symmetric3();
    CrossedComplexSpec spec = presentation_complex(
        g, {{"a", g->parse_elem("r")}, {"b", g->parse_elem("s")}},
        {{"p", Word::parse("a a a")}, {"q", Word::parse("b b")},
         {"c", Word::parse("b a b a")}});   // s r s = r^-1
    CHECK(g->is_identity(spec.phi().apply(spec.relator(Sym::intern("c")))));

    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        Dim2Elem c = random_dim2(rng, spec, 3, 6);
        Dim2Elem d = random_dim2(rng, spec, 3, 6);
        Dim2Elem e = random_dim2(rng, spec, 3, 6);
        CHECK(delta2(peiffer(c, d, spec), spec).empty());
        CHECK(eq2(c, mul2(c, peiffer(d, e, spec)), spec));
        CHECK(eq2(mul2(c, d), mul2(d, act2(c, delta2(d, spec))), spec));
        Word u = random_word(rng, spec.basis(1), 5);
        CHECK(abelianize2(act2(c, u), spec) ==
              abelianize2(c, spec).acted(spec.phi().apply(u)));
        CHECK(delta2(act2(c, u), spec) == conj(delta2(c, spec), u));
    }
}

TEST_CASE("delta_module linearity and delta3 expansion") {
    CrossedComplexSpec spec = cyclic_resolution(3, 6);
    GroupPtr g = spec.group();
    Sym x3 = Sym::intern("x3");
    Sym x4 = Sym::intern("x4");

    CHECK(delta_module(ModuleElem::zero(g), spec, 4).is_zero());

    std::mt19937_64 rng(13);
    std::vector<GroupElem> elems = g->elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int i = 0; i < 200; ++i) {
        RingElem r1(g), r2(g);
        for (int k = 0; k < 3; ++k) {
            r1.add_term(elems[pick(rng)].data, coeff(rng));
            r2.add_term(elems[pick(rng)].data, coeff(rng));
        }
        ModuleElem m1 = ModuleElem::of(x4, r1);
        ModuleElem m2 = ModuleElem::of(x4, r2);
        CHECK(delta_module(m1 + m2, spec, 4) ==
              delta_module(m1, spec, 4) + delta_module(m2, spec, 4));
    }

    // d(x3 * (1 - t)) = d3(x3) * (act2-free difference) in dimension 2
    RingElem d = RingElem::unit(g) - RingElem::of(g->parse_elem("t"));
    Dim2Elem expanded = delta3_of_module(ModuleElem::of(x3, d), spec);
    const Dim2Elem& base = spec.boundary3(x3);
    Dim2Elem expect = base * act2(base, spec.lift(g->parse_elem("t"))).inverse();
    CHECK(eq2(expanded, expect, spec));

    // different lifts give eq2-equal expansions
    auto padded = [&spec](const GroupElem& e) {
        return delta2(Dim2Elem::generator(Sym::intern("x2")), spec) * spec.lift(e);
    };
    Dim2Elem other = delta3_of_module(ModuleElem::of(x3, d), spec, padded);
    CHECK_FALSE(same_factors(expanded, other));
    CHECK(eq2(expanded, other, spec));
}

TEST_CASE("validate_axioms flags corrupted boundaries") {
    GroupPtr g = Group::cyclic(3);
    Sym x1 = Sym::intern("x1");
    Sym x2 = Sym::intern("x2");
    Sym x3 = Sym::intern("x3");
    EvalHom phi{g, {{x1, g->parse_elem("t")}}};
    CrossedComplexSpec bad(g, phi, {x1}, 3);
    bad.add_relator(x2, Word::generator(x1, 3));
    // wrong delta3: drops the (x2, -1, x1) factor
    bad.add_gen3(x3, Dim2Elem::generator(x2));
    Report rep = validate_axioms(bad, {});
    CHECK_FALSE(rep.all_pass());
    bool named = false;
    for (const Check& c : rep.checks)
        if (!c.pass && c.id.find("ddzero.3.x3") != std::string::npos) named = true;
    CHECK(named);

    CHECK(validate_axioms(cyclic_resolution(3, 6), {}).all_pass());
}

TEST_CASE("morphisms") {
    CrossedComplexSpec spec = cyclic_resolution(2, 4);
    CrsMorphism id = identity_morphism(spec);
    CHECK(check_morphism(id).all_pass());

    // C2 -> C4 through phi(x1) = t^2: the relator x1^2 maps to y1^4, which
    // is exactly the target relator, so f2(x2) = y2
    CrossedComplexSpec target = cyclic_resolution(4, 4, "y");
    CrossedComplexSpec src2 = cyclic_resolution(2, 2);
    Sym y1 = Sym::intern("y1");
    Sym y2 = Sym::intern("y2");
    CrsMorphism f;
    f.source = &src2;
    f.target = &target;
    f.f1.images.emplace(Sym::intern("x1"), Word::generator(y1, 2));
    f.f2.emplace(Sym::intern("x2"), Dim2Elem::generator(y2));
    CHECK(check_morphism(f).all_pass());

    // apply commutes with delta on arbitrary dimension-2 inputs
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Dim2Elem c = random_dim2(rng, src2, 4, 5);
        CHECK(f.apply1(delta2(c, src2)) == delta2(f.apply2(c), target));
        Word u = random_word(rng, src2.basis(1), 4);
        CHECK(eq2(f.apply2(act2(c, u)), act2(f.apply2(c), f.apply1(u)), target));
    }

    // corrupt the dimension-2 image: commutation with delta must fail
    CrsMorphism broken = f;
    broken.f2[Sym::intern("x2")] =
        Dim2Elem::generator(y2) * Dim2Elem::generator(y2, 1, Word::generator(y1, 2));
    Report rep = check_morphism(broken);
    CHECK_FALSE(rep.all_pass());
    bool named = false;
    for (const Check& c : rep.checks)
        if (!c.pass && c.id.find("x2") != std::string::npos) named = true;
    CHECK(named);
}
