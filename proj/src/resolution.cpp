#include "crossed/resolution.hpp"

namespace crossed {

namespace {

std::string tuple_name(const GroupPtr& g, const std::vector<GroupElem>& tup) {
    std::string out = "[";
    for (std::size_t i = 0; i < tup.size(); ++i) {
        if (i) out += ',';
        out += g->name_of(tup[i]);
    }
    out += ']';
    return out;
}

} // namespace

CrossedComplexSpec standard_resolution(const GroupPtr& g, int maxdim) {
    if (maxdim < 2) throw DimensionError("standard_resolution: maxdim must be >= 2");
    if (!g->is_finite()) throw Error("standard_resolution: group must be finite");
    std::vector<GroupElem> elems = g->elements();

    std::vector<Sym> x1;
    EvalHom phi{g, {}};
    for (const GroupElem& a : elems) {
        Sym s = Sym::intern(tuple_name(g, {a}));
        x1.push_back(s);
        phi.images.emplace(s, a);
    }
    auto gen1 = [&](const GroupElem& a) { return Sym::intern(tuple_name(g, {a})); };

    CrossedComplexSpec spec(g, std::move(phi), std::move(x1), maxdim);

    // w(a,b) = [a][b][ab]^-1
    for (const GroupElem& a : elems)
        for (const GroupElem& b : elems) {
            Word w = Word::generator(gen1(a)) * Word::generator(gen1(b)) *
                     Word::generator(gen1(g->mul(a, b)), -1);
            spec.add_relator(Sym::intern(tuple_name(g, {a, b})), std::move(w));
        }

    auto gen2 = [&](const GroupElem& a, const GroupElem& b) {
        return Sym::intern(tuple_name(g, {a, b}));
    };

    if (maxdim >= 3) {
        // delta3[a,b,c] = [a,bc] [ab,c]^-1 [a,b]^-1 [b,c]^{[a]^-1}
        for (const GroupElem& a : elems)
            for (const GroupElem& b : elems)
                for (const GroupElem& c : elems) {
                    Dim2Elem d;
                    d.append(gen2(a, g->mul(b, c)), 1, Word());
                    d.append(gen2(g->mul(a, b), c), -1, Word());
                    d.append(gen2(a, b), -1, Word());
                    d.append(gen2(b, c), 1, Word::generator(gen1(a), -1));
                    spec.add_gen3(Sym::intern(tuple_name(g, {a, b, c})), std::move(d));
                }
    }

    // delta_n[a1,...,an] = [a2,...,an]*a1^-1
    //   + sum_i (-1)^i [a1,...,a_i a_{i+1},...,an] + (-1)^n [a1,...,a_{n-1}]
    for (int n = 4; n <= maxdim; ++n) {
        std::vector<GroupElem> tup(static_cast<std::size_t>(n), g->identity());
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        for (;;) {
            for (int i = 0; i < n; ++i) tup[static_cast<std::size_t>(i)] = elems[pick[static_cast<std::size_t>(i)]];
            ModuleElem val(g);
            {
                std::vector<GroupElem> face(tup.begin() + 1, tup.end());
                val.add_term(Sym::intern(tuple_name(g, face)),
                             RingElem::of(g->inv(tup[0])));
            }
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<GroupElem> face;
                for (int j = 0; j < n; ++j) {
                    if (j == i - 1) {
                        face.push_back(g->mul(tup[static_cast<std::size_t>(j)],
                                              tup[static_cast<std::size_t>(j) + 1]));
                        ++j;
                    } else {
                        face.push_back(tup[static_cast<std::size_t>(j)]);
                    }
                }
                val.add_term(Sym::intern(tuple_name(g, face)),
                             RingElem::of(g->identity(), i % 2 ? -1 : 1));
            }
            {
                std::vector<GroupElem> face(tup.begin(), tup.end() - 1);
                val.add_term(Sym::intern(tuple_name(g, face)),
                             RingElem::of(g->identity(), n % 2 ? -1 : 1));
            }
            spec.add_gen_n(n, Sym::intern(tuple_name(g, tup)), std::move(val));

            int i = n - 1;
            while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == elems.size()) {
                pick[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return spec;
}

CrossedComplexSpec cyclic_resolution(long long p, int maxdim, const std::string& prefix) {
    if (p < 2) throw Error("cyclic_resolution: p must be >= 2");
    if (maxdim < 2) throw DimensionError("cyclic_resolution: maxdim must be >= 2");
    GroupPtr g = Group::cyclic(p);
    GroupElem t = g->from_data(ElemData{std::in_place_index<0>, 1ll});

    auto name = [&](int n) { return Sym::intern(prefix + std::to_string(n)); };
    EvalHom phi{g, {{name(1), t}}};
    CrossedComplexSpec spec(g, std::move(phi), {name(1)}, maxdim);

    spec.add_relator(name(2), Word::generator(name(1), p));
    if (maxdim >= 3) {
        // x2 * (1 - t), expanded through the lift t^k -> x1^k
        Dim2Elem d;
        d.append(name(2), 1, Word());
        d.append(name(2), -1, Word::generator(name(1)));
        spec.add_gen3(name(3), std::move(d));
    }
    for (int n = 4; n <= maxdim; ++n) {
        RingElem coeff(g);
        if (n % 2 == 0) {
            for (long long k = 0; k < p; ++k) coeff.add_term(g->pow(t, k).data, 1);   // norm
        } else {
            coeff.add_term(g->identity().data, 1);
            coeff.add_term(t.data, -1);
        }
        spec.add_gen_n(n, name(n), ModuleElem::of(name(n - 1), std::move(coeff)));
    }
    return spec;
}

CrossedComplexSpec infinite_cyclic_complex(const std::string& gen) {
    GroupPtr g = Group::cyclic(0);
    GroupElem t = g->from_data(ElemData{std::in_place_index<0>, 1ll});
    Sym s = Sym::intern(gen);
    EvalHom phi{g, {{s, t}}};
    return CrossedComplexSpec(g, std::move(phi), {s}, 1);
}

CrossedComplexSpec presentation_complex(
    const GroupPtr& g, const std::vector<std::pair<std::string, GroupElem>>& gens,
    const std::vector<std::pair<std::string, Word>>& relators) {
    std::vector<Sym> x1;
    EvalHom phi{g, {}};
    for (const auto& [name, img] : gens) {
        Sym s = Sym::intern(name);
        x1.push_back(s);
        phi.images.emplace(s, img);
    }
    CrossedComplexSpec spec(g, std::move(phi), std::move(x1), 2);
    for (const auto& [name, w] : relators) spec.add_relator(Sym::intern(name), w);
    return spec;
}

CrossedComplexSpec with_prefix(const CrossedComplexSpec& spec, const std::string& prefix) {
    auto rename = [&](Sym s) { return Sym::intern(prefix + s.str()); };
    auto rename_word = [&](const Word& w) {
        std::vector<std::pair<Sym, long long>> raw;
        for (const Letter& l : w.letters()) raw.emplace_back(rename(l.gen), l.exp);
        return Word::reduced(raw);
    };
    std::vector<Sym> x1;
    EvalHom phi{spec.group(), {}};
    for (Sym x : spec.basis(1)) {
        x1.push_back(rename(x));
        phi.images.emplace(rename(x), spec.phi().apply(Word::generator(x)));
    }
    CrossedComplexSpec out(spec.group(), std::move(phi), std::move(x1), spec.maxdim());
    for (Sym r : spec.basis(2)) out.add_relator(rename(r), rename_word(spec.relator(r)));
    for (Sym g3 : spec.basis(3)) {
        Dim2Elem d;
        for (const Dim2Factor& f : spec.boundary3(g3).factors())
            d.append(rename(f.gen), f.exp, rename_word(f.op));
        out.add_gen3(rename(g3), std::move(d));
    }
    for (int n = 4; n <= spec.maxdim(); ++n)
        for (Sym gn : spec.basis(n)) {
            ModuleElem val(spec.group());
            for (const auto& [b, c] : spec.boundary_n(gn).terms()) val.add_term(rename(b), c);
            out.add_gen_n(n, rename(gn), std::move(val));
        }
    return out;
}

} // namespace crossed
