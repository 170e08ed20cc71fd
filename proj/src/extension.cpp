#include "crossed/extension.hpp"

#include "crossed/complex.hpp"
#include "crossed/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace crossed {

Perm perm_identity(int n) {
    Perm p;
    p.map.resize(static_cast<std::size_t>(n));
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out;
    out.map.resize(a.map.size());
    for (std::size_t i = 0; i < a.map.size(); ++i)
        out.map[i] = b.map[static_cast<std::size_t>(a.map[i])];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out;
    out.map.resize(a.map.size());
    for (std::size_t i = 0; i < a.map.size(); ++i)
        out.map[static_cast<std::size_t>(a.map[i])] = static_cast<int>(i);
    return out;
}

Perm perm_power(const Perm& a, long long k) {
    Perm base = k >= 0 ? a : perm_inverse(a);
    Perm out = perm_identity(static_cast<int>(a.map.size()));
    for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) out = perm_compose(out, base);
    return out;
}

std::vector<Perm> automorphisms(const TableDesc& k) {
    int n = k.order;
    std::vector<int> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    std::vector<Perm> out;
    do {
        if (f[static_cast<std::size_t>(k.identity)] != k.identity) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                ok = f[static_cast<std::size_t>(k.at(a, b))] ==
                     k.at(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
        if (ok) out.push_back(Perm{f});
    } while (std::next_permutation(f.begin(), f.end()));
    return out;
}

Perm inner_automorphism(const TableDesc& t, int k) {
    Perm p;
    p.map.resize(static_cast<std::size_t>(t.order));
    int ki = t.inverse[static_cast<std::size_t>(k)];
    for (int x = 0; x < t.order; ++x) p.map[static_cast<std::size_t>(x)] = t.at(t.at(ki, x), k);
    return p;
}

TableDesc to_table(const GroupPtr& g) {
    if (const TableDesc* t = g->as_table()) return *t;
    if (!g->is_finite()) throw Error("to_table: group must be finite");
    std::vector<GroupElem> elems = g->elements();
    int n = static_cast<int>(elems.size());
    std::map<ElemData, int, ElemDataLess> idx;
    for (int i = 0; i < n; ++i) idx.emplace(elems[static_cast<std::size_t>(i)].data, i);
    TableDesc t;
    t.order = n;
    t.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t.table[static_cast<std::size_t>(a) * n + b] =
                idx.at(g->mul(elems[static_cast<std::size_t>(a)],
                              elems[static_cast<std::size_t>(b)]).data);
    t.identity = idx.at(g->identity().data);
    t.inverse.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        t.inverse[static_cast<std::size_t>(a)] =
            idx.at(g->inv(elems[static_cast<std::size_t>(a)]).data);
    for (int a = 0; a < n; ++a) t.names.push_back(g->name_of(elems[static_cast<std::size_t>(a)]));
    validate_table(t);
    return t;
}

Report check_cocycle(const GroupPtr& g, const TableDesc& k, const std::vector<Perm>& k1,
                     const std::vector<std::vector<int>>& k2) {
    if (!g->is_finite()) throw Error("check_cocycle: G must be finite");
    std::vector<GroupElem> elems = g->elements();
    int n = static_cast<int>(elems.size());
    if (static_cast<int>(k1.size()) != n || static_cast<int>(k2.size()) != n)
        throw Error("check_cocycle: k1, k2 must be total on G and G^2");
    std::map<ElemData, int, ElemDataLess> idx;
    for (int i = 0; i < n; ++i) idx.emplace(elems[static_cast<std::size_t>(i)].data, i);

    Report rep;

    // d(k2(a,b)) = k1(a) k1(b) k1(ab)^-1 in Aut(K)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = idx.at(g->mul(elems[static_cast<std::size_t>(a)],
                                   elems[static_cast<std::size_t>(b)]).data);
            Perm lhs = inner_automorphism(k, k2[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
            Perm rhs = perm_compose(perm_compose(k1[static_cast<std::size_t>(a)],
                                                 k1[static_cast<std::size_t>(b)]),
                                    perm_inverse(k1[static_cast<std::size_t>(ab)]));
            bool ok = lhs == rhs;
            rep.add("cocycle.d2." + g->name_of(elems[static_cast<std::size_t>(a)]) + "," +
                        g->name_of(elems[static_cast<std::size_t>(b)]),
                    ok, ok ? "" : "inner(k2) mismatch");
        }

    // k2 vanishes on delta3: evaluate each delta3[a,b,c] through k2, acting
    // through k1 along the operator words
    CrossedComplexSpec f = standard_resolution(g, 3);
    auto aut_of_word = [&](const Word& u) {
        Perm p = perm_identity(k.order);
        for (const Letter& l : u.letters()) {
            int a = idx.at(f.phi().apply(Word::generator(l.gen)).data);
            const Perm& pa = k1[static_cast<std::size_t>(a)];
            p = perm_compose(p, l.exp > 0 ? pa : perm_inverse(pa));
        }
        return p;
    };
    std::map<Sym, int, SymNameLess> k2_by_gen;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Sym r = Sym::intern("[" + g->name_of(elems[static_cast<std::size_t>(a)]) + "," +
                                g->name_of(elems[static_cast<std::size_t>(b)]) + "]");
            k2_by_gen.emplace(r, k2[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    auto k2_of_relator = [&](Sym r) { return k2_by_gen.at(r); };
    for (Sym g3 : f.basis(3)) {
        int acc = k.identity;
        for (const Dim2Factor& fac : f.boundary3(g3).factors()) {
            int base = k2_of_relator(fac.gen);
            int val = aut_of_word(fac.op).apply(base);
            if (fac.exp < 0) val = k.inverse[static_cast<std::size_t>(val)];
            acc = k.at(acc, val);
        }
        bool ok = acc == k.identity;
        rep.add("cocycle.d3." + g3.str(), ok, ok ? "" : "k2(delta3) != 1");
    }
    rep.canonicalize();
    return rep;
}

bool cyclic_cocycle_check(long long p, const TableDesc& k, int k_elem, const Perm& a) {
    if (p < 1) throw Error("cyclic_cocycle_check: p must be >= 1");
    if (k_elem < 0 || k_elem >= k.order) throw Error("cyclic_cocycle_check: bad element");
    if (static_cast<int>(a.map.size()) != k.order)
        throw Error("cyclic_cocycle_check: bad automorphism");
    return inner_automorphism(k, k_elem) == perm_power(a, p) && a.apply(k_elem) == k_elem;
}

GroupPtr extension_from_cocycle(long long p, const TableDesc& k, int k_elem, const Perm& a) {
    if (!cyclic_cocycle_check(p, k, k_elem, a))
        throw Error("extension_from_cocycle: cocycle conditions fail");
    int nk = k.order;
    int n = static_cast<int>(p) * nk;
    auto idx = [&](long long i, int m) { return static_cast<int>(i) * nk + m; };
    auto kpow = [&](long long e) {
        int acc = k.identity;
        for (long long i = 0; i < e; ++i) acc = k.at(acc, k_elem);
        return acc;
    };
    std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
    for (long long i = 0; i < p; ++i)
        for (int m = 0; m < nk; ++m)
            for (long long j = 0; j < p; ++j)
                for (int x = 0; x < nk; ++x) {
                    int acted = perm_power(a, j).apply(m);
                    int val = k.at(k.at(acted, x), kpow((i + j) / p));
                    mul[static_cast<std::size_t>(idx(i, m))][static_cast<std::size_t>(idx(j, x))] =
                        idx((i + j) % p, val);
                }
    std::vector<std::string> names;
    for (long long i = 0; i < p; ++i)
        for (int m = 0; m < nk; ++m)
            names.push_back("(" + std::to_string(i) + ";" + k.names[static_cast<std::size_t>(m)] + ")");
    GroupPtr e = Group::table(mul, names);   // table construction validates the axioms

    // normal copy of K with cyclic quotient
    const TableDesc* t = e->as_table();
    for (int m = 0; m < nk; ++m)
        for (int x = 0; x < nk; ++x)
            if (t->at(idx(0, m), idx(0, x)) != idx(0, k.at(m, x)))
                throw Error("extension: K does not embed");
    for (int g = 0; g < n; ++g) {
        int gi = t->inverse[static_cast<std::size_t>(g)];
        for (int m = 0; m < nk; ++m) {
            int conj = t->at(t->at(gi, idx(0, m)), g);
            if (conj / nk != 0) throw Error("extension: K not normal");
        }
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if ((g / nk + h / nk) % p != t->at(g, h) / nk)
                throw Error("extension: quotient is not C_p");
    return e;
}

namespace {

std::vector<int> generating_set(const TableDesc& t) {
    std::vector<bool> seen(static_cast<std::size_t>(t.order), false);
    std::vector<int> span = {t.identity};
    seen[static_cast<std::size_t>(t.identity)] = true;
    std::vector<int> gens;
    for (int a = 0; a < t.order; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        gens.push_back(a);
        // close the span
        std::vector<int> frontier = {a};
        seen[static_cast<std::size_t>(a)] = true;
        span.push_back(a);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (std::size_t i = 0; i < span.size(); ++i)
                for (int b : frontier) {
                    for (int prod : {t.at(span[i], b), t.at(b, span[i])}) {
                        if (!seen[static_cast<std::size_t>(prod)]) {
                            seen[static_cast<std::size_t>(prod)] = true;
                            span.push_back(prod);
                            next.push_back(prod);
                        }
                    }
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

long long table_elem_order(const TableDesc& t, int a) {
    int cur = a;
    long long n = 1;
    while (cur != t.identity) {
        cur = t.at(cur, a);
        ++n;
    }
    return n;
}

bool extend_iso(const TableDesc& a, const TableDesc& b, const std::vector<int>& gens,
                std::size_t next, std::vector<int>& image) {
    if (next == gens.size()) return true;
    int g = gens[next];
    for (int target = 0; target < b.order; ++target) {
        if (table_elem_order(a, g) != table_elem_order(b, target)) continue;
        // tentatively map g -> target and propagate by closure
        std::vector<int> trial = image;
        trial[static_cast<std::size_t>(g)] = target;
        bool consistent = true;
        bool grew = true;
        while (grew && consistent) {
            grew = false;
            for (int x = 0; x < a.order && consistent; ++x) {
                if (trial[static_cast<std::size_t>(x)] < 0) continue;
                for (int y = 0; y < a.order; ++y) {
                    if (trial[static_cast<std::size_t>(y)] < 0) continue;
                    int xy = a.at(x, y);
                    int fxy = b.at(trial[static_cast<std::size_t>(x)],
                                   trial[static_cast<std::size_t>(y)]);
                    if (trial[static_cast<std::size_t>(xy)] < 0) {
                        trial[static_cast<std::size_t>(xy)] = fxy;
                        grew = true;
                    } else if (trial[static_cast<std::size_t>(xy)] != fxy) {
                        consistent = false;
                        break;
                    }
                }
            }
        }
        if (!consistent) continue;
        // injectivity on the defined part
        std::vector<bool> used(static_cast<std::size_t>(b.order), false);
        bool inj = true;
        for (int x = 0; x < a.order && inj; ++x) {
            int v = trial[static_cast<std::size_t>(x)];
            if (v < 0) continue;
            if (used[static_cast<std::size_t>(v)]) inj = false;
            used[static_cast<std::size_t>(v)] = true;
        }
        if (!inj) continue;
        std::vector<int> saved = image;
        image = trial;
        if (extend_iso(a, b, gens, next + 1, image)) return true;
        image = saved;
    }
    return false;
}

} // namespace

bool is_isomorphic(const TableDesc& a, const TableDesc& b) {
    if (a.order != b.order) return false;
    // order profiles must match
    std::vector<long long> pa, pb;
    for (int x = 0; x < a.order; ++x) pa.push_back(table_elem_order(a, x));
    for (int x = 0; x < b.order; ++x) pb.push_back(table_elem_order(b, x));
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;

    std::vector<int> gens = generating_set(a);
    std::vector<int> image(static_cast<std::size_t>(a.order), -1);
    image[static_cast<std::size_t>(a.identity)] = b.identity;
    return extend_iso(a, b, gens, 0, image);
}

std::vector<ExtensionClass> enumerate_extensions(long long p, const TableDesc& k) {
    if (k.order > 8 || p > 5) throw Error("enumerate_extensions: desk-scale limits exceeded");
    std::vector<Perm> auts = automorphisms(k);
    std::vector<ExtensionClass> classes;
    for (int ke = 0; ke < k.order; ++ke)
        for (const Perm& a : auts) {
            if (!cyclic_cocycle_check(p, k, ke, a)) continue;
            GroupPtr e = extension_from_cocycle(p, k, ke, a);
            TableDesc et = *e->as_table();
            bool placed = false;
            for (ExtensionClass& cls : classes) {
                if (is_isomorphic(et, *cls.representative->as_table())) {
                    cls.members.emplace_back(ke, a);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({e, {{ke, a}}});
        }
    return classes;
}

} // namespace crossed
