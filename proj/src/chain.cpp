#include "crossed/chain.hpp"

#include "crossed/fox.hpp"

#include <algorithm>
#include <limits>

namespace crossed {

namespace {

long long small_coeff(const Int& c) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        throw Error("chain: coefficient too large for flattening");
    return static_cast<long long>(c);
}

} // namespace

ChainComplex to_chain_complex(const CrossedComplexSpec& spec, int maxdim) {
    const GroupPtr& g = spec.group();
    if (!g->is_finite()) throw Error("to_chain_complex: coefficient group must be finite");
    if (maxdim < 1 || maxdim > spec.maxdim())
        throw DimensionError("to_chain_complex: bad maxdim");

    ChainComplex ch;
    ch.group = g;
    ch.maxdim = maxdim;
    ch.elems = g->elements();
    std::map<ElemData, int, ElemDataLess> eidx;
    for (std::size_t i = 0; i < ch.elems.size(); ++i)
        eidx.emplace(ch.elems[i].data, static_cast<int>(i));
    int ng = static_cast<int>(ch.elems.size());

    ch.basis.resize(static_cast<std::size_t>(maxdim) + 1);
    ch.basis[0] = {"*"};
    for (int n = 1; n <= maxdim; ++n)
        for (Sym s : spec.basis(n)) ch.basis[static_cast<std::size_t>(n)].push_back(s.str());

    // boundary values of basis generators, as module elements over the
    // previous basis (dimension 1 uses the pseudo-basis {"*"})
    auto value_of = [&](int n, Sym gen) {
        ModuleElem val(g);
        Sym star = Sym::intern("*");
        if (n == 1) {
            RingElem r = RingElem::of(spec.phi().apply(Word::generator(gen))) -
                         RingElem::unit(g);
            val.add_term(star, r);
        } else if (n == 2) {
            const Word& w = spec.relator(gen);
            for (Sym x : spec.basis(1)) {
                RingElem d = fox_derivative_right(w, x, spec.phi());
                val.add_term(x, d);
            }
        } else if (n == 3) {
            val = abelianize2(spec.boundary3(gen), spec);
        } else {
            val = spec.boundary_n(gen);
        }
        return val;
    };

    ch.bdry.resize(static_cast<std::size_t>(maxdim) + 1);
    ch.aug.resize(static_cast<std::size_t>(maxdim) + 1);
    for (int n = 1; n <= maxdim; ++n) {
        const auto& lower = ch.basis[static_cast<std::size_t>(n) - 1];
        const auto& upper = ch.basis[static_cast<std::size_t>(n)];
        std::map<std::string, int> lidx;
        for (std::size_t i = 0; i < lower.size(); ++i) lidx.emplace(lower[i], static_cast<int>(i));

        SparseIntMat flat(static_cast<int>(lower.size()) * ng,
                          static_cast<int>(upper.size()) * ng);
        Mat augm(static_cast<int>(lower.size()), static_cast<int>(upper.size()));

        const auto& gens = spec.basis(n);
        for (std::size_t uj = 0; uj < gens.size(); ++uj) {
            ModuleElem val = value_of(n, gens[uj]);
            for (const auto& [b, coeff] : val.terms()) {
                int row_gen = lidx.at(n == 1 ? std::string("*") : b.str());
                augm.at(row_gen, static_cast<int>(uj)) += coeff.augmentation();
                // columns for (gen, h): boundary of gen acted by h
                for (int h = 0; h < ng; ++h) {
                    RingElem shifted = coeff.acted(ch.elems[static_cast<std::size_t>(h)]);
                    for (const auto& [e, c] : shifted.terms())
                        flat.add(row_gen * ng + eidx.at(e),
                                 static_cast<int>(uj) * ng + h, small_coeff(c));
                }
            }
        }
        ch.bdry[static_cast<std::size_t>(n)] = std::move(flat);
        ch.aug[static_cast<std::size_t>(n)] = std::move(augm);
    }

    // dd = 0, exactly
    for (int n = 2; n <= maxdim; ++n) {
        if (!ch.bdry[static_cast<std::size_t>(n) - 1].compose_is_zero(
                ch.bdry[static_cast<std::size_t>(n)]))
            throw Error("to_chain_complex: boundary does not square to zero at dimension " +
                        std::to_string(n));
    }
    return ch;
}

std::vector<Int> homology_over_Z(const ChainComplex& chain, int n) {
    if (n < 0 || n + 1 > chain.maxdim)
        throw DimensionError("homology_over_Z: need boundaries up to dimension n+1");
    Mat mn = n == 0 ? Mat(0, chain.rank(0)) : chain.aug[static_cast<std::size_t>(n)];
    const Mat& mnext = chain.aug[static_cast<std::size_t>(n) + 1];
    return quotient_invariants(mn, mnext);
}

ExactnessReport exactness_check(const CrossedComplexSpec& spec, int n) {
    if (n < 2 || n > spec.maxdim()) throw DimensionError("exactness_check: 2 <= n <= maxdim");
    int upper = std::min(spec.maxdim(), n + 1);
    ChainComplex ch = to_chain_complex(spec, upper);

    Mat mn = ch.bdry[static_cast<std::size_t>(n)].dense();
    Mat mnext = n + 1 <= ch.maxdim ? ch.bdry[static_cast<std::size_t>(n) + 1].dense()
                                   : Mat(mn.cols(), 0);

    ExactnessReport rep;
    SnfResult s = smith_normal_form(mn);
    rep.kernel_rank = mn.cols() - s.rank;
    rep.invariants = quotient_invariants(mn, mnext);
    rep.exact = rep.invariants.empty();
    return rep;
}

std::string invariants_str(const std::vector<Int>& inv) {
    std::string out = "[";
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) out += ' ';
        out += inv[i].str();
    }
    out += ']';
    return out;
}

} // namespace crossed
