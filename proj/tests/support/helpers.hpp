#pragma once

// Shared test utilities: random element generators and the BFS rewriting
// closure used as the graph-product word-problem oracle.

#include "crossed/complex.hpp"
#include "crossed/group.hpp"

#include <random>
#include <set>
#include <vector>

namespace crossed::testsupport {

inline Word random_word(std::mt19937_64& rng, const std::vector<Sym>& alphabet, int max_len) {
    if (alphabet.empty()) return {};
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<std::pair<Sym, long long>> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.emplace_back(alphabet[pick(rng)], sign(rng) ? 1 : -1);
    return Word::reduced(raw);
}

inline Dim2Elem random_dim2(std::mt19937_64& rng, const CrossedComplexSpec& spec,
                            int max_factors, int max_op_len) {
    const auto& x2 = spec.basis(2);
    Dim2Elem c;
    if (x2.empty()) return c;
    std::uniform_int_distribution<int> nf(0, max_factors);
    std::uniform_int_distribution<std::size_t> pick(0, x2.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int n = nf(rng);
    for (int i = 0; i < n; ++i)
        c.append(x2[pick(rng)], sign(rng) ? 1 : -1,
                 random_word(rng, spec.basis(1), max_op_len));
    return c;
}

// key for syllable words, for set membership
inline std::vector<std::pair<int, long long>> word_key(const std::vector<Syllable>& w) {
    std::vector<std::pair<int, long long>> k;
    for (const Syllable& s : w) k.emplace_back(s.vertex, std::get<long long>(s.elem));
    return k;
}

/// BFS closure of a syllable word under valid rewriting moves: swaps of
/// adjacent commuting syllables (both directions), merges of adjacent
/// same-vertex syllables, deletion of identity syllables. Contains every
/// representative of the same element of length <= |w|, so two words are
/// equal in the graph product iff their closures intersect.
inline std::set<std::vector<std::pair<int, long long>>> rewriting_closure(
    const GroupPtr& gp, std::vector<Syllable> start) {
    const GraphDesc* d = gp->as_graph();
    const auto& vg = d->spec.vertex_groups;
    std::set<std::vector<std::pair<int, long long>>> seen;
    std::vector<std::vector<Syllable>> queue = {std::move(start)};
    seen.insert(word_key(queue[0]));
    while (!queue.empty()) {
        std::vector<Syllable> w = std::move(queue.back());
        queue.pop_back();
        auto push = [&](std::vector<Syllable> next) {
            auto key = word_key(next);
            if (seen.insert(key).second) queue.push_back(std::move(next));
        };
        for (std::size_t i = 0; i < w.size(); ++i) {
            const GroupPtr& g = vg[w[i].vertex];
            if (g->is_identity(g->from_data(w[i].elem))) {
                std::vector<Syllable> next = w;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                push(std::move(next));
            }
            if (i + 1 < w.size()) {
                if (w[i].vertex == w[i + 1].vertex) {
                    std::vector<Syllable> next = w;
                    GroupElem m = g->mul(g->from_data(w[i].elem), g->from_data(w[i + 1].elem));
                    next[i].elem = m.data;
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    push(std::move(next));
                } else if (d->adj[w[i].vertex][w[i + 1].vertex]) {
                    std::vector<Syllable> next = w;
                    std::swap(next[i], next[i + 1]);
                    push(std::move(next));
                }
            }
        }
    }
    return seen;
}

inline Syllable syl(int vertex, long long val) {
    return Syllable{vertex, ElemData{std::in_place_index<0>, val}};
}

} // namespace crossed::testsupport
