#include "crossed/fox.hpp"

namespace crossed {

RingElem fox_derivative(const Word& u, Sym x, const EvalHom& phi) {
    const GroupPtr& g = phi.group;
    RingElem out(g);
    GroupElem prefix = g->identity();
    for (const Letter& l : u.letters()) {
        GroupElem img = phi.apply(Word::generator(l.gen, l.exp));
        if (l.gen == x) {
            if (l.exp > 0) {
                out.add_term(prefix.data, 1);
            } else {
                out.add_term(g->mul(prefix, img).data, -1);   // img = phi(x)^-1 here
            }
        }
        prefix = g->mul(prefix, img);
    }
    return out;
}

RingElem fox_derivative_right(const Word& u, Sym x, const EvalHom& phi) {
    const GroupPtr& g = phi.group;
    RingElem out(g);
    GroupElem suffix = g->identity();
    const auto& ls = u.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        GroupElem img = phi.apply(Word::generator(it->gen, it->exp));
        if (it->gen == x) {
            if (it->exp > 0) {
                out.add_term(suffix.data, 1);
            } else {
                out.add_term(g->mul(img, suffix).data, -1);
            }
        }
        suffix = g->mul(img, suffix);
    }
    return out;
}

} // namespace crossed
