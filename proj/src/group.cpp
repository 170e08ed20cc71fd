#include "crossed/group.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace crossed {

namespace {

long long mod_reduce(long long v, long long m) {
    if (m == 0) return v;
    long long r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

bool elem_data_eq(const ElemData& a, const ElemData& b) {
    return !elem_data_less(a, b) && !elem_data_less(b, a);
}

bool elem_data_less(const ElemData& a, const ElemData& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    switch (a.index()) {
        case 0: return std::get<0>(a) < std::get<0>(b);
        case 1: return std::get<1>(a) < std::get<1>(b);
        default: {
            const auto& x = std::get<2>(a);
            const auto& y = std::get<2>(b);
            for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
                if (x[i].vertex != y[i].vertex) return x[i].vertex < y[i].vertex;
                if (elem_data_less(x[i].elem, y[i].elem)) return true;
                if (elem_data_less(y[i].elem, x[i].elem)) return false;
            }
            return x.size() < y.size();
        }
    }
}

int GraphSpec::vertex_index(std::string_view name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw Error("unknown vertex: " + std::string(name));
}

bool GraphSpec::has_edge(int u, int v) const {
    for (const auto& [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

void GraphSpec::validate() const {
    int n = static_cast<int>(vertices.size());
    if (vertex_groups.size() != vertices.size())
        throw Error("graph: one group per vertex required");
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("graph: edge references undeclared vertex");
        if (u == v) throw Error("graph: loops not allowed");
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if ((a == c && b == d) || (a == d && b == c))
                throw Error("graph: duplicate edge");
        }
}

void validate_table(const TableDesc& t) {
    int n = t.order;
    if (n <= 0) throw Error("table: empty");
    if (t.table.size() != static_cast<std::size_t>(n) * n) throw Error("table: not square");
    for (int v : t.table)
        if (v < 0 || v >= n) throw Error("table: entry out of range");
    // two-sided identity
    int e = t.identity;
    for (int a = 0; a < n; ++a)
        if (t.at(e, a) != a || t.at(a, e) != a) throw Error("table: identity fails");
    // Latin square (forces inverses together with associativity)
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[t.at(a, b)]) throw Error("table: row not a permutation");
            row[t.at(a, b)] = true;
            if (col[t.at(b, a)]) throw Error("table: column not a permutation");
            col[t.at(b, a)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
                    throw Error("table: not associative");
    for (int a = 0; a < n; ++a)
        if (t.at(a, t.inverse[a]) != e || t.at(t.inverse[a], a) != e)
            throw Error("table: inverse list wrong");
}

GroupPtr Group::cyclic(long long modulus) {
    if (modulus < 0) throw Error("cyclic: modulus must be >= 0");
    return GroupPtr(new Group(CyclicDesc{modulus}));
}

GroupPtr Group::trivial() { return cyclic(1); }

GroupPtr Group::table(const std::vector<std::vector<int>>& mul, std::vector<std::string> names) {
    TableDesc t;
    t.order = static_cast<int>(mul.size());
    t.table.reserve(static_cast<std::size_t>(t.order) * t.order);
    for (const auto& row : mul) {
        if (row.size() != mul.size()) throw Error("table: ragged rows");
        for (int v : row) t.table.push_back(v);
    }
    // locate the identity
    t.identity = -1;
    for (int ecand = 0; ecand < t.order; ++ecand) {
        bool ok = true;
        for (int a = 0; a < t.order && ok; ++a)
            ok = t.at(ecand, a) == a && t.at(a, ecand) == a;
        if (ok) { t.identity = ecand; break; }
    }
    if (t.identity < 0) throw Error("table: no identity element");
    t.inverse.assign(t.order, -1);
    for (int a = 0; a < t.order; ++a)
        for (int b = 0; b < t.order; ++b)
            if (t.at(a, b) == t.identity && t.at(b, a) == t.identity) t.inverse[a] = b;
    for (int a = 0; a < t.order; ++a)
        if (t.inverse[a] < 0) throw Error("table: missing inverse");
    if (names.empty()) {
        for (int a = 0; a < t.order; ++a)
            names.push_back(a == t.identity ? "1" : "g" + std::to_string(a));
    }
    if (names.size() != static_cast<std::size_t>(t.order))
        throw Error("table: one name per element required");
    t.names = std::move(names);
    validate_table(t);
    return GroupPtr(new Group(std::move(t)));
}

GroupPtr Group::graph_product(GraphSpec spec) {
    spec.validate();
    GraphDesc d;
    int n = static_cast<int>(spec.vertices.size());
    d.adj.assign(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : spec.edges) d.adj[u][v] = d.adj[v][u] = true;
    d.spec = std::move(spec);
    return GroupPtr(new Group(std::move(d)));
}

GroupPtr Group::direct_product(const GroupPtr& a, const GroupPtr& b) {
    if (!a->is_finite() || !b->is_finite())
        throw Error("direct_product: factors must be finite");
    auto ea = a->elements();
    auto eb = b->elements();
    int na = static_cast<int>(ea.size());
    int nb = static_cast<int>(eb.size());
    std::vector<std::vector<int>> mul(static_cast<std::size_t>(na) * nb,
                                      std::vector<int>(static_cast<std::size_t>(na) * nb));
    auto idx = [&](int i, int j) { return i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    GroupElem pa = a->mul(ea[i], ea[k]);
                    GroupElem pb = b->mul(eb[j], eb[l]);
                    int pi = 0, pj = 0;
                    for (int s = 0; s < na; ++s)
                        if (a->eq(pa, ea[s])) { pi = s; break; }
                    for (int s = 0; s < nb; ++s)
                        if (b->eq(pb, eb[s])) { pj = s; break; }
                    mul[idx(i, j)][idx(k, l)] = idx(pi, pj);
                }
    std::vector<std::string> names;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names.push_back(a->name_of(ea[i]) + "|" + b->name_of(eb[j]));
    return table(mul, std::move(names));
}

GroupPtr Group::symmetric3() {
    // permutations of {0,1,2}: 1, r, r^2, s, rs, r^2 s with r=(012), s=(01)
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const std::vector<std::string> names = {"1", "r", "r2", "s", "rs", "r2s"};
    auto compose = [&](int i, int j) {   // apply i then j
        std::array<int, 3> c{};
        for (int k = 0; k < 3; ++k) c[k] = perms[j][perms[i][k]];
        for (int s = 0; s < 6; ++s)
            if (perms[s] == c) return s;
        return -1;
    };
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) mul[i][j] = compose(i, j);
    return table(mul, names);
}

Group::Kind Group::kind() const {
    if (std::holds_alternative<CyclicDesc>(desc_)) return Kind::Cyclic;
    if (std::holds_alternative<TableDesc>(desc_)) return Kind::Table;
    return Kind::GraphProduct;
}

bool Group::same(const Group& other) const {
    if (this == &other) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::Cyclic:
            return as_cyclic()->modulus == other.as_cyclic()->modulus;
        case Kind::Table:
            return as_table()->table == other.as_table()->table;
        case Kind::GraphProduct: {
            const GraphDesc* a = as_graph();
            const GraphDesc* b = other.as_graph();
            if (a->spec.vertices != b->spec.vertices || a->adj != b->adj) return false;
            for (std::size_t i = 0; i < a->spec.vertex_groups.size(); ++i)
                if (!a->spec.vertex_groups[i]->same(*b->spec.vertex_groups[i])) return false;
            return true;
        }
    }
    return false;
}

void Group::require_same(const GroupElem& a) const {
    if (!a.group || !same(*a.group))
        throw GroupMismatchError("element does not belong to this group");
}

GroupElem Group::from_data(ElemData d) const {
    return GroupElem{shared_from_this(), std::move(d)};
}

GroupElem Group::identity() const {
    switch (kind()) {
        case Kind::Cyclic: return from_data(ElemData{std::in_place_index<0>, 0ll});
        case Kind::Table: return from_data(ElemData{std::in_place_index<1>, as_table()->identity});
        default: return from_data(ElemData{std::in_place_index<2>, std::vector<Syllable>{}});
    }
}

std::vector<Syllable> Group::normalize(std::vector<Syllable> raw) const {
    const GraphDesc* d = as_graph();
    if (!d) throw Error("normalize: not a graph product");
    const auto& vg = d->spec.vertex_groups;
    for (const Syllable& s : raw) {
        if (s.vertex < 0 || s.vertex >= static_cast<int>(vg.size()))
            throw Error("normalize: vertex out of range");
    }
    for (const Syllable& s : raw) {
        std::size_t want = vg[s.vertex]->kind() == Kind::Cyclic  ? 0
                           : vg[s.vertex]->kind() == Kind::Table ? 1
                                                                 : 2;
        if (s.elem.index() != want)
            throw GroupMismatchError("normalize: syllable element not in its vertex group");
    }
    auto is_id = [&](const Syllable& s) {
        return vg[s.vertex]->is_identity(vg[s.vertex]->from_data(s.elem));
    };
    raw.erase(std::remove_if(raw.begin(), raw.end(), is_id), raw.end());

    // geodesic form: merge same-vertex syllables whenever everything in
    // between commutes with their vertex (adjacency is not enough; a merge
    // may reach through a commuting block)
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < raw.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < raw.size(); ++j) {
                if (raw[j].vertex == raw[i].vertex) {
                    bool clear = true;
                    for (std::size_t k = i + 1; k < j; ++k)
                        if (!d->adj[raw[k].vertex][raw[i].vertex]) { clear = false; break; }
                    if (!clear) break;
                    const GroupPtr& g = vg[raw[i].vertex];
                    GroupElem m =
                        g->mul(g->from_data(raw[i].elem), g->from_data(raw[j].elem));
                    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(j));
                    if (g->is_identity(m)) {
                        raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i));
                    } else {
                        raw[i].elem = m.data;
                    }
                    changed = true;
                    break;
                }
                if (!d->adj[raw[j].vertex][raw[i].vertex]) break;
            }
        }
    }

    // left-greedy order: repeatedly emit the smallest vertex whose syllable
    // commutes past everything still ahead of it
    std::vector<Syllable> out;
    out.reserve(raw.size());
    while (!raw.empty()) {
        std::size_t best = raw.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            bool avail = true;
            for (std::size_t k = 0; k < i; ++k)
                if (!d->adj[raw[k].vertex][raw[i].vertex]) { avail = false; break; }
            if (avail && (best == raw.size() || raw[i].vertex < raw[best].vertex)) best = i;
        }
        out.push_back(raw[best]);
        raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
    require_same(a);
    require_same(b);
    switch (kind()) {
        case Kind::Cyclic: {
            long long m = as_cyclic()->modulus;
            return from_data(ElemData{std::in_place_index<0>,
                                      mod_reduce(std::get<0>(a.data) + std::get<0>(b.data), m)});
        }
        case Kind::Table:
            return from_data(ElemData{
                std::in_place_index<1>, as_table()->at(std::get<1>(a.data), std::get<1>(b.data))});
        default: {
            std::vector<Syllable> s = std::get<2>(a.data);
            const auto& t = std::get<2>(b.data);
            s.insert(s.end(), t.begin(), t.end());
            return from_data(ElemData{std::in_place_index<2>, normalize(std::move(s))});
        }
    }
}

GroupElem Group::inv(const GroupElem& a) const {
    require_same(a);
    switch (kind()) {
        case Kind::Cyclic:
            return from_data(ElemData{std::in_place_index<0>,
                                      mod_reduce(-std::get<0>(a.data), as_cyclic()->modulus)});
        case Kind::Table:
            return from_data(
                ElemData{std::in_place_index<1>, as_table()->inverse[std::get<1>(a.data)]});
        default: {
            const GraphDesc* d = as_graph();
            const auto& syl = std::get<2>(a.data);
            std::vector<Syllable> out;
            out.reserve(syl.size());
            for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
                const GroupPtr& g = d->spec.vertex_groups[it->vertex];
                out.push_back({it->vertex, g->inv(g->from_data(it->elem)).data});
            }
            return from_data(ElemData{std::in_place_index<2>, normalize(std::move(out))});
        }
    }
}

GroupElem Group::pow(const GroupElem& a, long long k) const {
    GroupElem base = k >= 0 ? a : inv(a);
    GroupElem out = identity();
    for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) out = mul(out, base);
    return out;
}

bool Group::eq(const GroupElem& a, const GroupElem& b) const {
    require_same(a);
    require_same(b);
    return elem_data_eq(a.data, b.data);
}

bool Group::is_identity(const GroupElem& a) const { return eq(a, identity()); }

bool Group::is_finite() const {
    switch (kind()) {
        case Kind::Cyclic: return as_cyclic()->modulus > 0;
        case Kind::Table: return true;
        default: {
            const GraphDesc* d = as_graph();
            int n = static_cast<int>(d->spec.vertices.size());
            for (int i = 0; i < n; ++i)
                if (!d->spec.vertex_groups[i]->is_finite()) return false;
            // nontrivial vertex groups must pairwise commute
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (d->spec.vertex_groups[i]->order() > 1 &&
                        d->spec.vertex_groups[j]->order() > 1 && !d->adj[i][j])
                        return false;
                }
            return true;
        }
    }
}

long long Group::order() const {
    if (!is_finite()) throw Error("order: group is infinite");
    switch (kind()) {
        case Kind::Cyclic: return as_cyclic()->modulus;
        case Kind::Table: return as_table()->order;
        default: {
            long long n = 1;
            for (const GroupPtr& g : as_graph()->spec.vertex_groups) n *= g->order();
            return n;
        }
    }
}

std::vector<GroupElem> Group::elements() const {
    if (!is_finite()) throw Error("elements: group is infinite");
    std::vector<GroupElem> out;
    switch (kind()) {
        case Kind::Cyclic:
            for (long long k = 0; k < as_cyclic()->modulus; ++k)
                out.push_back(from_data(ElemData{std::in_place_index<0>, k}));
            return out;
        case Kind::Table:
            for (int a = 0; a < as_table()->order; ++a)
                out.push_back(from_data(ElemData{std::in_place_index<1>, a}));
            return out;
        default: {
            const GraphDesc* d = as_graph();
            int n = static_cast<int>(d->spec.vertices.size());
            std::vector<std::vector<GroupElem>> per(n);
            for (int v = 0; v < n; ++v) per[v] = d->spec.vertex_groups[v]->elements();
            std::vector<Syllable> cur;
            // odometer over the vertex-sorted normal forms
            std::vector<std::size_t> pick(n, 0);
            for (;;) {
                cur.clear();
                for (int v = 0; v < n; ++v) {
                    const GroupElem& e = per[v][pick[v]];
                    if (!d->spec.vertex_groups[v]->is_identity(e)) cur.push_back({v, e.data});
                }
                out.push_back(from_data(ElemData{std::in_place_index<2>, cur}));
                int v = n - 1;
                while (v >= 0 && ++pick[v] == per[v].size()) pick[v--] = 0;
                if (v < 0) break;
            }
            return out;
        }
    }
}

long long Group::element_order(const GroupElem& a) const {
    if (kind() == Kind::Cyclic && as_cyclic()->modulus == 0) {
        if (!is_identity(a)) throw Error("element_order: infinite order");
        return 1;
    }
    GroupElem cur = a;
    long long n = 1;
    long long cap = is_finite() ? order() + 1 : 1000000;
    while (!is_identity(cur)) {
        cur = mul(cur, a);
        if (++n > cap) throw Error("element_order: exceeds bound, possibly infinite");
    }
    return n;
}

std::string Group::name_of(const GroupElem& a) const {
    require_same(a);
    switch (kind()) {
        case Kind::Cyclic: {
            long long k = std::get<0>(a.data);
            if (k == 0) return "1";
            if (k == 1) return "t";
            return "t^" + std::to_string(k);
        }
        case Kind::Table: return as_table()->names[std::get<1>(a.data)];
        default: {
            const GraphDesc* d = as_graph();
            const auto& syl = std::get<2>(a.data);
            if (syl.empty()) return "1";
            std::string out;
            for (const Syllable& s : syl) {
                if (!out.empty()) out += '.';
                out += d->spec.vertices[s.vertex] + ":" +
                       d->spec.vertex_groups[s.vertex]->name_of(
                           d->spec.vertex_groups[s.vertex]->from_data(s.elem));
            }
            return out;
        }
    }
}

GroupElem Group::parse_elem(std::string_view text) const {
    switch (kind()) {
        case Kind::Cyclic: {
            if (text == "1") return identity();
            if (text == "t") return from_data(ElemData{std::in_place_index<0>,
                                                       mod_reduce(1, as_cyclic()->modulus)});
            if (text.rfind("t^", 0) == 0) {
                long long k = std::stoll(std::string(text.substr(2)));
                return from_data(
                    ElemData{std::in_place_index<0>, mod_reduce(k, as_cyclic()->modulus)});
            }
            throw IoError("bad cyclic element: " + std::string(text));
        }
        case Kind::Table: {
            const TableDesc* t = as_table();
            for (int a = 0; a < t->order; ++a)
                if (t->names[a] == text) return from_data(ElemData{std::in_place_index<1>, a});
            throw IoError("unknown table element: " + std::string(text));
        }
        default: {
            if (text == "1") return identity();
            const GraphDesc* d = as_graph();
            std::vector<Syllable> syl;
            std::size_t pos = 0;
            std::string s(text);
            while (pos < s.size()) {
                auto dot = s.find('.', pos);
                std::string part = s.substr(pos, dot == std::string::npos ? dot : dot - pos);
                auto colon = part.find(':');
                if (colon == std::string::npos)
                    throw IoError("bad graph-product element: " + s);
                int v = d->spec.vertex_index(part.substr(0, colon));
                GroupElem e = d->spec.vertex_groups[v]->parse_elem(part.substr(colon + 1));
                syl.push_back({v, e.data});
                pos = dot == std::string::npos ? s.size() : dot + 1;
            }
            return from_data(ElemData{std::in_place_index<2>, normalize(std::move(syl))});
        }
    }
}

GroupElem Group::embed(int vertex, const GroupElem& e) const {
    const GraphDesc* d = as_graph();
    if (!d) throw Error("embed: not a graph product");
    if (vertex < 0 || vertex >= static_cast<int>(d->spec.vertices.size()))
        throw Error("embed: vertex out of range");
    if (!d->spec.vertex_groups[vertex]->same(*e.group))
        throw GroupMismatchError("embed: element not in the vertex group");
    if (d->spec.vertex_groups[vertex]->is_identity(e)) return identity();
    return from_data(ElemData{std::in_place_index<2>, std::vector<Syllable>{{vertex, e.data}}});
}

RingElem RingElem::of(const GroupElem& e, Int coeff) {
    RingElem r(e.group);
    r.add_term(e.data, coeff);
    return r;
}

void RingElem::require_same(const RingElem& rhs) const {
    if (!group_ || !rhs.group_ || !group_->same(*rhs.group_))
        throw GroupMismatchError("ring elements over different groups");
}

void RingElem::add_term(const ElemData& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElem RingElem::operator+(const RingElem& rhs) const {
    require_same(rhs);
    RingElem out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

RingElem RingElem::operator-(const RingElem& rhs) const {
    require_same(rhs);
    RingElem out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

RingElem RingElem::operator-() const {
    RingElem out(group_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

RingElem RingElem::operator*(const RingElem& rhs) const {
    require_same(rhs);
    RingElem out(group_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            GroupElem p = group_->mul(group_->from_data(e1), group_->from_data(e2));
            out.add_term(p.data, c1 * c2);
        }
    return out;
}

RingElem RingElem::scaled(const Int& c) const {
    RingElem out(group_);
    for (const auto& [e, k] : terms_) out.add_term(e, k * c);
    return out;
}

RingElem RingElem::acted(const GroupElem& g) const {
    RingElem out(group_);
    for (const auto& [e, c] : terms_)
        out.add_term(group_->mul(group_->from_data(e), g).data, c);
    return out;
}

RingElem RingElem::left_mul(const GroupElem& g) const {
    RingElem out(group_);
    for (const auto& [e, c] : terms_)
        out.add_term(group_->mul(g, group_->from_data(e)).data, c);
    return out;
}

Int RingElem::augmentation() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + " " + group_->name_of(group_->from_data(e));
    }
    return out;
}

RingElem RingElem::parse(const GroupPtr& g, std::string_view text) {
    RingElem out(g);
    std::string s(text);
    // trim
    auto trim = [](std::string v) {
        std::size_t a = v.find_first_not_of(" \t");
        std::size_t b = v.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
    };
    s = trim(s);
    if (s == "0" || s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto plus = s.find('+', pos);
        std::string part = trim(s.substr(pos, plus == std::string::npos ? plus : plus - pos));
        if (part.empty()) throw IoError("bad ring term in: " + s);
        auto sp = part.find(' ');
        if (sp == std::string::npos) throw IoError("ring term needs `coeff elem`: " + part);
        Int c(part.substr(0, sp));
        GroupElem e = g->parse_elem(trim(part.substr(sp + 1)));
        out.add_term(e.data, c);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return out;
}

GroupElem EvalHom::apply(const Word& u) const {
    GroupElem out = group->identity();
    for (const Letter& l : u.letters()) {
        auto it = images.find(l.gen);
        if (it == images.end())
            throw AlphabetError("no group image for generator '" + l.gen.str() + "'");
        out = group->mul(out, l.exp > 0 ? it->second : group->inv(it->second));
    }
    return out;
}

} // namespace crossed
