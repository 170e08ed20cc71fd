#include "crossed/complex.hpp"

#include "crossed/parallel.hpp"

#include <deque>
#include <mutex>
#include <random>
#include <sstream>

namespace crossed {

Dim2Elem Dim2Elem::generator(Sym g, int exp, Word op) {
    Dim2Elem c;
    c.fs_.push_back({g, exp, std::move(op)});
    return c;
}

Dim2Elem Dim2Elem::operator*(const Dim2Elem& rhs) const {
    Dim2Elem out = *this;
    out.fs_.insert(out.fs_.end(), rhs.fs_.begin(), rhs.fs_.end());
    return out;
}

Dim2Elem Dim2Elem::inverse() const {
    Dim2Elem out;
    out.fs_.reserve(fs_.size());
    for (auto it = fs_.rbegin(); it != fs_.rend(); ++it)
        out.fs_.push_back({it->gen, -it->exp, it->op});
    return out;
}

Dim2Elem Dim2Elem::acted_by(const Word& u) const {
    Dim2Elem out;
    out.fs_.reserve(fs_.size());
    for (const Dim2Factor& f : fs_) out.fs_.push_back({f.gen, f.exp, f.op * u});
    return out;
}

void Dim2Elem::append(Sym g, int exp, const Word& op) { fs_.push_back({g, exp, op}); }

std::string Dim2Elem::str() const {
    if (fs_.empty()) return "1";
    std::string out;
    for (const Dim2Factor& f : fs_) {
        if (!out.empty()) out += ' ';
        out += f.gen.str();
        if (f.exp < 0) out += "^-1";
        if (!f.op.empty()) out += "{" + f.op.str() + "}";
    }
    return out;
}

bool same_factors(const Dim2Elem& a, const Dim2Elem& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Dim2Factor& x = a.factors()[i];
        const Dim2Factor& y = b.factors()[i];
        if (x.gen != y.gen || x.exp != y.exp || x.op != y.op) return false;
    }
    return true;
}

ModuleElem ModuleElem::of(Sym basis, RingElem coeff) {
    ModuleElem m(coeff.group());
    m.add_term(basis, coeff);
    return m;
}

void ModuleElem::add_term(Sym basis, const RingElem& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(basis);
    if (it == terms_.end()) {
        terms_.emplace(basis, coeff);
    } else {
        RingElem s = it->second + coeff;
        if (s.is_zero()) {
            terms_.erase(it);
        } else {
            it->second = std::move(s);
        }
    }
}

ModuleElem ModuleElem::operator+(const ModuleElem& rhs) const {
    ModuleElem out = *this;
    if (!out.group_) out.group_ = rhs.group_;
    for (const auto& [b, c] : rhs.terms_) out.add_term(b, c);
    return out;
}

ModuleElem ModuleElem::operator-(const ModuleElem& rhs) const { return *this + (-rhs); }

ModuleElem ModuleElem::operator-() const {
    ModuleElem out(group_);
    for (const auto& [b, c] : terms_) out.add_term(b, -c);
    return out;
}

ModuleElem ModuleElem::acted(const RingElem& r) const {
    ModuleElem out(group_);
    for (const auto& [b, c] : terms_) out.add_term(b, c * r);
    return out;
}

ModuleElem ModuleElem::acted(const GroupElem& g) const {
    ModuleElem out(group_);
    for (const auto& [b, c] : terms_) out.add_term(b, c.acted(g));
    return out;
}

ModuleElem ModuleElem::scaled(const Int& k) const {
    ModuleElem out(group_);
    for (const auto& [b, c] : terms_) out.add_term(b, c.scaled(k));
    return out;
}

std::string ModuleElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += b.str() + " * (" + c.str() + ")";
    }
    return out;
}

// --- CrossedComplexSpec -----------------------------------------------------

struct CrossedComplexSpec::LiftState {
    std::once_flag once;
    std::map<ElemData, Word, ElemDataLess> table;   // finite transversal cache
};

CrossedComplexSpec::CrossedComplexSpec(GroupPtr group, EvalHom phi, std::vector<Sym> x1,
                                       int maxdim)
    : group_(std::move(group)), phi_(std::move(phi)), maxdim_(maxdim),
      lift_(std::make_shared<LiftState>()) {
    if (maxdim_ < 1) throw DimensionError("complex: maxdim must be >= 1");
    bases_.resize(static_cast<std::size_t>(maxdim_));
    bases_[0] = std::move(x1);
    for (Sym g : bases_[0]) {
        if (dims_.count(g)) throw Error("duplicate generator name: " + g.str());
        dims_[g] = 1;
        if (!phi_.images.count(g))
            throw AlphabetError("phi not defined on generator '" + g.str() + "'");
    }
}

void CrossedComplexSpec::add_relator(Sym r, Word w) {
    if (maxdim_ < 2) throw DimensionError("complex: no dimension 2 declared");
    if (dims_.count(r)) throw Error("duplicate generator name: " + r.str());
    check_alphabet(w, bases_[0]);
    dims_[r] = 2;
    bases_[1].push_back(r);
    relator_.emplace(r, std::move(w));
}

void CrossedComplexSpec::add_gen3(Sym g, Dim2Elem boundary) {
    if (maxdim_ < 3) throw DimensionError("complex: no dimension 3 declared");
    if (dims_.count(g)) throw Error("duplicate generator name: " + g.str());
    for (const Dim2Factor& f : boundary.factors()) {
        if (dim_of(f.gen) != 2)
            throw AlphabetError("delta3 factor '" + f.gen.str() + "' is not a relator");
        check_alphabet(f.op, bases_[0]);
    }
    dims_[g] = 3;
    bases_[2].push_back(g);
    d3_.emplace(g, std::move(boundary));
}

void CrossedComplexSpec::add_gen_n(int n, Sym g, ModuleElem boundary) {
    if (n < 4) throw DimensionError("add_gen_n: use add_gen3 below dimension 4");
    if (n > maxdim_) throw DimensionError("complex: dimension above maxdim");
    if (dims_.count(g)) throw Error("duplicate generator name: " + g.str());
    for (const auto& [b, c] : boundary.terms()) {
        if (dim_of(b) != n - 1)
            throw AlphabetError("delta" + std::to_string(n) + " term '" + b.str() +
                                "' is not in dimension " + std::to_string(n - 1));
    }
    dims_[g] = n;
    bases_[static_cast<std::size_t>(n) - 1].push_back(g);
    dn_.emplace(g, std::move(boundary));
}

const std::vector<Sym>& CrossedComplexSpec::basis(int n) const {
    if (n < 1 || n > maxdim_) {
        static const std::vector<Sym> empty;
        return empty;
    }
    return bases_[static_cast<std::size_t>(n) - 1];
}

int CrossedComplexSpec::dim_of(Sym g) const {
    auto it = dims_.find(g);
    return it == dims_.end() ? 0 : it->second;
}

const Word& CrossedComplexSpec::relator(Sym r) const {
    auto it = relator_.find(r);
    if (it == relator_.end()) throw AlphabetError("unknown relator: " + r.str());
    return it->second;
}

const Dim2Elem& CrossedComplexSpec::boundary3(Sym g) const {
    auto it = d3_.find(g);
    if (it == d3_.end()) throw AlphabetError("unknown dimension-3 generator: " + g.str());
    return it->second;
}

const ModuleElem& CrossedComplexSpec::boundary_n(Sym g) const {
    auto it = dn_.find(g);
    if (it == dn_.end()) throw AlphabetError("unknown generator: " + g.str());
    return it->second;
}

Word CrossedComplexSpec::lift_in(const GroupPtr& g, const ElemData& e,
                                 const std::vector<Sym>& alphabet) const {
    switch (g->kind()) {
        case Group::Kind::Cyclic: {
            // power of the first generator mapping to t
            for (Sym x : alphabet) {
                GroupElem img = phi_.apply(Word::generator(x));
                if (!g->same(*img.group)) continue;
                if (std::get<0>(img.data) == 1) {
                    return Word::generator(x, std::get<0>(e));
                }
            }
            break;   // fall through to BFS for finite cyclic without a t-generator
        }
        default: break;
    }
    if (g->kind() == Group::Kind::GraphProduct) {
        const GraphDesc* d = g->as_graph();
        Word out;
        for (const Syllable& s : std::get<2>(e)) {
            const GroupPtr& vg = d->spec.vertex_groups[s.vertex];
            // restrict to generators mapping into this vertex copy
            std::vector<Sym> sub;
            for (Sym x : alphabet) {
                GroupElem img = phi_.apply(Word::generator(x));
                const auto& syl = std::get<2>(img.data);
                if (syl.size() == 1 && syl[0].vertex == s.vertex) sub.push_back(x);
            }
            // phi restricted to the vertex copy, expressed in the vertex group
            EvalHom sub_phi{vg, {}};
            for (Sym x : sub) {
                GroupElem img = phi_.apply(Word::generator(x));
                sub_phi.images.emplace(x, vg->from_data(std::get<2>(img.data)[0].elem));
            }
            CrossedComplexSpec helper(vg, sub_phi, sub, 1);
            out = out * helper.lift(vg->from_data(s.elem));
        }
        return out;
    }
    if (!g->is_finite())
        throw Error("lift: no deterministic preimage rule for this infinite group");
    // fixed transversal: BFS over generators in declaration order
    std::call_once(lift_->once, [&] {
        std::deque<ElemData> queue;
        ElemData id = g->identity().data;
        lift_->table.emplace(id, Word());
        queue.push_back(id);
        while (!queue.empty()) {
            ElemData cur = queue.front();
            queue.pop_front();
            const Word& w = lift_->table.at(cur);
            for (Sym x : alphabet) {
                for (int exp : {1, -1}) {
                    GroupElem next =
                        g->mul(g->from_data(cur), phi_.apply(Word::generator(x, exp)));
                    if (!lift_->table.count(next.data)) {
                        lift_->table.emplace(next.data, w * Word::generator(x, exp));
                        queue.push_back(next.data);
                    }
                }
            }
        }
    });
    auto it = lift_->table.find(e);
    if (it == lift_->table.end())
        throw Error("lift: phi is not surjective onto the coefficient group");
    return it->second;
}

Word CrossedComplexSpec::lift(const GroupElem& g) const {
    if (!group_->same(*g.group)) throw GroupMismatchError("lift: wrong group");
    return lift_in(group_, g.data, bases_[0]);
}

// --- operations -------------------------------------------------------------

Word delta2(const Dim2Elem& c, const CrossedComplexSpec& spec) {
    Word out;
    for (const Dim2Factor& f : c.factors()) {
        const Word& w = spec.relator(f.gen);
        out = out * conj(f.exp > 0 ? w : w.inverse(), f.op);
    }
    return out;
}

Dim2Elem mul2(const Dim2Elem& a, const Dim2Elem& b) { return a * b; }
Dim2Elem inv2(const Dim2Elem& a) { return a.inverse(); }
Dim2Elem act2(const Dim2Elem& c, const Word& u) { return c.acted_by(u); }

Dim2Elem peiffer(const Dim2Elem& h, const Dim2Elem& k, const CrossedComplexSpec& spec) {
    return h.inverse() * k.inverse() * h * k.acted_by(delta2(h, spec));
}

ModuleElem abelianize2(const Dim2Elem& c, const CrossedComplexSpec& spec) {
    ModuleElem out(spec.group());
    for (const Dim2Factor& f : c.factors()) {
        if (spec.dim_of(f.gen) != 2)
            throw AlphabetError("abelianize2: '" + f.gen.str() + "' is not a relator");
        out.add_term(f.gen, RingElem::of(spec.phi().apply(f.op), f.exp));
    }
    return out;
}

bool eq2(const Dim2Elem& a, const Dim2Elem& b, const CrossedComplexSpec& spec) {
    if (delta2(a, spec) != delta2(b, spec)) return false;
    return abelianize2(a, spec) == abelianize2(b, spec);
}

ModuleElem delta_module(const ModuleElem& m, const CrossedComplexSpec& spec, int n) {
    if (n < 4) throw DimensionError("delta_module: dimension must be >= 4");
    ModuleElem out(spec.group());
    for (const auto& [b, c] : m.terms()) {
        if (spec.dim_of(b) != n)
            throw DimensionError("delta_module: '" + b.str() + "' is not in dimension " +
                                 std::to_string(n));
        out = out + spec.boundary_n(b).acted(c);
    }
    return out;
}

Dim2Elem delta3_of_module(const ModuleElem& m, const CrossedComplexSpec& spec,
                          const std::function<Word(const GroupElem&)>& lift) {
    Dim2Elem out;
    for (const auto& [b, c] : m.terms()) {
        if (spec.dim_of(b) != 3)
            throw DimensionError("delta3_of_module: '" + b.str() + "' is not in dimension 3");
        const Dim2Elem& base = spec.boundary3(b);
        for (const auto& [e, coeff] : c.terms()) {
            Word u = lift(spec.group()->from_data(e));
            Dim2Elem piece = base.acted_by(u);
            if (coeff < 0) piece = piece.inverse();
            Int reps = coeff < 0 ? Int(-coeff) : coeff;
            for (Int i = 0; i < reps; ++i) out = out * piece;
        }
    }
    return out;
}

Dim2Elem delta3_of_module(const ModuleElem& m, const CrossedComplexSpec& spec) {
    return delta3_of_module(m, spec, [&spec](const GroupElem& g) { return spec.lift(g); });
}

// --- validation -------------------------------------------------------------

namespace {

Word random_word(std::mt19937_64& rng, const std::vector<Sym>& alphabet, int max_len) {
    if (alphabet.empty()) return {};
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<std::pair<Sym, long long>> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.emplace_back(alphabet[pick(rng)], sign(rng) ? 1 : -1);
    return Word::reduced(raw);
}

Dim2Elem random_dim2(std::mt19937_64& rng, const CrossedComplexSpec& spec,
                     const ValidateOptions& opt) {
    const auto& x2 = spec.basis(2);
    Dim2Elem c;
    if (x2.empty()) return c;
    std::uniform_int_distribution<int> nf(0, opt.max_factors);
    std::uniform_int_distribution<std::size_t> pick(0, x2.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int n = nf(rng);
    for (int i = 0; i < n; ++i)
        c.append(x2[pick(rng)], sign(rng) ? 1 : -1,
                 random_word(rng, spec.basis(1), opt.max_op_len));
    return c;
}

} // namespace

Report validate_axioms(const CrossedComplexSpec& spec, const ValidateOptions& opt) {
    if (spec.maxdim() < 2) throw DimensionError("validate_axioms: maxdim must be >= 2");
    Report rep;
    rep.seed = opt.seed;

    // phi kills every relator
    for (Sym r : spec.basis(2)) {
        GroupElem img = spec.phi().apply(spec.relator(r));
        rep.add("phi_delta2." + r.str(), spec.group()->is_identity(img),
                spec.group()->is_identity(img) ? "" : "phi(w(" + r.str() + ")) != 1");
    }

    // dd trivial on every basis element, dimension by dimension
    if (spec.maxdim() >= 3) {
        const auto& x3 = spec.basis(3);
        std::vector<Check> results(x3.size());
        parallel_for(x3.size(), [&](std::size_t i) {
            Word w = delta2(spec.boundary3(x3[i]), spec);
            results[i] = {"ddzero.3." + x3[i].str(), w.empty(),
                          w.empty() ? "" : "delta2(delta3(" + x3[i].str() + ")) = " + w.str()};
        });
        for (Check& c : results) rep.checks.push_back(std::move(c));
    }
    if (spec.maxdim() >= 4) {
        const auto& x4 = spec.basis(4);
        std::vector<Check> results(x4.size());
        parallel_for(x4.size(), [&](std::size_t i) {
            ModuleElem b = spec.boundary_n(x4[i]);
            Dim2Elem down = delta3_of_module(b, spec);
            bool ok = eq2(down, Dim2Elem(), spec);
            results[i] = {"ddzero.4." + x4[i].str(), ok,
                          ok ? "" : "delta3(delta4(" + x4[i].str() + ")) nontrivial"};
        });
        for (Check& c : results) rep.checks.push_back(std::move(c));
    }
    for (int n = 5; n <= spec.maxdim(); ++n) {
        for (Sym g : spec.basis(n)) {
            ModuleElem dd = delta_module(spec.boundary_n(g), spec, n - 1);
            rep.add("ddzero." + std::to_string(n) + "." + g.str(), dd.is_zero(),
                    dd.is_zero() ? "" : "delta delta (" + g.str() + ") = " + dd.str());
        }
    }

    // CM1 and CM2 on sampled elements
    std::mt19937_64 rng(opt.seed);
    if (spec.basis(2).empty()) {
        rep.add("cm1.samples", true, "no dimension-2 generators");
        rep.add("cm2.samples", true, "no dimension-2 generators");
    } else {
        bool cm1_ok = true, cm2_ok = true;
        std::string cm1_w, cm2_w;
        for (int i = 0; i < opt.samples; ++i) {
            Dim2Elem c = random_dim2(rng, spec, opt);
            Dim2Elem d = random_dim2(rng, spec, opt);
            Word u = random_word(rng, spec.basis(1), opt.max_op_len);
            if (delta2(act2(c, u), spec) != conj(delta2(c, spec), u)) {
                cm1_ok = false;
                cm1_w = "c = " + c.str() + ", u = " + u.str();
                break;
            }
            if (!eq2(mul2(c, d), mul2(d, act2(c, delta2(d, spec))), spec)) {
                cm2_ok = false;
                cm2_w = "c = " + c.str() + ", d = " + d.str();
                break;
            }
        }
        rep.add("cm1.samples", cm1_ok, cm1_w);
        rep.add("cm2.samples", cm2_ok, cm2_w);
    }

    rep.canonicalize();
    return rep;
}

// --- morphisms --------------------------------------------------------------

GroupElem CrsMorphism::induced_group(const GroupElem& g) const {
    return target->phi().apply(f1.apply(source->lift(g)));
}

RingElem CrsMorphism::induced_ring(const RingElem& r) const {
    RingElem out(target->group());
    for (const auto& [e, c] : r.terms())
        out.add_term(induced_group(source->group()->from_data(e)).data, c);
    return out;
}

Word CrsMorphism::apply1(const Word& u) const { return f1.apply(u); }

Dim2Elem CrsMorphism::apply2(const Dim2Elem& c) const {
    Dim2Elem out;
    for (const Dim2Factor& f : c.factors()) {
        auto it = f2.find(f.gen);
        if (it == f2.end())
            throw AlphabetError("morphism: no image for relator '" + f.gen.str() + "'");
        Dim2Elem img = it->second.acted_by(f1.apply(f.op));
        out = out * (f.exp > 0 ? img : img.inverse());
    }
    return out;
}

ModuleElem CrsMorphism::apply_n(const ModuleElem& m) const {
    ModuleElem out(target->group());
    for (const auto& [b, c] : m.terms()) {
        auto it = fn.find(b);
        if (it == fn.end())
            throw AlphabetError("morphism: no image for generator '" + b.str() + "'");
        out = out + it->second.acted(induced_ring(c));
    }
    return out;
}

CrsMorphism identity_morphism(const CrossedComplexSpec& spec) {
    CrsMorphism f;
    f.source = &spec;
    f.target = &spec;
    for (Sym x : spec.basis(1)) f.f1.images.emplace(x, Word::generator(x));
    for (Sym r : spec.basis(2)) f.f2.emplace(r, Dim2Elem::generator(r));
    for (int n = 3; n <= spec.maxdim(); ++n)
        for (Sym g : spec.basis(n))
            f.fn.emplace(g, ModuleElem::of(g, RingElem::unit(spec.group())));
    return f;
}

Report check_morphism(const CrsMorphism& f) {
    const CrossedComplexSpec& src = *f.source;
    const CrossedComplexSpec& tgt = *f.target;
    Report rep;
    for (Sym r : src.basis(2)) {
        auto it = f.f2.find(r);
        if (it == f.f2.end()) {
            rep.add("morphism.d2." + r.str(), false, "missing image");
            continue;
        }
        Word lhs = f.f1.apply(src.relator(r));
        Word rhs = delta2(it->second, tgt);
        rep.add("morphism.d2." + r.str(), lhs == rhs,
                lhs == rhs ? "" : lhs.str() + " != " + rhs.str());
    }
    for (Sym g : src.basis(3)) {
        auto it = f.fn.find(g);
        if (it == f.fn.end()) {
            rep.add("morphism.d3." + g.str(), false, "missing image");
            continue;
        }
        Dim2Elem lhs = f.apply2(src.boundary3(g));
        Dim2Elem rhs = delta3_of_module(it->second, tgt);
        bool ok = eq2(lhs, rhs, tgt);
        rep.add("morphism.d3." + g.str(), ok, ok ? "" : "delta does not commute");
    }
    for (int n = 4; n <= src.maxdim(); ++n) {
        for (Sym g : src.basis(n)) {
            auto it = f.fn.find(g);
            if (it == f.fn.end()) {
                rep.add("morphism.d" + std::to_string(n) + "." + g.str(), false,
                        "missing image");
                continue;
            }
            ModuleElem lhs = f.apply_n(src.boundary_n(g));
            ModuleElem rhs = delta_module(it->second, tgt, n);
            bool ok = lhs == rhs;
            rep.add("morphism.d" + std::to_string(n) + "." + g.str(), ok,
                    ok ? "" : lhs.str() + " != " + rhs.str());
        }
    }
    rep.canonicalize();
    return rep;
}

} // namespace crossed
