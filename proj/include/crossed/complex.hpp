#pragma once

#include "crossed/group.hpp"
#include "crossed/report.hpp"
#include "crossed/word.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crossed {

/// Formal consequence in a free crossed module: an ordered product of
/// conjugated relator generators (x^e)^u. Factor lists are representatives,
/// not canonical forms; semantic equality is eq2.
struct Dim2Factor {
    Sym gen;
    int exp;   // +1 or -1
    Word op;
};

class Dim2Elem {
public:
    Dim2Elem() = default;
    static Dim2Elem generator(Sym g, int exp = 1, Word op = {});

    const std::vector<Dim2Factor>& factors() const { return fs_; }
    bool trivial_form() const { return fs_.empty(); }   // representative-level only
    std::size_t size() const { return fs_.size(); }

    Dim2Elem operator*(const Dim2Elem& rhs) const;
    Dim2Elem inverse() const;
    Dim2Elem acted_by(const Word& u) const;
    void append(Sym g, int exp, const Word& op);

    std::string str() const;

private:
    std::vector<Dim2Factor> fs_;
};

/// True when the two factor lists are literally identical (golden tests).
bool same_factors(const Dim2Elem& a, const Dim2Elem& b);

/// Element of a free ZG-module with named basis: basis generator -> ring
/// coefficient. Zero coefficients are never stored.
class ModuleElem {
public:
    ModuleElem() = default;
    explicit ModuleElem(GroupPtr g) : group_(std::move(g)) {}
    static ModuleElem zero(GroupPtr g) { return ModuleElem(std::move(g)); }
    static ModuleElem of(Sym basis, RingElem coeff);

    const GroupPtr& group() const { return group_; }
    const std::map<Sym, RingElem, SymNameLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ModuleElem operator+(const ModuleElem& rhs) const;
    ModuleElem operator-(const ModuleElem& rhs) const;
    ModuleElem operator-() const;
    ModuleElem acted(const RingElem& r) const;     // coefficients * r (on the right)
    ModuleElem acted(const GroupElem& g) const;
    ModuleElem scaled(const Int& c) const;

    void add_term(Sym basis, const RingElem& coeff);
    friend bool operator==(const ModuleElem& a, const ModuleElem& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ModuleElem& a, const ModuleElem& b) { return !(a == b); }

    std::string str() const;   // `gen * (c1 g1 + ...) + ...`, "0" when zero

private:
    GroupPtr group_;
    std::map<Sym, RingElem, SymNameLess> terms_;
};

/// A free reduced crossed complex: presentation <X1 | w : X2>, graded free
/// bases X_n for n >= 3 with boundary data, and the evaluation map
/// phi : F(X1) -> G. delta3 values live in dimension 2 as Dim2Elems; higher
/// boundaries are module elements over the next basis down.
class CrossedComplexSpec {
public:
    CrossedComplexSpec(GroupPtr group, EvalHom phi, std::vector<Sym> x1, int maxdim);

    void add_relator(Sym r, Word w);
    void add_gen3(Sym g, Dim2Elem boundary);
    void add_gen_n(int n, Sym g, ModuleElem boundary);

    int maxdim() const { return maxdim_; }
    const GroupPtr& group() const { return group_; }
    const EvalHom& phi() const { return phi_; }

    const std::vector<Sym>& basis(int n) const;   // n >= 1
    int dim_of(Sym g) const;                      // 0 when unknown
    bool has_gen(Sym g) const { return dim_of(g) != 0; }

    const Word& relator(Sym r) const;
    const Dim2Elem& boundary3(Sym g) const;
    const ModuleElem& boundary_n(Sym g) const;    // dims >= 4

    /// Deterministic phi-preimage: powers of the cyclic generator, fixed
    /// shortest transversal words for finite groups, syllable-wise lifts
    /// for graph products.
    Word lift(const GroupElem& g) const;

private:
    GroupPtr group_;
    EvalHom phi_;
    int maxdim_;
    std::vector<std::vector<Sym>> bases_;              // [n-1] = X_n
    std::map<Sym, Word, SymNameLess> relator_;
    std::map<Sym, Dim2Elem, SymNameLess> d3_;
    std::map<Sym, ModuleElem, SymNameLess> dn_;
    std::map<Sym, int, SymNameLess> dims_;

    struct LiftState;
    mutable std::shared_ptr<LiftState> lift_;   // built on first use
    Word lift_in(const GroupPtr& g, const ElemData& e, const std::vector<Sym>& alphabet) const;
};

// --- crossed module operations -------------------------------------------

/// delta2 of a formal consequence: the reduced word  prod u_i^-1 (w x_i)^e_i u_i.
Word delta2(const Dim2Elem& c, const CrossedComplexSpec& spec);

Dim2Elem mul2(const Dim2Elem& a, const Dim2Elem& b);
Dim2Elem inv2(const Dim2Elem& a);
Dim2Elem act2(const Dim2Elem& c, const Word& u);

/// Peiffer commutator <h,k> = h^-1 k^-1 h k^{delta2 h}.
Dim2Elem peiffer(const Dim2Elem& h, const Dim2Elem& k, const CrossedComplexSpec& spec);

/// Image in the free ZG-module on X2: (x,e,u) contributes e*phi(u) at x.
ModuleElem abelianize2(const Dim2Elem& c, const CrossedComplexSpec& spec);

/// Complete equality test for elements of the free crossed module: equal
/// delta2 image and equal abelianization.
bool eq2(const Dim2Elem& a, const Dim2Elem& b, const CrossedComplexSpec& spec);

/// ZG-linear boundary of a module element in dimension n >= 4.
ModuleElem delta_module(const ModuleElem& m, const CrossedComplexSpec& spec, int n);

/// Boundary of a dimension-3 module element, expanded into dimension 2 by
/// the given lift (defaults to the complex's deterministic lift). Term order
/// is the stored order.
Dim2Elem delta3_of_module(const ModuleElem& m, const CrossedComplexSpec& spec);
Dim2Elem delta3_of_module(const ModuleElem& m, const CrossedComplexSpec& spec,
                          const std::function<Word(const GroupElem&)>& lift);

struct ValidateOptions {
    int samples = 1000;
    std::uint64_t seed = 0;
    int max_op_len = 6;
    int max_factors = 4;
};

/// Axiom sweep: dd trivial on every basis element, CM1/CM2 on sampled
/// elements, relators trivial under phi. Failures carry witnesses.
Report validate_axioms(const CrossedComplexSpec& spec, const ValidateOptions& opt = {});

// --- morphisms -------------------------------------------------------------

struct CrsMorphism {
    const CrossedComplexSpec* source = nullptr;
    const CrossedComplexSpec* target = nullptr;
    FreeHom f1;
    std::map<Sym, Dim2Elem, SymNameLess> f2;
    std::map<Sym, ModuleElem, SymNameLess> fn;   // dims >= 3

    GroupElem induced_group(const GroupElem& g) const;
    RingElem induced_ring(const RingElem& r) const;

    Word apply1(const Word& u) const;
    Dim2Elem apply2(const Dim2Elem& c) const;
    ModuleElem apply_n(const ModuleElem& m) const;
};

CrsMorphism identity_morphism(const CrossedComplexSpec& spec);

/// Checks f delta = delta f on every basis generator.
Report check_morphism(const CrsMorphism& f);

} // namespace crossed
