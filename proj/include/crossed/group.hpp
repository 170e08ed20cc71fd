#pragma once

#include "crossed/error.hpp"
#include "crossed/sym.hpp"
#include "crossed/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace crossed {

using Int = boost::multiprecision::cpp_int;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct Syllable;

/// Normal-form payload of a group element:
///   long long          residue (cyclic; arbitrary integer when infinite)
///   int                index into a multiplication table
///   vector<Syllable>   graph-product normal form
using ElemData = std::variant<long long, int, std::vector<Syllable>>;

struct Syllable {
    int vertex;
    ElemData elem;
    friend bool operator==(const Syllable& a, const Syllable& b) {
        return a.vertex == b.vertex && a.elem == b.elem;
    }
};

bool elem_data_eq(const ElemData& a, const ElemData& b);
bool elem_data_less(const ElemData& a, const ElemData& b);

struct ElemDataLess {
    bool operator()(const ElemData& a, const ElemData& b) const {
        return elem_data_less(a, b);
    }
};

struct GroupElem {
    GroupPtr group;
    ElemData data;
};

struct CyclicDesc {
    long long modulus;   // 0 = infinite cyclic
};

struct TableDesc {
    int order = 0;
    std::vector<int> table;     // row-major, order x order
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::string> names;

    int at(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
};

/// Finite undirected graph with a group attached to each vertex. Vertex
/// order is the declaration order; no loops, no multi-edges.
struct GraphSpec {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;   // index pairs, u != v
    std::vector<GroupPtr> vertex_groups;

    int vertex_index(std::string_view name) const;
    bool has_edge(int u, int v) const;
    void validate() const;
};

struct GraphDesc {
    GraphSpec spec;
    std::vector<std::vector<bool>> adj;
};

/// Immutable group descriptor with a solvable word problem. Elements carry
/// a shared pointer to their descriptor; all operations are dispatched here.
class Group : public std::enable_shared_from_this<Group> {
public:
    enum class Kind { Cyclic, Table, GraphProduct };

    static GroupPtr cyclic(long long modulus);
    static GroupPtr table(const std::vector<std::vector<int>>& mul,
                          std::vector<std::string> names = {});
    static GroupPtr graph_product(GraphSpec spec);
    static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
    static GroupPtr symmetric3();
    static GroupPtr trivial();

    Kind kind() const;
    const CyclicDesc* as_cyclic() const { return std::get_if<CyclicDesc>(&desc_); }
    const TableDesc* as_table() const { return std::get_if<TableDesc>(&desc_); }
    const GraphDesc* as_graph() const { return std::get_if<GraphDesc>(&desc_); }

    bool same(const Group& other) const;

    GroupElem identity() const;
    GroupElem mul(const GroupElem& a, const GroupElem& b) const;
    GroupElem inv(const GroupElem& a) const;
    GroupElem pow(const GroupElem& a, long long k) const;
    bool eq(const GroupElem& a, const GroupElem& b) const;
    bool is_identity(const GroupElem& a) const;

    bool is_finite() const;
    long long order() const;                 // throws when infinite
    std::vector<GroupElem> elements() const; // finite only, deterministic order
    long long element_order(const GroupElem& a) const;

    std::string name_of(const GroupElem& a) const;
    GroupElem parse_elem(std::string_view text) const;

    /// Graph products: the canonical copy of the vertex group.
    GroupElem embed(int vertex, const GroupElem& e) const;

    /// Graph products: normalize a raw syllable list (elements given in the
    /// respective vertex groups) to the left-greedy normal form.
    std::vector<Syllable> normalize(std::vector<Syllable> raw) const;

    GroupElem from_data(ElemData d) const;

private:
    explicit Group(std::variant<CyclicDesc, TableDesc, GraphDesc> desc)
        : desc_(std::move(desc)) {}

    void require_same(const GroupElem& a) const;
    std::variant<CyclicDesc, TableDesc, GraphDesc> desc_;
};

/// Validates the full group axioms of a table; throws Error on failure.
void validate_table(const TableDesc& t);

/// Finite formal integer combination of group elements, keyed by normal
/// form. No zero coefficients are stored.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(GroupPtr g) : group_(std::move(g)) {}
    static RingElem zero(GroupPtr g) { return RingElem(std::move(g)); }
    static RingElem of(const GroupElem& e, Int coeff = 1);
    static RingElem unit(const GroupPtr& g) { return of(g->identity()); }

    const GroupPtr& group() const { return group_; }
    const std::map<ElemData, Int, ElemDataLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RingElem operator+(const RingElem& rhs) const;
    RingElem operator-(const RingElem& rhs) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& rhs) const;
    RingElem scaled(const Int& c) const;
    RingElem acted(const GroupElem& g) const;      // right multiplication by g
    RingElem left_mul(const GroupElem& g) const;   // left multiplication by g
    Int augmentation() const;

    void add_term(const ElemData& e, const Int& c);
    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    std::string str() const;   // `c1 g1 + c2 g2 + ...`, "0" when zero
    static RingElem parse(const GroupPtr& g, std::string_view text);

private:
    GroupPtr group_;
    std::map<ElemData, Int, ElemDataLess> terms_;

    void require_same(const RingElem& rhs) const;
};

/// Evaluation map F(X1) -> G given on generators.
struct EvalHom {
    GroupPtr group;
    std::map<Sym, GroupElem, SymNameLess> images;
    GroupElem apply(const Word& u) const;
};

} // namespace crossed
