#include "crossed/json_io.hpp"

#include <fstream>
#include <sstream>

namespace crossed {

Json group_to_json(const GroupPtr& g) {
    Json j;
    switch (g->kind()) {
        case Group::Kind::Cyclic:
            j["kind"] = "cyclic";
            j["modulus"] = g->as_cyclic()->modulus;
            break;
        case Group::Kind::Table: {
            const TableDesc* t = g->as_table();
            j["kind"] = "table";
            Json rows = Json::array();
            for (int a = 0; a < t->order; ++a) {
                Json row = Json::array();
                for (int b = 0; b < t->order; ++b) row.push_back(t->at(a, b));
                rows.push_back(std::move(row));
            }
            j["table"] = std::move(rows);
            j["names"] = t->names;
            break;
        }
        case Group::Kind::GraphProduct: {
            const GraphDesc* d = g->as_graph();
            Json graph;
            graph["vertices"] = d->spec.vertices;
            Json edges = Json::array();
            for (const auto& [u, v] : d->spec.edges)
                edges.push_back(Json::array({d->spec.vertices[static_cast<std::size_t>(u)],
                                             d->spec.vertices[static_cast<std::size_t>(v)]}));
            graph["edges"] = std::move(edges);
            Json vg = Json::object();
            for (std::size_t i = 0; i < d->spec.vertices.size(); ++i)
                vg[d->spec.vertices[i]] = group_to_json(d->spec.vertex_groups[i]);
            graph["vertex_groups"] = std::move(vg);
            j["kind"] = "graph_product";
            j["graph"] = std::move(graph);
            break;
        }
    }
    return j;
}

GroupPtr group_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return Group::cyclic(j.at("modulus").get<long long>());
    if (kind == "table") {
        auto rows = j.at("table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return Group::table(rows, std::move(names));
    }
    if (kind == "graph_product") {
        const Json& gj = j.at("graph");
        GraphSpec spec;
        spec.vertices = gj.at("vertices").get<std::vector<std::string>>();
        for (const Json& e : gj.at("edges"))
            spec.edges.emplace_back(spec.vertex_index(e.at(0).get<std::string>()),
                                    spec.vertex_index(e.at(1).get<std::string>()));
        spec.vertex_groups.resize(spec.vertices.size());
        const Json& vg = gj.at("vertex_groups");
        for (std::size_t i = 0; i < spec.vertices.size(); ++i)
            spec.vertex_groups[i] = group_from_json(vg.at(spec.vertices[i]));
        return Group::graph_product(std::move(spec));
    }
    throw IoError("unknown group kind: " + kind);
}

Json complex_to_json(const CrossedComplexSpec& spec) {
    Json j;
    j["group"] = group_to_json(spec.group());
    j["maxdim"] = spec.maxdim();
    Json x1 = Json::array();
    for (Sym s : spec.basis(1)) x1.push_back(s.str());
    j["x1"] = std::move(x1);
    Json phi = Json::object();
    for (Sym s : spec.basis(1))
        phi[s.str()] = spec.group()->name_of(spec.phi().apply(Word::generator(s)));
    j["phi"] = std::move(phi);
    Json x2 = Json::array();
    for (Sym r : spec.basis(2))
        x2.push_back(Json{{"name", r.str()}, {"relator", spec.relator(r).str()}});
    j["x2"] = std::move(x2);
    Json higher = Json::array();
    for (int n = 3; n <= spec.maxdim(); ++n) {
        Json level;
        level["dim"] = n;
        Json gens = Json::array();
        for (Sym g : spec.basis(n)) {
            Json gen;
            gen["name"] = g.str();
            if (n == 3) {
                Json factors = Json::array();
                for (const Dim2Factor& f : spec.boundary3(g).factors())
                    factors.push_back(Json::array({f.gen.str(), f.exp, f.op.str()}));
                gen["boundary2"] = std::move(factors);
            } else {
                gen["boundary"] = spec.boundary_n(g).str();
            }
            gens.push_back(std::move(gen));
        }
        level["gens"] = std::move(gens);
        higher.push_back(std::move(level));
    }
    j["higher"] = std::move(higher);
    return j;
}

namespace {

ModuleElem module_from_string(const GroupPtr& g, const std::string& text) {
    ModuleElem out(g);
    std::string s = text;
    auto trim = [](std::string v) {
        std::size_t a = v.find_first_not_of(" \t");
        std::size_t b = v.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
    };
    s = trim(s);
    if (s == "0" || s.empty()) return out;
    // split on '+' outside parentheses
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    for (std::string part : parts) {
        part = trim(part);
        auto star = part.find('*');
        if (star == std::string::npos) throw IoError("module term needs `gen * (...)`: " + part);
        std::string gen = trim(part.substr(0, star));
        std::string coeff = trim(part.substr(star + 1));
        if (coeff.size() < 2 || coeff.front() != '(' || coeff.back() != ')')
            throw IoError("module coefficient needs parentheses: " + part);
        out.add_term(Sym::intern(gen),
                     RingElem::parse(g, coeff.substr(1, coeff.size() - 2)));
    }
    return out;
}

} // namespace

CrossedComplexSpec complex_from_json(const Json& j) {
    GroupPtr g = group_from_json(j.at("group"));
    int maxdim = j.at("maxdim").get<int>();
    std::vector<Sym> x1;
    for (const Json& s : j.at("x1")) x1.push_back(Sym::intern(s.get<std::string>()));
    EvalHom phi{g, {}};
    const Json& pj = j.at("phi");
    for (Sym s : x1) phi.images.emplace(s, g->parse_elem(pj.at(s.str()).get<std::string>()));
    CrossedComplexSpec spec(g, std::move(phi), std::move(x1), maxdim);
    if (j.contains("x2"))
        for (const Json& r : j.at("x2"))
            spec.add_relator(Sym::intern(r.at("name").get<std::string>()),
                             Word::parse(r.at("relator").get<std::string>()));
    if (j.contains("higher"))
        for (const Json& level : j.at("higher")) {
            int n = level.at("dim").get<int>();
            for (const Json& gen : level.at("gens")) {
                Sym nm = Sym::intern(gen.at("name").get<std::string>());
                if (n == 3) {
                    Dim2Elem d;
                    for (const Json& f : gen.at("boundary2"))
                        d.append(Sym::intern(f.at(0).get<std::string>()), f.at(1).get<int>(),
                                 Word::parse(f.at(2).get<std::string>()));
                    spec.add_gen3(nm, std::move(d));
                } else {
                    spec.add_gen_n(n, nm,
                                   module_from_string(g, gen.at("boundary").get<std::string>()));
                }
            }
        }
    return spec;
}

Json tensor_to_json(const TensorComplex& t) {
    Json j = complex_to_json(t.spec());
    Json tj;
    Json graph;
    graph["vertices"] = t.graph().vertices;
    Json edges = Json::array();
    for (const auto& [u, v] : t.graph().edges)
        edges.push_back(Json::array({t.graph().vertices[static_cast<std::size_t>(u)],
                                     t.graph().vertices[static_cast<std::size_t>(v)]}));
    graph["edges"] = std::move(edges);
    tj["graph"] = std::move(graph);
    Json gens = Json::object();
    for (int n = 1; n <= t.spec().maxdim(); ++n)
        for (const TensorGen& g : t.gens(n)) {
            if (g.factors.size() < 2) continue;
            Json tuple = Json::array();
            for (const TensorFactor& f : g.factors)
                tuple.push_back(f.gen.str() + "@" +
                                t.graph().vertices[static_cast<std::size_t>(f.vertex)]);
            gens[g.name().str()] = Json{{"tuple", std::move(tuple)},
                                        {"raw", t.raw_boundary(g)}};
        }
    tj["generators"] = std::move(gens);
    j["tensor"] = std::move(tj);
    return j;
}

Json report_to_json(const Report& rep) {
    Json lines = Json::array();
    for (const Check& c : rep.checks) {
        Json line;
        // ids look like "ddzero.3.x3": kind, then an optional dimension,
        // then the generator or sample tag
        std::string kind = c.id;
        auto dot = kind.find('.');
        if (dot != std::string::npos) {
            std::string rest = kind.substr(dot + 1);
            kind = kind.substr(0, dot);
            auto dot2 = rest.find('.');
            std::string mid = dot2 == std::string::npos ? rest : rest.substr(0, dot2);
            if (!mid.empty() && mid.find_first_not_of("0123456789") == std::string::npos) {
                line["dim"] = std::stoi(mid);
                if (dot2 != std::string::npos) line["gen"] = rest.substr(dot2 + 1);
            } else {
                line["gen"] = rest;
            }
        }
        line["check"] = kind;
        line["id"] = c.id;
        if (c.pass) {
            line["status"] = "pass";
            if (!c.witness.empty()) line["note"] = c.witness;
        } else {
            line["status"] = Json{{"witness", c.witness}};
        }
        lines.push_back(std::move(line));
    }
    Json summary;
    summary["summary"] = Json{{"checks", rep.checks.size()},
                              {"failures", rep.failures()},
                              {"seed", rep.seed}};
    lines.push_back(std::move(summary));
    return lines;
}

std::string report_to_jsonl(const Report& rep) {
    std::string out;
    for (const Json& line : report_to_json(rep)) out += line.dump() + "\n";
    return out;
}

std::string report_pretty(const Report& rep) {
    std::ostringstream out;
    for (const Check& c : rep.checks) {
        out << (c.pass ? "  ok   " : "  FAIL ") << c.id;
        if (!c.witness.empty()) out << "   (" << c.witness << ")";
        out << "\n";
    }
    out << (rep.all_pass() ? "all " : "") << rep.checks.size() << " checks, "
        << rep.failures() << " failures (seed " << rep.seed << ")\n";
    return out.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write: " + path);
    out << j.dump(2) << "\n";
}

} // namespace crossed
