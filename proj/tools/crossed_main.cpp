// Command-line front end: build resolutions and tensor products from JSON
// descriptions, run verification sweeps, compute homology, enumerate
// extensions. Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or input error.

#include "crossed/chain.hpp"
#include "crossed/complex.hpp"
#include "crossed/extension.hpp"
#include "crossed/json_io.hpp"
#include "crossed/resolution.hpp"
#include "crossed/tensor.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace {

using namespace crossed;

GroupPtr parse_group_name(const std::string& name) {
    auto x = name.find('x');
    if (x != std::string::npos)
        return Group::direct_product(parse_group_name(name.substr(0, x)),
                                     parse_group_name(name.substr(x + 1)));
    if (name == "S3") return Group::symmetric3();
    if (name.size() >= 2 && name[0] == 'C') {
        long long p = std::stoll(name.substr(1));
        if (p < 1) throw Error("group " + name + ": modulus must be >= 1");
        return Group::cyclic(p);
    }
    throw Error("unknown group name: " + name + " (use C<p>, S3, or products like C2xC2)");
}

struct BuildOpts {
    std::string standard;
    long long cyclic = 0;
    std::string complex_file;
    int maxdim = 2;
};

std::shared_ptr<const CrossedComplexSpec> build_complex(const BuildOpts& o) {
    int sources = (!o.standard.empty()) + (o.cyclic > 0) + (!o.complex_file.empty());
    if (sources != 1)
        throw Error("exactly one of --standard, --cyclic, --complex is required");
    if (!o.standard.empty())
        return std::make_shared<CrossedComplexSpec>(
            standard_resolution(parse_group_name(o.standard), o.maxdim));
    if (o.cyclic > 0)
        return std::make_shared<CrossedComplexSpec>(cyclic_resolution(o.cyclic, o.maxdim));
    return std::make_shared<CrossedComplexSpec>(complex_from_json(load_json_file(o.complex_file)));
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json_file(out_path, j);
    }
}

int emit_report(const Report& rep, const std::string& out_path, bool pretty) {
    std::string text = pretty ? report_pretty(rep) : report_to_jsonl(rep);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot write: " + out_path);
        out << text;
    }
    return rep.all_pass() ? 0 : 1;
}

std::pair<int, int> parse_dims(const std::string& dims) {
    auto dots = dims.find("..");
    if (dots == std::string::npos) {
        int d = std::stoi(dims);
        return {d, d};
    }
    return {std::stoi(dims.substr(0, dots)), std::stoi(dims.substr(dots + 2))};
}

/// Vertex resolutions for a graph file: cyclic vertex groups get the
/// periodic resolution (length 1 when infinite), tables the standard one.
std::vector<std::shared_ptr<const CrossedComplexSpec>> vertex_resolutions(
    const Json& graph_json, const GraphSpec& graph, int maxdim) {
    std::vector<std::shared_ptr<const CrossedComplexSpec>> out;
    const Json& vg = graph_json.at("vertex_groups");
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        const std::string& vname = graph.vertices[i];
        const Json& gj = vg.at(vname);
        std::string gen = gj.contains("generator") ? gj.at("generator").get<std::string>()
                                                   : "x_" + vname;
        const GroupPtr& g = graph.vertex_groups[i];
        if (g->kind() == Group::Kind::Cyclic && g->as_cyclic()->modulus == 0) {
            out.push_back(std::make_shared<CrossedComplexSpec>(infinite_cyclic_complex(gen)));
        } else if (g->kind() == Group::Kind::Cyclic) {
            out.push_back(std::make_shared<CrossedComplexSpec>(
                cyclic_resolution(g->as_cyclic()->modulus, std::max(2, maxdim), gen)));
        } else {
            out.push_back(std::make_shared<CrossedComplexSpec>(
                with_prefix(standard_resolution(g, std::max(2, maxdim)), vname + ".")));
        }
    }
    return out;
}

GraphSpec graph_from_json_file(const Json& j) {
    GraphSpec spec;
    spec.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const Json& e : j.at("edges"))
        spec.edges.emplace_back(spec.vertex_index(e.at(0).get<std::string>()),
                                spec.vertex_index(e.at(1).get<std::string>()));
    spec.vertex_groups.resize(spec.vertices.size());
    const Json& vg = j.at("vertex_groups");
    for (std::size_t i = 0; i < spec.vertices.size(); ++i)
        spec.vertex_groups[i] = group_from_json(vg.at(spec.vertices[i]));
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reduced crossed complexes: resolutions, tensor products, verification"};
    app.require_subcommand(1);

    BuildOpts opts;
    std::string out_path, report_path, graph_file, gen_name, dims = "1..2";
    std::string afile, bfile, kgroup;
    bool pretty = false;
    int samples = 1000;
    std::uint64_t seed = 0;
    long long p = 2;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--standard", opts.standard, "standard resolution of a finite group");
        cmd->add_option("--cyclic", opts.cyclic, "periodic resolution of C_p");
        cmd->add_option("--complex", opts.complex_file, "load a complex from JSON");
        cmd->add_option("--maxdim", opts.maxdim, "top dimension")->check(CLI::Range(2, 12));
    };

    CLI::App* resolve = app.add_subcommand("resolve", "emit a resolution as JSON");
    add_source(resolve);
    resolve->add_option("-o,--out", out_path, "output file (stdout when absent)");

    CLI::App* boundary = app.add_subcommand("boundary", "print the boundary of a generator");
    boundary->add_option("--complex", opts.complex_file, "complex JSON")->required();
    boundary->add_option("--gen", gen_name, "generator name")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the axiom suite");
    add_source(verify);
    verify->add_option("--samples", samples, "sampled CM1/CM2 checks");
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--report", report_path, "report file (stdout when absent)");
    verify->add_flag("--pretty", pretty, "human-readable report");

    CLI::App* homology = app.add_subcommand("homology", "invariant factors of H_n");
    add_source(homology);
    CLI::Option* homology_maxdim = homology->get_option("--maxdim");
    homology->add_option("--dims", dims, "dimension or range, e.g. 1..3");

    CLI::App* tensor = app.add_subcommand("tensor", "tensor product of two complexes");
    tensor->add_option("--a", afile, "first factor JSON")->required();
    tensor->add_option("--b", bfile, "second factor JSON")->required();
    tensor->add_option("--maxdim", opts.maxdim, "top dimension")->check(CLI::Range(2, 12));
    tensor->add_option("-o,--out", out_path, "output file (stdout when absent)");

    CLI::App* graphprod = app.add_subcommand("graph-product", "graph tensor product");
    graphprod->add_option("--graph", graph_file, "graph JSON")->required();
    graphprod->add_option("--maxdim", opts.maxdim, "top dimension")->check(CLI::Range(2, 12));
    graphprod->add_option("-o,--out", out_path, "output file");
    graphprod->add_option("--report", report_path, "verification report file");
    graphprod->add_flag("--pretty", pretty, "human-readable report");
    graphprod->add_option("--seed", seed, "seed for sampled checks");

    CLI::App* extensions = app.add_subcommand("extensions", "classify extensions of C_p by K");
    extensions->add_option("--p", p, "order of the cyclic quotient")->required();
    extensions->add_option("--k", kgroup, "kernel group (C<n>, S3, products)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (resolve->parsed()) {
            auto spec = build_complex(opts);
            emit(complex_to_json(*spec), out_path);
            return 0;
        }
        if (boundary->parsed()) {
            Json j = load_json_file(opts.complex_file);
            CrossedComplexSpec spec = complex_from_json(j);
            Sym g = Sym::intern(gen_name);
            int d = spec.dim_of(g);
            if (d == 0) throw Error("unknown generator: " + gen_name);
            if (j.contains("tensor")) {
                const Json& gens = j.at("tensor").at("generators");
                if (gens.contains(gen_name)) {
                    std::cout << "tuple: " << gens.at(gen_name).at("tuple").dump() << "\n";
                    std::cout << "raw: " << gens.at(gen_name).at("raw").get<std::string>()
                              << "\n";
                }
            }
            if (d == 1) {
                std::cout << "*\n";   // reduced complex: dimension 1 has no boundary data
            } else if (d == 2) {
                std::cout << spec.relator(g).str() << "\n";
            } else if (d == 3) {
                std::cout << spec.boundary3(g).str() << "\n";
            } else {
                std::cout << spec.boundary_n(g).str() << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            auto spec = build_complex(opts);
            ValidateOptions vo;
            vo.samples = samples;
            vo.seed = seed;
            return emit_report(validate_axioms(*spec, vo), report_path, pretty);
        }
        if (homology->parsed()) {
            auto [lo, hi] = parse_dims(dims);
            if (lo < 0 || hi < lo) throw Error("bad --dims range");
            if (homology_maxdim->count() == 0 && opts.complex_file.empty())
                opts.maxdim = std::max(2, hi + 1);   // build just deep enough
            auto spec = build_complex(opts);
            if (hi + 1 > spec->maxdim())
                throw Error("homology at dimension " + std::to_string(hi) +
                            " needs maxdim >= " + std::to_string(hi + 1));
            ChainComplex chain = to_chain_complex(*spec, std::min(spec->maxdim(), hi + 1));
            std::string line;
            for (int n = lo; n <= hi; ++n) {
                if (!line.empty()) line += ' ';
                line += invariants_str(homology_over_Z(chain, n));
            }
            std::cout << line << "\n";
            return 0;
        }
        if (tensor->parsed()) {
            auto a = std::make_shared<CrossedComplexSpec>(
                complex_from_json(load_json_file(afile)));
            auto b = std::make_shared<CrossedComplexSpec>(
                complex_from_json(load_json_file(bfile)));
            TensorComplex t = tensor_complex(a, b, opts.maxdim);
            emit(tensor_to_json(t), out_path);
            return 0;
        }
        if (graphprod->parsed()) {
            Json gj = load_json_file(graph_file);
            GraphSpec graph = graph_from_json_file(gj);
            auto atoms = vertex_resolutions(gj, graph, opts.maxdim);
            TensorComplex t = graph_tensor(graph, atoms, opts.maxdim);
            std::string counts;
            for (int n = 1; n <= opts.maxdim; ++n) {
                if (!counts.empty()) counts += '/';
                counts += std::to_string(t.gens(n).size());
            }
            std::cout << "generators " << counts << "\n";
            if (!out_path.empty()) save_json_file(out_path, tensor_to_json(t));
            ValidateOptions vo;
            vo.seed = seed;
            Report rep = validate_axioms(t.spec(), vo);
            if (!report_path.empty()) return emit_report(rep, report_path, pretty);
            return rep.all_pass() ? 0 : 1;
        }
        if (extensions->parsed()) {
            TableDesc k = to_table(parse_group_name(kgroup));
            auto classes = enumerate_extensions(p, k);
            std::cout << "classes " << classes.size() << "\n";
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const TableDesc* t = classes[i].representative->as_table();
                long long maxord = 0;
                for (int a = 0; a < t->order; ++a) {
                    long long o = 1;
                    int cur = a;
                    while (cur != t->identity) {
                        cur = t->at(cur, a);
                        ++o;
                    }
                    maxord = std::max(maxord, o);
                }
                std::cout << "class " << i + 1 << ": order " << t->order
                          << ", exponent-witness " << maxord << ", cocycles "
                          << classes[i].members.size() << "\n";
            }
            return 0;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
