// szz: command-line front end for the skew-zigzag algebra toolkit.

#include <CLI11.hpp>
#include <szz/classify.hpp>
#include <szz/json_io.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace szz;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_json(const std::string& path) {
    json j = json::parse(slurp(path), nullptr, false);
    if (j.is_discarded()) throw Error("ParseError", "'" + path + "' is not valid JSON");
    return j;
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

/// Accepts a file path, the literal "ones", or "orientation:<file>" with a
/// JSON body {"oriented_edges": [["a","b"], ...]} listing each edge in its
/// chosen direction.
SkewCoefficients load_coefficients(const Graph& g, const std::string& spec) {
    if (spec == "ones") return SkewCoefficients::ones(g);
    const std::string prefix = "orientation:";
    if (spec.rfind(prefix, 0) == 0) {
        json j = load_json(spec.substr(prefix.size()));
        unsigned long bits = 0;
        for (const auto& e : j.at("oriented_edges")) {
            int a = g.require(e.at(0).get<std::string>());
            int b = g.require(e.at(1).get<std::string>());
            int idx = g.edge_index(a, b);
            if (idx < 0) throw Error("UnknownEdge", "oriented edge is not an edge of the graph");
            // bit set = the canonical (min|max) direction is reversed
            if (a > b) bits |= 1ul << idx;
        }
        return orientation_to_coefficients(OrientationCoefficients::from_orientation(g, bits));
    }
    return coefficients_from_json(g, load_json(spec));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Graph worked_example_graph() {
    return Graph({"a", "b", "c", "d"},
                 {{"a", "b"}, {"a", "d"}, {"d", "c"}, {"b", "c"}, {"b", "d"}});
}

SkewCoefficients worked_example_family(const Graph& g) {
    using T = CoefficientTriple;
    return SkewCoefficients::validate(
        g, {T{"a", "b", "d", Rational(2)}, T{"c", "b", "d", Rational(2)},
            T{"d", "a", "c", Rational(5)}, T{"b", "a", "c", Rational(5)},
            T{"d", "b", "c", Rational(7)}, T{"b", "d", "c", Rational(7)}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew-zigzag algebra toolkit"};
    app.require_subcommand(1);

    std::string graph_path, left_spec, right_spec, coeffs_spec, element_path, other_path,
        class_path;

    auto* graph_info = app.add_subcommand("graph-info", "connectivity, bipartiteness, degrees");
    graph_info->add_option("--graph", graph_path)->required();

    auto* cycles = app.add_subcommand("cycles", "fundamental cycle basis");
    cycles->add_option("--graph", graph_path)->required();

    auto* coeffs_validate = app.add_subcommand("coeffs-validate", "validate a coefficient family");
    coeffs_validate->add_option("--graph", graph_path)->required();
    coeffs_validate->add_option("--coeffs", coeffs_spec)->required();

    auto* coeffs_class = app.add_subcommand("coeffs-class", "cohomology class of a family");
    coeffs_class->add_option("--graph", graph_path)->required();
    coeffs_class->add_option("--coeffs", coeffs_spec)->required();

    auto* coeffs_from_class =
        app.add_subcommand("coeffs-from-class", "build a family realizing a class");
    coeffs_from_class->add_option("--graph", graph_path)->required();
    coeffs_from_class->add_option("--class", class_path)->required();

    auto* algebra_build = app.add_subcommand("algebra-build", "dimension, basis, table export");
    algebra_build->add_option("--graph", graph_path)->required();
    algebra_build->add_option("--coeffs", coeffs_spec);
    bool with_table = false;
    algebra_build->add_flag("--table", with_table, "include the multiplication table as CSV");

    auto* algebra_mul = app.add_subcommand("algebra-mul", "multiply two elements");
    algebra_mul->add_option("--graph", graph_path)->required();
    algebra_mul->add_option("--coeffs", coeffs_spec);
    algebra_mul->add_option("--left", element_path)->required();
    algebra_mul->add_option("--right", other_path)->required();

    auto* algebra_gram = app.add_subcommand("algebra-gram", "Gram matrix and Frobenius report");
    algebra_gram->add_option("--graph", graph_path)->required();
    algebra_gram->add_option("--coeffs", coeffs_spec);

    auto* classify_equiv =
        app.add_subcommand("classify-equiv", "vertex-fixing equivalence of two families");
    classify_equiv->add_option("--graph", graph_path)->required();
    classify_equiv->add_option("--left", left_spec)->required();
    classify_equiv->add_option("--right", right_spec)->required();

    auto* classify_iso = app.add_subcommand("classify-iso", "graded isomorphism of two families");
    classify_iso->add_option("--graph", graph_path)->required();
    classify_iso->add_option("--left", left_spec)->required();
    classify_iso->add_option("--right", right_spec)->required();

    auto* orientation_induce =
        app.add_subcommand("orientation-induce", "family induced by an orientation");
    orientation_induce->add_option("--graph", graph_path)->required();
    orientation_induce->add_option("--orientation", other_path)->required();

    auto* obstruction_check =
        app.add_subcommand("obstruction-check", "zigzag vs orientation-induced families");
    obstruction_check->add_option("--graph", graph_path)->required();

    auto* paper_example =
        app.add_subcommand("paper-example", "run the built-in worked example end to end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (graph_info->parsed()) {
            Graph g = load_graph(graph_path);
            json degrees = json::object();
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                degrees[g.name(static_cast<int>(v))] = g.degree(static_cast<int>(v));
            BipartiteReport bip = is_bipartite(g);
            json out{{"vertices", g.vertex_count()},
                     {"edges", g.edge_count()},
                     {"connected", is_connected(g)},
                     {"bipartite", bip.bipartite},
                     {"degrees", degrees},
                     {"automorphisms", enumerate_automorphisms(g).size()}};
            if (bip.odd_cycle) out["odd_cycle"] = bip.odd_cycle->names();
            emit(out);
        } else if (cycles->parsed()) {
            Graph g = load_graph(graph_path);
            emit(basis_to_json(FundamentalCycleBasis(g)));
        } else if (coeffs_validate->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = load_coefficients(g, coeffs_spec);
            emit(json{{"valid", true}, {"coefficients", coefficients_to_json(v)}});
        } else if (coeffs_class->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = load_coefficients(g, coeffs_spec);
            FundamentalCycleBasis basis(g);
            emit(class_to_json(class_of(v, basis)));
        } else if (coeffs_from_class->parsed()) {
            Graph g = load_graph(graph_path);
            FundamentalCycleBasis basis(g);
            CohomologyClass f = class_from_json(basis, load_json(class_path));
            emit(coefficients_to_json(construct_from_class(f)));
        } else if (algebra_build->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = coeffs_spec.empty() ? SkewCoefficients::ones(g)
                                                     : load_coefficients(g, coeffs_spec);
            ZigzagAlgebra alg(g, v);
            json out{{"dim", alg.dim()},
                     {"basis", alg.basis_labels()},
                     {"degrees", alg.degrees()}};
            if (with_table) out["table_csv"] = table_to_csv(alg);
            emit(out);
        } else if (algebra_mul->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = coeffs_spec.empty() ? SkewCoefficients::ones(g)
                                                     : load_coefficients(g, coeffs_spec);
            ZigzagAlgebra alg(g, v);
            AlgebraElement x = element_from_json(alg, load_json(element_path));
            AlgebraElement y = element_from_json(alg, load_json(other_path));
            emit(element_to_json(multiply(x, y)));
        } else if (algebra_gram->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = coeffs_spec.empty() ? SkewCoefficients::ones(g)
                                                     : load_coefficients(g, coeffs_spec);
            ZigzagAlgebra alg(g, v);
            FrobeniusReport rep = check_frobenius(alg);
            json matrix = json::array();
            for (const auto& row : gram(alg)) {
                json r = json::array();
                for (const auto& x : row) r.push_back(to_string(x));
                matrix.push_back(r);
            }
            json out{{"dim", rep.dim},
                     {"gram_rank", rep.gram_rank},
                     {"nondegenerate", rep.nondegenerate},
                     {"symmetric", rep.symmetric},
                     {"trace_extended_beyond_three_vertices",
                      rep.trace_extended_beyond_three_vertices},
                     {"gram", matrix}};
            if (rep.asymmetric_pair)
                out["asymmetric_pair"] = {alg.basis_labels()[rep.asymmetric_pair->first],
                                          alg.basis_labels()[rep.asymmetric_pair->second]};
            emit(out);
        } else if (classify_equiv->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = load_coefficients(g, left_spec);
            SkewCoefficients u = load_coefficients(g, right_spec);
            EquivalenceResult eq = decide_equivalent(v, u);
            json out{{"equivalent", eq.equivalent}};
            if (eq.equivalent) {
                out["edge_scaling"] = edge_scaling_to_json(g, construct_vertex_fixing_iso(v, u));
            } else if (eq.obstruction) {
                out["obstruction"] = {{"cycle", eq.obstruction->cycle.names()},
                                      {"lhs", to_string(eq.obstruction->lhs)},
                                      {"rhs", to_string(eq.obstruction->rhs)}};
            }
            emit(out);
        } else if (classify_iso->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = load_coefficients(g, left_spec);
            SkewCoefficients u = load_coefficients(g, right_spec);
            emit(certificate_to_json(g, decide_isomorphic(v, u)));
        } else if (orientation_induce->parsed()) {
            Graph g = load_graph(graph_path);
            SkewCoefficients v = load_coefficients(g, "orientation:" + other_path);
            emit(coefficients_to_json(v));
        } else if (obstruction_check->parsed()) {
            Graph g = load_graph(graph_path);
            ObstructionReport rep = check_bipartite_obstruction(g);
            emit(json{{"bipartite", rep.bipartite},
                      {"orientations_checked", rep.orientations_checked},
                      {"exhaustive", rep.exhaustive},
                      {"isomorphic_count", rep.isomorphic_count},
                      {"consistent", rep.consistent}});
        } else if (paper_example->parsed()) {
            Graph g = worked_example_graph();
            SkewCoefficients v = worked_example_family(g);
            Walk p1 = Walk::of(g, {"d", "b", "c", "d"});
            Walk p2 = Walk::of(g, {"d", "a", "b", "d"});
            Walk p12 = p1.concat(p2);
            emit(json{{"v_P1_path", to_string(path_product(v, p1))},
                      {"v_P2_path", to_string(path_product(v, p2))},
                      {"v_P1P2_path", to_string(path_product(v, p12))},
                      {"v_P1_cycle", to_string(cycle_product(v, p1))},
                      {"v_P2_cycle", to_string(cycle_product(v, p2))},
                      {"v_P1P2_cycle", to_string(cycle_product(v, p12))}});
        }
    } catch (const Error& e) {
        emit(json{{"error", e.code()}, {"detail", e.detail()}});
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"error", "Internal"}, {"detail", e.what()}});
        return 1;
    }
    return 0;
}
