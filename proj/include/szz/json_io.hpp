#ifndef SZZ_JSON_IO_HPP
#define SZZ_JSON_IO_HPP

#include <szz/algebra.hpp>
#include <szz/classify.hpp>
#include <szz/coefficients.hpp>
#include <szz/cycle_space.hpp>
#include <szz/graph.hpp>

#include <json.hpp>

#include <sstream>
#include <string>

namespace szz {

using json = nlohmann::ordered_json;

// ---- Graph ----------------------------------------------------------------

/// {"vertices": ["a", ...], "edges": [["a","b"], ...]}; edge pairs unordered.
inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error("BadGraphJson", "expected {\"vertices\": [...], \"edges\": [...]}");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error("BadGraphJson", "each edge must be a two-element array");
        edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return Graph(std::move(vertices), std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("ParseError", "input is not valid JSON");
    return graph_from_json(j);
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
    j["edges"] = edges;
    return j;
}

inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
    for (const auto& [a, b] : g.edges())
        os << "  \"" << g.name(a) << "\" -- \"" << g.name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

inline std::string double_quiver_to_dot(const DoubleQuiver& dq) {
    std::ostringstream os;
    os << "digraph {\n";
    for (const auto& v : dq.base().vertices()) os << "  \"" << v << "\";\n";
    for (const auto& [a, b] : dq.directed_edges())
        os << "  \"" << dq.base().name(a) << "\" -> \"" << dq.base().name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

// ---- Cycle vectors ---------------------------------------------------------

inline std::string edge_key(const Graph& g, int edge_index) {
    const auto& [a, b] = g.edges()[edge_index];
    return g.name(a) + "-" + g.name(b);
}

/// {"coeffs": {"a-b": 1, ...}} with edge keys "min-max"; zero entries omitted.
inline json cycle_vector_to_json(const CycleVector& z) {
    json coeffs = json::object();
    for (std::size_t e = 0; e < z.graph().edge_count(); ++e)
        if (z[static_cast<int>(e)] != 0)
            coeffs[edge_key(z.graph(), static_cast<int>(e))] =
                z[static_cast<int>(e)].get_str();
    return json{{"coeffs", coeffs}};
}

inline CycleVector cycle_vector_from_json(const Graph& g, const json& j) {
    CycleVector z(g);
    for (const auto& [key, val] : j.at("coeffs").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos)
            throw Error("BadVectorJson", "edge key must be 'min-max'");
        int a = g.require(key.substr(0, dash));
        int b = g.require(key.substr(dash + 1));
        int e = g.edge_index(a, b);
        if (e < 0) throw Error("UnknownEdge", "no edge '" + key + "'");
        z[e] = val.is_string() ? Int(val.get<std::string>()) : Int(val.get<long>());
    }
    return z;
}

inline json basis_to_json(const FundamentalCycleBasis& basis) {
    json cycles = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        json c;
        c["edge"] = edge_key(basis.graph(), basis.distinguished_edge(i));
        c["walk"] = basis.cycles()[i].names();
        c["vector"] = cycle_vector_to_json(basis.vectors()[i]);
        cycles.push_back(c);
    }
    return json{{"rank", basis.size()}, {"cycles", cycles}};
}

// ---- Coefficients ----------------------------------------------------------

/// {"values": [{"at":"a","from":"b","to":"d","value":"2"}, ...]}.
inline SkewCoefficients coefficients_from_json(const Graph& g, const json& j) {
    std::vector<CoefficientTriple> raw;
    for (const auto& t : j.at("values"))
        raw.push_back({t.at("at").get<std::string>(), t.at("from").get<std::string>(),
                       t.at("to").get<std::string>(),
                       t.at("value").is_string() ? parse_rational(t.at("value").get<std::string>())
                                                 : Rational(t.at("value").get<long>())});
    return SkewCoefficients::validate(g, raw);
}

inline json coefficients_to_json(const SkewCoefficients& v) {
    json values = json::array();
    for (const auto& t : v.triples())
        values.push_back(
            {{"at", t.at}, {"from", t.from}, {"to", t.to}, {"value", to_string(t.value)}});
    return json{{"values", values}};
}

inline json class_to_json(const CohomologyClass& f) {
    json out = json::array();
    for (std::size_t i = 0; i < f.basis().size(); ++i)
        out.push_back({{"basis_edge", edge_key(f.basis().graph(), f.basis().distinguished_edge(i))},
                       {"value", to_string(f.values()[i])}});
    return out;
}

inline CohomologyClass class_from_json(const FundamentalCycleBasis& basis, const json& j) {
    std::vector<Rational> values(basis.size(), Rational(0));
    if (j.size() != basis.size())
        throw Error("BadClassJson", "value count does not match basis rank");
    for (const auto& entry : j) {
        std::string key = entry.at("basis_edge").get<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (edge_key(basis.graph(), basis.distinguished_edge(i)) == key) {
                values[i] = entry.at("value").is_string()
                                ? parse_rational(entry.at("value").get<std::string>())
                                : Rational(entry.at("value").get<long>());
                found = true;
            }
        if (!found) throw Error("BadClassJson", "'" + key + "' is not a basis edge");
    }
    return CohomologyClass(basis, std::move(values));
}

// ---- Algebra ---------------------------------------------------------------

inline json element_to_json(const AlgebraElement& x) {
    json coords = json::object();
    for (int i = 0; i < x.algebra().dim(); ++i)
        if (x[i] != 0) coords[x.algebra().basis_labels()[i]] = to_string(x[i]);
    return json{{"coords", coords}};
}

inline AlgebraElement element_from_json(const ZigzagAlgebra& alg, const json& j) {
    std::vector<Rational> coords(alg.dim(), Rational(0));
    for (const auto& [label, val] : j.at("coords").items())
        coords[alg.basis_index(label)] =
            val.is_string() ? parse_rational(val.get<std::string>()) : Rational(val.get<long>());
    return AlgebraElement(alg, std::move(coords));
}

/// CSV of basis-label triples with rational values; zero products omitted.
inline std::string table_to_csv(const ZigzagAlgebra& alg) {
    std::ostringstream os;
    os << "left,right,coeff,result\n";
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            const auto& t = alg.table(i, j);
            if (t.index < 0 || t.coeff == 0) continue;
            os << alg.basis_labels()[i] << "," << alg.basis_labels()[j] << ","
               << to_string(t.coeff) << "," << alg.basis_labels()[t.index] << "\n";
        }
    return os.str();
}

// ---- Classification --------------------------------------------------------

inline json automorphism_to_json(const GraphAutomorphism& sigma) {
    json out = json::object();
    const Graph& g = sigma.graph();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out[g.name(static_cast<int>(v))] = g.name(sigma(static_cast<int>(v)));
    return out;
}

inline json edge_scaling_to_json(const Graph& g, const EdgeScaling& s) {
    json out = json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        out[edge_key(g, static_cast<int>(e))] = {{"forward", to_string(s.forward[e])},
                                                 {"backward", to_string(s.backward[e])}};
    return out;
}

inline json certificate_to_json(const Graph& g, const IsoCertificate& cert) {
    json out;
    switch (cert.verdict) {
        case IsoVerdict::equivalent: out["verdict"] = "equivalent"; break;
        case IsoVerdict::isomorphic_via_automorphism:
            out["verdict"] = "isomorphic-via-automorphism";
            break;
        case IsoVerdict::not_isomorphic: out["verdict"] = "not-isomorphic"; break;
    }
    if (cert.automorphism) out["automorphism"] = automorphism_to_json(*cert.automorphism);
    if (cert.scaling) out["edge_scaling"] = edge_scaling_to_json(g, *cert.scaling);
    if (cert.obstruction)
        out["obstruction"] = {{"cycle", cert.obstruction->cycle.names()},
                              {"lhs", to_string(cert.obstruction->lhs)},
                              {"rhs", to_string(cert.obstruction->rhs)}};
    return out;
}

} // namespace szz

#endif
