#include "lgp/json_io.hpp"

#include <bit>

namespace lgp {

using nlohmann::json;

static void require(bool condition, const std::string& what) {
    if (!condition) throw DomainError("malformed JSON payload: " + what);
}

ExponentVector vector_from_json(const json& j) {
    require(j.is_array(), "expected an integer array");
    ExponentVector v;
    v.reserve(j.size());
    for (const auto& e : j) {
        require(e.is_number_integer(), "expected an integer entry");
        v.push_back(e.get<std::int64_t>());
    }
    return v;
}

json to_json(const PeriodSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(rat_to_string(c));
    return json{{"maxDegree", s.max_degree}, {"coeffs", coeffs}};
}

PeriodSeries series_from_json(const json& j) {
    require(j.is_object() && j.contains("maxDegree") && j.contains("coeffs"), "series object");
    PeriodSeries s;
    s.max_degree = j.at("maxDegree").get<int>();
    require(s.max_degree >= 0, "maxDegree must be non-negative");
    const auto& coeffs = j.at("coeffs");
    require(coeffs.is_array() && coeffs.size() == static_cast<std::size_t>(s.max_degree) + 1,
            "coeffs length must be maxDegree + 1");
    for (const auto& c : coeffs) {
        require(c.is_string(), "coefficients are strings");
        s.coeffs.push_back(rat_from_string(c.get<std::string>()));
    }
    return s;
}

json to_json(const LoopClass& x) {
    json out = json::array();
    for (const auto& [key, coeff] : x.terms()) {
        json subset = json::array();
        auto mask = key.first;
        while (mask) {
            int bit = std::countr_zero(mask);
            mask &= mask - 1;
            subset.push_back(bit + 1);
        }
        out.push_back(json{{"subset", subset}, {"exponent", key.second}, {"coeff", coeff.get_str()}});
    }
    return out;
}

LoopClass loop_class_from_json(const json& j, int fallback_n) {
    require(j.is_array(), "loop class is a term list");
    int n = fallback_n;
    if (!j.empty()) {
        const auto& first = j.front();
        require(first.is_object() && first.contains("exponent"), "loop class term");
        n = static_cast<int>(first.at("exponent").size());
    }
    require(n >= 1, "cannot infer the rank of an empty loop class; pass it explicitly");
    LoopClass x(n);
    for (const auto& term : j) {
        require(term.is_object() && term.contains("subset") && term.contains("exponent") &&
                    term.contains("coeff"),
                "loop class term");
        ExponentVector exponent = vector_from_json(term.at("exponent"));
        require(static_cast<int>(exponent.size()) == n, "inconsistent exponent lengths");
        ExtElement::Mask mask = 0;
        int previous = 0;
        for (const auto& e : term.at("subset")) {
            require(e.is_number_integer(), "subset entries are integers");
            int i = e.get<int>();
            require(i >= 1 && i <= n, "subset index out of range");
            require(i > previous, "subset must be strictly increasing");
            previous = i;
            mask |= ExtElement::Mask(1) << (i - 1);
        }
        require(term.at("coeff").is_string(), "coefficients are strings");
        x.add_term(mask, exponent, Int(term.at("coeff").get<std::string>()));
    }
    return x;
}

json to_json(const DescendantSymbol& s) {
    return json{{"n", s.n()}, {"vectors", s.vectors()}};
}

DescendantSymbol symbol_from_json(const json& j) {
    require(j.is_object() && j.contains("n") && j.contains("vectors"), "symbol object");
    int n = j.at("n").get<int>();
    std::vector<ExponentVector> vectors;
    for (const auto& v : j.at("vectors")) vectors.push_back(vector_from_json(v));
    return DescendantSymbol(n, std::move(vectors));
}

json matrix_to_json(const IntMatrix& m) {
    return json(m);
}

IntMatrix matrix_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "matrix is a non-empty array of rows");
    IntMatrix m;
    for (const auto& row : j) {
        ExponentVector r = vector_from_json(row);
        m.emplace_back(r.begin(), r.end());
    }
    return m;
}

static const char* kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::Stabilize: return "stabilize";
        case CertKind::Relation: return "relation";
        case CertKind::GLChange: return "gl";
        case CertKind::Reorder: return "reorder";
        case CertKind::Leaf: return "leaf";
    }
    return "?";
}

static CertKind kind_from_name(const std::string& name) {
    if (name == "stabilize") return CertKind::Stabilize;
    if (name == "relation") return CertKind::Relation;
    if (name == "gl") return CertKind::GLChange;
    if (name == "reorder") return CertKind::Reorder;
    if (name == "leaf") return CertKind::Leaf;
    throw DomainError("unknown certificate node kind: '" + name + "'");
}

static json node_to_json(const CertNode& node, const Rat& weight) {
    json data;
    data["symbol"] = json{{"n", node.dim}, {"vectors", node.symbol}};
    switch (node.kind) {
        case CertKind::Stabilize:
            data["rows"] = node.stab_rows;
            break;
        case CertKind::Relation: {
            data["pivot"] = node.pivot;
            data["u"] = node.u;
            json omega = json::array();
            for (const auto& entry : node.omega) {
                omega.push_back(json::array({entry.i, entry.j, entry.coeff.get_str()}));
            }
            data["omega"] = omega;
            break;
        }
        case CertKind::GLChange:
            data["matrix"] = node.gl;
            break;
        case CertKind::Reorder:
            data["permutation"] = node.permutation;
            break;
        case CertKind::Leaf:
            data["groups"] = node.leaf_groups;
            break;
    }
    json children = json::array();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        children.push_back(node_to_json(node.children[i], node.child_weights[i]));
    }
    return json{{"kind", kind_name(node.kind)},
                {"weight", rat_to_string(weight)},
                {"data", data},
                {"children", children}};
}

static CertNode node_from_json(const json& j, Rat* weight_out) {
    require(j.is_object() && j.contains("kind") && j.contains("data") && j.contains("weight") &&
                j.contains("children"),
            "certificate node");
    CertNode node;
    node.kind = kind_from_name(j.at("kind").get<std::string>());
    if (weight_out) *weight_out = rat_from_string(j.at("weight").get<std::string>());

    const auto& data = j.at("data");
    require(data.is_object() && data.contains("symbol"), "node data");
    const auto& symbol = data.at("symbol");
    require(symbol.is_object() && symbol.contains("n") && symbol.contains("vectors"), "node symbol");
    node.dim = symbol.at("n").get<int>();
    for (const auto& v : symbol.at("vectors")) node.symbol.push_back(vector_from_json(v));

    switch (node.kind) {
        case CertKind::Stabilize:
            node.stab_rows = data.at("rows").get<int>();
            break;
        case CertKind::Relation: {
            node.pivot = data.at("pivot").get<int>();
            node.u = vector_from_json(data.at("u"));
            for (const auto& entry : data.at("omega")) {
                require(entry.is_array() && entry.size() == 3, "omega entry");
                OmegaEntry e;
                e.i = entry[0].get<int>();
                e.j = entry[1].get<int>();
                require(entry[2].is_string(), "omega coefficient is a string");
                e.coeff = Int(entry[2].get<std::string>());
                node.omega.push_back(std::move(e));
            }
            break;
        }
        case CertKind::GLChange:
            node.gl = matrix_from_json(data.at("matrix"));
            break;
        case CertKind::Reorder:
            for (const auto& p : data.at("permutation")) node.permutation.push_back(p.get<int>());
            break;
        case CertKind::Leaf:
            for (const auto& group : data.at("groups")) {
                std::vector<int> g;
                for (const auto& c : group) g.push_back(c.get<int>());
                node.leaf_groups.push_back(std::move(g));
            }
            break;
    }
    for (const auto& child : j.at("children")) {
        Rat w;
        node.children.push_back(node_from_json(child, &w));
        node.child_weights.push_back(w);
    }
    return node;
}

json to_json(const DerivationCertificate& cert) {
    return node_to_json(cert.root, Rat(1));
}

DerivationCertificate certificate_from_json(const json& j) {
    return {node_from_json(j, nullptr)};
}

}  // namespace lgp
