#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "tropeig/combinat.hpp"
#include "tropeig/cones.hpp"
#include "tropeig/errors.hpp"
#include "tropeig/matrix.hpp"
#include "tropeig/rational.hpp"
#include "tropeig/skewrank.hpp"
#include "tropeig/spectral.hpp"

// JSON command layer. Everything rational is carried as a canonical "p/q" or
// integer string so documents round-trip bit-exactly; plain JSON integers are
// accepted on input, floats are rejected. Indices in documents are 1-based.

namespace tropeig::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

struct MatrixDocument {
    TropMatrix matrix;
    bool skew = false;
};

inline Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) {
        try {
            return rational_from_string(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer or a rational string, got: " + value.dump());
}

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline json vector_to_json(const TropVector& x) {
    json out = json::array();
    for (int i = 0; i < x.n(); ++i) out.push_back(rational_to_json(x[i]));
    return out;
}

inline json matrix_to_json(const TropMatrix& a) {
    json out = json::array();
    for (int i = 0; i < a.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.n(); ++j) row.push_back(rational_to_json(a(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline json phi_to_json(const ConnectedFunction& phi) {
    json out = json::array();
    for (int i = 0; i < phi.n(); ++i) out.push_back(phi(i) + 1);
    return out;
}

inline MatrixDocument parse_matrix_document(const json& doc) {
    if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
    if (!doc.contains("matrix") || !doc["matrix"].is_array())
        throw ParseError("matrix document needs a \"matrix\" array");
    const json& rows = doc["matrix"];
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw ParseError("matrix must have at least one row");
    if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<int>() != n))
        throw ParseError("\"n\" does not match the number of matrix rows");
    TropMatrix a(n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw ParseError("matrix is not square");
        for (int j = 0; j < n; ++j) a(i, j) = rational_from_json(rows[i][j]);
    }
    MatrixDocument out{std::move(a), false};
    if (doc.contains("skew")) {
        if (!doc["skew"].is_boolean()) throw ParseError("\"skew\" must be a boolean");
        out.skew = doc["skew"].get<bool>();
    }
    if (out.skew) validate_skew(out.matrix);  // NotSkewError on violation
    return out;
}

/// Parses a 1-based image tuple like [2,3,1] into a connected function.
inline ConnectedFunction phi_from_json(const json& values) {
    if (!values.is_array() || values.empty()) throw ParseError("phi must be a non-empty array");
    const int n = static_cast<int>(values.size());
    std::vector<int> image;
    image.reserve(values.size());
    for (const json& v : values) {
        if (!v.is_number_integer()) throw ParseError("phi entries must be integers");
        const int w = v.get<int>();
        if (w < 1 || w > n) throw ParseError("phi entries must lie in 1.." + std::to_string(n));
        image.push_back(w - 1);
    }
    if (!is_connected_function(n, image)) throw ParseError("phi is not a connected function");
    return ConnectedFunction(n, std::move(image));
}

inline json result_header(const std::string& command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

/// Eigenvalue always; the eigenvector when the matrix is generic, otherwise
/// the eigenpolytope generators and vertices under a "degenerate" marker.
inline json cmd_eig(const MatrixDocument& input) {
    const TropMatrix& a = input.matrix;
    json out = result_header("eig");
    out["n"] = a.n();
    ClassifyResult cls = classify(a);
    out["lambda"] = rational_to_json(cls.lambda);
    out["degenerate"] = !cls.generic();
    if (cls.generic()) {
        out["eigenvector"] = vector_to_json(eigenvector(a).x);
    } else {
        TropPolytope polytope = eigenspace(a);
        json gens = json::array();
        for (const auto& g : polytope.generators) gens.push_back(vector_to_json(g));
        json verts = json::array();
        for (const auto& v : polytope.vertices) verts.push_back(vector_to_json(v));
        out["generators"] = std::move(gens);
        out["vertices"] = std::move(verts);
    }
    return out;
}

inline json cmd_classify(const MatrixDocument& input) {
    const TropMatrix& a = input.matrix;
    ClassifyResult cls = input.skew ? classify_skew(validate_skew(a)) : classify(a);
    json out = result_header("classify");
    out["n"] = a.n();
    out["lambda"] = rational_to_json(cls.lambda);
    out["generic"] = cls.generic();
    if (cls.generic()) {
        out["phi"] = phi_to_json(*cls.phi);
        json cyc = json::array();
        for (int v : cycle_of(*cls.phi)) cyc.push_back(v + 1);
        out["cycle"] = std::move(cyc);
        out["kite"] = is_kite(*cls.phi);
        json anchor = json::object();
        for (const auto& [v, star] : cls.anchor) anchor[std::to_string(v + 1)] = star + 1;
        out["anchor"] = std::move(anchor);
    } else {
        json tied = json::array();
        for (int r : cls.degeneracy.tied_rows) tied.push_back(r + 1);
        out["degenerate"] = {{"critical_connected", cls.degeneracy.critical_connected},
                             {"tied_rows", std::move(tied)}};
    }
    return out;
}

/// The facet inequalities of the eigenpair cone, each rendered as
/// a_{le} <= sum of rhs_coeffs (a sparse "i,j" -> rational map).
inline json cmd_cone(const ConnectedFunction& phi) {
    json out = result_header("cone");
    out["n"] = phi.n();
    out["phi"] = phi_to_json(phi);
    json ineqs = json::array();
    for (const auto& ineq : cone_inequalities(phi).inequalities) {
        json rhs = json::object();
        for (int i = 0; i < phi.n(); ++i)
            for (int j = 0; j < phi.n(); ++j) {
                if (std::pair<int, int>{i, j} == ineq.non_edge) continue;
                const Rational& c = ineq.form.coeff(i, j);
                if (c != 0)
                    rhs[std::to_string(i + 1) + "," + std::to_string(j + 1)] =
                        rational_to_json(-c);
            }
        ineqs.push_back(json{{"le", {ineq.non_edge.first + 1, ineq.non_edge.second + 1}},
                             {"rhs_coeffs", std::move(rhs)}});
    }
    out["inequalities"] = std::move(ineqs);
    return out;
}

inline json cmd_enum(int n, const std::string& kind, bool count_only) {
    if (kind != "connected" && kind != "kites")
        throw ParseError("kind must be \"connected\" or \"kites\"");
    json out = result_header("enum");
    out["n"] = n;
    out["kind"] = kind;
    if (kind == "connected") {
        out["count"] = count_connected(n).str();
        if (!count_only) {
            json fns = json::array();
            for (const auto& phi : enumerate_connected(n)) fns.push_back(phi_to_json(phi));
            out["functions"] = std::move(fns);
        }
    } else {
        out["count"] = count_kites(n).str();
        if (!count_only) {
            json fns = json::array();
            for (const auto& phi : enumerate_connected(n))
                if (is_kite(phi)) fns.push_back(phi_to_json(phi));
            out["functions"] = std::move(fns);
        }
    }
    return out;
}

inline json cmd_fvector(int n) {
    json out = result_header("fvector");
    out["n"] = n;
    out["fvector"] = sigma_fvector(n);
    return out;
}

inline json cmd_rank(const MatrixDocument& input) {
    SkewMatrix skew = validate_skew(input.matrix);
    RankingResult result = rank(skew);
    json out = result_header("rank");
    out["n"] = input.matrix.n();
    out["lambda"] = rational_to_json(eigenvalue(input.matrix));
    out["eigenvector"] = vector_to_json(result.eigenvector);
    json order = json::array();
    for (int v : result.order) order.push_back(v + 1);
    out["order"] = std::move(order);
    json ties = json::array();
    for (const auto& group : result.ties) {
        json g = json::array();
        for (int v : group) g.push_back(v + 1);
        ties.push_back(std::move(g));
    }
    out["ties"] = std::move(ties);
    return out;
}

inline json cmd_witness() {
    FanFailureWitness w = fan_failure_witness();
    json out = result_header("witness");
    out["matrix"] = matrix_to_json(w.matrix);
    json cones = json::array();
    for (const auto& phi : w.cones) cones.push_back(phi_to_json(phi));
    out["cones"] = std::move(cones);
    json verts = json::array();
    for (const auto& v : w.eigenpolytope.vertices) verts.push_back(vector_to_json(v));
    out["vertices"] = std::move(verts);
    json perts = json::array();
    for (const auto& p : w.perturbations) {
        json samples = json::array();
        for (const auto& s : p.samples)
            samples.push_back(json{{"epsilon", rational_to_json(s.epsilon)},
                                   {"lambda", rational_to_json(s.lambda)},
                                   {"eigenvector", vector_to_json(s.eigenvector)}});
        perts.push_back(json{{"entry", {p.entry.first + 1, p.entry.second + 1}},
                             {"phi", phi_to_json(p.phi)},
                             {"samples", std::move(samples)},
                             {"limit", vector_to_json(p.limit)},
                             {"vertex_index", p.vertex_index}});
    }
    out["perturbations"] = std::move(perts);
    return out;
}

inline json cmd_realize(const ConnectedFunction& phi, bool skew) {
    json out = result_header("realize");
    out["n"] = phi.n();
    out["phi"] = phi_to_json(phi);
    out["skew"] = skew;
    out["matrix"] = matrix_to_json(skew ? realize_kite(phi).matrix() : realize(phi));
    return out;
}

}  // namespace tropeig::cli
