#pragma once

#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "symmetry.hpp"

namespace nhrmt {

using json = nlohmann::json;

inline json matrix_to_json(const ComplexMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ComplexMatrix matrix_from_json(const json& j, std::size_t n)
{
    if (!j.is_array() || j.size() != n)
        throw ContractViolation("matrix must be an array of " + std::to_string(n) + " rows");
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != n)
            throw ContractViolation("matrix row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
            const json& z = row[c];
            if (z.is_number())
                m(r, c) = z.get<double>();
            else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number())
                m(r, c) = cd(z[0].get<double>(), z[1].get<double>());
            else
                throw ContractViolation("matrix entries must be [re, im] pairs");
        }
    }
    return m;
}

// {"n": N, "symmetries": [{"kind": "C", "form": "identity" | "matrix": [[[re, im], ...], ...], "epsilon": 1}]}
inline EnsembleSpec spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ContractViolation("spec needs an integer field \"n\"");
    const auto n = j["n"].get<long long>();
    if (n <= 0)
        throw ContractViolation("\"n\" must be positive");
    std::vector<SymmetryOp> ops;
    if (j.contains("symmetries")) {
        if (!j["symmetries"].is_array())
            throw ContractViolation("\"symmetries\" must be an array");
        for (const auto& s : j["symmetries"]) {
            if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string() || s["kind"].get<std::string>().size() != 1)
                throw ContractViolation("each symmetry needs a \"kind\" of P, C, Q or K");
            SymmetryOp op{kind_from_char(s["kind"].get<std::string>()[0]), {}, 1};
            if (s.contains("form") == s.contains("matrix"))
                throw ContractViolation("each symmetry needs exactly one of \"form\" or \"matrix\"");
            if (s.contains("form"))
                op.matrix = named_form(s["form"].get<std::string>(), static_cast<std::size_t>(n));
            else
                op.matrix = matrix_from_json(s["matrix"], static_cast<std::size_t>(n));
            if (s.contains("epsilon")) {
                if (!s["epsilon"].is_number_integer())
                    throw ContractViolation("\"epsilon\" must be +1 or -1");
                op.epsilon = s["epsilon"].get<int>();
            }
            ops.push_back(std::move(op));
        }
    }
    return EnsembleSpec(static_cast<std::size_t>(n), std::move(ops));
}

inline json spec_to_json(const EnsembleSpec& spec)
{
    json syms = json::array();
    for (const auto& op : spec.ops()) {
        json s{{"kind", std::string(1, kind_char(op.kind))}, {"matrix", matrix_to_json(op.matrix)}};
        if (op.kind == SymmetryKind::C)
            s["epsilon"] = op.epsilon;
        syms.push_back(std::move(s));
    }
    return {{"n", spec.n()}, {"symmetries", syms}};
}

// Named-form spec of a catalog entry.
inline json entry_spec_json(const CatalogEntry& e, std::size_t half_size)
{
    json syms = json::array();
    for (const auto& op : e.ops) {
        json s{{"kind", std::string(1, op.kind)}, {"form", op.form}};
        if (op.kind == 'C')
            s["epsilon"] = op.epsilon;
        syms.push_back(std::move(s));
    }
    return {{"n", e.unit * half_size}, {"symmetries", syms}};
}

inline json sign_table_json(const SignTable& t)
{
    json j = json::object();
    auto put = [&](const char* k, const std::optional<int>& v) {
        if (v)
            j[k] = *v;
    };
    put("eps_cp", t.eps_cp);
    put("eps_pq", t.eps_pq);
    put("eps_cq", t.eps_cq);
    put("k_p_sign", t.k_p_sign);
    put("k_q_sign", t.k_q_sign);
    put("k_c_sign", t.k_c_sign);
    put("c_sym", t.c_sym);
    put("k_sym", t.k_sym);
    return j;
}

} // namespace nhrmt
