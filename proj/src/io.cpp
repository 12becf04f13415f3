#include "defectus/io.hpp"

namespace defectus {

using json = nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::parse_error, what);
}

long require_natural(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        parse_fail(std::string(what) + " must be a nonnegative integer");
    return j.get<long>();
}

} // namespace

json valuation_to_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

Valuation valuation_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Valuation::infinity();
        parse_fail("valuation string must be \"inf\"");
    }
    return Valuation::of(require_natural(j, "valuation"));
}

json backend_to_json(const Backend& bk) {
    return {{"kind", bk.kind() == BackendKind::int_local ? "int-local" : "poly-local"},
            {"p", bk.prime()}};
}

Backend backend_from_json(const json& j) {
    if (j.is_string()) return Backend::parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind") || !j.contains("p"))
        parse_fail("backend must be {\"kind\": ..., \"p\": ...} or a flag string");
    const std::string kind = j.at("kind").get<std::string>();
    const long p = require_natural(j.at("p"), "backend prime");
    if (kind == "int-local") return Backend::int_local(p);
    if (kind == "poly-local") return Backend::poly_local(p);
    parse_fail("backend kind must be int-local or poly-local");
}

json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols(); ++j) {
            if (M.backend().kind() == BackendKind::int_local)
                row.push_back(M.at(i, j).to_text());
            else
                row.push_back(json::parse(M.at(i, j).to_text()));
        }
        rows.push_back(std::move(row));
    }
    return {{"backend", backend_to_json(M.backend())},
            {"rows", M.rows()},
            {"cols", M.cols()},
            {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) parse_fail("matrix must be a JSON object");
    try {
        Backend bk = backend_from_json(j.at("backend"));
        const int rows = static_cast<int>(require_natural(j.at("rows"), "rows"));
        const int cols = static_cast<int>(require_natural(j.at("cols"), "cols"));
        const json& grid = j.at("entries");
        if (!grid.is_array() || static_cast<int>(grid.size()) != rows)
            parse_fail("entries must hold exactly `rows` rows");
        Matrix M(bk, rows, cols);
        for (int i = 0; i < rows; ++i) {
            const json& row = grid.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                parse_fail("row " + std::to_string(i) + " must hold exactly `cols` entries");
            for (int c = 0; c < cols; ++c) {
                const json& cell = row.at(c);
                if (cell.is_string())
                    M.set(i, c, Scalar::parse(bk, cell.get<std::string>()));
                else if (cell.is_object())
                    M.set(i, c, Scalar::parse(bk, cell.dump()));
                else if (cell.is_number_integer())
                    M.set(i, c, Scalar::from_int(bk, cell.get<long>()));
                else
                    parse_fail("matrix entries must be scalar texts");
            }
        }
        return M;
    } catch (const json::exception& e) {
        parse_fail(std::string("bad matrix JSON: ") + e.what());
    }
}

json spec_to_json(const NormalizedPointSpec& spec) {
    return {{"m", spec.shape.m}, {"n", spec.shape.n}, {"exponents", spec.exponents}};
}

NormalizedPointSpec spec_from_json(const json& j) {
    try {
        const int m = static_cast<int>(require_natural(j.at("m"), "m"));
        const int n = static_cast<int>(require_natural(j.at("n"), "n"));
        const json& exps = j.at("exponents");
        if (!exps.is_array()) parse_fail("exponents must be an array");
        std::vector<long> exponents;
        for (const auto& e : exps) exponents.push_back(require_natural(e, "exponent"));
        return NormalizedPointSpec(ProblemShape(m, n), std::move(exponents));
    } catch (const json::exception& e) {
        parse_fail(std::string("bad point spec JSON: ") + e.what());
    }
}

namespace {

json optional_valuation(const std::optional<Valuation>& v) {
    if (!v) return nullptr;
    return valuation_to_json(*v);
}

std::optional<Valuation> optional_valuation_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return valuation_from_json(j.at(key));
}

} // namespace

json report_to_json(const DefectReport& rep) {
    json checks = json::object();
    for (const auto& [name, ok] : rep.checks) checks[name] = ok;
    return {{"shape", {{"m", rep.shape.m}, {"n", rep.shape.n}, {"t", rep.shape.t}}},
            {"backend", rep.backend.to_string()},
            {"on_variety", rep.on_variety},
            {"rank", rep.rank},
            {"regular_A", rep.regular_A},
            {"regular_C", rep.regular_C},
            {"w", valuation_to_json(rep.w)},
            {"w_alt", optional_valuation(rep.w_alt)},
            {"psi_length", optional_valuation(rep.psi_length)},
            {"phi_A_length", optional_valuation(rep.phi_A_length)},
            {"phi_C_length", optional_valuation(rep.phi_C_length)},
            {"conductor_colength", optional_valuation(rep.conductor_colength)},
            {"delta", rep.delta ? json(*rep.delta) : json(nullptr)},
            {"checks", std::move(checks)}};
}

DefectReport report_from_json(const json& j) {
    try {
        const json& shape = j.at("shape");
        DefectReport rep{ProblemShape(static_cast<int>(require_natural(shape.at("m"), "m")),
                                      static_cast<int>(require_natural(shape.at("n"), "n"))),
                         backend_from_json(j.at("backend"))};
        rep.on_variety = j.at("on_variety").get<bool>();
        rep.rank = static_cast<int>(require_natural(j.at("rank"), "rank"));
        rep.regular_A = j.at("regular_A").get<bool>();
        rep.regular_C = j.at("regular_C").get<bool>();
        rep.w = valuation_from_json(j.at("w"));
        rep.w_alt = optional_valuation_from(j, "w_alt");
        rep.psi_length = optional_valuation_from(j, "psi_length");
        rep.phi_A_length = optional_valuation_from(j, "phi_A_length");
        rep.phi_C_length = optional_valuation_from(j, "phi_C_length");
        rep.conductor_colength = optional_valuation_from(j, "conductor_colength");
        if (j.contains("delta") && !j.at("delta").is_null())
            rep.delta = j.at("delta").get<long>();
        for (const auto& [name, ok] : j.at("checks").items())
            rep.checks[name] = ok.get<bool>();
        return rep;
    } catch (const json::exception& e) {
        parse_fail(std::string("bad report JSON: ") + e.what());
    }
}

json smith_to_json(const SmithDecomposition& snf, const Matrix& source,
                   bool with_transforms) {
    json out = {{"backend", source.backend().to_string()},
                {"rows", source.rows()},
                {"cols", source.cols()},
                {"rank", snf.rank},
                {"exponents", snf.exponents}};
    if (with_transforms) {
        out["left"] = matrix_to_json(snf.left);
        out["right"] = matrix_to_json(snf.right);
        out["diagonal"] = matrix_to_json(snf.diagonal(source.rows(), source.cols()));
    }
    return out;
}

} // namespace defectus
