#include "z2lab/serial.hpp"

#include <fstream>

namespace z2lab {

json to_json(const CMat& m) {
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (int j = 0; j < m.cols; ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMat cmat_from_json(const json& j) {
    try {
        const int rows = j.at("rows").get<int>();
        const int cols = j.at("cols").get<int>();
        if (rows < 0 || cols < 0) throw InputError("matrix JSON: negative dimensions");
        const auto& re = j.at("re");
        const auto& im = j.at("im");
        if (static_cast<int>(re.size()) != rows || static_cast<int>(im.size()) != rows)
            throw InputError("matrix JSON: row count mismatch");
        CMat m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const auto& rrow = re.at(static_cast<std::size_t>(i));
            const auto& irow = im.at(static_cast<std::size_t>(i));
            if (static_cast<int>(rrow.size()) != cols || static_cast<int>(irow.size()) != cols)
                throw InputError("matrix JSON: column count mismatch");
            for (int jj = 0; jj < cols; ++jj)
                m(i, jj) = cd{rrow.at(static_cast<std::size_t>(jj)).get<double>(),
                              irow.at(static_cast<std::size_t>(jj)).get<double>()};
        }
        if (!m.finite()) throw InputError("matrix JSON: non-finite entries");
        return m;
    } catch (const json::exception& e) {
        throw InputError(std::string("matrix JSON: ") + e.what());
    }
}

json to_json(const MatrixTuple& t) {
    json mats = json::array();
    for (const CMat& m : t.mats) mats.push_back(to_json(m));
    json out{{"n", t.dim()}, {"d", t.count()}, {"mats", std::move(mats)}};
    if (t.frequencies) out["frequencies"] = *t.frequencies;
    return out;
}

MatrixTuple tuple_from_json(const json& j) {
    try {
        MatrixTuple t;
        for (const auto& mj : j.at("mats")) t.mats.push_back(cmat_from_json(mj));
        if (j.contains("frequencies"))
            t.frequencies = j.at("frequencies").get<std::vector<std::int64_t>>();
        if (j.contains("d") && j.at("d").get<int>() != t.count())
            throw InputError("tuple JSON: d does not match mats length");
        if (j.contains("n") && t.count() > 0 && j.at("n").get<int>() != t.dim())
            throw InputError("tuple JSON: n does not match matrix shape");
        t.validate();
        return t;
    } catch (const json::exception& e) {
        throw InputError(std::string("tuple JSON: ") + e.what());
    }
}

json to_json(const IsometryFamily& f) {
    json ops = json::array();
    for (const CMat& m : f.ops) ops.push_back(to_json(m));
    return json{{"n", f.n}, {"d", f.d}, {"ops", std::move(ops)}};
}

IsometryFamily family_from_json(const json& j) {
    try {
        IsometryFamily f;
        f.n = j.at("n").get<int>();
        f.d = j.at("d").get<int>();
        for (const auto& mj : j.at("ops")) f.ops.push_back(cmat_from_json(mj));
        f.wedge_backed = false;
        if (static_cast<int>(f.ops.size()) != 2 * f.n + 1)
            throw InputError("family JSON: expected 2n+1 operators");
        for (const CMat& m : f.ops)
            if (m.rows != f.d || m.cols != f.d) throw InputError("family JSON: operator shape mismatch");
        return f;
    } catch (const json::exception& e) {
        throw InputError(std::string("family JSON: ") + e.what());
    }
}

json to_json(const NormBracket& b) {
    return json{{"lower", b.lower},
                {"upper", b.upper},
                {"converged", b.converged},
                {"restart_index", b.restart_index},
                {"dual_certificate", to_json(b.dual_certificate)},
                {"primal_y", to_json(b.primal_y)},
                {"primal_z", to_json(b.primal_z)}};
}

json to_json(const QuadratureResult& q) {
    return json{{"value", q.value},
                {"abs_error_estimate", q.abs_error_estimate},
                {"panels", q.panels},
                {"converged", q.converged}};
}

json to_json(const RatioReport& r) {
    return json{{"l1", to_json(r.l1)},
                {"s1rc", to_json(r.s1rc)},
                {"ratio_interval", json::array({r.ratio_lower, r.ratio_upper})},
                {"threshold", kOneOverSqrt2},
                {"violates", r.violates}};
}

json to_json(const MomentProfile& p) {
    return json{{"N1", p.N1},   {"N2", p.N2},   {"Z21", p.Z21},    {"Z22", p.Z22},
                {"Z23", p.Z23}, {"beta", p.beta}, {"eta", p.eta}, {"alpha", p.alpha}};
}

json to_json(const MonteCarloProfile& p) {
    return json{{"samples", p.samples},
                {"N1", p.n1},
                {"N1_se", p.n1_se},
                {"N2", p.n2},
                {"N2_se", p.n2_se},
                {"Z21", p.z21},
                {"Z21_se", p.z21_se},
                {"max_sigma_dev", p.max_sigma_dev},
                {"flagged", p.flagged}};
}

json to_json(const FamilyReport& r) {
    return json{{"n", r.n},
                {"d", r.d},
                {"expected_trace", r.expected_trace},
                {"trace_dev", r.trace_dev},
                {"trace_orth_dev", r.trace_orth_dev},
                {"sum_col_dev", r.sum_col_dev},
                {"sum_row_dev", r.sum_row_dev},
                {"partial_isometry_dev", r.partial_isometry_dev},
                {"trace_b_dev", r.trace_b_dev},
                {"trials", r.trials},
                {"car_checked", r.car_checked},
                {"car_anti_dev", r.car_anti_dev},
                {"car_mixed_dev", r.car_mixed_dev},
                {"passed", r.passed}};
}

namespace {
std::string kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::FivePairs: return "FivePairs";
        case PatternKind::ThreeAPs: return "ThreeAPs";
        case PatternKind::AP5: return "AP5";
    }
    return "?";
}
}  // namespace

json to_json(const PatternWitness& w) {
    return json{{"kind", kind_name(w.kind)},
                {"elements", w.elements},
                {"common_difference", w.common_difference}};
}

PatternWitness pattern_from_json(const json& j) {
    try {
        PatternWitness w;
        const std::string k = j.at("kind").get<std::string>();
        if (k == "FivePairs")
            w.kind = PatternKind::FivePairs;
        else if (k == "ThreeAPs")
            w.kind = PatternKind::ThreeAPs;
        else if (k == "AP5")
            w.kind = PatternKind::AP5;
        else
            throw InputError("pattern JSON: unknown kind " + k);
        w.elements = j.at("elements").get<std::vector<std::int64_t>>();
        w.common_difference = j.at("common_difference").get<std::int64_t>();
        if (!pattern_valid(w)) throw InputError("pattern JSON: invariants violated");
        return w;
    } catch (const json::exception& e) {
        throw InputError(std::string("pattern JSON: ") + e.what());
    }
}

json to_json(const Z2Result& r, bool include_histogram) {
    json out{{"z2", r.z2}};
    if (r.argmax_difference)
        out["argmax_difference"] = *r.argmax_difference;
    else
        out["argmax_difference"] = nullptr;
    if (include_histogram) {
        json hist = json::array();
        for (const auto& [g, c] : r.histogram) hist.push_back(json::array({g, c}));
        out["histogram"] = std::move(hist);
    }
    return out;
}

json to_json(const Z2LatticeResult& r, bool include_histogram) {
    json out{{"z2", r.z2}};
    if (r.argmax_difference)
        out["argmax_difference"] = json::array({r.argmax_difference->m, r.argmax_difference->n});
    else
        out["argmax_difference"] = nullptr;
    if (include_histogram) {
        json hist = json::array();
        for (const auto& [g, c] : r.histogram) hist.push_back(json::array({g.m, g.n, c}));
        out["histogram"] = std::move(hist);
    }
    return out;
}

json to_json(const ViolationReport& r) {
    return json{{"pattern", to_json(r.pattern)},
                {"polynomial", to_json(r.polynomial.tuple)},
                {"ratio", to_json(r.ratio)}};
}

json to_json(const AuditResult& r) {
    json out{{"z2", r.z2.z2}, {"outcome", r.consistent() ? "Consistent" : "Violation"}};
    if (r.violation) out["violation"] = to_json(*r.violation);
    return out;
}

json to_json(const AbelianRatio& r) {
    return json{{"m", r.m},
                {"case", r.which == AbelianCase::Torus ? "torus_products" : "z2_products"},
                {"A_m", r.a_m},
                {"B_m", r.b_m},
                {"ratio", r.ratio},
                {"limit", abelian_ratio_limit(r.which)}};
}

json to_json(const AbelianCheck& c) {
    json out{{"expected", to_json(c.expected)},
             {"a_bracket", to_json(c.a_bracket)},
             {"a_dev", c.a_dev},
             {"b_dev", c.b_dev},
             {"passed", c.passed}};
    if (c.b_quadrature) out["b_quadrature"] = to_json(*c.b_quadrature);
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open JSON file: " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
}

TrigMatrixPoly poly_from_json(const json& j) {
    TrigMatrixPoly p;
    p.tuple = tuple_from_json(j);
    p.validate();
    return p;
}

}  // namespace z2lab
