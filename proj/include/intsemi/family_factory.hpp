#pragma once

#include <string>

#include <json.hpp>

#include "intsemi/families.hpp"

namespace intsemi {

using json = nlohmann::json;

namespace detail {
inline void require_field(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key))
        throw std::invalid_argument("family descriptor: missing field '" + key + "' in " + ctx);
}
inline double num_field(const json& j, const std::string& key, const std::string& ctx) {
    require_field(j, key, ctx);
    if (!j[key].is_number())
        throw std::invalid_argument("family descriptor: field '" + key + "' in " + ctx +
                                    " must be a number");
    return j[key].get<double>();
}
}  // namespace detail

inline GridSpec grid_from_json(const json& j) {
    GridSpec g;
    g.x_min = detail::num_field(j, "xmin", "grid");
    g.x_max = detail::num_field(j, "xmax", "grid");
    g.n_points = static_cast<int>(detail::num_field(j, "n", "grid"));
    if (j.contains("refine")) {
        GridSpec::Refinement r;
        r.x_star = detail::num_field(j["refine"], "x_star", "grid.refine");
        if (j["refine"].contains("factor"))
            r.factor = detail::num_field(j["refine"], "factor", "grid.refine");
        g.refine = r;
    }
    g.validate();
    return g;
}

/// Family descriptor, e.g.
///   {"kind": "beta_multiplication", "beta": 3.0,
///    "grid": {"xmin": -8, "xmax": 8, "n": 2001}}
///   {"kind": "scalar", "a": -1.0}
///   {"kind": "matrix", "entries": [[re,im],...], "dim": 2}
///   {"kind": "singular_c01", "beta": 0.5, "grid": {"smax": 1e5, "n": 4001}}
inline AnyFamily make_family(const json& j) {
    detail::require_field(j, "kind", "root");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "scalar") {
        return ScalarFamily(detail::num_field(j, "a", "scalar family"));
    }
    if (kind == "matrix") {
        detail::require_field(j, "entries", "matrix family");
        const auto& e = j["entries"];
        const int dim = j.contains("dim") ? j["dim"].get<int>()
                                          : static_cast<int>(std::lround(std::sqrt(
                                                static_cast<double>(e.size()))));
        if (!e.is_array() || static_cast<int>(e.size()) != dim * dim)
            throw std::invalid_argument("family descriptor: matrix entries must be dim^2 [re,im] pairs");
        std::vector<Complex> entries;
        for (const auto& item : e) {
            if (item.is_number())
                entries.emplace_back(item.get<double>(), 0.0);
            else if (item.is_array() && item.size() == 2)
                entries.emplace_back(item[0].get<double>(), item[1].get<double>());
            else
                throw std::invalid_argument("family descriptor: matrix entry must be number or [re,im]");
        }
        std::optional<double> omega;
        if (j.contains("omega")) omega = detail::num_field(j, "omega", "matrix family");
        return MatrixFamily(CMatrix(dim, std::move(entries)), omega);
    }
    if (kind == "beta_multiplication") {
        const double beta = detail::num_field(j, "beta", "beta family");
        detail::require_field(j, "grid", "beta family");
        return BetaFamily(beta, grid_from_json(j["grid"]));
    }
    if (kind == "singular_c01") {
        const double beta = detail::num_field(j, "beta", "singular family");
        LogGridSpec g;
        if (j.contains("grid")) {
            const auto& jg = j["grid"];
            if (jg.contains("smax")) {
                g.s_max = detail::num_field(jg, "smax", "singular grid");
            } else {
                // x-form: s_max = -ln(xmin)
                const double xmin = detail::num_field(jg, "xmin", "singular grid");
                if (!(xmin > 0.0) || !(xmin < 1.0))
                    throw std::invalid_argument("family descriptor: singular grid needs 0 < xmin < 1");
                g.s_max = -std::log(xmin);
            }
            if (jg.contains("n")) g.n_points = static_cast<int>(detail::num_field(jg, "n", "singular grid"));
        }
        return SingularC01Family(beta, g);
    }
    throw std::invalid_argument("family descriptor: unknown kind '" + kind + "'");
}

inline AnyFamily make_family_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("family descriptor: invalid JSON: ") + e.what());
    }
    return make_family(j);
}

inline json family_metadata(const AnyFamily& fam) {
    json j;
    j["kind"] = family_kind(fam);
    j["omega"] = family_omega(fam);
    const double km = family_kappa_min(fam);
    if (std::isfinite(km))
        j["kappa_min"] = km;
    else
        j["kappa_min"] = "inf";
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ScalarFamily>) {
                j["a"] = g.generator();
            } else if constexpr (std::is_same_v<T, BetaFamily>) {
                j["beta"] = g.beta();
                j["grid_points"] = g.grid().size();
            } else if constexpr (std::is_same_v<T, SingularC01Family>) {
                j["beta"] = g.beta();
                j["grid_points"] = g.s_grid().size();
            } else {
                j["dim"] = g.space_dim();
            }
        },
        fam);
    return j;
}

}  // namespace intsemi
