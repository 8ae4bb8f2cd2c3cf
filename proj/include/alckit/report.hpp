#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "alckit/verify.hpp"

namespace alckit {

// Reports use insertion-ordered JSON so reruns with equal config are
// byte-identical.  Rationals are serialized in the canonical "p/q" form.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolName = "alckit";
inline constexpr const char* kToolVersion = "1.0.0";

inline Json json_coweight(const Coweight& w) {
    Json a = Json::array();
    for (const Rat& c : w.coeffs)
        a.push_back(c.str());
    return a;
}

inline Json json_rats(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& c : v)
        a.push_back(c.str());
    return a;
}

inline Json report_envelope(const std::string& command, Json config, Json records,
                            long long asserted_pass, long long asserted_fail,
                            long long logged) {
    Json rep;
    rep["schema"] = kReportSchema;
    rep["tool"] = kToolName;
    rep["version"] = kToolVersion;
    rep["command"] = command;
    rep["config"] = std::move(config);
    rep["records"] = std::move(records);
    rep["summary"] = Json{{"asserted_pass", asserted_pass},
                          {"asserted_fail", asserted_fail},
                          {"logged_discrepancies", logged}};
    return rep;
}

inline Json json_check(const CheckResult& c) {
    Json j;
    j["check"] = c.name;
    j["pass"] = c.pass;
    j["checked"] = c.checked;
    j["failures"] = c.failures;
    return j;
}

// ---------------------------------------------------------------------------
// Per-command records
// ---------------------------------------------------------------------------

inline Json rootsys_record(const RootSystem& rs) {
    Json rec;
    rec["type"] = rs.type.name();
    rec["rank"] = rs.rank;
    Json cartan = Json::array();
    for (const auto& row : rs.cartan)
        cartan.push_back(row);
    rec["cartan"] = std::move(cartan);
    Json inv = Json::array();
    for (const auto& row : rs.inv_cartan) {
        Json r = Json::array();
        for (const Rat& c : row)
            r.push_back(c.str());
        inv.push_back(std::move(r));
    }
    rec["inv_cartan"] = std::move(inv);
    Json pos = Json::array();
    for (const Root& a : rs.positive_roots)
        pos.push_back(a.coeffs);
    rec["positive_roots"] = std::move(pos);
    rec["num_roots"] = 2 * rs.positive_roots.size();
    rec["highest_root"] = rs.highest_root.coeffs;
    rec["marks"] = rs.marks;
    rec["dual_marks"] = rs.dual_marks;
    return rec;
}

inline Json alcove_record(const RootSystem& rs) {
    Json rec;
    rec["type"] = rs.type.name();
    std::vector<Coweight> v = alcove_vertices(rs);
    Json verts = Json::array();
    for (const Coweight& w : v)
        verts.push_back(json_coweight(w));
    rec["vertices"] = std::move(verts);
    Json pm = Json::array();
    for (int i = 1; i <= rs.rank; ++i) {
        std::vector<long long> e((std::size_t)rs.rank, 0);
        e[(std::size_t)(i - 1)] = 1;
        Json row = Json::array();
        for (int j = 0; j <= rs.rank; ++j)
            row.push_back(pairing(Root{e}, v[(std::size_t)j], rs).str());
        pm.push_back(std::move(row));
    }
    rec["pairing_matrix"] = std::move(pm);
    AlcoveOrders o = alcove_orders(rs);
    rec["k_each"] = o.k_each;
    rec["k_G"] = o.k_g;
    Json exotic = Json::array();
    for (int i = 0; i <= rs.rank; ++i)
        exotic.push_back(is_exotic(FaceLabel::make({i}, rs.rank)));
    rec["exotic_singleton"] = std::move(exotic);
    return rec;
}

inline Json reduce_record(const RootSystem& rs, const GiesekerLimit& g) {
    Json rec;
    rec["type"] = rs.type.name();
    rec["input"] = json_coweight(g.trace.input);
    rec["word"] = g.trace.word;
    rec["reduced"] = json_coweight(g.trace.output);
    rec["face"] = g.face.support;
    rec["eta_I"] = json_coweight(g.eta_face);
    rec["chain_length"] = g.chain_length;
    rec["node_labels"] = g.node_labels;
    rec["k_G"] = g.k_g;
    rec["exotic"] = is_exotic(g.face);
    return rec;
}

inline Json chain_record_json(const ChainRecord& rec) {
    Json j;
    j["type"] = rec.type.name();
    j["rank"] = rec.type.rank;
    j["k"] = rec.k;
    j["labels"] = rec.labels;
    j["model"] = rec.model;
    j["contains_label_zero"] = rec.contains_label_zero;
    Json per = Json::array();
    for (const auto& pr : rec.per_root) {
        Json row;
        row["root"] = pr.root.coeffs;
        row["degrees"] = pr.degrees;
        row["dim_untwisted"] = pr.dim_untwisted;
        row["dim_twisted"] = pr.dim_twisted;
        per.push_back(std::move(row));
    }
    j["per_root"] = std::move(per);
    j["total_untwisted"] = rec.total_untwisted;
    j["total_twisted"] = rec.total_twisted;
    j["statement_dim"] = rec.statement_dim;
    j["constructive_dim"] = rec.constructive_dim;
    j["ev_rank"] = rec.ev_rank;
    j["ev_injective"] = rec.ev_injective;
    j["verdict"] = rec.total_twisted; // 0 = vanishing holds
    if (rec.witness) {
        Json w;
        w["root"] = rec.witness->root.coeffs;
        Json terms = Json::array();
        for (const auto& t : rec.witness->terms)
            terms.push_back(Json{{"component", t.component},
                                 {"exponent", t.exponent},
                                 {"coeff", t.coeff}});
        w["terms"] = std::move(terms);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json strata_record(const RootSystem& rs, const OrbitReport& r) {
    Json j;
    j["I"] = r.label.indices;
    j["open_stratum"] = r.label.empty();
    Json ex = Json::array();
    for (bool b : r.exotic_flags)
        ex.push_back(b);
    j["exotic_flags"] = std::move(ex);
    if (r.fin_levi) {
        j["dim_L"] = r.fin_levi->dim_l;
        j["dim_U"] = r.fin_levi->dim_u;
        j["dim_Z"] = r.fin_levi->dim_z;
        j["dim_levi_ad_fin"] = r.dim_levi_ad_fin;
        j["z0_trivial"] = r.z0_trivial;
        j["chain_length"] = r.chain_length;
    }
    (void)rs;
    return j;
}

// Flat TSV mirror of a record array: union of scalar keys, one row each.
inline std::string records_tsv(const Json& records) {
    std::vector<std::string> keys;
    for (const Json& rec : records)
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            if (it.value().is_object() || it.value().is_array())
                continue;
            if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                keys.push_back(it.key());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < keys.size(); ++i)
        os << (i ? "\t" : "") << keys[i];
    os << "\n";
    for (const Json& rec : records) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            os << (i ? "\t" : "");
            if (rec.contains(keys[i])) {
                const Json& v = rec.at(keys[i]);
                if (v.is_string())
                    os << v.get<std::string>();
                else
                    os << v.dump();
            }
        }
        os << "\n";
    }
    return os.str();
}

} // namespace alckit
