#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockfuse/blocks.hpp"
#include "blockfuse/fusion.hpp"
#include "blockfuse/verify.hpp"

namespace blockfuse {

inline constexpr const char* kToolVersion = "0.1.0";

struct JobConfig {
    char kind = 's';
    int degree = 3;
    unsigned prime = 2;
    unsigned field_degree = 0;  // 0 = auto
    std::string format = "json";
    std::string cache_dir;
    std::uint64_t seed = 1;
    std::uint64_t max_order = kDefaultOrderCap;
    std::uint64_t max_sylow = kDefaultSylowCap;
    int block_index = 0;

    SessionConfig session() const {
        SessionConfig s;
        s.seed = seed;
        s.forced_field_degree = field_degree;
        s.order_cap = max_order;
        s.sylow_cap = max_sylow;
        return s;
    }

    PermGroup build_group() const {
        return kind == 's' ? PermGroup::symmetric(degree, max_order)
                           : PermGroup::alternating(degree, max_order);
    }

    std::string group_name() const {
        return (kind == 's' ? "S_" : "A_") + std::to_string(degree);
    }
};

inline nlohmann::json header_json(const JobConfig& cfg, const FieldSpec& field) {
    nlohmann::json j;
    j["tool"] = "blockfuse";
    j["version"] = kToolVersion;
    j["config"] = {{"group", std::string(1, cfg.kind)},
                   {"degree", cfg.degree},
                   {"prime", cfg.prime},
                   {"field_deg", cfg.field_degree == 0 ? "auto" : std::to_string(cfg.field_degree)},
                   {"max_order", cfg.max_order},
                   {"max_sylow", cfg.max_sylow}};
    j["field"] = {{"p", field.p}, {"m", field.m}, {"modulus", field.modulus}, {"seed", cfg.seed}};
    return j;
}

inline nlohmann::json central_element_json(const AlgebraContext& ctx, const CentralElement& u) {
    nlohmann::json arr = nlohmann::json::array();
    auto labels = ctx.class_labels();
    for (int l = 0; l < ctx.dim(); ++l)
        if (!fe_is_zero(u.coeff[l])) arr.push_back({labels[l], fe_format(u.coeff[l])});
    return arr;
}

inline nlohmann::json generators_json(const PermGroup& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : g.generators()) arr.push_back(format_cycles(x));
    if (arr.empty()) arr.push_back("()");
    return arr;
}

inline nlohmann::json points_json_1based(const std::vector<int>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x : pts) arr.push_back(x + 1);
    return arr;
}

inline nlohmann::json blocks_report_json(const JobConfig& cfg, BlockSession& session) {
    const auto& blocks = session.blocks_with_defect();
    const AlgebraContext& ctx = session.context();
    nlohmann::json j = header_json(cfg, session.field());
    j["group"] = cfg.group_name();
    j["n"] = cfg.degree;
    j["p"] = cfg.prime;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : blocks) {
        nlohmann::json jb;
        jb["index"] = b.index;
        jb["idempotent"] = central_element_json(ctx, b.idempotent);
        jb["residue_degree"] = b.residue_degree;
        jb["defect_order"] = b.defect->order();
        jb["defect_gens"] = generators_json(*b.defect);
        jb["M"] = points_json_1based(b.moved_set);
        arr.push_back(std::move(jb));
    }
    j["blocks"] = std::move(arr);
    return j;
}

inline nlohmann::json autset_json(const AutSet& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : a.maps) arr.push_back(m);
    return arr;
}

inline nlohmann::json fusion_report_json(const JobConfig& cfg, BlockSession& session, const Block& b,
                                         const IdentifyResult& idr) {
    nlohmann::json j = header_json(cfg, session.field());
    j["group"] = cfg.group_name();
    j["block"] = b.index;
    j["defect"] = {{"order", b.defect->order()},
                   {"gens", generators_json(*b.defect)},
                   {"M", points_json_1based(b.moved_set)}};
    int n = session.group().degree();
    FusionFingerprint sm = fingerprint_group(PermGroup::symmetric_on(b.moved_set, n), idr.block_fp.centrics);
    FusionFingerprint am = fingerprint_group(PermGroup::alternating_on(b.moved_set, n), idr.block_fp.centrics);
    nlohmann::json centrics = nlohmann::json::array();
    for (std::size_t i = 0; i < idr.block_fp.centrics.size(); ++i) {
        nlohmann::json c;
        c["gens"] = idr.block_fp.centrics[i].gens_label;
        c["aut_block"] = autset_json(idr.block_fp.auts[i]);
        c["aut_SM"] = autset_json(sm.auts[i]);
        c["aut_AM"] = autset_json(am.auts[i]);
        centrics.push_back(std::move(c));
    }
    j["centrics"] = std::move(centrics);
    j["pairs_per_centric"] = idr.pairs_per_centric;
    j["verdict"] = verdict_name(idr.verdict);
    if (idr.verdict == FusionVerdict::A_L) j["L"] = points_json_1based(idr.extended_set);
    if (!idr.witness.empty()) j["witness"] = idr.witness;
    return j;
}

inline nlohmann::json verify_report_json(const JobConfig& cfg, const FieldSpec& field,
                                         const std::vector<SuiteResult>& suites) {
    nlohmann::json j = header_json(cfg, field);
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;
    long total_cases = 0;
    for (const auto& s : suites) {
        nlohmann::json js;
        js["suite"] = s.name;
        js["cases"] = s.cases;
        js["failures"] = s.failures;
        js["notes"] = s.notes;
        js["passed"] = s.passed();
        arr.push_back(std::move(js));
        all_pass = all_pass && s.passed();
        total_cases += s.cases;
    }
    j["suites"] = std::move(arr);
    j["cases"] = total_cases;
    j["passed"] = all_pass;
    return j;
}

// flat tab-separated rendering: header comment lines, then one row per item
inline std::string to_tsv(const nlohmann::json& j) {
    std::ostringstream os;
    os << "# blockfuse\t" << kToolVersion << "\n";
    if (j.contains("group")) os << "# group\t" << j["group"].get<std::string>() << "\n";
    if (j.contains("field"))
        os << "# field\tp=" << j["field"]["p"] << " m=" << j["field"]["m"] << " seed=" << j["field"]["seed"]
           << "\n";
    if (j.contains("blocks")) {
        os << "index\tresidue_degree\tdefect_order\tdefect_gens\tM\tidempotent\n";
        for (const auto& b : j["blocks"]) {
            os << b["index"] << "\t" << b["residue_degree"] << "\t" << b["defect_order"] << "\t";
            std::string gens;
            for (const auto& g : b["defect_gens"]) gens += g.get<std::string>();
            os << gens << "\t" << b["M"].dump() << "\t" << b["idempotent"].dump() << "\n";
        }
    }
    if (j.contains("centrics")) {
        os << "verdict\t" << j["verdict"].get<std::string>() << "\n";
        os << "gens\tpairs\taut_block_size\taut_SM_size\taut_AM_size\n";
        for (std::size_t i = 0; i < j["centrics"].size(); ++i) {
            const auto& c = j["centrics"][i];
            os << c["gens"].get<std::string>() << "\t" << j["pairs_per_centric"][i] << "\t"
               << c["aut_block"].size() << "\t" << c["aut_SM"].size() << "\t" << c["aut_AM"].size() << "\n";
        }
    }
    if (j.contains("suites")) {
        os << "suite\tcases\tfailures\tpassed\n";
        for (const auto& s : j["suites"]) {
            os << s["suite"].get<std::string>() << "\t" << s["cases"] << "\t" << s["failures"].size() << "\t"
               << (s["passed"].get<bool>() ? "yes" : "no") << "\n";
            for (const auto& f : s["failures"]) os << "!\t" << f.get<std::string>() << "\n";
        }
    }
    return os.str();
}

}  // namespace blockfuse
