// blockfuse: block idempotents, defect groups and fusion-system verdicts for
// symmetric and alternating groups in prime characteristic, with a built-in
// verification harness. Reports go to stdout; timing goes to stderr so that
// equal configurations produce byte-identical reports.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockfuse/cache.hpp"
#include "blockfuse/report.hpp"
#include "blockfuse/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCaps = 3;

std::string resolve_cache_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("BLOCKFUSE_CACHE")) return env;
    return flag_value;
}

void emit(const blockfuse::JobConfig& cfg, const nlohmann::json& j) {
    if (cfg.format == "tsv")
        std::cout << blockfuse::to_tsv(j);
    else
        std::cout << j.dump(2) << "\n";
}

void warm_cache(blockfuse::BlockSession& session, const blockfuse::JobConfig& cfg) {
    if (cfg.cache_dir.empty()) return;
    auto rec = blockfuse::load_cache(cfg.cache_dir, cfg.kind, cfg.degree, cfg.prime);
    if (!rec) return;
    if (!blockfuse::apply_cache(session.mutable_context(), *rec))
        std::cerr << "blockfuse: cached class table disagrees, recomputing\n";
}

void store_cache_if_configured(blockfuse::BlockSession& session, const blockfuse::JobConfig& cfg) {
    if (cfg.cache_dir.empty()) return;
    blockfuse::store_cache(cfg.cache_dir, blockfuse::make_cache_record(session.context(), cfg.kind));
}

int cmd_blocks(const blockfuse::JobConfig& cfg) {
    blockfuse::BlockSession session(cfg.build_group(), cfg.prime, cfg.session());
    warm_cache(session, cfg);
    nlohmann::json report = session.run([&] { return blockfuse::blocks_report_json(cfg, session); });
    store_cache_if_configured(session, cfg);
    emit(cfg, report);
    return kExitPass;
}

int cmd_fusion(const blockfuse::JobConfig& cfg) {
    blockfuse::BlockSession session(cfg.build_group(), cfg.prime, cfg.session());
    warm_cache(session, cfg);
    auto [report, falsified] = session.run([&] {
        const auto& blocks = session.blocks_with_defect();
        if (cfg.block_index < 0 || cfg.block_index >= static_cast<int>(blocks.size()))
            throw CLI::ValidationError("--block", "block index out of range (group has " +
                                                      std::to_string(blocks.size()) + " blocks)");
        const blockfuse::Block& b = blocks[cfg.block_index];
        blockfuse::IdentifyResult idr = blockfuse::identify(session, b);
        return std::pair{blockfuse::fusion_report_json(cfg, session, b, idr),
                         idr.verdict == blockfuse::FusionVerdict::falsified};
    });
    store_cache_if_configured(session, cfg);
    emit(cfg, report);
    return falsified ? kExitFalsified : kExitPass;
}

int cmd_verify(const blockfuse::JobConfig& cfg, const std::string& suite, bool have_group, bool have_degree,
               bool have_prime) {
    blockfuse::VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.session = cfg.session();
    if (have_degree) opt.max_degree = cfg.degree;
    if (have_prime) opt.prime = cfg.prime;
    if (have_group)
        opt.kind = cfg.kind == 's' ? blockfuse::GroupKind::symmetric : blockfuse::GroupKind::alternating;

    std::vector<std::string> names;
    if (suite == "all")
        names = blockfuse::suite_names();
    else
        names = {suite};

    std::vector<blockfuse::SuiteResult> results;
    for (const auto& name : names) {
        blockfuse::SuiteResult r = blockfuse::run_suite(name, opt);
        std::cerr << "# suite " << r.name << ": " << r.cases << " cases, " << r.failures.size()
                  << " failures, " << static_cast<long>(r.wall_ms) << " ms\n";
        results.push_back(std::move(r));
    }
    nlohmann::json report =
        blockfuse::verify_report_json(cfg, blockfuse::make_field(cfg.prime, 1), results);
    emit(cfg, report);
    for (const auto& r : results)
        if (!r.passed()) return kExitFalsified;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block idempotents, defect groups and fusion systems of S_n and A_n in characteristic p"};
    app.require_subcommand(1);

    blockfuse::JobConfig cfg;
    std::string group = "s";
    std::string field_deg = "auto";
    std::string cache_flag;
    std::string suite = "all";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", group, "group family: s or a")->check(CLI::IsMember({"s", "a"}));
        sub->add_option("--prime", cfg.prime, "characteristic p");
        sub->add_option("--field-deg", field_deg, "coefficient field degree: auto or an integer");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--cache-dir", cache_flag, "directory for class-table/structure-constant caches");
        sub->add_option("--seed", cfg.seed, "seed for the randomized factorization");
        sub->add_option("--max-order", cfg.max_order, "group enumeration cap");
        sub->add_option("--max-sylow", cfg.max_sylow, "subgroup catalog cap");
        return sub;
    };

    CLI::App* blocks = add_common(app.add_subcommand("blocks", "compute the block decomposition"));
    CLI::Option* blocks_degree = blocks->add_option("--degree", cfg.degree, "degree n")->required();
    (void)blocks_degree;

    CLI::App* fusion = add_common(app.add_subcommand("fusion", "identify the fusion system of one block"));
    fusion->add_option("--degree", cfg.degree, "degree n")->required();
    fusion->add_option("--block", cfg.block_index, "block index from the blocks report");

    CLI::App* verify = add_common(app.add_subcommand("verify", "run a verification sweep"));
    verify->add_option("suite", suite, "expcoef|vanishing|defect|brauer-pairs|fusion|props|blocks|all")
        ->check(CLI::IsMember({"expcoef", "vanishing", "defect", "brauer-pairs", "fusion", "props", "blocks",
                               "all"}));
    CLI::Option* verify_degree = verify->add_option("--degree", cfg.degree, "cap the sweep degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    cfg.kind = group.at(0);
    cfg.cache_dir = resolve_cache_dir(cache_flag);
    if (field_deg != "auto") {
        try {
            cfg.field_degree = static_cast<unsigned>(std::stoul(field_deg));
        } catch (const std::exception&) {
            std::cerr << "blockfuse: --field-deg must be 'auto' or a positive integer\n";
            return kExitUsage;
        }
        if (cfg.field_degree == 0) {
            std::cerr << "blockfuse: --field-deg must be positive\n";
            return kExitUsage;
        }
    }

    auto started = std::chrono::steady_clock::now();
    int code = kExitPass;
    try {
        if (blocks->parsed()) {
            code = cmd_blocks(cfg);
        } else if (fusion->parsed()) {
            code = cmd_fusion(cfg);
        } else if (verify->parsed()) {
            bool have_group = verify->count("--group") > 0;
            bool have_prime = verify->count("--prime") > 0;
            bool have_degree = verify_degree->count() > 0;
            code = cmd_verify(cfg, suite, have_group, have_degree, have_prime);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "blockfuse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const blockfuse::cap_exceeded& e) {
        std::cerr << "blockfuse: cap exceeded: " << e.what() << "\n";
        return kExitCaps;
    } catch (const blockfuse::internal_error& e) {
        std::cerr << "blockfuse: internal falsification event: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const std::exception& e) {
        std::cerr << "blockfuse: error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto ended = std::chrono::steady_clock::now();
    std::cerr << "# wall_ms "
              << std::chrono::duration<double, std::milli>(ended - started).count() << "\n";
    return code;
}
