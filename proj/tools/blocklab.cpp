#include "blocklab/mullineux.hpp"
#include "blocklab/report.hpp"
#include "blocklab/subs.hpp"
#include "blocklab/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace blocklab;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int p = 0;
    std::string core;
    std::string partition;
    int n = -1;
    std::string format = "text";
    std::string out;
    std::vector<int> primes{3, 5, 7, 11, 13};
    int max_core_rank = 40;
};

int max_n() {
    const char* env = std::getenv("BLOCKLAB_MAX_N");
    if (!env || !*env)
        return default_enumeration_bound;
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0)
        throw UsageError("BLOCKLAB_MAX_N must be a positive integer, got '" + std::string(text) + "'");
    return value;
}

void require_n(int n) {
    int cap = max_n();
    if (n > cap)
        throw UsageError("n = " + std::to_string(n) + " exceeds BLOCKLAB_MAX_N = " + std::to_string(cap));
}

void require_format(const RunConfig& cfg, const std::string& verb, std::initializer_list<std::string_view> allowed) {
    if (std::ranges::find(allowed, cfg.format) == allowed.end())
        throw UsageError("format '" + cfg.format + "' is not available for '" + verb + "'");
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + cfg.out + "' for writing");
    file << text;
}

std::string dump(const json& j) { return j.dump(2) + '\n'; }

Partition parse_core(const RunConfig& cfg) {
    require_odd_prime(cfg.p);
    Partition core = Partition::parse(cfg.core);
    if (!is_p_core(core, cfg.p))
        throw UsageError(to_string(core) + " is not a " + std::to_string(cfg.p) + "-core");
    return core;
}

/// Weight selected by --n for a given core; 2 when --n is absent.
int weight_for(const RunConfig& cfg, const Partition& core) {
    if (cfg.n < 0)
        return 2;
    int extra = cfg.n - core.rank();
    if (extra < 0 || extra % cfg.p != 0)
        throw UsageError("n = " + std::to_string(cfg.n) + " is not " + std::to_string(core.rank()) + " plus a multiple of " +
                         std::to_string(cfg.p));
    return extra / cfg.p;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

int cmd_core(const RunConfig& cfg) {
    require_format(cfg, "core", {"text", "json"});
    require_odd_prime(cfg.p);
    Partition lambda = Partition::parse(cfg.partition);
    require_n(lambda.rank());
    emit(cfg, cfg.format == "json" ? dump(core_report_json(lambda, cfg.p)) : core_report_text(lambda, cfg.p));
    return exit_ok;
}

int cmd_block(const RunConfig& cfg) {
    Partition core = parse_core(cfg);
    require_n(core.rank() + 2 * cfg.p);
    BlockCatalog cat = BlockCatalog::build(core, cfg.p);
    if (cfg.format == "json") {
        emit(cfg, dump(block_report_json(cat)));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "partition,angle,ceil,partial,sign,regular,self_conjugate,self_mullineux\n";
        for (const BlockRecord& r : cat.records())
            os << to_plus_string(r.partition) << ',' << quoted(to_string(r.angle)) << ','
               << (r.ceil ? quoted(to_string(*r.ceil)) : "") << ',' << r.partial << ',' << to_string(r.sign) << ','
               << r.regular << ',' << r.self_conjugate << ',' << r.self_mullineux << '\n';
        emit(cfg, os.str());
    } else {
        emit(cfg, block_report_text(cat));
    }
    return exit_ok;
}

int subs_self_conjugate(const RunConfig& cfg, const Partition& core) {
    BlockCatalog cat = BlockCatalog::build(core, cfg.p);
    SubsW2 s = build_subs_w2(cat);
    DecompMatrix full = decomp_matrix(cat);
    VerificationReport verdict = verify_ubs(s.ubs, full);
    verdict.merge(verify_stability(s.ubs.members, cfg.p));
    verdict.merge(verify_zero_pattern(s, full));
    emit(cfg, cfg.format == "json" ? dump(subs_report_json(s, full, verdict)) : subs_report_text(s, full, verdict));
    return verdict.passed ? exit_ok : exit_fail;
}

int subs_pair(const RunConfig& cfg, const Partition& core, int weight) {
    PairSubs ps = build_subs_odd_or_split(core, cfg.p, weight);
    VerificationReport verdict = verify_stability(ps.members, cfg.p);
    std::vector<DecompMatrix> reordered;
    for (std::size_t k = 0; k < ps.blocks.size(); ++k) {
        const Ubs& u = ps.blocks[k];
        verdict.merge(verify_ubs(u, ps.matrices[k]));
        std::vector<Partition> images;
        for (const Partition& m : u.members)
            images.push_back(u.psi_of(m));
        reordered.push_back(submatrix(ps.matrices[k], u.members, images));
    }
    if (cfg.format == "json") {
        json blocks = json::array();
        for (std::size_t k = 0; k < ps.blocks.size(); ++k) {
            const Ubs& u = ps.blocks[k];
            json order = json::array();
            json psi = json::array();
            for (const auto& x : u.order)
                order.push_back(to_json(x));
            for (const auto& [from, to] : u.psi)
                psi.push_back({{"member", to_json(from)}, {"image", to_json(to)}});
            blocks.push_back({{"core", to_json(u.core)}, {"order", order}, {"psi", psi}, {"matrix", matrix_json(reordered[k])}});
        }
        emit(cfg, dump({{"core", to_json(core)},
                        {"p", cfg.p},
                        {"weight", weight},
                        {"blocks", blocks},
                        {"passed", verdict.passed},
                        {"violations", verdict.violations}}));
    } else {
        std::ostringstream os;
        for (std::size_t k = 0; k < ps.blocks.size(); ++k) {
            const Ubs& u = ps.blocks[k];
            os << "block of core " << to_string(u.core) << ", members in order (greatest first), with psi:\n";
            for (const Partition& m : u.members)
                os << "  " << to_string(m) << "  ->  " << to_string(u.psi_of(m)) << '\n';
            os << "matrix over the members:\n" << to_text(reordered[k]) << '\n';
        }
        os << (verdict.passed ? "PASS" : "FAIL") << '\n';
        for (const auto& v : verdict.violations)
            os << "  " << v << '\n';
        emit(cfg, os.str());
    }
    return verdict.passed ? exit_ok : exit_fail;
}

int cmd_subs(const RunConfig& cfg) {
    require_format(cfg, "subs", {"text", "json"});
    Partition core = parse_core(cfg);
    int weight = weight_for(cfg, core);
    require_n(core.rank() + weight * cfg.p);
    if (weight == 2 && is_self_conjugate(core))
        return subs_self_conjugate(cfg, core);
    return subs_pair(cfg, core, weight);
}

int cmd_verify(const RunConfig& cfg) {
    require_format(cfg, "verify", {"text", "json"});
    if (cfg.primes.empty())
        throw UsageError("--primes needs at least one prime");
    for (int p : cfg.primes)
        require_odd_prime(p);
    if (cfg.max_core_rank < 0)
        throw UsageError("--max-core-rank must be non-negative");
    require_n(cfg.max_core_rank + 2 * std::ranges::max(cfg.primes));
    SweepConfig sweep;
    sweep.primes = cfg.primes;
    std::ranges::sort(sweep.primes);
    sweep.primes.erase(std::unique(sweep.primes.begin(), sweep.primes.end()), sweep.primes.end());
    sweep.max_core_rank = cfg.max_core_rank;
    SweepResult result = run_sweep(sweep);
    emit(cfg, cfg.format == "json" ? dump(sweep_json(result)) : sweep_summary_text(result));
    return result.passed() ? exit_ok : exit_fail;
}

int cmd_mull(const RunConfig& cfg) {
    require_format(cfg, "mull", {"text", "json"});
    require_odd_prime(cfg.p);
    Partition lambda = Partition::parse(cfg.partition);
    require_n(lambda.rank());
    Partition image = mullineux(lambda, cfg.p);
    if (cfg.format == "json")
        emit(cfg, dump({{"input", to_json(lambda)}, {"image", to_json(image)}}));
    else
        emit(cfg, "(" + to_csv_string(image) + ")\n");
    return exit_ok;
}

int cmd_matrix(const RunConfig& cfg) {
    DecompMatrix m;
    if (!cfg.core.empty()) {
        Partition core = parse_core(cfg);
        int weight = weight_for(cfg, core);
        require_n(core.rank() + weight * cfg.p);
        m = block_decomp_matrix(core, cfg.p, weight);
    } else {
        require_odd_prime(cfg.p);
        if (cfg.n < 0)
            throw UsageError("matrix needs --n or --core");
        require_n(cfg.n);
        m = decomp_matrix_n(cfg.n, cfg.p, max_n());
    }
    if (cfg.format == "json")
        emit(cfg, dump(matrix_json(m)));
    else if (cfg.format == "csv")
        emit(cfg, to_csv(m));
    else
        emit(cfg, to_text(m));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight-2 blocks of symmetric groups: cores, pyramids, decomposition numbers and basic sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_p = [&](CLI::App* sub) { sub->add_option("--p", cfg.p, "odd prime")->required(); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "write to this file instead of stdout");
    };

    auto* core = app.add_subcommand("core", "p-core, weight, p-quotient and abacus of a partition");
    add_p(core);
    core->add_option("--partition", cfg.partition, "comma-separated parts")->required();
    add_format(core);

    auto* block = app.add_subcommand("block", "weight-2 block of a p-core: pyramid, labels, partial classes");
    add_p(block);
    block->add_option("--core", cfg.core, "comma-separated parts of a p-core")->required();
    add_format(block);

    auto* subs = app.add_subcommand("subs", "build and verify the basic set of a block");
    add_p(subs);
    subs->add_option("--core", cfg.core, "comma-separated parts of a p-core")->required();
    subs->add_option("--n", cfg.n, "rank of the block (default: weight 2)");
    add_format(subs);

    auto* verify = app.add_subcommand("verify", "check every self-conjugate weight-2 block up to a core rank");
    verify->add_option("--primes", cfg.primes, "comma-separated odd primes")->delimiter(',')->capture_default_str();
    verify->add_option("--max-core-rank", cfg.max_core_rank, "largest core rank")->capture_default_str();
    add_format(verify);

    auto* mull = app.add_subcommand("mull", "Mullineux image of a p-regular partition");
    add_p(mull);
    mull->add_option("--partition", cfg.partition, "comma-separated parts")->required();
    add_format(mull);

    auto* matrix = app.add_subcommand("matrix", "decomposition matrix of S_n or of one block");
    add_p(matrix);
    matrix->add_option("--n", cfg.n, "rank");
    matrix->add_option("--core", cfg.core, "restrict to the block of this p-core");
    add_format(matrix);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (core->parsed())
            return cmd_core(cfg);
        if (block->parsed())
            return cmd_block(cfg);
        if (subs->parsed())
            return cmd_subs(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (mull->parsed())
            return cmd_mull(cfg);
        if (matrix->parsed())
            return cmd_matrix(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}
