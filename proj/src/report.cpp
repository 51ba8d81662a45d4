#include "blocklab/report.hpp"

#include <algorithm>
#include <sstream>

namespace blocklab {

using nlohmann::json;

json to_json(const Partition& lambda) {
    return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw InvalidInput("partition JSON must be an array of integers");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw InvalidInput("partition JSON must be an array of integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

json abacus_json(const Abacus& a) {
    return {{"p", a.p()}, {"beads", a.window_beads()}, {"labels", runner_labels(a).label_of_column}};
}

json pyramid_json(const Pyramid& py) {
    json rows = json::array();
    for (int k = 0; k < py.p(); ++k)
        rows.push_back(py.row(k));
    return {{"p", py.p()}, {"core", to_json(py.core())}, {"rows", rows}};
}

std::string core_report_text(const Partition& lambda, int p) {
    CoreWeight cw = p_core_weight(lambda, p);
    Abacus a = Abacus::from_partition(lambda, p);
    auto expanded = [](const Partition& mu) { return "(" + to_csv_string(mu) + ")"; };
    std::ostringstream os;
    if (cw.weight == 0) {
        os << expanded(lambda) << " is a " << p << "-core\n";
    } else {
        os << "partition: " << expanded(lambda) << '\n';
        os << p << "-core: " << expanded(cw.core) << '\n';
    }
    os << "weight: " << cw.weight << '\n';
    os << "quotient:";
    for (const Partition& q : p_quotient(a))
        os << ' ' << expanded(q);
    os << "\nabacus:\n" << render_abacus(a);
    return os.str();
}

json core_report_json(const Partition& lambda, int p) {
    CoreWeight cw = p_core_weight(lambda, p);
    Abacus a = Abacus::from_partition(lambda, p);
    json quotient = json::array();
    for (const Partition& q : p_quotient(a))
        quotient.push_back(to_json(q));
    return {{"partition", to_json(lambda)}, {"p", p},           {"core", to_json(cw.core)},
            {"weight", cw.weight},         {"quotient", quotient}, {"abacus", abacus_json(a)}};
}

namespace {

std::vector<const BlockRecord*> class_members(const BlockCatalog& cat, int l) {
    std::vector<const BlockRecord*> out;
    for (const BlockRecord& r : cat.records())
        if (r.partial == l)
            out.push_back(&r);
    std::ranges::reverse(out);
    return out;
}

std::string chain_key(int l, Sign s) { return std::to_string(l) + std::string(to_string(s)); }

} // namespace

std::string partial_table_text(const BlockCatalog& cat) {
    std::ostringstream os;
    for (int l = 0; l < cat.p(); ++l) {
        os << "∂" << l << " = {";
        bool first = true;
        for (const BlockRecord* r : class_members(cat, l)) {
            os << (first ? "" : ", ") << to_string(r->partition) << (r->regular ? "" : "*");
            first = false;
        }
        os << "}\n";
    }
    for (int l = 0; l < cat.p(); ++l) {
        std::ostringstream line;
        bool any = false;
        for (const BlockRecord* r : class_members(cat, l))
            if (r->ceil) {
                line << (any ? ", " : "") << to_string(*r->ceil);
                any = true;
            }
        if (any)
            os << "∂" << l << " regular = {" << line.str() << "}\n";
    }
    return os.str();
}

std::string block_report_text(const BlockCatalog& cat) {
    std::ostringstream os;
    os << "block of core " << to_string(cat.core()) << ", p=" << cat.p() << ", n=" << cat.n() << '\n';
    if (cat.delta())
        os << "delta = " << *cat.delta() << '\n';
    else
        os << "core is not self-conjugate\n";
    os << "\npyramid:\n" << render_pyramid(cat.pyramid());
    os << "\npartial classes (* = " << cat.p() << "-singular):\n" << partial_table_text(cat);
    if (cat.self_conjugate_core()) {
        os << '\n';
        for (std::size_t k = 0; k < cat.nu().size(); ++k) {
            const auto& nu = cat.record(cat.nu()[k]);
            const auto& mu = cat.record(cat.mu()[k]);
            os << "nu_" << k + 1 << " = " << to_string(nu.partition) << " in ∂" << nu.partial << "    mu_" << k + 1 << " = "
               << to_string(mu.partition) << " in ∂" << mu.partial << '\n';
        }
    }
    os << "\nrecords:\n";
    for (const BlockRecord& r : cat.records()) {
        os << "  " << to_string(r.partition) << "  " << to_string(r.angle);
        if (r.ceil)
            os << "  " << to_string(*r.ceil);
        os << "  ∂=" << r.partial << to_string(r.sign);
        if (!r.regular)
            os << "  singular";
        if (r.self_conjugate)
            os << "  self-conjugate";
        if (r.self_mullineux)
            os << "  self-Mullineux";
        os << '\n';
    }
    return os.str();
}

json block_report_json(const BlockCatalog& cat) {
    json records = json::array();
    for (const BlockRecord& r : cat.records()) {
        json rec = {{"partition", to_json(r.partition)},
                    {"angle", to_string(r.angle)},
                    {"partial", r.partial},
                    {"flags",
                     {{"regular", r.regular}, {"self_conjugate", r.self_conjugate}, {"self_mullineux", r.self_mullineux}}}};
        if (r.ceil)
            rec["ceil"] = to_string(*r.ceil);
        if (r.sign != Sign::none)
            rec["sign"] = std::string(to_string(r.sign));
        records.push_back(rec);
    }
    json chains = json::object();
    auto add = [&](int l, Sign s) {
        json list = json::array();
        for (const Partition& lambda : cat.chain(l, s))
            list.push_back(to_json(lambda));
        chains[chain_key(l, s)] = list;
    };
    add(0, Sign::plus);
    add(0, Sign::minus);
    for (int l = 1; l < cat.p(); ++l)
        add(l, Sign::none);
    json out = {{"p", cat.p()},
                {"core", to_json(cat.core())},
                {"n", cat.n()},
                {"delta", cat.delta() ? json(*cat.delta()) : json(nullptr)},
                {"pyramid", pyramid_json(cat.pyramid())},
                {"records", records},
                {"chains", chains}};
    json nu = json::array();
    json mu = json::array();
    for (const auto& x : cat.nu())
        nu.push_back(to_json(x));
    for (const auto& x : cat.mu())
        mu.push_back(to_json(x));
    out["nu"] = nu;
    out["mu"] = mu;
    return out;
}

std::string subs_report_text(const SubsW2& s, const DecompMatrix& full, const VerificationReport& verdict) {
    std::ostringstream os;
    os << "V in order (greatest first), with psi:\n";
    auto section = [&](const char* name, const std::vector<Partition>& part) {
        for (const Partition& lambda : part)
            os << "  " << name << "  " << to_string(lambda) << "  ->  " << to_string(s.ubs.psi_of(lambda)) << '\n';
    };
    section("V1", s.v1);
    section("V2", s.v2);
    section("V3", s.v3);
    os << "delta = " << s.delta << "\n\nmatrix over V:\n" << to_text(subs_matrix(s, full));
    os << '\n' << (verdict.passed ? "PASS" : "FAIL") << '\n';
    for (const auto& v : verdict.violations)
        os << "  " << v << '\n';
    return os.str();
}

json matrix_json(const DecompMatrix& m) {
    json rows = json::array();
    json cols = json::array();
    json entries = json::array();
    for (const auto& r : m.rows())
        rows.push_back(to_json(r));
    for (const auto& c : m.cols())
        cols.push_back(to_json(c));
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        std::vector<int> line;
        for (std::size_t c = 0; c < m.col_count(); ++c)
            line.push_back(m.at(r, c));
        entries.push_back(line);
    }
    return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

json subs_report_json(const SubsW2& s, const DecompMatrix& full, const VerificationReport& verdict) {
    auto list = [](const std::vector<Partition>& v) {
        json out = json::array();
        for (const auto& x : v)
            out.push_back(to_json(x));
        return out;
    };
    json psi = json::array();
    for (const auto& [from, to] : s.ubs.psi)
        psi.push_back({{"member", to_json(from)}, {"image", to_json(to)}});
    return {{"core", to_json(s.ubs.core)},
            {"p", s.ubs.p},
            {"delta", s.delta},
            {"v1", list(s.v1)},
            {"v2", list(s.v2)},
            {"v3", list(s.v3)},
            {"order", list(s.ubs.order)},
            {"psi", psi},
            {"matrix", matrix_json(subs_matrix(s, full))},
            {"passed", verdict.passed},
            {"violations", verdict.violations}};
}

json verification_json(const BlockCheck& check) {
    std::vector<std::string> all;
    for (const VerificationReport* r : {&check.subs, &check.counts, &check.oracle, &check.formulas})
        all.insert(all.end(), r->violations.begin(), r->violations.end());
    return {{"core", to_json(check.core)}, {"p", check.p},           {"n", check.n},
            {"delta", check.delta},        {"passed", check.passed()}, {"violations", all},
            {"base_row_exceptions", check.base_row_exceptions}};
}

std::string sweep_summary_text(const SweepResult& result) {
    std::ostringstream os;
    std::vector<int> primes;
    for (const BlockCheck& b : result.blocks)
        if (primes.empty() || primes.back() != b.p)
            primes.push_back(b.p);
    for (int p : primes) {
        int count = 0;
        int failed = 0;
        for (const BlockCheck& b : result.blocks)
            if (b.p == p) {
                ++count;
                failed += b.passed() ? 0 : 1;
            }
        os << "p=" << p << ": " << count << " self-conjugate blocks checked, " << failed << " failed\n";
    }
    for (const BlockCheck& b : result.blocks)
        if (!b.passed()) {
            os << "FAIL p=" << b.p << " core " << to_string(b.core) << '\n';
            for (const VerificationReport* r : {&b.subs, &b.counts, &b.oracle, &b.formulas})
                for (const auto& v : r->violations)
                    os << "  " << v << '\n';
        }
    long long exceptions = 0;
    for (const BlockCheck& b : result.blocks)
        exceptions += b.base_row_exceptions;
    os << "left/right pairs with the left partition on the base row and the right one strictly below: " << exceptions
       << '\n';
    os << (result.passed() ? "PASS" : "FAIL") << " (" << result.blocks.size() << " blocks)\n";
    return os.str();
}

json sweep_json(const SweepResult& result) {
    json blocks = json::array();
    for (const BlockCheck& b : result.blocks)
        blocks.push_back(verification_json(b));
    return {{"passed", result.passed()}, {"blocks_checked", result.blocks.size()}, {"blocks", blocks}};
}

} // namespace blocklab
