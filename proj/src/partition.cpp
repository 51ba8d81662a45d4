#include "blocklab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace blocklab {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

void require_odd_prime(int p) {
    if (!is_odd_prime(p))
        throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
    rank_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (pos < text.size() && is_space(text[pos]))
        ++pos;
    if (pos == text.size())
        return Partition{};
    while (true) {
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos)
            throw InvalidInput("malformed partition: '" + std::string(text) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
        parts.push_back(value);
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw InvalidInput("malformed partition: '" + std::string(text) + "'");
        ++pos;
    }
    if (std::ranges::any_of(parts, [](int v) { return v <= 0; }))
        throw InvalidInput("partition parts must be positive: '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

std::string to_string(const Partition& lambda) {
    std::ostringstream os;
    os << '(';
    auto parts = lambda.parts();
    std::size_t i = 0;
    bool first = true;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!first)
            os << ',';
        first = false;
        os << parts[i];
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

static std::string join_parts(const Partition& lambda, char sep) {
    std::string out;
    for (int v : lambda.parts()) {
        if (!out.empty())
            out += sep;
        out += std::to_string(v);
    }
    return out;
}

std::string to_csv_string(const Partition& lambda) { return join_parts(lambda, ','); }

std::string to_plus_string(const Partition& lambda) {
    return lambda.empty() ? std::string("0") : join_parts(lambda, '+');
}

std::string young_diagram(const Partition& lambda) {
    std::string out;
    for (int v : lambda.parts()) {
        out.append(static_cast<std::size_t>(v), '#');
        out += '\n';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << to_string(lambda); }

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
    for (int v : lambda.parts())
        for (int c = 0; c < v; ++c)
            ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::string_view to_string(Dominance d) {
    switch (d) {
    case Dominance::less: return "less";
    case Dominance::equal: return "equal";
    case Dominance::greater: return "greater";
    case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

Dominance dominance_cmp(const Partition& lambda, const Partition& mu) {
    if (lambda.rank() != mu.rank())
        throw InvalidInput("dominance_cmp: rank mismatch " + to_string(lambda) + " vs " + to_string(mu));
    bool some_less = false;
    bool some_greater = false;
    int a = 0;
    int b = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int k = 1; k <= len; ++k) {
        a += lambda.part(k);
        b += mu.part(k);
        some_less |= a < b;
        some_greater |= a > b;
    }
    if (some_less && some_greater)
        return Dominance::incomparable;
    if (some_less)
        return Dominance::less;
    if (some_greater)
        return Dominance::greater;
    return Dominance::equal;
}

bool dominated_by(const Partition& lambda, const Partition& mu) {
    auto d = dominance_cmp(lambda, mu);
    return d == Dominance::less || d == Dominance::equal;
}

std::strong_ordering lex_cmp(const Partition& lambda, const Partition& mu) { return lambda <=> mu; }

HookData hook(const Partition& lambda, int row, int col) {
    if (row < 1 || col < 1 || col > lambda.part(row))
        throw InvalidInput("node (" + std::to_string(row) + "," + std::to_string(col) + ") is outside " +
                           to_string(lambda));
    int leg = 0;
    while (lambda.part(row + leg + 1) >= col)
        ++leg;
    int arm = lambda.part(row) - col;
    return HookData{row, col, arm + leg + 1, arm, leg};
}

std::vector<HookData> hooks(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<HookData> out;
    out.reserve(static_cast<std::size_t>(lambda.rank()));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            int arm = lambda.part(i) - j;
            int leg = conj.part(j) - i;
            out.push_back(HookData{i, j, arm + leg + 1, arm, leg});
        }
    return out;
}

bool is_p_regular(const Partition& lambda, int p) {
    require_odd_prime(p);
    auto parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (static_cast<int>(j - i) >= p)
            return false;
        i = j;
    }
    return true;
}

Partition remove_rim_hook(const Partition& lambda, int row, int col) {
    HookData h = hook(lambda, row, col);
    int foot = row + h.leg;
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    // The rim hook runs from (row, λ_row) to (foot, col); every row it touches
    // slides up by one and the foot row is cut back to col - 1.
    for (int r = row; r < foot; ++r)
        parts[static_cast<std::size_t>(r - 1)] = lambda.part(r + 1) - 1;
    parts[static_cast<std::size_t>(foot - 1)] = col - 1;
    return Partition(std::move(parts));
}

CoreWeight p_core_weight(const Partition& lambda, int p) {
    require_odd_prime(p);
    CoreWeight out{lambda, 0};
    while (true) {
        bool removed = false;
        for (const auto& h : hooks(out.core)) {
            if (h.length == p) {
                out.core = remove_rim_hook(out.core, h.row, h.col);
                ++out.weight;
                removed = true;
                break;
            }
        }
        if (!removed)
            return out;
    }
}

bool is_p_core(const Partition& lambda, int p) {
    require_odd_prime(p);
    return std::ranges::none_of(hooks(lambda), [p](const HookData& h) { return h.length % p == 0; });
}

bool is_bg_partition(const Partition& lambda, int p) {
    require_odd_prime(p);
    if (!is_self_conjugate(lambda))
        return false;
    for (int i = 1; i <= lambda.length() && lambda.part(i) >= i; ++i) {
        int diag = 2 * (lambda.part(i) - i) + 1;
        if (diag % p == 0)
            return false;
    }
    return true;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

// Distinct odd diagonal hooks, largest first, each fixes one arm/leg pair.
void self_conjugate_into(int remaining, int max_hook, std::vector<int>& diag, std::vector<Partition>& out) {
    if (remaining == 0) {
        int d = static_cast<int>(diag.size());
        std::vector<int> parts;
        // Row i has arm a_i = (h_i - 1) / 2 past the diagonal; rows below the
        // Durfee square are read off from the legs.
        std::vector<int> arms(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            arms[static_cast<std::size_t>(i)] = (diag[static_cast<std::size_t>(i)] - 1) / 2;
        for (int i = 0; i < d; ++i)
            parts.push_back(i + 1 + arms[static_cast<std::size_t>(i)]);
        // conjugate symmetry: row r > d has length #{i : leg_i >= r - i}
        int legmax = d > 0 ? arms[0] + 1 : 0;
        for (int r = d + 1; r <= legmax; ++r) {
            int len = 0;
            for (int i = 0; i < d; ++i)
                if (i + 1 + arms[static_cast<std::size_t>(i)] >= r)
                    ++len;
            if (len == 0)
                break;
            parts.push_back(len);
        }
        out.emplace_back(std::move(parts));
        return;
    }
    int start = std::min(remaining, max_hook);
    if (start % 2 == 0)
        --start;
    for (int h = start; h >= 1; h -= 2) {
        diag.push_back(h);
        self_conjugate_into(remaining - h, h - 2, diag, out);
        diag.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0)
        throw InvalidInput("enumerate_partitions: negative n");
    if (n > bound)
        throw InvalidInput("enumerate_partitions: n=" + std::to_string(n) + " exceeds bound " +
                           std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_self_conjugate(int n) {
    if (n < 0)
        throw InvalidInput("enumerate_self_conjugate: negative n");
    std::vector<Partition> out;
    std::vector<int> diag;
    self_conjugate_into(n, n, diag, out);
    std::ranges::sort(out, std::greater<>{});
    return out;
}

} // namespace blocklab
