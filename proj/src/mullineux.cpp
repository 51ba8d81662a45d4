#include "blocklab/mullineux.hpp"

#include <algorithm>
#include <optional>

namespace blocklab {

std::vector<Node> p_rim(const Partition& lambda, int p) {
    require_odd_prime(p);
    std::vector<Node> nodes;
    int l = lambda.length();
    int row = 1;
    while (row <= l) {
        // One p-segment starting at the right end of `row`.
        int left = p;
        int r = row;
        int col = lambda.part(r);
        while (left > 0 && r <= l) {
            int stop = std::max(lambda.part(r + 1), 1);
            while (left > 0 && col >= stop) {
                nodes.push_back({r, col});
                --col;
                --left;
            }
            if (left > 0) {
                ++r;
                col = lambda.part(r);
            }
        }
        // Next segment begins in the row after the one this segment ended in.
        row = (left > 0) ? l + 1 : nodes.back().row + 1;
    }
    return nodes;
}

Partition remove_p_rim(const Partition& lambda, int p) {
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    for (const Node& n : p_rim(lambda, p))
        --parts[static_cast<std::size_t>(n.row - 1)];
    return Partition(std::move(parts));
}

MullineuxSymbol mullineux_symbol(const Partition& lambda, int p) {
    MullineuxSymbol sym;
    Partition cur = lambda;
    while (!cur.empty()) {
        auto rim = p_rim(cur, p);
        sym.columns.emplace_back(static_cast<int>(rim.size()), cur.length());
        cur = remove_p_rim(cur, p);
    }
    return sym;
}

namespace {

// Finds every λ with `rows` rows whose p-rim has `size` nodes and whose
// removal leaves `inner`. Works down the rows: `remaining` is what the current
// p-segment still has to take. In a row where the segment ends the removed
// count is exactly `remaining`; otherwise the whole rim of the row goes and
// the next row is forced to be inner_i + 1.
class RimSearch {
public:
    RimSearch(const Partition& inner, int rows, int size, int p)
        : inner_(inner), rows_(rows), size_(size), p_(p), lambda_(static_cast<std::size_t>(rows) + 2, 0) {}

    std::vector<Partition> run() {
        if (inner_.length() > rows_ || rows_ <= 0)
            return {};
        for (int first = inner_.part(1) + 1; first <= inner_.part(1) + p_; ++first) {
            lambda_[1] = first;
            visit(1, p_, 0);
        }
        return std::move(found_);
    }

private:
    void visit(int i, int remaining, int used) {
        int li = lambda_[static_cast<std::size_t>(i)];
        int d = li - inner_.part(i);
        if (d < 1 || d > remaining)
            return;
        used += d;
        if (used > size_)
            return;
        if (i == rows_) {
            // Last row: either the segment ends here or the rim runs out.
            if (d < remaining && inner_.part(i) != 0)
                return;
            if (used == size_)
                found_.emplace_back(std::vector<int>(lambda_.begin() + 1, lambda_.begin() + rows_ + 1));
            return;
        }
        if (d < remaining) {
            int next = inner_.part(i) + 1;
            if (next > li)
                return;
            lambda_[static_cast<std::size_t>(i + 1)] = next;
            visit(i + 1, remaining - d, used);
            return;
        }
        int hi = std::min(inner_.part(i) + 1, li);
        int lo = std::max(inner_.part(i + 1) + 1, 1);
        for (int next = hi; next >= lo; --next) {
            lambda_[static_cast<std::size_t>(i + 1)] = next;
            visit(i + 1, p_, used);
        }
    }

    const Partition& inner_;
    int rows_;
    int size_;
    int p_;
    std::vector<int> lambda_;
    std::vector<Partition> found_;
};

} // namespace

Partition from_mullineux_symbol(const MullineuxSymbol& symbol, int p) {
    require_odd_prime(p);
    Partition cur;
    for (auto it = symbol.columns.rbegin(); it != symbol.columns.rend(); ++it) {
        auto [size, rows] = *it;
        auto candidates = RimSearch(cur, rows, size, p).run();
        std::optional<Partition> pick;
        for (auto& c : candidates) {
            if (!is_p_regular(c, p) || remove_p_rim(c, p) != cur)
                continue;
            if (pick)
                throw std::logic_error("from_mullineux_symbol: ambiguous reconstruction");
            pick = std::move(c);
        }
        if (!pick)
            throw InvalidInput("from_mullineux_symbol: no p-regular partition realises the symbol");
        cur = std::move(*pick);
    }
    return cur;
}

Partition mullineux(const Partition& lambda, int p) {
    if (!is_p_regular(lambda, p))
        throw InvalidInput("mullineux: " + to_string(lambda) + " is not " + std::to_string(p) + "-regular");
    MullineuxSymbol sym = mullineux_symbol(lambda, p);
    for (auto& [a, r] : sym.columns)
        r = a - r + (a % p == 0 ? 0 : 1);
    return from_mullineux_symbol(sym, p);
}

} // namespace blocklab
