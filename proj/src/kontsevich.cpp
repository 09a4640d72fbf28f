#include "curvecount/kontsevich.hpp"

#include <stdexcept>

namespace curvecount {

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binom(n-k+i, i) after this step
    }
    return r;
}

std::string to_string(Side s) { return s == Side::OneZero ? "[1,0]" : "[0,1]"; }

MemoTable::MemoTable() { entries_.emplace(1, Entry{Int(1), Source::Base}); }

std::optional<Int> MemoTable::lookup(long d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(d);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
}

void MemoTable::store(long d, const Int& value, Source source) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(d);
    if (it == entries_.end()) {
        entries_.emplace(d, Entry{value, source});
        return;
    }
    if (it->second.value != value)
        throw std::logic_error("MemoTable: conflicting values for n_" + std::to_string(d));
}

std::optional<MemoTable::Source> MemoTable::source_of(long d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(d);
    if (it == entries_.end()) return std::nullopt;
    return it->second.source;
}

std::map<long, Int> MemoTable::entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::map<long, Int> out;
    for (const auto& [d, e] : entries_) out.emplace(d, e.value);
    return out;
}

namespace {

void check_degree(long d) {
    if (d < 1) throw std::domain_error("degree must be >= 1, got " + std::to_string(d));
}

}  // namespace

Int nd(long d, MemoTable& table) {
    check_degree(d);
    if (auto v = table.lookup(d)) return *v;
    // n_d = 1/(6(d-1)) * sum (d1 d2 - 2(d1-d2)^2/(3d-2))
    //                        * binom(3d-2, 3 d1 - 1) * d1 d2 n_{d1} n_{d2}
    Rat sum = 0;
    for (long d1 = 1; d1 < d; ++d1) {
        long d2 = d - d1;
        Int n1 = nd(d1, table);
        Int n2 = nd(d2, table);
        Int df = d1 - d2;
        Rat weight = Rat(d1 * d2) - Rat(2 * df * df, Int(3 * d - 2));
        sum += weight * Rat(binomial(3 * d - 2, 3 * d1 - 1) * d1 * d2 * n1 * n2);
    }
    Rat result = sum / Rat(6 * (d - 1));
    if (denominator(result) != 1)
        throw std::logic_error("nd: non-integral recursion value at d = " + std::to_string(d));
    Int value = numerator(result);
    table.store(d, value, MemoTable::Source::Recursion);
    return value;
}

Int nd_unsym(long d, MemoTable& table) {
    check_degree(d);
    if (auto v = table.lookup(d)) return *v;
    // n_d = sum (binom(3d-4, 3 d1 - 2) d1 d2 - binom(3d-4, 3 d1 - 1) d1^2)
    //           * d1 d2 n_{d1} n_{d2}
    Int sum = 0;
    for (long d1 = 1; d1 < d; ++d1) {
        long d2 = d - d1;
        Int n1 = nd_unsym(d1, table);
        Int n2 = nd_unsym(d2, table);
        Int weight = binomial(3 * d - 4, 3 * d1 - 2) * (d1 * d2) -
                     binomial(3 * d - 4, 3 * d1 - 1) * (d1 * d1);
        sum += weight * d1 * d2 * n1 * n2;
    }
    table.store(d, sum, MemoTable::Source::Unsymmetrized);
    return sum;
}

BoundaryCount boundary(long d, Side side, MemoTable& table) {
    check_degree(d);
    Int sum = 0;
    if (side == Side::OneZero) {
        for (long d1 = 1; d1 < d; ++d1) {
            long d2 = d - d1;
            sum += binomial(3 * d - 4, 3 * d1 - 2) * (d1 * d1) * (d2 * d2) *
                   nd(d1, table) * nd(d2, table);
        }
    } else {
        sum = nd(d, table);
        for (long d1 = 1; d1 < d; ++d1) {
            long d2 = d - d1;
            sum += binomial(3 * d - 4, 3 * d1 - 1) * (d1 * d1 * d1) * d2 *
                   nd(d1, table) * nd(d2, table);
        }
    }
    return BoundaryCount{d, side, std::move(sum)};
}

MemoTable& shared_memo() {
    static MemoTable table;
    return table;
}

Int nd(long d) { return nd(d, shared_memo()); }
Int nd_unsym(long d) { return nd_unsym(d, shared_memo()); }
BoundaryCount boundary(long d, Side side) { return boundary(d, side, shared_memo()); }

}  // namespace curvecount
