#pragma once

#include "curvecount/degree_poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace curvecount {

/// binom(n, k), exact; 0 outside 0 <= k <= n.
Int binomial(long n, long k);

/// Which boundary divisor of M_0,4-bar the degree-d maps are counted over.
enum class Side { OneZero, ZeroOne };

std::string to_string(Side s);

struct BoundaryCount {
    long d;
    Side side;
    Int value;
};

/// Memoized n_d values with provenance. Entries written by different
/// formulas must agree; store() enforces that. Readers never see torn
/// values; duplicated computation between threads is acceptable.
class MemoTable {
public:
    enum class Source { Base, Recursion, Unsymmetrized, Cache };

    MemoTable();

    std::optional<Int> lookup(long d) const;
    void store(long d, const Int& value, Source source);
    std::optional<Source> source_of(long d) const;

    /// Snapshot of all entries, for cache persistence.
    std::map<long, Int> entries() const;

private:
    struct Entry {
        Int value;
        Source source;
    };
    mutable std::mutex mu_;
    std::map<long, Entry> entries_;
};

/// The canonical recursion: exact rational intermediates, result
/// asserted integral.
Int nd(long d, MemoTable& table);
/// The unsymmetrized form: all-integer arithmetic. Recurses through
/// itself, so with a fresh table it is an independent oracle.
Int nd_unsym(long d, MemoTable& table);
/// The two boundary evaluations whose equality yields the recursion.
BoundaryCount boundary(long d, Side side, MemoTable& table);

/// Conveniences over a process-wide shared table.
MemoTable& shared_memo();
Int nd(long d);
Int nd_unsym(long d);
BoundaryCount boundary(long d, Side side);

}  // namespace curvecount
