#pragma once

#include "curvecount/chern.hpp"

#include <map>
#include <string>
#include <vector>

namespace curvecount {

/// The nine characteristic-number families of plane curves with one,
/// two, or three singular points.
enum class CharName { N1, N11, K1, K11, T1, N2, N21, K2, N3 };

/// Affine-bundle-map counts entering the two- and three-point pipelines.
enum class ExcessName { Node2, Node2Line, Cusp2, Node3 };

const std::vector<CharName>& all_char_names();
std::string to_string(CharName n);
CharName char_name_from_string(const std::string& s);
/// Lowest degree for which the closed formula applies.
int min_degree(CharName n);
int min_degree(ExcessName n);

struct CharNumRecord {
    CharName name;
    int min_degree;
    DegreePoly value;
};

/// One boundary-stratum correction: multiplicity times a previously
/// computed count. The multiplicities come from the local models of the
/// degenerate strata and are taken as constants here.
struct CorrectionTerm {
    std::string stratum;
    int multiplicity;  // one of 1, 2, 3, 4, 6
    DegreePoly quantity;
};

/// Audit trail of a multi-point pipeline: the ambient Euler-class
/// integral, the boundary corrections subtracted from it, and the
/// pre-quotient count before dividing by the symmetry group order.
struct PipelineAudit {
    DegreePoly main_term;
    std::vector<CorrectionTerm> corrections;
    DegreePoly pre_quotient;
    int quotient = 1;

    DegreePoly boundary_total() const;
};

/// Evaluates the characteristic-number pipelines at a fixed degree
/// argument, either a numeric constant or the formal symbol d. All
/// intermediate results are memoized per evaluator.
class CharNumbers {
public:
    static CharNumbers numeric(long d);
    static CharNumbers symbolic();

    const DegreePoly& degree_arg() const { return deg_; }

    DegreePoly value(CharName name);
    DegreePoly excess(ExcessName name);
    /// Available for the multi-point names N2, N21, K2, N3.
    const PipelineAudit& audit(CharName name);

private:
    explicit CharNumbers(DegreePoly deg);
    DegreePoly compute(CharName name);
    DegreePoly compute_excess(ExcessName name);

    DegreePoly deg_;
    std::map<CharName, DegreePoly> values_;
    std::map<ExcessName, DegreePoly> excess_;
    std::map<CharName, PipelineAudit> audits_;
};

/// Numeric entry point; rejects d below the Table-2 validity threshold.
CharNumRecord charnum(CharName name, long d);
CharNumRecord charnum_symbolic(CharName name);
DegreePoly excess(ExcessName name, long d);

/// Genus of a smooth degree-d plane curve, via chi = 3d - d^2.
Int genus_smooth(long d);

/// The rational-curve counts for d = 1..4 by the classical route.
Int nd_classical(long d);

}  // namespace curvecount
