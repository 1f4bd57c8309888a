#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace rmis {

struct Literal {
    int var = 0;
    bool positive = true;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }
inline Literal negate(Literal l) { return {l.var, !l.positive}; }

using Assignment = std::vector<bool>;

/// 2-SAT formula; unit constraints are encoded as duplicated-literal clauses.
class TwoSatFormula {
public:
    explicit TwoSatFormula(int variable_count);

    int variable_count() const { return variable_count_; }
    const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

    void add_clause(Literal a, Literal b);
    void add_unit(Literal a) { add_clause(a, a); }

    /// Implication-graph / SCC resolution. A satisfying assignment when one
    /// exists (deterministic given clause order; unconstrained variables come
    /// out true), nullopt otherwise.
    std::optional<Assignment> solve() const;

    bool satisfied_by(const Assignment& a) const;

private:
    int variable_count_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

} // namespace rmis
