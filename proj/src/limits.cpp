#include "ainfty/limits.hpp"

namespace ainfty {

void DirectedSystem::validate_shapes() const {
    const size_t n = stages.size();
    if (n < 2) throw SystemNotCommuting("a directed system needs >= 2 stages");
    if (targets.size() != n || comparisons.size() != n ||
        inclusions.size() != n - 1 || target_inclusions.size() != n - 1 ||
        corrections.size() != n - 1)
        throw SystemNotCommuting("stage/map counts do not line up");
    for (size_t d = 0; d + 1 < n; ++d) {
        if (inclusions[d].src != &stages[d] ||
            inclusions[d].dst != &stages[d + 1] ||
            target_inclusions[d].src != &targets[d] ||
            target_inclusions[d].dst != &targets[d + 1] ||
            corrections[d].src != &targets[d] ||
            corrections[d].dst != &targets[d])
            throw SystemNotCommuting("map endpoints do not line up");
    }
    for (size_t d = 0; d < n; ++d)
        if (comparisons[d].src != &stages[d] ||
            comparisons[d].dst != &targets[d])
            throw SystemNotCommuting("comparison endpoints do not line up");
}

namespace {

// split injection: full column rank with all invariant factors 1
void require_split_injection(const ChainMap& f, const std::string& what) {
    f.validate();
    for (const auto& [k, labels] : f.src->pieces) {
        IntMat m = f.component(k);
        SnfSummary s = snf_summary(m);
        if (s.rank != m.cols())
            throw SystemNotCommuting(what + " is not injective in degree " +
                                     std::to_string(k));
        if (!s.torsion.empty())
            throw SystemNotCommuting(what + " is not split in degree " +
                                     std::to_string(k));
    }
}

void require_invertible(const ChainMap& f, const std::string& what) {
    f.validate();
    for (const auto& [k, labels] : f.src->pieces) {
        IntMat m = f.component(k);
        if (m.rows() != m.cols())
            throw SystemNotCommuting(what + " is not square");
        Int det = determinant(m);
        if (det != 1 && det != -1)
            throw SystemNotCommuting(what + " is not invertible over Z");
    }
}

}  // namespace

SystemReport verify_system(const DirectedSystem& s) {
    s.validate_shapes();
    SystemReport report;
    const size_t n = s.stages.size();
    for (size_t d = 0; d + 1 < n; ++d) {
        require_split_injection(s.inclusions[d],
                                "inclusion " + std::to_string(d + 1));
        require_split_injection(s.target_inclusions[d],
                                "target inclusion " + std::to_string(d + 1));
        require_invertible(s.corrections[d],
                           "correction " + std::to_string(d + 1));
        s.comparisons[d].validate();
        s.comparisons[d + 1].validate();
        long long lo = std::min(s.stages[d].min_degree(),
                                s.targets[d].min_degree());
        long long hi = std::max(s.stages[d].max_degree(),
                                s.targets[d].max_degree());
        for (long long k = lo; k <= hi; ++k) {
            IntMat lhs = s.target_inclusions[d].component(k) *
                         (s.corrections[d].component(k) *
                          s.comparisons[d].component(k));
            IntMat rhs = s.comparisons[d + 1].component(k) *
                         s.inclusions[d].component(k);
            IntMat res = lhs - rhs;
            if (!res.is_zero())
                report.findings.push_back({d + 1, k, res});
        }
    }
    return report;
}

DirectLimit direct_limit(const DirectedSystem& s) {
    SystemReport rep = verify_system(s);
    if (!rep.empty())
        throw SystemNotCommuting(
            "squares do not commute; run verify_system for the residuals");
    const size_t n = s.stages.size();
    DirectLimit out;
    out.complex = s.stages[n - 1];
    out.complex.name = "colim(" + s.stages[0].name + "..)";
    // endpoints stay inside the caller's system, which outlives the result
    out.limit_map = s.comparisons[n - 1];

    // stabilization: the first stage from which every inclusion is an
    // isomorphism (detected by rank)
    size_t stab = n - 1;
    for (size_t d = n - 1; d-- > 0;) {
        bool iso = true;
        for (const auto& [k, labels] : s.stages[d + 1].pieces)
            if (s.stages[d].dim(k) != labels.size()) iso = false;
        if (iso)
            stab = d;
        else
            break;
    }
    out.stabilized_at = stab;
    return out;
}

}  // namespace ainfty
