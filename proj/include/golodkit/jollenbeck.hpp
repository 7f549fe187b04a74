#pragma once

#include "golodkit/morse.hpp"

#include <string>
#include <vector>

namespace golodkit {

struct JollenbeckStep {
    int stage = 0;
    int substep = 0;
    Arrow seed;                 // the minimal admissible arrow chosen
    std::size_t arrows_added = 0;
    bool incremental = false;   // the full family was cyclic, arrows added one by one
};

struct JollenbeckReport {
    Matching matching;          // arrows carry (stage, substep)
    std::vector<JollenbeckStep> steps;
    bool valid_on_taylor = false;
    bool maximal = false;       // final complex is minimal
    bool stalled = false;       // no admissible arrow left but the complex is not minimal
    std::string detail;
    ComplexPtr final_complex;
};

/// Staged construction on the Taylor complex. In stage i (1 ≤ i ≤ r) and
/// in the current complex, an admissible arrow is an invertible edge u → v
/// with cl(u) = 1 and cl(v) = i. Among admissible arrows with no proper
/// admissible sub-arrow (u' ⊆ u, v' ⊆ v) the first in canonical order is
/// taken, together with every uw → vw for w disjoint from u with
/// gcd(m_w, m_u) = 1 whose edge is present and invertible. The complex is
/// then replaced by its Morse complex and the stage repeats until it has no
/// admissible arrow.
JollenbeckReport jollenbeck_matching(const ComplexPtr& taylor);

struct StandardVerdict {
    bool standard = true;
    int violated_clause = 0; // 1..5, 0 when standard
    std::string detail;
};

/// Checks, in order: (1) m_u = m_v on arrows; (2) m_u ≠ m_v on every edge
/// of the Morse complex; (3) each stage is a Morse matching of the complex
/// left by the earlier stages, and the union is one of the Taylor complex;
/// (4) cl(v) - cl(u) = i - 1 and |u| = |v| + 1 in stage i; (5) with B_i the
/// stage-i arrows having cl(u) = 1, stage i is exactly B_i together with
/// all uw → vw, w ≠ ∅ disjoint from u and coprime to m_u.
/// Arrows without a stage are placed in stage 1 + cl(v) - cl(u).
StandardVerdict is_standard_matching(const ComplexPtr& taylor, const Matching& m);

} // namespace golodkit
