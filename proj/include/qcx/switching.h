// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_SWITCHING_H
#define QCX_SWITCHING_H

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qcx/codes.h"
#include "qcx/f2.h"

namespace qcx {

/// Basis of the group of signed operators lying in both <s1> and <s2>.
/// Each input must generate an abelian group without -I.
std::vector<PauliOperator> signed_intersection(const std::vector<PauliOperator> &s1,
                                               const std::vector<PauliOperator> &s2, size_t n);

struct CodeSwitchProtocol {
    SubsystemCode code1;
    SubsystemCode code2;
    SubsystemCode parent;  // gauge generators of both codes
    std::vector<PauliOperator> parent_stabilizer;
    /// False when the signed intersection disagrees with the parent's centre.
    bool consistent = true;
    std::string diagnostic;
};

CodeSwitchProtocol protocol_from_codes(const SubsystemCode &c1, const SubsystemCode &c2);
Verdict protocol_verdict(const CodeSwitchProtocol &p);

struct CsstAudit {
    bool triorthogonal = true;
    std::vector<std::pair<size_t, size_t>> pair_violations;
    std::vector<std::array<size_t, 3>> triple_violations;
    bool weights_checked = false;  // false above the enumeration cap
    bool weights_mod8_ok = false;
    bool complement_weights_mod8_ok = false;
    long long dim_gap = 0;
};

constexpr size_t kWeightEnumerationCap = 20;

/// The last c2_row_count rows of g1 generate C2.
CsstAudit triorthogonality_audit(const BinaryMatrix &g1, size_t c2_row_count);

/// True iff swapping the X and Z halves maps the row space into itself.
bool eta_invariance(const BinaryMatrix &stabilizer_rows);

/// Pure X (letter 'X') or pure Z supports inside the span of the given operators.
BinaryMatrix pure_part(const std::vector<PauliOperator> &ops, size_t n, char letter);

struct BoundCertificate {
    /// Hypothesis name with "ok", "failed" or "unchecked".
    std::vector<std::pair<std::string, std::string>> hypotheses;
    std::string t_code;  // which code plays the transversal-T role
    size_t c2_dim = 0;
    size_t c1_perp_dim = 0;
    std::vector<BitVec> c3;
    size_t dim_v = 0;
    size_t dim_v_cap_w2 = 0;
    size_t q1 = 0;  // dim V - dim(V cap W2), at most dim W1/(W1 cap W2)
    size_t q2 = 0;  // dim(V cap W2), at most dim W2/(W1 cap W2)
    size_t w1_quotient = 0;
    size_t w2_quotient = 0;
    size_t bound = 0;  // ceil(dim V / 2)
    size_t actual_g = 0;
    bool holds = false;
    CsstAudit audit;
};

struct CertificateOptions {
    /// Verify that the all-ones X and Z operators are logical for the parent.
    bool check_logicals = false;
};

/// Picks the CSS code as the transversal-T code and the other as the
/// transversal-H code, then evaluates every quantity in the counting argument.
BoundCertificate csst_bound_certificate(const CodeSwitchProtocol &p, const CertificateOptions &opts = {});

}  // namespace qcx

#endif
