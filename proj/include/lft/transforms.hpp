#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lft/partition.hpp"

namespace lft {

// The four direct transforms. Each aggregates one connective over the
// universe, one component per partition member A_j:
//   upper-theta        F_j = ∨_x θ(A_j(x), f(x))            (overlap, no negator)
//   lower-eta          F_j = ∧_x η(N(A_j(x)), f(x))         (grouping + negator)
//   upper-coresidual   F_j = ∨_x I_η(N(A_j(x)), f(x))       (co-residual + negator)
//   lower-residual     F_j = ∧_x I_θ(A_j(x), f(x))          (residual, no negator)
enum class DirectKind { UpperTheta, LowerEta, UpperCoResidual, LowerResidual };

// The four inverse transforms, one paired with each direct kind:
//   upper-residual     f̂(x) = ∧_j I_θ(A_j(x), F_j)     from upper-theta components
//   lower-theta        f̂(x) = ∨_j θ(A_j(x), F_j)       from lower-residual components
//   upper-eta          f̂(x) = ∧_j η(N(A_j(x)), F_j)    from upper-coresidual components
//   lower-coresidual   f̂(x) = ∨_j I_η(N(A_j(x)), F_j)  from lower-eta components
enum class InverseKind { UpperResidual, LowerTheta, UpperEta, LowerCoResidual };

std::string to_string(DirectKind k);
std::string to_string(InverseKind k);
std::optional<DirectKind> direct_kind_from_string(const std::string& s);

// Connective role each kind consumes, and whether a negator is involved.
ConnectiveKind required_connective(DirectKind k);
ConnectiveKind required_connective(InverseKind k);
bool needs_negator(DirectKind k);
bool needs_negator(InverseKind k);

// Upper kinds fold with a join over the universe; lower kinds with a meet.
bool is_upper(DirectKind k);

// The inverse kind that reconstructs from a direct kind's components, and back.
InverseKind paired_inverse(DirectKind k);
DirectKind paired_direct(InverseKind k);

// One component per partition member, tagged with the kind that produced
// them and the member labels, so downstream pairing can be checked.
struct DirectResult {
    DirectKind kind;
    std::vector<std::string> member_labels;
    std::vector<Elem> components;
    std::shared_ptr<const Lattice> lattice;
};

// Computes the direct transform of `f` against partition `p`. The connective
// must have the role `required_connective(kind)` (KindMismatchError), a
// negator must be present exactly when the kind uses one (MissingNegatorError;
// a superfluous negator is ignored), and partition, connective, negator and
// input must share carrier and universe (CarrierMismatchError).
DirectResult direct_transform(DirectKind kind, const LFuzzyPartition& p,
                              const BinaryConnective& conn, const Negator* neg,
                              const LFuzzySet& f);

// Reconstructs a fuzzy set from components. `components.kind` must be
// `paired_direct(kind)` and the connective/negator requirements follow the
// inverse kind; component labels must match the partition's members.
LFuzzySet inverse_transform(InverseKind kind, const LFuzzyPartition& p,
                            const BinaryConnective& conn, const Negator* neg,
                            const DirectResult& components);

// Convenience overload that picks the paired inverse kind itself.
LFuzzySet inverse_transform(const LFuzzyPartition& p, const BinaryConnective& conn,
                            const Negator* neg, const DirectResult& components);

} // namespace lft
