#pragma once

// Transformation systems: operators L^X -> L^Y together with an onto index
// map, validated against the axioms that characterize direct transforms.
// Upper systems preserve joins of families and send point indicators to top
// exactly at their own index; lower systems are the order duals. Converters
// go both ways between systems and fuzzy partitions, and a duality check
// relates an upper and a lower system through an involutive negator.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lft/connectives.hpp"
#include "lft/fuzzy.hpp"
#include "lft/partition.hpp"
#include "lft/transforms.hpp"

namespace lft {

// An operator from fuzzy sets on `universe` to fuzzy sets on `index_set`,
// tagged with the transform kind it claims to implement. The onto map sends
// each point of the universe to an index; construction verifies it is
// surjective. The operator itself is an opaque callable so externally
// computed systems can be wrapped and validated.
class TransformationSystem {
public:
    using Operator = std::function<LFuzzySet(const LFuzzySet&)>;

    // Throws std::invalid_argument when onto_map has the wrong length, points
    // outside the index set, or misses some index. A negator may be attached
    // for use as the default in extraction and duality checks.
    static TransformationSystem make(std::string name,
                                     std::shared_ptr<const Lattice> lattice,
                                     std::shared_ptr<const Universe> universe,
                                     std::shared_ptr<const Universe> index_set,
                                     std::vector<std::size_t> onto_map,
                                     DirectKind kind,
                                     Operator op,
                                     std::optional<Negator> negator = std::nullopt);

    // Applies the operator; checks the input lives on (universe, lattice) and
    // the output on (index_set, lattice), else throws CarrierMismatchError.
    LFuzzySet apply(const LFuzzySet& f) const;

    const std::string& name() const { return name_; }
    const Lattice& lattice() const { return *lattice_; }
    std::shared_ptr<const Lattice> lattice_ptr() const { return lattice_; }
    const Universe& universe() const { return *universe_; }
    std::shared_ptr<const Universe> universe_ptr() const { return universe_; }
    const Universe& index_set() const { return *index_set_; }
    std::shared_ptr<const Universe> index_set_ptr() const { return index_set_; }
    const std::vector<std::size_t>& onto_map() const { return onto_map_; }
    DirectKind kind() const { return kind_; }
    bool upper() const { return is_upper(kind_); }
    // Negator attached at construction, if any.
    const Negator* negator() const { return negator_ ? &*negator_ : nullptr; }

private:
    TransformationSystem() = default;
    std::string name_;
    std::shared_ptr<const Lattice> lattice_;
    std::shared_ptr<const Universe> universe_;
    std::shared_ptr<const Universe> index_set_;
    std::vector<std::size_t> onto_map_;
    DirectKind kind_ = DirectKind::UpperTheta;
    Operator op_;
    std::optional<Negator> negator_;
};

struct SystemCheckOptions {
    std::size_t budget = 4096;  // enumeration budget for the test family
    std::uint64_t seed = 1;     // drives sampling when enumeration is capped
};

// Axioms for an upper system, with F the supplied connective:
//   (i)  U[join of a family] = join of the U-images (checked on pairs from
//        the enumerated family, the whole family at once, and the empty
//        family, i.e. U[constant bottom] = constant bottom);
//   (ii) U[F(u, f)] = F(u, U[f]) for every constant u and enumerated f;
//   (iii) U[indicator of x](y) = top exactly when y is x's index, for all
//        x and y.
// The connective's role must match the system's kind tag (overlap for
// upper-theta, co-residual implicator for upper-coresidual), else
// KindMismatchError; the carrier must be finite, else
// FiniteCarrierRequiredError.
ValidationReport validate_upper_system(const TransformationSystem& sys,
                                       const BinaryConnective& conn,
                                       const SystemCheckOptions& opts = {});

// Dual axioms for a lower system H: meets instead of joins (empty family:
// H[constant top] = constant top), the same constants axiom, and
// N(H[N(indicator of x)])(y) = top exactly when y is x's index. The negator
// is the one the axioms are read through.
ValidationReport validate_lower_system(const TransformationSystem& sys,
                                       const BinaryConnective& conn,
                                       const Negator& neg,
                                       const SystemCheckOptions& opts = {});

// Wraps the direct transform of the given kind over the partition as a
// system: index set = member labels, onto map = the partition's index map.
// Throws KindMismatchError when the connective's role does not fit the kind
// and MissingNegatorError when the kind needs a negator and none is given.
TransformationSystem system_from_partition(const LFuzzyPartition& p,
                                           DirectKind kind,
                                           const BinaryConnective& conn,
                                           const Negator* neg = nullptr);

// Reads the partition back out of a system: member A_y at x is U[1_x](y) for
// upper systems and N(H[N(1_x)])(y) for lower ones (`neg` falls back to the
// system's attached negator; lower systems require one). Throws
// ExtractionNotPartitionError when the extracted family fails partition
// validation or its index map differs from the system's onto map.
LFuzzyPartition partition_from_system(const TransformationSystem& sys,
                                      const Negator* neg = nullptr);

// For an upper U and lower H over the same universe, index set, and onto
// map: checks U[f] = N(H[N(f)]) and H[f] = N(U[N(f)]) over the enumerated
// family, that N is involutive, and that both systems extract the same
// partition. Structural mismatches (carrier, universe, index set) throw
// CarrierMismatchError; everything else is reported as violations.
ValidationReport check_system_duality(const TransformationSystem& upper,
                                      const TransformationSystem& lower,
                                      const Negator& neg,
                                      const SystemCheckOptions& opts = {});

// Pointwise decomposition of every fuzzy set into its values at single
// points. With 1_x the indicator of x and bold constants written plainly:
//   (i-a)  f = join_x theta(f(x), 1_x)            [needs theta with neutral top]
//   (i-b)  f = meet_x eta(f(x), N(1_x))           [needs eta with neutral bottom and N]
//   (ii-a) f = join_x I_eta(N_Ieta(f(x)), 1_x)    [needs involutive induced N_Ieta]
//   (ii-b) f = meet_x I_theta(N_Itheta(f(x)), N_Itheta(1_x)) [involutive N_Itheta]
// Null connectives and unmet hypotheses skip the identity with a note; the
// rest are checked over the enumerated family.
ValidationReport singleton_decomposition_check(std::shared_ptr<const Lattice> lat,
                                               const BinaryConnective* theta,
                                               const BinaryConnective* eta,
                                               const Negator* neg,
                                               const BinaryConnective* i_theta,
                                               const BinaryConnective* i_eta,
                                               std::shared_ptr<const Universe> universe,
                                               const SystemCheckOptions& opts = {});

// Every input the validators and the partition extractor will feed an
// operator of this shape, deduplicated, in a deterministic order. Supplying
// the negator also covers the inputs used by lower axiom (iii), and the
// negated family used by check_system_duality. Backing a system with
// outputs for exactly this list (see system_from_batch) lets an externally
// computed operator run through the validators.
std::vector<LFuzzySet> validation_inputs(DirectKind kind,
                                         std::shared_ptr<const Lattice> lat,
                                         std::shared_ptr<const Universe> universe,
                                         const BinaryConnective& conn,
                                         const Negator* neg = nullptr,
                                         const SystemCheckOptions& opts = {});

// System whose operator answers by value lookup in (inputs, outputs); an
// input not in the list raises MissingBatchOutputError. Input/output lists
// must have equal length; outputs live on the index set.
TransformationSystem system_from_batch(std::string name,
                                       std::shared_ptr<const Lattice> lattice,
                                       std::shared_ptr<const Universe> universe,
                                       std::shared_ptr<const Universe> index_set,
                                       std::vector<std::size_t> onto_map,
                                       DirectKind kind,
                                       std::vector<LFuzzySet> inputs,
                                       std::vector<LFuzzySet> outputs,
                                       std::optional<Negator> negator = std::nullopt);

} // namespace lft
