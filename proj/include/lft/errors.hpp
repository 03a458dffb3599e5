#pragma once

#include <stdexcept>
#include <string>

namespace lft {

// Base class for every error this library raises on purpose. Each concrete
// error keeps a stable `code()` string so callers (and the CLI) can match on
// the condition without parsing the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define LFT_DEFINE_ERROR(NAME, CODE)                                          \
    class NAME : public Error {                                               \
    public:                                                                   \
        explicit NAME(const std::string& message) : Error(CODE, message) {}   \
    }

// Order/lattice construction.
LFT_DEFINE_ERROR(NotALatticeError, "NotALattice");
LFT_DEFINE_ERROR(CyclicOrderError, "CyclicOrder");

// Family folds over an empty index set under the strict policy.
LFT_DEFINE_ERROR(EmptyFamilyError, "EmptyFamily");

// An element, set, connective, or partition was used with a carrier other
// than the one it belongs to.
LFT_DEFINE_ERROR(CarrierMismatchError, "CarrierMismatch");

// Connective derivation on a carrier with no tabulation and no known form.
LFT_DEFINE_ERROR(NoClosedFormError, "NoClosedForm");

// Transform wiring.
LFT_DEFINE_ERROR(KindMismatchError, "KindMismatch");
LFT_DEFINE_ERROR(MissingNegatorError, "MissingNegator");
LFT_DEFINE_ERROR(UnknownPointError, "UnknownPoint");

// Partition construction/validation.
LFT_DEFINE_ERROR(NotNormalError, "NotNormal");
LFT_DEFINE_ERROR(CoresOverlapError, "CoresOverlap");
LFT_DEFINE_ERROR(CoresDontCoverError, "CoresDontCover");
LFT_DEFINE_ERROR(BlocksInvalidError, "BlocksInvalid");

// System <-> partition extraction produced member sets that fail validation.
LFT_DEFINE_ERROR(ExtractionNotPartitionError, "ExtractionNotPartition");

// An operation that enumerates or quantifies over the whole carrier was
// asked to run on an infinite one.
LFT_DEFINE_ERROR(FiniteCarrierRequiredError, "FiniteCarrierRequired");

// A batch-backed operator was asked for an input outside its precomputed set.
LFT_DEFINE_ERROR(MissingBatchOutputError, "MissingBatchOutput");

// Law registry.
LFT_DEFINE_ERROR(UnknownLawError, "UnknownLaw");
LFT_DEFINE_ERROR(MissingContextSlotError, "MissingContextSlot");

// File formats.
LFT_DEFINE_ERROR(ParseError, "ParseError");
LFT_DEFINE_ERROR(UnsupportedFormatError, "UnsupportedFormat");
LFT_DEFINE_ERROR(NormalizationDegenerateError, "NormalizationDegenerate");

#undef LFT_DEFINE_ERROR

} // namespace lft
