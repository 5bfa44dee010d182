#pragma once

#include <stdexcept>
#include <string>

namespace falsetheta {

/// The same part size was flagged overlined more than once; only the first
/// appearance of a size may carry an overline.
struct DuplicateOverline : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A part size was zero or negative.
struct NonPositivePart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A (k, overpartition) pair violates its family's size or overline bounds.
struct InvalidPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Family parameters out of range (modulus < 2, or residue outside 1..m-1).
struct InvalidFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requested on a family it is not defined for.
struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

/// z-weight requested for a pair without a z statistic.
struct ZWeightUndefined : std::logic_error {
    using std::logic_error::logic_error;
};

/// Series operands disagree on the q-truncation order.
struct TruncationMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series inversion requires the q^0 slice to be exactly 1.
struct NonUnitConstant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An involution dispatch produced an invalid or undefined result. This is a
/// bug in the maps, never a legal outcome.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace falsetheta
