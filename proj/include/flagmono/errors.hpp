#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagmono {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basis exchange failed; carries the witnessing basis B1 and element x for
// which no exchange partner exists.
struct NotAMatroid : Error {
    NotAMatroid(const std::string& msg, std::uint32_t witness_basis = 0, int witness_element = 0)
        : Error(msg), basis(witness_basis), element(witness_element) {}
    std::uint32_t basis;
    int element;
};

struct EmptyBases : Error { using Error::Error; };
struct GroundSetTooLarge : Error { using Error::Error; };
struct InvalidRank : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct GroundSetMismatch : Error { using Error::Error; };
struct NotAWeakMap : Error { using Error::Error; };
struct NotRankPreservingWeak : Error { using Error::Error; };
struct RankOutOfRange : Error { using Error::Error; };
struct FlagMismatch : Error { using Error::Error; };
struct NotFullChain : Error { using Error::Error; };
struct NotDescentChain : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// A computation contradicted a theorem the construction relies on.  Thrown by
// constructions that assert theorem-level invariants; the verification suite
// converts these into report failures.
struct TheoremViolation : Error { using Error::Error; };

}  // namespace flagmono
