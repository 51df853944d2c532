#pragma once

#include <stdexcept>
#include <string>

namespace latrep {

// Base class for all latrep errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// poset_from_covers: the reflexive-transitive closure violates antisymmetry.
struct CycleDetected : Error {
  explicit CycleDetected(const std::string& what) : Error(what) {}
};

// An enumeration would exceed a configured bound.
struct SizeLimitExceeded : Error {
  explicit SizeLimitExceeded(const std::string& what) : Error(what) {}
};

// A poset is not a lattice; the message names a witness pair.
struct NotALattice : Error {
  NotALattice(const std::string& what, int a, int b) : Error(what), x(a), y(b) {}
  int x, y;
};

struct NotDistributive : Error {
  explicit NotDistributive(const std::string& what) : Error(what) {}
};

// separating_prime called with x <= y.
struct NotSeparable : Error {
  explicit NotSeparable(const std::string& what) : Error(what) {}
};

// complement of a non-prime filter fails the ideal axioms.
struct NotPrime : Error {
  explicit NotPrime(const std::string& what) : Error(what) {}
};

struct UnsupportedLattice : Error {
  explicit UnsupportedLattice(const std::string& what) : Error(what) {}
};

struct WindowTooLarge : Error {
  explicit WindowTooLarge(const std::string& what) : Error(what) {}
};

// raise with x already in the prime filter (dually for lower).
struct AlreadyMember : Error {
  explicit AlreadyMember(const std::string& what) : Error(what) {}
};

struct NotACovering : Error {
  explicit NotACovering(const std::string& what) : Error(what) {}
};

struct NotComparable : Error {
  explicit NotComparable(const std::string& what) : Error(what) {}
};

// directedness_witness called on coverings that are not transposes of the base.
struct HypothesisFailed : Error {
  explicit HypothesisFailed(const std::string& what) : Error(what) {}
};

// finite-difference test across descriptors with no common symbolic base.
struct IncomparableBases : Error {
  explicit IncomparableBases(const std::string& what) : Error(what) {}
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

struct PluginError : Error {
  explicit PluginError(const std::string& what) : Error(what) {}
};

}  // namespace latrep
