#ifndef QLAB_ERROR_HPP
#define QLAB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlab {

/// Element of a finite lattice, as a dense index 0..n-1.
using Elem = std::uint32_t;

enum class ErrorKind {
  NotALattice,
  NotBounded,
  CycleDetected,
  InvalidInput,
  NotSupPreserving,
  NotMeetPreserving,
  NotMonotone,
  BudgetExceeded,
  NotAssociative,
  NotDistributive,
  BottomNotAbsorbed,
  NotDualizing,
  CoincidenceFailed,
  NotInjective,
  NotADuality,
  NotANucleus,
  NotSerreGC,
  NotSerreDualityOnQuotient,
  NotAssociativeRelation,
  NotWeaklySymmetric,
  NotTight,
  NotDistinctAtoms,
  ValidationFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library: a kind, a human message and the
/// element indices that witness the violation (possibly empty).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<Elem> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Elem> witness_;
};

/// Size limits for the exhaustive searches.
struct Budget {
  std::uint64_t max_candidates = 1'000'000'000ULL;
  unsigned max_powerset = 20;
};

}  // namespace qlab

#endif  // QLAB_ERROR_HPP
