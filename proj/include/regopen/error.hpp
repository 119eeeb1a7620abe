#ifndef REGOPEN_ERROR_HPP
#define REGOPEN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regopen {

enum class Errc {
  IndexOutOfRange,
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  EmptySubspace,
  SizeMismatch,
  InvalidMetric,
  InvalidLattice,
  NotBoolean,
  SizeGuardExceeded,
  NotRegularOpen,
  NotOpen,
  NotDense,
  ContainmentHolds,
  CompositionNotIdentity,
  CoresNotHomeomorphic,
  CompositionNotIso,
  NotABasis,
  NotInclusionPreserving,
  UnknownSuite,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case Errc::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case Errc::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case Errc::EmptySubspace: return "EmptySubspace";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidMetric: return "InvalidMetric";
    case Errc::InvalidLattice: return "InvalidLattice";
    case Errc::NotBoolean: return "NotBoolean";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::NotRegularOpen: return "NotRegularOpen";
    case Errc::NotOpen: return "NotOpen";
    case Errc::NotDense: return "NotDense";
    case Errc::ContainmentHolds: return "ContainmentHolds";
    case Errc::CompositionNotIdentity: return "CompositionNotIdentity";
    case Errc::CoresNotHomeomorphic: return "CoresNotHomeomorphic";
    case Errc::CompositionNotIso: return "CompositionNotIso";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotInclusionPreserving: return "NotInclusionPreserving";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code and,
/// where one exists, a witness. Set-valued witnesses are stored as raw masks
/// (bit i set iff point i is a member); index witnesses refer to lattice
/// elements or points depending on the operation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::vector<unsigned long long> set_witness = {},
        std::vector<std::size_t> index_witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        set_witness_(std::move(set_witness)),
        index_witness_(std::move(index_witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<unsigned long long>& set_witness() const noexcept { return set_witness_; }
  const std::vector<std::size_t>& index_witness() const noexcept { return index_witness_; }

 private:
  Errc code_;
  std::vector<unsigned long long> set_witness_;
  std::vector<std::size_t> index_witness_;
};

}  // namespace regopen

#endif  // REGOPEN_ERROR_HPP
