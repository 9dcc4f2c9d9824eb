#ifndef CLASSLAB_ERROR_HPP
#define CLASSLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace classlab {

enum class errc {
  // group construction
  empty_generators,
  degree_mismatch,
  order_cap_exceeded,
  not_an_automorphism,
  action_inconsistent_with_relations,
  // element sets / subgroup machinery
  index_out_of_range,
  not_closed,
  not_normal,
  trivial_group,
  not_invariant_set,
  // class algebra
  identity_class,
  // cyclotomic / character tables
  zero_conductor,
  eigen_split_failure,
  length_mismatch,
  non_integer_result,
  // verifiers
  pattern_mismatch,
  // parsing / catalog
  malformed_cycle,
  point_exceeds_degree,
  parse_error,
  duplicate_name,
  construction_invalid,
  golden_mismatch,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::empty_generators: return "EmptyGenerators";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::not_an_automorphism: return "NotAnAutomorphism";
    case errc::action_inconsistent_with_relations: return "ActionInconsistentWithRelations";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_closed: return "NotClosed";
    case errc::not_normal: return "NotNormal";
    case errc::trivial_group: return "TrivialGroup";
    case errc::not_invariant_set: return "NotInvariantSet";
    case errc::identity_class: return "IdentityClass";
    case errc::zero_conductor: return "ZeroConductor";
    case errc::eigen_split_failure: return "EigenSplitFailure";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::pattern_mismatch: return "PatternMismatch";
    case errc::malformed_cycle: return "MalformedCycle";
    case errc::point_exceeds_degree: return "PointExceedsDegree";
    case errc::parse_error: return "ParseError";
    case errc::duplicate_name: return "DuplicateName";
    case errc::construction_invalid: return "ConstructionInvalid";
    case errc::golden_mismatch: return "GoldenMismatch";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace classlab

#endif  // CLASSLAB_ERROR_HPP
