#pragma once

#include <stdexcept>
#include <string>

namespace mendel {

enum class errc {
  non_prime_power_factor,
  not_homomorphism,
  not_bijective,
  bound_exceeded,
  not_cml,
  not_nuclear,
  i_minus_k_not_bijective,
  not_mendelsohn,
  search_budget_exceeded,
  pair_covered,
  bad_order,
  not_latin,
  not_mendelsohn_quasigroup,
  not_automorphism,
  condition_m_violated,
  order_not_one_mod_six,
  order_not_seven_mod_twelve,
  not_in_spectrum,
  consistency_failure,
  invalid_sts,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::non_prime_power_factor: return "NonPrimePowerFactor";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::not_bijective: return "NotBijective";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::not_cml: return "NotCML";
    case errc::not_nuclear: return "NotNuclear";
    case errc::i_minus_k_not_bijective: return "IminusKNotBijective";
    case errc::not_mendelsohn: return "NotMendelsohn";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::pair_covered: return "PairCovered";
    case errc::bad_order: return "BadOrder";
    case errc::not_latin: return "NotLatin";
    case errc::not_mendelsohn_quasigroup: return "NotMendelsohnQuasigroup";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::condition_m_violated: return "ConditionMViolated";
    case errc::order_not_one_mod_six: return "OrderNotOneModSix";
    case errc::order_not_seven_mod_twelve: return "OrderNotSevenModTwelve";
    case errc::not_in_spectrum: return "NotInSpectrum";
    case errc::consistency_failure: return "ConsistencyFailure";
    case errc::invalid_sts: return "InvalidSTS";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace mendel
