#ifndef PCURV_REPORT_HPP
#define PCURV_REPORT_HPP

/* Output composition for the CLI: one JSON renderer and one plain-text
   renderer per subcommand.  In JSON, every integer that is unbounded in
   principle (primes, cutoffs, resultant data, rationals) is emitted as a
   decimal string so consumers never lose precision to doubles. */

#include <cstdint>
#include <string>
#include <vector>

#include "pcurv/bench.hpp"
#include "pcurv/bounds.hpp"
#include "pcurv/deciders.hpp"
#include "pcurv/hermite_pade.hpp"
#include "pcurv/pcurvature.hpp"

namespace pcurv {

std::string json_decide(const HondaResult& r);
std::string text_decide(const HondaResult& r);

std::string json_curvature(const CurvatureCheck& c, std::uint64_t p);
std::string text_curvature(const CurvatureCheck& c, std::uint64_t p);

std::string json_curvature_naive(const ModRatFun& f, std::uint64_t p);
std::string text_curvature_naive(const ModRatFun& f, std::uint64_t p);

std::string json_bounds(const BoundsReport& rep);
std::string text_bounds(const BoundsReport& rep);

std::string json_kronecker(const KroneckerVerdict& v);
std::string text_kronecker(const KroneckerVerdict& v);

std::string json_hp(const HPCertificate& c);
std::string text_hp(const HPCertificate& c);

std::string json_bench(const std::vector<BenchRow>& rows);

}  // namespace pcurv

#endif
