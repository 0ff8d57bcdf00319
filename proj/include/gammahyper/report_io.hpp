#pragma once

#include "gammahyper/hyperasym.hpp"
#include "gammahyper/late_coeffs.hpp"
#include "gammahyper/series_bounds.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gammahyper {

using Json = nlohmann::ordered_json;

/// Reals go out as decimal strings so no digits are lost to binary64.
inline constexpr int kReportDigits = 30;

Json real_json(const Real& x, int digits = kReportDigits);
Json complex_json(const Complex& z, int digits = kReportDigits);
Json big_json(const BigComplex& z, int digits = kReportDigits);
Json big_json(const BigReal& x, int digits = kReportDigits);
Json point_json(const SectorPoint& z, int digits = kReportDigits);

Json to_json(const RemainderReport& r, int digits = kReportDigits);
Json to_json(const HyperExpansion& h, int digits = kReportDigits);
Json to_json(const StokesProfileRow& row, int digits = kReportDigits);
Json to_json(const LateCoeffApproximation& a, int digits = kReportDigits);
Json to_json(const TableReproduction& t, int digits = 45);

/// |true remainder| - its error bound <= bound
bool bound_holds(const RemainderReport& r, const Real& bound);

/// One row per (report, bound):
/// z_re,z_im,theta,N,kind,bound_name,bound,abs_remainder,slack,holds
std::string remainder_csv(const std::vector<RemainderReport>& reports, int digits = 20);

/// theta,re_mult,im_mult,erf_pred,residual at 25 significant digits.
std::string profile_csv(const std::vector<StokesProfileRow>& rows);
inline constexpr int kProfileDigits = 25;

}  // namespace gammahyper
