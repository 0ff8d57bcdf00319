#include "gammahyper/report_io.hpp"

#include <sstream>

namespace gammahyper {

Json real_json(const Real& x, int digits) { return x.to_sci(digits); }

Json complex_json(const Complex& z, int digits) {
  return Json{{"re", z.re.to_sci(digits)}, {"im", z.im.to_sci(digits)}};
}

Json big_json(const BigComplex& z, int digits) {
  Json j = complex_json(z.value, digits);
  j["error_bound"] = z.error_bound.to_sci(6);
  return j;
}

Json big_json(const BigReal& x, int digits) {
  return Json{{"value", x.value.to_sci(digits)}, {"error_bound", x.error_bound.to_sci(6)}};
}

Json point_json(const SectorPoint& z, int digits) {
  Json j = complex_json(z.z, digits);
  j["modulus"] = z.modulus.to_sci(digits);
  j["theta"] = z.theta.to_sci(digits);
  return j;
}

bool bound_holds(const RemainderReport& r, const Real& bound) {
  return abs(r.true_remainder.value) - r.true_remainder.error_bound <= bound;
}

Json to_json(const RemainderReport& r, int digits) {
  Json bounds = Json::object();
  for (const auto& [name, b] : r.bounds) bounds[name] = b.to_sci(digits);
  Json enc = nullptr;
  if (r.enclosure)
    enc = Json{{"low", r.enclosure->low.to_sci(digits)},
               {"high", r.enclosure->high.to_sci(digits)},
               {"abs_bound", r.enclosure->abs_bound.to_sci(digits)}};
  return Json{{"z", point_json(r.z, digits)},
              {"N", r.N},
              {"kind", std::string(kind_name(r.kind))},
              {"partial", complex_json(r.partial, digits)},
              {"true_remainder", big_json(r.true_remainder, digits)},
              {"bounds", bounds},
              {"enclosure", enc},
              {"theta_factors",
               {{"theorem2", r.theta_factors.theorem2.to_sci(digits)},
                {"theorem3", r.theta_factors.theorem3.to_sci(digits)},
                {"boyd", r.theta_factors.boyd.to_sci(digits)}}}};
}

Json to_json(const HyperExpansion& h, int digits) {
  return Json{{"z", point_json(h.z, digits)},
              {"N", h.N},
              {"M", h.M},
              {"kind", std::string(kind_name(h.kind))},
              {"terminant_sum_up", big_json(h.terminant_sum_up, digits)},
              {"terminant_sum_down", big_json(h.terminant_sum_down, digits)},
              {"R_N", big_json(h.R_N, digits)},
              {"R_NM", big_json(h.R_NM, digits)}};
}

Json to_json(const StokesProfileRow& row, int digits) {
  return Json{{"theta", row.theta.to_sci(digits)},
              {"effective_multiplier", complex_json(row.effective_multiplier, digits)},
              {"erf_prediction", row.erf_prediction.to_sci(digits)},
              {"residual", row.residual.to_sci(digits)}};
}

Json to_json(const LateCoeffApproximation& a, int digits) {
  const Bits bits = 4 * static_cast<Bits>(digits) + 64;
  return Json{{"target_index", a.target_index},
              {"n", a.n},
              {"parity", std::string(parity_name(a.parity))},
              {"method", std::string(method_name(a.method))},
              {"K", a.K},
              {"value", big_json(a.value, digits)},
              {"exact", Real(a.exact, bits).to_sci(digits)},
              {"exact_rational", a.exact.get_str()},
              {"error", a.error.to_sci(digits)}};
}

Json to_json(const TableReproduction& t, int digits) {
  const Bits bits = 4 * static_cast<Bits>(digits) + 64;
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r, digits));
  return Json{{"table", t.which == TableId::table1 ? 1 : 2},
              {"target_index", t.target_index},
              {"n", t.n},
              {"K", t.K},
              {"exact", Real(t.exact, bits).to_sci(digits)},
              {"rows", rows}};
}

std::string remainder_csv(const std::vector<RemainderReport>& reports, int digits) {
  std::ostringstream os;
  os << "z_re,z_im,theta,N,kind,bound_name,bound,abs_remainder,slack,holds\n";
  for (const auto& r : reports) {
    Real a = abs(r.true_remainder.value);
    for (const auto& [name, b] : r.bounds)
      os << r.z.z.re.to_sci(digits) << ',' << r.z.z.im.to_sci(digits) << ',' << r.z.theta.to_sci(digits) << ','
         << r.N << ',' << kind_name(r.kind) << ',' << name << ',' << b.to_sci(digits) << ',' << a.to_sci(digits)
         << ',' << r.true_remainder.error_bound.to_sci(6) << ',' << (bound_holds(r, b) ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string profile_csv(const std::vector<StokesProfileRow>& rows) {
  std::ostringstream os;
  os << "theta,re_mult,im_mult,erf_pred,residual\n";
  for (const auto& r : rows)
    os << r.theta.to_sci(kProfileDigits) << ',' << r.effective_multiplier.re.to_sci(kProfileDigits) << ','
       << r.effective_multiplier.im.to_sci(kProfileDigits) << ',' << r.erf_prediction.to_sci(kProfileDigits) << ','
       << r.residual.to_sci(kProfileDigits) << '\n';
  return os.str();
}

}  // namespace gammahyper
