#include "thermoform/maxwell.hpp"

#include <stdexcept>

namespace thermoform {

namespace {

using Q = Quantity;

const std::array<MaxwellCase, 4> kCases{{
    {1, {Q::V, Q::S}, Chart::SV, "(dT/dV)_S = -(dP/dS)_V"},
    {2, {Q::T, Q::V}, Chart::TV, "(dS/dV)_T = (dP/dT)_V"},
    {3, {Q::P, Q::T}, Chart::TP, "-(dS/dP)_T = (dV/dT)_P"},
    {4, {Q::P, Q::S}, Chart::SP, "(dT/dP)_S = (dV/dS)_P"},
}};

}  // namespace

const MaxwellCase& MaxwellCase::get(int index) {
  if (index < 1 || index > 4) throw DomainError("Maxwell case index must be 1..4");
  return kCases[index - 1];
}

const std::array<MaxwellCase, 4>& MaxwellCase::all() { return kCases; }

double maxwell_residual_jacobian(const EosModel& model, const MaxwellCase& c, const StatePoint& pt,
                                 const Differentiator& engine) {
  return wedge_ratio(model, {Q::T, Q::S}, c.divisor, pt, engine) -
         wedge_ratio(model, {Q::P, Q::V}, c.divisor, pt, engine);
}

double maxwell_residual_partials(const EosModel& model, const MaxwellCase& c, const StatePoint& pt,
                                 const Differentiator& engine) {
  auto d = [&](Q of, Q wrt) { return partial(model, of, wrt, c.held_chart, pt, engine); };
  switch (c.index) {
    case 1: return d(Q::T, Q::V) + d(Q::P, Q::S);
    case 2: return d(Q::S, Q::V) - d(Q::P, Q::T);
    case 3: return -d(Q::S, Q::P) - d(Q::V, Q::T);
    case 4: return d(Q::T, Q::P) - d(Q::V, Q::S);
    default: break;
  }
  throw DomainError("Maxwell case index must be 1..4");
}

std::string_view to_string(PotentialKind k) {
  switch (k) {
    case PotentialKind::U: return "U";
    case PotentialKind::F: return "F";
    case PotentialKind::H: return "H";
    case PotentialKind::G: return "G";
  }
  return "?";
}

Potential::Potential(EosModel model, PotentialKind kind, Tolerances tol)
    : model_(std::move(model)), kind_(kind), tol_(tol) {}

Chart Potential::natural_chart() const {
  switch (kind_) {
    case PotentialKind::U: return Chart::SV;
    case PotentialKind::F: return Chart::TV;
    case PotentialKind::H: return Chart::SP;
    case PotentialKind::G: return Chart::TP;
  }
  return Chart::SV;
}

int Potential::maxwell_case() const {
  switch (kind_) {
    case PotentialKind::U: return 1;
    case PotentialKind::F: return 2;
    case PotentialKind::G: return 3;
    case PotentialKind::H: return 4;
  }
  return 0;
}

Dual Potential::value(Dual c1, Dual c2) const {
  const auto x = invert_to_chart(model_, natural_chart(), c1, c2, tol_);
  const Dual s = x[0];
  const Dual v = x[1];
  const Dual u = model_.energy(s, v);
  switch (kind_) {
    case PotentialKind::U: return u;
    case PotentialKind::F: return u - model_.temperature(s, v) * s;
    case PotentialKind::H: return u + model_.pressure(s, v) * v;
    case PotentialKind::G: return u - model_.temperature(s, v) * s + model_.pressure(s, v) * v;
  }
  return u;
}

double Potential::value(const StatePoint& natural) const {
  if (natural.chart() != natural_chart()) {
    throw DomainError("potential " + std::string(to_string(kind_)) + " expects a point in chart " +
                      std::string(to_string(natural_chart())));
  }
  return value(Dual(natural.c1()), Dual(natural.c2())).v;
}

Field Potential::as_field() const {
  return Field([self = *this](Dual a, Dual b) { return self.value(a, b); });
}

OneForm Potential::natural_form() const {
  if (kind_ == PotentialKind::U) return energy_form(model_);
  const Chart chart = natural_chart();
  auto component = [m = model_, chart, tol = tol_](Quantity q, double sign) {
    return Field([m, chart, tol, q, sign](Dual a, Dual b) {
      const auto x = invert_to_chart(m, chart, a, b, tol);
      return Dual(sign) * m.quantity(q, x[0], x[1]);
    });
  };
  switch (kind_) {
    case PotentialKind::F: return {chart, component(Q::S, -1.0), component(Q::P, -1.0)};
    case PotentialKind::H: return {chart, component(Q::T, 1.0), component(Q::V, 1.0)};
    case PotentialKind::G: return {chart, component(Q::S, -1.0), component(Q::V, 1.0)};
    default: break;
  }
  return energy_form(model_);
}

Potential legendre(const EosModel& model, PotentialKind kind, const Tolerances& tol) {
  Potential p(model, kind, tol);
  const DomainBox& box = model.domain();
  const StatePoint centre = StatePoint::sv(0.5 * (box.s_lo + box.s_hi), 0.5 * (box.v_lo + box.v_hi));
  invert_to_chart(model, to_chart(model, centre, p.natural_chart()), tol);
  return p;
}

double maxwell_from_potential(const EosModel& model, PotentialKind kind, const StatePoint& pt,
                              const Differentiator& engine) {
  if (pt.chart() != Chart::SV) throw DomainError("maxwell_from_potential expects an SV point");
  const Potential potential(model, kind, engine.tolerances());
  const OneForm form = potential.natural_form();
  const StatePoint natural = to_chart(model, pt, potential.natural_chart());
  const double c1 = natural.c1();
  const double c2 = natural.c2();
  const double closure = engine.gradient(form.comp1, c1, c2)[1] - engine.gradient(form.comp2, c1, c2)[0];
  // dF = -S dT - P dV closes to the negative of case 2 as stated.
  return kind == PotentialKind::F ? -closure : closure;
}

}  // namespace thermoform
