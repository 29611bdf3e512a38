#include "locmodfe/problems.hpp"

namespace locmodfe {

InterfaceProblem make_disc_problem(double kappa1, double kappa2, double y_offset,
                                   bool with_flux_jump) {
  InterfaceProblem p;
  p.kappa1 = kappa1;
  p.kappa2 = kappa2;
  const Vec2 center{0.0, y_offset};
  const auto rho2 = [center](const Vec2& x) {
    const Vec2 d = x - center;
    return d.x * d.x + d.y * d.y;
  };

  // -kappa1 Laplace(u1) = 4 kappa1^2, -kappa2 Laplace(u2) = 32 kappa2^2 rho^2.
  const double c1 = 0.25 * kappa1 - 0.125 * kappa2;  // continuity at rho = 1/2
  p.u1 = [=](const Vec2& x) { return -kappa1 * rho2(x) + c1; };
  p.u2 = [=](const Vec2& x) {
    const double r2 = rho2(x);
    return -2.0 * kappa2 * r2 * r2;
  };
  p.grad_u1 = [=](const Vec2& x) { return -2.0 * kappa1 * (x - center); };
  p.grad_u2 = [=](const Vec2& x) {
    return -8.0 * kappa2 * rho2(x) * (x - center);
  };
  p.f1 = [=](const Vec2&) { return 4.0 * kappa1 * kappa1; };
  p.f2 = [=](const Vec2& x) { return 32.0 * kappa2 * kappa2 * rho2(x); };
  p.dirichlet = p.u2;  // the domain boundary lies outside the circle
  p.has_exact = true;

  // Conormal fluxes at rho = R = 1/2 (n radially outward):
  //   kappa1 du1/dn = -2 kappa1^2 R,  kappa2 du2/dn = -8 kappa2^2 R^3,
  // so integrating by parts leaves + int_Gamma (kappa2^2 - kappa1^2) phi ds
  // on the right-hand side.
  p.interface_flux = with_flux_jump ? kappa2 * kappa2 - kappa1 * kappa1 : 0.0;
  return p;
}

}  // namespace locmodfe
