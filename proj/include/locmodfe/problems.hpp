// Problem descriptions: diffusion coefficients, right-hand sides, boundary
// data and (when known) exact solutions per subdomain.
#pragma once

#include <functional>

#include "locmodfe/geometry.hpp"

namespace locmodfe {

struct InterfaceProblem {
  double kappa1 = 1.0;  // diffusion in domain 1 (level set < 0)
  double kappa2 = 1.0;  // diffusion in domain 2 (level set > 0)

  std::function<double(const Vec2&)> f1;  // source in domain 1
  std::function<double(const Vec2&)> f2;  // source in domain 2
  std::function<double(const Vec2&)> dirichlet;

  // Constant g added to the weak form as + int_Gamma g * phi ds, compensating
  // a jump of the conormal flux kappa du/dn across the interface.
  double interface_flux = 0.0;

  bool has_exact = false;
  std::function<double(const Vec2&)> u1, u2;
  std::function<Vec2(const Vec2&)> grad_u1, grad_u2;

  double kappa(int domain) const { return domain == 1 ? kappa1 : kappa2; }
  double f(int domain, const Vec2& p) const {
    return domain == 1 ? f1(p) : f2(p);
  }
  double u(int domain, const Vec2& p) const {
    return domain == 1 ? u1(p) : u2(p);
  }
  Vec2 grad_u(int domain, const Vec2& p) const {
    return domain == 1 ? grad_u1(p) : grad_u2(p);
  }
};

// Radially symmetric manufactured solution on (-1,1)^2 with the interface on
// the circle of radius 1/2 around (0, y_offset):
//   u = -kappa1 rho^2 + kappa1/4 - kappa2/8   inside the circle,
//   u = -2 kappa2 rho^4                       outside,
// with rho the distance to the circle center.  u is continuous across the
// interface while the conormal flux kappa du/dn jumps by kappa1^2 - kappa2^2
// (n pointing outward), which the weak form compensates by the constant
// interface term g = kappa2^2 - kappa1^2 when with_flux_jump is set.
InterfaceProblem make_disc_problem(double kappa1, double kappa2, double y_offset,
                                   bool with_flux_jump);

}  // namespace locmodfe
