#ifndef SUPERFOCK_GENERATORS_HPP
#define SUPERFOCK_GENERATORS_HPP

#include <functional>

#include "superfock/operators.hpp"
#include "superfock/smearing.hpp"
#include "superfock/symplectic.hpp"
#include "superfock/vector_field.hpp"

namespace superfock {

// tau-aware circle-integral assembly of sum_t coeff_t e^{i k_t t} *
// (oscillator factors): every p-type or current tail slot carries 1/tau, the
// integral contributes tau, and the prefactor may carry its own power.
TrajOperator trajectory_integral(const OscillatorUniverse& u, const SuperFunction& integrand,
                                 const Scalar& prefactor, int extra_mode,
                                 const std::vector<TrajFactor>& tail);

// Fourier component r of a jet function along the trajectory:
// (1/tau) Int dt e^{-irt} F(q(t), dq(t), ddq(t)).
TrajOperator mode_component_operator(const OscillatorUniverse& u, const SuperFunction& f, int r);

// Single oscillator modes as operators.
TrajOperator q_mode_operator(const OscillatorUniverse& u, int dir, int mode);
TrajOperator p_mode_operator(const OscillatorUniverse& u, int dir, int mode);
// Composite time momentum p_{0,r}: the mode-r component of -:dq^i p_i:(t),
// plus the auxiliary Virasoro part when present.
TrajOperator p0_mode_operator(const OscillatorUniverse& u, int r);

// Normal-ordered realization of a vector field:
//   Int dt :(xi^i - xi^0 dq^i) p_i: + xi^0(q) L_aux(t).
// Inputs must be Fourier polynomials (no t powers, no jet symbols).
TrajOperator vector_field_generator(const OscillatorUniverse& u, const SuperVectorField& xi);

// The defect [L_xi, L_eta] - L_{[xi,eta]} as exact columns over the window
// basis; margins must cover the joint Fourier bandwidth and spatial degree.
WindowMatrix commutator_defect(const OscillatorUniverse& u, const SuperVectorField& xi,
                               const SuperVectorField& eta, const Window& w,
                               const Window& margin);

// Extension constants: the internal Virasoro charge c and the two current
// levels of the tensor block (identically zero for the realizations built
// here; kept explicit so both closed forms stay general).
struct ExtensionConstants {
  GaussianRational c, k1, k2;
};

// Dotted closed form of the extension integrand (total time derivatives
// expanded through the jet chain rule).
TrajOperator extension_operator(const OscillatorUniverse& u, const SuperVectorField& xi,
                                const SuperVectorField& eta, const ExtensionConstants& k);
// Velocity/acceleration kernel form of the same extension (the S/R-kernel
// display realized on the trajectory).
TrajOperator extension_operator_kernel(const OscillatorUniverse& u, const SuperVectorField& xi,
                                       const SuperVectorField& eta, const ExtensionConstants& k);

ExtensionConstants declared_constants(const OscillatorUniverse& u);

// S_n(h) = -(1/2pi i) Int dt dq^{mu_1}..dq^{mu_n} h_{mu_1..mu_n}(q(t)), for a
// graded symmetric lower-rank-n smearing; R_n(g, h) carries one ddq slot.
TrajOperator sn_operator(const OscillatorUniverse& u, const SmearingTensor& h,
                         bool require_symmetric = true);
TrajOperator rn_operator(const OscillatorUniverse& u, const SmearingTensor& g,
                         const SmearingTensor& h);

bool is_graded_symmetric(const SmearingTensor& h);

// Dual transformation law of the S_1 smearing under a vector field:
// h'_nu = (-)^{xi nu} xi^mu d_mu h_nu + d_nu xi^mu h_mu, so that
// [L_xi, S_1(h)] = S_1(h').
SmearingTensor s1_transformed_smearing(const SuperVectorField& xi, const SmearingTensor& h);

// Fourier-mode family of temporal generators L_m = L_{xi^0 = -i e^{imt}}.
TrajOperator temporal_generator(const OscillatorUniverse& u, int m);

// Fit <0|[A_m, A_{-m}]|0> = alpha m + beta (m^3 - m) at m = 1, 2 and verify
// at m = 3; returns c = -12 beta. Throws when the family does not close.
GaussianRational central_charge_probe(const std::function<TrajOperator(int)>& family);

// Fock realization of the extended superconformal family on (1|1)
// dimensions with omega^{11} = i.
struct SuperconformalFamily {
  TrajOperator L, G, Th, U, V, W;
};
SuperconformalFamily superconformal_generators(const OscillatorUniverse& u, int m);

// Hamiltonian generators: the displayed normal-ordered form
// (-)^{f mu + nu} :d_mu f(q) omega^{mu nu} p_nu(t): (with p_0 eliminated and
// the omega^{mu 0} slot feeding the auxiliary Virasoro), and the composed
// route through the vector-field realization.
TrajOperator hamiltonian_generator_direct(const OscillatorUniverse& u, const SuperFunction& f,
                                          const SymplecticData& w);
TrajOperator hamiltonian_generator(const OscillatorUniverse& u, const SuperFunction& f,
                                   const SymplecticData& w);
TrajOperator contact_generator(const OscillatorUniverse& u, const SuperFunction& f,
                               const SymplecticData& w);

void require_margin(const SuperVectorField& xi, const SuperVectorField& eta,
                    const Window& margin);

}  // namespace superfock

#endif
