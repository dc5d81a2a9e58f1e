#ifndef SUPERFOCK_GAUGE_HPP
#define SUPERFOCK_GAUGE_HPP

#include "superfock/generators.hpp"
#include "superfock/superalgebra.hpp"

namespace superfock {

// Current-algebra context: a finite superalgebra with level k. The realized
// oscillator family is the abelian one, [J_{a,m}, J_{b,n}] = k m delta_{ab}
// delta_{m+n}; nonabelian realizations are not built here, the structure
// constants still drive the symbolic bracket of smearings.
struct CurrentConfig {
  FiniteSuperalgebra algebra;
  Scalar level;
};

// One smearing function per generator; deg(J_X) = deg(X_a) + deg(a) must be
// uniform across the nonzero components.
struct CurrentSmearing {
  std::vector<SuperFunction> comps;
  int parity = 0;  // parity of the smeared current J_X
};

CurrentSmearing make_smearing(const CurrentConfig& cfg, std::vector<SuperFunction> comps);

// J_X = Int dt X_a(q(t)) J^a(t); requires the abelian realization.
TrajOperator current_generator(const OscillatorUniverse& u, const CurrentSmearing& x,
                               const CurrentConfig& cfg);

OscillatorUniverse current_universe(SuperDimension dim, const CurrentConfig& cfg);

// [X, Y]_c = (-)^{a(Y+b)} i f^{ab}_c X_a Y_b.
CurrentSmearing current_bracket(const CurrentSmearing& x, const CurrentSmearing& y,
                                const CurrentConfig& cfg);

// How the repeated index in the cocycle display is contracted: through the
// Killing metric (X_a delta^{ab} Y_b, the invariance-compatible reading) or
// literally over the repeated label with the metric diagonal.
enum class CocycleContraction { metric, literal };

// Expected defect -k Int S_1^mu (-)^{a(Y+b)} d_mu X_a Y_b delta^{ab}.
TrajOperator gauge_cocycle_expected(const OscillatorUniverse& u, const CurrentSmearing& x,
                                    const CurrentSmearing& y, const CurrentConfig& cfg,
                                    CocycleContraction contraction = CocycleContraction::metric);

struct GaugeCheckResult {
  bool ok = true;
  std::string detail;
};

// [J_X, J_Y] - J_{[X,Y]} against the S_1-valued cocycle, column-exact.
GaugeCheckResult gauge_cocycle_check(const OscillatorUniverse& u, const CurrentSmearing& x,
                                     const CurrentSmearing& y, const CurrentConfig& cfg,
                                     const Window& w,
                                     CocycleContraction contraction = CocycleContraction::metric);

// [L_xi, J_Y] = J_{xi Y} and the S_1 transformation law on a sampled
// one-form smearing.
GaugeCheckResult gauge_intertwine_check(const OscillatorUniverse& u, const SuperVectorField& xi,
                                        const CurrentSmearing& y, const CurrentConfig& cfg,
                                        const Window& w);

}  // namespace superfock

#endif
