#ifndef SUPERFOCK_MODE_ALGEBRA_HPP
#define SUPERFOCK_MODE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superfock/polynomial.hpp"
#include "superfock/superalgebra.hpp"
#include "superfock/superspace.hpp"

namespace superfock {

// Target index for the formal central element; its coefficient polynomial is
// understood to multiply the mode-conservation marker delta_{m+n}.
inline constexpr int kCentral = -1;

struct ModeBracketTerm {
  int target;   // generator index or kCentral
  Poly coeff;   // polynomial in the mode variables m (first) and n (second)
};

// Graded current algebra with integer modes: for each ordered generator pair
// (a, b) the table stores [A_m, B_n] as a polynomial combination of
// T_{m+n} targets plus a central coefficient on delta_{m+n}.
class ModeAlgebraSpec {
 public:
  void add_generator(const std::string& name, int parity);
  int index_of(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;
  int count() const { return int(names_.size()); }
  const std::string& name(int a) const { return names_[a]; }
  int parity(int a) const { return parities_[a]; }

  void set_bracket(int a, int b, std::vector<ModeBracketTerm> terms);
  const std::vector<ModeBracketTerm>& bracket(int a, int b) const;
  bool has_bracket(int a, int b) const;

  // Fill every missing ordered pair from its partner via graded skewness;
  // pairs missing in both orders default to zero.
  void complete_by_skewness();

  std::string str() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> parities_;
  std::map<std::pair<int, int>, std::vector<ModeBracketTerm>> table_;
  static const std::vector<ModeBracketTerm> empty_;
};

struct ModeViolation {
  std::string identity;
  std::vector<std::string> generators;
  std::string target;
  Poly residual;
};

struct ModeReport {
  bool ok = true;
  std::vector<ModeViolation> violations;
  std::string str() const;
};

// [A_m, B_n] + (-)^{ab} [B_n, A_m] = 0 as exact polynomials; central
// coefficients are compared on the support of delta_{m+n}.
ModeReport verify_graded_skewness(const ModeAlgebraSpec& spec);

// Cyclic super-Jacobi sum for every unordered generator triple, exact in the
// three mode indeterminates; central parts reduced on delta_{m+n+p}.
ModeReport verify_super_jacobi(const ModeAlgebraSpec& spec);

// Built-in tables.
ModeAlgebraSpec virasoro_spec(const GaussianRational& c);
ModeAlgebraSpec km_spec(const FiniteSuperalgebra& g, const GaussianRational& k);
ModeAlgebraSpec kmgl_spec(int n, int m, const GaussianRational& k1, const GaussianRational& k2);
ModeAlgebraSpec scalg_spec(const GaussianRational& a, const GaussianRational& a_prime);
ModeAlgebraSpec k11_contact_spec();
ModeAlgebraSpec k12_contact_spec();

// Parameters of the extended superconformal bracket table.
struct XscParameters {
  GaussianRational a, a_prime, alpha, beta, gamma, gamma_prime, e, b;

  static XscParameters from_constants(const GaussianRational& c, const GaussianRational& k1,
                                      const GaussianRational& k2);
  bool constraint_holds() const;  // 2 alpha - beta = 2 a - b/2
};

ModeAlgebraSpec xsc_spec(const XscParameters& p);

// Generator redefinition absorbing all removable parameters:
//   L_m -> L_m - a'/2 delta_m + beta/2 m^2 U_m,
//   G_m -> G_m - e/2 W_m + ((beta - 2 alpha) m^2 + gamma m + gamma') theta_m.
// With `project` set, theta_m is dropped and U_m is replaced by delta_m.
ModeAlgebraSpec apply_redefinition(const ModeAlgebraSpec& spec, const XscParameters& p,
                                   bool project = false);

// Restriction of the (L, G, central) block, and exact table comparison with
// central coefficients compared on the delta support.
ModeAlgebraSpec sub_table(const ModeAlgebraSpec& spec, const std::vector<std::string>& keep);
bool table_equal(const ModeAlgebraSpec& a, const ModeAlgebraSpec& b);

// Coefficient of -n * delta_{m+n} in the central pairing of two diagonal
// combinations of kmgl generators (used to probe which level relation makes
// the gl(1) factor extension-free).
GaussianRational kmgl_central_pairing(int n, int m, const GaussianRational& k1,
                                      const GaussianRational& k2,
                                      const std::vector<GaussianRational>& x,
                                      const std::vector<GaussianRational>& y);

// Supertraceless restriction of kmgl: off-diagonal generators plus the
// stepwise supertraceless diagonal combinations.
ModeAlgebraSpec kmgl_sl_restriction(int n, int m, const GaussianRational& k1,
                                    const GaussianRational& k2);

// Structured text format: `param`, `generator`, `bracket` lines.
ModeAlgebraSpec parse_mode_spec_file(const std::string& text,
                                     const std::map<std::string, GaussianRational>& params);

}  // namespace superfock

#endif
