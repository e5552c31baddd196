#pragma once

#include <string>
#include <vector>

#include "gramqfi/basis.hpp"
#include "gramqfi/model.hpp"

namespace gramqfi {

// Even/odd superposition of two coherent branches with interference
// visibility c in [0, 1], branch amplitude alpha >= 0 and an optional probe
// displacement epsilon along the imaginary direction.
struct CatConfig {
  double c = 1.0;
  double alpha = 1.0;
  double epsilon = 0.0;

  void validate() const;
};

// Pure cat of initial amplitude alpha0 sent through a loss channel of
// accumulated strength gammabar = kappa * t.
struct LossyConfig {
  double alpha0 = 1.0;
  double gammabar = 0.0;

  void validate() const;
};

// Squeezed-vacuum displacement probe under the same loss channel.
struct SqueezedConfig {
  double r = 0.0;
  double gammabar = 0.0;

  void validate() const;
};

enum class KetDerivative { None, Amplitude, Displacement };

// A coherent branch state, possibly differentiated once. `scale` carries
// chain-rule prefactors such as the sign picked up when the branch amplitude
// is -alpha and the derivative is taken with respect to alpha.
struct CoherentKet {
  double amplitude = 0.0;
  KetDerivative derivative = KetDerivative::None;
  double scale = 1.0;
};

// Inner product <bra|ket> from the closed overlap table for real-amplitude
// coherent states, g(a, b) = exp(a b - a^2/2 - b^2/2):
//   plain        <a|b>           = g
//   amplitude    <a|d b>         = (a - b) g        (d = adag - a)
//   displacement <a|x b>         = i (a + b) g      (x = i (adag + a))
// together with the adjoint and second-order combinations. Scales multiply.
Complex coherent_overlap(const CoherentKet& bra, const CoherentKet& ket);

// Applies one more derivative to a ket. Only first derivatives exist in the
// overlap table; anything deeper throws UnsupportedDerivativeOrder.
CoherentKet differentiate_ket(const CoherentKet& base, KetDerivative kind,
                              int order = 1, double scale = 1.0);

// A list of coherent kets with unique labels, convertible to the generic
// descriptor/overlap form consumed by build_basis and gramian.
struct CoherentBasis {
  std::vector<CoherentKet> kets;
  std::vector<std::string> labels;
  std::vector<int> derivative_parameters;  // -1 for plain kets

  BasisSet to_basis_set() const;
  // Rectangular matrix of <this_i | other_j>, used for projecting states
  // onto a frozen frame (finite-difference checks across moving bases).
  CMatrix cross_overlaps(const CoherentBasis& other) const;
};

CoherentBasis cat_pair_basis(double alpha);
// Pair plus the amplitude derivatives of both branches; the derivative kets
// differentiate model parameter `alpha_index` of the joint family.
CoherentBasis cat_amplitude_basis(double alpha, int alpha_index = 1);
CoherentBasis cat_displacement_basis(double alpha, int epsilon_index = 0);

// Branch overlap s = exp(-2 alpha^2) and normalization 1/(2 (1 + s c)).
double cat_fringe(double alpha);
double cat_norm(double c, double alpha);

// Single-parameter model for the visibility c over the two-branch basis.
// c = 1 is a genuine rank change (the state turns pure and the visibility
// direction leaves the support), reported as RankChange.
ModelMatrices build_c_model(const CatConfig& cfg,
                            double cond_cap = kDefaultConditionCap);

// Joint model for (c, alpha) over the four-element amplitude basis. Shares
// the c = 1 rank change with build_c_model.
ModelMatrices build_alpha_model(const CatConfig& cfg,
                                double cond_cap = kDefaultConditionCap);

// Single-parameter model for a displacement probe at the cat state. Valid
// for every c in [0, 1] including the pure cat.
ModelMatrices build_displacement_model(const CatConfig& cfg,
                                       double cond_cap = kDefaultConditionCap);

struct CatJointQfi {
  RMatrix h;            // 2 x 2 over (c, alpha)
  double gamma = 0.0;   // mean SLD commutator between the two directions
};

// Closed forms, with s = exp(-2 alpha^2):
//   H_cc = (1 - s^2) / ((1 - c^2) (1 + c s)^2)
//   H_aa = 4 (1 - c^2 s^2 + 4 c alpha^2 s) / (1 + c s)^2
//   H_ca = -4 alpha s / (1 + c s)^2
CatJointQfi closed_form_qfi_cat(const CatConfig& cfg);

// H_eps = 4 (4 alpha^2 (c^2 + c s) + (1 + c s)^2) / (1 + c s)^2.
double closed_form_qfi_displacement(const CatConfig& cfg);

// Displacement information of a lossy squeezed-vacuum probe:
//   4 e^{2r} / (e^{2r} (1 - e^{-gammabar}) + e^{-gammabar}).
double qfi_squeezed(const SqueezedConfig& cfg);

// Reference SLD coefficient matrices in closed form.
CMatrix closed_form_sld_c(const CatConfig& cfg);
CMatrix closed_form_sld_displacement(const CatConfig& cfg);

// Loss acts on a pure cat of amplitude alpha0 by shrinking the branches and
// washing out the interference:
//   alpha = alpha0 e^{-gammabar/2},
//   c     = exp(-2 alpha0^2 (1 - e^{-gammabar})).
CatConfig lossy_map(const LossyConfig& cfg);

// Jacobian of (c, alpha) with respect to (gammabar, alpha0); row m holds
// the derivatives of the old parameters along new parameter m.
RMatrix lossy_jacobian(const LossyConfig& cfg);

double mean_photon_cat(const CatConfig& cfg);
double mean_photon_pure(double alpha);
double mean_photon_squeezed(double r);

}  // namespace gramqfi
