#include "gramqfi/cat.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_map>
#include <utility>

#include "gramqfi/linalg.hpp"

namespace gramqfi {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ModelInvariantViolation(std::string(name) + " must be finite");
  }
}

std::string format_amplitude(double a) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

std::string ket_label(const CoherentKet& k) {
  std::string prefix;
  switch (k.derivative) {
    case KetDerivative::None: break;
    case KetDerivative::Amplitude: prefix = "dA "; break;
    case KetDerivative::Displacement: prefix = "dX "; break;
  }
  return prefix + "coh(" + format_amplitude(k.amplitude) + ")";
}

CMatrix pair_matrix(double c) {
  CMatrix p(2, 2);
  p << 1.0, c, c, 1.0;
  return p;
}

CMatrix flip_matrix() {
  CMatrix f(2, 2);
  f << 0.0, 1.0, 1.0, 0.0;
  return f;
}

// Runs the candidate list through the conditioning filter and insists that
// every member survives; a cat basis that loses members is degenerate for
// the model that wanted it.
CMatrix full_rank_gramian(const CoherentBasis& cb, double cond_cap,
                          const char* who) {
  BasisSet bs = cb.to_basis_set();
  BasisSelection sel = build_basis(bs.descriptors, bs.overlap, cond_cap);
  if (sel.basis.size() != static_cast<Index>(cb.kets.size())) {
    std::string dropped;
    for (const auto& d : sel.discarded) {
      if (!dropped.empty()) dropped += ", ";
      dropped += d.label;
    }
    throw DegenerateBasis(std::string(who) +
                          ": basis members are numerically dependent at this "
                          "amplitude (discarded: " + dropped + ")");
  }
  return gramian(sel.basis);
}

}  // namespace

void CatConfig::validate() const {
  check_finite(c, "visibility c");
  check_finite(alpha, "amplitude alpha");
  check_finite(epsilon, "displacement epsilon");
  if (c < 0.0 || c > 1.0) {
    throw ModelInvariantViolation("visibility c must lie in [0, 1], got " +
                                  std::to_string(c));
  }
  if (alpha < 0.0) {
    throw ModelInvariantViolation("amplitude alpha must be >= 0, got " +
                                  std::to_string(alpha));
  }
}

void LossyConfig::validate() const {
  check_finite(alpha0, "initial amplitude alpha0");
  check_finite(gammabar, "accumulated loss gammabar");
  if (alpha0 < 0.0) {
    throw ModelInvariantViolation("initial amplitude alpha0 must be >= 0");
  }
  if (gammabar < 0.0) {
    throw ModelInvariantViolation("accumulated loss gammabar must be >= 0");
  }
}

void SqueezedConfig::validate() const {
  check_finite(r, "squeezing r");
  check_finite(gammabar, "accumulated loss gammabar");
  if (r < 0.0) {
    throw ModelInvariantViolation("squeezing r must be >= 0");
  }
  if (gammabar < 0.0) {
    throw ModelInvariantViolation("accumulated loss gammabar must be >= 0");
  }
}

Complex coherent_overlap(const CoherentKet& bra, const CoherentKet& ket) {
  const double a = bra.amplitude;
  const double b = ket.amplitude;
  check_finite(a, "bra amplitude");
  check_finite(b, "ket amplitude");
  const double g = std::exp(a * b - 0.5 * (a * a + b * b));
  using K = KetDerivative;
  Complex v;
  if (bra.derivative == K::None && ket.derivative == K::None) {
    v = 1.0;
  } else if (bra.derivative == K::None && ket.derivative == K::Amplitude) {
    v = a - b;
  } else if (bra.derivative == K::Amplitude && ket.derivative == K::None) {
    v = b - a;
  } else if (bra.derivative == K::Amplitude &&
             ket.derivative == K::Amplitude) {
    v = 1.0 - (a - b) * (a - b);
  } else if (bra.derivative == K::None &&
             ket.derivative == K::Displacement) {
    v = kI * (a + b);
  } else if (bra.derivative == K::Displacement &&
             ket.derivative == K::None) {
    v = -kI * (a + b);
  } else if (bra.derivative == K::Displacement &&
             ket.derivative == K::Displacement) {
    v = 1.0 + (a + b) * (a + b);
  } else if (bra.derivative == K::Amplitude &&
             ket.derivative == K::Displacement) {
    v = kI * (1.0 + (b - a) * (b + a));
  } else {  // displacement bra against amplitude ket
    v = -kI * (1.0 + (a - b) * (a + b));
  }
  return bra.scale * ket.scale * g * v;
}

CoherentKet differentiate_ket(const CoherentKet& base, KetDerivative kind,
                              int order, double scale) {
  if (order == 0) {
    CoherentKet out = base;
    out.scale *= scale;
    return out;
  }
  if (order != 1) {
    throw UnsupportedDerivativeOrder(
        "derivative order " + std::to_string(order) +
        " is not in the coherent overlap table");
  }
  if (kind == KetDerivative::None) {
    throw UnsupportedDerivativeOrder(
        "cannot differentiate with derivative kind 'none'");
  }
  if (base.derivative != KetDerivative::None) {
    throw UnsupportedDerivativeOrder(
        "second derivatives of coherent kets are not in the overlap table");
  }
  return CoherentKet{base.amplitude, kind, base.scale * scale};
}

BasisSet CoherentBasis::to_basis_set() const {
  if (labels.size() != kets.size() ||
      derivative_parameters.size() != kets.size()) {
    throw DimensionMismatch("CoherentBasis: labels, kets and parameter tags "
                            "must have equal length");
  }
  BasisSet bs;
  std::unordered_map<std::string, CoherentKet> table;
  for (std::size_t i = 0; i < kets.size(); ++i) {
    BasisDescriptor d;
    d.label = labels[i];
    d.derivative_order = kets[i].derivative == KetDerivative::None ? 0 : 1;
    if (derivative_parameters[i] >= 0) {
      d.derivative_parameter = derivative_parameters[i];
    }
    bs.descriptors.push_back(d);
    table.emplace(labels[i], kets[i]);
  }
  bs.overlap = [table = std::move(table)](const BasisDescriptor& a,
                                          const BasisDescriptor& b) {
    if (a.derivative_order > 1 || b.derivative_order > 1) {
      throw UnsupportedDerivativeOrder(
          "coherent overlap table covers first derivatives only");
    }
    const auto ia = table.find(a.label);
    const auto ib = table.find(b.label);
    if (ia == table.end() || ib == table.end()) {
      throw IndexOutOfRange("descriptor '" +
                            (ia == table.end() ? a.label : b.label) +
                            "' does not belong to this coherent basis");
    }
    return coherent_overlap(ia->second, ib->second);
  };
  return bs;
}

CMatrix CoherentBasis::cross_overlaps(const CoherentBasis& other) const {
  CMatrix m(static_cast<Index>(kets.size()),
            static_cast<Index>(other.kets.size()));
  for (std::size_t i = 0; i < kets.size(); ++i) {
    for (std::size_t j = 0; j < other.kets.size(); ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) =
          coherent_overlap(kets[i], other.kets[j]);
    }
  }
  return m;
}

CoherentBasis cat_pair_basis(double alpha) {
  check_finite(alpha, "amplitude alpha");
  CoherentBasis b;
  b.kets = {CoherentKet{alpha}, CoherentKet{-alpha}};
  b.derivative_parameters = {-1, -1};
  for (const auto& k : b.kets) b.labels.push_back(ket_label(k));
  return b;
}

CoherentBasis cat_amplitude_basis(double alpha, int alpha_index) {
  CoherentBasis b = cat_pair_basis(alpha);
  // d/d alpha |alpha> and d/d alpha |-alpha>; the second branch picks up a
  // chain factor -1 because its own amplitude is -alpha.
  b.kets.push_back(differentiate_ket(b.kets[0], KetDerivative::Amplitude));
  b.kets.push_back(
      differentiate_ket(b.kets[1], KetDerivative::Amplitude, 1, -1.0));
  b.derivative_parameters.push_back(alpha_index);
  b.derivative_parameters.push_back(alpha_index);
  b.labels.push_back(ket_label(b.kets[2]));
  b.labels.push_back(ket_label(b.kets[3]));
  return b;
}

CoherentBasis cat_displacement_basis(double alpha, int epsilon_index) {
  CoherentBasis b = cat_pair_basis(alpha);
  b.kets.push_back(differentiate_ket(b.kets[0], KetDerivative::Displacement));
  b.kets.push_back(differentiate_ket(b.kets[1], KetDerivative::Displacement));
  b.derivative_parameters.push_back(epsilon_index);
  b.derivative_parameters.push_back(epsilon_index);
  b.labels.push_back(ket_label(b.kets[2]));
  b.labels.push_back(ket_label(b.kets[3]));
  return b;
}

double cat_fringe(double alpha) {
  check_finite(alpha, "amplitude alpha");
  return std::exp(-2.0 * alpha * alpha);
}

double cat_norm(double c, double alpha) {
  return 1.0 / (2.0 * (1.0 + cat_fringe(alpha) * c));
}

ModelMatrices build_c_model(const CatConfig& cfg, double cond_cap) {
  cfg.validate();
  if (cfg.c == 1.0) {
    throw RankChange("visibility c = 1: the state is pure and the visibility "
                     "direction leaves its support");
  }
  ModelMatrices m;
  m.s = full_rank_gramian(cat_pair_basis(cfg.alpha), cond_cap, "c model");
  const double s = cat_fringe(cfg.alpha);
  const double n = cat_norm(cfg.c, cfg.alpha);
  m.r = n * pair_matrix(cfg.c);
  m.d = {n * flip_matrix() - 2.0 * s * n * m.r};
  m.parameter_names = {"c"};
  m.validate(cond_cap);
  return m;
}

ModelMatrices build_alpha_model(const CatConfig& cfg, double cond_cap) {
  cfg.validate();
  if (cfg.c == 1.0) {
    throw RankChange("visibility c = 1: the state is pure and the visibility "
                     "direction leaves its support");
  }
  ModelMatrices m;
  m.s = full_rank_gramian(cat_amplitude_basis(cfg.alpha), cond_cap,
                          "amplitude model");
  const double s = cat_fringe(cfg.alpha);
  const double n = cat_norm(cfg.c, cfg.alpha);
  const CMatrix pair = pair_matrix(cfg.c);

  m.r = CMatrix::Zero(4, 4);
  m.r.block(0, 0, 2, 2) = n * pair;

  CMatrix dc = CMatrix::Zero(4, 4);
  dc.block(0, 0, 2, 2) = n * flip_matrix() - 2.0 * s * n * (n * pair);

  CMatrix da = CMatrix::Zero(4, 4);
  da.block(0, 2, 2, 2) = n * pair;
  da.block(2, 0, 2, 2) = n * pair;
  // Normalization drift: d/d alpha of 1/(2 (1 + s c)) contributes along R.
  da += (4.0 * cfg.alpha * s * cfg.c / (1.0 + s * cfg.c)) * m.r;

  m.d = {std::move(dc), std::move(da)};
  m.parameter_names = {"c", "alpha"};
  m.validate(cond_cap);
  return m;
}

ModelMatrices build_displacement_model(const CatConfig& cfg, double cond_cap) {
  cfg.validate();
  ModelMatrices m;
  m.s = full_rank_gramian(cat_displacement_basis(cfg.alpha), cond_cap,
                          "displacement model");
  const double n = cat_norm(cfg.c, cfg.alpha);
  const CMatrix pair = pair_matrix(cfg.c);

  m.r = CMatrix::Zero(4, 4);
  m.r.block(0, 0, 2, 2) = n * pair;

  CMatrix de = CMatrix::Zero(4, 4);
  de.block(0, 2, 2, 2) = n * pair;
  de.block(2, 0, 2, 2) = n * pair;

  m.d = {std::move(de)};
  m.parameter_names = {"epsilon"};
  m.validate(cond_cap);
  return m;
}

CatJointQfi closed_form_qfi_cat(const CatConfig& cfg) {
  cfg.validate();
  if (cfg.c == 1.0) {
    throw RankChange("visibility c = 1: the visibility information diverges "
                     "at the pure-state boundary");
  }
  const double s = cat_fringe(cfg.alpha);
  const double c = cfg.c;
  const double a = cfg.alpha;
  const double den = (1.0 + c * s) * (1.0 + c * s);
  CatJointQfi out;
  out.h = RMatrix(2, 2);
  out.h(0, 0) = (1.0 - s * s) / ((1.0 - c * c) * den);
  out.h(1, 1) = 4.0 * (1.0 - c * c * s * s + 4.0 * c * a * a * s) / den;
  out.h(0, 1) = out.h(1, 0) = -4.0 * a * s / den;
  out.gamma = 0.0;
  return out;
}

double closed_form_qfi_displacement(const CatConfig& cfg) {
  cfg.validate();
  const double s = cat_fringe(cfg.alpha);
  const double c = cfg.c;
  const double a = cfg.alpha;
  const double den = (1.0 + c * s) * (1.0 + c * s);
  return 4.0 * (4.0 * a * a * (c * c + c * s) + den) / den;
}

double qfi_squeezed(const SqueezedConfig& cfg) {
  cfg.validate();
  // 4 e^{2r} / (e^{2r} (1 - e^{-g}) + e^{-g}), written to avoid overflow
  // at large squeezing.
  const double eg = std::exp(-cfg.gammabar);
  return 4.0 / ((1.0 - eg) + eg * std::exp(-2.0 * cfg.r));
}

CMatrix closed_form_sld_c(const CatConfig& cfg) {
  cfg.validate();
  if (cfg.c == 1.0) {
    throw RankChange("visibility c = 1: the visibility SLD does not exist on "
                     "the pure-state stratum");
  }
  if (cfg.alpha == 0.0) {
    throw DegenerateBasis("alpha = 0: the two branches coincide and the "
                          "closed-form SLD is singular");
  }
  const double s = cat_fringe(cfg.alpha);
  const double c = cfg.c;
  const double n = cat_norm(c, cfg.alpha);
  const double den = (1.0 - c * c) * (1.0 - s * s);
  const double diag = -2.0 * (c * s * s + 2.0 * s + c) / den;
  const double off = 2.0 * (s * s + 2.0 * c * s + 1.0) / den;
  CMatrix l(2, 2);
  l << diag, off, off, diag;
  return n * l;
}

CMatrix closed_form_sld_displacement(const CatConfig& cfg) {
  cfg.validate();
  if (cfg.alpha == 0.0) {
    throw DegenerateBasis("alpha = 0: the displacement basis is degenerate "
                          "and the closed-form SLD is singular");
  }
  const double s = cat_fringe(cfg.alpha);
  const double c = cfg.c;
  const double a = cfg.alpha;
  const Complex q = 4.0 * kI * a / (s * (1.0 + s * c));
  const Complex w = kI / (s * a);
  const double u = 2.0 / s;
  CMatrix l(4, 4);
  l << 0.0, -q, 0.0, u,
       q, 0.0, u, 0.0,
       0.0, u, 0.0, w,
       u, 0.0, -w, 0.0;
  return l;
}

CatConfig lossy_map(const LossyConfig& cfg) {
  cfg.validate();
  CatConfig out;
  out.alpha = cfg.alpha0 * std::exp(-0.5 * cfg.gammabar);
  out.c = std::exp(-2.0 * cfg.alpha0 * cfg.alpha0 *
                   (1.0 - std::exp(-cfg.gammabar)));
  out.epsilon = 0.0;
  return out;
}

RMatrix lossy_jacobian(const LossyConfig& cfg) {
  cfg.validate();
  const double eg = std::exp(-cfg.gammabar);
  const double ehg = std::exp(-0.5 * cfg.gammabar);
  const double c = std::exp(-2.0 * cfg.alpha0 * cfg.alpha0 * (1.0 - eg));
  RMatrix b(2, 2);
  // rows: (gammabar, alpha0); columns: (c, alpha)
  b(0, 0) = -2.0 * cfg.alpha0 * cfg.alpha0 * eg * c;
  b(0, 1) = -0.5 * cfg.alpha0 * ehg;
  b(1, 0) = -4.0 * cfg.alpha0 * (1.0 - eg) * c;
  b(1, 1) = ehg;
  return b;
}

double mean_photon_cat(const CatConfig& cfg) {
  cfg.validate();
  const double s = cat_fringe(cfg.alpha);
  return cfg.alpha * cfg.alpha * (1.0 - cfg.c * s) / (1.0 + cfg.c * s);
}

double mean_photon_pure(double alpha) {
  CatConfig cfg;
  cfg.c = 1.0;
  cfg.alpha = alpha;
  return mean_photon_cat(cfg);
}

double mean_photon_squeezed(double r) {
  check_finite(r, "squeezing r");
  const double sh = std::sinh(r);
  return sh * sh;
}

}  // namespace gramqfi
