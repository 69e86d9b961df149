#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gd.hpp"
#include "rmatrix.hpp"

namespace bihom {

// The file-format / C-API layer works over exact rationals only.
using R = Rational;

/// A structure record as it travels through files and the C API. `kind` is
/// the JSON discriminator; "prelie" and "novikov" share a payload type and
/// differ only in which checks `check_record` runs.
struct Record {
  std::string kind;
  std::variant<BiHomAlgebra<R>, BiHomCoalgebra<R>, InfBialgebra<R>, BimoduleData<R>,
               BicomoduleData<R>, LeftHopfModule<R>, RightHopfModule<R>, HopfBimodule<R>,
               RotaBaxterData<R>, DendriformAlgebra<R>, DendriformBimodule<R>,
               PreLieAlgebra<R>, PreLieBimodule<R>, NovikovPoissonData<R>, QtStructure<R>,
               CoqtStructure<R>, DerivationData<R>, TwistData<R>, HopfTwistData<R>>
      value;
};

struct UnknownKindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Batteries composed for one record can re-verify the same axiom on the
/// same data (a Hopf bimodule with muM re-checks its module axioms, say);
/// keep the first occurrence of each axiom id.
inline void merge_dedup(ViolationReport<R>& into, ViolationReport<R> more) {
  for (auto& a : more.axioms)
    if (!into.find(a.axiom_id)) into.axioms.push_back(std::move(a));
}

}  // namespace detail

/// Runs every checker that applies to the record's kind and merges the
/// reports. There is no cached validity anywhere; this is the only way a
/// record gets a verdict.
inline ViolationReport<R> check_record(const Record& rec, CheckOptions opt = {}) {
  ViolationReport<R> rep;
  const std::string& k = rec.kind;
  if (k == "algebra") {
    rep = check_bihom_algebra(std::get<BiHomAlgebra<R>>(rec.value), opt);
  } else if (k == "coalgebra") {
    rep = check_bihom_coalgebra(std::get<BiHomCoalgebra<R>>(rec.value), opt);
  } else if (k == "bialgebra") {
    rep = check_inf_bialgebra(std::get<InfBialgebra<R>>(rec.value), opt);
  } else if (k == "module") {
    const auto& m = std::get<BimoduleData<R>>(rec.value);
    rep = check_bihom_algebra(m.algebra, opt);
    if (m.left && m.right)
      detail::merge_dedup(rep, check_bimodule(m, opt));
    else if (m.left)
      detail::merge_dedup(rep, check_left_module(m, opt));
    else if (m.right)
      detail::merge_dedup(rep, check_right_module(m, opt));
    else
      throw ShapeError("module record has no action");
  } else if (k == "comodule") {
    const auto& m = std::get<BicomoduleData<R>>(rec.value);
    rep = check_bihom_coalgebra(m.coalgebra, opt);
    if (m.rho && m.phi)
      detail::merge_dedup(rep, check_bicomodule(m, opt));
    else if (m.rho)
      detail::merge_dedup(rep, check_left_comodule_only(m, opt));
    else if (m.phi)
      detail::merge_dedup(rep, check_right_comodule_only(m, opt));
    else
      throw ShapeError("comodule record has no coaction");
  } else if (k == "left-hopf-module") {
    const auto& h = std::get<LeftHopfModule<R>>(rec.value);
    rep = check_inf_bialgebra(h.bialgebra, opt);
    detail::merge_dedup(rep, check_left_hopf_module(h, opt));
  } else if (k == "right-hopf-module") {
    const auto& h = std::get<RightHopfModule<R>>(rec.value);
    rep = check_inf_bialgebra(h.bialgebra, opt);
    detail::merge_dedup(rep, check_right_hopf_module(h, opt));
  } else if (k == "hopf-bimodule") {
    const auto& h = std::get<HopfBimodule<R>>(rec.value);
    rep = check_inf_bialgebra(h.bialgebra, opt);
    detail::merge_dedup(rep, check_hopf_bimodule(h, opt));
    if (h.muM) detail::merge_dedup(rep, check_bimodule(bimodule_part(h), opt));
    if (h.deltaM) detail::merge_dedup(rep, check_bicomodule(bicomodule_part(h), opt));
    if (h.muM && h.deltaM) {
      detail::merge_dedup(rep, check_module_coalgebra(h.bialgebra, h.left, h.right, h.alphaM, h.betaM,
                                       *h.deltaM, h.psiM, h.omegaM, opt));
      detail::merge_dedup(rep, check_comodule_algebra(h.bialgebra, h.rho, h.phi, h.psiM, h.omegaM, *h.muM,
                                       h.alphaM, h.betaM, opt));
      detail::merge_dedup(rep, check_yd(h, opt));
    }
  } else if (k == "rota-baxter") {
    const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
    rep = check_bihom_algebra(rb.algebra, opt);
    if (rb.module) detail::merge_dedup(rep, check_bimodule(rb_bimodule_part(rb), opt));
    detail::merge_dedup(rep, check_rota_baxter(rb, opt));
  } else if (k == "dendriform") {
    rep = check_dendriform(std::get<DendriformAlgebra<R>>(rec.value), opt);
  } else if (k == "dendriform-bimodule") {
    const auto& d = std::get<DendriformBimodule<R>>(rec.value);
    rep = check_dendriform(d.algebra, opt);
    detail::merge_dedup(rep, check_dendriform_bimodule(d, opt));
  } else if (k == "prelie") {
    rep = check_prelie(std::get<PreLieAlgebra<R>>(rec.value), opt);
  } else if (k == "novikov") {
    const auto& p = std::get<PreLieAlgebra<R>>(rec.value);
    rep = check_prelie(p, opt);
    detail::merge_dedup(rep, check_novikov(p, opt));
  } else if (k == "prelie-bimodule") {
    const auto& p = std::get<PreLieBimodule<R>>(rec.value);
    rep = check_prelie(p.algebra, opt);
    detail::merge_dedup(rep, check_prelie_bimodule(p, opt));
  } else if (k == "novikov-poisson") {
    rep = check_novikov_poisson(std::get<NovikovPoissonData<R>>(rec.value), opt);
  } else if (k == "qt") {
    const auto& q = std::get<QtStructure<R>>(rec.value);
    rep = check_bihom_algebra(q.base, opt);
    detail::merge_dedup(rep, check_qt(q, opt));
  } else if (k == "coqt") {
    const auto& c = std::get<CoqtStructure<R>>(rec.value);
    rep = check_bihom_coalgebra(c.base, opt);
    detail::merge_dedup(rep, check_coqt(c, opt));
  } else if (k == "twist-data") {
    const auto& t = std::get<TwistData<R>>(rec.value);
    rep = yau_twist_algebra(t.algebra, t.alpha, t.beta, opt).preconditions;
  } else if (k == "hopf-twist-data") {
    const auto& t = std::get<HopfTwistData<R>>(rec.value);
    rep = yau_twist_hopf_bimodule(t.hopf, t.alphaA, t.betaA, t.psiA, t.omegaA, t.alphaM,
                                  t.betaM, t.psiM, t.omegaM, opt)
              .preconditions;
  } else if (k == "gd-data") {
    const auto& g = std::get<DerivationData<R>>(rec.value);
    rep = check_bihom_algebra(g.algebra, opt);
    detail::merge_dedup(rep, check_commutative(g.algebra, opt));
    detail::merge_dedup(rep, check_derivation(g.algebra, g.D, g.xi, g.zeta ? *g.zeta : g.xi, g.lambda,
                               opt));
  } else {
    throw UnknownKindError("unknown record kind '" + k + "'");
  }
  return rep;
}

/// Result of a construct dispatch: `record` absent when preconditions
/// failed; `report` is the precondition report in that case, otherwise the
/// output's re-validation report.
struct ConstructOutcome {
  std::optional<Record> record;
  ViolationReport<R> report;
};

inline const char* construct_ops_help() {
  return "yau-twist-algebra(twist-data)  yau-twist-hopf-bimodule(hopf-twist-data)\n"
         "infbh-product(module)  infbh-coproduct(comodule)  biproduct(hopf-bimodule)\n"
         "rb-semidirect(rota-baxter)  rb-to-dendriform(rota-baxter, --variant left|right)\n"
         "dendriform-to-prelie(dendriform-bimodule)  dendriform-direct-sum(dendriform-bimodule)\n"
         "prelie-direct-sum(prelie-bimodule)  hopf-to-prelie-powers(hopf-bimodule)\n"
         "hopf-to-prelie-inverses(hopf-bimodule)  delta-r(qt)  qt-rota-baxter(qt, module)\n"
         "qt-left-coaction(qt, module)  qt-right-coaction(qt, module)\n"
         "qt-hopf-bimodule(qt, module)  mu-sigma(coqt)  coqt-left-action(coqt, comodule)\n"
         "coqt-right-action(coqt, comodule)  coqt-hopf-bimodule(coqt, comodule)\n"
         "mu-delta-derivation(bialgebra)  gd-approach1(gd-data)  gd-approach2(gd-data)\n"
         "novikov-poisson-assemble(gd-data)";
}

namespace detail {

template <class T>
const T& expect_kind(const Record& r, const std::string& kind, const char* op) {
  if (r.kind != kind && !(kind == "prelie" && r.kind == "novikov"))
    throw ShapeError(std::string(op) + ": expected a '" + kind + "' record, got '" +
                     r.kind + "'");
  return std::get<T>(r.value);
}

template <class T>
ConstructOutcome pack(BuildResult<R, T>&& br, const char* kind) {
  ConstructOutcome out;
  if (!br.value) {
    out.report = std::move(br.preconditions);
    return out;
  }
  out.report = std::move(br.validation);
  out.record = Record{kind, std::move(*br.value)};
  return out;
}

}  // namespace detail

/// Dispatches a construction by CLI name over already-parsed records.
inline ConstructOutcome construct_record(const std::string& op,
                                         const std::vector<const Record*>& in,
                                         const std::string& variant = "",
                                         CheckOptions opt = {}) {
  auto need = [&](size_t n) {
    if (in.size() != n)
      throw ShapeError("construct " + op + ": expected " + std::to_string(n) +
                       " input record(s), got " + std::to_string(in.size()));
  };
  DendriformVariant var = variant == "right" ? DendriformVariant::right
                                             : DendriformVariant::left;
  if (!variant.empty() && variant != "left" && variant != "right")
    throw ShapeError("unknown --variant '" + variant + "'");

  if (op == "yau-twist-algebra") {
    need(1);
    const auto& t = detail::expect_kind<TwistData<R>>(*in[0], "twist-data", "yau-twist-algebra");
    return detail::pack(yau_twist_algebra(t.algebra, t.alpha, t.beta, opt), "algebra");
  }
  if (op == "yau-twist-hopf-bimodule") {
    need(1);
    const auto& t = detail::expect_kind<HopfTwistData<R>>(*in[0], "hopf-twist-data",
                                                          "yau-twist-hopf-bimodule");
    return detail::pack(yau_twist_hopf_bimodule(t.hopf, t.alphaA, t.betaA, t.psiA,
                                                t.omegaA, t.alphaM, t.betaM, t.psiM,
                                                t.omegaM, opt),
                        "hopf-bimodule");
  }
  if (op == "infbh-product") {
    need(1);
    const auto& m = detail::expect_kind<BimoduleData<R>>(*in[0], "module", "infbh-product");
    return detail::pack(infbh_product(m, opt), "algebra");
  }
  if (op == "infbh-coproduct") {
    need(1);
    const auto& m =
        detail::expect_kind<BicomoduleData<R>>(*in[0], "comodule", "infbh-coproduct");
    return detail::pack(infbh_coproduct(m, opt), "coalgebra");
  }
  if (op == "biproduct") {
    need(1);
    const auto& h =
        detail::expect_kind<HopfBimodule<R>>(*in[0], "hopf-bimodule", "biproduct");
    return detail::pack(biproduct(h, opt), "bialgebra");
  }
  if (op == "rb-semidirect") {
    need(1);
    const auto& rb =
        detail::expect_kind<RotaBaxterData<R>>(*in[0], "rota-baxter", "rb-semidirect");
    return detail::pack(rb_semidirect(rb, opt), "rota-baxter");
  }
  if (op == "rb-to-dendriform") {
    need(1);
    const auto& rb =
        detail::expect_kind<RotaBaxterData<R>>(*in[0], "rota-baxter", "rb-to-dendriform");
    return detail::pack(rb_to_dendriform(rb, var, opt), "dendriform-bimodule");
  }
  if (op == "dendriform-to-prelie") {
    need(1);
    const auto& d = detail::expect_kind<DendriformBimodule<R>>(*in[0], "dendriform-bimodule",
                                                               "dendriform-to-prelie");
    return detail::pack(dendriform_to_prelie(d, opt), "prelie-bimodule");
  }
  if (op == "dendriform-direct-sum") {
    need(1);
    const auto& d = detail::expect_kind<DendriformBimodule<R>>(*in[0], "dendriform-bimodule",
                                                               "dendriform-direct-sum");
    return detail::pack(dendriform_direct_sum(d, opt), "dendriform");
  }
  if (op == "prelie-direct-sum") {
    need(1);
    const auto& p = detail::expect_kind<PreLieBimodule<R>>(*in[0], "prelie-bimodule",
                                                           "prelie-direct-sum");
    return detail::pack(prelie_direct_sum(p, opt), "prelie");
  }
  if (op == "hopf-to-prelie-powers") {
    need(1);
    const auto& h = detail::expect_kind<HopfBimodule<R>>(*in[0], "hopf-bimodule",
                                                         "hopf-to-prelie-powers");
    return detail::pack(hopf_to_prelie_powers(h, opt), "prelie-bimodule");
  }
  if (op == "hopf-to-prelie-inverses") {
    need(1);
    const auto& h = detail::expect_kind<HopfBimodule<R>>(*in[0], "hopf-bimodule",
                                                         "hopf-to-prelie-inverses");
    return detail::pack(hopf_to_prelie_inverses(h, opt), "prelie-bimodule");
  }
  if (op == "delta-r") {
    need(1);
    const auto& q = detail::expect_kind<QtStructure<R>>(*in[0], "qt", "delta-r");
    return detail::pack(delta_r(q, opt), "bialgebra");
  }
  if (op == "qt-rota-baxter") {
    need(2);
    const auto& q = detail::expect_kind<QtStructure<R>>(*in[0], "qt", "qt-rota-baxter");
    const auto& m = detail::expect_kind<BimoduleData<R>>(*in[1], "module", "qt-rota-baxter");
    return detail::pack(qt_rota_baxter(q, m, opt), "rota-baxter");
  }
  if (op == "qt-left-coaction") {
    need(2);
    const auto& q = detail::expect_kind<QtStructure<R>>(*in[0], "qt", "qt-left-coaction");
    const auto& m =
        detail::expect_kind<BimoduleData<R>>(*in[1], "module", "qt-left-coaction");
    return detail::pack(qt_left_coaction(q, m, opt), "left-hopf-module");
  }
  if (op == "qt-right-coaction") {
    need(2);
    const auto& q = detail::expect_kind<QtStructure<R>>(*in[0], "qt", "qt-right-coaction");
    const auto& m =
        detail::expect_kind<BimoduleData<R>>(*in[1], "module", "qt-right-coaction");
    return detail::pack(qt_right_coaction(q, m, opt), "right-hopf-module");
  }
  if (op == "qt-hopf-bimodule") {
    need(2);
    const auto& q = detail::expect_kind<QtStructure<R>>(*in[0], "qt", "qt-hopf-bimodule");
    const auto& m =
        detail::expect_kind<BimoduleData<R>>(*in[1], "module", "qt-hopf-bimodule");
    return detail::pack(qt_hopf_bimodule(q, m, opt), "hopf-bimodule");
  }
  if (op == "mu-sigma") {
    need(1);
    const auto& c = detail::expect_kind<CoqtStructure<R>>(*in[0], "coqt", "mu-sigma");
    return detail::pack(mu_sigma(c, opt), "bialgebra");
  }
  if (op == "coqt-left-action") {
    need(2);
    const auto& c = detail::expect_kind<CoqtStructure<R>>(*in[0], "coqt", "coqt-left-action");
    const auto& m =
        detail::expect_kind<BicomoduleData<R>>(*in[1], "comodule", "coqt-left-action");
    return detail::pack(coqt_left_action(c, m, opt), "left-hopf-module");
  }
  if (op == "coqt-right-action") {
    need(2);
    const auto& c =
        detail::expect_kind<CoqtStructure<R>>(*in[0], "coqt", "coqt-right-action");
    const auto& m =
        detail::expect_kind<BicomoduleData<R>>(*in[1], "comodule", "coqt-right-action");
    return detail::pack(coqt_right_action(c, m, opt), "right-hopf-module");
  }
  if (op == "coqt-hopf-bimodule") {
    need(2);
    const auto& c =
        detail::expect_kind<CoqtStructure<R>>(*in[0], "coqt", "coqt-hopf-bimodule");
    const auto& m =
        detail::expect_kind<BicomoduleData<R>>(*in[1], "comodule", "coqt-hopf-bimodule");
    return detail::pack(coqt_hopf_bimodule(c, m, opt), "hopf-bimodule");
  }
  if (op == "mu-delta-derivation") {
    need(1);
    const auto& b =
        detail::expect_kind<InfBialgebra<R>>(*in[0], "bialgebra", "mu-delta-derivation");
    return detail::pack(mu_delta_derivation(b, opt), "gd-data");
  }
  if (op == "gd-approach1") {
    need(1);
    const auto& g = detail::expect_kind<DerivationData<R>>(*in[0], "gd-data", "gd-approach1");
    Mat<R> zeta = g.zeta ? *g.zeta : g.xi;
    Mat<R> iota = g.iota ? *g.iota : Mat<R>::identity(g.algebra.dim);
    return detail::pack(gd_approach1(g.algebra, g.xi, zeta, iota, g.D, g.lambda, opt),
                        "novikov");
  }
  if (op == "gd-approach2") {
    need(1);
    const auto& g = detail::expect_kind<DerivationData<R>>(*in[0], "gd-data", "gd-approach2");
    return detail::pack(gd_approach2(g.algebra, g.xi, g.D, g.lambda, g.kappa, opt),
                        "novikov");
  }
  if (op == "novikov-poisson-assemble") {
    need(1);
    const auto& g = detail::expect_kind<DerivationData<R>>(*in[0], "gd-data",
                                                           "novikov-poisson-assemble");
    return detail::pack(novikov_poisson_assemble(g.algebra, g.D, g.lambda, g.kappa, opt),
                        "novikov-poisson");
  }
  throw UnknownKindError("unknown construct op '" + op + "'\nknown ops:\n" +
                         construct_ops_help());
}

}  // namespace bihom
