#pragma once

#include "acb/curvature.hpp"
#include "acb/soliton.hpp"

#include <string>
#include <vector>

namespace acb {

enum class CheckStatus {
    pass,
    fail,
    /// The relation is conditional and its hypothesis does not hold here.
    not_applicable,
    /// Stated for completeness; needs class conditions this engine does not have.
    unverifiable,
};

std::string to_string(CheckStatus status);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    /// Witness component and residual on failure, or a note.
    std::string detail;
};

struct CheckList {
    std::string verifier;
    bool skipped = false;
    std::string note;
    std::vector<Check> checks;
    /// Particular cases of a theorem that apply, e.g. "case (iii)".
    std::vector<std::string> labels;

    /// No check failed (a skipped list passes).
    bool passed() const;
    const Check* find(std::string_view name) const;
};

/// Everything the verifiers read, assembled once.
struct AnalysisInputs {
    const Manifold& manifold;
    const CurvaturePack& pack;
    const EinsteinLikeFit& einstein;
    const SolitonFit& soliton;
    const TorseForming& torse;
    bool sasaki_like = false;
    bool f5_condition = false;
};

/// Ricci identities of an Einstein-like manifold, including the ∇ρ formula.
CheckList verify_einstein_like_properties(const AnalysisInputs& in);

/// Sasaki-like and Einstein-like: constant relations, ∇ρ closed form,
/// recovery of (a, b, c) from the divergences and the corollary equivalences.
CheckList verify_sasaki_einstein_like(const AnalysisInputs& in);

/// Einstein-like plus Ricci-like soliton: sum of constants, geodesic ξ and
/// the consequences along ξ.
CheckList verify_soliton_geodesic_props(const AnalysisInputs& in);

/// Sasaki-like soliton theorem: constant relations and particular cases.
CheckList verify_theorem_sasaki(const AnalysisInputs& in);

/// Torse-forming soliton theorem: constant relations, squared f relation,
/// curvature along ξ, particular cases and the F5 refinements.
CheckList verify_theorem_torse(const AnalysisInputs& in);

/// The Sasaki-like identity suite (∇ξ = -φ, curvature along ξ, Lee forms...).
CheckList verify_sasaki_identities(const Manifold& m, const CurvaturePack& pack);

} // namespace acb
