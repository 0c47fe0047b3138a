#pragma once

#include "spinobstruct/framed.hpp"
#include "spinobstruct/hom_search.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace spinobstruct::groups {

/// Structure group U(1) (or any abelian circle class): decided through
/// characters of the abelianization.
struct CircleClassTarget {};

/// The cyclic group Z/2m with the fiber class required to land on the
/// order-2 element m.
struct CyclicTarget {
    long long m = 1;
};

/// An explicit finite gauge model with designated central involution z_g.
struct FiniteModelTarget {
    std::shared_ptr<const FiniteGroup> group;
    int z_g = 0;
    std::string label;
};

/// A list of finite models searched in order (finite subgroup families,
/// product stand-ins). complete_for_finite_sources records whether a
/// negative outcome is a proof for finite sources.
struct ModelListTarget {
    std::vector<FiniteModelTarget> models;
    std::string label;
    bool complete_for_finite_sources = false;
};

/// The family of finite subgroups of SU(2) containing -1. Expanded per
/// source: for a finite source only models of dividing order are searched
/// (complete by the subgroup classification); for presented sources the
/// family is capped and a negative answer is only "not found". With
/// times_z2 set, each model P is replaced by P x Z/2 with z_G = (1,-1),
/// modeling an extra commuting global phase.
struct Su2FamilyTarget {
    bool times_z2 = false;
    long long cyclic_cap = 24;
    long long dicyclic_cap = 24;
    long long max_cosets = 1'000'000;
};

/// Standard-model target: the central constraint lands in the abelian
/// baryon/lepton phases, so the decision is the circle-class one; the model
/// list only enriches witness output with nonabelian factors.
struct SmTarget {
    ModelListTarget witness_models;
};

using GaugeTargetHandle = std::variant<CircleClassTarget, CyclicTarget, FiniteModelTarget,
                                       ModelListTarget, Su2FamilyTarget, SmTarget>;

struct GaugeWitness {
    std::string model;                          // target model label
    std::vector<std::string> generator_names;   // source generators
    std::vector<std::string> image_labels;      // matching target elements
    Homomorphism hom;                           // raw image indices
    std::shared_ptr<const FiniteGroup> model_group; // null for character witnesses
};

struct GaugeDecision {
    bool exists = false;
    std::string reason; // "witness_found" | "i_star_not_injective" | "z_dies_in_abelianization"
                        // | "no_homomorphism" | "no_witness_among_models"
    std::vector<GaugeWitness> witnesses;
};

struct SpingOptions {
    bool witnesses = false;       // enumerate witnesses (otherwise stop at the first)
    bool conjugacy_dedup = true;  // deduplicate witnesses up to target conjugacy
    long long witness_limit = 64; // cap on reported witnesses per model
};

/// Decide existence of a homomorphism from the framed group to the target
/// that sends z to the target's designated central element, and produce
/// witnesses. Returns immediately with reason "i_star_not_injective" when
/// the fiber loop is contractible.
GaugeDecision exists_sping(const FramedGroup& f, const GaugeTargetHandle& target,
                           const SpingOptions& options = {});

std::string target_label(const GaugeTargetHandle& target);

/// Display names of the framed group's generators (presentation names, or
/// labels of the table's generating set).
std::vector<std::string> framed_generator_names(const FramedGroup& f);

} // namespace spinobstruct::groups
