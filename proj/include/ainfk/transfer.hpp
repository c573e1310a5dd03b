// Minimal models: contraction data from a dg-model (deterministic row
// reduction splitting), homotopy transfer through the perturbation series on
// the bar side, and the artinian local-algebra fixtures.
#pragma once

#include "ainfk/functor.hpp"
#include "ainfk/linalg.hpp"

namespace ainfk {

struct InvalidContraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-hom-space contraction (H, i, p, h) of the m_1-complex:
//   p i = id,   i p - id = m_1 h + h m_1,   h i = 0,  p h = 0,  h h = 0.
struct ContractionData {
    const AInfStructure* base = nullptr;
    std::map<std::pair<int, int>, GradedSpace> h_space;
    // (src,tgt) -> maps; keyed like LinearMap entries
    std::map<std::pair<int, int>, LinearMap> incl;  // H -> A, degree 0
    std::map<std::pair<int, int>, LinearMap> proj;  // A -> H, degree 0
    std::map<std::pair<int, int>, LinearMap> htpy;  // A -> A, degree -1
};

// Deterministic splitting of the m_1 complexes of a dg-model.
ContractionData contraction_from_dg(const AInfStructure& D);

// Check the five contraction identities exactly.
bool contraction_valid(const AInfStructure& D, const ContractionData& c);

struct MinimalModel {
    AInfStructure minimal;   // structure on cohomology, m_1 = 0
    AInfFunctor projection;  // F : D -> minimal, F_1 = p

    MinimalModel() = default;
    MinimalModel(MinimalModel&& o) noexcept
        : minimal(std::move(o.minimal)), projection(std::move(o.projection)) {
        projection.tgt = &minimal;
    }
    MinimalModel& operator=(MinimalModel&& o) noexcept {
        minimal = std::move(o.minimal);
        projection = std::move(o.projection);
        projection.tgt = &minimal;
        return *this;
    }
    MinimalModel(const MinimalModel& o) : minimal(o.minimal), projection(o.projection) {
        projection.tgt = &minimal;
    }
    MinimalModel& operator=(const MinimalModel& o) {
        minimal = o.minimal;
        projection = o.projection;
        projection.tgt = &minimal;
        return *this;
    }
};

struct TransferOptions {
    // inclusive degree window for the transferred product tables
    // (defaults to everything the cohomology supports)
    std::optional<std::pair<int, int>> degree_window;
    // materialize projection-functor component tables up to this arity
    // (source-side enumeration can be very large; 0 = only F_1)
    int functor_table_arity = 0;
};

MinimalModel transfer(const AInfStructure& D, const ContractionData& c, int N,
                      const TransferOptions& opts = {});

// Endomorphism dg-algebra of the truncated two-periodic free resolution of
// k over k[x]/(x^n); homological width 0..width (default N+2).
AInfStructure local_algebra_fixture(int n, int N, const Field& field, int width = -1);

// Restriction of a minimal structure to its positive-degree part (an
// A-infinity subalgebra when all degrees are >= 1).
AInfStructure positive_part(const AInfStructure& S);

}  // namespace ainfk
