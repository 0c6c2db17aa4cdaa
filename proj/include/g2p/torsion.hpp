#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>

#include "g2p/matfl.hpp"
#include "g2p/mumford.hpp"

namespace g2p {

unsigned embedding_degree(u64 q, u64 ell);

struct TorsionBudget {
    unsigned ext_bits = 64;        // cap on kappa * log2(q)
    unsigned sampling_budget = 256;  // divisor samples per candidate extension
    u64 ell_cap = 13;
};
TorsionBudget budget_from_env();

// Checkable stand-ins for the running hypotheses. "Unramified" is proxied by
// the sufficient condition ell does not divide disc(P); the endomorphism-ring
// embedding itself is not testable from curve data and is exercised only
// through its consequences.
struct HypothesisFlags {
    u64 ell = 0;
    unsigned k = 0;
    bool ell_divides_order = false;
    bool k_greater_one = false;    // equivalently ell does not divide q - 1
    bool unramified_proxy = false;  // ell does not divide disc(P)
    bool p_irreducible = false;     // P irreducible over Q
    bool ell_sq_divides_order1 = false;
    bool ell_cubed_divides_orderk = false;

    bool in_hypothesis() const { return k_greater_one && unramified_proxy && p_irreducible; }
    std::string first_violation() const;
};

HypothesisFlags hypothesis_flags(const FrobeniusProfile& profile, u64 ell);

struct DivisorKeyHash {
    size_t operator()(const std::vector<u64>& k) const {
        u64 h = 1469598103934665603ull;
        for (u64 x : k) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};
using SpanTable = std::unordered_map<std::vector<u64>, std::array<u64, 4>, DivisorKeyHash>;

// Everything known about J[ell] for one (curve, ell) pair: the ambient field
// F_{q^kappa}, a basis of the ell-torsion, and the Frobenius matrix with
// respect to that basis (column i = coordinates of phi(x_i)).
struct TorsionContext {
    const HyperellipticCurve* curve = nullptr;
    FrobeniusProfile profile;
    u64 ell = 0;
    unsigned k = 0;
    unsigned kappa = 0;
    const Fq* F = nullptr;
    std::array<MumfordDivisor, 4> basis;
    MatFl M;
    Poly Pbar;
    HypothesisFlags flags;
    SpanTable span;  // full ell^4 coordinate table over the basis

    u64 q_mod_ell() const { return profile.q % ell; }
    MumfordDivisor combine(const std::array<u64, 4>& coords) const;
};

TorsionContext ell_torsion_basis(const HyperellipticCurve& curve, const FrobeniusProfile& profile,
                                 u64 ell, Rng rng, const TorsionBudget& budget = {});

// dim over F_ell of J(F_{q^d})[ell] = nullity of (M^d - I).
unsigned rational_torsion_rank(const TorsionContext& ctx, unsigned d);

struct FrobeniusClassification {
    enum class Kind { Diagonal, NonDiagonalizable, OutOfScope };
    Kind kind = Kind::OutOfScope;
    std::string reason;             // OutOfScope only
    std::vector<u64> eigenvalues;   // Diagonal: ordered (1.., q.., rest by least residue)
    u64 c = 0;                      // NonDiagonalizable: trailing block [[0,-q],[1,c]]
    MatFl transform;                // columns = canonical basis in the old coordinates

    bool diagonal() const { return kind == Kind::Diagonal; }
    bool non_diagonalizable() const { return kind == Kind::NonDiagonalizable; }
};

// Matrix-level classifier (no hypothesis gating): diagonal form with the
// deterministic eigenvalue order, or the companion block form with
// c != q + 1. Throws a counterexample error if the matrix contradicts the
// expected structure.
FrobeniusClassification classify_frobenius_matrix(const MatFl& M, u64 q);

// Context-level classifier: gates on the hypothesis flags (OutOfScope when
// they fail), classifies M, and verifies the canonical form.
FrobeniusClassification classify_frobenius(const TorsionContext& ctx);

// Canonical divisor basis obtained by applying a coordinate transform to the
// sampled basis; verifies that Frobenius acts by the transformed matrix.
struct CanonicalBasis {
    std::array<MumfordDivisor, 4> divisors;
    MatFl M;  // Frobenius matrix in this basis
};
CanonicalBasis transformed_basis(const TorsionContext& ctx, const MatFl& S);

struct DiagSplitRecord {
    bool diagonalizable = false;
    bool splits = false;
    bool agree = false;
};
DiagSplitRecord check_diagonal_iff_splits(const TorsionContext& ctx);

}  // namespace g2p
