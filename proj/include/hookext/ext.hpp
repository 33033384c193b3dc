#pragma once

// Ext^i(Δ(a,1^b), M) from the torsion of the cokernels of the Hom-complex
// differentials, explicit cochains generating the groups, and the maps
// between them induced by π0 and θ.

#include "hookext/check.hpp"
#include "hookext/resolution.hpp"
#include "hookext/zlinalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hookext {

/// D_{a+k} (x) Λ^{b-k}.
Target tensor_target(int a, int b, int k);
/// Δ(a+k, 1^{b-k}).
Target hook_target(int a, int b, int k);

struct ExtResult {
    int a = 0, b = 0, i = 0;
    Target target;
    AbelianGroup e_group;    // full cokernel of Hom(θ_i, M)
    AbelianGroup ext_group;  // its torsion part
};

/// Ext^i(Δ(a,1^b), M) for i >= 1; the zero group when i > b.
ExtResult ext_group(int a, int b, const Target& m, int i);

/// Cross-check: torsion of ker(d_{i+1}) / im(d_i) computed from a kernel
/// basis, independent of the cokernel-torsion route.
AbelianGroup ext_by_homology(int a, int b, const Target& m, int i);

/// Rank of the i-th cohomology of Hom(P_*, M) over Q (the Hom rank for i = 0).
std::size_t cohomology_free_rank(int a, int b, const Target& m, int i);

/// dim over F_p of Ext^i (Hom for i = 0) between the reduced modules,
/// computed from the reduced differentials.
std::size_t ext_modular(int a, int b, const Target& m, int i, long p);

/// The same dimension predicted from the integral groups:
/// free rank of H^i + #(p | factors of Ext^i) + #(p | factors of Ext^{i+1}).
std::size_t universal_coefficient_dimension(int a, int b, const Target& m, int i, long p);

// ---------------------------------------------------------------------------
// closed forms

/// Closed-form Ext^i when one is known for this (a, b, M, i): the hook
/// targets Δ(a+k,1^{b-k}) for i = 1, i = k and i > k, and the tensor
/// targets D_{a+k} (x) Λ^{b-k} (1 <= k < b) for i = 1, i = k and i > k.
std::optional<AbelianGroup> expected_ext(int a, int b, const Target& m, int i);

/// Predicted dim over F_p of Hom (i = 0, 2 <= k <= b) or of Ext^k between
/// the reduced hook modules Δ(a,1^b) and Δ(a+k,1^{b-k}).
std::optional<std::size_t> expected_modular_dimension(int a, int b, int k, int i, long p);

// ---------------------------------------------------------------------------
// cochains

struct Cochain {
    int degree = 0;
    IntVector coords;
};

/// Degree-1 cochain into D_{a+k} (x) Λ^{b-k} whose class generates
/// Ext^1 = Z_2.  Needs 1 <= k < b.
Cochain generator_g(int a, int b, int k);

/// Degree-k cochain into D_{a+k} (x) Λ^{b-k} whose class generates Ext^k
/// when k+1 is a prime power.  Needs 1 <= k <= b.
Cochain generator_gamma(int a, int b, int k);

/// Degree-(k-1) cochain whose image under the differential is (k+1)·gamma.
Cochain gamma_preimage(int a, int b, int k);

/// 1^(a+k)|2...q in Hom(P_k, Δ(a+k,1^{b-k})), q = b-k+1.
Cochain delta_one(int a, int b, int k);

/// 1^(a+k-j) i^(j)|2...q in Hom(P_k, Δ(a+k,1^{b-k})); 2 <= i <= q, 0 <= j <= k.
Cochain delta(int a, int b, int k, int i, int j);

// ---------------------------------------------------------------------------
// induced maps

enum class ModuleMap {
    projection,  // π0 : D_{a+k} (x) Λ^{b-k} -> Δ(a+k,1^{b-k})
    koszul,      // θ  : D_{a+k} (x) Λ^{b-k} -> D_{a+k-1} (x) Λ^{b-k+1}
    embedding,   // i  : Δ(a+k+1,1^{b-k-1}) -> D_{a+k} (x) Λ^{b-k}
};

struct InducedMap {
    Target source;
    Target target;
    IntMatrix matrix;  // Hom(P_i, source) -> Hom(P_i, target)
};

InducedMap induced_map(ModuleMap f, int a, int b, int k, int i);
IntMatrix induced_map_matrix(ModuleMap f, int a, int b, int k, int i);

// ---------------------------------------------------------------------------
// checks

/// d_k(gamma_preimage) == (k+1)·gamma, and when k+1 = p^e and k < b also:
/// gamma has order p in the cokernel.
CheckReport check_gamma(int a, int b, int k);

/// g_k has order 2 in the cokernel of the first differential.
CheckReport check_generator_g(int a, int b, int k);

/// δ_{i,j} - C(a+k+i-2, j)·δ_1 lies in the image of the k-th differential
/// into Δ(a+k,1^{b-k}) for 2 <= i <= q-1, 0 <= j <= k.
CheckReport check_delta_relations(int a, int b, int k);

/// E^k(Δ(a,1^b), Δ(a+k,1^{b-k})) is cyclic, generated by the class of δ_1.
CheckReport check_cyclicity(int a, int b, int k);

/// π0*(g_1) ≡ ((a + ε_b - 1)(a+b)/2)·δ_1 modulo the image, b >= 2.
CheckReport check_projection_factor(int a, int b);

/// θ*(g_k) against f·g_{k-1} for the two parity candidates
/// f = a + ε_{b-k+1} - 1 and f = a + ε_{b-k} - 1.
struct KoszulFactor {
    Integer next_parity_factor;  // a + ε_{b-k+1} - 1
    Integer same_parity_factor;  // a + ε_{b-k} - 1
    bool next_parity_holds = false;
    bool same_parity_holds = false;
};
KoszulFactor koszul_factor(int a, int b, int k);

/// Ext^1(Δ(a,1^b), Δ(a+k,1^{b-k})) for 2 <= k <= b obtained as the kernel
/// of the induced map on Ext^1 of the tensor modules (π0* for k = 2, θ* for
/// k >= 3), decided by cokernel membership of the image of g.
AbelianGroup ext1_via_induced_maps(int a, int b, int k);

/// Ext^i(Δ(a,1^b), Δ(a+k,1^{b-k})) = 0 for i > k.
CheckReport check_vanishing(int a, int b, int k, int i);

}  // namespace hookext
