#pragma once

// Built-in presentations used by the demos and tests.

namespace gsdeform::embedded {

/// DGA with basis 1, a2, a3, b3, a2a3 and a2·a3 = a3·a2 = a2a3.
extern const char* const kExample4Dga;
/// Same algebra with b renamed and the cup-one product E_{1,1}(b; b) = a2a3.
extern const char* const kLoopSpaceDga;
/// The 1-cochain ψ₂¹(β₂⊗β₂) = γ on the commutative example.
extern const char* const kExample4Psi;
/// ω^{1,3} + ω^{2,2} on the commutative example: the β₂⊗β₂ values plus the entries that make it D(ψ).
extern const char* const kExample4Omega;
/// The transferred loop-space ω at bar cap 8.
extern const char* const kLoopSpaceOmega;
extern const char* const kLoopSpacePins;
extern const char* const kLoopSpacePinsAlt;

}  // namespace gsdeform::embedded
