//! Stable tags naming the result each reported number or isomorphism rests on.
//!
//! Every tag emitted anywhere in the crate must appear in [`REGISTRY`]; a test
//! walks the outputs and checks this.

pub const UNIPOTENT_SMALLNESS: &str = "unipotent-cohomology-smallness";
pub const FROBENIUS_KERNEL_SMALLNESS: &str = "frobenius-kernel-smallness";
pub const BOREL_KERNEL_SMALLNESS: &str = "borel-kernel-smallness";
pub const G_R_COHOMOLOGY_SMALLNESS: &str = "g-r-cohomology-smallness";
pub const G_R_EXT_SMALLNESS: &str = "g-r-ext-smallness";
pub const TENSOR_RESTRICTION_LEVEL: &str = "tensor-restriction-level";
pub const SHARP_REFINEMENT: &str = "sharp-smallness-refinement";
pub const FILTRATION_CUTOFF: &str = "filtration-cutoff";
pub const DIGIT_BOUND_ALGEBRAIC: &str = "digit-bound-algebraic-group";
pub const DIGIT_BOUND_FINITE: &str = "digit-bound-finite-group";
pub const CPSK_RESTRICTION: &str = "cpsk-restriction-isomorphism";
pub const COARSE_CPSK: &str = "coarse-cpsk-constants";
pub const SHIFTED_GENERIC: &str = "shifted-generic-construction";
pub const TWIST_STABILITY: &str = "twisting-stability";
pub const LARGE_PRIME_DECOMPOSITION: &str = "large-prime-decomposition";
pub const LARGE_PRIME_COLLAPSE: &str = "large-prime-collapse";
pub const COMMON_ZERO_DIGIT: &str = "common-zero-digit-chain";
pub const QPRIME_STABILITY: &str = "qprime-stability";
pub const NONREGULAR_VANISHING: &str = "nonregular-vanishing";
pub const FINITE_EXCEPTION_FORM: &str = "finite-exception-form";
pub const ZERO_DIGIT_GENERIC: &str = "zero-digit-generic";
pub const DEGREE_ZERO: &str = "degree-zero-invariants";
pub const APPENDIX_DIMENSION: &str = "large-prime-dimension-formula";
pub const WEYL_DIMENSION: &str = "weyl-dimension-formula";
pub const LINKAGE: &str = "linkage-principle";
pub const ROOT_DATUM: &str = "root-datum";
pub const DIGIT_EXPANSION: &str = "p-adic-digit-expansion";
pub const Q_SHIFT: &str = "q-shift-digit-rotation";
pub const KOSTANT_PARTITION: &str = "kostant-partition-function";

pub const REGISTRY: &[&str] = &[
    UNIPOTENT_SMALLNESS,
    FROBENIUS_KERNEL_SMALLNESS,
    BOREL_KERNEL_SMALLNESS,
    G_R_COHOMOLOGY_SMALLNESS,
    G_R_EXT_SMALLNESS,
    TENSOR_RESTRICTION_LEVEL,
    SHARP_REFINEMENT,
    FILTRATION_CUTOFF,
    DIGIT_BOUND_ALGEBRAIC,
    DIGIT_BOUND_FINITE,
    CPSK_RESTRICTION,
    COARSE_CPSK,
    SHIFTED_GENERIC,
    TWIST_STABILITY,
    LARGE_PRIME_DECOMPOSITION,
    LARGE_PRIME_COLLAPSE,
    COMMON_ZERO_DIGIT,
    QPRIME_STABILITY,
    NONREGULAR_VANISHING,
    FINITE_EXCEPTION_FORM,
    ZERO_DIGIT_GENERIC,
    DEGREE_ZERO,
    APPENDIX_DIMENSION,
    WEYL_DIMENSION,
    LINKAGE,
    ROOT_DATUM,
    DIGIT_EXPANSION,
    Q_SHIFT,
    KOSTANT_PARTITION,
];

pub fn is_registered(tag: &str) -> bool {
    REGISTRY.contains(&tag)
}
