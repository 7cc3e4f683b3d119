//! Computable coprimality topology over integral domains.
//!
//! The library makes the Macias topology — the topology generated by the
//! sets `sigma_k = { s : <k> + <s> = R }` of elements coprime to k —
//! effective on five concrete rings: the integers, the Gaussian and
//! Eisenstein integers, polynomials over a prime field, and Z/nZ. All
//! arithmetic is exact 64-bit with loud overflow errors, and every
//! topological statement is checked on finite norm-bounded windows.

pub mod domains;
pub mod topology;
pub mod error;
pub mod experiments;
pub mod golomb;
pub mod ring;

pub use error::{Error, Result};

pub use experiments::{
    cover_witness, cover_witness_report, euclid_walk, prime_density_check, units_not_open_check,
    ExperimentReport,
};

pub use golomb::{
    coprime_cosets_of, coset_window, not_macias_open_witness, verify_decomposition, CoprimeCoset,
};
pub use ring::{
    ext_gcd, factor, factor_with_budget, is_coprime, is_prime, radical_support, BezoutCertificate,
    DomainDescriptor, Factorization, FpPrime, Modulus, RingElement,
};

pub use domains::{
    make_window, make_window_capped, residue_system, units_of, ResidueSystem, Window,
};

pub use topology::{
    check_basis_law, check_product_closure, check_semigroup_window, closure_oracle,
    closure_set, closure_singleton, hyperconnected_witness, indistinguishable,
    is_indiscrete_window, modular_disjoint_closed_pair, sigma_window, specializes,
    ultraconnected_witness, BasicOpen, LawCheck, WindowSet,
};
