//! Exact-arithmetic classification of maximal connected solvable subgroups
//! of semisimple algebraic groups.
//!
//! A semisimple group over `k` (algebraically closed or the reals) is given
//! by a Satake/Tits index: a Dynkin diagram with a node coloring and a
//! diagram involution. For every admissible subset `Θ` of the restricted
//! simple roots the group carries a maximal connected solvable `k`-subgroup
//! built from an anisotropic torus of the Levi, the center of the Levi, and
//! the unipotent radical of the standard parabolic. This crate enumerates
//! those classes up to rational conjugacy, decides the exact conjugacy
//! criterion on the `Θ`-component, and certifies the classification at desk
//! scale by brute-force computation inside exact structure-constant Lie
//! algebra realizations.
//!
//! All arithmetic is over the rationals or the Gaussian rationals; there is
//! no floating point anywhere.
//!
//! The crate is organized along the pipeline:
//!
//! * [`rootsys`] — root systems from Cartan matrices, Weyl orbits of
//!   subsets of simple roots;
//! * [`index`] — Satake indices and restricted root systems with
//!   multiplicities;
//! * [`levi`] — standard parabolics, Levi sub-indices, nilradical data;
//! * [`admissible`] — the equal-rank admissibility test against the bundled
//!   real-form catalog;
//! * [`classify`] — enumeration of solvable classes, the conjugacy verdict,
//!   Weyl-orbit type classes and the membership report;
//! * [`liealg`] — exact structure-constant realizations and the desk-scale
//!   certificates (solvability, maximality, absence of invariant nilpotent
//!   subspaces);
//! * [`cli`] — the `maxsolv` command-line surface with deterministic
//!   reports.
//!
//! See the runnable programs under `examples/` for one walk-through per
//! capability.

pub mod admissible;
pub mod classify;
pub mod cli;
pub mod index;
pub mod levi;
pub mod liealg;
pub mod report;
pub mod rootsys;

pub use admissible::{
    is_admissible, recognize_real_form, AdmissibilityCertificate, AdmissibilityOracle, Catalog,
    RealFormFamily, RealFormLabel,
};
pub use classify::{
    conjugate_classes, enumerate_classes, membership_report, type_classes, ConjugacyVerdict,
    SolvableClassDescriptor, TypeClass,
};
pub use index::{
    components, restricted_system, Color, FieldMode, IndexFactor, RestrictedRootSystem, SatakeIndex,
};
pub use levi::{dim_b, parabolic, ParabolicDescriptor, ThetaSubset};
pub use rootsys::{
    generate_roots, subsets_conjugate, weyl_orbit_subsets, CartanMatrix, Root, RootSystem,
    WeylElement,
};
