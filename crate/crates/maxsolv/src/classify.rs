//! Enumeration of the solvable classes, the exact conjugacy verdict, and
//! the Weyl-orbit type machinery.
//!
//! A class is determined by an admissible `Θ ⊆ Φ` together with a conjugacy
//! class of anisotropic maximal tori of the derived Levi. The torus part is
//! an opaque caller-chosen slot — the engine never enumerates anisotropic
//! torus classes — so the conjugacy verdict is exact on the `Θ`-component
//! (equality on the nose, not Weyl conjugacy) and conditional on the torus
//! component. Types of semisimple elements are subsets of `Φ` up to the
//! restricted Weyl group; admissibility is constant along each orbit.

use crate::admissible::{
    is_admissible, AdmissibilityCertificate, AdmissibilityOracle, AdmissibleError, Catalog,
    FactorVerdict, RealFormLabel,
};
use crate::index::{RestrictedRootSystem, SatakeIndex};
use crate::levi::{dim_b, parabolic, LeviError, ParabolicDescriptor, ThetaSubset};
use crate::rootsys::weyl_orbit_subsets;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
    #[error(transparent)]
    Levi(#[from] LeviError),
    #[error("descriptors come from different indices (digest {0} vs {1})")]
    DifferentIndices(String, String),
    #[error("type `{theta}` is not admissible; the type of a semisimple element is necessarily an admissible subset ({details})")]
    TypeNotAdmissible { theta: String, details: String },
    #[error("admissibility is not constant on the Weyl orbit of `{0}`")]
    OrbitNotConstant(String),
}

/// One class of maximal connected solvable subgroups: the admissible `Θ`,
/// its parabolic bookkeeping, the admissibility evidence, and the opaque
/// torus-class slot.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvableClassDescriptor {
    pub index_digest: String,
    pub theta: ThetaSubset,
    pub parabolic: ParabolicDescriptor,
    pub certificate: AdmissibilityCertificate,
    pub dim_b: usize,
    pub torus_slot: Option<String>,
    pub levi_factors: Vec<RealFormLabel>,
}

impl SolvableClassDescriptor {
    pub fn with_torus_slot(mut self, slot: &str) -> Self {
        self.torus_slot = Some(slot.to_string());
        self
    }
}

fn descriptor_for(
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
    theta: &ThetaSubset,
    certificate: AdmissibilityCertificate,
) -> Result<SolvableClassDescriptor, ClassifyError> {
    let pd = parabolic(idx, rrs, theta)?;
    let dim = dim_b(&pd);
    let levi_factors = certificate
        .factors
        .iter()
        .filter_map(|f| match f {
            FactorVerdict::EqualRank { label, .. } => Some(label.clone()),
            FactorVerdict::Oracle { .. } => None,
        })
        .collect();
    Ok(SolvableClassDescriptor {
        index_digest: idx.digest(),
        theta: theta.clone(),
        parabolic: pd,
        certificate,
        dim_b: dim,
        torus_slot: None,
        levi_factors,
    })
}

/// One descriptor per admissible `Θ ⊆ Φ`, all `2^|Φ|` subsets tested,
/// ordered by (|Θ|, lexicographic members). Torus slots are left unbound.
pub fn enumerate_classes(
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
    catalog: &Catalog,
    oracle: Option<&dyn AdmissibilityOracle>,
) -> Result<Vec<SolvableClassDescriptor>, ClassifyError> {
    let mut out = Vec::new();
    for theta in ThetaSubset::power_set(rrs.rank()) {
        let cert = is_admissible(idx, rrs, &theta, catalog, oracle)?;
        if cert.admissible {
            out.push(descriptor_for(idx, rrs, &theta, cert)?);
        }
    }
    Ok(out)
}

/// Conjugacy verdict for two classes of the same index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    Conjugate,
    NotConjugate {
        reason: String,
    },
    /// Equal `Θ` but distinct torus slots: conjugacy holds exactly when a
    /// rational point of the parabolic that normalizes the Levi carries one
    /// torus onto the other — a side condition the combinatorial layer
    /// reports rather than decides.
    Conditional {
        condition: String,
    },
}

impl ConjugacyVerdict {
    pub fn summary(&self) -> String {
        match self {
            ConjugacyVerdict::Conjugate => "CONJUGATE".into(),
            ConjugacyVerdict::NotConjugate { reason } => format!("NOT_CONJUGATE ({reason})"),
            ConjugacyVerdict::Conditional { condition } => format!("CONDITIONAL ({condition})"),
        }
    }
}

/// The exact criterion: conjugate only with equal `Θ` (equality on the
/// nose — Weyl-conjugate subsets do not qualify) and torus slots related
/// inside the parabolic.
pub fn conjugate_classes(
    d1: &SolvableClassDescriptor,
    d2: &SolvableClassDescriptor,
) -> Result<ConjugacyVerdict, ClassifyError> {
    if d1.index_digest != d2.index_digest {
        return Err(ClassifyError::DifferentIndices(
            d1.index_digest.clone(),
            d2.index_digest.clone(),
        ));
    }
    if d1.theta != d2.theta {
        return Ok(ConjugacyVerdict::NotConjugate {
            reason: "theta differs".into(),
        });
    }
    if d1.torus_slot == d2.torus_slot {
        return Ok(ConjugacyVerdict::Conjugate);
    }
    let (a, b) = (
        d1.torus_slot.clone().unwrap_or_else(|| "(unbound)".into()),
        d2.torus_slot.clone().unwrap_or_else(|| "(unbound)".into()),
    );
    Ok(ConjugacyVerdict::Conditional {
        condition: format!(
            "conjugate iff torus slots `{a}` and `{b}` are related by a rational point of the parabolic normalizing the Levi"
        ),
    })
}

/// A Weyl orbit of subsets of `Φ` with its (orbit-constant) admissibility.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeClass {
    pub members: Vec<ThetaSubset>,
    pub admissible: bool,
}

/// Partition of the power set of `Φ` into restricted-Weyl-group orbits.
pub fn type_classes(
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
    catalog: &Catalog,
    oracle: Option<&dyn AdmissibilityOracle>,
) -> Result<Vec<TypeClass>, ClassifyError> {
    let rank = rrs.rank();
    let mut remaining: BTreeSet<BTreeSet<usize>> = ThetaSubset::power_set(rank)
        .into_iter()
        .map(|t| t.indices().clone())
        .collect();
    let mut out = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let orbit = weyl_orbit_subsets(rrs.base(), &seed);
        let mut members = Vec::new();
        let mut verdicts = Vec::new();
        for subset in &orbit {
            remaining.remove(subset);
            let theta = ThetaSubset::new(rank, subset.clone())?;
            let cert = is_admissible(idx, rrs, &theta, catalog, oracle)?;
            verdicts.push(cert.admissible);
            members.push(theta);
        }
        let admissible = verdicts[0];
        if verdicts.iter().any(|&v| v != admissible) {
            return Err(ClassifyError::OrbitNotConstant(members[0].to_string()));
        }
        members.sort_by(|a, b| (a.len(), a.indices()).cmp(&(b.len(), b.indices())));
        out.push(TypeClass {
            members,
            admissible,
        });
    }
    out.sort_by(|a, b| {
        (a.members[0].len(), a.members[0].indices())
            .cmp(&(b.members[0].len(), b.members[0].indices()))
    });
    Ok(out)
}

/// Report for an element whose semisimple part has the given type: the type
/// must be admissible, and the element then lies in the corresponding class
/// with the torus slot unbound.
pub fn membership_report(
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
    catalog: &Catalog,
    oracle: Option<&dyn AdmissibilityOracle>,
    theta_of_semisimple_part: &ThetaSubset,
) -> Result<SolvableClassDescriptor, ClassifyError> {
    let cert = is_admissible(idx, rrs, theta_of_semisimple_part, catalog, oracle)?;
    if !cert.admissible {
        let details = cert
            .factors
            .iter()
            .filter(|f| !f.admissible())
            .map(|f| f.describe())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(ClassifyError::TypeNotAdmissible {
            theta: theta_of_semisimple_part.display(rrs),
            details,
        });
    }
    descriptor_for(idx, rrs, theta_of_semisimple_part, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::restricted_system;

    fn setup(text: &str) -> (SatakeIndex, RestrictedRootSystem) {
        let idx = SatakeIndex::parse(text).unwrap();
        let rrs = restricted_system(&idx).unwrap();
        (idx, rrs)
    }

    fn classes(text: &str) -> Vec<(String, usize)> {
        let (idx, rrs) = setup(text);
        enumerate_classes(&idx, &rrs, Catalog::bundled(), None)
            .unwrap()
            .into_iter()
            .map(|d| (d.theta.display(&rrs), d.dim_b))
            .collect()
    }

    #[test]
    fn split_a2_closed_has_only_the_borel() {
        assert_eq!(
            classes("type: A2\nfield: closed\n"),
            vec![("-".to_string(), 5)]
        );
    }

    #[test]
    fn sl2r_has_borel_and_compact_torus() {
        assert_eq!(
            classes("type: A1\nfield: real\n"),
            vec![("-".to_string(), 2), ("a1".to_string(), 1)]
        );
    }

    #[test]
    fn sl4r_has_five_classes() {
        assert_eq!(
            classes("type: A3\nfield: real\n"),
            vec![
                ("-".to_string(), 9),
                ("a1".to_string(), 8),
                ("a2".to_string(), 8),
                ("a3".to_string(), 8),
                ("a1,a3".to_string(), 7),
            ]
        );
    }

    #[test]
    fn su21_classes() {
        assert_eq!(
            classes("type: A2\ntau: (1 2)\nfield: real\n"),
            vec![("-".to_string(), 5), ("a1".to_string(), 2)]
        );
    }

    #[test]
    fn conjugacy_requires_theta_equality_on_the_nose() {
        let (idx, rrs) = setup("type: A2\nfield: real\n");
        let all = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
        let d1 = all.iter().find(|d| d.theta.display(&rrs) == "a1").unwrap();
        let d2 = all.iter().find(|d| d.theta.display(&rrs) == "a2").unwrap();
        // The two subsets are Weyl conjugate, yet the classes are not.
        assert!(crate::rootsys::subsets_conjugate(
            rrs.base(),
            d1.theta.indices(),
            d2.theta.indices()
        ));
        assert_eq!(
            conjugate_classes(d1, d2).unwrap(),
            ConjugacyVerdict::NotConjugate {
                reason: "theta differs".into()
            }
        );
        assert_eq!(
            conjugate_classes(d1, d1).unwrap(),
            ConjugacyVerdict::Conjugate
        );
        let with_slot = d1.clone().with_torus_slot("T0");
        let with_other = d1.clone().with_torus_slot("T1");
        assert_eq!(
            conjugate_classes(&with_slot, &with_slot).unwrap(),
            ConjugacyVerdict::Conjugate
        );
        assert!(matches!(
            conjugate_classes(&with_slot, &with_other).unwrap(),
            ConjugacyVerdict::Conditional { .. }
        ));
    }

    #[test]
    fn su21_distinct_thetas_not_conjugate() {
        let (idx, rrs) = setup("type: A2\ntau: (1 2)\nfield: real\n");
        let all = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
        assert_eq!(
            conjugate_classes(&all[0], &all[1]).unwrap(),
            ConjugacyVerdict::NotConjugate {
                reason: "theta differs".into()
            }
        );
    }

    #[test]
    fn different_indices_rejected() {
        let (idx1, rrs1) = setup("type: A2\nfield: real\n");
        let (idx2, rrs2) = setup("type: A1\nfield: real\n");
        let a = enumerate_classes(&idx1, &rrs1, Catalog::bundled(), None).unwrap();
        let b = enumerate_classes(&idx2, &rrs2, Catalog::bundled(), None).unwrap();
        assert!(matches!(
            conjugate_classes(&a[0], &b[0]),
            Err(ClassifyError::DifferentIndices(_, _))
        ));
    }

    #[test]
    fn type_class_counts() {
        let (idx, rrs) = setup("type: A2\nfield: real\n");
        let tc = type_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
        assert_eq!(tc.len(), 3);
        let sizes: Vec<usize> = tc.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 2, 1]);

        let (idx, rrs) = setup("type: A1\nfield: real\n");
        assert_eq!(
            type_classes(&idx, &rrs, Catalog::bundled(), None)
                .unwrap()
                .len(),
            2
        );

        let (idx, rrs) = setup("type: A2\ntau: (1 2)\nfield: real\n");
        assert_eq!(
            type_classes(&idx, &rrs, Catalog::bundled(), None)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn membership_examples() {
        let (idx, rrs) = setup("type: A2\nfield: real\n");
        let theta = ThetaSubset::parse(&rrs, "a1").unwrap();
        let d = membership_report(&idx, &rrs, Catalog::bundled(), None, &theta).unwrap();
        assert_eq!(d.dim_b, 4);
        assert!(d.torus_slot.is_none());

        let (cidx, crrs) = setup("type: A3\nfield: closed\n");
        let d = membership_report(
            &cidx,
            &crrs,
            Catalog::bundled(),
            None,
            &ThetaSubset::empty(),
        )
        .unwrap();
        assert_eq!(d.dim_b, 3 + 6);

        let bad = ThetaSubset::parse(&rrs, "a1,a2").unwrap();
        let err = membership_report(&idx, &rrs, Catalog::bundled(), None, &bad).unwrap_err();
        match err {
            ClassifyError::TypeNotAdmissible { details, .. } => {
                assert!(details.contains("sl(3,R)"), "{details}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn su32_and_su42_mix_complex_and_quasi_split_levis() {
        // su(3,2): the short-root Levi is a tau-swapped pair (complex type,
        // rejected); the long-root Levi is an su(2,1) block (accepted).
        let (idx, rrs) = setup("type: A4\ntau: (1 4)(2 3)\nfield: real\n");
        let classes = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
        let shape: Vec<(String, usize)> =
            classes.iter().map(|d| (d.theta.display(&rrs), d.dim_b)).collect();
        assert_eq!(
            shape,
            vec![
                ("-".to_string(), 14),
                ("a2".to_string(), 11),
                ("a1,a2".to_string(), 4),
            ]
        );
        let rejected = is_admissible(
            &idx,
            &rrs,
            &ThetaSubset::parse(&rrs, "a1").unwrap(),
            Catalog::bundled(),
            None,
        )
        .unwrap();
        assert!(!rejected.admissible);
        match &rejected.factors[0] {
            crate::admissible::FactorVerdict::EqualRank { label, .. } => {
                assert_eq!(label.to_string(), "complex(A1)");
            }
            other => panic!("unexpected {other:?}"),
        }

        // su(4,2): a black kernel node joins the a2-class nodes into an
        // su(3,1) Levi; the minimal Levi is the compact kernel itself.
        let (idx, rrs) = setup("type: A5\nblack: 3\ntau: (1 5)(2 4)\nfield: real\n");
        let classes = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
        let shape: Vec<(String, usize, String)> = classes
            .iter()
            .map(|d| {
                (
                    d.theta.display(&rrs),
                    d.dim_b,
                    d.levi_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(","),
                )
            })
            .collect();
        assert_eq!(
            shape,
            vec![
                ("-".to_string(), 19, "compact(A1)".to_string()),
                ("a2".to_string(), 14, "su(3,1)".to_string()),
                ("a1,a2".to_string(), 5, "su(4,2)".to_string()),
            ]
        );
    }

    #[test]
    fn anisotropic_index_has_one_class_the_maximal_torus() {
        // All-black diagram: restricted rank zero, the unique class is a
        // maximal anisotropic torus of full absolute rank.
        let (idx, rrs) = setup("type: G2\nblack: 1, 2\nfield: real\n");
        assert_eq!(rrs.rank(), 0);
        let classes = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].dim_b, 2);
        assert_eq!(classes[0].parabolic.dim_nilrad, 0);
        assert_eq!(classes[0].levi_factors[0].to_string(), "compact(G2)");
    }

    #[test]
    fn split_high_rank_classification_matches_combinatorial_oracle() {
        // Independent route: over the reals a split simple factor is equal
        // rank exactly for A1, all B/C, even D, E7, E8, F4 and G2 (closed
        // forms of the compact ranks). The engine instead recognizes every
        // Levi factor against the bundled diagram catalog; the two routes
        // must agree on every subset of every split index up to rank 8.
        fn split_factor_equal_rank(name: &str) -> bool {
            let letter = name.chars().next().unwrap();
            let rank: usize = name[1..].parse().unwrap();
            match letter {
                'A' => rank == 1,
                'B' | 'C' | 'F' | 'G' => true,
                'D' => rank % 2 == 0,
                'E' => rank != 6,
                other => panic!("unexpected type {other}"),
            }
        }
        for t in ["B5", "D5", "D6", "E6", "E7", "E8", "A5"] {
            let (idx, rrs) = setup(&format!("type: {t}\nfield: real\n"));
            let expected = ThetaSubset::power_set(rrs.rank())
                .into_iter()
                .filter(|theta| {
                    if theta.is_empty() {
                        return true;
                    }
                    let nodes: Vec<usize> = theta.indices().iter().copied().collect();
                    let sub = idx.cartan().sub_matrix(&nodes);
                    sub.type_name().split('+').all(split_factor_equal_rank)
                })
                .count();
            let classes = enumerate_classes(&idx, &rrs, Catalog::bundled(), None).unwrap();
            assert_eq!(classes.len(), expected, "{t}");
        }
    }

    #[test]
    fn class_count_refines_admissible_type_classes() {
        // Classes are counted per subset, types per Weyl orbit, so the class
        // count dominates, with equality exactly when every admissible orbit
        // is a singleton.
        for cr in crate::liealg::bundled_realizations() {
            let rrs = restricted_system(&cr.index).unwrap();
            let catalog = Catalog::bundled();
            let classes = enumerate_classes(&cr.index, &rrs, catalog, None).unwrap();
            let orbits: Vec<TypeClass> = type_classes(&cr.index, &rrs, catalog, None)
                .unwrap()
                .into_iter()
                .filter(|tc| tc.admissible)
                .collect();
            assert!(classes.len() >= orbits.len(), "{}", cr.form_id);
            let all_singletons = orbits.iter().all(|tc| tc.members.len() == 1);
            assert_eq!(
                classes.len() == orbits.len(),
                all_singletons,
                "{}",
                cr.form_id
            );
        }
    }

    #[test]
    fn class_count_equals_admissible_count() {
        for text in [
            "type: A2\nfield: closed\n",
            "type: B2\nfield: closed\n",
            "type: A3\nfield: real\n",
            "type: A2\ntau: (1 2)\nfield: real\n",
        ] {
            let (idx, rrs) = setup(text);
            let catalog = Catalog::bundled();
            let classes = enumerate_classes(&idx, &rrs, catalog, None).unwrap();
            let admissible = ThetaSubset::power_set(rrs.rank())
                .into_iter()
                .filter(|t| {
                    is_admissible(&idx, &rrs, t, catalog, None)
                        .unwrap()
                        .admissible
                })
                .count();
            assert_eq!(classes.len(), admissible);
            if idx.field() == crate::index::FieldMode::AlgebraicallyClosed {
                assert_eq!(classes.len(), 1);
            }
        }
    }
}
