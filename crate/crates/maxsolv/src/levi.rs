//! Parabolic and Levi combinatorics for subsets of the restricted simple
//! roots.
//!
//! For `Θ ⊆ Φ` the standard parabolic is the product of the Levi (the
//! centralizer of the standard split torus of type `Θ`) and its unipotent
//! radical. Everything here is bookkeeping over the restricted root system:
//! the Levi sub-index lives on the black nodes plus the white nodes whose
//! restriction lies in the span of `Θ`, the nilradical inventory is the set
//! of restricted positives outside that span, and the dimension of the
//! anisotropic central torus is fixed by the rank bookkeeping
//! `dim A = r − r_Θ − dim S_Θ`. All dimensions are absolute (over the
//! algebraic closure).

use crate::index::{RestrictedRootSystem, SatakeIndex};
use crate::rootsys::Root;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LeviError {
    #[error("theta refers to restricted simple root {0}, but the restricted rank is {1}")]
    ThetaOutOfRange(usize, usize),
    #[error("unknown restricted simple root label `{0}`")]
    UnknownLabel(String),
}

/// A subset of the restricted simple roots `Φ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThetaSubset {
    indices: BTreeSet<usize>,
}

impl ThetaSubset {
    pub fn new(rank: usize, indices: BTreeSet<usize>) -> Result<Self, LeviError> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= rank) {
            return Err(LeviError::ThetaOutOfRange(bad, rank));
        }
        Ok(ThetaSubset { indices })
    }

    pub fn empty() -> Self {
        ThetaSubset {
            indices: BTreeSet::new(),
        }
    }

    pub fn full(rank: usize) -> Self {
        ThetaSubset {
            indices: (0..rank).collect(),
        }
    }

    /// Parses a comma-separated list of restricted simple labels (`a1,a3`),
    /// with an empty list, `-` or `none` denoting the empty subset.
    pub fn parse(rrs: &RestrictedRootSystem, text: &str) -> Result<Self, LeviError> {
        let text = text.trim();
        if text.is_empty() || text == "-" || text == "none" {
            return Ok(ThetaSubset::empty());
        }
        let mut indices = BTreeSet::new();
        for item in text.split(',') {
            let item = item.trim();
            let i = rrs
                .label_index(item)
                .ok_or_else(|| LeviError::UnknownLabel(item.to_string()))?;
            indices.insert(i);
        }
        Ok(ThetaSubset { indices })
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn is_subset_of(&self, other: &ThetaSubset) -> bool {
        self.indices.is_subset(&other.indices)
    }

    /// `a1,a3` or `-` for the empty subset.
    pub fn display(&self, rrs: &RestrictedRootSystem) -> String {
        if self.indices.is_empty() {
            return "-".into();
        }
        self.indices
            .iter()
            .map(|&i| rrs.labels()[i].clone())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Every subset of `Φ`, ordered by (size, lexicographic members).
    pub fn power_set(rank: usize) -> Vec<ThetaSubset> {
        let mut all: Vec<ThetaSubset> = (0..1usize << rank)
            .map(|mask| ThetaSubset {
                indices: (0..rank).filter(|i| mask >> i & 1 == 1).collect(),
            })
            .collect();
        all.sort_by(|a, b| (a.len(), &a.indices).cmp(&(b.len(), &b.indices)));
        all
    }
}

impl fmt::Display for ThetaSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.indices.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Combinatorial data of the standard parabolic `P_Θ`: the dimension of the
/// standard split torus of type `Θ`, the Levi sub-index, the nilradical
/// inventory with multiplicities, and the rank bookkeeping for the
/// anisotropic central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDescriptor {
    pub theta: ThetaSubset,
    pub dim_s_theta: usize,
    pub levi_subindex: SatakeIndex,
    pub levi_nodes: Vec<usize>,
    pub nilrad_restricted: Vec<(Root, usize)>,
    pub dim_nilrad: usize,
    pub dim_a: usize,
    pub absolute_rank: usize,
    pub levi_absolute_rank: usize,
}

/// Builds the parabolic descriptor for `Θ ⊆ Φ`.
pub fn parabolic(
    idx: &SatakeIndex,
    rrs: &RestrictedRootSystem,
    theta: &ThetaSubset,
) -> Result<ParabolicDescriptor, LeviError> {
    let r_phi = rrs.rank();
    if let Some(&bad) = theta.indices().iter().find(|&&i| i >= r_phi) {
        return Err(LeviError::ThetaOutOfRange(bad, r_phi));
    }

    // Levi nodes: black nodes plus white nodes whose restriction (their
    // class) lies in Θ.
    let mut levi_nodes: Vec<usize> = idx.black_nodes();
    for (k, class) in rrs.classes().iter().enumerate() {
        if theta.contains(k) {
            levi_nodes.extend(class.iter().copied());
        }
    }
    levi_nodes.sort_unstable();
    let levi_subindex = idx.sub_index(&levi_nodes);

    // Restricted positives outside the ℤ-span of Θ. In the simple-root
    // basis a positive root lies in ℤ·Θ exactly when its support does.
    let nilrad_restricted: Vec<(Root, usize)> = rrs
        .base()
        .positives()
        .iter()
        .filter(|root| !root.support().iter().all(|i| theta.contains(*i)))
        .map(|root| {
            (
                root.clone(),
                rrs.multiplicity(root).expect("positive has a multiplicity"),
            )
        })
        .collect();
    let dim_nilrad: usize = nilrad_restricted.iter().map(|(_, m)| m).sum();

    // Cross-count: absolute positives minus the positives of the absolute
    // sub-system on the Levi nodes.
    let levi_set: BTreeSet<usize> = levi_nodes.iter().copied().collect();
    let absolute_check = rrs
        .absolute()
        .positives()
        .iter()
        .filter(|r| !r.support().iter().all(|i| levi_set.contains(i)))
        .count();
    debug_assert_eq!(absolute_check, dim_nilrad);

    let absolute_rank = idx.rank();
    let levi_absolute_rank = levi_nodes.len();
    let dim_s_theta = r_phi - theta.len();
    let dim_a = absolute_rank - levi_absolute_rank - dim_s_theta;
    Ok(ParabolicDescriptor {
        theta: theta.clone(),
        dim_s_theta,
        levi_subindex,
        levi_nodes,
        nilrad_restricted,
        dim_nilrad,
        dim_a,
        absolute_rank,
        levi_absolute_rank,
    })
}

/// Dimension of the solvable subgroup built on this parabolic: the maximal
/// torus of the Levi contributes the absolute rank, the unipotent radical
/// the rest.
pub fn dim_b(pd: &ParabolicDescriptor) -> usize {
    pd.absolute_rank + pd.dim_nilrad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{restricted_system, SatakeIndex};

    fn setup(text: &str) -> (SatakeIndex, RestrictedRootSystem) {
        let idx = SatakeIndex::parse(text).unwrap();
        let rrs = restricted_system(&idx).unwrap();
        (idx, rrs)
    }

    #[test]
    fn borel_of_split_a2() {
        let (idx, rrs) = setup("type: A2\nfield: closed\n");
        let pd = parabolic(&idx, &rrs, &ThetaSubset::empty()).unwrap();
        assert_eq!(pd.dim_s_theta, 2);
        assert!(pd.levi_subindex.cartan().is_empty());
        assert_eq!(pd.dim_nilrad, 3);
        assert_eq!(pd.dim_a, 0);
        assert_eq!(dim_b(&pd), 5);
    }

    #[test]
    fn su21_minimal_parabolic() {
        let (idx, rrs) = setup("type: A2\ntau: (1 2)\nfield: real\n");
        let pd = parabolic(&idx, &rrs, &ThetaSubset::empty()).unwrap();
        assert_eq!(pd.dim_s_theta, 1);
        assert!(pd.levi_subindex.cartan().is_empty());
        assert_eq!(pd.absolute_rank, 2);
        assert_eq!(pd.levi_absolute_rank, 0);
        assert_eq!(pd.dim_a, 1);
        assert_eq!(pd.dim_nilrad, 3);
        // Full Θ: the parabolic is the whole group.
        let full = parabolic(&idx, &rrs, &ThetaSubset::full(1)).unwrap();
        assert_eq!(full.dim_nilrad, 0);
        assert_eq!(dim_b(&full), 2);
    }

    #[test]
    fn split_a2_with_one_simple() {
        let (idx, rrs) = setup("type: A2\nfield: closed\n");
        let theta = ThetaSubset::new(2, [0usize].into_iter().collect()).unwrap();
        let pd = parabolic(&idx, &rrs, &theta).unwrap();
        assert_eq!(pd.dim_s_theta, 1);
        assert_eq!(pd.levi_subindex.rank(), 1);
        assert_eq!(pd.dim_nilrad, 2);
        assert_eq!(pd.dim_a, 0);
        assert_eq!(dim_b(&pd), 4);
    }

    #[test]
    fn sl2r_borel() {
        let (idx, rrs) = setup("type: A1\nfield: real\n");
        let pd = parabolic(&idx, &rrs, &ThetaSubset::empty()).unwrap();
        assert_eq!(dim_b(&pd), 2);
    }

    #[test]
    fn theta_out_of_range_rejected() {
        let (idx, rrs) = setup("type: A2\nfield: closed\n");
        let theta = ThetaSubset {
            indices: [5usize].into_iter().collect(),
        };
        assert!(matches!(
            parabolic(&idx, &rrs, &theta),
            Err(LeviError::ThetaOutOfRange(5, 2))
        ));
    }

    #[test]
    fn monotonicity_over_all_subsets() {
        let mut cases: Vec<(String, SatakeIndex, RestrictedRootSystem)> = [
            "type: A2\ntau: (1 2)\nfield: real\n",
            "type: A3\nblack: A3.1, A3.3\nfield: real\n",
            "type: A3\ntau: (1 3)\nfield: real\n",
        ]
        .into_iter()
        .map(|text| {
            let (idx, rrs) = setup(text);
            (text.to_string(), idx, rrs)
        })
        .collect();
        // Every bundled realization index (all of restricted rank ≤ 4).
        for cr in crate::liealg::bundled_realizations() {
            let rrs = crate::index::restricted_system(&cr.index).unwrap();
            cases.push((cr.form_id.clone(), cr.index.clone(), rrs));
        }
        for (name, idx, rrs) in &cases {
            let subsets = ThetaSubset::power_set(rrs.rank());
            for a in &subsets {
                for b in &subsets {
                    if a.is_subset_of(b) {
                        let pa = parabolic(idx, rrs, a).unwrap();
                        let pb = parabolic(idx, rrs, b).unwrap();
                        assert!(pa.dim_nilrad >= pb.dim_nilrad);
                        assert!(pa.dim_s_theta >= pb.dim_s_theta);
                        let equal_both =
                            pa.dim_nilrad == pb.dim_nilrad && pa.dim_s_theta == pb.dim_s_theta;
                        assert_eq!(equal_both, a == b, "{name} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_parabolic_dimension_formula() {
        // dim_B at the empty subset is r + |Δ⁺| − |Δ⁺ on black nodes|.
        for (text, expected) in [
            ("type: A2\nfield: closed\n", 2 + 3),
            ("type: A3\nblack: A3.1, A3.3\nfield: real\n", 3 + 6 - 2),
            ("type: A2\ntau: (1 2)\nfield: real\n", 2 + 3),
        ] {
            let (idx, rrs) = setup(text);
            let pd = parabolic(&idx, &rrs, &ThetaSubset::empty()).unwrap();
            assert_eq!(dim_b(&pd), expected, "{text}");
            let blacks: std::collections::BTreeSet<usize> = idx.black_nodes().into_iter().collect();
            let black_positives = rrs
                .absolute()
                .positives()
                .iter()
                .filter(|r| r.support().iter().all(|i| blacks.contains(i)))
                .count();
            assert_eq!(
                dim_b(&pd),
                idx.rank() + rrs.absolute().positives().len() - black_positives
            );
        }
    }

    #[test]
    fn power_set_order_is_by_size_then_lex() {
        let all = ThetaSubset::power_set(2);
        let shape: Vec<Vec<usize>> = all
            .iter()
            .map(|t| t.indices().iter().copied().collect())
            .collect();
        assert_eq!(shape, vec![vec![], vec![0], vec![1], vec![0, 1]]);
    }
}
