//! Numerical invariants of the edge ideal of a partition.
//!
//! For the Ferrers edge ideal the arithmetical rank, the cohomological
//! dimension, and the projective dimension all coincide with
//! `μ = max_j(λ_j + j − 1)`; the diagonal certificate realizes the upper
//! bound and the projective dimension supplies the matching lower bound. The
//! height is the minimum height of a minimal prime, and the ideal is a
//! set-theoretic complete intersection (height = arithmetical rank) exactly
//! when `λ` is the staircase `(m, m−1, …, 1)`.

use thiserror::Error;

use crate::ideal::minimal_decomposition;
use crate::shape::Partition;

/// The two set-theoretic complete intersection characterizations disagreed.
/// Both are theorems, so this is an implementation bug, never valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "InternalInconsistency: staircase test says {staircase} but height {height} vs ara {ara} says {}",
    height == ara
)]
pub struct InternalInconsistency {
    pub staircase: bool,
    pub height: u64,
    pub ara: u64,
}

/// Every invariant of one partition's edge ideal in one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub lambda: Partition,
    pub mu: u64,
    pub ara: u64,
    pub pd: u64,
    pub cd: u64,
    pub height: u64,
    pub k: u32,
    pub corners: Vec<u32>,
    pub is_stci: bool,
    pub generator_count: u64,
}

/// Arithmetical rank: the least number of elements generating the edge ideal
/// up to radical. Equals `μ`.
pub fn ara(p: &Partition) -> u64 {
    p.mu()
}

/// Projective dimension of the edge ideal. Equals `μ`.
pub fn pd(p: &Partition) -> u64 {
    p.mu()
}

/// Cohomological dimension; for squarefree monomial ideals this is the
/// projective dimension.
pub fn cd(p: &Partition) -> u64 {
    p.mu()
}

/// Height: the minimum height over the minimal prime components, which comes
/// to `min_{j=1..n+1}(λ_j + j − 1)` with `λ_{n+1} = 0`.
pub fn height(p: &Partition) -> u64 {
    minimal_decomposition(p)
        .iter()
        .map(|c| c.height())
        .min()
        .expect("decomposition is nonempty")
}

/// Set-theoretic complete intersection test: true exactly for staircases.
pub fn is_stci(p: &Partition) -> bool {
    p.is_staircase()
}

/// Computes all invariants, cross-checking the two STCI characterizations
/// (staircase shape vs. height = ara) against each other.
pub fn invariant_report(p: &Partition) -> Result<InvariantReport, InternalInconsistency> {
    let mu = p.mu();
    let ara = ara(p);
    let height = height(p);
    let staircase = is_stci(p);
    if staircase != (height == ara) {
        return Err(InternalInconsistency {
            staircase,
            height,
            ara,
        });
    }
    let profile = p.outer_corners();
    Ok(InvariantReport {
        lambda: p.clone(),
        mu,
        ara,
        pd: pd(p),
        cd: cd(p),
        height,
        k: profile.k(),
        corners: profile.corners().to_vec(),
        is_stci: staircase,
        generator_count: p.cell_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ara_values() {
        assert_eq!(ara(&p(&[6, 4, 4, 2, 1])), 6);
        assert_eq!(ara(&p(&[1])), 1);
        assert_eq!(ara(&p(&[4, 3, 2, 1])), 4);
    }

    #[test]
    fn height_values() {
        assert_eq!(height(&p(&[6, 4, 4, 2, 1])), 5);
        assert_eq!(height(&p(&[1])), 1);
        assert_eq!(height(&p(&[1, 1])), 1);
        assert_eq!(height(&p(&[2, 2])), 2);
    }

    #[test]
    fn height_matches_min_formula() {
        for q in [p(&[6, 4, 4, 2, 1]), p(&[1]), p(&[3, 3]), p(&[5, 1, 1, 1])] {
            let n = q.row_count() as u64;
            let formula = (1..=n + 1)
                .map(|j| {
                    let part = if j <= n {
                        u64::from(q.part(j as u32))
                    } else {
                        0
                    };
                    part + j - 1
                })
                .min()
                .unwrap();
            assert_eq!(height(&q), formula);
        }
    }

    #[test]
    fn stci_cases() {
        assert!(is_stci(&p(&[3, 2, 1])));
        assert!(!is_stci(&p(&[6, 4, 4, 2, 1])));
        assert!(!is_stci(&p(&[2, 2])));
    }

    #[test]
    fn report_for_worked_example() {
        let report = invariant_report(&p(&[6, 4, 4, 2, 1])).unwrap();
        assert_eq!(report.mu, 6);
        assert_eq!(report.ara, 6);
        assert_eq!(report.pd, 6);
        assert_eq!(report.cd, 6);
        assert_eq!(report.height, 5);
        assert_eq!(report.k, 4);
        assert_eq!(report.corners, vec![1, 2, 4, 5]);
        assert!(!report.is_stci);
        assert_eq!(report.generator_count, 17);
    }

    #[test]
    fn report_small_cases() {
        let report = invariant_report(&p(&[1])).unwrap();
        assert_eq!(report.mu, 1);
        assert_eq!(report.ara, 1);
        assert_eq!(report.height, 1);
        assert_eq!(report.k, 1);
        assert!(report.is_stci);
        assert_eq!(report.generator_count, 1);

        let report = invariant_report(&p(&[3, 2, 1])).unwrap();
        assert_eq!(report.ara, 3);
        assert_eq!(report.height, 3);
        assert!(report.is_stci);
        assert_eq!(report.generator_count, 6);
    }

    #[test]
    fn reports_never_inconsistent_at_desk_scale() {
        for q in crate::shape::partitions_in_box(6, 6) {
            let report = invariant_report(&q).unwrap();
            assert!(report.height <= report.ara);
        }
    }
}
