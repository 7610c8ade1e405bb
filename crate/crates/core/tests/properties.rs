//! Property tests and exhaustive small-case oracles for the whole crate.
//!
//! The expensive sweeps (every partition in an 8x8 box, every squarefree
//! monomial up to n+m = 10) live in the CLI crate's acceptance suite; here
//! random partitions and exhaustive tiny cases cross-check each module
//! against an independent route wherever one exists.

use proptest::prelude::*;

use ferrers_core::certificate::{diagonal_certificate, sv_sums, verify_sv};
use ferrers_core::ideal::{
    edge_generators, full_decomposition, minimal_decomposition, monomial_in_edge_ideal, Monomial,
    Polynomial, Variable,
};
use ferrers_core::invariants;
use ferrers_core::oracle::{self, membership_equality, variety, variety_equal, DEFAULT_BUDGET};
use ferrers_core::shape::{partitions_in_box, Partition};

fn partition(max_rows: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

/// A partition together with a random squarefree monomial in its variables.
fn partition_with_monomial(
    max_rows: usize,
    max_part: u32,
) -> impl Strategy<Value = (Partition, Monomial)> {
    partition(max_rows, max_part).prop_flat_map(|p| {
        let total = p.row_count() + p.col_count();
        let n = p.row_count();
        (Just(p), 0u64..(1u64 << total)).prop_map(move |(p, mask)| {
            let vars = (0..total).filter(|t| mask & (1 << t) != 0).map(|t| {
                if t < n {
                    Variable::x(t + 1)
                } else {
                    Variable::y(t - n + 1)
                }
            });
            (p, Monomial::squarefree(vars))
        })
    })
}

fn monomial_gens(p: &Partition) -> Vec<Polynomial> {
    edge_generators(p)
        .into_iter()
        .map(|m| Polynomial::monomial_sum(vec![m]))
        .collect()
}

proptest! {
    #[test]
    fn diagonals_partition_the_diagram(p in partition(8, 8)) {
        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0u64;
        for i in 1..=p.mu() {
            let cells = p.diagonal_cells(i).unwrap();
            prop_assert!(!cells.is_empty(), "diagonal {i} of {p} is empty");
            for c in cells {
                prop_assert!(p.contains(c));
                prop_assert_eq!(c.diagonal(), i);
                prop_assert!(seen.insert(c), "cell {} on two diagonals", c);
                total += 1;
            }
        }
        prop_assert_eq!(total, p.cell_count());
        prop_assert!(p.diagonal_cells(p.mu() + 1).is_err());
    }

    #[test]
    fn corner_blocks_reconstruct_the_partition(p in partition(8, 8)) {
        let profile = p.outer_corners();
        let corners = profile.corners();
        prop_assert_eq!(corners[0], 1);
        let mut rebuilt = Vec::new();
        for (idx, &c) in corners.iter().enumerate() {
            let next = corners
                .get(idx + 1)
                .map(|&c| u64::from(c))
                .unwrap_or(profile.sentinel());
            for _ in u64::from(c)..next {
                rebuilt.push(p.part(c));
            }
        }
        prop_assert_eq!(rebuilt.as_slice(), p.parts());

        let mut distinct: Vec<u32> = p.parts().to_vec();
        distinct.dedup();
        let corner_values: Vec<u32> = corners.iter().map(|&c| p.part(c)).collect();
        prop_assert_eq!(corner_values, distinct);
    }

    #[test]
    fn staircase_means_constant_diagonal_sums(p in partition(8, 8)) {
        let m = u64::from(p.col_count());
        let all_equal = u64::from(p.row_count()) == m
            && p.parts()
                .iter()
                .enumerate()
                .all(|(idx, &part)| u64::from(part) + idx as u64 == m);
        prop_assert_eq!(p.is_staircase(), all_equal);
        if p.is_staircase() {
            prop_assert_eq!(p.mu(), m);
        }
    }

    #[test]
    fn membership_agrees_with_both_decompositions(
        (p, mono) in partition_with_monomial(6, 6)
    ) {
        let in_ideal = monomial_in_edge_ideal(&mono, &p);
        let in_minimal = minimal_decomposition(&p)
            .iter()
            .all(|c| c.contains_monomial(&mono));
        let in_full = full_decomposition(&p)
            .iter()
            .all(|c| c.contains_monomial(&mono));
        prop_assert_eq!(in_ideal, in_minimal);
        prop_assert_eq!(in_ideal, in_full);
    }

    #[test]
    fn squarefree_divisibility_is_support_containment(
        (p, mono) in partition_with_monomial(5, 5),
        gen_index in any::<prop::sample::Index>(),
    ) {
        let gens = edge_generators(&p);
        let q = &gens[gen_index.index(gens.len())];
        let another = &gens[0];
        let product = mono.mul(another);
        let support_contained = q
            .variables()
            .all(|v| mono.variables().chain(another.variables()).any(|w| w == v));
        prop_assert_eq!(q.divides(&product), support_contained);
    }

    #[test]
    fn diagonal_certificate_verifies(p in partition(8, 8)) {
        let cert = diagonal_certificate(&p);
        prop_assert_eq!(cert.block_count() as u64, p.mu());
        prop_assert_eq!(cert.block_count() as u64, invariants::ara(&p));
        let report = verify_sv(&cert).unwrap();
        prop_assert!(report.passed);
        prop_assert!(report.empty_blocks.is_empty());
        // Every witness the verifier records really is the divisibility fact
        // it claims to be.
        for w in &report.witnesses {
            prop_assert!(w.divider_block < w.block);
            prop_assert!(w.divider.divides(&w.left.mul(&w.right)));
        }
    }

    #[test]
    fn sums_have_one_term_per_cell(p in partition(8, 8)) {
        let cert = diagonal_certificate(&p);
        let sums = sv_sums(&cert);
        prop_assert_eq!(sums.len() as u64, p.mu());
        let total: usize = sums.iter().map(|q| q.term_count()).sum();
        prop_assert_eq!(total as u64, p.cell_count());
        for (i, q) in sums.iter().enumerate() {
            prop_assert_eq!(q.term_count(), cert.blocks()[i].len());
            prop_assert!(q.terms().iter().all(|&(c, _)| c == 1));
        }
    }

    #[test]
    fn invariants_are_consistent(p in partition(8, 8)) {
        let report = invariants::invariant_report(&p).unwrap();
        prop_assert_eq!(report.ara, report.pd);
        prop_assert_eq!(report.ara, report.cd);
        prop_assert_eq!(report.ara, report.mu);
        prop_assert!(report.height <= report.ara);
        prop_assert_eq!(report.is_stci, report.height == report.ara);

        // ara - height equals the spread of the diagonal sums lambda_j + j - 1,
        // with the sentinel lambda_{n+1} = 0 included in the minimum.
        let n = u64::from(p.row_count());
        let sums: Vec<u64> = (1..=n)
            .map(|j| u64::from(p.part(j as u32)) + j - 1)
            .collect();
        let max = *sums.iter().max().unwrap();
        let min = *sums.iter().min().unwrap();
        prop_assert_eq!(report.ara, max);
        prop_assert_eq!(report.height, min.min(n));
    }

    #[test]
    fn height_agrees_between_decompositions(p in partition(8, 8)) {
        let from_minimal = invariants::height(&p);
        let from_full = full_decomposition(&p)
            .iter()
            .map(|c| c.height())
            .min()
            .unwrap();
        prop_assert_eq!(from_minimal, from_full);
    }

    #[test]
    fn polynomial_construction_is_canonical(
        coeffs in prop::collection::vec((-3i64..=3, 1u32..=3, 1u32..=3), 0..12)
    ) {
        let terms: Vec<(i64, Monomial)> = coeffs
            .into_iter()
            .map(|(c, r, s)| (c, Monomial::edge(r, s)))
            .collect();
        let poly = Polynomial::from_terms(terms.clone());
        // Rebuilding from the canonical terms is a fixed point.
        let again = Polynomial::from_terms(poly.terms().to_vec());
        prop_assert_eq!(&poly, &again);
        prop_assert!(poly.terms().iter().all(|&(c, _)| c != 0));
        for pair in poly.terms().windows(2) {
            prop_assert!(pair[0].1 < pair[1].1);
        }
        // Order of the input terms is irrelevant.
        let mut reversed = terms;
        reversed.reverse();
        prop_assert_eq!(poly, Polynomial::from_terms(reversed));
    }
}

// Point enumeration over F_5 grows fast; keep these cases small and few.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn varieties_of_generators_and_sums_agree(
        p in partition(3, 3),
        prime in prop::sample::select(vec![2u32, 3, 5]),
    ) {
        let dims = (p.row_count(), p.col_count());
        let cmp = variety_equal(
            &monomial_gens(&p),
            &sv_sums(&diagonal_certificate(&p)),
            prime,
            dims,
            DEFAULT_BUDGET,
        )
        .unwrap();
        prop_assert!(cmp.equal, "counterexample {:?}", cmp.counterexample);
        prop_assert_eq!(cmp.left_points, cmp.right_points);
    }

    #[test]
    fn adding_a_generator_never_enlarges_the_variety(
        p in partition(4, 4),
        extra_row in 1u32..=4,
        extra_col in 1u32..=4,
    ) {
        let dims = (p.row_count().max(extra_row), p.col_count().max(extra_col));
        let gens = monomial_gens(&p);
        let mut extended = gens.clone();
        extended.push(Polynomial::monomial_sum(vec![Monomial::edge(extra_row, extra_col)]));
        let before = variety(&gens, 2, dims, DEFAULT_BUDGET).unwrap();
        let after = variety(&extended, 2, dims, DEFAULT_BUDGET).unwrap();
        prop_assert!(after.len() <= before.len());
        prop_assert!(after.iter().all(|pt| before.contains(pt)));
    }
}

/// Exhaustive membership equality at tiny scale, one partition at a time.
#[test]
fn exhaustive_membership_equality_small() {
    for p in partitions_in_box(5, 5) {
        if p.row_count() + p.col_count() > 8 {
            continue;
        }
        for decomposition in [full_decomposition(&p), minimal_decomposition(&p)] {
            let cmp = membership_equality(&p, &decomposition, DEFAULT_BUDGET).unwrap();
            assert!(
                cmp.equal,
                "membership mismatch for {p}: {:?}",
                cmp.counterexample
            );
        }
    }
}

/// Point counts of the variety match inclusion-exclusion over the minimal
/// primes: the variety is the union of the coordinate subspaces where a
/// component's variables vanish, and intersections of prefix components are
/// again prefix components.
#[test]
fn variety_point_counts_match_inclusion_exclusion() {
    for p in partitions_in_box(5, 5) {
        let (n, m) = (p.row_count(), p.col_count());
        if n + m > 6 {
            continue;
        }
        let comps = minimal_decomposition(&p);
        for prime in [2u32, 3] {
            let observed = variety(&monomial_gens(&p), prime, (n, m), DEFAULT_BUDGET)
                .unwrap()
                .len() as i128;
            let mut expected: i128 = 0;
            for subset in 1u32..(1 << comps.len()) {
                let mut max_x = 0u32;
                let mut max_y = 0u32;
                for (idx, c) in comps.iter().enumerate() {
                    if subset & (1 << idx) != 0 {
                        max_x = max_x.max(c.x_prefix());
                        max_y = max_y.max(c.y_prefix());
                    }
                }
                let free = n + m - max_x - max_y;
                let size = i128::from(prime).pow(free);
                if subset.count_ones() % 2 == 1 {
                    expected += size;
                } else {
                    expected -= size;
                }
            }
            assert_eq!(
                observed, expected,
                "inclusion-exclusion failed for {p} over F_{prime}"
            );
        }
    }
}

/// The membership oracle really distinguishes decompositions: dropping a
/// minimal component breaks the equality.
#[test]
fn membership_oracle_detects_missing_components() {
    let p = Partition::new(vec![3, 1]).unwrap();
    let mut comps = minimal_decomposition(&p);
    let dropped = comps.pop().unwrap();
    let cmp = membership_equality(&p, &comps, DEFAULT_BUDGET).unwrap();
    assert!(
        !cmp.equal,
        "dropping {dropped} should break the intersection"
    );
    let mismatch = cmp.counterexample.unwrap();
    assert!(mismatch.in_intersection && !mismatch.in_edge_ideal);
}

/// The variety oracle notices a wrong certificate: replacing the last
/// diagonal sum by a sum that skips a generator changes the zero set.
#[test]
fn variety_oracle_detects_wrong_sums() {
    let p = Partition::new(vec![2, 2]).unwrap();
    let mut sums = sv_sums(&diagonal_certificate(&p));
    sums.pop();
    let cmp = variety_equal(&monomial_gens(&p), &sums, 2, (2, 2), DEFAULT_BUDGET).unwrap();
    assert!(!cmp.equal);
    assert!(cmp.counterexample.is_some());
}

#[test]
fn field_point_dimensions_checked() {
    let q = Polynomial::monomial_sum(vec![Monomial::edge(1, 1)]);
    let pt = oracle::FieldPoint::new(vec![1, 0], vec![1], 3);
    assert_eq!(pt.dims(), (2, 1));
    assert_eq!(oracle::evaluate(&q, &pt).unwrap(), 1);
}
