//! Brute-force evidence checks over small prime fields.
//!
//! Two independent routes validate the algebra done elsewhere in the crate:
//! exhaustive point enumeration compares the zero set of the edge generators
//! with the zero set of the diagonal sums over `F_p`, and exhaustive
//! squarefree-monomial enumeration compares edge-ideal membership with
//! membership in every component of a prime decomposition.
//!
//! Agreement over a finite field is supporting evidence, not proof: the
//! radical-equality argument lives in an algebraically closed field. The
//! verified certificate from [`crate::certificate`] is the proof object;
//! these oracles exist to catch implementation mistakes.

use std::fmt;

use thiserror::Error;

use crate::ideal::{monomial_in_edge_ideal, Axis, Monomial, Polynomial, PrimeComponent, Variable};
use crate::shape::Partition;

/// Default cap on points (or monomials) enumerated per call.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("DimensionMismatch: {variable} does not fit dimensions ({rows},{cols})")]
    DimensionMismatch {
        variable: Variable,
        rows: u32,
        cols: u32,
    },
    #[error("BudgetExceeded: enumeration needs {required} points but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// A point of `F_p^(n+m)`, split into row values `x_1..x_n` and column
/// values `y_1..y_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldPoint {
    residues: Vec<u32>,
    rows: u32,
    field_order: u32,
}

impl FieldPoint {
    pub fn new(x: Vec<u32>, y: Vec<u32>, field_order: u32) -> Self {
        assert!(is_prime(field_order), "field order must be prime");
        let rows = x.len() as u32;
        let mut residues = x;
        residues.extend_from_slice(&y);
        assert!(
            residues.iter().all(|&r| r < field_order),
            "residues must lie in [0, p-1]"
        );
        FieldPoint {
            residues,
            rows,
            field_order,
        }
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn dims(&self) -> (u32, u32) {
        (self.rows, self.residues.len() as u32 - self.rows)
    }

    fn value(&self, var: Variable) -> Option<u32> {
        let (rows, cols) = self.dims();
        match var.axis {
            Axis::Row if var.index <= rows => Some(self.residues[(var.index - 1) as usize]),
            Axis::Col if var.index <= cols => Some(self.residues[(rows + var.index - 1) as usize]),
            _ => None,
        }
    }
}

impl fmt::Display for FieldPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (rows, _) = self.dims();
        let join = |vals: &[u32]| {
            vals.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "x=({}), y=({})",
            join(&self.residues[..rows as usize]),
            join(&self.residues[rows as usize..])
        )
    }
}

/// Outcome of comparing two zero sets pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyComparison {
    pub equal: bool,
    /// First point (in lexicographic order) in the symmetric difference.
    pub counterexample: Option<FieldPoint>,
    pub left_points: u64,
    pub right_points: u64,
}

/// Outcome of comparing edge-ideal membership with componentwise membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipComparison {
    pub equal: bool,
    pub counterexample: Option<MembershipMismatch>,
}

/// A squarefree monomial on which the two membership tests disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipMismatch {
    pub monomial: Monomial,
    pub in_edge_ideal: bool,
    pub in_intersection: bool,
}

/// Evaluates a polynomial at a point, reducing modulo the field order.
pub fn evaluate(f: &Polynomial, pt: &FieldPoint) -> Result<u32, OracleError> {
    let p = u64::from(pt.field_order);
    let (rows, cols) = pt.dims();
    let mut total: u64 = 0;
    for (coeff, mono) in f.terms() {
        let mut term = coeff.rem_euclid(p as i64) as u64;
        for &(var, exp) in mono.factors() {
            let value = pt.value(var).ok_or(OracleError::DimensionMismatch {
                variable: var,
                rows,
                cols,
            })?;
            term = term * pow_mod(u64::from(value), exp, p) % p;
        }
        total = (total + term) % p;
    }
    Ok(total as u32)
}

/// All points of `F_p^(n+m)` where every generator vanishes, in
/// lexicographic order of the residue vector.
pub fn variety(
    gens: &[Polynomial],
    field_order: u32,
    dims: (u32, u32),
    budget: u64,
) -> Result<Vec<FieldPoint>, OracleError> {
    let mut points = Vec::new();
    scan_points(field_order, dims, budget, |pt| {
        if vanishes(gens, pt)? {
            points.push(pt.clone());
        }
        Ok(())
    })?;
    Ok(points)
}

/// Whether two generating sets cut out the same zero set over `F_p`. On
/// disagreement, reports the lexicographically first point where they
/// differ; point counts for both sides are always reported.
pub fn variety_equal(
    left: &[Polynomial],
    right: &[Polynomial],
    field_order: u32,
    dims: (u32, u32),
    budget: u64,
) -> Result<VarietyComparison, OracleError> {
    let mut counterexample = None;
    let mut left_points = 0u64;
    let mut right_points = 0u64;
    scan_points(field_order, dims, budget, |pt| {
        let in_left = vanishes(left, pt)?;
        let in_right = vanishes(right, pt)?;
        left_points += u64::from(in_left);
        right_points += u64::from(in_right);
        if in_left != in_right && counterexample.is_none() {
            counterexample = Some(pt.clone());
        }
        Ok(())
    })?;
    Ok(VarietyComparison {
        equal: counterexample.is_none(),
        counterexample,
        left_points,
        right_points,
    })
}

/// Exhaustively checks, over every squarefree monomial in the ambient
/// variables of `p`, that edge-ideal membership coincides with membership in
/// every component of `decomposition`. Returns the first mismatch, if any.
///
/// Monomials are enumerated by increasing bitmask with `x_1` as the least
/// significant bit, so the reported counterexample is deterministic.
pub fn membership_equality(
    p: &Partition,
    decomposition: &[PrimeComponent],
    budget: u64,
) -> Result<MembershipComparison, OracleError> {
    let n = p.row_count();
    let m = p.col_count();
    let total_vars = n + m;
    let required = 1u128.checked_shl(total_vars).unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        return Err(OracleError::BudgetExceeded { required, budget });
    }
    for mask in 0..(1u64 << total_vars) {
        let vars = (0..total_vars).filter(|t| mask & (1 << t) != 0).map(|t| {
            if t < n {
                Variable::x(t + 1)
            } else {
                Variable::y(t - n + 1)
            }
        });
        let mono = Monomial::squarefree(vars);
        let in_edge_ideal = monomial_in_edge_ideal(&mono, p);
        let in_intersection = decomposition.iter().all(|c| c.contains_monomial(&mono));
        if in_edge_ideal != in_intersection {
            return Ok(MembershipComparison {
                equal: false,
                counterexample: Some(MembershipMismatch {
                    monomial: mono,
                    in_edge_ideal,
                    in_intersection,
                }),
            });
        }
    }
    Ok(MembershipComparison {
        equal: true,
        counterexample: None,
    })
}

fn vanishes(gens: &[Polynomial], pt: &FieldPoint) -> Result<bool, OracleError> {
    for g in gens {
        if evaluate(g, pt)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drives `visit` over every point of `F_p^(n+m)` in lexicographic order,
/// after checking the point count against the budget.
fn scan_points(
    field_order: u32,
    dims: (u32, u32),
    budget: u64,
    mut visit: impl FnMut(&FieldPoint) -> Result<(), OracleError>,
) -> Result<(), OracleError> {
    assert!(is_prime(field_order), "field order must be prime");
    let (rows, cols) = dims;
    let total_vars = rows + cols;
    let required = u128::from(field_order)
        .checked_pow(total_vars)
        .unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        return Err(OracleError::BudgetExceeded { required, budget });
    }
    let mut point = FieldPoint {
        residues: vec![0; total_vars as usize],
        rows,
        field_order,
    };
    loop {
        visit(&point)?;
        // Odometer: rightmost coordinate varies fastest.
        let mut idx = point.residues.len();
        loop {
            if idx == 0 {
                return Ok(());
            }
            idx -= 1;
            point.residues[idx] += 1;
            if point.residues[idx] < field_order {
                break;
            }
            point.residues[idx] = 0;
        }
    }
}

fn pow_mod(base: u64, exp: u32, modulus: u64) -> u64 {
    let mut result = 1u64;
    let mut base = base % modulus;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    result
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= u64::from(p) {
        if u64::from(p) % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
