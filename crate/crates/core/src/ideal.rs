//! Monomials, polynomials, the edge ideal, and its prime decompositions.
//!
//! Everything lives in the polynomial ring on the row variables `x_1..x_n`
//! and column variables `y_1..y_m` attached to a partition. The edge ideal
//! `I(G)` of the Ferrers graph of `λ` is generated by the products `x_i y_j`
//! over the cells `(i, j)` of the diagram. It equals the intersection of the
//! variable-generated primes `(x_1..x_{i−1}, y_1..y_{λ_i})` for
//! `i = 1..n+1` (with `λ_{n+1} = 0`); keeping only the outer-corner indices
//! leaves the minimal prime decomposition.
//!
//! The canonical text rendering (`x1*y6`, `+`-joined polynomial terms,
//! `(x1..xa, y1..yb)` components) is the interchange format used by the CLI
//! and the test fixtures.

use std::fmt;

use crate::shape::Partition;

/// Which family an indeterminate belongs to; rows sort before columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Row,
    Col,
}

/// A single indeterminate `x_i` (row) or `y_j` (column), 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub axis: Axis,
    pub index: u32,
}

impl Variable {
    /// The row variable `x_i`.
    pub fn x(index: u32) -> Self {
        assert!(index >= 1, "variables are 1-based");
        Variable {
            axis: Axis::Row,
            index,
        }
    }

    /// The column variable `y_j`.
    pub fn y(index: u32) -> Self {
        assert!(index >= 1, "variables are 1-based");
        Variable {
            axis: Axis::Col,
            index,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis {
            Axis::Row => write!(f, "x{}", self.index),
            Axis::Col => write!(f, "y{}", self.index),
        }
    }
}

/// A product of variables with positive exponents; the empty product is 1.
///
/// Factors are kept strictly ordered (rows by index, then columns by index),
/// so equality is structural. Exponent 1 is the squarefree case used by all
/// edge-ideal constructions; larger exponents only arise when a certificate
/// raises its elements to powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    /// The edge monomial `x_row * y_col`.
    pub fn edge(row: u32, col: u32) -> Self {
        Monomial {
            factors: vec![(Variable::x(row), 1), (Variable::y(col), 1)],
        }
    }

    /// The squarefree monomial on the given set of variables.
    pub fn squarefree<I: IntoIterator<Item = Variable>>(vars: I) -> Self {
        Monomial::from_factors(vars.into_iter().map(|v| (v, 1)).collect())
    }

    /// Builds a monomial from (variable, exponent) pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_factors(factors: Vec<(Variable, u32)>) -> Self {
        let mut factors: Vec<(Variable, u32)> =
            factors.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(factors.len());
        for (var, exp) in factors {
            match merged.last_mut() {
                Some((last, e)) if *last == var => {
                    *e = e.checked_add(exp).expect("exponent overflow")
                }
                _ => merged.push((var, exp)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    /// Exponent of `var` (0 when absent).
    pub fn exponent(&self, var: Variable) -> u32 {
        self.factors
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|idx| self.factors[idx].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial::from_factors(factors)
    }

    pub fn pow(&self, exp: u32) -> Monomial {
        Monomial::from_factors(
            self.factors
                .iter()
                .map(|&(v, e)| (v, e.checked_mul(exp).expect("exponent overflow")))
                .collect(),
        )
    }

    /// Whether `self` divides `other`, exponents included.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|&(v, e)| other.exponent(v) >= e)
    }
}

// Graded order: total degree first, then the variable sequence. This is the
// canonical term order of `Polynomial`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, (var, exp)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if *exp == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// A formal sum of distinct monomials with nonzero integer coefficients, in
/// canonical graded order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(i64, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Combines like terms, drops zero coefficients, and sorts canonically.
    pub fn from_terms(terms: Vec<(i64, Monomial)>) -> Self {
        let mut terms = terms;
        terms.sort_unstable_by(|a, b| a.1.cmp(&b.1));
        let mut merged: Vec<(i64, Monomial)> = Vec::with_capacity(terms.len());
        for (coeff, mono) in terms {
            match merged.last_mut() {
                Some((c, last)) if *last == mono => {
                    *c = c.checked_add(coeff).expect("coefficient overflow")
                }
                _ => merged.push((coeff, mono)),
            }
        }
        merged.retain(|&(c, _)| c != 0);
        Polynomial { terms: merged }
    }

    /// The sum of the given monomials, each with coefficient 1.
    pub fn monomial_sum<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        Polynomial::from_terms(monomials.into_iter().map(|m| (1, m)).collect())
    }

    pub fn terms(&self) -> &[(i64, Monomial)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (coeff, mono)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            match coeff {
                1 => write!(f, "{mono}")?,
                -1 => write!(f, "-{mono}")?,
                c => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// The prime `(x_1, …, x_a, y_1, …, y_b)`, stored as the prefix lengths
/// `a` and `b`. Every prime in the edge ideal's decompositions has this
/// shape, which makes containment a two-integer comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeComponent {
    x_prefix: u32,
    y_prefix: u32,
}

impl PrimeComponent {
    pub fn new(x_prefix: u32, y_prefix: u32) -> Self {
        assert!(
            x_prefix > 0 || y_prefix > 0,
            "a prime component generates on at least one variable"
        );
        PrimeComponent { x_prefix, y_prefix }
    }

    pub fn x_prefix(&self) -> u32 {
        self.x_prefix
    }

    pub fn y_prefix(&self) -> u32 {
        self.y_prefix
    }

    /// Height of the component: the number of generating variables.
    pub fn height(&self) -> u64 {
        u64::from(self.x_prefix) + u64::from(self.y_prefix)
    }

    /// Membership of a monomial in this prime: some `x_i` with
    /// `i <= x_prefix` or some `y_j` with `j <= y_prefix` occurs in it.
    pub fn contains_monomial(&self, mono: &Monomial) -> bool {
        mono.variables().any(|v| match v.axis {
            Axis::Row => v.index <= self.x_prefix,
            Axis::Col => v.index <= self.y_prefix,
        })
    }

    /// Whether this component's variable set contains `other`'s.
    pub fn contains_component(&self, other: &PrimeComponent) -> bool {
        other.x_prefix <= self.x_prefix && other.y_prefix <= self.y_prefix
    }
}

impl fmt::Display for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn segment(f: &mut fmt::Formatter<'_>, name: char, prefix: u32) -> fmt::Result {
            if prefix == 1 {
                write!(f, "{name}1")
            } else {
                write!(f, "{name}1..{name}{prefix}")
            }
        }
        write!(f, "(")?;
        if self.x_prefix > 0 {
            segment(f, 'x', self.x_prefix)?;
        }
        if self.y_prefix > 0 {
            if self.x_prefix > 0 {
                write!(f, ", ")?;
            }
            segment(f, 'y', self.y_prefix)?;
        }
        write!(f, ")")
    }
}

/// The minimal monomial generators `x_i y_j` of the edge ideal, one per cell,
/// in row-major order.
pub fn edge_generators(p: &Partition) -> Vec<Monomial> {
    p.cells().map(|c| Monomial::edge(c.row, c.col)).collect()
}

/// The full (possibly redundant) decomposition: component `i` is
/// `(x_1..x_{i−1}, y_1..y_{λ_i})` for `i = 1..n+1`, with `λ_{n+1} = 0`.
pub fn full_decomposition(p: &Partition) -> Vec<PrimeComponent> {
    let n = p.row_count();
    (1..=n + 1)
        .map(|i| {
            let y = if i <= n { p.part(i) } else { 0 };
            PrimeComponent::new(i - 1, y)
        })
        .collect()
}

/// The minimal prime decomposition: the full decomposition restricted to the
/// outer-corner indices `c_1, …, c_k` and the sentinel `c_{k+1} = n+1`. The
/// components are pairwise incomparable.
pub fn minimal_decomposition(p: &Partition) -> Vec<PrimeComponent> {
    let profile = p.outer_corners();
    let mut components: Vec<PrimeComponent> = profile
        .corners()
        .iter()
        .map(|&c| PrimeComponent::new(c - 1, p.part(c)))
        .collect();
    components.push(PrimeComponent::new(p.row_count(), 0));
    components
}

/// Whether some generator `x_i y_j` of the edge ideal divides `mono`: it must
/// contain a row variable `x_i` and a column variable `y_j` with `j <= λ_i`.
pub fn monomial_in_edge_ideal(mono: &Monomial, p: &Partition) -> bool {
    let min_col = mono
        .variables()
        .filter(|v| v.axis == Axis::Col)
        .map(|v| v.index)
        .min();
    let Some(min_col) = min_col else {
        return false;
    };
    mono.variables()
        .filter(|v| v.axis == Axis::Row)
        .any(|v| v.index <= p.row_count() && p.part(v.index) >= min_col)
}

/// Membership of `mono` in a variable-generated prime; see
/// [`PrimeComponent::contains_monomial`].
pub fn monomial_in_component(mono: &Monomial, comp: &PrimeComponent) -> bool {
    comp.contains_monomial(mono)
}
