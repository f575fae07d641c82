//! Exact block counts from the recurrences and their closed forms.
//!
//! With `A_1 = 56` (2×2 blocks with a bumpy corner at [1,1]) and
//! `B_1 = 124` (3×3 blocks with a bumpy corner at [1,2]):
//!
//! ```text
//! A(2n)   = 4 A(n)
//! A(2n+1) = A(n) + A(n+1) + 2 B(n)
//! B(2n)   = 2 A(n) + 2 B(n)
//! B(2n+1) = 2 A(n+1) + 2 B(n)
//! ```
//!
//! and for n >= 2, with `p = 2^floor(log2 n)`, the number of distinct n×n
//! blocks is `32 n^2 + 72 n p - 48 p^2`. Everything here is arbitrary
//! precision.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::DomainError;

pub const A1: u32 = 56;
pub const B1: u32 = 124;

/// Exponent `e` with `2^e <= n < 2^(e+1)`, from the bit length.
pub fn floor_log2(n: &BigInt) -> Result<u64, DomainError> {
    if !n.is_positive() {
        return Err(DomainError(format!("floor_log2 needs n >= 1, got {n}")));
    }
    Ok(n.bits() - 1)
}

/// `(n, 2^floor(log2 n))`, or a domain error below `min`.
fn with_power(n: impl Into<BigInt>, min: i64, what: &str) -> Result<(BigInt, BigInt), DomainError> {
    let n = n.into();
    if n < BigInt::from(min) {
        return Err(DomainError(format!("{what} is defined for n >= {min}, got {n}")));
    }
    let e = floor_log2(&n)?;
    let p = BigInt::one() << e;
    Ok((n, p))
}

/// `c2 n^2 + c1 n p + c0 p^2`.
fn quadratic(n: &BigInt, p: &BigInt, c2: i64, c1: i64, c0: i64) -> BigInt {
    c2 * n * n + c1 * n * p + c0 * p * p
}

/// Number of distinct n×n blocks, n >= 2.
pub fn closed_form_a(n: impl Into<BigInt>) -> Result<BigInt, DomainError> {
    let (n, p) = with_power(n, 2, "closed_form_A")?;
    Ok(quadratic(&n, &p, 32, 72, -48))
}

/// Multiplicity of `A_1` in `A(n)`.
pub fn coeff_a(n: impl Into<BigInt>) -> Result<BigInt, DomainError> {
    let (n, p) = with_power(n, 1, "coeff_a")?;
    Ok(quadratic(&n, &p, 5, -12, 8))
}

/// Multiplicity of `B_1` in `A(n)`.
pub fn coeff_b(n: impl Into<BigInt>) -> Result<BigInt, DomainError> {
    let (n, p) = with_power(n, 1, "coeff_b")?;
    Ok(quadratic(&n, &p, -2, 6, -4))
}

/// Conjectured block count of the 2D paper-folding sequence, n >= 3. The
/// value is only evaluated; nothing here asserts the conjecture.
pub fn paperfolding_p(n: impl Into<BigInt>) -> Result<BigInt, DomainError> {
    let (n, p) = with_power(n, 3, "paperfolding_P")?;
    Ok(quadratic(&n, &p, 12, 24, -16) - 4)
}

/// Memo of `A(n)` and `B(n)`.
///
/// `A(1)` is stored as 56, the restricted base count (2×2 blocks with the
/// bumpy corner at [1,1]); it is not the number of 1×1 blocks, which is why
/// [`closed_form_a`] starts at n = 2.
#[derive(Debug, Clone)]
pub struct RecurrenceTable {
    a: HashMap<u64, BigInt>,
    b: HashMap<u64, BigInt>,
}

impl Default for RecurrenceTable {
    fn default() -> Self {
        Self::new()
    }
}

impl RecurrenceTable {
    pub fn new() -> RecurrenceTable {
        let mut a = HashMap::new();
        let mut b = HashMap::new();
        a.insert(1, BigInt::from(A1));
        b.insert(1, BigInt::from(B1));
        RecurrenceTable { a, b }
    }

    pub fn a(&mut self, n: u64) -> Result<BigInt, DomainError> {
        if n == 0 {
            return Err(DomainError("recurrence_A is defined for n >= 1".into()));
        }
        Ok(self.a_inner(n))
    }

    pub fn b(&mut self, n: u64) -> Result<BigInt, DomainError> {
        if n == 0 {
            return Err(DomainError("recurrence_B is defined for n >= 1".into()));
        }
        Ok(self.b_inner(n))
    }

    fn a_inner(&mut self, n: u64) -> BigInt {
        if let Some(v) = self.a.get(&n) {
            return v.clone();
        }
        let m = n / 2;
        let v: BigInt = if n.is_multiple_of(2) {
            4 * self.a_inner(m)
        } else {
            self.a_inner(m) + self.a_inner(m + 1) + 2 * self.b_inner(m)
        };
        self.a.insert(n, v.clone());
        v
    }

    fn b_inner(&mut self, n: u64) -> BigInt {
        if let Some(v) = self.b.get(&n) {
            return v.clone();
        }
        let m = n / 2;
        let v: BigInt = if n.is_multiple_of(2) {
            2 * self.a_inner(m) + 2 * self.b_inner(m)
        } else {
            2 * self.a_inner(m + 1) + 2 * self.b_inner(m)
        };
        self.b.insert(n, v.clone());
        v
    }

    /// Re-checks every stored value against its parents. Returns the first
    /// index whose stored value disagrees, if any.
    pub fn audit(&self) -> Result<(), (char, u64)> {
        let get = |map: &HashMap<u64, BigInt>, k: u64| map.get(&k).cloned();
        if self.a.get(&1) != Some(&BigInt::from(A1)) {
            return Err(('A', 1));
        }
        if self.b.get(&1) != Some(&BigInt::from(B1)) {
            return Err(('B', 1));
        }
        for (&n, v) in &self.a {
            if n == 1 {
                continue;
            }
            let m = n / 2;
            let expect = if n.is_multiple_of(2) {
                get(&self.a, m).map(|x| 4 * x)
            } else {
                match (get(&self.a, m), get(&self.a, m + 1), get(&self.b, m)) {
                    (Some(x), Some(y), Some(z)) => Some(x + y + 2 * z),
                    _ => None,
                }
            };
            if expect.as_ref() != Some(v) {
                return Err(('A', n));
            }
        }
        for (&n, v) in &self.b {
            if n == 1 {
                continue;
            }
            let m = n / 2;
            let first = if n.is_multiple_of(2) { get(&self.a, m) } else { get(&self.a, m + 1) };
            let expect = match (first, get(&self.b, m)) {
                (Some(x), Some(z)) => Some(2 * x + 2 * z),
                _ => None,
            };
            if expect.as_ref() != Some(v) {
                return Err(('B', n));
            }
        }
        Ok(())
    }
}

pub fn recurrence_a(n: u64) -> Result<BigInt, DomainError> {
    RecurrenceTable::new().a(n)
}

pub fn recurrence_b(n: u64) -> Result<BigInt, DomainError> {
    RecurrenceTable::new().b(n)
}

/// How many `A_1` and `B_1` leaves the recurrence tree for `A(n)` resolves
/// to, counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTrace {
    pub n: u64,
    pub a_leaves: BigInt,
    pub b_leaves: BigInt,
}

impl DecompositionTrace {
    /// `a_leaves * 56 + b_leaves * 124`.
    pub fn value(&self) -> BigInt {
        &self.a_leaves * A1 + &self.b_leaves * B1
    }
}

type Leaves = (BigInt, BigInt);

fn add(x: &Leaves, y: &Leaves) -> Leaves {
    (&x.0 + &y.0, &x.1 + &y.1)
}

fn scale(k: u32, x: &Leaves) -> Leaves {
    (&x.0 * k, &x.1 * k)
}

/// Symbolic unrolling of the recurrences, memoized per index.
#[derive(Debug, Clone)]
pub struct DecompositionTable {
    a: HashMap<u64, Leaves>,
    b: HashMap<u64, Leaves>,
}

impl Default for DecompositionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl DecompositionTable {
    pub fn new() -> DecompositionTable {
        let mut a = HashMap::new();
        let mut b = HashMap::new();
        a.insert(1, (BigInt::one(), BigInt::default()));
        b.insert(1, (BigInt::default(), BigInt::one()));
        DecompositionTable { a, b }
    }

    pub fn trace(&mut self, n: u64) -> Result<DecompositionTrace, DomainError> {
        if n == 0 {
            return Err(DomainError("decomposition_trace is defined for n >= 1".into()));
        }
        let (a_leaves, b_leaves) = self.unroll_a(n);
        Ok(DecompositionTrace { n, a_leaves, b_leaves })
    }

    fn unroll_a(&mut self, n: u64) -> Leaves {
        if let Some(v) = self.a.get(&n) {
            return v.clone();
        }
        let m = n / 2;
        let v = if n.is_multiple_of(2) {
            scale(4, &self.unroll_a(m))
        } else {
            let sum = add(&self.unroll_a(m), &self.unroll_a(m + 1));
            add(&sum, &scale(2, &self.unroll_b(m)))
        };
        self.a.insert(n, v.clone());
        v
    }

    fn unroll_b(&mut self, n: u64) -> Leaves {
        if let Some(v) = self.b.get(&n) {
            return v.clone();
        }
        let m = n / 2;
        let first = if n.is_multiple_of(2) { self.unroll_a(m) } else { self.unroll_a(m + 1) };
        let v = add(&scale(2, &first), &scale(2, &self.unroll_b(m)));
        self.b.insert(n, v.clone());
        v
    }
}

pub fn decomposition_trace(n: u64) -> Result<DecompositionTrace, DomainError> {
    DecompositionTable::new().trace(n)
}

/// Where the first rank-1 corner sits inside the top-left 2×2 of the block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FirstStep {
    P11,
    P22,
    P12,
    P21,
}

impl FirstStep {
    pub const ALL: [FirstStep; 4] = [FirstStep::P11, FirstStep::P22, FirstStep::P12, FirstStep::P21];

    pub fn position(self) -> (usize, usize) {
        match self {
            FirstStep::P11 => (1, 1),
            FirstStep::P22 => (2, 2),
            FirstStep::P12 => (1, 2),
            FirstStep::P21 => (2, 1),
        }
    }

    pub fn from_position(row: usize, col: usize) -> Option<FirstStep> {
        Self::ALL.into_iter().find(|s| s.position() == (row, col))
    }
}

impl fmt::Display for FirstStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, c) = self.position();
        write!(f, "[{r},{c}]")
    }
}

/// Grid of cells still open for higher-rank corners after the rank-1
/// corners are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VacantShape {
    pub rows: u64,
    pub cols: u64,
}

/// Rank-1 corners occupy every other row and column starting at the chosen
/// offset; the vacant places are the remaining rows × columns.
pub fn vacant_places(n: u64, choice: FirstStep) -> Result<VacantShape, DomainError> {
    if n < 2 {
        return Err(DomainError(format!("vacant_places is defined for n >= 2, got {n}")));
    }
    let (r, c) = choice.position();
    // Corners at rows r, r+2, ...; the vacant rows are the others.
    let free = |offset: usize| n - (n + 2 - offset as u64) / 2;
    Ok(VacantShape { rows: free(r), cols: free(c) })
}
