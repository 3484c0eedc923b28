//! Quadratic monomials and strongly stable sets encoded as shifted
//! Ferrers diagrams.
//!
//! The box in row `i`, column `j` (1-based, `i <= j`) stands for the
//! monomial `x_i x_j`. A set of such boxes is strongly stable exactly
//! when it is closed up and to the left, which makes it a shifted
//! Ferrers diagram determined by one column bound per row.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A quadratic monomial `x_i x_j` with `1 <= i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    i: usize,
    j: usize,
}

impl Monomial {
    /// Builds `x_a x_b`, sorting the pair so `i <= j`.
    ///
    /// Panics if either index is zero; fallible construction goes
    /// through [`parse_generators`].
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1, "variable indices are 1-based");
        if a <= b {
            Monomial { i: a, j: b }
        } else {
            Monomial { i: b, j: a }
        }
    }

    pub fn row(&self) -> usize {
        self.i
    }

    pub fn col(&self) -> usize {
        self.j
    }

    pub fn is_square(&self) -> bool {
        self.i == self.j
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == self.j {
            write!(f, "x_{}^2", self.i)
        } else {
            write!(f, "x_{}x_{}", self.i, self.j)
        }
    }
}

/// A strongly stable set of quadratic monomials.
///
/// Stored as the column bounds `c_1, ..., c_n`: row `i` occupies
/// columns `i ..= c_i`, and `c_i = i - 1` encodes an empty row.
/// Invariants: `c_1 = n = bounds.len()`, the bounds of nonempty rows
/// weakly decrease, and once a row is empty all later rows are empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    bounds: Vec<usize>,
}

impl Diagram {
    /// Validates the bound vector and wraps it.
    pub fn from_bounds(bounds: Vec<usize>) -> Result<Self> {
        let n = bounds.len();
        if n == 0 {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        if bounds[0] != n {
            return Err(Error::InvalidDiagram(format!(
                "row 1 must span all {} columns, got bound {}",
                n, bounds[0]
            )));
        }
        let mut empty_seen = false;
        let mut prev = n;
        for (idx, &c) in bounds.iter().enumerate() {
            let row = idx + 1;
            if c == row - 1 {
                empty_seen = true;
                continue;
            }
            if c < row {
                return Err(Error::InvalidDiagram(format!(
                    "row {} has bound {} below the diagonal",
                    row, c
                )));
            }
            if empty_seen {
                return Err(Error::InvalidDiagram(format!(
                    "row {} is nonempty after an empty row",
                    row
                )));
            }
            if c > prev {
                return Err(Error::InvalidDiagram(format!(
                    "bounds increase at row {} ({} > {})",
                    row, c, prev
                )));
            }
            prev = c;
        }
        Ok(Diagram { bounds })
    }

    /// Number of variables; equals the length of row 1.
    pub fn n(&self) -> usize {
        self.bounds.len()
    }

    /// Column bound of `row` (1-based); `row - 1` means the row is empty.
    pub fn bound(&self, row: usize) -> usize {
        self.bounds[row - 1]
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.row() <= self.n() && m.col() <= self.bound(m.row())
    }

    /// Index of the last row containing a box.
    pub fn last_nonempty_row(&self) -> usize {
        (1..=self.n())
            .rev()
            .find(|&r| self.bound(r) >= r)
            .expect("row 1 is never empty")
    }

    pub fn row_is_empty(&self, row: usize) -> bool {
        row > self.n() || self.bound(row) < row
    }

    /// All boxes, row-major.
    pub fn boxes(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for row in 1..=self.last_nonempty_row() {
            for col in row..=self.bound(row) {
                out.push(Monomial::new(row, col));
            }
        }
        out
    }

    pub fn box_count(&self) -> usize {
        (1..=self.n())
            .map(|r| self.bound(r).saturating_sub(r - 1))
            .sum()
    }

    pub fn is_subset_of(&self, other: &Diagram) -> bool {
        if self.n() > other.n() {
            return false;
        }
        (1..=self.n()).all(|r| self.bound(r) <= other.bound(r))
    }

    /// Extends or trims row 1 to `target` columns; the other rows are
    /// untouched, so the h-vector is unchanged and only the dimension
    /// moves. `target` must cover row 2.
    pub fn with_dimension(&self, target: usize) -> Result<Diagram> {
        let floor = if self.row_is_empty(2) { 1 } else { self.bound(2) };
        if target < floor {
            return Err(Error::InvalidParameter(format!(
                "dimension {} would cut into row 2 (minimum {})",
                target, floor
            )));
        }
        let mut bounds = vec![target];
        for row in 2..=target {
            if row <= self.n() && !self.row_is_empty(row) {
                bounds.push(self.bound(row));
            } else {
                bounds.push(row - 1);
            }
        }
        Diagram::from_bounds(bounds)
    }
}

/// Parses the generator grammar `pair (';' pair)*`, `pair := INT ',' INT`.
/// Pairs are canonicalized (sorted) and duplicates dropped.
pub fn parse_generators(text: &str) -> Result<Vec<Monomial>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if text.trim().is_empty() {
        return Err(Error::Parse("empty generator string".into()));
    }
    for pair in text.split(';') {
        let mut it = pair.split(',');
        let a = it.next().ok_or_else(|| Error::Parse(format!("bad pair `{}`", pair)))?;
        let b = it.next().ok_or_else(|| Error::Parse(format!("bad pair `{}`", pair)))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("bad pair `{}`", pair)));
        }
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index `{}`", a.trim())))?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index `{}`", b.trim())))?;
        if a == 0 || b == 0 {
            return Err(Error::Parse("variable indices are 1-based".into()));
        }
        let m = Monomial::new(a, b);
        if seen.insert(m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Smallest strongly stable set containing `gens`: box `(a,b)` is
/// present iff some generator `(i,j)` has `a <= i` and `b <= j`.
pub fn closure(gens: &[Monomial]) -> Result<Diagram> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = gens.iter().map(|m| m.col()).max().unwrap();
    let mut bounds = Vec::with_capacity(n);
    for row in 1..=n {
        let c = gens
            .iter()
            .filter(|m| m.row() >= row)
            .map(|m| m.col())
            .max()
            .unwrap_or(0);
        bounds.push(if c >= row { c } else { row - 1 });
    }
    Diagram::from_bounds(bounds)
}

/// Whether an arbitrary box set is strongly stable: every box must have
/// its north and west neighbours (after canonicalization) present.
pub fn is_strongly_stable(boxes: &BTreeSet<Monomial>) -> bool {
    for m in boxes {
        let (a, b) = (m.row(), m.col());
        if a >= 2 && !boxes.contains(&Monomial::new(a - 1, b)) {
            return false;
        }
        // for a square (a,a) the west neighbour canonicalizes to (a-1,a)
        if b >= 2 && !boxes.contains(&Monomial::new(a, b - 1)) {
            return false;
        }
    }
    true
}

/// The maximal boxes under the componentwise order: the strongly stable
/// (Borel) generators. `closure(borel_generators(d)) == d`.
pub fn borel_generators(d: &Diagram) -> Vec<Monomial> {
    let last = d.last_nonempty_row();
    let mut out = Vec::new();
    for row in 1..=last {
        let c = d.bound(row);
        // (row, c) is a generator unless the row below reaches it
        if row == last || d.bound(row + 1) < c {
            out.push(Monomial::new(row, c));
        }
    }
    out
}

/// Minimal-dimension form: row 1 trimmed to `max(c_2, 1)` so that
/// `x_2 x_n` is present whenever row 2 is nonempty (no free variable).
/// The h-vector is unaffected; only the denominator power moves.
pub fn normalize(d: &Diagram) -> Diagram {
    let target = if d.row_is_empty(2) { 1 } else { d.bound(2) };
    d.with_dimension(target)
        .expect("trimming to the row-2 bound is always valid")
}

/// The diagram `V_{2k} = st(x_{k+1}^2, x_k x_{k+2}, ..., x_2 x_{2k})`.
pub fn v2k(k: usize) -> Result<Diagram> {
    if k == 0 {
        return Err(Error::InvalidParameter("v2k requires k >= 1".into()));
    }
    let n = 2 * k;
    let mut bounds = vec![n];
    for row in 2..=n {
        bounds.push(if row <= k + 1 { 2 * k + 2 - row } else { row - 1 });
    }
    Diagram::from_bounds(bounds)
}

/// All boxes of `d` on the anti-diagonal `row + col = s`.
pub fn diagonal_band(d: &Diagram, s: usize) -> BTreeSet<Monomial> {
    let mut out = BTreeSet::new();
    for row in 1..=d.n() {
        if s <= row {
            continue;
        }
        let col = s - row;
        if col >= row && col <= d.bound(row) {
            out.insert(Monomial::new(row, col));
        }
    }
    out
}

/// One line per nonempty row, `#` for a box, spaces west of the diagonal.
pub fn render_ascii(d: &Diagram) -> String {
    let mut out = String::new();
    for row in 1..=d.last_nonempty_row() {
        out.push_str(&" ".repeat(row - 1));
        out.push_str(&"#".repeat(d.bound(row) - row + 1));
        out.push('\n');
    }
    out
}
