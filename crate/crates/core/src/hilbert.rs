//! h-vectors and Hilbert series of `K[W]` for a strongly stable set of
//! quadratic monomials `W`, by three mutually independent methods:
//! a lattice-path DP, an antichain DP, and explicit path enumeration,
//! plus a direct semigroup Hilbert-function oracle.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::diagram::{Diagram, Monomial};
use crate::error::{Error, Result};
use crate::util::binom;

/// Default guard on explicit enumeration / oracle state-space size.
pub const DEFAULT_WORK_CAP: u64 = 10_000_000;

/// The numerator coefficients `(h_0, ..., h_k)` of a Hilbert series.
/// Exact nonnegative integers, trailing entry nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector {
    entries: Vec<BigUint>,
}

impl HVector {
    pub fn new(mut entries: Vec<BigUint>) -> Self {
        while entries.len() > 1 && entries.last().map_or(false, Zero::is_zero) {
            entries.pop();
        }
        assert!(!entries.is_empty(), "h-vector must be nonempty");
        HVector { entries }
    }

    pub fn from_u64(entries: &[u64]) -> Self {
        HVector::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Degree `k` of the numerator polynomial.
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, i: usize) -> BigUint {
        self.entries.get(i).cloned().unwrap_or_else(Zero::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.degree();
        (0..=k / 2).all(|i| self.entries[i] == self.entries[k - i])
    }

    pub fn sum(&self) -> BigUint {
        self.entries.iter().sum()
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// An exact Hilbert series `h(t) / (1 - t)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: HVector,
    pub denom_power: usize,
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        for (i, e) in self.numerator.entries().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !num.is_empty() {
                num.push_str(" + ");
            }
            match i {
                0 => num.push_str(&e.to_string()),
                1 if e.is_one() => num.push('t'),
                1 => num.push_str(&format!("{}t", e)),
                _ if e.is_one() => num.push_str(&format!("t^{}", i)),
                _ => num.push_str(&format!("{}t^{}", e, i)),
            }
        }
        if num.is_empty() {
            num.push('0');
        }
        match self.denom_power {
            0 => write!(f, "{}", num),
            1 => write!(f, "({})/(1-t)", num),
            n => write!(f, "({})/(1-t)^{}", num, n),
        }
    }
}

/// A maximal NE-path: from a diagonal box `(i,i)` to `(1,n)`, each step
/// north (row - 1) or east (column + 1), all boxes inside the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NePath {
    boxes: Vec<Monomial>,
}

impl NePath {
    pub fn boxes(&self) -> &[Monomial] {
        &self.boxes
    }

    /// Number of maximal runs of N steps.
    pub fn n_parts(&self) -> usize {
        let mut count = 0;
        let mut prev_was_n = false;
        for w in self.boxes.windows(2) {
            let is_n = w[1].row() + 1 == w[0].row();
            if is_n && !prev_was_n {
                count += 1;
            }
            prev_was_n = is_n;
        }
        count
    }
}

impl fmt::Display for NePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.boxes.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

type Poly = Vec<BigUint>;

fn poly_add(a: &mut Poly, b: &Poly) {
    if a.len() < b.len() {
        a.resize(b.len(), Zero::zero());
    }
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x += y;
    }
}

fn poly_shift(p: &Poly) -> Poly {
    if p.iter().all(Zero::is_zero) {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(Zero::zero());
    out.extend(p.iter().cloned());
    out
}

/// h-vector via the lattice-path DP: `h_i` is the number of maximal
/// NE-paths with exactly `i` maximal N-parts.
///
/// The DP carries two polynomials per box: paths arriving by an E step,
/// and paths arriving by an N step or starting on this box. An N step
/// taken from an E-arrival or from a start opens a new maximal N-part
/// and is weighted by `t`; all other steps carry weight 1.
pub fn hvector_dp(d: &Diagram) -> HVector {
    let n = d.n();
    // arrive[a][b] = (via E or start, via N), 1-based indices
    let mut via_e: Vec<Vec<Poly>> = vec![vec![Vec::new(); n + 1]; n + 2];
    let mut via_n: Vec<Vec<Poly>> = vec![vec![Vec::new(); n + 1]; n + 2];
    for col in 1..=n {
        for row in (1..=col).rev() {
            if d.bound(row) < col {
                continue;
            }
            let mut e_part: Poly = Vec::new();
            if row == col {
                e_part.push(One::one()); // path starts here
            }
            if col > row && d.bound(row) >= col - 1 {
                // east step from (row, col-1); never opens an N-part
                let mut from = via_e[row][col - 1].clone();
                poly_add(&mut from, &via_n[row][col - 1]);
                poly_add(&mut e_part, &from);
            }
            let mut n_part: Poly = Vec::new();
            if row + 1 <= col && d.bound(row + 1) >= col {
                // north step from (row+1, col)
                poly_add(&mut n_part, &poly_shift(&via_e[row + 1][col]));
                poly_add(&mut n_part, &via_n[row + 1][col]);
            }
            via_e[row][col] = e_part;
            via_n[row][col] = n_part;
        }
    }
    let mut total = via_e[1][n].clone();
    poly_add(&mut total, &via_n[1][n]);
    HVector::new(total)
}

/// All maximal NE-paths, in deterministic order: by start row, then by
/// step sequence with N before E. Refuses if the number of paths
/// (predicted from the DP) exceeds `cap`.
pub fn enumerate_paths_capped(d: &Diagram, cap: u64) -> Result<Vec<NePath>> {
    let predicted = hvector_dp(d).sum();
    if predicted > BigUint::from(cap) {
        return Err(Error::CapExceeded(format!(
            "{} maximal paths exceed the cap of {}",
            predicted, cap
        )));
    }
    let n = d.n();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 1..=d.last_nonempty_row() {
        if d.bound(start) < start {
            continue;
        }
        stack.clear();
        stack.push(Monomial::new(start, start));
        dfs(d, n, &mut stack, &mut out);
    }
    Ok(out)
}

fn dfs(d: &Diagram, n: usize, stack: &mut Vec<Monomial>, out: &mut Vec<NePath>) {
    let cur = *stack.last().unwrap();
    let (row, col) = (cur.row(), cur.col());
    if row == 1 && col == n {
        out.push(NePath { boxes: stack.clone() });
        return;
    }
    // N before E for lexicographic step order
    if row > 1 {
        stack.push(Monomial::new(row - 1, col));
        dfs(d, n, stack, out);
        stack.pop();
    }
    if col < d.bound(row) {
        stack.push(Monomial::new(row, col + 1));
        dfs(d, n, stack, out);
        stack.pop();
    }
}

pub fn enumerate_paths(d: &Diagram) -> Result<Vec<NePath>> {
    enumerate_paths_capped(d, DEFAULT_WORK_CAP)
}

/// h-vector via antichain counting: `h_i` is the number of antichains
/// of size `i` in the poset of boxes below row 1, under the
/// componentwise order.
///
/// On a shifted diagram an antichain is exactly a set of boxes with
/// distinct rows whose columns strictly decrease as rows increase, so a
/// row-by-row DP over a column bound suffices. Independent of the path
/// DP by construction.
pub fn antichain_counts(d: &Diagram) -> HVector {
    let n = d.n();
    let last = d.last_nonempty_row();
    if last < 2 {
        return HVector::new(vec![One::one()]);
    }
    // table[b] = generating polynomial for antichains among rows >= a
    // whose columns are all <= b; rows processed bottom-up.
    let one: Poly = vec![One::one()];
    let mut table: Vec<Poly> = vec![one; n + 1];
    for row in (2..=last).rev() {
        let mut next: Vec<Poly> = Vec::with_capacity(n + 1);
        for bound in 0..=n {
            let mut p = table[bound].clone(); // skip this row
            let hi = d.bound(row).min(bound);
            for col in row..=hi {
                // pick (row, col); rows above must use columns > col,
                // equivalently, reading bottom-up, columns < col
                poly_add(&mut p, &poly_shift(&table[col - 1]));
            }
            next.push(p);
        }
        table = next;
    }
    HVector::new(table[n].clone())
}

/// Exact Hilbert series `h(t)/(1-t)^n` with the numerator computed by
/// both independent methods; disagreement is surfaced as a hard error.
pub fn hilbert_series(d: &Diagram) -> Result<HilbertSeries> {
    let by_paths = hvector_dp(d);
    let by_antichains = antichain_counts(d);
    if by_paths != by_antichains {
        return Err(Error::Inconsistency(format!(
            "path DP gives {} but antichain DP gives {} for bounds {:?}",
            by_paths,
            by_antichains,
            d.bounds()
        )));
    }
    Ok(HilbertSeries { numerator: by_paths, denom_power: d.n() })
}

/// Coefficients `t^0 ..= t^upto` of the series, via
/// `coef(i) = sum_j h_j * binom(i - j + n - 1, n - 1)`.
pub fn expand(s: &HilbertSeries, upto: usize) -> Vec<BigUint> {
    let n = s.denom_power;
    (0..=upto)
        .map(|i| {
            s.numerator
                .entries()
                .iter()
                .enumerate()
                .map(|(j, h)| {
                    if n == 0 {
                        if i == j {
                            h.clone()
                        } else {
                            Zero::zero()
                        }
                    } else {
                        h * binom((i + n) as i64 - 1 - j as i64, n as i64 - 1)
                    }
                })
                .sum()
        })
        .collect()
}

/// `HF(K[W], i) = dim span W^i`, computed directly: the number of
/// distinct exponent vectors that are sums of exactly `i` box exponent
/// vectors. Products of monomials are monomials, so dedup by exponent
/// vector is exact.
pub fn direct_hf_capped(d: &Diagram, i: usize, cap: u64) -> Result<BigUint> {
    if i == 0 {
        return Ok(One::one());
    }
    let gens: Vec<Vec<u32>> = d
        .boxes()
        .iter()
        .map(|m| {
            let mut e = vec![0u32; d.n()];
            e[m.row() - 1] += 1;
            e[m.col() - 1] += 1;
            e
        })
        .collect();
    let mut frontier: BTreeSet<Vec<u32>> = BTreeSet::new();
    frontier.insert(vec![0u32; d.n()]);
    for _ in 0..i {
        let mut next = BTreeSet::new();
        for v in &frontier {
            for g in &gens {
                let sum: Vec<u32> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                next.insert(sum);
                if next.len() as u64 > cap {
                    return Err(Error::CapExceeded(format!(
                        "semigroup state space exceeds the cap of {}",
                        cap
                    )));
                }
            }
        }
        frontier = next;
    }
    Ok(BigUint::from(frontier.len()))
}

pub fn direct_hf(d: &Diagram, i: usize) -> Result<BigUint> {
    direct_hf_capped(d, i, DEFAULT_WORK_CAP)
}
