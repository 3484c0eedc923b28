//! Gorenstein classification, decided two independent ways: h-vector
//! symmetry and the structural characterization in terms of `V_{2k}`
//! plus extra generators. The two verdicts are always cross-asserted.

use std::collections::BTreeSet;

use crate::diagram::{
    borel_generators, closure, diagonal_band, normalize, v2k, Diagram, Monomial,
};
use crate::error::{Error, Result};
use crate::hilbert::{hvector_dp, HVector};

/// Why the structural check rejected a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralFailure {
    /// `n != 2k` or `V_{2k}` is not contained in the diagram.
    Necessary { n: usize, k: usize },
    /// An extra generator `x_i x_j` violates `i <= k+1 < j` or `i = j > k+1`.
    Condition1 { offending: Monomial },
    /// Two extra generators share a box on the diagonal `i + j = 2k + 2`.
    Condition2 {
        first: Monomial,
        second: Monomial,
        shared: Monomial,
    },
}

/// Structural evidence for (or against) Gorensteinness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralEvidence {
    pub verdict: bool,
    /// Degree of the numerator.
    pub k: usize,
    /// Borel generators of the normalized diagram outside `V_{2k}`.
    pub extra_generators: Vec<Monomial>,
    pub failure: Option<StructuralFailure>,
}

/// Full classification with the evidence of every method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub gorenstein: bool,
    /// Dimension of the input diagram.
    pub input_n: usize,
    /// Dimension after normalization (no free variable).
    pub n: usize,
    /// Degree of the numerator.
    pub k: usize,
    /// Always true in a returned report; disagreement is an error.
    pub method_agreement: bool,
    pub structural: StructuralEvidence,
    pub hvector: HVector,
}

/// Stanley's symmetry criterion on the numerator.
pub fn is_symmetric(h: &HVector) -> bool {
    h.is_symmetric()
}

/// Necessary conditions for a normalized diagram: with `k` the degree
/// of the h-vector, requires `n = 2k` and
/// `V_{2k} ⊆ d ⊆ st(x_{2k}^2)`. Returns `k` when they hold.
pub fn necessary_check(d: &Diagram) -> Option<usize> {
    let k = hvector_dp(d).degree();
    if k == 0 {
        return None;
    }
    if d.n() != 2 * k {
        return None;
    }
    let v = v2k(k).expect("k >= 1");
    if !v.is_subset_of(d) {
        return None;
    }
    // containment in st(x_{2k}^2) is implied by n = 2k, but asserted
    let staircase = closure(&[Monomial::new(2 * k, 2 * k)]).expect("nonempty");
    debug_assert!(d.is_subset_of(&staircase));
    Some(k)
}

/// The structural characterization, run on a normalized diagram.
///
/// After the necessary check passes with value `k`, the extra
/// generators are the Borel generators outside `V_{2k}`; the diagram is
/// Gorenstein iff every extra `x_i x_j` has `i <= k+1 < j` or
/// `i = j > k+1`, and the closures of two distinct extras never meet on
/// the diagonal `i + j = 2k + 2`.
pub fn classify_structural(d: &Diagram) -> StructuralEvidence {
    let h = hvector_dp(d);
    let k = h.degree();
    // a diagram with only row 1 normalizes to a single box: the
    // polynomial ring K[x_1^2], Gorenstein with h = (1)
    if k == 0 {
        return StructuralEvidence {
            verdict: true,
            k: 0,
            extra_generators: Vec::new(),
            failure: None,
        };
    }
    let Some(k) = necessary_check(d) else {
        return StructuralEvidence {
            verdict: false,
            k,
            extra_generators: Vec::new(),
            failure: Some(StructuralFailure::Necessary { n: d.n(), k }),
        };
    };
    let v = v2k(k).expect("k >= 1");
    let extras: Vec<Monomial> = borel_generators(d)
        .into_iter()
        .filter(|m| !v.contains(*m))
        .collect();
    // condition 1
    for m in &extras {
        let ok = (m.row() <= k + 1 && m.col() > k + 1) || (m.is_square() && m.row() > k + 1);
        if !ok {
            return StructuralEvidence {
                verdict: false,
                k,
                extra_generators: extras.clone(),
                failure: Some(StructuralFailure::Condition1 { offending: *m }),
            };
        }
    }
    // condition 2, for distinct pairs only
    let diag = 2 * k + 2;
    let bands: Vec<BTreeSet<Monomial>> = extras
        .iter()
        .map(|m| diagonal_band(&closure(&[*m]).expect("nonempty"), diag))
        .collect();
    for r in 0..extras.len() {
        for s in (r + 1)..extras.len() {
            if let Some(shared) = bands[r].intersection(&bands[s]).next() {
                return StructuralEvidence {
                    verdict: false,
                    k,
                    extra_generators: extras.clone(),
                    failure: Some(StructuralFailure::Condition2 {
                        first: extras[r],
                        second: extras[s],
                        shared: *shared,
                    }),
                };
            }
        }
    }
    StructuralEvidence {
        verdict: true,
        k,
        extra_generators: extras,
        failure: None,
    }
}

/// Fast test: symmetry at indices 0 and 1 alone
/// already decides Gorensteinness.
pub fn quick_check(d: &Diagram) -> bool {
    let h = hvector_dp(d);
    let k = h.degree();
    (0..=1usize.min(k)).all(|i| h.get(i) == h.get(k - i))
}

/// Classify an arbitrary diagram: normalizes, runs all three methods,
/// and errors loudly if they ever disagree.
pub fn classify(d: &Diagram) -> Result<ClassificationReport> {
    let norm = normalize(d);
    let h = hvector_dp(&norm);
    let k = h.degree();
    let structural = classify_structural(&norm);
    let symmetric = is_symmetric(&h);
    let quick = quick_check(&norm);
    if symmetric != structural.verdict || symmetric != quick {
        return Err(Error::Inconsistency(format!(
            "verdicts disagree for bounds {:?}: symmetry={}, structural={}, quick={}",
            norm.bounds(),
            symmetric,
            structural.verdict,
            quick
        )));
    }
    if structural.verdict {
        let squares = structural
            .extra_generators
            .iter()
            .filter(|m| m.is_square())
            .count();
        if squares > 1 {
            return Err(Error::Inconsistency(format!(
                "{} square extra generators on a Gorenstein diagram",
                squares
            )));
        }
    }
    Ok(ClassificationReport {
        gorenstein: symmetric,
        input_n: d.n(),
        n: norm.n(),
        k,
        method_agreement: true,
        structural,
        hvector: h,
    })
}
