//! The self-check suite behind `ssq verify`: every structural invariant
//! of the crate, run exhaustively at small dimension and on seeded
//! random diagrams, with one pass/fail result per property.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::diagram::{
    borel_generators, closure, is_strongly_stable, normalize, v2k, Diagram, Monomial,
};
use crate::enumerate::enumerate_diagrams;
use crate::error::Result;
use crate::families::{hvec_hook, hvec_onebox, hvec_v2k, hvec_v2k_square, hvec_veronese, narayana};
use crate::gorenstein::{classify, classify_structural, is_symmetric, quick_check};
use crate::hilbert::{
    antichain_counts, direct_hf, enumerate_paths, expand, hilbert_series, hvector_dp, HVector,
};
use crate::random::{random_diagram, seeded_rng};
use crate::util::catalan;

#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl PropertyResult {
    fn pass(name: &str, detail: String) -> Self {
        PropertyResult { name: name.into(), pass: true, detail }
    }

    fn fail(name: &str, detail: String) -> Self {
        PropertyResult { name: name.into(), pass: false, detail }
    }
}

pub struct VerifyConfig {
    /// Exhaustive sweeps cover no-free-variable diagrams up to this
    /// dimension.
    pub max_n: usize,
    /// Degrees checked by the semigroup Hilbert-function oracle.
    pub hf_degree: usize,
    /// Number of random diagrams per randomized property.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 8, hf_degree: 3, samples: 50, seed: 42 }
    }
}

fn path_histogram(d: &Diagram) -> Result<HVector> {
    let paths = enumerate_paths(d)?;
    let mut counts: Vec<BigUint> = Vec::new();
    for p in &paths {
        let i = p.n_parts();
        if counts.len() <= i {
            counts.resize(i + 1, BigUint::from(0u32));
        }
        counts[i] += 1u32;
    }
    Ok(HVector::new(counts))
}

/// Runs every property; never early-exits on failure.
pub fn run_all(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let mut out = Vec::new();
    out.push(triple_agreement(cfg));
    out.push(closure_round_trip(cfg));
    out.push(normalize_invariance(cfg));
    out.push(classifier_equivalence(cfg));
    out.push(hf_oracle(cfg));
    out.push(narayana_catalan());
    out.push(formulas_vs_dp());
    out.push(even_dimension());
    out.push(veronese_antichains());
    out
}

/// Path DP, antichain DP, and explicit enumeration agree: exhaustively
/// for no-free-variable diagrams up to `max_n` (capped at 9) and on
/// random diagrams up to n = 12.
fn triple_agreement(cfg: &VerifyConfig) -> PropertyResult {
    let name = "triple-method-agreement";
    let mut checked = 0usize;
    for n in 2..=cfg.max_n.min(9) {
        for d in enumerate_diagrams(n).expect("n >= 2") {
            if let Some(r) = check_triple(name, &d) {
                return r;
            }
            checked += 1;
        }
    }
    let mut rng = seeded_rng(cfg.seed);
    for _ in 0..cfg.samples.max(200) {
        let d = random_diagram(&mut rng, 12);
        if let Some(r) = check_triple(name, &d) {
            return r;
        }
        checked += 1;
    }
    PropertyResult::pass(name, format!("{} diagrams", checked))
}

fn check_triple(name: &str, d: &Diagram) -> Option<PropertyResult> {
    let dp = hvector_dp(d);
    let anti = antichain_counts(d);
    let hist = match path_histogram(d) {
        Ok(h) => h,
        Err(e) => return Some(PropertyResult::fail(name, e.to_string())),
    };
    if dp != anti || dp != hist {
        return Some(PropertyResult::fail(
            name,
            format!(
                "bounds {:?}: dp={}, antichains={}, histogram={}",
                d.bounds(),
                dp,
                anti,
                hist
            ),
        ));
    }
    if dp.sum() != hist.sum() {
        return Some(PropertyResult::fail(name, "path count mismatch".into()));
    }
    None
}

/// `closure` is idempotent, inverts `borel_generators`, and produces
/// strongly stable box sets; single-box removal breaks stability.
fn closure_round_trip(cfg: &VerifyConfig) -> PropertyResult {
    let name = "closure-round-trip";
    let mut rng = seeded_rng(cfg.seed ^ 0x5eed);
    for _ in 0..cfg.samples.max(100) {
        let d = random_diagram(&mut rng, 10);
        let gens = borel_generators(&d);
        let back = closure(&gens).expect("generators nonempty");
        if back != d {
            return PropertyResult::fail(name, format!("bounds {:?}", d.bounds()));
        }
        let boxes: BTreeSet<Monomial> = d.boxes().into_iter().collect();
        if !is_strongly_stable(&boxes) {
            return PropertyResult::fail(name, format!("box set of {:?} unstable", d.bounds()));
        }
        let again = closure(&boxes.iter().copied().collect::<Vec<_>>()).expect("nonempty");
        if again != d {
            return PropertyResult::fail(name, "closure not idempotent".into());
        }
        // flipping any interior box below row 1 to absent breaks stability
        for m in d.boxes() {
            if m.row() >= 2 && m.col() < d.bound(m.row()) {
                let mut flipped = boxes.clone();
                flipped.remove(&m);
                if is_strongly_stable(&flipped) {
                    return PropertyResult::fail(
                        name,
                        format!("removing interior box {} kept stability", m),
                    );
                }
            }
        }
    }
    PropertyResult::pass(name, format!("{} diagrams", cfg.samples.max(100)))
}

/// `normalize` is idempotent and preserves the h-vector.
fn normalize_invariance(cfg: &VerifyConfig) -> PropertyResult {
    let name = "normalize-h-invariance";
    let mut rng = seeded_rng(cfg.seed ^ 0x0451);
    let count = cfg.samples.max(200);
    for _ in 0..count {
        let d = random_diagram(&mut rng, 10);
        let norm = normalize(&d);
        if normalize(&norm) != norm {
            return PropertyResult::fail(name, format!("not idempotent on {:?}", d.bounds()));
        }
        if hvector_dp(&norm) != hvector_dp(&d) {
            return PropertyResult::fail(
                name,
                format!("h-vector changed on {:?}", d.bounds()),
            );
        }
    }
    PropertyResult::pass(name, format!("{} diagrams", count))
}

/// Structural verdict = full symmetry = quick check, exhaustively.
fn classifier_equivalence(cfg: &VerifyConfig) -> PropertyResult {
    let name = "classifier-equivalence";
    let mut checked = 0usize;
    for n in 2..=cfg.max_n.min(10) {
        for d in enumerate_diagrams(n).expect("n >= 2") {
            let h = hvector_dp(&d);
            let sym = is_symmetric(&h);
            let structural = classify_structural(&d).verdict;
            let quick = quick_check(&d);
            if sym != structural || sym != quick {
                return PropertyResult::fail(
                    name,
                    format!(
                        "bounds {:?}: symmetry={}, structural={}, quick={}",
                        d.bounds(),
                        sym,
                        structural,
                        quick
                    ),
                );
            }
            if classify(&d).is_err() {
                return PropertyResult::fail(name, format!("classify failed on {:?}", d.bounds()));
            }
            checked += 1;
        }
    }
    PropertyResult::pass(name, format!("{} diagrams", checked))
}

/// Semigroup oracle agrees with the series expansion.
fn hf_oracle(cfg: &VerifyConfig) -> PropertyResult {
    let name = "semigroup-oracle";
    let mut rng = seeded_rng(cfg.seed ^ 0x4f);
    let count = cfg.samples.max(1);
    for _ in 0..count {
        let d = random_diagram(&mut rng, 7);
        let s = match hilbert_series(&d) {
            Ok(s) => s,
            Err(e) => return PropertyResult::fail(name, e.to_string()),
        };
        let coef = expand(&s, cfg.hf_degree);
        for i in 0..=cfg.hf_degree {
            match direct_hf(&d, i) {
                Ok(v) => {
                    if v != coef[i] {
                        return PropertyResult::fail(
                            name,
                            format!(
                                "bounds {:?}, degree {}: oracle {} vs expansion {}",
                                d.bounds(),
                                i,
                                v,
                                coef[i]
                            ),
                        );
                    }
                }
                Err(e) => return PropertyResult::fail(name, e.to_string()),
            }
        }
    }
    PropertyResult::pass(name, format!("{} diagrams, degrees 0..={}", count, cfg.hf_degree))
}

/// Narayana symmetry, integrality, and Catalan row sums for k <= 25.
fn narayana_catalan() -> PropertyResult {
    let name = "narayana-catalan";
    for k in 1..=25u64 {
        let mut total = BigUint::from(0u32);
        for i in 1..=k as i64 {
            let n = narayana(k, i).expect("k >= 1");
            let mirror = narayana(k, k as i64 - i + 1).expect("k >= 1");
            if n != mirror {
                return PropertyResult::fail(name, format!("N({},{}) asymmetric", k, i));
            }
            total += n;
        }
        if total != catalan(k) {
            return PropertyResult::fail(name, format!("row sum at k={}", k));
        }
    }
    PropertyResult::pass(name, "k <= 25".into())
}

/// Every closed-form family matches the lattice-path DP on its diagram.
fn formulas_vs_dp() -> PropertyResult {
    let name = "family-formulas-vs-dp";
    for k in 1..=8usize {
        if hvec_v2k(k as u64).expect("k >= 1") != hvector_dp(&v2k(k).expect("k >= 1")) {
            return PropertyResult::fail(name, format!("v2k({})", k));
        }
    }
    for n in 1..=12usize {
        let d = closure(&[Monomial::new(n, n)]).expect("nonempty");
        if hvec_veronese(n as u64).expect("n >= 1") != hvector_dp(&d) {
            return PropertyResult::fail(name, format!("veronese({})", n));
        }
    }
    for k in 1..=7usize {
        for j in (k + 1)..=(2 * k) {
            let mut gens = borel_generators(&v2k(k).expect("k >= 1"));
            gens.push(Monomial::new(j, j));
            let d = closure(&gens).expect("nonempty");
            if hvec_v2k_square(k as u64, j as u64).expect("in range") != hvector_dp(&d) {
                return PropertyResult::fail(name, format!("v2k_square({},{})", k, j));
            }
        }
    }
    for k in 2..=7usize {
        let d = closure(&[Monomial::new(2, 2 * k), Monomial::new(2 * k - 1, 2 * k - 1)])
            .expect("nonempty");
        if hvec_hook(k as u64).expect("k >= 2") != hvector_dp(&d) {
            return PropertyResult::fail(name, format!("hook({})", k));
        }
        for a in 3..=(k + 1) {
            let mut gens = borel_generators(&v2k(k).expect("k >= 1"));
            gens.push(Monomial::new(a, 2 * k + 3 - a));
            let d = closure(&gens).expect("nonempty");
            if hvec_onebox(k as u64, a as u64).expect("in range") != hvector_dp(&d) {
                return PropertyResult::fail(name, format!("onebox({},{})", k, a));
            }
        }
    }
    PropertyResult::pass(name, "all families, all parameters".into())
}

/// No normalized Gorenstein diagram of odd dimension exists (n <= 9).
fn even_dimension() -> PropertyResult {
    let name = "even-dimension";
    for n in (3..=9usize).step_by(2) {
        for d in enumerate_diagrams(n).expect("n >= 2") {
            if is_symmetric(&hvector_dp(&d)) {
                return PropertyResult::fail(
                    name,
                    format!("odd-dimensional Gorenstein diagram {:?}", d.bounds()),
                );
            }
        }
    }
    PropertyResult::pass(name, "odd n <= 9".into())
}

/// Antichains of the Veronese staircase minus its top row are counted
/// by binom(n, 2i), and palindromicity holds iff n is even (n >= 2).
fn veronese_antichains() -> PropertyResult {
    let name = "veronese-antichains";
    for n in 2..=12usize {
        let d = closure(&[Monomial::new(n, n)]).expect("nonempty");
        let counts = antichain_counts(&d);
        if counts != hvec_veronese(n as u64).expect("n >= 1") {
            return PropertyResult::fail(name, format!("n = {}", n));
        }
        if counts.is_symmetric() != (n % 2 == 0) {
            return PropertyResult::fail(name, format!("palindromicity at n = {}", n));
        }
    }
    PropertyResult::pass(name, "n <= 12".into())
}
