//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use ssq_core::diagram::{borel_generators, closure, parse_generators, v2k, Monomial};
use ssq_core::enumerate::{appendix_table, audit_appendix, enumerate_diagrams, reference_rows};
use ssq_core::families::{hvec_hook, hvec_onebox, hvec_v2k, hvec_v2k_square, hvec_veronese, narayana};
use ssq_core::gorenstein::{classify_structural, is_symmetric, quick_check};
use ssq_core::hilbert::{
    antichain_counts, direct_hf, enumerate_paths, expand, hilbert_series, hvector_dp, HVector,
};
use ssq_core::random::{random_diagram, seeded_rng};
use ssq_core::util::catalan;

struct Criterion {
    number: usize,
    name: &'static str,
}

impl Criterion {
    fn check(self, pass: bool, detail: &str) {
        println!(
            "criterion {} ({}): {}",
            self.number,
            self.name,
            if pass { "PASS" } else { "FAIL" }
        );
        assert!(pass, "criterion {} failed: {}", self.number, detail);
    }
}

#[test]
fn criterion_1_example_reproduction() {
    let d = closure(&parse_generators("3,4;2,6").unwrap()).unwrap();
    let series = hilbert_series(&d).unwrap();
    let mut pass = series.numerator == HVector::from_u64(&[1, 7, 5]) && series.denom_power == 6;
    pass &= series.to_string() == "(1 + 7t + 5t^2)/(1-t)^6";

    let paths = enumerate_paths(&d).unwrap();
    pass &= paths.len() == 13;
    let listed: BTreeSet<Vec<Monomial>> = [
        vec![(2, 2), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)],
        vec![(2, 2), (2, 3), (1, 3), (1, 4), (1, 5), (1, 6)],
        vec![(2, 2), (2, 3), (2, 4), (1, 4), (1, 5), (1, 6)],
        vec![(2, 2), (2, 3), (2, 4), (2, 5), (1, 5), (1, 6)],
        vec![(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (1, 6)],
        vec![(3, 3), (2, 3), (1, 3), (1, 4), (1, 5), (1, 6)],
        vec![(3, 3), (3, 4), (2, 4), (1, 4), (1, 5), (1, 6)],
    ]
    .into_iter()
    .map(|p| p.into_iter().map(|(a, b)| Monomial::new(a, b)).collect())
    .collect();
    let single_part: BTreeSet<Vec<Monomial>> = paths
        .iter()
        .filter(|p| p.n_parts() == 1)
        .map(|p| p.boxes().to_vec())
        .collect();
    pass &= single_part == listed;

    Criterion { number: 1, name: "example reproduction" }.check(pass, "running example");
}

#[test]
fn criterion_2_triple_method_equivalence() {
    let mut detail = String::new();
    let mut pass = true;
    let mut check = |d: &ssq_core::Diagram| {
        let dp = hvector_dp(d);
        let anti = antichain_counts(d);
        let paths = enumerate_paths(d).unwrap();
        let mut hist = vec![BigUint::from(0u32); dp.degree() + 1];
        for p in &paths {
            hist[p.n_parts()] += 1u32;
        }
        let hist = HVector::new(hist);
        if dp != anti || dp != hist {
            pass = false;
            detail = format!("bounds {:?}", d.bounds());
        }
    };
    for n in 2..=9 {
        for d in enumerate_diagrams(n).unwrap() {
            check(&d);
        }
    }
    let mut rng = seeded_rng(42);
    for _ in 0..200 {
        let d = random_diagram(&mut rng, 12);
        check(&d);
    }
    Criterion { number: 2, name: "triple-method equivalence" }.check(pass, &detail);
}

#[test]
fn criterion_3_formulas_vs_dp() {
    let mut pass = true;
    let mut detail = String::new();
    for k in 1..=8usize {
        if hvec_v2k(k as u64).unwrap() != hvector_dp(&v2k(k).unwrap()) {
            pass = false;
            detail = format!("v2k({})", k);
        }
    }
    for n in 1..=12usize {
        let d = closure(&[Monomial::new(n, n)]).unwrap();
        if hvec_veronese(n as u64).unwrap() != hvector_dp(&d) {
            pass = false;
            detail = format!("veronese({})", n);
        }
    }
    for k in 1..=7usize {
        for j in (k + 1)..=(2 * k) {
            let mut gens = borel_generators(&v2k(k).unwrap());
            gens.push(Monomial::new(j, j));
            if hvec_v2k_square(k as u64, j as u64).unwrap() != hvector_dp(&closure(&gens).unwrap())
            {
                pass = false;
                detail = format!("v2k_square({},{})", k, j);
            }
        }
    }
    for k in 2..=7usize {
        let hook = closure(&[Monomial::new(2, 2 * k), Monomial::new(2 * k - 1, 2 * k - 1)])
            .unwrap();
        if hvec_hook(k as u64).unwrap() != hvector_dp(&hook) {
            pass = false;
            detail = format!("hook({})", k);
        }
        for a in 3..=(k + 1) {
            let mut gens = borel_generators(&v2k(k).unwrap());
            gens.push(Monomial::new(a, 2 * k + 3 - a));
            if hvec_onebox(k as u64, a as u64).unwrap() != hvector_dp(&closure(&gens).unwrap()) {
                pass = false;
                detail = format!("onebox({},{})", k, a);
            }
        }
    }
    Criterion { number: 3, name: "closed forms vs DP" }.check(pass, &detail);
}

#[test]
fn criterion_4_classifier_equivalence() {
    let mut pass = true;
    let mut detail = String::new();
    for n in 2..=10 {
        for d in enumerate_diagrams(n).unwrap() {
            let sym = is_symmetric(&hvector_dp(&d));
            let structural = classify_structural(&d).verdict;
            let quick = quick_check(&d);
            if sym != structural || sym != quick {
                pass = false;
                detail = format!("bounds {:?}: {}/{}/{}", d.bounds(), sym, structural, quick);
            }
        }
    }
    Criterion { number: 4, name: "classifier equivalence" }.check(pass, &detail);
}

#[test]
fn criterion_5_appendix_reproduction_and_audit() {
    let mut pass = true;
    let mut detail = String::new();

    // 2k <= 6: exact h-vector multiset match, 10 rows
    let enumerated = appendix_table(3).unwrap();
    let mut ours: Vec<String> = enumerated.iter().map(|r| r.hvector.to_string()).collect();
    ours.sort();
    let mut table: Vec<String> = reference_rows()
        .unwrap()
        .into_iter()
        .filter(|r| r.k <= 3)
        .map(|r| r.printed_h.to_string())
        .collect();
    table.sort();
    if ours != table || ours.len() != 10 {
        pass = false;
        detail = format!("k <= 3 multiset: ours {:?} vs table {:?}", ours, table);
    }

    // 2k in {8, 10}: every printed h-vector appears among the
    // enumerated Gorenstein diagrams, except the one row whose printed
    // value the dual-verified classifier refutes: st(x_6 x_10) at k=5
    // prints (1,35,135,135,35,1) but both independent methods give
    // (1,35,155,155,35,1) for its diagram. The classifier arbitrates;
    // the audit must report the mismatch.
    let report = audit_appendix(5).unwrap();
    let refuted_label = vec![Monomial::new(6, 10)];
    for audit in &report.rows {
        let is_refuted_row = audit.row.k == 5 && audit.row.label == refuted_label;
        if is_refuted_row {
            let reported = !audit.printed_h_found
                && audit.row.printed_h == HVector::from_u64(&[1, 35, 135, 135, 35, 1])
                && audit.computed_h == HVector::from_u64(&[1, 35, 155, 155, 35, 1]);
            if !reported {
                pass = false;
                detail = "st(x_6 x_10) printed-h mismatch not reported".into();
            }
            continue;
        }
        if !audit.printed_h_found {
            pass = false;
            detail = format!("printed h {} not enumerated", audit.row.printed_h);
        }
    }
    // the arbiter-computed h of every labelled diagram is enumerated
    let enumerated_all = appendix_table(5).unwrap();
    for audit in &report.rows {
        if !enumerated_all
            .iter()
            .any(|e| e.k == audit.row.k && e.hvector == audit.computed_h)
        {
            pass = false;
            detail = format!("computed h {} not enumerated", audit.computed_h);
        }
    }

    // the documented discrepancies are reported
    let inconsistent = report
        .rows
        .iter()
        .any(|r| r.row.k == 5 && r.row.label == vec![Monomial::new(4, 8)] && r.label_inconsistent);
    if !inconsistent {
        pass = false;
        detail = "st(x_4 x_8) at k=5 not flagged label-inconsistent".into();
    }
    let unlisted = report.unlisted.iter().any(|row| {
        row.k == 4
            && row.extra_generators == vec![Monomial::new(5, 8)]
            && row.hvector == HVector::from_u64(&[1, 22, 53, 22, 1])
    });
    if !unlisted {
        pass = false;
        detail = "V_8 ∪ st(x_5 x_8) not reported as unlisted".into();
    }
    // confirm that h-vector by both methods
    let mut gens = borel_generators(&v2k(4).unwrap());
    gens.push(Monomial::new(5, 8));
    let d = closure(&gens).unwrap();
    if hvector_dp(&d) != HVector::from_u64(&[1, 22, 53, 22, 1])
        || antichain_counts(&d) != HVector::from_u64(&[1, 22, 53, 22, 1])
    {
        pass = false;
        detail = "h of V_8 ∪ st(x_5 x_8) not confirmed by both methods".into();
    }

    Criterion { number: 5, name: "appendix reproduction and audit" }.check(pass, &detail);
}

#[test]
fn criterion_6_semigroup_oracle() {
    let mut pass = true;
    let mut detail = String::new();

    // HF(K[V_4]) = 1, 8, 27, 64
    let v4 = v2k(2).unwrap();
    let s = hilbert_series(&v4).unwrap();
    for (i, expect) in [1u64, 8, 27, 64].iter().enumerate() {
        if direct_hf(&v4, i).unwrap() != BigUint::from(*expect) {
            pass = false;
            detail = format!("HF(K[V_4], {})", i);
        }
    }
    debug_assert_eq!(expand(&s, 3)[3], BigUint::from(64u32));

    let mut rng = seeded_rng(42);
    for _ in 0..50 {
        let d = random_diagram(&mut rng, 7);
        let coef = expand(&hilbert_series(&d).unwrap(), 3);
        for i in 0..=3 {
            if direct_hf(&d, i).unwrap() != coef[i] {
                pass = false;
                detail = format!("bounds {:?} at degree {}", d.bounds(), i);
            }
        }
    }
    Criterion { number: 6, name: "semigroup oracle" }.check(pass, &detail);
}

#[test]
fn criterion_7_narayana_catalan() {
    let mut pass = true;
    let mut detail = String::new();
    for k in 1..=25u64 {
        let mut total = BigUint::from(0u32);
        for i in 1..=k as i64 {
            let n = narayana(k, i).unwrap();
            if n != narayana(k, k as i64 - i + 1).unwrap() {
                pass = false;
                detail = format!("N({},{}) asymmetric", k, i);
            }
            total += n;
        }
        if total != catalan(k) {
            pass = false;
            detail = format!("row sum at k = {}", k);
        }
    }
    Criterion { number: 7, name: "Narayana/Catalan" }.check(pass, &detail);
}

#[test]
fn criterion_8_veronese_corollaries() {
    let mut pass = true;
    let mut detail = String::new();
    for n in 1..=12usize {
        let d = closure(&[Monomial::new(n, n)]).unwrap();
        let counts = antichain_counts(&d);
        if counts != hvec_veronese(n as u64).unwrap() {
            pass = false;
            detail = format!("antichain counts at n = {}", n);
        }
        // n = 1 degenerates to the h-vector (1), trivially palindromic
        if n >= 2 && counts.is_symmetric() != (n % 2 == 0) {
            pass = false;
            detail = format!("palindromicity at n = {}", n);
        }
    }
    Criterion { number: 8, name: "Veronese corollaries" }.check(pass, &detail);
}

#[test]
fn criterion_9_even_dimension() {
    let mut pass = true;
    let mut detail = String::new();
    for n in (3..=9usize).step_by(2) {
        for d in enumerate_diagrams(n).unwrap() {
            if is_symmetric(&hvector_dp(&d)) {
                pass = false;
                detail = format!("odd-dimensional Gorenstein diagram {:?}", d.bounds());
            }
        }
    }
    Criterion { number: 9, name: "even dimension" }.check(pass, &detail);
}
