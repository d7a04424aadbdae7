//! Extremal-rank comparisons: splitting a large part never loses ideals, and
//! the conjectured pointwise maxima among fences of a fixed size.

use rayon::prelude::*;

use crate::composition::{compositions_of, even_compositions_of, Composition};
use crate::poset::PosetKind;
use crate::rank::rank_poly;
use crate::report::{Finding, Report, Severity};

/// For every even composition of size at most `max_size` and every part
/// t >= 3, replacing that part by (t-2, 1, 1) weakens the order relations,
/// so the circular rank polynomial can only grow coefficientwise.
pub fn extremal_check(max_size: usize) -> Report {
    crate::report::parallel_over_sizes("extremal", 2, max_size, |n| {
        let mut report = Report::new("extremal");
        for alpha in even_compositions_of(n) {
            let base = rank_poly(&alpha, PosetKind::Circular).unwrap();
            for (i, &p) in alpha.parts().iter().enumerate() {
                if p < 3 {
                    continue;
                }
                report.cases += 1;
                let mut parts = alpha.parts().to_vec();
                parts.splice(i..=i, [p - 2, 1, 1]);
                let split = Composition::new(parts).unwrap();
                let grown = rank_poly(&split, PosetKind::Circular).unwrap();
                if !base.dominated_by(&grown) {
                    report.push(Finding {
                        composition: alpha.to_string(),
                        size: n as u64,
                        kind: "circular".into(),
                        check: "extremal".into(),
                        expected: format!("Rc({split}) - Rc({alpha}) >= 0 coefficientwise"),
                        measured: (&grown - &base).to_string(),
                        severity: Severity::TheoremViolation,
                    });
                }
            }
        }
        report
    })
}

/// Conjectured dominance for fences: every rank sequence of size n is
/// pointwise at most that of (1,...,1), and every k-part composition of n
/// (k dividing n) is dominated by the equal-parts composition (n/k, ..., n/k).
/// Counterexamples are findings of interest, not failures.
pub fn dominance_scan(max_size: usize) -> Report {
    let mut report = Report::new("dominance");
    let per_size: Vec<(u64, Vec<Finding>)> = (1..=max_size)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut cases = 0u64;
            let mut found = Vec::new();
            let all_ones =
                rank_poly(&Composition::new(vec![1; n]).unwrap(), PosetKind::Fence).unwrap();
            let mut equal_parts = Vec::new();
            for k in 1..=n {
                if n % k == 0 {
                    let c = Composition::new(vec![(n / k) as u32; k]).unwrap();
                    equal_parts.push((k, rank_poly(&c, PosetKind::Fence).unwrap()));
                }
            }
            for alpha in compositions_of(n) {
                let r = rank_poly(&alpha, PosetKind::Fence).unwrap();
                cases += 1;
                if !r.dominated_by(&all_ones) {
                    found.push(Finding {
                        composition: alpha.to_string(),
                        size: n as u64,
                        kind: "fence".into(),
                        check: "dominance/all-ones".into(),
                        expected: format!("r({alpha}) <= r(1^{n}) pointwise"),
                        measured: r.to_string(),
                        severity: Severity::ConjectureCounterexample,
                    });
                }
                if let Some((_, flat)) = equal_parts.iter().find(|(k, _)| *k == alpha.len()) {
                    cases += 1;
                    if !r.dominated_by(flat) {
                        found.push(Finding {
                            composition: alpha.to_string(),
                            size: n as u64,
                            kind: "fence".into(),
                            check: "dominance/equal-parts".into(),
                            expected: format!(
                                "r({alpha}) <= r(({},)^{}) pointwise",
                                n / alpha.len(),
                                alpha.len()
                            ),
                            measured: r.to_string(),
                            severity: Severity::ConjectureCounterexample,
                        });
                    }
                }
            }
            (cases, found)
        })
        .collect();
    for (cases, found) in per_size {
        report.cases += cases;
        report.findings.extend(found);
    }
    report.sort();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RankPoly;

    #[test]
    fn splitting_examples() {
        // (3,1) -> (1,1,1,1): difference has nonnegative coefficients
        let a = rank_poly(&"3,1".parse().unwrap(), PosetKind::Circular).unwrap();
        let b = rank_poly(&"1,1,1,1".parse().unwrap(), PosetKind::Circular).unwrap();
        assert!(a.dominated_by(&b));
        assert_eq!(a.dense_i64().unwrap(), vec![1, 1, 1, 1, 1]);
        // (4,2) -> (2,1,1,2)
        let a = rank_poly(&"4,2".parse().unwrap(), PosetKind::Circular).unwrap();
        let b = rank_poly(&"2,1,1,2".parse().unwrap(), PosetKind::Circular).unwrap();
        assert!(a.dominated_by(&b));
    }

    #[test]
    fn extremal_sweep_small() {
        let report = extremal_check(9);
        assert!(report.passed(), "{report}");
        assert!(report.cases > 0);
    }

    #[test]
    fn dominance_examples() {
        let r = rank_poly(&"2,1,3".parse().unwrap(), PosetKind::Fence).unwrap();
        let ones = rank_poly(&"1,1,1,1,1,1".parse().unwrap(), PosetKind::Fence).unwrap();
        assert!(r.dominated_by(&ones));
        let r = rank_poly(&"4,2".parse().unwrap(), PosetKind::Fence).unwrap();
        let flat = rank_poly(&"3,3".parse().unwrap(), PosetKind::Fence).unwrap();
        assert!(r.dominated_by(&flat));
        // trivial self-comparison
        let p = RankPoly::from_ints(&[1, 2, 1]);
        assert!(p.dominated_by(&p));
    }

    #[test]
    fn dominance_sweep_small() {
        let report = dominance_scan(9);
        assert!(report.findings.is_empty(), "{report}");
    }
}
