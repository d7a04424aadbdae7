//! Sequence-shape predicates and the classification of fence rank sequences,
//! plus the symmetry and unimodality campaigns over composition space.
//!
//! A sequence is *top interlacing* when a_0 <= a_m <= a_1 <= a_{m-1} <= ...
//! and *bottom interlacing* when a_m <= a_0 <= a_{m-1} <= a_1 <= ...; both
//! imply unimodality. Splitting those chains gives three inequality families
//! over a rank sequence (r_0, ..., r_{n+1}):
//!
//!   ineqA:  r_i <= r_{n-i}   and   r_{n+1-i} <= r_{1+i}
//!   ineqB:  r_i >= r_{n+1-i}
//!   ineqT:  r_i <= r_{n+1-i}
//!
//! Bottom interlacing is A and B, top interlacing is A and T, and a symmetric
//! unimodal sequence satisfies all three, so class membership is checked as
//! family membership rather than exclusive classification.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composition::{even_compositions_of, half_open_even_compositions_of, Composition, Step};
use crate::poly::RankPoly;
use crate::poset::{circular_fence, fence, PosetKind};
use crate::rank::{rank_poly, rank_poly_steps};
use crate::report::{Finding, Report, Severity};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeClass {
    Symmetric,
    TopInterlacing,
    BottomInterlacing,
    SymmetricAndInterlacingBoth,
    NotUnimodal,
    UnimodalOnly,
}

impl std::fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ShapeClass::Symmetric => "symmetric",
            ShapeClass::TopInterlacing => "top-interlacing",
            ShapeClass::BottomInterlacing => "bottom-interlacing",
            ShapeClass::SymmetricAndInterlacingBoth => "symmetric",
            ShapeClass::NotUnimodal => "not-unimodal",
            ShapeClass::UnimodalOnly => "unimodal",
        };
        write!(f, "{s}")
    }
}

pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len()
}

pub fn is_symmetric(seq: &[BigInt]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

fn chain_holds(seq: &[BigInt], order: impl Iterator<Item = usize>) -> bool {
    let mut prev: Option<&BigInt> = None;
    for idx in order {
        if let Some(p) = prev {
            if p > &seq[idx] {
                return false;
            }
        }
        prev = Some(&seq[idx]);
    }
    true
}

/// a_0 <= a_m <= a_1 <= a_{m-1} <= ... up to the middle.
pub fn is_top_interlacing(seq: &[BigInt]) -> bool {
    !seq.is_empty() && chain_holds(seq, interlace_order(seq.len(), true))
}

/// a_m <= a_0 <= a_{m-1} <= a_1 <= ... up to the middle.
pub fn is_bottom_interlacing(seq: &[BigInt]) -> bool {
    !seq.is_empty() && chain_holds(seq, interlace_order(seq.len(), false))
}

fn interlace_order(len: usize, start_low: bool) -> impl Iterator<Item = usize> {
    let mut lo = 0usize;
    let mut hi = len - 1;
    let mut low_turn = start_low;
    let mut remaining = len;
    std::iter::from_fn(move || {
        if remaining == 0 {
            return None;
        }
        remaining -= 1;
        let idx = if low_turn {
            let v = lo;
            lo += 1;
            v
        } else {
            let v = hi;
            hi = hi.saturating_sub(1);
            v
        };
        low_turn = !low_turn;
        Some(idx)
    })
}

/// ineqA: both half-turn comparison families of the interlacing chains.
pub fn ineq_a(seq: &[BigInt]) -> bool {
    let len = seq.len();
    for i in 0..len {
        if let Some(j) = (len - 1).checked_sub(i + 1) {
            if i < j && seq[i] > seq[j] {
                return false;
            }
        }
    }
    for k in 1..len {
        let j = len - k;
        if k < j && seq[j] > seq[k] {
            return false;
        }
    }
    true
}

/// ineqB: r_i >= r_{last-i} while i is in the left half.
pub fn ineq_b(seq: &[BigInt]) -> bool {
    let len = seq.len();
    (0..len / 2).all(|i| seq[i] >= seq[len - 1 - i])
}

/// ineqT: r_i <= r_{last-i} while i is in the left half.
pub fn ineq_t(seq: &[BigInt]) -> bool {
    let len = seq.len();
    (0..len / 2).all(|i| seq[i] <= seq[len - 1 - i])
}

/// Informational only: rank sequences of fences need not be log-concave.
pub fn is_log_concave(seq: &[BigInt]) -> bool {
    (1..seq.len().saturating_sub(1)).all(|i| &seq[i] * &seq[i] >= &seq[i - 1] * &seq[i + 1])
}

/// Classifies a measured sequence. Symmetric unimodal sequences satisfy both
/// interlacing chains degenerately, hence the combined class.
pub fn measure_shape(seq: &[BigInt]) -> ShapeClass {
    if !is_unimodal(seq) {
        return ShapeClass::NotUnimodal;
    }
    if is_symmetric(seq) {
        return ShapeClass::SymmetricAndInterlacingBoth;
    }
    match (is_bottom_interlacing(seq), is_top_interlacing(seq)) {
        (true, false) => ShapeClass::BottomInterlacing,
        (false, true) => ShapeClass::TopInterlacing,
        (false, false) => ShapeClass::UnimodalOnly,
        // both chains force symmetry, handled above
        (true, true) => ShapeClass::SymmetricAndInterlacingBoth,
    }
}

/// Predicts the shape of the fence rank sequence of `alpha`:
/// one part gives the all-ones symmetric sequence; an even number of parts is
/// bottom interlacing; for an odd number the larger outer part decides, and
/// equal outer parts defer to the inner composition with top and bottom
/// swapped.
pub fn predict_shape(alpha: &Composition) -> ShapeClass {
    let parts = alpha.parts();
    let s = parts.len();
    if s == 1 {
        return ShapeClass::Symmetric;
    }
    if s.is_multiple_of(2) {
        return ShapeClass::BottomInterlacing;
    }
    if parts[0] > parts[s - 1] {
        ShapeClass::BottomInterlacing
    } else if parts[0] < parts[s - 1] {
        ShapeClass::TopInterlacing
    } else {
        let inner = Composition::new(parts[1..s - 1].to_vec()).expect("interior parts positive");
        match predict_shape(&inner) {
            ShapeClass::Symmetric => ShapeClass::Symmetric,
            ShapeClass::TopInterlacing => ShapeClass::BottomInterlacing,
            ShapeClass::BottomInterlacing => ShapeClass::TopInterlacing,
            other => other,
        }
    }
}

/// Family membership test for a predicted class.
pub fn satisfies_predicted(seq: &[BigInt], predicted: ShapeClass) -> bool {
    match predicted {
        ShapeClass::Symmetric | ShapeClass::SymmetricAndInterlacingBoth => {
            ineq_a(seq) && ineq_b(seq) && ineq_t(seq)
        }
        ShapeClass::BottomInterlacing => ineq_a(seq) && ineq_b(seq),
        ShapeClass::TopInterlacing => ineq_a(seq) && ineq_t(seq),
        ShapeClass::NotUnimodal | ShapeClass::UnimodalOnly => true,
    }
}

fn seq_of(alpha: &Composition, kind: PosetKind) -> Vec<BigInt> {
    rank_poly(alpha, kind)
        .expect("valid composition")
        .dense()
        .expect("rank polynomials start at q^0")
}

/// Sweeps every composition of size at most `max_size`: the fence rank
/// sequence must be unimodal and must satisfy the inequality family of its
/// predicted class. Notes tally the predicted classes.
pub fn verify_main_theorem(max_size: usize) -> Report {
    let mut report = Report::new("main-theorem");
    let per_size: Vec<(u64, [u64; 3], Vec<Finding>)> = (1..=max_size)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut cases = 0u64;
            let mut tally = [0u64; 3];
            let mut bad = Vec::new();
            for alpha in crate::composition::compositions_of(n) {
                cases += 1;
                let predicted = predict_shape(&alpha);
                match predicted {
                    ShapeClass::Symmetric => tally[0] += 1,
                    ShapeClass::BottomInterlacing => tally[1] += 1,
                    ShapeClass::TopInterlacing => tally[2] += 1,
                    _ => {}
                }
                let seq = seq_of(&alpha, PosetKind::Fence);
                let unimodal = is_unimodal(&seq);
                let fits = satisfies_predicted(&seq, predicted);
                if !unimodal || !fits {
                    bad.push(Finding {
                        composition: alpha.to_string(),
                        size: n as u64,
                        kind: "fence".into(),
                        check: "main-theorem".into(),
                        expected: format!("unimodal, {predicted}"),
                        measured: format!("{}", measure_shape(&seq)),
                        severity: Severity::TheoremViolation,
                    });
                }
            }
            (cases, tally, bad)
        })
        .collect();
    let mut tally = [0u64; 3];
    for (cases, t, bad) in per_size {
        report.cases += cases;
        for (a, b) in tally.iter_mut().zip(t) {
            *a += b;
        }
        report.findings.extend(bad);
    }
    report.note(format!(
        "predicted classes: symmetric {}, bottom-interlacing {}, top-interlacing {}",
        tally[0], tally[1], tally[2]
    ));
    report.sort();
    report
}

/// Every circular rank sequence of size at most `max_size` must be
/// palindromic about n/2.
pub fn verify_circular_symmetry(max_size: usize) -> Report {
    let mut report = Report::new("circular-symmetry");
    let per_size: Vec<(u64, Vec<Finding>)> = (2..=max_size)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut cases = 0;
            let mut bad = Vec::new();
            for alpha in even_compositions_of(n) {
                cases += 1;
                let r = rank_poly(&alpha, PosetKind::Circular).unwrap();
                if !r.is_symmetric_about(n as i64) {
                    bad.push(Finding {
                        composition: alpha.to_string(),
                        size: n as u64,
                        kind: "circular".into(),
                        check: "circular-symmetry".into(),
                        expected: format!("palindromic about {n}/2"),
                        measured: r.to_string(),
                        severity: Severity::TheoremViolation,
                    });
                }
            }
            (cases, bad)
        })
        .collect();
    for (cases, bad) in per_size {
        report.cases += cases;
        report.findings.extend(bad);
    }
    report.sort();
    report
}

/// Every cyclic shift of the parts must give the identical circular rank
/// polynomial, and the one-step shift must also equal the reversal.
pub fn verify_cyclic_invariance(max_size: usize) -> Report {
    let mut report = Report::new("cyclic-invariance");
    let per_size: Vec<(u64, Vec<Finding>)> = (2..=max_size)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut cases = 0;
            let mut bad = Vec::new();
            for alpha in even_compositions_of(n) {
                cases += 1;
                let r = rank_poly(&alpha, PosetKind::Circular).unwrap();
                let mut ok = true;
                for k in 1..alpha.len() {
                    if rank_poly(&alpha.rotate_left(k), PosetKind::Circular).unwrap() != r {
                        ok = false;
                    }
                }
                if rank_poly(&alpha.rotate_left(1), PosetKind::Circular).unwrap()
                    != r.reversed(n as i64)
                {
                    ok = false;
                }
                if !ok {
                    bad.push(Finding {
                        composition: alpha.to_string(),
                        size: n as u64,
                        kind: "circular".into(),
                        check: "cyclic-invariance".into(),
                        expected: "all rotations equal; one-step shift reverses".into(),
                        measured: r.to_string(),
                        severity: Severity::TheoremViolation,
                    });
                }
            }
            (cases, bad)
        })
        .collect();
    for (cases, bad) in per_size {
        report.cases += cases;
        report.findings.extend(bad);
    }
    report.sort();
    report
}

/// The three symmetry statements on difference polynomials that drive the
/// induction behind circular rank symmetry:
///
/// * A(n): over F(b) for an even composition b of n-1, the ideals containing
///   only the left endpoint minus those containing only the right endpoint
///   give a polynomial symmetric about n/2.
/// * B(n): R(b_1+1, ..., b_2s) - R(b_1, ..., b_2s+1) is symmetric about n/2,
///   where b is an even composition of n-1 whose outer parts may be 0.
/// * C(n): the analogous circular difference for b of n is symmetric about
///   (n+1)/2.
pub fn verify_statements_abc(max_n: usize) -> Report {
    crate::report::parallel_over_sizes("statements-abc", 2, max_n, |n| {
        let mut report = Report::new("statements-abc");
        // A(n)
        for beta in even_compositions_of(n - 1) {
            report.cases += 1;
            let poset = fence(&beta).unwrap();
            let node_n = poset.node_count();
            let mut left = Vec::new();
            let mut right = Vec::new();
            for ideal in poset.enumerate_ideals().unwrap() {
                match (ideal.contains(1), ideal.contains(node_n)) {
                    (true, false) => left.push(ideal.size()),
                    (false, true) => right.push(ideal.size()),
                    _ => {}
                }
            }
            let poly_of = |sizes: &[u32]| {
                let mut coeffs = vec![BigInt::ZERO; node_n + 1];
                for &s in sizes {
                    coeffs[s as usize] += 1;
                }
                RankPoly::from_coeffs(0, coeffs)
            };
            let diff = &poly_of(&left) - &poly_of(&right);
            if !diff.is_symmetric_about(n as i64) {
                report.push(Finding {
                    composition: beta.to_string(),
                    size: n as u64,
                    kind: "fence".into(),
                    check: "statement-A".into(),
                    expected: format!("endpoint difference symmetric about {n}/2"),
                    measured: diff.to_string(),
                    severity: Severity::TheoremViolation,
                });
            }
        }
        // B(n)
        for beta in half_open_even_compositions_of(n - 1) {
            report.cases += 1;
            let mut lp = beta.parts().to_vec();
            *lp.first_mut().unwrap() += 1;
            let mut rp = beta.parts().to_vec();
            *rp.last_mut().unwrap() += 1;
            let left = Composition::half_open(lp).unwrap();
            let right = Composition::half_open(rp).unwrap();
            let diff = &rank_poly(&left, PosetKind::Fence).unwrap()
                - &rank_poly(&right, PosetKind::Fence).unwrap();
            if !diff.is_symmetric_about(n as i64) {
                report.push(Finding {
                    composition: beta.to_string(),
                    size: n as u64,
                    kind: "fence".into(),
                    check: "statement-B".into(),
                    expected: format!("increment difference symmetric about {n}/2"),
                    measured: diff.to_string(),
                    severity: Severity::TheoremViolation,
                });
            }
        }
        // C(n)
        for beta in even_compositions_of(n) {
            report.cases += 1;
            let mut lp = beta.parts().to_vec();
            lp[0] += 1;
            let mut rp = beta.parts().to_vec();
            *rp.last_mut().unwrap() += 1;
            let left = Composition::new(lp).unwrap();
            let right = Composition::new(rp).unwrap();
            let diff = &rank_poly(&left, PosetKind::Circular).unwrap()
                - &rank_poly(&right, PosetKind::Circular).unwrap();
            if !diff.is_symmetric_about(n as i64 + 1) {
                report.push(Finding {
                    composition: beta.to_string(),
                    size: n as u64,
                    kind: "circular".into(),
                    check: "statement-C".into(),
                    expected: format!("circular increment difference symmetric about {}/2", n + 1),
                    measured: diff.to_string(),
                    severity: Severity::TheoremViolation,
                });
            }
        }
        report
    })
}

/// True when the parts are a rotation or reflection of (1,k,1,k).
pub fn is_crown_pair_pattern(alpha: &Composition) -> bool {
    let parts = alpha.parts();
    if parts.len() != 4 {
        return false;
    }
    let c = alpha.dihedral_canonical();
    let p = c.parts();
    p[0] == 1 && p[2] == 1 && p[1] == p[3]
}

/// Circular unimodality sweep. Odd-size circular rank sequences must be
/// unimodal; even sizes 2t must be nondecreasing below rank t, so any
/// unimodality failure is a dip at the exact middle. Non-unimodal
/// compositions other than rotations/reflections of (1,k,1,k) are reported
/// as conjecture counterexamples; the (1,k,1,k) family itself must show the
/// middle dip.
pub fn circular_unimodality_scan(max_size: usize) -> Report {
    let sizes: Vec<usize> = (2..=max_size).collect();
    let parts: Vec<(Report, Vec<Composition>)> = sizes.par_iter().map(|&n| scan_size(n)).collect();
    let mut report = Report::new("circular-unimodality");
    let mut non_unimodal: Vec<Composition> = Vec::new();
    for (part, found) in parts {
        report.absorb(part);
        non_unimodal.extend(found);
    }
    finish_unimodality_scan(report, non_unimodal, max_size)
}

fn scan_size(n: usize) -> (Report, Vec<Composition>) {
    let mut report = Report::new("circular-unimodality");
    let mut non_unimodal: Vec<Composition> = Vec::new();
    {
        for alpha in even_compositions_of(n) {
            report.cases += 1;
            let seq = seq_of(&alpha, PosetKind::Circular);
            let unimodal = is_unimodal(&seq);
            if n % 2 == 1 {
                if !unimodal {
                    report.push(Finding {
                        composition: alpha.to_string(),
                        size: n as u64,
                        kind: "circular".into(),
                        check: "circular-unimodality/odd".into(),
                        expected: "unimodal (odd node count)".into(),
                        measured: format!("{seq:?}"),
                        severity: Severity::TheoremViolation,
                    });
                }
                continue;
            }
            let t = n / 2;
            let prefix_ok = (1..t).all(|i| seq[i] >= seq[i - 1]);
            if !prefix_ok {
                report.push(Finding {
                    composition: alpha.to_string(),
                    size: n as u64,
                    kind: "circular".into(),
                    check: "circular-unimodality/prefix".into(),
                    expected: format!("nondecreasing below rank {t}"),
                    measured: format!("{seq:?}"),
                    severity: Severity::TheoremViolation,
                });
            }
            if unimodal {
                continue;
            }
            non_unimodal.push(alpha.clone());
            let dip = seq[t - 1] > seq[t] && seq[t] < seq[t + 1];
            let suffix_ok = (t + 2..seq.len()).all(|i| seq[i] <= seq[i - 1]);
            if !dip || !suffix_ok {
                report.push(Finding {
                    composition: alpha.to_string(),
                    size: n as u64,
                    kind: "circular".into(),
                    check: "circular-unimodality/middle-dip".into(),
                    expected: format!("only violation a dip at ranks ({},{t})", t - 1),
                    measured: format!("{seq:?}"),
                    severity: Severity::TheoremViolation,
                });
            }
            if !is_crown_pair_pattern(&alpha) {
                report.push(Finding {
                    composition: alpha.to_string(),
                    size: n as u64,
                    kind: "circular".into(),
                    check: "circular-unimodality/conjecture".into(),
                    expected: "only (1,k,1,k) patterns non-unimodal".into(),
                    measured: format!("{seq:?}"),
                    severity: Severity::ConjectureCounterexample,
                });
            }
        }
    }
    (report, non_unimodal)
}

fn finish_unimodality_scan(
    mut report: Report,
    non_unimodal: Vec<Composition>,
    max_size: usize,
) -> Report {
    // Completeness: every (1,k,1,k) rotation in range must have been caught.
    for k in 1..=(max_size.saturating_sub(2)) / 2 {
        for pattern in [[1, k as u32, 1, k as u32], [k as u32, 1, k as u32, 1]] {
            let alpha = Composition::new(pattern.to_vec()).unwrap();
            report.cases += 1;
            if !non_unimodal.contains(&alpha) {
                report.push(Finding {
                    composition: alpha.to_string(),
                    size: alpha.size() as u64,
                    kind: "circular".into(),
                    check: "circular-unimodality/dip-family".into(),
                    expected: "middle dip present".into(),
                    measured: "unimodal".into(),
                    severity: Severity::TheoremViolation,
                });
            }
        }
    }
    let mut classes: Vec<String> = non_unimodal
        .iter()
        .map(|c| c.dihedral_canonical().to_string())
        .collect();
    classes.sort();
    classes.dedup();
    report.note(format!(
        "non-unimodal dihedral classes up to size {max_size}: [{}]",
        classes.join("; ")
    ));
    let raw: Vec<String> = non_unimodal.iter().map(|c| c.to_string()).collect();
    report.note(format!(
        "non-unimodal compositions (raw): [{}]",
        raw.join("; ")
    ));
    report.sort();
    report
}

/// Steps of the fence left by deleting one node from the circular fence.
fn deleted_top_steps(alpha: &Composition, top_node: usize) -> Vec<Step> {
    let steps = alpha.steps();
    let n = steps.len();
    // step j (0-based) joins node j+1 to node j+2 (mod n); removing node v
    // leaves the path v+1, ..., v-1 whose steps start at index v mod n.
    (0..n - 2).map(|d| steps[(top_node + d) % n]).collect()
}

/// Per-top report: deleting a maximal node leaves an ordinary fence; if any
/// deleted fence has a top-interlacing rank sequence, the circular rank
/// sequence is unimodal. The two syntactic corollary conditions (two adjacent
/// parts above 1, or adjacent parts k,1,l with |k-l| > 1) guarantee such a
/// top exists.
#[derive(Clone, Debug)]
pub struct TopDeletionOutcome {
    pub composition: String,
    /// (top node, rank sequence of the deleted fence, top-interlacing flag)
    pub deletions: Vec<(usize, Vec<BigInt>, bool)>,
    pub any_top_interlacing: bool,
    pub corollary_applies: bool,
    pub unimodal: bool,
}

pub fn top_deletion_unimodality_check(
    alpha: &Composition,
) -> Result<TopDeletionOutcome, crate::Error> {
    let poset = circular_fence(alpha)?;
    let seq = seq_of(alpha, PosetKind::Circular);
    let mut deletions = Vec::new();
    for top in poset.shared_tops() {
        let steps = deleted_top_steps(alpha, top.node);
        let dseq = rank_poly_steps(&steps).dense().unwrap();
        let ti = is_top_interlacing(&dseq);
        deletions.push((top.node, dseq, ti));
    }
    let parts = alpha.parts();
    let s = parts.len();
    let adjacent_big = (0..s).any(|i| parts[i] >= 2 && parts[(i + 1) % s] >= 2);
    let k1l = (0..s).any(|i| parts[(i + 1) % s] == 1 && parts[i].abs_diff(parts[(i + 2) % s]) > 1);
    Ok(TopDeletionOutcome {
        composition: alpha.to_string(),
        any_top_interlacing: deletions.iter().any(|d| d.2),
        deletions,
        corollary_applies: adjacent_big || k1l,
        unimodal: is_unimodal(&seq),
    })
}

/// Sweep: wherever a top deletion is top-interlacing, or a corollary
/// condition holds, the circular rank sequence must be unimodal.
pub fn verify_top_deletion(max_size: usize) -> Report {
    crate::report::parallel_over_sizes("top-deletion", 2, max_size, |n| {
        let mut report = Report::new("top-deletion");
        for alpha in even_compositions_of(n) {
            report.cases += 1;
            let out = top_deletion_unimodality_check(&alpha).unwrap();
            if (out.any_top_interlacing || out.corollary_applies) && !out.unimodal {
                report.push(Finding {
                    composition: alpha.to_string(),
                    size: n as u64,
                    kind: "circular".into(),
                    check: "top-deletion".into(),
                    expected: format!(
                        "unimodal (top-interlacing deletion: {}, corollary: {})",
                        out.any_top_interlacing, out.corollary_applies
                    ),
                    measured: "not unimodal".into(),
                    severity: Severity::TheoremViolation,
                });
            }
        }
        report
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unimodality_basic() {
        assert!(is_unimodal(&ints(&[1, 3, 5, 6, 6, 5, 3, 2, 1])));
        assert!(is_unimodal(&ints(&[5])));
        assert!(is_unimodal(&ints(&[1, 1, 1])));
        // 1,2,...,a,a+1,a,a+1,... dips in the middle
        assert!(!is_unimodal(&ints(&[1, 2, 3, 2, 3, 2, 1])));
    }

    #[test]
    fn symmetry_basic() {
        assert!(is_symmetric(&ints(&[1, 2, 3, 4, 4, 3, 2, 1])));
        assert!(!is_symmetric(&ints(&[1, 3, 5, 6, 6, 5, 3, 2, 1])));
        assert!(is_symmetric(&ints(&[1])));
    }

    #[test]
    fn interlacing_chains() {
        let b = ints(&[1, 3, 5, 6, 6, 5, 3, 2, 1]);
        assert!(is_bottom_interlacing(&b));
        assert!(!is_top_interlacing(&b));
        let flat = ints(&[1, 1, 1]);
        assert!(is_bottom_interlacing(&flat) && is_top_interlacing(&flat));
        let mut rev = b.clone();
        rev.reverse();
        assert!(is_top_interlacing(&rev));
        assert!(!is_bottom_interlacing(&rev));
    }

    #[test]
    fn chains_equal_family_intersections() {
        // bottom = A and B, top = A and T, on arbitrary small sequences
        let mut seqs = Vec::new();
        for a in 0..4i64 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        seqs.push(ints(&[a, b, c, d]));
                        seqs.push(ints(&[a, b, c, d, 2]));
                    }
                }
            }
        }
        for s in &seqs {
            assert_eq!(is_bottom_interlacing(s), ineq_a(s) && ineq_b(s), "{s:?}");
            assert_eq!(is_top_interlacing(s), ineq_a(s) && ineq_t(s), "{s:?}");
        }
    }

    #[test]
    fn predictions() {
        assert_eq!(
            predict_shape(&comp("2,1,1,3")),
            ShapeClass::BottomInterlacing
        );
        assert_eq!(predict_shape(&comp("7")), ShapeClass::Symmetric);
        assert_eq!(predict_shape(&comp("1,2,1")), ShapeClass::Symmetric);
        assert_eq!(predict_shape(&comp("3,1,1")), ShapeClass::BottomInterlacing);
        assert_eq!(predict_shape(&comp("1,1,3")), ShapeClass::TopInterlacing);
        // equal ends defer to the inner composition with top/bottom swapped
        assert_eq!(predict_shape(&comp("2,1,3,1,2")), ShapeClass::Symmetric);
        assert_eq!(
            predict_shape(&comp("2,3,1,1,2")),
            ShapeClass::TopInterlacing
        );
    }

    #[test]
    fn prediction_mirror_under_reversal() {
        for n in 1..=9 {
            for alpha in crate::composition::compositions_of(n) {
                let a = predict_shape(&alpha);
                let b = predict_shape(&alpha.reversed());
                if alpha.len() % 2 == 1 {
                    let mirrored = match a {
                        ShapeClass::BottomInterlacing => ShapeClass::TopInterlacing,
                        ShapeClass::TopInterlacing => ShapeClass::BottomInterlacing,
                        other => other,
                    };
                    assert_eq!(b, mirrored, "{alpha}");
                } else {
                    assert_eq!(a, b, "{alpha}");
                }
            }
        }
    }

    #[test]
    fn main_theorem_small() {
        let report = verify_main_theorem(10);
        assert!(report.passed(), "{report}");
        assert_eq!(report.cases, (1u64 << 10) - 1);
    }

    #[test]
    fn symmetry_and_shifts_small() {
        assert!(verify_circular_symmetry(10).passed());
        assert!(verify_cyclic_invariance(9).passed());
    }

    #[test]
    fn statements_abc_small() {
        let report = verify_statements_abc(8);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn unimodality_scan_small() {
        let report = circular_unimodality_scan(10);
        assert!(report.passed(), "{report}");
        // in range: (1,1,1,1) through (1,4,1,4) and their rotations, nothing else
        assert!(report.findings.is_empty());
        assert!(report.notes[0].contains("1,1,1,1"));
        assert!(report.notes[0].contains("1,4,1,4"));
    }

    #[test]
    fn crown_pair_patterns() {
        assert!(is_crown_pair_pattern(&comp("1,4,1,4")));
        assert!(is_crown_pair_pattern(&comp("4,1,4,1")));
        assert!(!is_crown_pair_pattern(&comp("1,4,1,5")));
        assert!(!is_crown_pair_pattern(&comp("2,2,2,2")));
    }

    #[test]
    fn top_deletion_examples() {
        // two adjacent parts above 1
        let out = top_deletion_unimodality_check(&comp("2,3,1,1")).unwrap();
        assert!(out.corollary_applies && out.unimodal);
        // k,1,l with |k-l| > 1
        let out = top_deletion_unimodality_check(&comp("3,1,5,1")).unwrap();
        assert!(out.corollary_applies && out.unimodal);
        // the known dip case offers no top-interlacing deletion
        let out = top_deletion_unimodality_check(&comp("1,4,1,4")).unwrap();
        assert!(!out.any_top_interlacing);
        assert!(!out.corollary_applies);
        assert!(!out.unimodal);
        assert!(verify_top_deletion(10).passed());
    }

    #[test]
    fn log_concavity_fails_for_2113() {
        let seq = seq_of(&comp("2,1,1,3"), PosetKind::Fence);
        assert!(!is_log_concave(&seq));
        assert!(is_unimodal(&seq));
    }
}
