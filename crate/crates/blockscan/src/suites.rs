//! Seeded randomized instance suites for the statements whose instance
//! spaces exceed exhaustive range. Every suite is a deterministic function
//! of (count, seed); instances that fail a hypothesis come back vacuous.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{random_subset, suite_rng};
use crate::error::Result;
use crate::formulas::PropCase;
use crate::sets::IntSet;
use crate::verify::{
    verify_box, verify_classes, verify_growth, verify_prop_ind, VerificationRecord,
};

/// Random (S₁, S₂, L₁, L₂) instances with spans ≤ 64, biased dense so the
/// box-principle hypothesis frequently holds.
pub fn box_suite(count: u64, seed: u64) -> Result<Vec<VerificationRecord>> {
    let mut rng = suite_rng(seed.wrapping_add(0xb0c5));
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let l1 = rng.gen_range(1..=64u64);
        let l2 = rng.gen_range(1..=64u64);
        let density = rng.gen_range(0.3..=0.95);
        let s1 = random_subset(l1, density, &mut rng);
        let s2 = random_subset(l2, density, &mut rng);
        out.push(verify_box(&s1, &s2, l1, l2)?);
    }
    Ok(out)
}

// span 0 is useless here; retry a few times for a spread-out primitive set
fn random_primitive(max_span: u64, min_size: usize, rng: &mut ChaCha8Rng) -> IntSet {
    loop {
        let span = rng.gen_range(min_size as u64 - 1..=max_span.max(min_size as u64 - 1));
        let mut els: Vec<u64> = vec![0, span];
        for x in 1..span {
            if rng.gen_bool(0.5) {
                els.push(x);
            }
        }
        let set = IntSet::from_u64(&els).expect("non-empty by construction");
        if set.len() >= min_size && (set.len() == 1 || set.ap_difference().unwrap() == 1) {
            return set;
        }
    }
}

/// Random admissible families for the half-sum bound: spans ≤ 32, k ≤ 6.
pub fn prop_suite(count: u64, seed: u64, case: PropCase) -> Result<Vec<VerificationRecord>> {
    let tag = match case {
        PropCase::I => 0x9101u64,
        PropCase::II => 0x9102,
    };
    let mut rng = suite_rng(seed.wrapping_add(tag));
    let mut out = Vec::with_capacity(count as usize);
    for i in 0..count {
        let n = rng.gen_range(3..=5i64);
        let k = rng.gen_range(1..=6usize);
        // half the draws stay inside the hypothesis k(n-2) >= l-1 so the
        // bound is actually tested, not just vacuously skipped
        let l_hi = if i % 2 == 0 {
            (k as u64 * (n as u64 - 2) + 1).clamp(n as u64, 32)
        } else {
            32
        };
        let l = rng.gen_range(n as u64..=l_hi);
        let family: Vec<IntSet> = (0..k)
            .map(|_| random_primitive(l, n as usize, &mut rng))
            .collect();
        out.push(verify_prop_ind(&family, n, l, case)?);
    }
    Ok(out)
}

fn random_growth_family(rng: &mut ChaCha8Rng) -> Vec<IntSet> {
    let k = rng.gen_range(2..=4usize);
    // last set: primitive and realizing the maximal span
    let last = random_primitive(32, 2, rng);
    let mut family: Vec<IntSet> = (0..k - 1)
        .map(|_| {
            let span = rng.gen_range(0..=last.ell());
            random_subset(span, rng.gen_range(0.2..=0.9), rng)
        })
        .collect();
    family.push(last);
    family
}

/// Random instances of the sumset growth inequality.
pub fn growth_suite(count: u64, seed: u64) -> Result<Vec<VerificationRecord>> {
    let mut rng = suite_rng(seed.wrapping_add(0x6047));
    let mut out = Vec::with_capacity(count as usize);
    while out.len() < count as usize {
        out.push(verify_growth(&random_growth_family(&mut rng))?);
    }
    Ok(out)
}

/// Random instances of the residue-class growth inequality. Every few
/// instances are forced into the d = 1, l = ℓ(A_k) corner so the degeneracy
/// against the plain growth bound is exercised.
pub fn classes_suite(count: u64, seed: u64) -> Result<Vec<VerificationRecord>> {
    let mut rng = suite_rng(seed.wrapping_add(0xc1a5));
    let mut out = Vec::with_capacity(count as usize);
    while out.len() < count as usize {
        let k = rng.gen_range(2..=4usize);
        let force_degenerate = out.len() % 4 == 0;
        let mut family: Vec<IntSet> = (0..k - 1)
            .map(|_| {
                let span = rng.gen_range(0..=24u64);
                random_subset(span, rng.gen_range(0.2..=0.9), &mut rng)
            })
            .collect();
        let last = if force_degenerate {
            random_primitive(rng.gen_range(2..=24u64), 2, &mut rng)
        } else {
            let stride = rng.gen_range(1..=4u64);
            let base = random_subset(rng.gen_range(1..=12u64), 0.6, &mut rng);
            let els: Vec<u64> = base.elements().iter().map(|&e| e * stride).collect();
            match IntSet::from_u64(&els) {
                Ok(s) if s.len() >= 2 => s,
                _ => continue,
            }
        };
        if last.len() < 2 {
            continue;
        }
        let l = if force_degenerate {
            last.ell()
        } else {
            // a random positive difference of A_k
            let els = last.elements();
            let i = rng.gen_range(0..els.len());
            let j = rng.gen_range(0..els.len());
            if els[i] == els[j] {
                continue;
            }
            els[i].abs_diff(els[j])
        };
        if l == 0 {
            continue;
        }
        family.push(last);
        out.push(verify_classes(&family, l)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn suites_are_deterministic() {
        assert_eq!(box_suite(50, 7).unwrap(), box_suite(50, 7).unwrap());
        assert_eq!(
            growth_suite(50, 7).unwrap(),
            growth_suite(50, 7).unwrap()
        );
        assert_eq!(
            classes_suite(50, 7).unwrap(),
            classes_suite(50, 7).unwrap()
        );
        assert_eq!(
            prop_suite(50, 7, PropCase::I).unwrap(),
            prop_suite(50, 7, PropCase::I).unwrap()
        );
    }

    #[test]
    fn small_suites_have_no_violations() {
        for recs in [
            box_suite(500, 1).unwrap(),
            prop_suite(500, 1, PropCase::I).unwrap(),
            prop_suite(500, 1, PropCase::II).unwrap(),
            growth_suite(500, 1).unwrap(),
            classes_suite(500, 1).unwrap(),
        ] {
            assert!(recs.iter().all(|r| r.verdict != Verdict::Violated));
        }
    }

    #[test]
    fn suites_hit_non_vacuous_instances() {
        let hold = |recs: &[VerificationRecord]| {
            recs.iter().filter(|r| r.verdict == Verdict::Holds).count()
        };
        assert!(hold(&box_suite(200, 2).unwrap()) > 50);
        assert!(hold(&prop_suite(200, 2, PropCase::II).unwrap()) > 50);
        assert!(hold(&growth_suite(200, 2).unwrap()) == 200);
        assert!(hold(&classes_suite(200, 2).unwrap()) == 200);
    }
}
