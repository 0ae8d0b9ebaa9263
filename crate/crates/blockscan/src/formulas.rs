//! Closed-form thresholds and bounds, each as a total function of the integer
//! parameters. All arithmetic is exact; the Proposition-style half-sums are
//! returned as exact rationals.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{family_sum, IntSet};

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(a >= 0 && b > 0);
    (a + b - 1) / b
}

/// κ = ⌈(l+1)/(n−1)⌉, the Sárközy threshold.
pub fn kappa_sarkozy(n: i64, l: i64) -> Result<i64> {
    if n < 2 || l < n {
        return Err(Error::Domain(format!(
            "kappa_sarkozy requires n >= 2 and l >= n, got n={n}, l={l}"
        )));
    }
    Ok(ceil_div(l + 1, n - 1))
}

/// κ = ⌊(l−1)/(n−2)⌋, the identical-summand threshold.
pub fn kappa_lev(n: i64, l: i64) -> Result<i64> {
    if n < 3 || l < n - 1 {
        return Err(Error::Domain(format!(
            "kappa_lev requires n >= 3 and l >= n-1, got n={n}, l={l}"
        )));
    }
    Ok((l - 1) / (n - 2))
}

/// κ = ⌈(l−1)/(n−2)⌉ − 1, the distinct-summand threshold.
pub fn kappa_main(n: i64, l: i64) -> Result<i64> {
    if n < 3 || l < 1 {
        return Err(Error::Domain(format!(
            "kappa_main requires n >= 3 and l >= 1, got n={n}, l={l}"
        )));
    }
    let kappa = ceil_div(l - 1, n - 2) - 1;
    if kappa < 0 {
        // l = 1 yields κ = −1; no valid instance exists there
        return Err(Error::Domain(format!(
            "kappa_main is negative for n={n}, l={l}"
        )));
    }
    Ok(kappa)
}

/// The guaranteed interval [a, kl−a] with a = κ(2l−2−(κ+1)(n−2)).
pub fn lev_interval(n: i64, l: i64, k: i64) -> Result<(i64, i64)> {
    let kappa = kappa_lev(n, l)?;
    if k < 2 * kappa {
        return Err(Error::BelowThreshold(format!(
            "lev_interval requires k >= 2*kappa = {}, got k={k}",
            2 * kappa
        )));
    }
    let a = kappa * (2 * l - 2 - (kappa + 1) * (n - 2));
    Ok((a, k * l - a))
}

/// 2(κ+1)(n−1) − l. Always at least l; strictly greater except at the κ = 0
/// boundary n = l+1, where it equals l.
pub fn main_block_length(n: i64, l: i64) -> Result<i64> {
    let kappa = kappa_main(n, l)?;
    let v = 2 * (kappa + 1) * (n - 1) - l;
    if v < l {
        return Err(Error::Domain(format!(
            "main block length {v} below l = {l} for n={n}"
        )));
    }
    Ok(v)
}

/// k(n−1).
pub fn corollary_block_length(n: i64, k: i64) -> Result<i64> {
    if n < 3 || k < 1 {
        return Err(Error::Domain(format!(
            "corollary_block_length requires n >= 3, k >= 1, got n={n}, k={k}"
        )));
    }
    Ok(k * (n - 1))
}

/// f(n,k,l) = k(n−1), valid only for k ≥ 2⌊(l−2)/(n−2)⌋+2.
pub fn f_exact_value(n: i64, k: i64, l: i64) -> Result<i64> {
    if n < 3 || l < n {
        return Err(Error::Domain(format!(
            "f_exact_value requires n >= 3 and l >= n, got n={n}, l={l}"
        )));
    }
    let threshold = 2 * ((l - 2) / (n - 2)) + 2;
    if k < threshold {
        return Err(Error::BelowThreshold(format!(
            "f_exact_value requires k >= {threshold}, got k={k}"
        )));
    }
    Ok(k * (n - 1))
}

/// min{ℓ(A_k), n₁+⋯+n_k − k + 1} where n_j = |A_j| if ℓ(A_j) < ℓ(A_k), else
/// |A_j| − 1. The caller must pre-sort so that ℓ(A_j) ≤ ℓ(A_k) for j < k.
pub fn growth_bound(family: &[IntSet]) -> Result<i64> {
    let k = family.len();
    if k < 2 {
        return Err(Error::Domain(format!(
            "growth_bound requires k >= 2 sets, got {k}"
        )));
    }
    let last = &family[k - 1];
    let lk = last.ell();
    for (j, a) in family[..k - 1].iter().enumerate() {
        if a.ell() > lk {
            return Err(Error::FamilyOrdering(format!(
                "ell(A_{}) = {} exceeds ell(A_k) = {lk}",
                j + 1,
                a.ell()
            )));
        }
    }
    let d = last.ap_difference()?;
    if d != 1 {
        return Err(Error::NotPrimitive(d));
    }
    let n_sum: i64 = family
        .iter()
        .map(|a| {
            let n = a.len() as i64;
            if a.ell() < lk {
                n
            } else {
                n - 1
            }
        })
        .sum();
    Ok((lk as i64).min(n_sum - k as i64 + 1))
}

/// The residue-class refinement of the growth bound, with the quantities the
/// checker records alongside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassesBound {
    pub bound: i64,
    pub h: u64,
    pub d: u64,
    pub n_j: Vec<u64>,
}

/// min{hl/d, n₁+⋯+n_k − k + 1}: h counts residues mod d in A₁+⋯+A_{k−1},
/// n_j counts residues mod l in A_j, d = ap_difference(A_k).
pub fn classes_bound(family: &[IntSet], l: u64) -> Result<ClassesBound> {
    let k = family.len();
    if k < 2 {
        return Err(Error::Domain(format!(
            "classes_bound requires k >= 2 sets, got {k}"
        )));
    }
    let last = &family[k - 1];
    if last.len() < 2 {
        return Err(Error::SingletonDifference);
    }
    if l == 0 || !last.has_difference(l) {
        return Err(Error::BadInstance(format!(
            "l = {l} is not a positive element of A_k - A_k"
        )));
    }
    let d = last.ap_difference()?;
    // l is a difference of A_k, hence a multiple of d
    assert_eq!(l % d, 0, "d must divide l");
    let prefix = family_sum(&family[..k - 1])?;
    let h = prefix.residue_classes(d);
    let n_j: Vec<u64> = family.iter().map(|a| a.residue_classes(l)).collect();
    let n_sum: i64 = n_j.iter().map(|&n| n as i64).sum();
    let bound = ((h * l / d) as i64).min(n_sum - k as i64 + 1);
    Ok(ClassesBound { bound, h, d, n_j })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PropCase {
    I,
    II,
}

impl std::fmt::Display for PropCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PropCase::I => write!(f, "i"),
            PropCase::II => write!(f, "ii"),
        }
    }
}

/// The half-sum lower bound on |S|, as an exact rational. Case (i) needs
/// k ≥ (l−1)/(n−2) − 1, case (ii) needs k ≥ (l−1)/(n−2); both preconditions
/// are tested in exact integer arithmetic.
pub fn prop_ind_bound(n: i64, l: i64, k: i64, ell_s: i64, case: PropCase) -> Result<Ratio<i64>> {
    if n < 3 || l < 1 || k < 1 || ell_s < 0 {
        return Err(Error::Domain(format!(
            "prop_ind_bound requires n >= 3, l >= 1, k >= 1, ell_s >= 0; got n={n}, l={l}, k={k}, ell_s={ell_s}"
        )));
    }
    let numerator = match case {
        PropCase::I => {
            if (k + 1) * (n - 2) < l - 1 {
                return Err(Error::BelowThreshold(format!(
                    "case (i) requires k >= (l-1)/(n-2) - 1; got n={n}, l={l}, k={k}"
                )));
            }
            ell_s + (k + 1) * (n - 1) - l + 2
        }
        PropCase::II => {
            if k * (n - 2) < l - 1 {
                return Err(Error::BelowThreshold(format!(
                    "case (ii) requires k >= (l-1)/(n-2); got n={n}, l={l}, k={k}"
                )));
            }
            ell_s + k * (n - 1) + 2
        }
    };
    Ok(Ratio::new(numerator, 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjectureVariant {
    AsPrinted,
    Kappa,
}

impl std::fmt::Display for ConjectureVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConjectureVariant::AsPrinted => write!(f, "as-printed"),
            ConjectureVariant::Kappa => write!(f, "kappa"),
        }
    }
}

/// Conjectured block length. The printed formula weights the second term by
/// k; it fails sanity checks (it exceeds the maximum element kl on the full
/// interval), so the κ-weighted variant is exposed alongside it and reports
/// always record which variant was evaluated.
pub fn conjecture_block_length(n: i64, l: i64, k: i64, variant: ConjectureVariant) -> Result<i64> {
    let kappa = kappa_lev(n, l)?;
    if k < 2 * kappa + 1 {
        return Err(Error::BelowThreshold(format!(
            "conjecture requires k >= 2*kappa+1 = {}, got k={k}",
            2 * kappa + 1
        )));
    }
    let second = (kappa + 1) * (n - 2) + 2 - l;
    Ok(match variant {
        ConjectureVariant::AsPrinted => (k - kappa) * l + k * second,
        ConjectureVariant::Kappa => (k - kappa) * l + kappa * second,
    })
}
