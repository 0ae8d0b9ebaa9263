//! Deterministic, resumable enumeration of constrained sets and set families,
//! plus seeded random generation.
//!
//! Base sets are emitted in lexicographic order of their sorted element
//! lists; canonical families are non-decreasing tuples of base-set indices
//! (valid because sumsets are permutation-invariant). The order is fixed:
//! resuming at ordinal p skips exactly p items.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sets::IntSet;

/// Default cap on emitted items per run.
pub const DEFAULT_CAP: u64 = 10_000_000;

const REJECTION_BUDGET: u32 = 100_000;

/// Constraints defining an enumeration space of k-tuples of sets.
///
/// `n_min` is the per-set size floor; enumeration and sampling emit sets of
/// exactly this size (larger admissible sets are still accepted by the
/// predicate check).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub k: usize,
    pub n_min: usize,
    pub l: u64,
    pub require_endpoints: bool,
    pub require_primitive: bool,
    pub identical: bool,
    pub canonical: bool,
}

impl FamilySpec {
    pub fn sets(n: usize, l: u64, endpoints: bool, primitive: bool) -> FamilySpec {
        FamilySpec {
            k: 1,
            n_min: n,
            l,
            require_endpoints: endpoints,
            require_primitive: primitive,
            identical: false,
            canonical: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.n_min == 0 {
            return Err(Error::Domain("k and n_min must be positive".into()));
        }
        if self.require_endpoints && (self.n_min < 2 || self.l < 1) {
            return Err(Error::Domain(
                "require_endpoints needs n_min >= 2 and l >= 1".into(),
            ));
        }
        if self.n_min as u64 > self.l + 1 {
            return Err(Error::Domain(format!(
                "no {}-element subset of [0,{}]",
                self.n_min, self.l
            )));
        }
        Ok(())
    }

    /// Predicate check for a single set, independent of the generators.
    pub fn admits_set(&self, a: &IntSet) -> bool {
        a.len() >= self.n_min
            && a.max() <= self.l
            && (!self.require_endpoints || (a.contains(0) && a.contains(self.l)))
            && (!self.require_primitive || a.len() >= 2 && a.ap_difference().unwrap() == 1)
    }

    pub fn admits_family(&self, family: &[IntSet]) -> bool {
        family.len() == self.k
            && family.iter().all(|a| self.admits_set(a))
            && (!self.identical || family.windows(2).all(|w| w[0] == w[1]))
    }
}

/// Resumable position in a spec's stream: re-creating a cursor at the same
/// ordinal under the same spec resumes the identical stream.
#[derive(Debug, Clone)]
pub struct EnumCursor {
    pub spec: FamilySpec,
    pub position: u64,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Every n-element subset of [0,l] satisfying the spec flags, in element-list
/// lexicographic order.
pub fn enum_sets(spec: &FamilySpec, cap: u64) -> Result<Vec<IntSet>> {
    spec.validate()?;
    let n = spec.n_min;
    let (free_lo, free_hi, forced): (u64, i64, Vec<u64>) = if spec.require_endpoints {
        (1, spec.l as i64 - 1, vec![0, spec.l])
    } else {
        (0, spec.l as i64, vec![])
    };
    let choose = n - forced.len().min(n);
    let pool: Vec<u64> = if free_hi < free_lo as i64 {
        vec![]
    } else {
        (free_lo..=free_hi as u64)
            .filter(|x| !forced.contains(x))
            .collect()
    };
    if choose > pool.len() {
        return Err(Error::Domain(format!(
            "no admissible {n}-element subset of [0,{}] under the spec flags",
            spec.l
        )));
    }
    let raw = binomial(pool.len() as u64, choose as u64);
    if raw > cap as u128 {
        return Err(Error::CapExceeded {
            count: raw,
            cap,
        });
    }
    let mut out = Vec::new();
    for combo in pool.iter().copied().combinations(choose) {
        let mut els = forced.clone();
        els.extend(combo);
        let set = IntSet::from_u64(&els)?;
        if !spec.require_primitive || (set.len() >= 2 && set.ap_difference()? == 1) {
            out.push(set);
        }
    }
    Ok(out)
}

/// k-tuples of admissible sets. `canonical` restricts to non-decreasing
/// tuples under the base-set order; `identical` to constant tuples.
pub fn enum_families(spec: &FamilySpec, cap: u64) -> Result<Vec<Vec<IntSet>>> {
    spec.validate()?;
    let base = enum_sets(spec, cap)?;
    let total = family_count(base.len() as u64, spec);
    if total > cap as u128 {
        return Err(Error::CapExceeded { count: total, cap });
    }
    let k = spec.k;
    let mut out = Vec::with_capacity(total as usize);
    if spec.identical {
        for b in &base {
            out.push(vec![b.clone(); k]);
        }
        return Ok(out);
    }
    // indices: non-decreasing (canonical) or arbitrary (cartesian)
    let mut idx = vec![0usize; k];
    if base.is_empty() {
        return Ok(out);
    }
    loop {
        out.push(idx.iter().map(|&i| base[i].clone()).collect());
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if idx[pos] + 1 < base.len() {
                idx[pos] += 1;
                let fill = if spec.canonical { idx[pos] } else { 0 };
                idx[pos + 1..k].fill(fill);
                break;
            }
        }
    }
}

fn family_count(base: u64, spec: &FamilySpec) -> u128 {
    let k = spec.k as u64;
    if k == 1 {
        return base as u128;
    }
    if spec.identical {
        base as u128
    } else if spec.canonical {
        binomial(base + k - 1, k)
    } else {
        (base as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
    }
}

/// Exact cardinality of the enumeration stream.
pub fn count_admissible(spec: &FamilySpec, cap: u64) -> Result<u64> {
    let base = enum_sets(spec, cap)?;
    let total = family_count(base.len() as u64, spec);
    if total > cap as u128 {
        return Err(Error::CapExceeded { count: total, cap });
    }
    Ok(total as u64)
}

fn random_set(spec: &FamilySpec, rng: &mut ChaCha8Rng) -> Result<IntSet> {
    for _ in 0..REJECTION_BUDGET {
        let mut els: Vec<u64>;
        if spec.require_endpoints {
            els = vec![0, spec.l];
            let mut pool: Vec<u64> = (1..spec.l).collect();
            pool.shuffle(rng);
            els.extend(pool.into_iter().take(spec.n_min.saturating_sub(2)));
        } else {
            let mut pool: Vec<u64> = (0..=spec.l).collect();
            pool.shuffle(rng);
            els = pool.into_iter().take(spec.n_min).collect();
        }
        let set = IntSet::from_u64(&els)?;
        if spec.admits_set(&set) {
            return Ok(set);
        }
    }
    Err(Error::RejectionBudget)
}

/// Deterministic function of (spec, seed); rejection-samples until all flags
/// hold. Uniform over admissible sets only in the unconstrained case.
pub fn random_family(spec: &FamilySpec, seed: u64) -> Result<Vec<IntSet>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if spec.identical {
        let a = random_set(spec, &mut rng)?;
        return Ok(vec![a; spec.k]);
    }
    (0..spec.k).map(|_| random_set(spec, &mut rng)).collect()
}

/// Seeded RNG shared by the randomized suites; one stream per (purpose, seed).
pub fn suite_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random non-empty subset of [0,hi] with inclusion probability `density`.
pub fn random_subset(hi: u64, density: f64, rng: &mut ChaCha8Rng) -> IntSet {
    let mut els: Vec<u64> = (0..=hi).filter(|_| rng.gen_bool(density)).collect();
    if els.is_empty() {
        els.push(rng.gen_range(0..=hi));
    }
    IntSet::from_u64(&els).expect("subset of a small box")
}
