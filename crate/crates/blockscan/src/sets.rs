//! Exact finite-integer-set arithmetic: construction, normalization, sumsets,
//! block/AP detection, residue-class counting.
//!
//! Every set keeps two synchronized views: a strictly increasing element list
//! and a bit vector over `[0, max]`. Sumsets are word-level shifted ORs over
//! the bit vectors; the element list is rebuilt afterwards.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Soft cap on bit-vector width. Exceeding it is a reported error, never
/// silent truncation.
pub const UNIVERSE_BITS: u64 = 1 << 24;

const WORD: u64 = 64;

/// A maximal run of consecutive integers. `length` is the number of terms
/// minus 1: a block "of length l" has l+1 members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub start: u64,
    pub length: u64,
}

/// An arithmetic progression contained in a set. `length` is terms minus 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct APWitness {
    pub start: u64,
    pub difference: u64,
    pub length: u64,
}

/// Finite, non-empty set of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSet {
    elements: Vec<u64>,
    bits: Vec<u64>,
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "}}")
    }
}

fn words_for(max: u64) -> usize {
    (max / WORD + 1) as usize
}

impl IntSet {
    /// Validated construction from arbitrary integers: dedup, sort, build bits.
    pub fn new(values: &[i64]) -> Result<IntSet> {
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        for &v in values {
            if v < 0 {
                return Err(Error::NegativeElement(v));
            }
            if v as u64 >= UNIVERSE_BITS {
                return Err(Error::UniverseExceeded {
                    needed: v as u64 + 1,
                    cap: UNIVERSE_BITS,
                });
            }
        }
        let mut els: Vec<u64> = values.iter().map(|&v| v as u64).collect();
        els.sort_unstable();
        els.dedup();
        Ok(IntSet::from_sorted(els))
    }

    pub fn from_u64(values: &[u64]) -> Result<IntSet> {
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        for &v in values {
            if v >= UNIVERSE_BITS {
                return Err(Error::UniverseExceeded {
                    needed: v + 1,
                    cap: UNIVERSE_BITS,
                });
            }
        }
        let mut els = values.to_vec();
        els.sort_unstable();
        els.dedup();
        Ok(IntSet::from_sorted(els))
    }

    /// `[lo, hi]` as a set.
    pub fn interval(lo: u64, hi: u64) -> Result<IntSet> {
        if hi < lo {
            return Err(Error::EmptySet);
        }
        if hi >= UNIVERSE_BITS {
            return Err(Error::UniverseExceeded {
                needed: hi + 1,
                cap: UNIVERSE_BITS,
            });
        }
        Ok(IntSet::from_sorted((lo..=hi).collect()))
    }

    // `els` must be non-empty, strictly increasing, below the universe bound.
    fn from_sorted(els: Vec<u64>) -> IntSet {
        let mut bits = vec![0u64; words_for(*els.last().unwrap())];
        for &e in &els {
            bits[(e / WORD) as usize] |= 1 << (e % WORD);
        }
        let s = IntSet {
            elements: els,
            bits,
        };
        debug_assert!(s.views_agree());
        s
    }

    fn from_bits(bits: Vec<u64>) -> IntSet {
        let mut els = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut m = word;
            while m != 0 {
                let b = m.trailing_zeros() as u64;
                els.push(w as u64 * WORD + b);
                m &= m - 1;
            }
        }
        let bits = {
            // trim trailing zero words so capacity tracks max
            let mut bits = bits;
            bits.truncate(words_for(*els.last().expect("non-empty bits")));
            bits
        };
        IntSet {
            elements: els,
            bits,
        }
    }

    fn views_agree(&self) -> bool {
        if self.elements.is_empty() {
            return false;
        }
        if self.bits.len() != words_for(*self.elements.last().unwrap()) {
            return false;
        }
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        total as usize == self.elements.len() && self.elements.iter().all(|&e| self.contains(e))
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: non-empty
    }

    pub fn min(&self) -> u64 {
        self.elements[0]
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().unwrap()
    }

    /// ℓ(A): difference of the largest and the smallest elements.
    pub fn ell(&self) -> u64 {
        self.max() - self.min()
    }

    pub fn contains(&self, x: u64) -> bool {
        let w = (x / WORD) as usize;
        w < self.bits.len() && self.bits[w] >> (x % WORD) & 1 == 1
    }

    /// Whether every integer of `[lo, hi]` is in the set.
    pub fn contains_interval(&self, lo: u64, hi: u64) -> bool {
        (lo..=hi).all(|x| self.contains(x))
    }

    /// First element of `[lo, hi]` missing from the set, if any.
    pub fn first_missing(&self, lo: u64, hi: u64) -> Option<u64> {
        (lo..=hi).find(|&x| !self.contains(x))
    }

    /// The gcd of consecutive differences; equivalently the largest d with
    /// A ⊆ {a₀, a₀+d, a₀+2d, …}. Rejected for singletons.
    pub fn ap_difference(&self) -> Result<u64> {
        if self.len() < 2 {
            return Err(Error::SingletonDifference);
        }
        let mut g = 0u64;
        for pair in self.elements.windows(2) {
            g = g.gcd(&(pair[1] - pair[0]));
        }
        Ok(g)
    }

    /// Translate so the minimum is 0, without dividing.
    pub fn normalize_translation(&self) -> IntSet {
        let offset = self.min();
        IntSet::from_sorted(self.elements.iter().map(|&e| e - offset).collect())
    }

    /// Translate min to 0 and divide out the common difference. Returns
    /// `(A', offset, divisor)` with `A' = (A − min A)/d`; d := 1 for singletons.
    pub fn normalize(&self) -> (IntSet, u64, u64) {
        let offset = self.min();
        let d = self.ap_difference().unwrap_or(1);
        let els: Vec<u64> = self.elements.iter().map(|&e| (e - offset) / d).collect();
        (IntSet::from_sorted(els), offset, d)
    }

    /// {a+b : a ∈ A, b ∈ B}. OR of B's bit vector shifted by each a ∈ A.
    pub fn sumset(&self, other: &IntSet) -> Result<IntSet> {
        let max_sum = self.max() + other.max();
        if max_sum >= UNIVERSE_BITS {
            return Err(Error::UniverseExceeded {
                needed: max_sum + 1,
                cap: UNIVERSE_BITS,
            });
        }
        let mut bits = vec![0u64; words_for(max_sum)];
        for &a in &self.elements {
            or_shifted(&mut bits, &other.bits, a);
        }
        Ok(IntSet::from_bits(bits))
    }

    /// kA by binary doubling; equals the iterated sumset.
    pub fn k_fold(&self, k: u64) -> Result<IntSet> {
        if k == 0 {
            return Err(Error::Domain("k_fold requires k >= 1".into()));
        }
        let max_sum = k
            .checked_mul(self.max())
            .ok_or(Error::UniverseExceeded {
                needed: u64::MAX,
                cap: UNIVERSE_BITS,
            })?;
        if max_sum >= UNIVERSE_BITS {
            return Err(Error::UniverseExceeded {
                needed: max_sum + 1,
                cap: UNIVERSE_BITS,
            });
        }
        let mut result: Option<IntSet> = None;
        let mut base = self.clone();
        let mut rem = k;
        loop {
            if rem & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.sumset(&base)?,
                });
            }
            rem >>= 1;
            if rem == 0 {
                break;
            }
            base = base.sumset(&base)?;
        }
        Ok(result.unwrap())
    }

    /// Count of distinct residues a mod m over a ∈ A.
    pub fn residue_classes(&self, m: u64) -> u64 {
        assert!(m >= 1, "modulus must be >= 1");
        let classes: HashSet<u64> = self.elements.iter().map(|&e| e % m).collect();
        classes.len() as u64
    }

    /// Whether `diff` ∈ A − A.
    pub fn has_difference(&self, diff: u64) -> bool {
        self.elements
            .iter()
            .any(|&a| a >= diff && self.contains(a - diff))
    }

    /// Leftmost maximal run of consecutive elements.
    pub fn longest_block(&self) -> Block {
        let mut best = Block {
            start: self.elements[0],
            length: 0,
        };
        let mut run_start = self.elements[0];
        let mut prev = self.elements[0];
        for &x in &self.elements[1..] {
            if x != prev + 1 {
                if prev - run_start > best.length {
                    best = Block {
                        start: run_start,
                        length: prev - run_start,
                    };
                }
                run_start = x;
            }
            prev = x;
        }
        if prev - run_start > best.length {
            best = Block {
                start: run_start,
                length: prev - run_start,
            };
        }
        best
    }

    /// Longest AP contained in A; ties broken by smallest difference, then
    /// smallest start. Quadratic scan, fine at desk scale.
    pub fn longest_ap(&self) -> APWitness {
        let mut best = APWitness {
            start: self.elements[0],
            difference: 1,
            length: 0,
        };
        if self.len() == 1 {
            return best;
        }
        let span = self.ell();
        let max = self.max();
        for d in 1..=span {
            // no d can strictly beat best once best.length fills the span
            if best.length >= span / d {
                break;
            }
            for &s in &self.elements {
                let mut len = 0;
                let mut x = s;
                while x + d <= max && self.contains(x + d) {
                    x += d;
                    len += 1;
                }
                if len > best.length {
                    best = APWitness {
                        start: s,
                        difference: d,
                        length: len,
                    };
                }
            }
        }
        best
    }
}

/// Left-to-right running sumset of a non-empty family.
pub fn family_sum(family: &[IntSet]) -> Result<IntSet> {
    let (first, rest) = family.split_first().ok_or(Error::EmptySet)?;
    let mut acc = first.clone();
    for s in rest {
        acc = acc.sumset(s)?;
    }
    Ok(acc)
}

fn or_shifted(dst: &mut [u64], src: &[u64], shift: u64) {
    let w = (shift / WORD) as usize;
    let b = shift % WORD;
    if b == 0 {
        for (j, &s) in src.iter().enumerate() {
            dst[w + j] |= s;
        }
    } else {
        let mut carry = 0u64;
        for (j, &s) in src.iter().enumerate() {
            dst[w + j] |= (s << b) | carry;
            carry = s >> (WORD - b);
        }
        if carry != 0 {
            dst[w + src.len()] |= carry;
        }
    }
}

/// "[{0,1,3},{0,2,3}]" — canonical textual form for record descriptors.
pub fn fmt_family(family: &[IntSet]) -> String {
    let mut s = String::from("[");
    for (i, a) in family.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&a.to_string());
    }
    s.push(']');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[i64]) -> IntSet {
        IntSet::new(v).unwrap()
    }

    /// Naive pairwise oracle, independent of the bit-vector path.
    fn naive_sumset(a: &IntSet, b: &IntSet) -> Vec<u64> {
        let mut out: Vec<u64> = a
            .elements()
            .iter()
            .flat_map(|&x| b.elements().iter().map(move |&y| x + y))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn make_set_examples() {
        assert_eq!(set(&[3, 0, 3, 1]).elements(), &[0, 1, 3]);
        assert_eq!(set(&[0]).elements(), &[0]);
        assert!(matches!(IntSet::new(&[]), Err(Error::EmptySet)));
        assert!(matches!(
            IntSet::new(&[-1, 2]),
            Err(Error::NegativeElement(-1))
        ));
        assert!(matches!(
            IntSet::new(&[(UNIVERSE_BITS + 3) as i64]),
            Err(Error::UniverseExceeded { .. })
        ));
    }

    #[test]
    fn ell_examples() {
        assert_eq!(set(&[0, 1, 3]).ell(), 3);
        assert_eq!(set(&[5]).ell(), 0);
        assert_eq!(set(&[2, 7]).ell(), 5);
    }

    #[test]
    fn ap_difference_examples() {
        assert_eq!(set(&[0, 4, 10]).ap_difference().unwrap(), 2);
        assert_eq!(set(&[0, 1, 3]).ap_difference().unwrap(), 1);
        assert_eq!(set(&[3, 10]).ap_difference().unwrap(), 7);
        assert!(matches!(
            set(&[7]).ap_difference(),
            Err(Error::SingletonDifference)
        ));
    }

    #[test]
    fn normalize_examples() {
        let (a, off, d) = set(&[4, 10, 16]).normalize();
        assert_eq!((a.elements(), off, d), (&[0, 1, 2][..], 4, 6));
        let (a, off, d) = set(&[0, 1, 3]).normalize();
        assert_eq!((a.elements(), off, d), (&[0, 1, 3][..], 0, 1));
        let (a, off, d) = set(&[7]).normalize();
        assert_eq!((a.elements(), off, d), (&[0][..], 7, 1));
    }

    #[test]
    fn sumset_examples() {
        let s = set(&[0, 2]).sumset(&set(&[0, 3])).unwrap();
        assert_eq!(s.elements(), &[0, 2, 3, 5]);
        let b = set(&[1, 4, 9]);
        assert_eq!(set(&[0]).sumset(&b).unwrap().elements(), b.elements());
        let t = set(&[0, 1, 3]).sumset(&set(&[0, 1, 3])).unwrap();
        assert_eq!(t.elements(), &[0, 1, 2, 3, 4, 6]);
    }

    #[test]
    fn k_fold_examples() {
        let a = set(&[0, 1, 3]);
        assert_eq!(a.k_fold(1).unwrap(), a);
        let mut expected: Vec<u64> = (0..=10).collect();
        expected.push(12);
        assert_eq!(a.k_fold(4).unwrap().elements(), &expected[..]);
        assert_eq!(set(&[1, 2]).k_fold(3).unwrap().elements(), &[3, 4, 5, 6]);
    }

    #[test]
    fn family_sum_examples() {
        let e = set(&[0, 1]);
        let s = family_sum(&[e.clone(), e.clone(), e]).unwrap();
        assert_eq!(s.elements(), &[0, 1, 2, 3]);
        let s = family_sum(&[set(&[0, 2]), set(&[0, 3])]).unwrap();
        assert_eq!(s.elements(), &[0, 2, 3, 5]);
        let a = set(&[2, 5, 9]);
        assert_eq!(family_sum(std::slice::from_ref(&a)).unwrap(), a);
    }

    #[test]
    fn longest_block_examples() {
        assert_eq!(
            set(&[0, 1, 2, 5, 6]).longest_block(),
            Block { start: 0, length: 2 }
        );
        assert_eq!(set(&[4]).longest_block(), Block { start: 4, length: 0 });
        let mut v: Vec<i64> = (0..=10).collect();
        v.push(12);
        assert_eq!(
            set(&v).longest_block(),
            Block {
                start: 0,
                length: 10
            }
        );
    }

    #[test]
    fn longest_ap_examples() {
        assert_eq!(
            set(&[0, 1, 2, 5, 6]).longest_ap(),
            APWitness {
                start: 0,
                difference: 1,
                length: 2
            }
        );
        assert_eq!(
            set(&[0, 3, 6, 9]).longest_ap(),
            APWitness {
                start: 0,
                difference: 3,
                length: 3
            }
        );
        assert_eq!(
            set(&[0, 1]).longest_ap(),
            APWitness {
                start: 0,
                difference: 1,
                length: 1
            }
        );
    }

    /// Brute force over (start, difference) — the independent AP oracle.
    fn ap_oracle(a: &IntSet) -> u64 {
        let mut best = 0;
        for &s in a.elements() {
            for d in 1..=a.ell().max(1) {
                let mut len = 0;
                let mut x = s;
                while x + d <= a.max() && a.contains(x + d) {
                    x += d;
                    len += 1;
                }
                best = best.max(len);
            }
        }
        best
    }

    #[test]
    fn residue_classes_examples() {
        assert_eq!(set(&[0, 2, 5]).residue_classes(2), 2);
        assert_eq!(set(&[0, 4, 10]).residue_classes(2), 1);
        assert_eq!(set(&[0, 2, 5]).residue_classes(1), 1);
    }

    #[test]
    fn has_difference_works() {
        let a = set(&[0, 1, 3]);
        assert!(a.has_difference(3));
        assert!(a.has_difference(2));
        assert!(!a.has_difference(4));
    }

    proptest! {
        #[test]
        fn sumset_matches_pairwise_oracle(
            a in proptest::collection::vec(0i64..=64, 1..12),
            b in proptest::collection::vec(0i64..=64, 1..12),
        ) {
            let (a, b) = (set(&a), set(&b));
            let s = a.sumset(&b).unwrap();
            prop_assert_eq!(s.elements(), &naive_sumset(&a, &b)[..]);
        }

        #[test]
        fn k_fold_matches_iterated_family_sum(
            a in proptest::collection::vec(0i64..=32, 1..8),
            k in 1u64..=8,
        ) {
            let a = set(&a);
            let copies = vec![a.clone(); k as usize];
            prop_assert_eq!(a.k_fold(k).unwrap(), family_sum(&copies).unwrap());
        }

        #[test]
        fn sumset_endpoints_add(
            a in proptest::collection::vec(0i64..=100, 1..10),
            b in proptest::collection::vec(0i64..=100, 1..10),
        ) {
            let (a, b) = (set(&a), set(&b));
            let s = a.sumset(&b).unwrap();
            prop_assert_eq!(s.min(), a.min() + b.min());
            prop_assert_eq!(s.max(), a.max() + b.max());
            prop_assert_eq!(s.ell(), a.ell() + b.ell());
        }

        #[test]
        fn normalize_idempotent(a in proptest::collection::vec(0i64..=200, 1..10)) {
            let a = set(&a);
            let (n1, _, _) = a.normalize();
            let (n2, off, d) = n1.normalize();
            prop_assert_eq!(&n1, &n2);
            prop_assert_eq!((off, d), (0, 1));
        }

        #[test]
        fn block_never_beats_ap(a in proptest::collection::vec(0i64..=80, 1..14)) {
            let a = set(&a);
            prop_assert!(a.longest_block().length <= a.longest_ap().length);
        }

        #[test]
        fn longest_ap_matches_oracle(a in proptest::collection::vec(0i64..=48, 1..10)) {
            let a = set(&a);
            prop_assert_eq!(a.longest_ap().length, ap_oracle(&a));
        }

        #[test]
        fn cardinality_floor(
            a in proptest::collection::vec(0i64..=100, 1..12),
            b in proptest::collection::vec(0i64..=100, 1..12),
        ) {
            let (a, b) = (set(&a), set(&b));
            prop_assert!(a.sumset(&b).unwrap().len() >= a.len() + b.len() - 1);
        }

        #[test]
        fn residue_classes_bounded(
            a in proptest::collection::vec(0i64..=100, 1..12),
            m in 1u64..=20,
        ) {
            let a = set(&a);
            prop_assert!(a.residue_classes(m) <= (a.len() as u64).min(m));
        }
    }
}
