//! Radix sequences and the place-value sets they generate.
//!
//! A radix sequence `K = (k_1, ..., k_r)` is stored least-significant first.
//! Levels are 1-based: the digit at level `x` ranges over `0..k_x` and is
//! weighted by `b_x`, where `b_1 = 1` and `b_{q} = 1 + k_{q-1} * b_{q-1}`.
//! The set also keeps `b_{r+1}`, because `b_{r+1} - 1` is both the number of
//! representable values and the modulus used by addition.
//!
//! A level with `k_x = 1` is allowed. It is degenerate: the only digit it
//! admits is `0`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The base sequence `(k_1, ..., k_r)` of a distance-sensitive system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadixSequence {
    ks: Vec<u64>,
}

impl RadixSequence {
    /// Validates `ks` (least-significant level first).
    pub fn new(ks: impl Into<Vec<u64>>) -> Result<Self> {
        let ks = ks.into();
        if ks.is_empty() {
            return Err(Error::invalid("a radix sequence needs at least one entry"));
        }
        if let Some(pos) = ks.iter().position(|&k| k == 0) {
            return Err(Error::invalid(format!(
                "radix entry k_{} is 0; every entry must be a positive integer",
                pos + 1
            )));
        }
        Ok(RadixSequence { ks })
    }

    /// The sequence `(k, k, ..., k)` of length `r`.
    pub fn uniform(k: u64, r: usize) -> Result<Self> {
        RadixSequence::new(vec![k; r])
    }

    pub fn ks(&self) -> &[u64] {
        &self.ks
    }

    /// Number of levels `r`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.ks.len()
    }

    /// `k_level`, 1-based. Panics when `level` is outside `1..=r`.
    pub fn k(&self, level: usize) -> u64 {
        assert!(
            (1..=self.ks.len()).contains(&level),
            "level {level} outside 1..={}",
            self.ks.len()
        );
        self.ks[level - 1]
    }

    /// `Some(k)` when every entry equals `k`.
    pub fn uniform_radix(&self) -> Option<u64> {
        let first = self.ks[0];
        self.ks.iter().all(|&k| k == first).then_some(first)
    }

    pub fn max_radix(&self) -> u64 {
        self.ks.iter().copied().max().unwrap_or(1)
    }

    /// True when every digit of the system is a single decimal character.
    pub fn single_char_digits(&self) -> bool {
        self.max_radix() <= 10
    }

    /// True when `self` is `other` with zero or more levels added on top.
    pub fn extends(&self, other: &RadixSequence) -> bool {
        self.ks.starts_with(&other.ks)
    }
}

impl fmt::Display for RadixSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.ks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

/// Evaluates `b_q = 1 + k_{q-1} + k_{q-1}k_{q-2} + ... + k_{q-1}...k_1`
/// directly as a sum of products. `q` ranges over `1..=r+1`.
pub fn closed_form_place_value(ks: &[u64], q: usize) -> BigUint {
    assert!(q >= 1 && q <= ks.len() + 1, "q = {q} outside 1..={}", ks.len() + 1);
    let mut sum = BigUint::one();
    let mut product = BigUint::one();
    for j in (1..q).rev() {
        product *= ks[j - 1];
        sum += &product;
    }
    sum
}

#[derive(Debug)]
struct Inner {
    radix: RadixSequence,
    // b_1 ..= b_{r+1}
    bs: Vec<BigUint>,
    capacity: BigUint,
}

/// The place values `b_1, ..., b_r` generated by a radix sequence, plus
/// `b_{r+1}`.
///
/// Cloning is cheap; the values are shared.
#[derive(Clone, Debug)]
pub struct PlaceValueSet {
    inner: Arc<Inner>,
}

/// Builds the place-value set of `radix`.
pub fn place_values(radix: &RadixSequence) -> PlaceValueSet {
    PlaceValueSet::new(radix.clone())
}

impl PlaceValueSet {
    /// Computes the place values by the recurrence and cross-checks every one
    /// against the closed-form sum of products.
    pub fn new(radix: RadixSequence) -> Self {
        let r = radix.len();
        let mut bs = Vec::with_capacity(r + 1);
        bs.push(BigUint::one());
        for q in 2..=r + 1 {
            let next = &bs[q - 2] * radix.k(q - 1) + 1u32;
            bs.push(next);
        }
        for (q, b) in bs.iter().enumerate().map(|(i, b)| (i + 1, b)) {
            assert_eq!(
                &closed_form_place_value(radix.ks(), q),
                b,
                "closed form disagrees with recurrence at b_{q}"
            );
        }
        let capacity = &bs[r] - 1u32;
        PlaceValueSet {
            inner: Arc::new(Inner {
                radix,
                bs,
                capacity,
            }),
        }
    }

    /// The uniform system `(k, ..., k)` with `r` levels.
    pub fn uniform(k: u64, r: usize) -> Result<Self> {
        Ok(PlaceValueSet::new(RadixSequence::uniform(k, r)?))
    }

    pub fn radix(&self) -> &RadixSequence {
        &self.inner.radix
    }

    /// Number of levels `r`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.inner.radix.len()
    }

    pub fn k(&self, level: usize) -> u64 {
        self.inner.radix.k(level)
    }

    /// `b_q` for `q` in `1..=r+1`.
    pub fn b(&self, q: usize) -> &BigUint {
        assert!(
            q >= 1 && q <= self.len() + 1,
            "q = {q} outside 1..={}",
            self.len() + 1
        );
        &self.inner.bs[q - 1]
    }

    /// `b_1, ..., b_r`.
    pub fn values(&self) -> &[BigUint] {
        &self.inner.bs[..self.len()]
    }

    /// `b_{r+1}`.
    pub fn b_top(&self) -> &BigUint {
        &self.inner.bs[self.len()]
    }

    /// `b_{r+1} - 1`: the number of representable values and the addition
    /// modulus.
    pub fn capacity(&self) -> &BigUint {
        &self.inner.capacity
    }

    /// Largest representable value, `b_{r+1} - 2`.
    pub fn max_value(&self) -> BigUint {
        self.capacity() - 1u32
    }

    /// Right-hand side of the generalized decomposition
    ///
    /// `(k_{q-1}-1)b_{q-1} + ... + (k_{q-s+1}-1)b_{q-s+1} + k_{q-s}b_{q-s} + s`,
    ///
    /// which equals `b_q` for `2 <= q <= r+1` and `1 <= s <= q-1`.
    pub fn decompose(&self, q: usize, s: usize) -> Result<BigUint> {
        let r = self.len();
        if !(2..=r + 1).contains(&q) {
            return Err(Error::invalid(format!("q = {q} outside 2..={}", r + 1)));
        }
        if !(1..q).contains(&s) {
            return Err(Error::invalid(format!("s = {s} outside 1..={}", q - 1)));
        }
        let mut sum = BigUint::from(s);
        for j in (q - s + 1)..q {
            sum += self.b(j) * (self.k(j) - 1);
        }
        sum += self.b(q - s) * self.k(q - s);
        Ok(sum)
    }
}

impl PartialEq for PlaceValueSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.radix == other.inner.radix
    }
}

impl Eq for PlaceValueSet {}

impl From<RadixSequence> for PlaceValueSet {
    fn from(radix: RadixSequence) -> Self {
        PlaceValueSet::new(radix)
    }
}

/// JSON shape of a system: `{"k": [...], "b": [...], "b_top": "..."}` with
/// the place values as decimal strings.
#[derive(Serialize, Deserialize)]
struct SystemRecord {
    k: Vec<u64>,
    #[serde(default)]
    b: Vec<String>,
    #[serde(default)]
    b_top: Option<String>,
}

impl Serialize for PlaceValueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SystemRecord {
            k: self.radix().ks().to_vec(),
            b: self.values().iter().map(|b| b.to_string()).collect(),
            b_top: Some(self.b_top().to_string()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PlaceValueSet {
    /// Rebuilds the set from `k`; `b` and `b_top`, when present, must agree.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let record = SystemRecord::deserialize(deserializer)?;
        let radix = RadixSequence::new(record.k).map_err(D::Error::custom)?;
        let set = PlaceValueSet::new(radix);
        if !record.b.is_empty() {
            let expected: Vec<String> = set.values().iter().map(|b| b.to_string()).collect();
            if record.b != expected {
                return Err(D::Error::custom("place values do not match the radix sequence"));
            }
        }
        if let Some(top) = record.b_top {
            if top != set.b_top().to_string() {
                return Err(D::Error::custom("b_top does not match the radix sequence"));
            }
        }
        Ok(set)
    }
}
