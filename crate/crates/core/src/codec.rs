//! Conversion between natural numbers and distance-sensitive numerals.
//!
//! A numeral is a digit string `d_0 d_1 ... d_{m-1}` (most significant first)
//! together with the level `l` of its leading digit. Its value is
//!
//! ```text
//! d_0 * b_l + d_1 * b_{l-1} + ... + d_{m-1} * b_{l-m+1} + (m - 1)
//! ```
//!
//! The trailing `m - 1` is the distance term. Because it depends on the
//! length, leading zeros change the value: in the uniform base-10 system with
//! three levels, `012` is 15 while `12_2` is 14.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::notation::{self, Style};
use crate::radix::{PlaceValueSet, RadixSequence};

/// A digit string placed in a system, with an explicit start level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyNumeral {
    digits: Vec<u64>,
    start_level: usize,
    system: PlaceValueSet,
}

impl FamilyNumeral {
    /// Validates that the digits fit below `start_level` and that every digit
    /// is smaller than the radix of its level.
    pub fn new(system: &PlaceValueSet, digits: Vec<u64>, start_level: usize) -> Result<Self> {
        let r = system.len();
        if digits.is_empty() {
            return Err(Error::InvalidNumeral("a numeral needs at least one digit".into()));
        }
        if start_level == 0 || start_level > r {
            return Err(Error::InvalidNumeral(format!(
                "start level {start_level} outside 1..={r}"
            )));
        }
        if digits.len() > start_level {
            return Err(Error::InvalidNumeral(format!(
                "{} digits do not fit below level {start_level}",
                digits.len()
            )));
        }
        for (t, &d) in digits.iter().enumerate() {
            let level = start_level - t;
            let k = system.k(level);
            if d >= k {
                return Err(Error::InvalidNumeral(format!(
                    "digit {d} at level {level} must be below k_{level} = {k}"
                )));
            }
        }
        Ok(FamilyNumeral {
            digits,
            start_level,
            system: system.clone(),
        })
    }

    /// A numeral whose leading digit sits at the top level `r`.
    pub fn canonical(system: &PlaceValueSet, digits: Vec<u64>) -> Result<Self> {
        FamilyNumeral::new(system, digits, system.len())
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn start_level(&self) -> usize {
        self.start_level
    }

    /// Level of the last digit.
    pub fn end_level(&self) -> usize {
        self.start_level + 1 - self.digits.len()
    }

    pub fn system(&self) -> &PlaceValueSet {
        &self.system
    }

    /// The distance term, one less than the number of digits.
    pub fn distance_term(&self) -> usize {
        self.digits.len() - 1
    }

    /// `(level, digit)` pairs, most significant first.
    pub fn levels(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.digits
            .iter()
            .enumerate()
            .map(move |(t, &d)| (self.start_level - t, d))
    }

    pub fn is_canonical(&self) -> bool {
        self.start_level == self.system.len()
    }

    /// The value of the numeral.
    pub fn value(&self) -> BigUint {
        let mut sum = BigUint::from(self.distance_term());
        for (level, d) in self.levels() {
            if d != 0 {
                sum += self.system.b(level) * d;
            }
        }
        sum
    }

    /// Re-expresses the numeral in the canonical form of its system.
    pub fn to_representation(&self) -> Representation {
        encode(&self.value(), &self.system).expect("a valid numeral is always in range")
    }

    /// The same digits placed in a larger system that extends this one.
    pub fn embed(&self, system: &PlaceValueSet) -> Result<FamilyNumeral> {
        if !system.radix().extends(self.system.radix()) {
            return Err(Error::invalid(format!(
                "system {} does not extend {}",
                system.radix(),
                self.system.radix()
            )));
        }
        FamilyNumeral::new(system, self.digits.clone(), self.start_level)
    }

    pub fn format(&self, style: Style) -> Result<String> {
        notation::format(self, style)
    }
}

impl fmt::Display for FamilyNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = Style::default_for(self);
        f.write_str(&notation::format(self, style).map_err(|_| fmt::Error)?)
    }
}

/// Evaluates a numeral.
pub fn value_of(x: &FamilyNumeral) -> BigUint {
    x.value()
}

/// A numeral whose leading digit is at the top level of its system. Leading
/// zeros are significant digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation(FamilyNumeral);

impl Representation {
    pub fn new(system: &PlaceValueSet, digits: Vec<u64>) -> Result<Self> {
        FamilyNumeral::canonical(system, digits).map(Representation)
    }

    pub fn into_numeral(self) -> FamilyNumeral {
        self.0
    }

    pub fn numeral(&self) -> &FamilyNumeral {
        &self.0
    }
}

impl Deref for Representation {
    type Target = FamilyNumeral;

    fn deref(&self) -> &FamilyNumeral {
        &self.0
    }
}

impl TryFrom<FamilyNumeral> for Representation {
    type Error = Error;

    fn try_from(x: FamilyNumeral) -> Result<Self> {
        if x.is_canonical() {
            Ok(Representation(x))
        } else {
            Err(Error::invalid(format!(
                "numeral starts at level {}, not at the top level {}",
                x.start_level,
                x.system.len()
            )))
        }
    }
}

impl From<Representation> for FamilyNumeral {
    fn from(r: Representation) -> Self {
        r.0
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn out_of_range(m: &BigUint, system: &PlaceValueSet) -> Error {
    Error::OutOfRange {
        value: m.to_string(),
        max: system.max_value().to_string(),
    }
}

/// The distance-sensitive division algorithm.
///
/// Divide by `b_r` for the leading digit. While the remainder is nonzero,
/// subtract one (the distance contributed by the next digit) and divide by the
/// next smaller place value. Stop at the first zero remainder.
pub fn encode(m: &BigUint, system: &PlaceValueSet) -> Result<Representation> {
    if m >= system.capacity() {
        return Err(out_of_range(m, system));
    }
    let r = system.len();
    let mut digits = Vec::new();
    let mut level = r;
    let (q, mut rem) = m.div_rem(system.b(level));
    digits.push(to_digit(&q));
    while !rem.is_zero() {
        // Values in range never run past level 1: b_1 = 1 divides everything.
        level -= 1;
        let (q, next) = (rem - 1u32).div_rem(system.b(level));
        digits.push(to_digit(&q));
        rem = next;
    }
    Ok(Representation(FamilyNumeral {
        digits,
        start_level: r,
        system: system.clone(),
    }))
}

pub fn encode_u64(m: u64, system: &PlaceValueSet) -> Result<Representation> {
    encode(&BigUint::from(m), system)
}

/// Signed entry point; negative values are rejected.
pub fn encode_i128(m: i128, system: &PlaceValueSet) -> Result<Representation> {
    let m = u128::try_from(m)
        .map_err(|_| Error::invalid(format!("{m} is negative; only naturals are representable")))?;
    encode(&BigUint::from(m), system)
}

fn to_digit(q: &BigUint) -> u64 {
    q.to_u64().expect("quotient is bounded by the level radix")
}

/// The smallest uniform system `(k, ..., k)` in which `m` is representable,
/// i.e. the least `r` with `m <= b_{r+1} - 2`.
pub fn critical_system(m: &BigUint, k: u64) -> Result<PlaceValueSet> {
    if k < 2 {
        return Err(Error::invalid(format!(
            "radix {k} cannot grow a system large enough; use k >= 2"
        )));
    }
    // b_{r+1} - 2 for r = 1, 2, ... without rebuilding whole systems.
    let mut r = 1;
    let mut b_next = BigUint::from(k) + 1u32;
    while m + 2u32 > b_next {
        b_next = b_next * k + 1u32;
        r += 1;
    }
    PlaceValueSet::uniform(k, r)
}

/// Encodes `m` in the uniform system `(k, ..., k)` with exactly `r` levels.
pub fn extend_and_encode(m: &BigUint, k: u64, r: usize) -> Result<Representation> {
    let system = PlaceValueSet::new(RadixSequence::uniform(k, r)?);
    encode(m, &system)
}

/// JSON shape of one conversion.
#[derive(Debug, Clone, Serialize)]
pub struct ConversionRecord {
    pub system: PlaceValueSet,
    pub digits: Vec<u64>,
    pub start_level: usize,
    pub value: String,
}

impl From<&FamilyNumeral> for ConversionRecord {
    fn from(x: &FamilyNumeral) -> Self {
        ConversionRecord {
            system: x.system.clone(),
            digits: x.digits.clone(),
            start_level: x.start_level,
            value: x.value().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(ks: &[u64]) -> PlaceValueSet {
        PlaceValueSet::new(RadixSequence::new(ks.to_vec()).unwrap())
    }

    fn num(p: &PlaceValueSet, digits: &[u64], level: usize) -> FamilyNumeral {
        FamilyNumeral::new(p, digits.to_vec(), level).unwrap()
    }

    #[test]
    fn values_of_worked_numerals() {
        let p = sys(&[4, 5, 2, 6]);
        assert_eq!(num(&p, &[1, 0, 3], 4).value(), BigUint::from(70u32));
        assert_eq!(num(&p, &[5], 4).value(), BigUint::from(265u32));
        assert_eq!(num(&p, &[1, 1, 4], 4).value(), BigUint::from(101u32));
        assert_eq!(num(&p, &[2, 0, 1], 4).value(), BigUint::from(113u32));
        assert_eq!(num(&p, &[0], 4).value(), BigUint::zero());

        let p = sys(&[2, 2, 2]);
        assert_eq!(num(&p, &[0, 1, 0], 3).value(), BigUint::from(5u32));

        let p = sys(&[10, 10]);
        assert_eq!(num(&p, &[2, 3], 2).value(), BigUint::from(26u32));

        let p = sys(&[10; 4]);
        assert_eq!(num(&p, &[2, 3], 4).value(), BigUint::from(2556u32));
    }

    #[test]
    fn leading_zeros_are_significant() {
        let p = sys(&[10; 3]);
        let padded = num(&p, &[0, 1, 2], 3);
        let short = num(&p, &[1, 2], 2);
        assert_eq!(padded.value(), BigUint::from(15u32));
        assert_eq!(short.value(), BigUint::from(14u32));
        assert_ne!(padded, short);
    }

    #[test]
    fn numeral_validation() {
        let p = sys(&[4, 5, 2, 6]);
        // level 3 has k = 2
        assert!(matches!(
            FamilyNumeral::new(&p, vec![1, 2], 4),
            Err(Error::InvalidNumeral(_))
        ));
        assert!(FamilyNumeral::new(&p, vec![1, 1, 4, 3], 4).is_ok());
        assert!(FamilyNumeral::new(&p, vec![1, 1, 4, 3, 0], 4).is_err());
        assert!(FamilyNumeral::new(&p, vec![1], 5).is_err());
        assert!(FamilyNumeral::new(&p, vec![1, 0], 1).is_err());
        assert!(FamilyNumeral::new(&p, vec![], 4).is_err());
    }

    #[test]
    fn division_algorithm_examples() {
        let p = sys(&[4, 5, 2, 6]);
        for (m, digits) in [
            (70u64, vec![1, 0, 3]),
            (101, vec![1, 1, 4]),
            (113, vec![2, 0, 1]),
            (265, vec![5]),
            (0, vec![0]),
            (317, vec![5, 1, 4, 3]),
        ] {
            let rep = encode_u64(m, &p).unwrap();
            assert_eq!(rep.digits(), &digits[..], "m = {m}");
            assert_eq!(rep.start_level(), 4);
        }
        let p = sys(&[10, 10]);
        assert_eq!(encode_u64(38, &p).unwrap().digits(), &[3, 4]);
        assert_eq!(encode_u64(99, &p).unwrap().digits(), &[9]);
    }

    #[test]
    fn encode_range_errors() {
        let p = sys(&[4, 5, 2, 6]);
        assert!(matches!(encode_u64(318, &p), Err(Error::OutOfRange { .. })));
        assert!(matches!(encode_i128(-1, &p), Err(Error::InvalidArgument(_))));
        assert_eq!(encode_i128(70, &p).unwrap().digits(), &[1, 0, 3]);
        let one = sys(&[1]);
        assert_eq!(encode_u64(0, &one).unwrap().digits(), &[0]);
        assert!(encode_u64(1, &one).is_err());
    }

    #[test]
    fn critical_systems() {
        let p = critical_system(&BigUint::from(205_556u32), 10).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.b(6), &BigUint::from(111_111u32));
        assert_eq!(critical_system(&BigUint::zero(), 10).unwrap().len(), 1);
        assert_eq!(critical_system(&BigUint::from(109u32), 10).unwrap().len(), 2);
        assert_eq!(critical_system(&BigUint::from(110u32), 10).unwrap().len(), 3);
        assert!(critical_system(&BigUint::from(3u32), 1).is_err());
    }

    #[test]
    fn critical_system_110_by_exhaustion() {
        // Every value the two-level system can produce is below 110.
        let p = sys(&[10, 10]);
        let mut max = BigUint::zero();
        for d2 in 0..10u64 {
            max = max.max(num(&p, &[d2], 2).value());
            for d1 in 0..10u64 {
                max = max.max(num(&p, &[d2, d1], 2).value());
            }
        }
        assert_eq!(max, BigUint::from(109u32));
    }

    #[test]
    fn extended_systems() {
        let n = BigUint::from(205_556u32);
        let digits = |r| {
            extend_and_encode(&n, 10, r)
                .unwrap()
                .digits()
                .iter()
                .map(|d| char::from(b'0' + *d as u8))
                .collect::<String>()
        };
        assert_eq!(digits(6), "185");
        assert_eq!(digits(7), "0184999");
        assert_eq!(digits(17), "0000000000018499");
        assert_eq!(digits(28), "000000000000000000000018498");
        assert!(extend_and_encode(&n, 10, 5).is_err());
    }

    #[test]
    fn representation_requires_top_level() {
        let p = sys(&[10; 3]);
        assert!(Representation::try_from(num(&p, &[1, 2], 2)).is_err());
        let rep = Representation::try_from(num(&p, &[1, 2], 3)).unwrap();
        assert_eq!(rep.distance_term(), 1);
        assert_eq!(num(&p, &[1, 2], 2).to_representation().digits(), &[0, 1, 1]);
    }

    #[test]
    fn embedding_keeps_value() {
        let small = sys(&[10; 3]);
        let big = sys(&[10; 5]);
        let x = num(&small, &[3, 2, 4], 3);
        let y = x.embed(&big).unwrap();
        assert_eq!(y.value(), x.value());
        assert_eq!(y.value(), BigUint::from(361u32));
        assert!(x.embed(&sys(&[9; 5])).is_err());
    }

    #[test]
    fn conversion_record_json() {
        let p = sys(&[4, 5, 2, 6]);
        let rep = encode_u64(70, &p).unwrap();
        let json = serde_json::to_value(ConversionRecord::from(rep.numeral())).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "system": {"k": [4, 5, 2, 6], "b": ["1", "5", "26", "53"], "b_top": "319"},
                "digits": [1, 0, 3],
                "start_level": 4,
                "value": "70"
            })
        );
    }
}
