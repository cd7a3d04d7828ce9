//! Exhaustive checks over small systems, runnable from the command line.
//!
//! Each suite enumerates every radix sequence in a small family and checks a
//! property against an independent route: closed form against recurrence,
//! division algorithm against the valuation, valuation against preorder rank,
//! and digit-wise addition against integer addition.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arithmetic::add;
use crate::codec::{encode_u64, FamilyNumeral, Representation};
use crate::notation::{format, parse, Style};
use crate::radix::{closed_form_place_value, PlaceValueSet, RadixSequence};
use crate::tree;

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Stop collecting failure messages after this many per suite.
const MAX_REPORTED: usize = 20;

struct Suite {
    name: &'static str,
    cases: u64,
    failures: Vec<String>,
    failed: u64,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            cases: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(msg());
            }
        }
    }

    fn finish(mut self) -> SuiteReport {
        if self.failed as usize > self.failures.len() {
            let rest = self.failed as usize - self.failures.len();
            self.failures.push(format!("... and {rest} more"));
        }
        SuiteReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// Every radix sequence with `1..=max_r` entries drawn from `1..=max_k`.
pub fn radix_family(max_r: usize, max_k: u64) -> Vec<RadixSequence> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        let mut ks = vec![1u64; r];
        loop {
            out.push(RadixSequence::new(ks.clone()).expect("entries are positive"));
            // odometer increment
            let mut i = 0;
            while i < r && ks[i] == max_k {
                ks[i] = 1;
                i += 1;
            }
            if i == r {
                break;
            }
            ks[i] += 1;
        }
    }
    out
}

/// Every canonical digit string of `system`, by direct enumeration.
pub fn canonical_numerals(system: &PlaceValueSet) -> Vec<FamilyNumeral> {
    let r = system.len();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn walk(system: &PlaceValueSet, level: usize, prefix: &mut Vec<u64>, out: &mut Vec<FamilyNumeral>) {
        for d in 0..system.k(level) {
            prefix.push(d);
            out.push(
                FamilyNumeral::canonical(system, prefix.clone()).expect("digits are in range"),
            );
            if level > 1 {
                walk(system, level - 1, prefix, out);
            }
            prefix.pop();
        }
    }
    walk(system, r, &mut prefix, &mut out);
    out
}

fn small(v: &BigUint) -> u64 {
    v.to_u64().expect("small-system values fit in u64")
}

pub fn place_value_suite() -> SuiteReport {
    let mut suite = Suite::new("place values: recurrence = closed form");
    for radix in radix_family(5, 5) {
        let system = PlaceValueSet::new(radix.clone());
        for q in 1..=radix.len() + 1 {
            suite.check(closed_form_place_value(radix.ks(), q) == *system.b(q), || {
                format!("{radix}: b_{q}")
            });
        }
    }
    suite.finish()
}

pub fn decomposition_suite() -> SuiteReport {
    let mut suite = Suite::new("decomposition identity for every (q, s)");
    for radix in radix_family(5, 5) {
        let system = PlaceValueSet::new(radix.clone());
        for q in 2..=radix.len() + 1 {
            for s in 1..q {
                let ok = system.decompose(q, s).ok().as_ref() == Some(system.b(q));
                suite.check(ok, || format!("{radix}: q = {q}, s = {s}"));
            }
        }
    }
    suite.finish()
}

pub fn bijection_suite() -> SuiteReport {
    let mut suite = Suite::new("encode is a bijection onto canonical numerals");
    for radix in radix_family(4, 4) {
        let system = PlaceValueSet::new(radix.clone());
        let capacity = small(system.capacity());
        let numerals = canonical_numerals(&system);
        suite.check(numerals.len() as u64 == capacity, || {
            format!("{radix}: {} numerals for capacity {capacity}", numerals.len())
        });
        let mut seen = HashSet::new();
        for x in &numerals {
            let v = small(&x.value());
            suite.check(v < capacity && seen.insert(v), || {
                format!("{radix}: {x} has value {v}, repeated or out of range")
            });
            let back = encode_u64(v, &system);
            suite.check(back.as_ref().map(|r| r.numeral()) == Ok(x), || {
                format!("{radix}: encode({v}) != {x}")
            });
        }
        for m in 0..capacity {
            let ok = encode_u64(m, &system).map(|r| small(&r.value()) == m);
            suite.check(ok == Ok(true), || format!("{radix}: round trip of {m}"));
        }
    }
    suite.finish()
}

pub fn preorder_suite() -> SuiteReport {
    let mut suite = Suite::new("valuation = preorder rank, division = unrank");
    for radix in radix_family(4, 4) {
        let system = PlaceValueSet::new(radix.clone());
        let vertices = match tree::enumerate(&radix) {
            Ok(v) => v,
            Err(e) => {
                suite.check(false, || format!("{radix}: {e}"));
                continue;
            }
        };
        suite.check(
            vertices.len() as u64 == small(system.capacity()),
            || format!("{radix}: {} vertices", vertices.len()),
        );
        for (n, vertex) in vertices.iter().enumerate() {
            let n = n as u64;
            let numeral = vertex.to_numeral(&system).expect("paths are numerals");
            let rank = tree::rank(vertex, &radix).map(|r| small(&r));
            suite.check(rank == Ok(n) && small(&numeral.value()) == n, || {
                format!("{radix}: vertex {vertex} at position {n}")
            });
            let unranked = tree::unrank(&BigUint::from(n), &radix);
            let encoded = encode_u64(n, &system);
            let ok = matches!((&unranked, &encoded), (Ok(u), Ok(e)) if u == vertex && e.digits() == u.path());
            suite.check(ok, || format!("{radix}: unrank/encode of {n}"));
        }
    }
    suite.finish()
}

pub fn addition_suite() -> SuiteReport {
    let mut suite = Suite::new("digit-wise addition = integer addition mod capacity");
    for radix in radix_family(3, 4) {
        let system = PlaceValueSet::new(radix.clone());
        let capacity = small(system.capacity());
        let reps: Vec<Representation> = (0..capacity)
            .map(|m| encode_u64(m, &system).expect("in range"))
            .collect();
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                let expected = &reps[(i + j) % capacity as usize];
                let got = panic::catch_unwind(AssertUnwindSafe(|| add(a, b)));
                let ok = matches!(&got, Ok(Ok(sum)) if sum == expected);
                suite.check(ok, || format!("{radix}: {a} + {b}, wanted {expected}"));
            }
        }
    }
    suite.finish()
}

pub fn notation_suite() -> SuiteReport {
    let mut suite = Suite::new("parse(format(x)) = x");
    let mut systems: Vec<PlaceValueSet> =
        radix_family(3, 4).into_iter().map(PlaceValueSet::new).collect();
    systems.push(PlaceValueSet::new(RadixSequence::new(vec![12, 3, 16]).unwrap()));
    for system in systems {
        for x in canonical_numerals(&system) {
            for style in [Style::Bare, Style::Subscripted, Style::Parenthesized] {
                let text = format(&x, style).expect("canonical numerals format in every style");
                let back = parse(&text, &system);
                suite.check(back.as_ref() == Ok(&x), || {
                    format!("{}: {text:?} parsed as {back:?}", system.radix())
                });
            }
        }
    }
    suite.finish()
}

type NamedSuite = (&'static str, fn() -> SuiteReport);

/// All suites, run in parallel and reported in a fixed order.
pub fn run_all() -> Vec<SuiteReport> {
    let suites: [NamedSuite; 6] = [
        ("place values", place_value_suite),
        ("decomposition", decomposition_suite),
        ("bijection", bijection_suite),
        ("preorder", preorder_suite),
        ("addition", addition_suite),
        ("notation", notation_suite),
    ];
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&(name, suite)| (name, scope.spawn(suite)))
            .collect();
        handles
            .into_iter()
            .map(|(name, handle)| {
                handle.join().unwrap_or_else(|_| SuiteReport {
                    name,
                    cases: 0,
                    failures: vec!["suite panicked".to_string()],
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(radix_family(2, 3).len(), 3 + 9);
        assert_eq!(radix_family(4, 4).len(), 4 + 16 + 64 + 256);
        let first = &radix_family(3, 2)[0];
        assert_eq!(first.ks(), &[1]);
    }

    #[test]
    fn canonical_numerals_follow_preorder() {
        let system = PlaceValueSet::uniform(2, 3).unwrap();
        let texts: Vec<String> = canonical_numerals(&system)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(texts[..5], ["0", "00", "000", "001", "01"]);
        assert_eq!(texts.len(), 14);
    }

    #[test]
    fn notation_round_trips() {
        let report = notation_suite();
        assert!(report.passed(), "{:?}", report.failures);
    }
}
