//! Digit-wise addition.
//!
//! Two numerals are added by summing the coefficients of equal place values
//! and summing their distance terms (rule 1). The resulting [`Expansion`] is
//! then brought back to canonical form:
//!
//! * rule 2, carry: `k_j * b_j + 1 = b_{j+1}`, so `k_j` units at level `j`
//!   become one unit at level `j + 1` and the constant drops by one;
//! * rule 3, distance: the constant must equal the number of digits minus
//!   one. Excess constant moves into the `b_1` coefficient; a shortfall is
//!   covered by taking units from `b_1`, or by borrowing one `b_j` as
//!   `k_{j-1}` units of `b_{j-1}` plus one. Trailing zero levels are retracted
//!   when that makes the constant agree with the shorter length;
//! * rule 4, bounds: every digit at level `x` lies in `0..k_x`;
//! * rule 5, wrap: `k_r * b_r = b_{r+1} - 1`, so sums are taken modulo
//!   `b_{r+1} - 1`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use crate::codec::{FamilyNumeral, Representation};
use crate::error::{Error, Result};
use crate::notation::{self, Style};
use crate::radix::PlaceValueSet;

/// Per-level coefficients plus a constant term. Coefficients may exceed their
/// digit bound and the constant may be negative while a sum is normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    // index j holds the coefficient of b_{j+1}
    coeffs: Vec<i128>,
    constant: i128,
    system: PlaceValueSet,
}

impl Expansion {
    pub fn zero(system: &PlaceValueSet) -> Self {
        Expansion {
            coeffs: vec![0; system.len()],
            constant: 0,
            system: system.clone(),
        }
    }

    /// `coeffs[j]` is the coefficient of `b_{j+1}`; missing levels are zero.
    pub fn new(system: &PlaceValueSet, coeffs: &[i128], constant: i128) -> Result<Self> {
        if coeffs.len() > system.len() {
            return Err(Error::invalid(format!(
                "{} coefficients for a system with {} levels",
                coeffs.len(),
                system.len()
            )));
        }
        let mut e = Expansion::zero(system);
        e.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        e.constant = constant;
        Ok(e)
    }

    /// Sets the coefficient of `b_level`.
    pub fn with(mut self, level: usize, coeff: i128) -> Self {
        self.coeffs[level - 1] = coeff;
        self
    }

    pub fn with_constant(mut self, constant: i128) -> Self {
        self.constant = constant;
        self
    }

    pub fn coeff(&self, level: usize) -> i128 {
        self.coeffs[level - 1]
    }

    pub fn constant(&self) -> i128 {
        self.constant
    }

    pub fn system(&self) -> &PlaceValueSet {
        &self.system
    }

    /// `sum(coeff_j * b_j) + constant`.
    pub fn raw_value(&self) -> BigInt {
        let mut sum = BigInt::from(self.constant);
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                sum += BigInt::from(self.system.b(j + 1).clone()) * c;
            }
        }
        sum
    }

    /// `raw_value` reduced into `0..b_{r+1}-1`.
    pub fn reduced_value(&self) -> BigUint {
        let modulus = BigInt::from(self.system.capacity().clone());
        self.raw_value()
            .mod_floor(&modulus)
            .to_biguint()
            .expect("mod_floor is non-negative")
    }
}

/// Lays a numeral out level by level; the constant is its distance term.
pub fn to_expansion(x: &FamilyNumeral) -> Expansion {
    let mut e = Expansion::zero(x.system());
    for (level, d) in x.levels() {
        e.coeffs[level - 1] = i128::from(d);
    }
    e.constant = x.distance_term() as i128;
    e
}

/// Coefficient-wise sum (rule 1).
pub fn add_expansions(a: &Expansion, b: &Expansion) -> Result<Expansion> {
    if a.system != b.system {
        return Err(Error::invalid(format!(
            "cannot add expansions over {} and {}",
            a.system.radix(),
            b.system.radix()
        )));
    }
    Ok(Expansion {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        constant: a.constant + b.constant,
        system: a.system.clone(),
    })
}

/// Which rule a normalization step applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Positionwise,
    Carry,
    Distance,
    Wrap,
}

impl Rule {
    pub fn number(self) -> u8 {
        match self {
            Rule::Positionwise => 1,
            Rule::Carry => 2,
            Rule::Distance => 3,
            Rule::Wrap => 5,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rule {}", self.number())
    }
}

/// One row of a worked addition: coefficients for levels `r` down to 1
/// (`None` where the row has no digit), the constant, and an annotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub label: String,
    pub cells: Vec<Option<i128>>,
    pub constant: i128,
    pub rule: Option<Rule>,
    pub note: String,
}

/// The worked layout of an addition, one row per rule application.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub rows: Vec<TraceRow>,
}

impl Trace {
    /// Rows produced by normalization steps (the rows that start with `=`).
    pub fn steps(&self) -> impl Iterator<Item = &TraceRow> {
        self.rows.iter().filter(|row| row.label == "=")
    }
}

fn cell_text(c: i128) -> String {
    if (0..10).contains(&c) {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label_width = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
        let levels = self.rows.first().map_or(0, |r| r.cells.len());
        let cell_width = self
            .rows
            .iter()
            .flat_map(|r| r.cells.iter().flatten().map(|&c| cell_text(c).len()))
            .chain(self.rows.iter().map(|r| cell_text(r.constant).len()))
            .max()
            .unwrap_or(1);
        for row in &self.rows {
            // continuation rows align their "=" under the labeled rows
            let label = if row.label == "=" { "" } else { row.label.as_str() };
            let mut line = format!("{label:>label_width$} =");
            for t in 0..levels {
                let text = row.cells[t].map(cell_text).unwrap_or_default();
                line.push_str(&format!(" {text:>cell_width$}"));
            }
            line.push_str(&format!(" | {:>cell_width$}", cell_text(row.constant)));
            match (row.rule, row.note.is_empty()) {
                (Some(rule), true) => line.push_str(&format!("  [{rule}]")),
                (Some(rule), false) => line.push_str(&format!("  [{rule}: {}]", row.note)),
                (None, false) => line.push_str(&format!("  [{}]", row.note)),
                (None, true) => {}
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

struct Normalizer {
    coeffs: Vec<i128>,
    constant: i128,
    system: PlaceValueSet,
    // lowest level shown in the worked layout
    span_low: usize,
    steps: usize,
    limit: usize,
    trace: Option<Vec<TraceRow>>,
    // value every step must preserve, modulo b_{r+1} - 1
    expected: BigUint,
}

impl Normalizer {
    fn new(e: &Expansion, span_low: usize, trace: bool) -> Self {
        let r = e.system.len();
        let max_k = e.system.radix().max_radix() as usize;
        // sums of two numerals settle within 4 r max(k); larger hand-built
        // coefficients and constants need steps in proportion to their size
        let magnitude = e
            .coeffs
            .iter()
            .chain(std::iter::once(&e.constant))
            .fold(0usize, |acc, c| {
                acc.saturating_add(usize::try_from(c.unsigned_abs()).unwrap_or(usize::MAX))
            });
        Normalizer {
            coeffs: e.coeffs.clone(),
            constant: e.constant,
            system: e.system.clone(),
            span_low,
            steps: 0,
            limit: (4 * r * max_k).saturating_add(magnitude.saturating_mul(4 * (r + 1))),
            trace: trace.then(Vec::new),
            expected: e.reduced_value(),
        }
    }

    fn r(&self) -> usize {
        self.coeffs.len()
    }

    fn k(&self, level: usize) -> i128 {
        i128::from(self.system.k(level))
    }

    fn c(&mut self, level: usize) -> &mut i128 {
        &mut self.coeffs[level - 1]
    }

    fn record(&mut self, rule: Rule, note: impl FnOnce() -> String) {
        self.steps += 1;
        assert!(
            self.steps <= self.limit,
            "normalization did not reach a fixpoint within {} steps",
            self.limit
        );
        if cfg!(debug_assertions) {
            let now = Expansion {
                coeffs: self.coeffs.clone(),
                constant: self.constant,
                system: self.system.clone(),
            };
            assert_eq!(now.reduced_value(), self.expected, "{rule} changed the value");
        }
        if let Some(mut rows) = self.trace.take() {
            rows.push(self.row("=", self.span_low, Some(rule), note()));
            self.trace = Some(rows);
        }
    }

    fn row(&self, label: &str, low: usize, rule: Option<Rule>, note: String) -> TraceRow {
        let r = self.r();
        TraceRow {
            label: label.to_string(),
            cells: (1..=r)
                .rev()
                .map(|level| (level >= low).then(|| self.coeffs[level - 1]))
                .collect(),
            constant: self.constant,
            rule,
            note,
        }
    }

    /// Rule 2 at every level below the top, then rule 5 at the top.
    fn carry_pass(&mut self) {
        let r = self.r();
        for level in 1..r {
            let k = self.k(level);
            let c = *self.c(level);
            if (0..k).contains(&c) {
                continue;
            }
            let (q, rem) = c.div_mod_floor(&k);
            *self.c(level) = rem;
            *self.c(level + 1) += q;
            self.constant -= q;
            self.record(Rule::Carry, || {
                if q > 0 {
                    format!("{k}b_{level} + 1 = b_{}, applied {q} time(s)", level + 1)
                } else {
                    format!("b_{} = {k}b_{level} + 1, borrowed {} time(s)", level + 1, -q)
                }
            });
        }
        let k = self.k(r);
        let top = *self.c(r);
        if !(0..k).contains(&top) {
            *self.c(r) = top.mod_floor(&k);
            self.record(Rule::Wrap, || format!("{k}b_{r} = b_{} - 1 vanishes", r + 1));
        }
    }

    fn lowest_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0).map(|j| j + 1)
    }

    fn run(mut self) -> (Representation, Vec<TraceRow>) {
        let r = self.r();
        let top = r as i128 - 1;
        self.carry_pass();
        let end = loop {
            if self.constant > top {
                let excess = self.constant - top;
                *self.c(1) += excess;
                self.constant = top;
                self.record(Rule::Distance, || {
                    format!("{excess} moved from the distance term to the coefficient of b_1")
                });
                self.span_low = 1;
                self.carry_pass();
                continue;
            }
            match self.lowest_nonzero() {
                None if self.constant >= 0 => break r - self.constant as usize,
                None => {
                    let k = self.k(r);
                    *self.c(r) += k;
                    self.record(Rule::Wrap, || format!("add {k}b_{r} = b_{} - 1", r + 1));
                }
                Some(low) => {
                    let needed = (r - low) as i128;
                    if self.constant >= needed {
                        break r - self.constant as usize;
                    }
                    let deficit = needed - self.constant;
                    if low == 1 {
                        let take = deficit.min(*self.c(1));
                        *self.c(1) -= take;
                        self.constant += take;
                        self.record(Rule::Distance, || {
                            format!("{take} taken from the coefficient of b_1 into the distance term")
                        });
                    } else {
                        let below = low - 1;
                        let k = self.k(below);
                        *self.c(low) -= 1;
                        *self.c(below) += k;
                        self.constant += 1;
                        self.span_low = self.span_low.min(below);
                        self.record(Rule::Distance, || {
                            format!("one b_{low} borrowed as {k}b_{below} + 1")
                        });
                    }
                }
            }
        };

        let digits: Vec<u64> = (end..=r)
            .rev()
            .map(|level| {
                let c = self.coeffs[level - 1];
                assert!(
                    (0..self.k(level)).contains(&c),
                    "coefficient {c} of b_{level} left out of bounds"
                );
                c as u64
            })
            .collect();
        debug_assert!(self.coeffs[..end - 1].iter().all(|&c| c == 0));
        let tracing = self.trace.is_some();
        let mut rows = self.trace.take().unwrap_or_default();
        if tracing && end > self.span_low {
            rows.push(self.row(
                "=",
                end,
                Some(Rule::Distance),
                format!("zero coefficients below b_{end} retracted"),
            ));
        }
        let rep = Representation::new(&self.system, digits).expect("normalized digits are in range");
        debug_assert_eq!(rep.value(), self.expected);
        (rep, rows)
    }
}

/// Brings an expansion to canonical form. The result's value is
/// `raw_value(e) mod (b_{r+1} - 1)`.
pub fn normalize(e: &Expansion) -> Representation {
    Normalizer::new(e, lowest_span(e), false).run().0
}

/// [`normalize`] with the worked rows.
pub fn normalize_traced(e: &Expansion) -> (Representation, Trace) {
    let normalizer = Normalizer::new(e, lowest_span(e), true);
    let mut rows = vec![normalizer.row("e", normalizer.span_low, None, String::new())];
    let (rep, steps) = normalizer.run();
    rows.extend(steps);
    (rep, Trace { rows })
}

fn lowest_span(e: &Expansion) -> usize {
    e.coeffs
        .iter()
        .position(|&c| c != 0)
        .map_or(e.system.len(), |j| j + 1)
}

/// Puts `a` and `b` into a common system: the same one, or the larger of two
/// systems where one extends the other.
fn common_system(a: &FamilyNumeral, b: &FamilyNumeral) -> Result<PlaceValueSet> {
    let (sa, sb) = (a.system(), b.system());
    if sa == sb || sa.radix().extends(sb.radix()) {
        Ok(sa.clone())
    } else if sb.radix().extends(sa.radix()) {
        Ok(sb.clone())
    } else {
        Err(Error::invalid(format!(
            "cannot add numerals of {} and {}",
            sa.radix(),
            sb.radix()
        )))
    }
}

/// Digit-wise sum of two numerals, modulo `b_{r+1} - 1`.
pub fn add(a: &FamilyNumeral, b: &FamilyNumeral) -> Result<Representation> {
    let system = common_system(a, b)?;
    let (a, b) = (a.embed(&system)?, b.embed(&system)?);
    let sum = add_expansions(&to_expansion(&a), &to_expansion(&b))?;
    let low = a.end_level().min(b.end_level());
    Ok(Normalizer::new(&sum, low, false).run().0)
}

/// [`add`] together with the worked layout: both operands, the positionwise
/// sum and one row per rule application.
pub fn add_traced(a: &FamilyNumeral, b: &FamilyNumeral) -> Result<(Representation, Trace)> {
    let system = common_system(a, b)?;
    let (a, b) = (a.embed(&system)?, b.embed(&system)?);
    let (ea, eb) = (to_expansion(&a), to_expansion(&b));
    let sum = add_expansions(&ea, &eb)?;
    let low = a.end_level().min(b.end_level());

    let operand_row = |x: &FamilyNumeral, e: &Expansion| TraceRow {
        label: notation::format(x, Style::default_for(x)).unwrap_or_default(),
        cells: (1..=system.len())
            .rev()
            .map(|level| (level >= x.end_level() && level <= x.start_level()).then(|| e.coeff(level)))
            .collect(),
        constant: e.constant,
        rule: None,
        note: String::new(),
    };
    let mut rows = vec![operand_row(&a, &ea), operand_row(&b, &eb)];
    let normalizer = Normalizer::new(&sum, low, true);
    rows.push(normalizer.row("Sum", low, Some(Rule::Positionwise), String::new()));
    let (rep, steps) = normalizer.run();
    rows.extend(steps);
    Ok((rep, Trace { rows }))
}
