//! Text forms of numerals.
//!
//! ```text
//! numeral := digits ('_' level)? | '(' digit (',' digit)* ')' ('_' ident)?
//! digits  := [0-9]+ | digit ('.' digit)+
//! ```
//!
//! When every radix of the system is at most 10, each character of a bare
//! digit run is one digit (`103`). Otherwise digits are decimal values
//! separated by dots (`12.0.3`) and an undotted run is a single digit. A
//! missing level means the top level `r`. After a parenthesized list the
//! suffix is either a level number or a label such as `B`, which also means
//! the top level.

use crate::codec::FamilyNumeral;
use crate::error::{Error, Result};
use crate::radix::PlaceValueSet;

/// Output style for [`format`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    /// `103`; only for numerals that start at the top level.
    Bare,
    /// `25_5`; always carries the start level.
    Subscripted,
    /// `(1,0,3)_B`, or `(2,5)_4` below the top level.
    Parenthesized,
}

impl Style {
    /// Parenthesized for mixed-radix systems; otherwise bare at the top level
    /// and subscripted below it.
    pub fn default_for(x: &FamilyNumeral) -> Style {
        if x.system().radix().uniform_radix().is_none() {
            Style::Parenthesized
        } else if x.is_canonical() {
            Style::Bare
        } else {
            Style::Subscripted
        }
    }
}

/// Text of the digits alone: contiguous for single-character systems,
/// dot-separated otherwise.
pub fn digit_text(digits: &[u64], system: &PlaceValueSet) -> String {
    if system.radix().single_char_digits() {
        digits
            .iter()
            .map(|&d| char::from_digit(d as u32, 10).expect("digit below 10"))
            .collect()
    } else {
        join(digits, ".")
    }
}

fn join(digits: &[u64], sep: &str) -> String {
    digits
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn format(x: &FamilyNumeral, style: Style) -> Result<String> {
    let system = x.system();
    match style {
        Style::Bare => {
            if !x.is_canonical() {
                return Err(Error::invalid(format!(
                    "bare form needs the top level {}, numeral starts at {}",
                    system.len(),
                    x.start_level()
                )));
            }
            Ok(digit_text(x.digits(), system))
        }
        Style::Subscripted => Ok(format!(
            "{}_{}",
            digit_text(x.digits(), system),
            x.start_level()
        )),
        Style::Parenthesized => {
            let body = join(x.digits(), ",");
            if x.is_canonical() {
                Ok(format!("({body})_B"))
            } else {
                Ok(format!("({body})_{}", x.start_level()))
            }
        }
    }
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
    // offset of `text` inside the caller's string
    base: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(
                self.at(),
                format!("unexpected character '{}', expected {expected}", char::from(c)),
            ),
            None => Error::parse(self.at(), format!("unexpected end of input, expected {expected}")),
        }
    }

    /// A run of ASCII digits, returned with its starting position.
    fn number(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected(what));
        }
        let run = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        Ok((self.base + start, run))
    }
}

fn parse_value(pos: usize, run: &str) -> Result<u64> {
    run.parse::<u64>()
        .map_err(|_| Error::parse(pos, format!("digit value {run} is too large")))
}

/// Parses numeral text in `system`. Error positions are byte offsets into
/// `text`.
pub fn parse(text: &str, system: &PlaceValueSet) -> Result<FamilyNumeral> {
    let trimmed = text.trim_start();
    let base = text.len() - trimmed.len();
    let trimmed = trimmed.trim_end();
    if trimmed.is_empty() {
        return Err(Error::parse(0, "empty numeral"));
    }
    let mut cur = Cursor {
        text: trimmed.as_bytes(),
        pos: 0,
        base,
    };
    let single_char = system.radix().single_char_digits();

    // (position, digit) pairs
    let mut digits: Vec<(usize, u64)> = Vec::new();
    let mut level: Option<(usize, usize)> = None;

    if cur.eat(b'(') {
        loop {
            let (pos, run) = cur.number("a digit")?;
            digits.push((pos, parse_value(pos, run)?));
            if !cur.eat(b',') {
                break;
            }
        }
        if !cur.eat(b')') {
            return Err(cur.unexpected("',' or ')'"));
        }
        // `(185)_B` in a single-character system lists the digits 1, 8, 5.
        if single_char && digits.len() == 1 {
            let (pos, _) = digits[0];
            let run = &trimmed[pos - base..cur.at() - base - 1];
            if run.len() > 1 {
                digits = run
                    .bytes()
                    .enumerate()
                    .map(|(i, c)| (pos + i, u64::from(c - b'0')))
                    .collect();
            }
        }
        if cur.eat(b'_') {
            let start = cur.pos;
            while cur
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || matches!(c, b'_' | b'{' | b'}'))
            {
                cur.pos += 1;
            }
            let ident = &trimmed[start..cur.pos];
            if ident.is_empty() {
                return Err(cur.unexpected("a level or a label"));
            }
            if ident.bytes().all(|c| c.is_ascii_digit()) {
                level = Some((cur.base + start, parse_level(cur.base + start, ident)?));
            }
        }
    } else {
        let (pos, run) = cur.number("a digit")?;
        if cur.peek() == Some(b'.') {
            digits.push((pos, parse_value(pos, run)?));
            while cur.eat(b'.') {
                let (pos, run) = cur.number("a digit after '.'")?;
                digits.push((pos, parse_value(pos, run)?));
            }
        } else if single_char {
            digits = run
                .bytes()
                .enumerate()
                .map(|(i, c)| (pos + i, u64::from(c - b'0')))
                .collect();
        } else {
            digits.push((pos, parse_value(pos, run)?));
        }
        if cur.eat(b'_') {
            let (pos, run) = cur.number("a level")?;
            level = Some((pos, parse_level(pos, run)?));
        }
    }
    if cur.peek().is_some() {
        return Err(cur.unexpected("end of numeral"));
    }

    let r = system.len();
    let (level_pos, start_level) = level.unwrap_or((base, r));
    if start_level == 0 || start_level > r {
        return Err(Error::parse(
            level_pos,
            format!("level {start_level} outside 1..={r}"),
        ));
    }
    if digits.len() > start_level {
        return Err(Error::parse(
            digits[start_level].0,
            format!("{} digits do not fit below level {start_level}", digits.len()),
        ));
    }
    for (t, &(pos, d)) in digits.iter().enumerate() {
        let lvl = start_level - t;
        let k = system.k(lvl);
        if d >= k {
            return Err(Error::parse(
                pos,
                format!("digit {d} at level {lvl} must be below k_{lvl} = {k}"),
            ));
        }
    }
    FamilyNumeral::new(system, digits.into_iter().map(|(_, d)| d).collect(), start_level)
}

fn parse_level(pos: usize, run: &str) -> Result<usize> {
    run.parse::<usize>()
        .map_err(|_| Error::parse(pos, format!("level {run} is too large")))
}
