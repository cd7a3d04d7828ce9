//! Regeneration of the reference conversion tables.
//!
//! * Table 1: the uniform base-10 system with two levels, values 0 to 109.
//! * Table 2: `K = (2, 2, 2)`, with the ordinary binary number alongside for
//!   the values that have one of at most three digits.
//! * Table 3: 205,556 in uniform base-10 systems of 6 to 28 levels.

use num_bigint::BigUint;
use serde::Serialize;

use crate::codec::{encode, encode_u64, ConversionRecord, Representation};
use crate::notation::digit_text;
use crate::radix::PlaceValueSet;

/// The value regenerated in Table 3.
pub const TABLE3_VALUE: u64 = 205_556;
/// Levels of the critical system for [`TABLE3_VALUE`], and of the largest
/// system listed.
pub const TABLE3_LEVELS: std::ops::RangeInclusive<usize> = 6..=28;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub decimal: u64,
    pub distance_decimal: Representation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Row {
    pub decimal: u64,
    pub binary: Option<String>,
    pub distance_binary: Representation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table3Row {
    /// `B` for the critical system, `B_i` for the one with `i` extra levels.
    pub label: String,
    pub levels: usize,
    pub numeral: Representation,
}

pub fn table1() -> Vec<Table1Row> {
    let system = PlaceValueSet::uniform(10, 2).expect("valid system");
    (0..110)
        .map(|m| Table1Row {
            decimal: m,
            distance_decimal: encode_u64(m, &system).expect("in range"),
        })
        .collect()
}

pub fn table2() -> Vec<Table2Row> {
    let system = PlaceValueSet::uniform(2, 3).expect("valid system");
    (0..14)
        .map(|m| Table2Row {
            decimal: m,
            binary: (m < 8).then(|| format!("{m:b}")),
            distance_binary: encode_u64(m, &system).expect("in range"),
        })
        .collect()
}

pub fn table3() -> Vec<Table3Row> {
    let value = BigUint::from(TABLE3_VALUE);
    let first = *TABLE3_LEVELS.start();
    TABLE3_LEVELS
        .map(|r| {
            let system = PlaceValueSet::uniform(10, r).expect("valid system");
            Table3Row {
                label: match r - first {
                    0 => "B".to_string(),
                    i => format!("B_{i}"),
                },
                levels: r,
                numeral: encode(&value, &system).expect("in range"),
            }
        })
        .collect()
}

fn digits(rep: &Representation) -> String {
    digit_text(rep.digits(), rep.system())
}

#[derive(Serialize)]
struct Table2Json {
    #[serde(flatten)]
    record: ConversionRecord,
    binary: Option<String>,
}

#[derive(Serialize)]
struct Table3Json {
    label: String,
    #[serde(flatten)]
    record: ConversionRecord,
}

fn csv_text(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("writing to memory");
    for row in rows {
        writer.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
}

fn tab_text(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn json_text<T: Serialize>(rows: &[T]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("serializable rows");
    out.push('\n');
    out
}

/// Renders table `which` (1, 2 or 3); `None` for any other number.
pub fn render(which: u8, format: OutputFormat) -> Option<String> {
    let (header, rows): (&[&str], Vec<Vec<String>>) = match which {
        1 => {
            let rows = table1();
            if format == OutputFormat::Json {
                let records: Vec<_> = rows
                    .iter()
                    .map(|row| ConversionRecord::from(row.distance_decimal.numeral()))
                    .collect();
                return Some(json_text(&records));
            }
            (
                &["Decimal", "D.D"],
                rows.iter()
                    .map(|row| vec![row.decimal.to_string(), digits(&row.distance_decimal)])
                    .collect(),
            )
        }
        2 => {
            let rows = table2();
            if format == OutputFormat::Json {
                let records: Vec<_> = rows
                    .iter()
                    .map(|row| Table2Json {
                        record: ConversionRecord::from(row.distance_binary.numeral()),
                        binary: row.binary.clone(),
                    })
                    .collect();
                return Some(json_text(&records));
            }
            (
                &["Decimal", "Binary", "Distance Binary"],
                rows.iter()
                    .map(|row| {
                        vec![
                            row.decimal.to_string(),
                            row.binary.clone().unwrap_or_else(|| "-".to_string()),
                            digits(&row.distance_binary),
                        ]
                    })
                    .collect(),
            )
        }
        3 => {
            let rows = table3();
            if format == OutputFormat::Json {
                let records: Vec<_> = rows
                    .iter()
                    .map(|row| Table3Json {
                        label: row.label.clone(),
                        record: ConversionRecord::from(row.numeral.numeral()),
                    })
                    .collect();
                return Some(json_text(&records));
            }
            (
                &["B_i", "r", "R_B_i(205556)"],
                rows.iter()
                    .map(|row| {
                        vec![
                            row.label.clone(),
                            row.levels.to_string(),
                            digits(&row.numeral),
                        ]
                    })
                    .collect(),
            )
        }
        _ => return None,
    };
    Some(match format {
        OutputFormat::Csv => csv_text(header, rows.into_iter()),
        _ => tab_text(header, rows.into_iter()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes() {
        assert_eq!(table1().len(), 110);
        assert_eq!(table2().len(), 14);
        let t3 = table3();
        assert_eq!(t3.len(), 23);
        assert_eq!(t3[0].label, "B");
        assert_eq!(t3[22].label, "B_22");
        assert_eq!(t3[22].levels, 28);
    }

    #[test]
    fn rendering() {
        let text = render(2, OutputFormat::Text).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "Decimal\tBinary\tDistance Binary");
        assert_eq!(lines[6], "5\t101\t010");
        assert_eq!(lines[14], "13\t-\t111");
        let csv = render(3, OutputFormat::Csv).unwrap();
        assert_eq!(csv.lines().nth(1).unwrap(), "B,6,185");
        let json: serde_json::Value =
            serde_json::from_str(&render(1, OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(json[38]["digits"], serde_json::json!([3, 4]));
        assert_eq!(json[38]["value"], "38");
        let json: serde_json::Value =
            serde_json::from_str(&render(2, OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(json[8]["binary"], serde_json::Value::Null);
        assert_eq!(json[7]["binary"], "111");
        assert!(render(4, OutputFormat::Text).is_none());
    }

    #[test]
    fn rendering_is_stable() {
        for which in 1..=3 {
            for format in [OutputFormat::Text, OutputFormat::Csv, OutputFormat::Json] {
                assert_eq!(render(which, format), render(which, format));
            }
        }
    }
}
