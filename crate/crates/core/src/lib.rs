//! Distance-sensitive place-value numeral systems.
//!
//! A radix sequence `K = (k_1, ..., k_r)` generates place values
//! `b_1 = 1, b_{q} = 1 + k_{q-1} b_{q-1}`. A numeral `i_r i_{r-1} ... i_{r-q}`
//! is worth `i_r b_r + ... + i_{r-q} b_{r-q} + q`, so its length counts and a
//! leading zero is a digit like any other. The numerals of a system are the
//! vertices of its rooted symmetric tree, and their values are the preorder
//! ranks `0 ..= b_{r+1} - 2`.
//!
//! ```
//! use dsnum::{encode_u64, parse, add, PlaceValueSet, RadixSequence};
//!
//! let system = PlaceValueSet::new(RadixSequence::new(vec![4, 5, 2, 6])?);
//! assert_eq!(system.b_top().to_string(), "319");
//! assert_eq!(encode_u64(70, &system)?.digits(), &[1, 0, 3]);
//!
//! let decimal = PlaceValueSet::uniform(10, 3)?;
//! let sum = add(&parse("32_3", &decimal)?, &parse("11_2", &decimal)?)?;
//! assert_eq!(sum.to_string(), "331");
//! # Ok::<(), dsnum::Error>(())
//! ```

pub mod arithmetic;
pub mod cli;
pub mod codec;
pub mod error;
pub mod notation;
pub mod radix;
pub mod selftest;
pub mod tables;
pub mod tree;

pub use arithmetic::{
    add, add_expansions, add_traced, normalize, normalize_traced, to_expansion, Expansion, Rule,
    Trace,
};
pub use codec::{
    critical_system, encode, encode_i128, encode_u64, extend_and_encode, value_of,
    ConversionRecord, FamilyNumeral, Representation,
};
pub use error::{Error, Result};
pub use notation::{format, parse, Style};
pub use radix::{place_values, PlaceValueSet, RadixSequence};
pub use tree::TreeVertex;
