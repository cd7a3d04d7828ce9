// Encoding naturals and evaluating numerals.

use std::error::Error;

use dsnum::{encode_u64, parse, PlaceValueSet, RadixSequence, Style};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let system = PlaceValueSet::new(RadixSequence::new(vec![4, 5, 2, 6])?);
    for m in [265, 70, 101, 113] {
        let rep = encode_u64(m, &system)?;
        println!("{m} -> {}", rep.format(Style::Parenthesized)?);
    }
    for text in ["(1,0,3)_B", "(2,0,1)_B", "(4)_2"] {
        println!("{text} -> {}", parse(text, &system)?.value());
    }

    // leading zeros matter: each one adds a level of distance
    let decimal = PlaceValueSet::uniform(10, 3)?;
    for text in ["12", "012", "12_2"] {
        println!("{text} -> {}", parse(text, &decimal)?.value());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
