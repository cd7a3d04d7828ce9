// The smallest uniform system holding a value, and larger ones.

use std::error::Error;

use dsnum::{critical_system, extend_and_encode, Style};
use num_bigint::BigUint;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = BigUint::from(205_556u32);
    let critical = critical_system(&m, 10)?;
    println!("{m} needs {} levels of base 10", critical.len());
    for r in [critical.len(), critical.len() + 1, 12] {
        let rep = extend_and_encode(&m, 10, r)?;
        println!("r = {r:>2}: {}", rep.format(Style::Bare)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
