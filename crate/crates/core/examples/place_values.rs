// Place values and capacity of a mixed-radix system.

use std::error::Error;

use dsnum::{PlaceValueSet, RadixSequence};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let system = PlaceValueSet::new(RadixSequence::new(vec![4, 5, 2, 6])?);
    for (q, b) in system.values().iter().enumerate() {
        println!("b_{} = {b}", q + 1);
    }
    println!("b_{} = {}", system.len() + 1, system.b_top());
    println!("values 0..={}", system.max_value());
    // b_4 = k_3 k_2 b_2 + k_3 + 1
    println!("b_4 from level 2: {}", system.decompose(4, 2)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
