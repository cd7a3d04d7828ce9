// The rooted symmetric tree: preorder rank and DOT export.

use std::error::Error;

use dsnum::tree;
use dsnum::RadixSequence;
use num_bigint::BigUint;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k = RadixSequence::new(vec![2, 2, 2])?;
    for vertex in tree::enumerate(&k)?.iter().take(5) {
        println!("{} at rank {}", vertex.label(&k), tree::rank(vertex, &k)?);
    }
    println!("rank 13 is {}", tree::unrank(&BigUint::from(13u32), &k)?.label(&k));
    print!("{}", tree::export_dot(&RadixSequence::new(vec![2, 2])?)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
