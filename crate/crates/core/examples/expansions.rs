// Normalizing a hand-built expansion `sum c_q b_q + c`.

use std::error::Error;

use dsnum::{normalize_traced, Expansion, PlaceValueSet, Style};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let system = PlaceValueSet::uniform(10, 3)?;
    // 12 b_1 - 3 b_2 + 4 b_3 + 5
    let e = Expansion::new(&system, &[12, -3, 4], 5)?;
    let (rep, trace) = normalize_traced(&e);
    print!("{trace}");
    println!(
        "{} = {} (mod {})",
        rep.format(Style::Bare)?,
        e.reduced_value(),
        system.capacity()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
