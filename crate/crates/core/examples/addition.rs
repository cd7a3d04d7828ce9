// Digit-wise addition with the worked layout.

use std::error::Error;

use dsnum::{add, add_traced, parse, PlaceValueSet, Style};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let system = PlaceValueSet::uniform(10, 4)?;
    let a = parse("3_4", &system)?;
    let b = parse("26_3", &system)?;
    let (sum, trace) = add_traced(&a, &b)?;
    print!("{trace}");
    println!("{} + {} = {}", a.value(), b.value(), sum.value());

    // sums wrap at b_{r+1} - 1
    let small = PlaceValueSet::uniform(10, 2)?;
    let (x, y) = (parse("5", &small)?, parse("7", &small)?);
    let wrapped = add(&x, &y)?;
    println!(
        "{} + {} = {} = {}",
        x.format(Style::Bare)?,
        y.format(Style::Bare)?,
        wrapped.format(Style::Bare)?,
        wrapped.value()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
