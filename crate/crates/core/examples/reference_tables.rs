// The three reference tables, as TSV, CSV and JSON.

use std::error::Error;

use dsnum::tables::{render, OutputFormat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table1 = render(1, OutputFormat::Text).ok_or("no table 1")?;
    for line in table1.lines().take(12) {
        println!("{line}");
    }
    print!("{}", render(2, OutputFormat::Csv).ok_or("no table 2")?);
    let table3 = render(3, OutputFormat::Json).ok_or("no table 3")?;
    let rows: serde_json::Value = serde_json::from_str(&table3)?;
    println!("{}", rows[0]);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
