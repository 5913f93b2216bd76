//! Writing, reading and re-verifying JSON curve records.

use quartic_squares::cli::commands::mestre_record;
use quartic_squares::cli::{records_from_json, records_to_json, MestreInput};

fn main() -> quartic_squares::Result<()> {
    let record = mestre_record(&MestreInput::At("5/3".into()))?;
    let json = records_to_json(std::slice::from_ref(&record));
    println!("{json}");
    let parsed = records_from_json(&json)?;
    println!("round trip identical: {}", parsed == [record.clone()]);
    println!("problems: {:?}", parsed[0].check()?);

    let mut corrupted = record;
    corrupted.points[0][1].push('1');
    println!("after corrupting a y-value: {:?}", corrupted.check()?);
    Ok(())
}
