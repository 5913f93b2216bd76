//! Curves through `(t + i)²`, `i = −2, …, 3`, from multiples of a point on the Jacobian.
//!
//! Run with `cargo run --release --example fixed_sequence_walk [t] [count]`.

use quartic_squares::fixedseq6::{jacobian_walk, specialize};
use quartic_squares::Rational;

fn main() -> quartic_squares::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: Rational = args.next().as_deref().unwrap_or("3").parse()?;
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let sp = specialize(&t)?;
    println!("q = {} w kills the discriminant", sp.rho);
    println!("h = ({}) p^2 + ({}) p w + ({}) w^2", sp.h.a, sp.h.b, sp.h.c);
    let sc = &sp.jacobian;
    println!(
        "Jacobian: y^2 = x^3 + ({})x + ({})",
        sc.curve.a4, sc.curve.a6
    );
    println!("point: {:?}", sc.point);

    let walk = jacobian_walk(&t, count)?;
    for (m, wit) in &walk.witnesses {
        let (a, b, c) = &wit.abc;
        println!("\nm = {m}: y^2 = ({a})x^4 + ({b})x^2 + ({c})");
        for (x, y) in walk.records[0]
            .points
            .iter()
            .map(|p| &p[0])
            .zip(&wit.values)
        {
            println!("  x = {x}, y = {y}");
        }
    }
    println!("\nskipped multiples: {:?}", walk.skipped);
    Ok(())
}
