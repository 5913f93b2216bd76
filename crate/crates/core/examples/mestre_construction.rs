//! Six consecutive squares on one curve: `P = Q² − R` over ℚ(t), then at `t = 3/4`.
//!
//! Run with `cargo run --release --example mestre_construction [t]`.

use quartic_squares::mestre6::{curve_and_points, HalfOffsetSequence};
use quartic_squares::Rational;

fn main() -> quartic_squares::Result<()> {
    let symbolic = curve_and_points(&HalfOffsetSequence::symbolic())?;
    let d = &symbolic.decomposition;
    println!("over Q(t): P = Q^2 - R holds: {}", d.identity_holds());
    println!("Q(x) = {}", d.q.display_in("x"));
    println!("R(x) = {}", d.r.display_in("x"));

    let t: Rational = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("3/4")
        .parse()?;
    let seq = HalfOffsetSequence::new(t.clone())?;
    let m = curve_and_points(&seq)?;
    let c = &m.curve;
    println!(
        "\nat t = {t}: y^2 = ({})x^4 + ({})x^2 + ({})",
        c.a, c.b, c.c
    );
    for (x, y) in &m.points {
        println!("  ({x}, {y})  on curve: {}", c.contains(x, y));
    }
    Ok(())
}
