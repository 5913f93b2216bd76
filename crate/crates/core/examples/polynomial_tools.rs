//! Exact polynomial algebra: partial square roots, quartic invariants, roots over ℚ(t).

use quartic_squares::polyalg::{
    rational_root_interpolation, BinaryQuartic, Field, Polynomial, RationalFunction,
};
use quartic_squares::Rational;

fn main() -> quartic_squares::Result<()> {
    let p = Polynomial::<Rational>::from_ints_desc(&[1, 0, -14, 0, 49, 0, -36]);
    let (q, r) = p.mestre_sqrt()?;
    println!("P = {}", p.display_in("x"));
    println!("Q = {}, R = {}", q.display_in("x"), r.display_in("x"));

    let quartic = BinaryQuartic::new(
        Rational::from_i64(1),
        Rational::zero(),
        Rational::from_i64(-3),
        Rational::zero(),
        Rational::from_i64(2),
    );
    let inv = quartic.invariants();
    println!("I = {}, J = {}, disc = {}", inv.i, inv.j, inv.disc);
    println!(
        "disc by resultant = {}",
        quartic.discriminant_by_resultant()
    );

    // (X − t²)(X + 1/t) over ℚ(t)
    let t = RationalFunction::t();
    let f = Polynomial::new(vec![t.square().neg(), RationalFunction::one()]);
    let g = Polynomial::new(vec![t.inv()?, RationalFunction::one()]);
    let roots = rational_root_interpolation(&(&f * &g), 8)?;
    for root in roots {
        println!("root: {root}");
    }
    Ok(())
}
