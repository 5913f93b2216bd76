//! A quartic `y² = f(x)` with a rational point, mapped to Weierstrass form.

use quartic_squares::ellmodel::{
    quartic_to_weierstrass, two_torsion_normalize, QuarticCurve, QuarticPoint,
};
use quartic_squares::polyalg::BinaryQuartic;
use quartic_squares::Rational;

fn main() -> quartic_squares::Result<()> {
    let r = Rational::from_i64;
    // y² = x⁴ − 2x³ + 3x² + 5x + 9 through (0, 3)
    let quartic = BinaryQuartic::new(r(1), r(-2), r(3), r(5), r(9));
    let curve = QuarticCurve::new(quartic, Some(QuarticPoint::Affine { x: r(0), y: r(3) }))?;
    let (model, maps) = quartic_to_weierstrass(&curve)?;
    println!(
        "y^2 = x^3 + ({})x^2 + ({})x + ({})",
        model.a2, model.a4, model.a6
    );
    println!("j = {}", model.j_invariant()?);

    let checks = maps.verify()?;
    println!(
        "pullback {}, roundtrip {}, marked point to infinity {}",
        checks.pullback, checks.roundtrip, checks.marked_to_infinity
    );

    for x in -3..=3 {
        let fx = curve.polynomial().eval(&r(x));
        if let Some(y) = fx.is_square() {
            let image = maps.forward_point(&QuarticPoint::Affine {
                x: r(x),
                y: y.clone(),
            })?;
            println!("({x}, {y}) -> {image:?}");
        }
    }

    match two_torsion_normalize(&model) {
        Ok(tt) => println!(
            "two-torsion model: alpha = {}, beta = {}",
            tt.alpha(),
            tt.beta()
        ),
        Err(e) => println!("no two-torsion model: {e}"),
    }
    Ok(())
}
