//! Canonical heights and the numeric independence certificate.
//!
//! Pass `--mestre` to certify the six points of the half-offset construction at `t = 3/4`.

use quartic_squares::ellmodel::{
    canonical_height, independence_certificate, Point, WeierstrassModel,
};
use quartic_squares::mestre6::independence_at;
use quartic_squares::Rational;

fn main() -> quartic_squares::Result<()> {
    let r = Rational::from_i64;
    let curve = WeierstrassModel::new(r(0), r(0), r(17));
    let p = Point::new(r(-2), r(3));
    let q = Point::new(r(-1), r(4));
    for pt in [&p, &q] {
        println!("h({pt:?}) = {:.6}", canonical_height(&curve, pt)?);
        println!("  order: {:?}", curve.torsion_order(pt)?);
    }
    let cert = independence_certificate(&curve, &[p.clone(), q])?;
    println!("det = {:.6}, verdict {:?}", cert.determinant, cert.verdict);
    let cert = independence_certificate(&curve, &[p.clone(), curve.double(&p)])?;
    println!(
        "with P and 2P: relation {:?}, verdict {:?}",
        cert.relation, cert.verdict
    );

    if std::env::args().any(|a| a == "--mestre") {
        let report = independence_at(&Rational::frac(3, 4))?;
        let c = &report.certificate;
        println!("t = 3/4: heights {:?}", c.heights);
        println!("det = {:.6e}, verdict {:?}", c.determinant, c.verdict);
    }
    Ok(())
}
