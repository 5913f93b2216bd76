//! Elliptic curves in quartic and Weierstrass form.

mod curves;
mod funcfield;
mod group;
mod height;
mod jacobian;
mod transform;

pub use curves::{EvenQuartic, Point, QuarticCurve, QuarticPoint, WeierstrassModel};
pub use funcfield::{CurveFunction, FunctionField};
pub use group::{TorsionOrder, MAZUR_ORDERS};
pub use height::{
    canonical_height, canonical_height_with, independence_certificate,
    independence_certificate_with, HeightConfig, IndependenceCertificate, Verdict,
};
pub use jacobian::{sc_jacobian_with_point, ScJacobian, WeierstrassIsomorphism};
pub use transform::{
    isomorphism_scaling, quartic_to_weierstrass, two_torsion_normalize, MapChecks, RationalMapPair,
    TwoTorsionModel,
};
