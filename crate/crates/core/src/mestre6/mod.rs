//! Curves `y² = R(x)` through six squares `(t + i)²`, `i ∈ {±1/2, ±3/2, ±5/2}`.

pub mod reference;

use crate::ellmodel::EvenQuartic;
use crate::ellmodel::{
    independence_certificate, isomorphism_scaling, quartic_to_weierstrass, IndependenceCertificate,
    MapChecks, Point, QuarticCurve, QuarticPoint, TwoTorsionModel, WeierstrassModel,
};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polyalg::{BinaryQuartic, Field, Polynomial, RationalFunction};

/// Numerators of the offsets, over 2.
pub const OFFSETS: [i64; 6] = [-5, -3, -1, 1, 3, 5];

/// `t` values at which two of the six squares coincide.
pub fn degenerate_values() -> Vec<Rational> {
    [0, 1, -1, 2, -2, 3, -3, 4, -4]
        .iter()
        .map(|&k| Rational::frac(k, 2))
        .collect()
}

/// The six squares `(t + i)²` for half-integer offsets.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfOffsetSequence<F> {
    pub t: F,
}

impl HalfOffsetSequence<Rational> {
    pub fn new(t: Rational) -> Result<Self> {
        let seq = HalfOffsetSequence { t };
        let xs = seq.x_values();
        for i in 0..6 {
            for j in i + 1..6 {
                if xs[i] == xs[j] {
                    return Err(Error::DegenerateSequence(format!(
                        "(t{:+}/2)^2 = (t{:+}/2)^2 at t = {}",
                        OFFSETS[i], OFFSETS[j], seq.t
                    )));
                }
            }
        }
        Ok(seq)
    }
}

impl HalfOffsetSequence<RationalFunction> {
    pub fn symbolic() -> Self {
        HalfOffsetSequence {
            t: RationalFunction::t(),
        }
    }

    pub fn specialize(&self, t0: &Rational) -> Result<HalfOffsetSequence<Rational>> {
        HalfOffsetSequence::new(self.t.eval(t0)?)
    }
}

impl<F: Field> HalfOffsetSequence<F> {
    pub fn offsets() -> [F; 6] {
        OFFSETS.map(|k| F::from_rational(&Rational::frac(k, 2)))
    }

    pub fn x_values(&self) -> [F; 6] {
        Self::offsets().map(|i| self.t.add(&i).square())
    }

    /// `(t − 1/2)²`, the point moved to the origin before the Weierstrass map.
    pub fn base_x(&self) -> F {
        self.t
            .sub(&F::from_rational(&Rational::frac(1, 2)))
            .square()
    }
}

/// `P(x) = ∏ (x² − (t + i)⁴)`.
pub fn build_p<F: Field>(seq: &HalfOffsetSequence<F>) -> Polynomial<F> {
    seq.x_values()
        .iter()
        .map(|x| Polynomial::new(vec![x.square().neg(), F::zero(), F::one()]))
        .fold(Polynomial::one(), |acc, f| &acc * &f)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MestreDecomposition<F> {
    pub p: Polynomial<F>,
    pub q: Polynomial<F>,
    pub r: Polynomial<F>,
}

impl<F: Field> MestreDecomposition<F> {
    /// `P = Q² − R`, all even, `deg Q = 6`, `deg R ≤ 4`.
    pub fn identity_holds(&self) -> bool {
        let lhs = &(&self.q * &self.q) - &self.r;
        lhs == self.p
            && self.p.is_even()
            && self.q.is_even()
            && self.r.is_even()
            && self.q.degree() == Some(6)
            && self.r.degree().map_or(true, |d| d <= 4)
    }
}

pub fn decompose<F: Field>(p: &Polynomial<F>) -> Result<MestreDecomposition<F>> {
    let (q, r) = p.mestre_sqrt()?;
    let dec = MestreDecomposition { p: p.clone(), q, r };
    if !dec.identity_holds() {
        return Err(Error::IdentityFailed("P = Q^2 - R".into()));
    }
    Ok(dec)
}

/// `y² = R(x)` with the six points `((t + i)², Q((t + i)²))`.
#[derive(Clone, Debug, PartialEq)]
pub struct MestreCurve<F> {
    pub decomposition: MestreDecomposition<F>,
    pub curve: EvenQuartic<F>,
    pub points: [(F, F); 6],
}

pub fn curve_and_points<F: Field>(seq: &HalfOffsetSequence<F>) -> Result<MestreCurve<F>> {
    let dec = decompose(&build_p(seq))?;
    let curve = EvenQuartic::new(dec.r.coeff(4), dec.r.coeff(2), dec.r.coeff(0));
    if curve.is_degenerate() {
        return Err(Error::SingularSpecialization(
            "R(x) is not a nonsingular quartic at this t".into(),
        ));
    }
    let points = seq.x_values().map(|x| {
        let y = dec.q.eval(&x);
        (x, y)
    });
    Ok(MestreCurve {
        decomposition: dec,
        curve,
        points,
    })
}

/// Agreement reached between two two-torsion models.
#[derive(Clone, Debug, PartialEq)]
pub enum MatchLayer<F> {
    Exact,
    /// `(α, β) ↦ (sα, s²β)` with `s` a square.
    Scaling(F),
    JOnly,
    None,
}

impl<F> MatchLayer<F> {
    pub fn name(&self) -> &'static str {
        match self {
            MatchLayer::Exact => "exact",
            MatchLayer::Scaling(_) => "scaling",
            MatchLayer::JOnly => "j-only",
            MatchLayer::None => "none",
        }
    }
}

/// Best agreement between `ours` and `theirs`, both of shape `y² = x(x² + αx + β)`.
pub fn compare_models<F: Field>(
    ours: &WeierstrassModel<F>,
    theirs: &WeierstrassModel<F>,
) -> Result<MatchLayer<F>> {
    if ours == theirs {
        return Ok(MatchLayer::Exact);
    }
    if let Some(s) = isomorphism_scaling(ours, theirs) {
        return Ok(MatchLayer::Scaling(s));
    }
    if ours.j_invariant()? == theirs.j_invariant()? {
        return Ok(MatchLayer::JOnly);
    }
    Ok(MatchLayer::None)
}

/// The shifted quartic, its Weierstrass and two-torsion models, and the six images.
#[derive(Clone, Debug)]
pub struct EstarModel<F> {
    pub mestre: MestreCurve<F>,
    /// `y² = R(x + (t − 1/2)²)`, marked at `(0, −Q((t − 1/2)²))`.
    pub shifted: QuarticCurve<F>,
    pub weierstrass: WeierstrassModel<F>,
    pub two_torsion: TwoTorsionModel<F>,
    /// Images of the six points on the two-torsion model.
    pub points: Vec<Point<F>>,
    maps: crate::ellmodel::RationalMapPair<F>,
}

impl<F: Field> EstarModel<F> {
    /// Symbolic pullback and roundtrip checks of the underlying map.
    pub fn verify_maps(&self) -> Result<MapChecks> {
        self.maps.verify()
    }
}

pub fn estar_model<F: Field>(seq: &HalfOffsetSequence<F>) -> Result<EstarModel<F>> {
    let mestre = curve_and_points(seq)?;
    let x0 = seq.base_x();
    let shifted_poly = mestre
        .decomposition
        .r
        .compose(&Polynomial::new(vec![x0.clone(), F::one()]));
    let e = mestre.decomposition.q.eval(&x0);
    let c = |k| shifted_poly.coeff(k);
    let quartic = BinaryQuartic::new(c(4), c(3), c(2), c(1), c(0));
    debug_assert!(c(0) == e.square());
    let shifted = QuarticCurve::new(
        quartic,
        Some(QuarticPoint::Affine {
            x: F::zero(),
            y: e.neg(),
        }),
    )
    .map_err(|_| Error::SingularSpecialization("shifted quartic is singular".into()))?;
    let (weierstrass, maps) = quartic_to_weierstrass(&shifted)?;
    let two_torsion = crate::ellmodel::two_torsion_normalize(&weierstrass)?;
    let points = mestre
        .points
        .iter()
        .map(|(x, y)| {
            let image = maps.forward_point(&QuarticPoint::Affine {
                x: x.sub(&x0),
                y: y.clone(),
            })?;
            Ok(two_torsion.transport(&image))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EstarModel {
        mestre,
        shifted,
        weierstrass,
        two_torsion,
        points,
        maps,
    })
}

/// The reference `(α, β)` model over ℚ(t).
pub fn reference_model() -> Result<WeierstrassModel<RationalFunction>> {
    Ok(WeierstrassModel::two_torsion_form(
        RationalFunction::parse(reference::ALPHA)?,
        RationalFunction::parse(reference::BETA)?,
    ))
}

/// Numeric independence of the six images at `t₀`.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub model: WeierstrassModel<Rational>,
    pub points: Vec<Point<Rational>>,
    pub certificate: IndependenceCertificate,
}

pub fn independence_at(t0: &Rational) -> Result<IndependenceReport> {
    let seq = HalfOffsetSequence::new(t0.clone())?;
    let estar = estar_model(&seq)?;
    let points = estar.points.clone();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(Error::DegenerateSequence(format!(
                    "images {i} and {j} coincide"
                )));
            }
        }
    }
    let certificate = independence_certificate(&estar.two_torsion.model, &points)?;
    Ok(IndependenceReport {
        model: estar.two_torsion.model,
        points,
        certificate,
    })
}

#[cfg(test)]
mod tests;
