//! Curves `y² = ax⁴ + bx² + c` through the six squares `(t + i)²`, `i ∈ {−2, …, 3}`.
//!
//! The y-values at `(t−1)², t², (t+1)²` are `d, e, f`; those at `(t−2)², (t+2)², (t+3)²`
//! are `g, h, k`. Each of `g², h², k²` is a fixed linear combination of `d², e², f²`.

pub mod reference;

use std::sync::OnceLock;

use crate::cli::record::{CurveRecord, Provenance};
use crate::ellmodel::{
    quartic_to_weierstrass, sc_jacobian_with_point, Point, QuarticCurve, QuarticPoint, ScJacobian,
    TorsionOrder, WeierstrassIsomorphism,
};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polyalg::{
    determinant, rational_root_interpolation, BinaryQuadratic, BinaryQuartic, Field,
    MultiPolynomial, Polynomial, RationalFunction, Var,
};

pub const OFFSETS: [i64; 6] = [-2, -1, 0, 1, 2, 3];
/// Offsets of `d, e, f`.
pub const BASE_OFFSETS: [i64; 3] = [-1, 0, 1];
/// Offsets of `g, h, k`.
pub const G_OFFSET: i64 = -2;
pub const H_OFFSET: i64 = 2;
pub const K_OFFSET: i64 = 3;

pub const PARAMETRIZATION: &str =
    "chord through (1,1,1,1), direction (p,q,w,0), scaled into Q[t][p,q,w]";
pub const CONSTRUCTION: &str = "fixed-sequence jacobian walk";

/// `t` values at which two of the six squares coincide.
pub fn degenerate_values() -> Vec<Rational> {
    (-5..=3).map(|k| Rational::frac(k, 2)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SequenceSpec<F> {
    pub t: F,
}

impl SequenceSpec<Rational> {
    pub fn new(t: Rational) -> Result<Self> {
        let seq = SequenceSpec { t };
        let xs = seq.x_values();
        for i in 0..6 {
            for j in i + 1..6 {
                if xs[i] == xs[j] {
                    return Err(Error::DegenerateSequence(format!(
                        "(t{:+})^2 = (t{:+})^2 at t = {}",
                        OFFSETS[i], OFFSETS[j], seq.t
                    )));
                }
            }
        }
        Ok(seq)
    }
}

impl SequenceSpec<RationalFunction> {
    pub fn symbolic() -> Self {
        SequenceSpec {
            t: RationalFunction::t(),
        }
    }
}

impl<F: Field> SequenceSpec<F> {
    pub fn square_at(&self, offset: i64) -> F {
        self.t.add(&F::from_i64(offset)).square()
    }

    pub fn x_values(&self) -> [F; 6] {
        OFFSETS.map(|i| self.square_at(i))
    }
}

/// `a x⁴ + b x² + c` at `x = (t+i)²`, `i ∈ BASE_OFFSETS`, equals `d², e², f²`.
pub fn solve_abc<F: Field>(seq: &SequenceSpec<F>, d: &F, e: &F, f: &F) -> Result<(F, F, F)> {
    let z = BASE_OFFSETS.map(|i| seq.square_at(i).square());
    let rhs = [d.square(), e.square(), f.square()];
    let row = |zi: &F| vec![zi.square(), zi.clone(), F::one()];
    let matrix: Vec<Vec<F>> = z.iter().map(row).collect();
    let det = determinant(matrix.clone());
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let solve = |col: usize| {
        let mut m = matrix.clone();
        for (r, v) in m.iter_mut().zip(&rhs) {
            r[col] = v.clone();
        }
        determinant(m).div(&det)
    };
    Ok((solve(0)?, solve(1)?, solve(2)?))
}

/// `y² = λ₁d² + λ₂e² + λ₃f²` for the point at `(t + target)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareRelation<F> {
    pub target: i64,
    pub coeffs: [F; 3],
}

impl<F: Field> SquareRelation<F> {
    pub fn sum(&self) -> F {
        self.coeffs[0].add(&self.coeffs[1]).add(&self.coeffs[2])
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SquareRelation<G> {
        SquareRelation {
            target: self.target,
            coeffs: [f(&self.coeffs[0]), f(&self.coeffs[1]), f(&self.coeffs[2])],
        }
    }

    /// `λ₁d² + λ₂e² + λ₃f²` for forms `d, e, f`.
    pub fn apply(
        &self,
        d: &MultiPolynomial<F>,
        e: &MultiPolynomial<F>,
        f: &MultiPolynomial<F>,
    ) -> MultiPolynomial<F> {
        let [l1, l2, l3] = &self.coeffs;
        let t1 = (d * d).scale(l1);
        let t2 = (e * e).scale(l2);
        let t3 = (f * f).scale(l3);
        &(&t1 + &t2) + &t3
    }
}

/// Lagrange interpolation in `z = (t+i)⁴` through the three base offsets.
pub fn square_relation<F: Field>(seq: &SequenceSpec<F>, target: i64) -> Result<SquareRelation<F>> {
    let nodes = BASE_OFFSETS.map(|i| seq.square_at(i).square());
    let z = seq.square_at(target).square();
    let basis = |i: usize| -> Result<F> {
        let mut acc = F::one();
        for k in 0..3 {
            if k != i {
                let den = nodes[i].sub(&nodes[k]);
                if den.is_zero() {
                    return Err(Error::SingularSystem);
                }
                acc = acc.mul(&z.sub(&nodes[k]).div(&den)?);
            }
        }
        Ok(acc)
    };
    Ok(SquareRelation {
        target,
        coeffs: [basis(0)?, basis(1)?, basis(2)?],
    })
}

/// `d, e, f, g` as quadratic forms in `(p, q, w)` with `λ₁d² + λ₂e² + λ₃f² = g²`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricParametrization<F> {
    pub d: MultiPolynomial<F>,
    pub e: MultiPolynomial<F>,
    pub f: MultiPolynomial<F>,
    pub g: MultiPolynomial<F>,
}

impl<F: Field> QuadricParametrization<F> {
    pub fn scale(&self, c: &F) -> Self {
        QuadricParametrization {
            d: self.d.scale(c),
            e: self.e.scale(c),
            f: self.f.scale(c),
            g: self.g.scale(c),
        }
    }

    pub fn substitute(&self, v: Var, value: &MultiPolynomial<F>) -> Self {
        QuadricParametrization {
            d: self.d.substitute(v, value),
            e: self.e.substitute(v, value),
            f: self.f.substitute(v, value),
            g: self.g.substitute(v, value),
        }
    }

    pub fn eval(&self, point: &[F; 3]) -> [F; 4] {
        [&self.d, &self.e, &self.f, &self.g].map(|form| form.eval(point))
    }
}

/// Second intersection of the line through `(1,1,1,1)` with direction `(p,q,w,0)`.
pub fn quadric_parametrize<F: Field>(rel: &SquareRelation<F>) -> QuadricParametrization<F> {
    let [l1, l2, l3] = &rel.coeffs;
    let (p, q, w) = (
        MultiPolynomial::var(Var::P),
        MultiPolynomial::var(Var::Q),
        MultiPolynomial::var(Var::W),
    );
    let b0 = &(&p.scale(l1) + &q.scale(l2)) + &w.scale(l3);
    let n = &(&(&p * &p).scale(l1) + &(&q * &q).scale(l2)) + &(&w * &w).scale(l3);
    let two_b0 = b0.scale(&F::from_i64(2));
    QuadricParametrization {
        d: &n - &(&two_b0 * &p),
        e: &n - &(&two_b0 * &q),
        f: &n - &(&two_b0 * &w),
        g: n,
    }
}

/// `t(2t+1)(t²+1)(4t⁴+1)`, the common denominator of `λ₁, λ₂, λ₃`.
pub fn clearing_factor<F: Field>(t: &F) -> F {
    let k = F::from_i64;
    let t2 = t.square();
    t.mul(&k(2).mul(t).add(&k(1)))
        .mul(&t2.add(&k(1)))
        .mul(&k(4).mul(&t2.square()).add(&k(1)))
}

/// The three relations and the parametrization, shared by the later stages.
#[derive(Clone, Debug)]
pub struct Stages<F> {
    pub seq: SequenceSpec<F>,
    pub lambda: SquareRelation<F>,
    pub nu: SquareRelation<F>,
    pub kappa: SquareRelation<F>,
    /// The chord forms times `clearing_factor(t)`, so their coefficients are polynomial in `t`.
    pub forms: QuadricParametrization<F>,
}

pub fn stages<F: Field>(seq: &SequenceSpec<F>) -> Result<Stages<F>> {
    let lambda = square_relation(seq, G_OFFSET)?;
    let nu = square_relation(seq, H_OFFSET)?;
    let kappa = square_relation(seq, K_OFFSET)?;
    let forms = quadric_parametrize(&lambda).scale(&clearing_factor(&seq.t));
    Ok(Stages {
        seq: seq.clone(),
        lambda,
        nu,
        kappa,
        forms,
    })
}

impl<F: Field> Stages<F> {
    /// `h² = ν₁d² + ν₂e² + ν₃f²`, a quartic form in `(p, q, w)`.
    pub fn h_quartic(&self) -> MultiPolynomial<F> {
        self.nu.apply(&self.forms.d, &self.forms.e, &self.forms.f)
    }

    /// The parametrization with `q = ρw`.
    pub fn killed_forms(&self, rho: &F) -> QuadricParametrization<F> {
        self.forms
            .substitute(Var::Q, &MultiPolynomial::var(Var::W).scale(rho))
    }

    /// The h-quartic with `q = ρw`, as a binary quartic in `(p, w)`.
    pub fn killed_quartic(&self, rho: &F) -> BinaryQuartic<F> {
        let forms = self.killed_forms(rho);
        self.nu
            .apply(&forms.d, &forms.e, &forms.f)
            .to_binary_quartic(Var::P, Var::W)
            .expect("homogeneous of degree 4 in p, w")
    }

    /// `h(p, w)` with `h² = ` the killed quartic.
    pub fn extract_h(&self, rho: &F) -> Result<BinaryQuadratic<F>> {
        let quartic = self.killed_quartic(rho);
        let h = quartic
            .perfect_square_root()
            .ok_or(Error::NotAPerfectSquare)?;
        if h.square() != quartic {
            return Err(Error::NotAPerfectSquare);
        }
        Ok(h)
    }

    /// `k² = κ₁d² + κ₂e² + κ₃f²` with `q = ρw`, as a binary quartic in `(p, w)`.
    pub fn k_quartic(&self, rho: &F) -> BinaryQuartic<F> {
        let forms = self.killed_forms(rho);
        self.kappa
            .apply(&forms.d, &forms.e, &forms.f)
            .to_binary_quartic(Var::P, Var::W)
            .expect("homogeneous of degree 4 in p, w")
    }
}

/// Which route produced `ρ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KillSource {
    Reference,
    Derived,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QKill {
    pub rho: RationalFunction,
    pub source: KillSource,
}

/// `ρ(t)` such that `q = ρw` makes the h-quartic's discriminant vanish identically.
pub fn kill_discriminant() -> Result<QKill> {
    let st = stages(&SequenceSpec::symbolic())?;
    let reference = RationalFunction::parse(reference::RHO)?;
    if st.killed_quartic(&reference).invariants().disc.is_zero() {
        return Ok(QKill {
            rho: reference,
            source: KillSource::Reference,
        });
    }
    derive_rho(&st)
}

/// Roots in `q` of the discriminant of the h-quartic at `w = 1`.
pub fn derive_rho(st: &Stages<RationalFunction>) -> Result<QKill> {
    let disc = discriminant_in_q(&st.h_quartic());
    let roots = rational_root_interpolation(&disc, crate::polyalg::roots::INTERPOLATION_BOUND)
        .map_err(|_| Error::NoKillingSubstitution)?;
    let pick = roots
        .iter()
        .find(|rho| st.extract_h(rho).is_ok())
        .or(roots.first())
        .ok_or(Error::NoKillingSubstitution)?;
    Ok(QKill {
        rho: pick.clone(),
        source: KillSource::Derived,
    })
}

/// `disc_p` of a quartic form in `(p, q, w)` at `w = 1`, as a polynomial in `q`.
pub fn discriminant_in_q<F: Field>(form: &MultiPolynomial<F>) -> Polynomial<F> {
    // coefficient of p^(4-k) as a polynomial in q
    let coeff = |k: u32| -> Polynomial<F> {
        let part = form.coefficient_of(Var::P, 4 - k);
        let deg = part.degree_in(Var::Q).unwrap_or(0);
        Polynomial::new(
            (0..=deg)
                .map(|j| {
                    part.coefficient_of(Var::Q, j)
                        .eval(&[F::zero(), F::zero(), F::one()])
                })
                .collect(),
        )
    };
    let [a, b, c, d, e] = [0, 1, 2, 3, 4].map(coeff);
    let k = |n: i64| Polynomial::constant(F::from_i64(n));
    let i = &(&(&k(12) * &(&a * &e)) - &(&k(3) * &(&b * &d))) + &(&c * &c);
    let j = &(&(&(&k(72) * &(&a * &(&c * &e))) + &(&k(9) * &(&b * &(&c * &d))))
        - &(&k(27) * &(&a * &(&d * &d))))
        - &(&(&k(27) * &(&e * &(&b * &b))) + &(&k(2) * &(&c * &(&c * &c))));
    let four_i3 = &k(4) * &(&i * &(&i * &i));
    (&four_i3 - &(&j * &j)).scale(&F::from_i64(27).inv().expect("nonzero"))
}

static SYMBOLIC_KILL: OnceLock<std::result::Result<QKill, Error>> = OnceLock::new();

/// `kill_discriminant`, computed once per process.
pub fn symbolic_kill() -> Result<QKill> {
    SYMBOLIC_KILL.get_or_init(kill_discriminant).clone()
}

/// Six y-values in offset order `−2, …, 3` and the curve through them.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceWitness<F> {
    pub values: [F; 6],
    pub abc: (F, F, F),
}

impl<F: Field> SequenceWitness<F> {
    pub fn d(&self) -> &F {
        &self.values[1]
    }

    pub fn e(&self) -> &F {
        &self.values[2]
    }

    pub fn f(&self) -> &F {
        &self.values[3]
    }

    pub fn g(&self) -> &F {
        &self.values[0]
    }

    pub fn h(&self) -> &F {
        &self.values[4]
    }

    pub fn k(&self) -> &F {
        &self.values[5]
    }

    pub fn on_curve(&self, seq: &SequenceSpec<F>) -> bool {
        let (a, b, c) = &self.abc;
        seq.x_values().iter().zip(&self.values).all(|(x, y)| {
            let x2 = x.square();
            y.square() == a.mul(&x2).add(b).mul(&x2).add(c)
        })
    }
}

/// `(a, b, c)` equal up to a rational square factor.
pub fn same_up_to_square(
    x: &(Rational, Rational, Rational),
    y: &(Rational, Rational, Rational),
) -> bool {
    let (xs, ys) = ([&x.0, &x.1, &x.2], [&y.0, &y.1, &y.2]);
    let Some(i) = xs.iter().position(|v| !v.is_zero()) else {
        return ys.iter().all(|v| v.is_zero());
    };
    if ys[i].is_zero() {
        return false;
    }
    let s = ys[i] / xs[i];
    s.is_square().is_some() && (0..3).all(|k| *ys[k] == &s * xs[k])
}

/// Outcome of a walk along multiples of the Jacobian point.
#[derive(Clone, Debug)]
pub struct Walk {
    pub t: Rational,
    pub rho: Rational,
    pub jacobian: ScJacobian<Rational>,
    pub witnesses: Vec<(u64, SequenceWitness<Rational>)>,
    pub records: Vec<CurveRecord>,
    pub skipped: Vec<(u64, String)>,
    pub multiples_tried: u64,
}

/// Everything needed at `t₀` before walking.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub stages: Stages<Rational>,
    pub rho: Rational,
    pub h: BinaryQuadratic<Rational>,
    pub k_quartic: BinaryQuartic<Rational>,
    pub jacobian: ScJacobian<Rational>,
}

pub fn specialize(t0: &Rational) -> Result<Specialization> {
    let seq = SequenceSpec::new(t0.clone())?;
    let st = stages(&seq)?;
    let kill = symbolic_kill()?;
    let rho = kill
        .rho
        .eval(t0)
        .map_err(|_| Error::SingularSpecialization(format!("rho has a pole at t = {t0}")))?;
    let h = st.extract_h(&rho).map_err(|_| {
        Error::SingularSpecialization(format!("killed quartic is not a square at t = {t0}"))
    })?;
    let k_quartic = st.k_quartic(&rho);
    if k_quartic.invariants().disc.is_zero() {
        return Err(Error::SingularSpecialization(format!(
            "k-quartic is singular at t = {t0}"
        )));
    }
    let jacobian = sc_jacobian_with_point(&k_quartic)?;
    Ok(Specialization {
        stages: st,
        rho,
        h,
        k_quartic,
        jacobian,
    })
}

/// Walks `m·P` for `m = 1, 2, …` until `count` distinct verified curves are found.
pub fn jacobian_walk(t0: &Rational, count: usize) -> Result<Walk> {
    let sp = specialize(t0)?;
    let sc = &sp.jacobian;
    if let TorsionOrder::Finite(order) = sc.curve.torsion_order(&sc.point)? {
        return Err(Error::PointIsTorsion(order));
    }
    let branch = sp
        .k_quartic
        .a
        .sqrt()
        .ok_or(Error::LeadingCoefficientNotSquare)?;
    let curve = QuarticCurve::new(
        sp.k_quartic.clone(),
        Some(QuarticPoint::Infinity { branch }),
    )?;
    let (model, maps) = quartic_to_weierstrass(&curve)?;
    let iso = WeierstrassIsomorphism::between(&sc.curve, &model).ok_or(Error::NotIsomorphic)?;

    let seq = &sp.stages.seq;
    let cap = 5 * count as u64;
    let mut walk = Walk {
        t: t0.clone(),
        rho: sp.rho.clone(),
        jacobian: sc.clone(),
        witnesses: Vec::new(),
        records: Vec::new(),
        skipped: Vec::new(),
        multiples_tried: 0,
    };
    let mut multiple = Point::Infinity;
    for m in 1..=cap {
        if walk.records.len() == count {
            break;
        }
        walk.multiples_tried = m;
        multiple = sc.curve.add(&multiple, &sc.point);
        match witness_from_point(&sp, &maps, &iso.apply(&multiple)) {
            Err(reason) => walk.skipped.push((m, reason)),
            Ok(wit) => {
                if !wit.on_curve(seq) {
                    return Err(Error::IdentityFailed(format!(
                        "multiple {m}: witness not on its curve"
                    )));
                }
                if walk
                    .witnesses
                    .iter()
                    .any(|(_, o)| same_up_to_square(&o.abc, &wit.abc))
                {
                    walk.skipped.push((m, "repeats an earlier curve".into()));
                    continue;
                }
                walk.records.push(record_for(t0, m, &wit));
                walk.witnesses.push((m, wit));
            }
        }
    }
    if walk.records.len() < count {
        return Err(Error::ExhaustedMultiples {
            wanted: count,
            found: walk.records.len(),
            tried: walk.multiples_tried,
        });
    }
    Ok(walk)
}

fn witness_from_point(
    sp: &Specialization,
    maps: &crate::ellmodel::RationalMapPair<Rational>,
    pt: &Point<Rational>,
) -> std::result::Result<SequenceWitness<Rational>, String> {
    let (p, k) = match maps.backward_point(pt).map_err(|e| e.to_string())? {
        QuarticPoint::Infinity { .. } => return Err("w = 0".into()),
        QuarticPoint::Affine { x, y } => (x, y),
    };
    let one = Rational::one();
    let forms = sp.stages.killed_forms(&sp.rho);
    let [d, e, f, g] = forms.eval(&[p.clone(), Rational::zero(), one.clone()]);
    let h = sp.h.eval(&p, &one);
    let values = [g, d, e, f, h, k];
    if values.iter().any(|v| v.is_zero()) {
        return Err("a witness is zero".into());
    }
    let abc = solve_abc(&sp.stages.seq, &values[1], &values[2], &values[3])
        .map_err(|e| e.to_string())?;
    let quartic = BinaryQuartic::new(
        abc.0.clone(),
        Rational::zero(),
        abc.1.clone(),
        Rational::zero(),
        abc.2.clone(),
    );
    if abc.0.is_zero() || quartic.invariants().disc.is_zero() {
        return Err("singular curve".into());
    }
    Ok(SequenceWitness { values, abc })
}

fn record_for(t0: &Rational, m: u64, wit: &SequenceWitness<Rational>) -> CurveRecord {
    let seq = SequenceSpec { t: t0.clone() };
    let points: Vec<(Rational, Rational)> = seq
        .x_values()
        .into_iter()
        .zip(wit.values.iter().cloned())
        .collect();
    let offsets: Vec<Rational> = OFFSETS.iter().map(|&o| Rational::from_i64(o)).collect();
    CurveRecord::new(
        [&wit.abc.0, &wit.abc.1, &wit.abc.2],
        t0.to_string(),
        &offsets,
        &points,
        Provenance::new(CONSTRUCTION, Some(m), PARAMETRIZATION),
    )
}

#[cfg(test)]
mod tests;
