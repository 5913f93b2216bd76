//! The four commands behind the binary. Each returns an [`Outcome`] whose code is the
//! process exit status.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use super::ledger::{CheckLedger, Comparison};
use super::record::{
    records_from_json, records_to_json, write_atomically, CurveRecord, Provenance, SYMBOLIC_T,
};
use crate::ellmodel::{
    canonical_height, MapChecks, Point, TorsionOrder, Verdict, WeierstrassIsomorphism,
    WeierstrassModel,
};
use crate::error::Error;
use crate::exact::Rational;
use crate::fixedseq6::{self, jacobian_walk, same_up_to_square, SequenceSpec};
use crate::mestre6::{self, HalfOffsetSequence, MatchLayer};
use crate::polyalg::{Field, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    RecordsFailed,
    BadInput,
    Exhausted,
    InternalFailure,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::RecordsFailed => 1,
            Outcome::BadInput => 2,
            Outcome::Exhausted => 3,
            Outcome::InternalFailure => 4,
        }
    }

    fn of_error(err: &Error) -> Self {
        match err {
            Error::Parse { .. }
            | Error::DegenerateSequence(_)
            | Error::SingularSpecialization(_)
            | Error::SingularSystem
            | Error::DivisionByZero => Outcome::BadInput,
            Error::ExhaustedMultiples { .. } | Error::PointIsTorsion(_) => Outcome::Exhausted,
            _ => Outcome::InternalFailure,
        }
    }
}

/// Where commands write progress and diagnostics.
pub struct Console<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

impl Console<'_> {
    fn say(&mut self, line: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{line}");
    }

    fn fail(&mut self, err: &Error) -> Outcome {
        let outcome = Outcome::of_error(err);
        let _ = writeln!(self.err, "error: {err}");
        outcome
    }

    fn io_fail(&mut self, path: &Path, err: std::io::Error) -> Outcome {
        let _ = writeln!(self.err, "error: {}: {err}", path.display());
        Outcome::InternalFailure
    }
}

pub const MESTRE_CONSTRUCTION: &str = "mestre half-offset sequence";
pub const MESTRE_PARAMETRIZATION: &str = "P = Q^2 - R";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MestreInput {
    Symbolic,
    At(String),
}

/// The curve `y² = R(x)` through six squares, symbolic or at one `t`.
pub fn mestre_record(input: &MestreInput) -> Result<CurveRecord, Error> {
    let offsets = HalfOffsetSequence::<Rational>::offsets();
    let provenance = Provenance::new(MESTRE_CONSTRUCTION, None, MESTRE_PARAMETRIZATION);
    match input {
        MestreInput::Symbolic => {
            let m = mestre6::curve_and_points(&HalfOffsetSequence::symbolic())?;
            let c = &m.curve;
            Ok(CurveRecord::new(
                [&c.a, &c.b, &c.c],
                SYMBOLIC_T.into(),
                &offsets,
                &m.points,
                provenance,
            ))
        }
        MestreInput::At(text) => {
            let t: Rational = text.parse()?;
            let m = mestre6::curve_and_points(&HalfOffsetSequence::new(t.clone())?)?;
            let c = &m.curve;
            Ok(CurveRecord::new(
                [&c.a, &c.b, &c.c],
                t.to_string(),
                &offsets,
                &m.points,
                provenance,
            ))
        }
    }
}

pub fn cmd_mestre(input: &MestreInput, out: &Path, console: &mut Console) -> Outcome {
    let record = match mestre_record(input) {
        Ok(r) => r,
        Err(e) => return console.fail(&e),
    };
    match record.check() {
        Ok(problems) if problems.is_empty() => {}
        Ok(problems) => {
            for p in problems {
                console.say(format!("internal check failed: {p}"));
            }
            return Outcome::InternalFailure;
        }
        Err(e) => return console.fail(&e),
    }
    if let Err(e) = write_atomically(out, &record.to_json()) {
        return console.io_fail(out, e);
    }
    console.say(format!(
        "wrote 1 record with {} points to {}",
        record.points.len(),
        out.display()
    ));
    Outcome::Success
}

/// `count` verified curves from the Jacobian walk at `t`.
pub fn fixed_records(t: &str, count: usize) -> Result<Vec<CurveRecord>, Error> {
    if count == 0 {
        return Err(Error::Parse {
            what: "count",
            input: "0".into(),
        });
    }
    let t: Rational = t.parse()?;
    let walk = jacobian_walk(&t, count)?;
    let failures: Vec<String> = walk
        .records
        .par_iter()
        .enumerate()
        .filter_map(|(i, rec)| match rec.check() {
            Ok(problems) if problems.is_empty() => None,
            Ok(problems) => Some(format!("record {i}: {}", problems.join("; "))),
            Err(e) => Some(format!("record {i}: {e}")),
        })
        .collect();
    if !failures.is_empty() {
        return Err(Error::IdentityFailed(failures.join("; ")));
    }
    Ok(walk.records)
}

pub fn cmd_fixed(t: &str, count: usize, out: &Path, console: &mut Console) -> Outcome {
    let records = match fixed_records(t, count) {
        Ok(r) => r,
        Err(e) => return console.fail(&e),
    };
    if let Err(e) = write_atomically(out, &records_to_json(&records)) {
        return console.io_fail(out, e);
    }
    console.say(format!(
        "wrote {} records to {}",
        records.len(),
        out.display()
    ));
    Outcome::Success
}

pub fn cmd_verify(path: &Path, console: &mut Console) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(console.err, "error: {}: {e}", path.display());
            return Outcome::BadInput;
        }
    };
    let records = match records_from_json(&text) {
        Ok(r) => r,
        Err(e) => return console.fail(&e),
    };
    let mut failed = 0;
    for (i, rec) in records.iter().enumerate() {
        match rec.check() {
            Ok(problems) if problems.is_empty() => console.say(format!("record {i}: ok")),
            Ok(problems) => {
                failed += 1;
                console.say(format!("record {i}: FAILED: {}", problems.join("; ")));
            }
            Err(e) => {
                let _ = writeln!(console.err, "error: record {i}: {e}");
                return Outcome::BadInput;
            }
        }
    }
    if failed > 0 {
        console.say(format!("{failed} of {} records failed", records.len()));
        Outcome::RecordsFailed
    } else {
        console.say(format!("all {} records verified", records.len()));
        Outcome::Success
    }
}

fn compare<F: PartialEq + std::fmt::Display>(ours: &F, reference: &F) -> (Comparison, String) {
    let outcome = if ours == reference {
        Comparison::Match
    } else {
        Comparison::Mismatch
    };
    (outcome, ours.to_string())
}

fn parse_rf(s: &str) -> Result<RationalFunction, Error> {
    RationalFunction::parse(s)
}

fn maps_ok(checks: &MapChecks) -> (bool, String) {
    (
        checks.all(),
        format!(
            "pullback {}, roundtrip {}, marked point to infinity {}",
            checks.pullback, checks.roundtrip, checks.marked_to_infinity
        ),
    )
}

/// Every check against the reference constants, in order.
pub fn paper_ledger() -> CheckLedger {
    let mut ledger = CheckLedger::new();
    mestre_checks(&mut ledger);
    independence_checks(&mut ledger);
    fixed_sequence_checks(&mut ledger);
    ledger
}

fn mestre_checks(ledger: &mut CheckLedger) {
    let curve = match mestre6::curve_and_points(&HalfOffsetSequence::symbolic()) {
        Ok(c) => c,
        Err(e) => {
            ledger.hard_error("mestre.identity", e);
            return;
        }
    };
    let d = &curve.decomposition;
    let shape =
        d.r.degree().map_or(true, |k| k <= 4) && d.p.is_even() && d.q.is_even() && d.r.is_even();
    ledger.hard(
        "mestre.identity",
        d.identity_holds() && shape,
        Some("P = Q^2 - R over Q(t), deg R <= 4, all even".into()),
    );
    for (name, k, expr) in mestre6::reference::Q_COEFFS {
        soft_rf(ledger, name, &d.q.coeff(k), expr);
    }
    for (name, k, expr) in mestre6::reference::R_COEFFS {
        soft_rf(ledger, name, &d.r.coeff(k), expr);
    }
    let on_curve = curve.points.iter().all(|(x, y)| curve.curve.contains(x, y));
    ledger.hard(
        "mestre.points",
        on_curve,
        Some("six points on y^2 = R(x) over Q(t)".into()),
    );

    let estar = match mestre6::estar_model(&HalfOffsetSequence::symbolic()) {
        Ok(e) => e,
        Err(e) => {
            ledger.hard_error("estar.model", e);
            return;
        }
    };
    let t0 = Rational::frac(INDEPENDENCE_T.0, INDEPENDENCE_T.1);
    let at_t0 = HalfOffsetSequence::new(t0).and_then(|seq| mestre6::estar_model(&seq));
    match at_t0.and_then(|e| e.verify_maps()) {
        Ok(checks) => {
            let (ok, detail) = maps_ok(&checks);
            ledger.hard("estar.maps.t=3/4", ok, Some(detail));
        }
        Err(e) => {
            ledger.hard_error("estar.maps.t=3/4", e);
        }
    }
    let ours = &estar.two_torsion.model;
    let on_model = estar.points.iter().all(|p| ours.contains(p));
    ledger.hard(
        "estar.points",
        on_model,
        Some("six images on the two-torsion model".into()),
    );
    let reference = match mestre6::reference_model() {
        Ok(m) => m,
        Err(e) => {
            ledger.skipped("alpha_beta.j", &e);
            ledger.skipped("alpha_beta.model", e);
            return;
        }
    };
    match (ours.j_invariant(), reference.j_invariant()) {
        (Ok(a), Ok(b)) => {
            ledger.hard(
                "alpha_beta.j",
                a == b,
                Some("j-invariants over Q(t)".into()),
            );
        }
        (Err(e), _) | (_, Err(e)) => {
            ledger.hard_error("alpha_beta.j", e);
        }
    }
    let derived = format!("alpha = {}, beta = {}", ours.a2, ours.a4);
    match mestre6::compare_models(ours, &reference) {
        Ok(layer) => {
            let outcome = match layer {
                MatchLayer::Exact => Comparison::Match,
                MatchLayer::Scaling(_) | MatchLayer::JOnly => Comparison::ParamMismatch,
                MatchLayer::None => Comparison::Mismatch,
            };
            ledger.soft(
                "alpha_beta.model",
                outcome,
                derived,
                Some(format!("layer {}", layer.name())),
            );
        }
        Err(e) => {
            ledger.skipped("alpha_beta.model", e);
        }
    }
}

fn soft_rf(ledger: &mut CheckLedger, name: &str, ours: &RationalFunction, expr: &str) {
    match parse_rf(expr) {
        Ok(reference) => {
            let (outcome, derived) = compare(ours, &reference);
            ledger.soft(name, outcome, derived, None);
        }
        Err(e) => {
            ledger.skipped(name, e);
        }
    }
}

pub const INDEPENDENCE_T: (i64, i64) = (3, 4);

fn independence_checks(ledger: &mut CheckLedger) {
    let name = "independence.t=3/4";
    let t0 = Rational::frac(INDEPENDENCE_T.0, INDEPENDENCE_T.1);
    match mestre6::independence_at(&t0) {
        Ok(report) => {
            let cert = &report.certificate;
            let ok = cert.verdict == Verdict::Independent;
            let detail = format!(
                "{} certificate: det {:.6e}, heights [{}]",
                crate::ellmodel::IndependenceCertificate::LABEL,
                cert.determinant,
                cert.heights
                    .iter()
                    .map(|h| format!("{h:.4}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            ledger.hard(name, ok, Some(detail));
        }
        Err(e) => {
            ledger.hard_error(name, e);
        }
    }
}

fn fixed_sequence_checks(ledger: &mut CheckLedger) {
    let st = match fixedseq6::stages(&SequenceSpec::symbolic()) {
        Ok(s) => s,
        Err(e) => {
            ledger.hard_error("lambda.sum", e);
            return;
        }
    };
    for (coeff, (name, expr)) in st.lambda.coeffs.iter().zip(fixedseq6::reference::lambda()) {
        soft_rf(ledger, name, coeff, &expr);
    }
    let one = RationalFunction::one();
    ledger.hard("lambda.sum", st.lambda.sum() == one, None);
    ledger.hard("nu.sum", st.nu.sum() == one, None);
    ledger.hard("kappa.sum", st.kappa.sum() == one, None);
    let identity = st.lambda.apply(&st.forms.d, &st.forms.e, &st.forms.f);
    ledger.hard(
        "quadric.identity",
        (&identity - &st.forms.g.pow(2)).is_zero(),
        None,
    );

    let kill = match fixedseq6::symbolic_kill() {
        Ok(k) => k,
        Err(e) => {
            ledger.hard_error("rho.kills", e);
            return;
        }
    };
    let killed = st.killed_quartic(&kill.rho);
    ledger.hard(
        "rho.kills",
        killed.invariants().disc.is_zero(),
        Some(format!("source {:?}", kill.source)),
    );
    match parse_rf(fixedseq6::reference::RHO) {
        Ok(reference) => {
            let outcome = if reference == kill.rho {
                Comparison::Match
            } else {
                Comparison::ParamMismatch
            };
            ledger.soft("rho.reference", outcome, kill.rho.to_string(), None);
        }
        Err(e) => {
            ledger.skipped("rho.reference", e);
        }
    }

    match st.extract_h(&kill.rho) {
        Ok(h) => {
            ledger.hard(
                "h.square",
                h.square() == killed,
                Some("h^2 equals the killed quartic".into()),
            );
            h_comparison(ledger, &h);
        }
        Err(e) => {
            ledger.hard_error("h.square", e);
            ledger.skipped("h.reference", "no h");
        }
    }

    let k = st.k_quartic(&kill.rho);
    let lead = st.lambda.coeffs[0].mul(&fixedseq6::clearing_factor(&st.seq.t));
    ledger.hard(
        "kquartic.leading_square",
        k.a == lead.square(),
        Some("leading coefficient is (c * lambda1)^2, c the clearing factor".into()),
    );
    ledger.hard("kquartic.nonsingular", !k.invariants().disc.is_zero(), None);

    t3_checks(ledger);
}

fn h_comparison(ledger: &mut CheckLedger, h: &crate::polyalg::BinaryQuadratic<RationalFunction>) {
    use fixedseq6::reference::{H_PP, H_PREFACTOR, H_PW, H_WW};
    let parsed = (|| -> Result<_, Error> {
        let pre = parse_rf(H_PREFACTOR)?;
        Ok(crate::polyalg::BinaryQuadratic::new(
            pre.mul(&parse_rf(H_PP)?),
            pre.mul(&parse_rf(H_PW)?),
            pre.mul(&parse_rf(H_WW)?),
        ))
    })();
    let derived = format!("{} p^2 + {} p w + {} w^2", h.a, h.b, h.c);
    match parsed {
        Ok(reference) => {
            let (outcome, detail) = if *h == reference {
                (Comparison::Match, None)
            } else if *h == reference.neg() {
                (Comparison::Match, Some("equal up to sign".to_string()))
            } else {
                (Comparison::ParamMismatch, None)
            };
            ledger.soft("h.reference", outcome, derived, detail);
        }
        Err(e) => {
            ledger.skipped("h.reference", e);
        }
    }
}

fn t3_checks(ledger: &mut CheckLedger) {
    use fixedseq6::reference::{T3_A4, T3_A6, T3_X, T3_Y};
    let t0 = Rational::from_i64(3);
    let sp = match fixedseq6::specialize(&t0) {
        Ok(s) => s,
        Err(e) => {
            ledger.hard_error("Ptilde.on_curve", e);
            return;
        }
    };
    let sc = &sp.jacobian;
    ledger.hard("Ptilde.on_curve", sc.curve.contains(&sc.point), None);
    match sc.curve.torsion_order(&sc.point) {
        Ok(order) => {
            ledger.hard(
                "Ptilde.infinite_order",
                order == TorsionOrder::Infinite,
                Some(format!("height {}", height_text(&sc.curve, &sc.point))),
            );
        }
        Err(e) => {
            ledger.hard_error("Ptilde.infinite_order", e);
        }
    }

    let parsed = (|| -> Result<_, Error> {
        let curve = WeierstrassModel::new(Rational::zero(), T3_A4.parse()?, T3_A6.parse()?);
        let point = Point::new(T3_X.parse()?, T3_Y.parse()?);
        Ok((curve, point))
    })();
    let (reference, reference_point) = match parsed {
        Ok(p) => p,
        Err(e) => {
            for name in ["Etilde.a4", "Etilde.a6", "Ptilde.x", "Ptilde.y"] {
                ledger.skipped(name, &e);
            }
            return;
        }
    };
    // Exact agreement, else agreement after the isomorphism between the two models.
    let iso = WeierstrassIsomorphism::between(&sc.curve, &reference);
    let exact = sc.curve == reference;
    let iso_detail = iso
        .as_ref()
        .filter(|_| !exact)
        .map(|i| format!("isomorphic with u = {}", i.u));
    let grade = |exact: bool, after_iso: bool| {
        if exact {
            Comparison::Match
        } else if after_iso {
            Comparison::ParamMismatch
        } else {
            Comparison::Mismatch
        }
    };
    let isomorphic = iso.is_some();
    let detail = if isomorphic {
        None
    } else {
        Some("models are not isomorphic".to_string())
    };
    ledger.soft(
        "Etilde.a4",
        grade(sc.curve.a4 == reference.a4, isomorphic),
        sc.curve.a4.to_string(),
        iso_detail.clone().or(detail.clone()),
    );
    ledger.soft(
        "Etilde.a6",
        grade(sc.curve.a6 == reference.a6, isomorphic),
        sc.curve.a6.to_string(),
        iso_detail.clone().or(detail),
    );
    let mapped = iso.as_ref().map(|i| i.apply(&sc.point));
    let coords = |p: &Point<Rational>| (p.x().cloned(), p.y().cloned());
    let (ox, oy) = coords(&sc.point);
    let (px, py) = coords(&reference_point);
    let (mx, my) = mapped.as_ref().map(coords).unwrap_or((None, None));
    let show = |v: &Option<Rational>| v.as_ref().map_or("infinity".to_string(), |r| r.to_string());
    ledger.soft(
        "Ptilde.x",
        grade(ox == px, mx == px),
        show(&ox),
        iso_detail
            .as_ref()
            .map(|_| "compared after the isomorphism".to_string()),
    );
    ledger.soft(
        "Ptilde.y",
        grade(oy == py, my == py),
        show(&oy),
        iso_detail
            .as_ref()
            .map(|_| "compared after the isomorphism".to_string()),
    );

    match jacobian_walk(&t0, 3) {
        Ok(walk) => {
            let verified = walk
                .records
                .iter()
                .all(|r| r.check().is_ok_and(|p| p.is_empty()));
            let distinct = (0..walk.witnesses.len()).all(|i| {
                (i + 1..walk.witnesses.len())
                    .all(|j| !same_up_to_square(&walk.witnesses[i].1.abc, &walk.witnesses[j].1.abc))
            });
            ledger.hard(
                "walk.t=3",
                walk.records.len() == 3 && verified && distinct,
                Some(format!(
                    "{} records from {} multiples",
                    walk.records.len(),
                    walk.multiples_tried
                )),
            );
        }
        Err(e) => {
            ledger.hard_error("walk.t=3", e);
        }
    }
}

fn height_text(curve: &WeierstrassModel<Rational>, point: &Point<Rational>) -> String {
    canonical_height(curve, point).map_or_else(|e| e.to_string(), |h| format!("{h:.4}"))
}

pub fn cmd_paper_check(report: &Path, console: &mut Console) -> Outcome {
    let ledger = paper_ledger();
    for check in &ledger.checks {
        console.say(check);
    }
    if let Err(e) = write_atomically(report, &ledger.to_json()) {
        return console.io_fail(report, e);
    }
    let hard_failures = ledger.hard_failures().count();
    console.say(format!(
        "{} checks, {} hard failures; report written to {}",
        ledger.checks.len(),
        hard_failures,
        report.display()
    ));
    if ledger.passed() {
        Outcome::Success
    } else {
        Outcome::InternalFailure
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run<T>(f: impl FnOnce(&mut Console) -> T) -> (T, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let result = f(&mut Console {
            out: &mut out,
            err: &mut err,
        });
        (
            result,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn mestre_at_three_quarters_writes_six_points() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        let (outcome, _, _) = run(|c| cmd_mestre(&MestreInput::At("3/4".into()), &path, c));
        assert_eq!(outcome, Outcome::Success);
        let records = records_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].points.len(), 6);
        assert!(records[0].check().unwrap().is_empty());
    }

    #[test]
    fn mestre_rejects_degenerate_and_singular_t() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        let (outcome, _, err) = run(|c| cmd_mestre(&MestreInput::At("1/2".into()), &path, c));
        assert_eq!(outcome.code(), 2);
        assert!(err.contains("degenerate sequence"), "{err}");
        let (outcome, _, _) = run(|c| cmd_mestre(&MestreInput::At("0".into()), &path, c));
        assert_eq!(outcome.code(), 2);
        let (outcome, _, _) = run(|c| cmd_mestre(&MestreInput::At("1/0".into()), &path, c));
        assert_eq!(outcome.code(), 2);
        assert!(!path.exists());
    }

    #[test]
    fn symbolic_mestre_record_verifies() {
        let record = mestre_record(&MestreInput::Symbolic).unwrap();
        assert!(record.is_symbolic());
        assert!(record.check().unwrap().is_empty());
        let again = records_from_json(&record.to_json()).unwrap();
        assert_eq!(again, vec![record]);
    }

    #[test]
    fn fixed_then_verify_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.json");
        let (outcome, _, _) = run(|c| cmd_fixed("3", 1, &path, c));
        assert_eq!(outcome, Outcome::Success);
        let text = std::fs::read_to_string(&path).unwrap();
        let records = records_from_json(&text).unwrap();
        let xs: Vec<&str> = records[0].points.iter().map(|p| p[0].as_str()).collect();
        assert_eq!(xs, ["1", "4", "9", "16", "25", "36"]);
        assert_eq!(run(|c| cmd_verify(&path, c)).0, Outcome::Success);

        let mut bad = records.clone();
        let y: Rational = bad[0].points[2][1].parse().unwrap();
        bad[0].points[2][1] = (&y + &Rational::one()).to_string();
        std::fs::write(&path, records_to_json(&bad)).unwrap();
        let (outcome, out, _) = run(|c| cmd_verify(&path, c));
        assert_eq!(outcome.code(), 1);
        assert!(out.contains("record 0: FAILED"), "{out}");

        bad[0].a = "1/0".into();
        std::fs::write(&path, records_to_json(&bad)).unwrap();
        assert_eq!(run(|c| cmd_verify(&path, c)).0.code(), 2);
        std::fs::write(&path, "{ not json").unwrap();
        assert_eq!(run(|c| cmd_verify(&path, c)).0.code(), 2);
    }

    #[test]
    fn fixed_rejects_bad_input() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.json");
        assert_eq!(run(|c| cmd_fixed("-1", 1, &path, c)).0.code(), 2);
        assert_eq!(run(|c| cmd_fixed("3", 0, &path, c)).0.code(), 2);
        assert_eq!(run(|c| cmd_fixed("x", 1, &path, c)).0.code(), 2);
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        let exhausted = Error::ExhaustedMultiples {
            wanted: 3,
            found: 1,
            tried: 15,
        };
        assert_eq!(Outcome::of_error(&exhausted).code(), 3);
        assert_eq!(
            Outcome::of_error(&Error::IdentityFailed("x".into())).code(),
            4
        );
        assert_eq!(
            Outcome::of_error(&Error::DegenerateSequence("x".into())).code(),
            2
        );
    }
}
