//! Self-contained JSON records of curves `y² = ax⁴ + bx² + c` with their points.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polyalg::parse::parse_expr;
use crate::polyalg::{Field, RationalFunction};

pub const MODEL_TAG: &str = "even_quartic";
/// Value of the `t` field for records over ℚ(t).
pub const SYMBOLIC_T: &str = "t";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub multiple: Option<u64>,
    pub parametrization: String,
    pub version: String,
}

impl Provenance {
    pub fn new(construction: &str, multiple: Option<u64>, parametrization: &str) -> Self {
        Provenance {
            construction: construction.into(),
            multiple,
            parametrization: parametrization.into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    pub model: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub t: String,
    pub offsets: Vec<String>,
    pub points: Vec<[String; 2]>,
    pub provenance: Provenance,
}

impl CurveRecord {
    pub fn new<F: Field + std::fmt::Display>(
        abc: [&F; 3],
        t: String,
        offsets: &[Rational],
        points: &[(F, F)],
        provenance: Provenance,
    ) -> Self {
        CurveRecord {
            model: MODEL_TAG.into(),
            a: abc[0].to_string(),
            b: abc[1].to_string(),
            c: abc[2].to_string(),
            t,
            offsets: offsets.iter().map(|o| o.to_string()).collect(),
            points: points
                .iter()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
            provenance,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.t == SYMBOLIC_T
    }

    /// Re-checks every point and the consecutive-squares structure.
    /// `Err` for unparsable fields, `Ok(problems)` otherwise.
    pub fn check(&self) -> Result<Vec<String>> {
        if self.model != MODEL_TAG {
            return Err(Error::Parse {
                what: "model tag",
                input: self.model.clone(),
            });
        }
        if self.is_symbolic() {
            self.check_in(RationalFunction::t(), |s| {
                parse_expr(s, Some((SYMBOLIC_T, RationalFunction::t())))
            })
        } else {
            let t: Rational = self.t.parse()?;
            self.check_in(t, |s| s.parse::<Rational>())
        }
    }

    fn check_in<F: Field>(&self, t: F, parse: impl Fn(&str) -> Result<F>) -> Result<Vec<String>> {
        let (a, b, c) = (parse(&self.a)?, parse(&self.b)?, parse(&self.c)?);
        let offsets = self
            .offsets
            .iter()
            .map(|o| o.parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        let points = self
            .points
            .iter()
            .map(|[x, y]| Ok((parse(x)?, parse(y)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut problems = Vec::new();
        if offsets.len() != points.len() {
            problems.push(format!(
                "{} offsets but {} points",
                offsets.len(),
                points.len()
            ));
        }
        let mut sorted = offsets.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| &w[1] - &w[0] != Rational::one()) {
            problems.push("offsets are not consecutive".into());
        }
        for (i, ((x, y), o)) in points.iter().zip(&offsets).enumerate() {
            if *x != t.add(&F::from_rational(o)).square() {
                problems.push(format!("point {i}: x is not (t + {o})^2"));
            }
            let x2 = x.square();
            let rhs = a.mul(&x2).add(&b).mul(&x2).add(&c);
            if y.square() != rhs {
                problems.push(format!("point {i}: not on the curve"));
            }
        }
        Ok(problems)
    }

    /// Canonical text: sorted keys, two-space indentation.
    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }
}

pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("records serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}

pub fn records_to_json(records: &[CurveRecord]) -> String {
    to_canonical_json(&records)
}

/// Accepts a single record or an array of records.
pub fn records_from_json(text: &str) -> Result<Vec<CurveRecord>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        what: "JSON",
        input: e.to_string(),
    })?;
    let parsed = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|r| vec![r])
    };
    parsed.map_err(|e| Error::Parse {
        what: "curve record",
        input: e.to_string(),
    })
}

/// Writes to a temporary sibling and renames it into place.
pub fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)
}
