//! The JSON envelope for schemes and curves.
//!
//! ```json
//! {"field": {"kind": "prime", "p": 32003}, "n": 2,
//!  "points": [["1", "0", "0"], ["0", "1", "0"]],
//!  "multiplicities": [2, 1],
//!  "curves": [{"1,1,0": "1", "0,0,2": "-1"}],
//!  "lines": [["0", "0", "1"]]}
//! ```
//!
//! Coordinates and coefficients are decimal strings (`"a/b"` allowed over
//! the rationals); JSON integers are accepted too. `multiplicities`
//! defaults to all ones; `curves` and `lines` are optional.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::ring::Form;
use crate::scheme::{FatPointScheme, ProjectivePoint};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(default)]
    pub points: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<BTreeMap<String, Value>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<Vec<Value>>,
}

/// A parsed envelope.
#[derive(Clone, Debug)]
pub struct SchemeInput {
    pub scheme: FatPointScheme,
    pub curves: Vec<Form>,
    pub lines: Vec<Form>,
}

fn scalar(field: FieldSpec, v: &Value, name: &str) -> Result<FieldElement> {
    match v {
        Value::String(s) => field.parse(s).map_err(|e| Error::parse(name, e.to_string())),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => Err(Error::parse(name, format!("{n} is not an integer"))),
        },
        other => Err(Error::parse(name, format!("expected a decimal string, got {other}"))),
    }
}

/// Parses `"e0,e1,...,en"` exponent keys with coefficient values.
pub fn parse_curve(field: FieldSpec, n: usize, map: &BTreeMap<String, Value>, name: &str) -> Result<Form> {
    if map.is_empty() {
        return Err(Error::parse(name, "curve has no terms"));
    }
    let mut terms = Vec::with_capacity(map.len());
    for (k, v) in map {
        let key = format!("{name}[{k:?}]");
        let exps = k
            .split(',')
            .map(|e| {
                e.trim()
                    .parse::<u32>()
                    .map_err(|err| Error::parse(&key, format!("exponent {e:?}: {err}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != n + 1 {
            return Err(Error::parse(&key, format!("expected {} exponents", n + 1)));
        }
        terms.push((exps, scalar(field, v, &key)?));
    }
    let degrees: Vec<u32> = terms.iter().map(|(e, _)| e.iter().sum()).collect();
    if degrees.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::parse(name, "terms have different degrees"));
    }
    Form::homogeneous(field, terms).map_err(|e| Error::parse(name, e.to_string()))
}

fn parse_vector(field: FieldSpec, n: usize, v: &[Value], name: &str) -> Result<Vec<FieldElement>> {
    if v.len() != n + 1 {
        return Err(Error::parse(name, format!("expected {} coordinates, got {}", n + 1, v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(j, c)| scalar(field, c, &format!("{name}[{j}]")))
        .collect()
}

impl Envelope {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse("scheme file", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_scheme(z: &FatPointScheme) -> Self {
        Envelope {
            field: z.field(),
            n: z.n(),
            points: z
                .points()
                .iter()
                .map(|p| p.coords().iter().map(|c| Value::String(c.to_string())).collect())
                .collect(),
            multiplicities: Some(z.multiplicities().to_vec()),
            curves: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn parse(&self) -> Result<SchemeInput> {
        let field = self.field;
        field.validate().map_err(|e| Error::parse("field", e.to_string()))?;
        if self.n == 0 {
            return Err(Error::parse("n", "ambient dimension must be positive"));
        }
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let name = format!("points[{i}]");
                let coords = parse_vector(field, self.n, p, &name)?;
                ProjectivePoint::new(coords).map_err(|e| Error::parse(&name, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let multiplicities = match &self.multiplicities {
            Some(m) => {
                if m.len() != points.len() {
                    return Err(Error::parse(
                        "multiplicities",
                        format!("{} entries for {} points", m.len(), points.len()),
                    ));
                }
                m.clone()
            }
            None => vec![1; points.len()],
        };
        let scheme = FatPointScheme::new(self.n, field, points, multiplicities)
            .map_err(|e| Error::parse("points", e.to_string()))?;
        let curves = self
            .curves
            .iter()
            .enumerate()
            .map(|(i, c)| parse_curve(field, self.n, c, &format!("curves[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let lines = self
            .lines
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let name = format!("lines[{i}]");
                let c = parse_vector(field, self.n, l, &name)?;
                if c.iter().all(FieldElement::is_zero) {
                    return Err(Error::parse(&name, "zero linear form"));
                }
                Ok(Form::linear(field, &c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SchemeInput {
            scheme,
            curves,
            lines,
        })
    }
}

/// Parses an envelope from JSON text.
pub fn read_scheme(text: &str) -> Result<SchemeInput> {
    Envelope::from_json(text)?.parse()
}
