//! Fat point schemes `Z = m1 p1 + ... + mr pr` in `P^n` and the invariants of
//! their ideals `I(Z) = I(p1)^m1 ∩ ... ∩ I(pr)^mr`.
//!
//! `I(Z)_t` is computed as the kernel of a conditions matrix: one row per
//! coefficient of degree `< m_i` in the local expansion at `p_i`, one column
//! per monomial of degree `t`.

mod generic;
mod symbolic;

use std::fmt;

use crate::binomial::{binom, forms_dim};
use crate::error::{Error, Result};
use crate::exactlin::{ExactMatrix, SpanBasis};
use crate::field::{FieldElement, FieldSpec};
use crate::ring::{self, affine_monomial_basis, monomial_basis, Form, FormKind, Monomial};

pub use generic::{
    in_linear_general_position, random_generic_points, star_configuration, StarConfiguration,
};
pub use symbolic::{
    containment_test, virtual_alpha, waldschmidt_bracket, ContainmentDirection,
    ContainmentResult, WaldschmidtBracket,
};

/// A point of `P^n`, stored with its first nonzero coordinate scaled to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<FieldElement>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint(format!(
                "need at least two coordinates, got {}",
                coords.len()
            )));
        }
        let field = coords[0].field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::InvalidPoint("coordinates from different fields".into()));
        }
        let chart = ring::chart_of(&coords)?;
        let s = coords[chart].inv().expect("nonzero");
        Ok(ProjectivePoint {
            coords: coords.iter().map(|c| c * &s).collect(),
        })
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> FieldSpec {
        self.coords[0].field()
    }

    /// Index of the affine chart the point is expanded in.
    pub fn chart(&self) -> usize {
        ring::chart_of(&self.coords).expect("points are nonzero")
    }

    pub fn lies_on(&self, f: &Form) -> bool {
        f.eval(&self.coords).is_zero()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointScheme {
    n: usize,
    field: FieldSpec,
    points: Vec<ProjectivePoint>,
    multiplicities: Vec<u32>,
}

impl FatPointScheme {
    pub fn new(
        n: usize,
        field: FieldSpec,
        points: Vec<ProjectivePoint>,
        multiplicities: Vec<u32>,
    ) -> Result<Self> {
        if points.len() != multiplicities.len() {
            return Err(Error::Argument(format!(
                "{} points but {} multiplicities",
                points.len(),
                multiplicities.len()
            )));
        }
        if n == 0 {
            return Err(Error::Argument("ambient dimension must be positive".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.n() != n {
                return Err(Error::InvalidPoint(format!(
                    "point {i} has {} coordinates, expected {}",
                    p.n() + 1,
                    n + 1
                )));
            }
            if p.field() != field {
                return Err(Error::InvalidPoint(format!("point {i} is not over {field}")));
            }
            if let Some(j) = points[..i].iter().position(|q| q == p) {
                return Err(Error::InvalidPoint(format!("points {j} and {i} coincide")));
            }
        }
        if let Some(i) = multiplicities.iter().position(|&m| m == 0) {
            return Err(Error::Argument(format!("multiplicity of point {i} is zero")));
        }
        Ok(FatPointScheme {
            n,
            field,
            points,
            multiplicities,
        })
    }

    /// All points with multiplicity one.
    pub fn reduced(n: usize, field: FieldSpec, points: Vec<ProjectivePoint>) -> Result<Self> {
        let k = points.len();
        Self::new(n, field, points, vec![1; k])
    }

    /// All points with the same multiplicity `m`.
    pub fn uniform(n: usize, field: FieldSpec, points: Vec<ProjectivePoint>, m: u32) -> Result<Self> {
        let k = points.len();
        Self::new(n, field, points, vec![m; k])
    }

    /// The same support with every multiplicity replaced by `m`; the ideal is
    /// the symbolic power `I^(m)` of the radical ideal of the support.
    pub fn symbolic_power(&self, m: u32) -> Result<Self> {
        Self::uniform(self.n, self.field, self.points.clone(), m)
    }

    pub fn support(&self) -> Self {
        FatPointScheme {
            multiplicities: vec![1; self.points.len()],
            ..self.clone()
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn multiplicity_sum(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// `sum_i C(m_i + n - 1, n)`: the number of conditions, and the eventual
    /// value of `H_{R/I}`.
    pub fn degree(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|&m| binom(u64::from(m) + self.n as u64 - 1, self.n as u64))
            .sum()
    }

    /// Rows: low-degree coefficients of local expansions at each point.
    /// Columns: the degree-`t` monomials in [`monomial_basis`] order.
    pub fn conditions_matrix(&self, t: u32) -> ExactMatrix {
        let cols = monomial_basis(self.n + 1, t);
        let pascal = ring::pascal(self.field, t as usize);
        let mut rows = Vec::with_capacity(self.degree() as usize);
        for (p, &m) in self.points.iter().zip(&self.multiplicities) {
            point_conditions(p, m, &cols, &pascal, &mut rows);
        }
        ExactMatrix::from_rows(self.field, cols.len(), rows).expect("well-formed rows")
    }

    /// `H_I(t) = dim I(Z)_t`.
    pub fn hilbert_ideal(&self, t: u32) -> u64 {
        let total = forms_dim(self.n, t as usize) as u64;
        if self.is_empty() {
            return total;
        }
        total - self.conditions_matrix(t).rank() as u64
    }

    /// `H_{R/I}(t) = C(t+n, n) - H_I(t)`.
    pub fn hilbert_quotient(&self, t: u32) -> u64 {
        forms_dim(self.n, t as usize) as u64 - self.hilbert_ideal(t)
    }

    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        let eventual = self.degree();
        if self.is_empty() {
            return Ok(HilbertFunction {
                n: self.n,
                values: vec![0],
                eventual: 0,
                t_stab: 0,
            });
        }
        let bound = self.multiplicity_sum().saturating_sub(1);
        let mut values = Vec::new();
        for t in 0..=bound {
            let h = self.hilbert_quotient(t);
            values.push(h);
            if h == eventual {
                return Ok(HilbertFunction {
                    n: self.n,
                    values,
                    eventual,
                    t_stab: t as usize,
                });
            }
        }
        Err(Error::Invariant(format!(
            "Hilbert function did not reach {eventual} by degree {bound}"
        )))
    }

    /// A basis of `I(Z)_t` as forms.
    pub fn ideal_basis(&self, t: u32) -> Vec<Form> {
        let basis = monomial_basis(self.n + 1, t);
        if self.is_empty() {
            return basis
                .iter()
                .map(|m| {
                    Form::from_coefficients(self.field, std::slice::from_ref(m), &[self.field.one()], FormKind::Homogeneous)
                })
                .collect();
        }
        self.conditions_matrix(t)
            .nullspace_basis()
            .into_iter()
            .map(|v| Form::from_coefficients(self.field, &basis, &v, FormKind::Homogeneous))
            .collect()
    }

    /// Membership of a homogeneous form in `I(Z)`.
    pub fn contains(&self, f: &Form) -> bool {
        self.points.iter().zip(&self.multiplicities).all(|(p, &m)| {
            let e = ring::local_expansion(f, p.coords()).expect("points are nonzero");
            e.order().is_none_or(|o| o >= m)
        })
    }

    /// The least degree of a nonzero element of `I(Z)`, searched up to
    /// `sum m_i` where it is guaranteed to exist.
    pub fn alpha(&self) -> Alpha {
        if self.is_empty() {
            return Alpha {
                degree: 0,
                empty_scheme: true,
            };
        }
        let cap = self.multiplicity_sum();
        let degree = self
            .alpha_within(cap)
            .expect("alpha exists below the multiplicity sum");
        Alpha {
            degree,
            empty_scheme: false,
        }
    }

    /// Least `t <= budget` with `H_I(t) > 0`, if any.
    pub fn alpha_within(&self, budget: u32) -> Option<u32> {
        if self.is_empty() {
            return Some(0);
        }
        let start = self.multiplicities.iter().copied().min().unwrap_or(0);
        (start..=budget).find(|&t| self.hilbert_ideal(t) > 0)
    }

    /// Minimal homogeneous generators of `I(Z)` up to degree `d_max`
    /// (`None` means `sum m_i`, which suffices).
    ///
    /// In each degree the new generators extend a basis of `R_1 I_{t-1}` to a
    /// basis of `I_t`.
    pub fn minimal_generators(&self, d_max: Option<u32>) -> Vec<Form> {
        let d_max = d_max.unwrap_or_else(|| self.multiplicity_sum());
        let mut gens = Vec::new();
        let mut previous: Vec<Form> = Vec::new();
        for t in 0..=d_max {
            let current = self.ideal_basis(t);
            if current.is_empty() {
                previous = current;
                continue;
            }
            let basis = monomial_basis(self.n + 1, t);
            let mut span = SpanBasis::new(self.field, basis.len());
            for g in &previous {
                for j in 0..=self.n {
                    let v = g.mul_monomial(&Monomial::var(self.n + 1, j)).coefficients(&basis);
                    span.insert(&v);
                }
            }
            for f in &current {
                if span.insert(&f.coefficients(&basis)) {
                    gens.push(f.clone());
                }
            }
            previous = current;
        }
        gens
    }
}

/// Result of [`FatPointScheme::alpha`]; the empty scheme has `alpha = 0`
/// and sets `empty_scheme`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alpha {
    pub degree: u32,
    pub empty_scheme: bool,
}

fn point_conditions(
    p: &ProjectivePoint,
    m: u32,
    cols: &[Monomial],
    pascal: &[Vec<FieldElement>],
    rows: &mut Vec<Vec<FieldElement>>,
) {
    let chart = p.chart();
    let shift: Vec<&FieldElement> = p
        .coords()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != chart)
        .map(|(_, c)| c)
        .collect();
    let t = cols.first().map_or(0, Monomial::degree) as usize;
    let powers: Vec<Vec<FieldElement>> = shift
        .iter()
        .map(|c| (0..=t).map(|k| c.pow(k as u64)).collect())
        .collect();
    let field = p.field();
    for b in affine_monomial_basis(shift.len(), m.saturating_sub(1)) {
        if m == 0 {
            break;
        }
        let row = cols
            .iter()
            .map(|a| {
                let mut e = a.exponents().to_vec();
                e.remove(chart);
                let mut acc = field.one();
                for (j, (&aj, &bj)) in e.iter().zip(b.exponents()).enumerate() {
                    if bj > aj {
                        return field.zero();
                    }
                    acc *= &pascal[aj as usize][bj as usize];
                    acc *= &powers[j][(aj - bj) as usize];
                    if acc.is_zero() {
                        return acc;
                    }
                }
                acc
            })
            .collect();
        rows.push(row);
    }
}

/// `H_{R/I}` of a fat point scheme, stored up to its stabilization index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    n: usize,
    values: Vec<u64>,
    eventual: u64,
    t_stab: usize,
}

impl HilbertFunction {
    /// `H_{R/I}(t)` for `t = 0..=t_stab`; constant afterwards.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn eventual_value(&self) -> u64 {
        self.eventual
    }

    /// First `t` at which the eventual value is reached.
    pub fn stabilization_index(&self) -> usize {
        self.t_stab
    }

    pub fn quotient(&self, t: usize) -> u64 {
        self.values.get(t).copied().unwrap_or(self.eventual)
    }

    pub fn ideal(&self, t: usize) -> u64 {
        forms_dim(self.n, t) as u64 - self.quotient(t)
    }

    /// First difference `ΔH`, up to and including the first zero after
    /// stabilization.
    pub fn delta(&self) -> Vec<i64> {
        let mut d: Vec<i64> = (0..=self.t_stab + 1)
            .map(|t| {
                let h = self.quotient(t) as i64;
                if t == 0 {
                    h
                } else {
                    h - self.quotient(t - 1) as i64
                }
            })
            .collect();
        while d.len() > 1 && d[d.len() - 1] == 0 && d[d.len() - 2] == 0 {
            d.pop();
        }
        d
    }

    /// Prefix through one step past stabilization, so the tail is explicit.
    pub fn prefix_with_tail(&self) -> Vec<u64> {
        (0..=self.t_stab + 1).map(|t| self.quotient(t)).collect()
    }

    /// Nondecreasing, and strictly increasing until it becomes constant.
    pub fn is_strictly_increasing_until_constant(&self) -> bool {
        let v = self.prefix_with_tail();
        let mut constant = false;
        for w in v.windows(2) {
            if w[1] < w[0] {
                return false;
            }
            if w[1] == w[0] {
                constant = true;
            } else if constant {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({}, {}, ...)", parts.join(", "), self.eventual)
    }
}
