//! Reduction vectors with respect to lines in `P^2`.
//!
//! A reduction vector `d` records how much of a fat point scheme each line
//! in a chosen sequence absorbs. Its diagonal counts `diag(d)` bound the
//! Hilbert function from below, exactly when `d` is strictly decreasing.

use std::fmt;

use crate::binomial::binom_or_zero;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ring::{Form, FormKind};
use crate::scheme::{FatPointScheme, ProjectivePoint};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReductionVector(pub Vec<u32>);

impl ReductionVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ReductionVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    /// Left-aligned rows of dots, first row at the bottom.
    pub fn dot_diagram(&self) -> String {
        let mut out = String::new();
        for &d in self.0.iter().rev() {
            let row: Vec<&str> = (0..d).map(|_| "*").collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ReductionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of dots on each antidiagonal `j + k = t` of the dot diagram.
pub fn diag(d: &ReductionVector) -> Vec<u64> {
    let len = d
        .0
        .iter()
        .enumerate()
        .filter(|(_, &dj)| dj > 0)
        .map(|(j, &dj)| j + dj as usize)
        .max()
        .unwrap_or(0);
    (0..len)
        .map(|t| {
            d.0.iter()
                .enumerate()
                .filter(|&(j, &dj)| j <= t && t - j < dj as usize)
                .count() as u64
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: u64,
    /// Set when `d` is strictly decreasing, so the bound is attained.
    pub exact: bool,
}

/// `v_{t+1}`: the sum of the first `t + 1` entries of `diag(d)`.
pub fn cht_lower_bound(d: &ReductionVector, t: u32) -> LowerBound {
    let value = diag(d).iter().take(t as usize + 1).sum();
    LowerBound {
        value,
        exact: d.is_strictly_decreasing(),
    }
}

/// The three terms of [`cht_upper_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBoundTerms {
    /// `C(t+2,2)`
    pub triangle: i64,
    /// `C(t-s+2,2)`
    pub corner: i64,
    /// `max(t - i - d_i + 1, 0)` for each row `i`.
    pub row_deficits: Vec<i64>,
}

impl UpperBoundTerms {
    pub fn value(&self) -> i64 {
        self.triangle - self.corner - self.row_deficits.iter().sum::<i64>()
    }
}

pub fn cht_upper_bound_terms(d: &ReductionVector, t: u32) -> UpperBoundTerms {
    let t = i64::from(t);
    let s = d.len() as i64;
    UpperBoundTerms {
        triangle: binom_or_zero(t + 2, 2),
        corner: binom_or_zero(t - s + 2, 2),
        row_deficits: d
            .0
            .iter()
            .enumerate()
            .map(|(i, &di)| (t - i as i64 - i64::from(di) + 1).max(0))
            .collect(),
    }
}

/// `C(t+2,2) - C(t-s+2,2) - sum_i max(t - i - d_i + 1, 0)` with `s = len(d)`.
pub fn cht_upper_bound(d: &ReductionVector, t: u32) -> i64 {
    cht_upper_bound_terms(d, t).value()
}

/// `d` together with the multiplicities of `Z_0 ⊇ Z_1 ⊇ ... ⊇ Z_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub vector: ReductionVector,
    pub residuals: Vec<Vec<u32>>,
}

/// Residuates `z` by the lines in order. Every line must be a linear form
/// in three variables.
pub fn reduction_vector_of(z: &FatPointScheme, lines: &[Form]) -> Result<ReductionTrace> {
    if z.n() != 2 {
        return Err(Error::Scope("reduction vectors are defined in P^2".into()));
    }
    for (j, l) in lines.iter().enumerate() {
        if l.kind() != FormKind::Homogeneous || l.n_vars() != 3 || l.degree() != 1 || l.is_zero() {
            return Err(Error::Argument(format!("line {j} is not a nonzero linear form in P^2")));
        }
    }
    let on: Vec<Vec<bool>> = lines
        .iter()
        .map(|l| z.points().iter().map(|p| p.lies_on(l)).collect())
        .collect();
    let mut current = z.multiplicities().to_vec();
    let mut residuals = vec![current.clone()];
    let mut d = Vec::with_capacity(lines.len());
    for row in &on {
        let mut dj = 0;
        for (m, &hit) in current.iter_mut().zip(row) {
            if hit && *m > 0 {
                dj += *m;
                *m -= 1;
            }
        }
        d.push(dj);
        residuals.push(current.clone());
    }
    let left: Vec<usize> = current
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, _)| i)
        .collect();
    if !left.is_empty() {
        return Err(Error::IncompleteCover(left));
    }
    Ok(ReductionTrace {
        vector: ReductionVector(d),
        residuals,
    })
}

/// Reduced points with `d_i` of them on the line `x2 = i x0`, at
/// `(1 : a : i)` for `a < d_i`. The lines only meet at `(0:1:0)`, so no
/// chosen point is an intersection point.
pub fn configuration_from_vector(d: &ReductionVector, field: FieldSpec) -> Result<FatPointScheme> {
    if d.0.contains(&0) || !d.is_strictly_decreasing() {
        return Err(Error::Argument(format!(
            "{d} is not a strictly decreasing vector of positive integers"
        )));
    }
    field.validate()?;
    let need = d.0.first().copied().unwrap_or(0).max(d.len() as u32);
    if !field.has_distinct_integers_up_to(u64::from(need)) {
        return Err(Error::FieldSize(format!(
            "{field} has too few elements for {need} distinct coordinates"
        )));
    }
    let mut points = Vec::with_capacity(d.total() as usize);
    for (i, &di) in d.0.iter().enumerate() {
        for a in 0..di {
            points.push(ProjectivePoint::from_i64(field, &[1, i64::from(a), i as i64])?);
        }
    }
    FatPointScheme::reduced(2, field, points)
}

/// The lines `x2 = i x0` used by [`configuration_from_vector`].
pub fn configuration_lines(s: usize, field: FieldSpec) -> Vec<Form> {
    (0..s)
        .map(|i| Form::linear(field, &[field.from_i64(-(i as i64)), field.zero(), field.one()]))
        .collect()
}
