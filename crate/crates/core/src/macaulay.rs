//! Macaulay's growth bound, O-sequences, and the lifting of a lex monomial
//! ideal in `K[x1, x2]` to the ideal of a set of points in `P^2`.

use std::fmt;

use crate::binomial::binom;
use crate::cht::ReductionVector;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ring::{Form, Monomial};
use crate::scheme::{FatPointScheme, ProjectivePoint};

/// `h = C(m_d, d) + C(m_{d-1}, d-1) + ... + C(m_j, j)` with
/// `m_d > m_{d-1} > ... > m_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialExpansion {
    pub d: u64,
    /// Pairs `(m_k, k)` with `k` decreasing.
    pub terms: Vec<(u64, u64)>,
}

impl BinomialExpansion {
    pub fn value(&self) -> u64 {
        self.terms.iter().map(|&(m, k)| binom(m, k)).sum()
    }

    /// `h^<d>`: every term `C(m, k)` becomes `C(m + 1, k + 1)`.
    pub fn growth(&self) -> u64 {
        self.terms.iter().map(|&(m, k)| binom(m + 1, k + 1)).sum()
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(m, k)| format!("C({m},{k})")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Greedy expansion from the top; `h = 0` gives no terms.
pub fn d_binomial_expansion(h: u64, d: u64) -> Result<BinomialExpansion> {
    if d == 0 {
        return Err(Error::Argument("d must be at least 1".into()));
    }
    let mut terms = Vec::new();
    let mut rest = h;
    let mut k = d;
    while rest > 0 && k > 0 {
        let mut m = k;
        while binom(m + 1, k) <= rest {
            m += 1;
        }
        terms.push((m, k));
        rest -= binom(m, k);
        k -= 1;
    }
    debug_assert_eq!(rest, 0);
    Ok(BinomialExpansion { d, terms })
}

/// `h^<d>`, with `0^<d> = 0`.
pub fn macaulay_growth(h: u64, d: u64) -> Result<u64> {
    Ok(d_binomial_expansion(h, d)?.growth())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    NotO,
    O,
    DifferentiableO,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: SequenceKind,
    pub zero_dimensional: bool,
    /// `ΔH` through the first zero after the prefix.
    pub delta: Vec<i64>,
    /// First degree at which the O-sequence conditions fail for `H`, or for
    /// `ΔH` when `H` is an O-sequence but not differentiable.
    pub first_violation: Option<usize>,
}

impl Classification {
    pub fn is_o_sequence(&self) -> bool {
        self.kind != SequenceKind::NotO
    }

    pub fn is_differentiable(&self) -> bool {
        self.kind == SequenceKind::DifferentiableO
    }
}

fn o_violation(h: &[i64]) -> Option<usize> {
    if h.first() != Some(&1) {
        return Some(0);
    }
    if let Some(i) = h.iter().position(|&x| x < 0) {
        return Some(i);
    }
    for d in 1..h.len().saturating_sub(1) {
        let bound = macaulay_growth(h[d] as u64, d as u64).expect("d >= 1");
        if h[d + 1] as u64 > bound {
            return Some(d + 1);
        }
    }
    None
}

/// Classifies a sequence given by a finite prefix that stays constant at
/// its last value afterwards.
pub fn classify_sequence(prefix: &[i64]) -> Classification {
    let mut h = prefix.to_vec();
    if let Some(&last) = h.last() {
        h.push(last);
    }
    let delta: Vec<i64> = (0..h.len())
        .map(|t| if t == 0 { h[0] } else { h[t] - h[t - 1] })
        .collect();
    let zero_dimensional = delta.last().is_none_or(|&x| x == 0);
    let kind;
    let mut first_violation = o_violation(&h);
    if first_violation.is_some() {
        kind = SequenceKind::NotO;
    } else {
        first_violation = o_violation(&delta);
        kind = if first_violation.is_none() {
            SequenceKind::DifferentiableO
        } else {
            SequenceKind::O
        };
    }
    Classification {
        kind,
        zero_dimensional,
        delta,
        first_violation,
    }
}

/// The lex ideal `J ⊂ K[x1, x2]` of a differentiable 0-dimensional
/// O-sequence, its lifted points and lifted generators.
#[derive(Clone, Debug)]
pub struct GmrLift {
    pub delta: Vec<u64>,
    /// `row_lengths[b]`: number of standard monomials `x1^a x2^b`.
    pub row_lengths: Vec<u32>,
    /// Minimal generators of `J` as exponent pairs `(a1, a2)`.
    pub monomial_generators: Vec<(u32, u32)>,
    pub points: Vec<ProjectivePoint>,
    /// `ḡ = prod_j prod_{i < a_j} (x_j - i x0)` for each monomial generator.
    pub generators: Vec<Form>,
}

impl GmrLift {
    /// The strictly decreasing vector `d` with `diag(d) = ΔH`.
    pub fn reduction_vector(&self) -> ReductionVector {
        ReductionVector(self.row_lengths.clone())
    }

    pub fn scheme(&self, field: FieldSpec) -> Result<FatPointScheme> {
        FatPointScheme::reduced(2, field, self.points.clone())
    }

    /// Standard monomials as `*`, generators of `J` as `o`; `x2` exponent
    /// increases upwards.
    pub fn staircase(&self) -> String {
        let height = self.row_lengths.len();
        let mut out = String::new();
        for b in (0..=height).rev() {
            let len = self.row_lengths.get(b).copied().unwrap_or(0) as usize;
            let mut row: Vec<char> = vec!['*'; len];
            if self.monomial_generators.iter().any(|&(a, bb)| bb as usize == b && a as usize == len) {
                row.push('o');
            }
            let s: Vec<String> = row.iter().map(char::to_string).collect();
            out.push_str(s.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn lifted(field: FieldSpec, a1: u32, a2: u32) -> Form {
    let mut g = Form::homogeneous(field, vec![(vec![0, 0, 0], field.one())]).expect("constant");
    for (j, a) in [(1usize, a1), (2, a2)] {
        for i in 0..a {
            let mut c = vec![field.zero(); 3];
            c[0] = field.from_i64(-i64::from(i));
            c[j] = field.one();
            g = g.mul(&Form::linear(field, &c));
        }
    }
    g
}

/// Builds `J` by keeping, in each degree `t`, the `(ΔH)_t` monomials
/// `x1^a x2^b` with the smallest `b`: those that come last for lex with
/// `x2 > x1`.
pub fn gmr_lift(prefix: &[i64], field: FieldSpec) -> Result<GmrLift> {
    let c = classify_sequence(prefix);
    if !c.is_differentiable() {
        let d = c.first_violation.unwrap_or(0);
        return Err(Error::Classification(format!(
            "not a differentiable O-sequence: first violation in degree {d}"
        )));
    }
    if !c.zero_dimensional {
        return Err(Error::Classification("sequence is not 0-dimensional".into()));
    }
    if prefix.len() > 1 && prefix[1] > 3 {
        return Err(Error::Classification(format!(
            "degree 1: h1 = {} exceeds 3",
            prefix[1]
        )));
    }
    let delta: Vec<u64> = c.delta.iter().map(|&x| x as u64).collect();
    let e = |t: usize| delta.get(t).copied().unwrap_or(0);
    let height = delta.iter().copied().max().unwrap_or(0) as usize;
    let mut row_lengths = Vec::with_capacity(height);
    for b in 0..height {
        let mut t = b;
        while e(t) > b as u64 {
            t += 1;
        }
        row_lengths.push((t - b) as u32);
    }
    let max_exp = row_lengths.first().copied().unwrap_or(0).max(height as u32);
    field.validate()?;
    if !field.has_distinct_integers_up_to(u64::from(max_exp)) {
        return Err(Error::FieldSize(format!(
            "{field} does not contain 0..={max_exp} as distinct elements"
        )));
    }
    let mut monomial_generators: Vec<(u32, u32)> = row_lengths
        .iter()
        .enumerate()
        .map(|(b, &len)| (len, b as u32))
        .collect();
    monomial_generators.push((0, height as u32));
    let mut points = Vec::new();
    for (b, &len) in row_lengths.iter().enumerate() {
        for a in 0..len {
            points.push(ProjectivePoint::from_i64(field, &[1, i64::from(a), b as i64])?);
        }
    }
    let generators = monomial_generators
        .iter()
        .map(|&(a1, a2)| lifted(field, a1, a2))
        .collect();
    Ok(GmrLift {
        delta,
        row_lengths,
        monomial_generators,
        points,
        generators,
    })
}

/// `x1^a1 x2^a2` as a monomial of `K[x0, x1, x2]`.
pub fn monomial_of(a1: u32, a2: u32) -> Monomial {
    Monomial(vec![0, a1, a2])
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All decreasing expansions by exhaustive search.
    fn all_expansions(h: u64, k: u64, max_m: u64) -> Vec<Vec<(u64, u64)>> {
        if h == 0 {
            return vec![vec![]];
        }
        if k == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        for m in k..max_m {
            let c = binom(m, k);
            if c > h {
                break;
            }
            for mut rest in all_expansions(h - c, k - 1, m) {
                rest.insert(0, (m, k));
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn expansion_examples() {
        let e = d_binomial_expansion(15, 3).unwrap();
        assert_eq!(e.terms, vec![(5, 3), (3, 2), (2, 1)]);
        assert_eq!(e.growth(), 22);
        assert_eq!(d_binomial_expansion(1, 4).unwrap().terms, vec![(4, 4)]);
        assert_eq!(d_binomial_expansion(10, 3).unwrap().terms, vec![(5, 3)]);
        assert_eq!(all_expansions(10, 3, 64), vec![vec![(5, 3)]]);
        assert_eq!(macaulay_growth(0, 3).unwrap(), 0);
        assert!(d_binomial_expansion(3, 0).is_err());
    }

    #[test]
    fn expansions_unique_and_growth_dominates() {
        for d in 1..=6 {
            for h in 1..=60 {
                let e = d_binomial_expansion(h, d).unwrap();
                assert_eq!(e.value(), h);
                assert_eq!(all_expansions(h, d, 64), vec![e.terms.clone()]);
                for w in e.terms.windows(2) {
                    assert!(w[0].0 > w[1].0);
                }
                assert!(e.terms.iter().all(|&(m, k)| m >= k && k >= 1));
                assert!(e.growth() >= h);
            }
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify_sequence(&[1, 3, 6, 9, 10, 11]);
        assert!(c.is_differentiable() && c.zero_dimensional);
        assert_eq!(c.delta, vec![1, 2, 3, 3, 1, 1, 0]);

        let c = classify_sequence(&[1, 3, 2, 0]);
        assert_eq!(c.kind, SequenceKind::O);
        assert!(c.zero_dimensional);

        let c = classify_sequence(&[1, 2, 3, 3, 2, 2]);
        assert_eq!(c.kind, SequenceKind::O);

        let c = classify_sequence(&[1, 2, 4]);
        assert_eq!(c.kind, SequenceKind::NotO);
        assert_eq!(c.first_violation, Some(2));
        assert_eq!(classify_sequence(&[2, 3]).kind, SequenceKind::NotO);
    }

    #[test]
    fn lift_of_worked_example() {
        let f = FieldSpec::prime(32003).unwrap();
        let g = gmr_lift(&[1, 3, 6, 9, 10, 11], f).unwrap();
        assert_eq!(g.row_lengths, vec![6, 3, 2]);
        assert_eq!(g.monomial_generators, vec![(6, 0), (3, 1), (2, 2), (0, 3)]);
        assert_eq!(g.points.len(), 11);
        let degrees: Vec<u32> = g.generators.iter().map(Form::degree).collect();
        assert_eq!(degrees, vec![6, 4, 4, 3]);
        let z = g.scheme(f).unwrap();
        assert_eq!(z.hilbert_function().unwrap().values(), &[1, 3, 6, 9, 10, 11]);
        for gen in &g.generators {
            assert!(z.contains(gen));
        }
        assert_eq!(g.staircase(), "o\n* * o\n* * * o\n* * * * * * o\n");
    }

    #[test]
    fn lift_small_cases() {
        let f = FieldSpec::prime(101).unwrap();
        let g = gmr_lift(&[1], f).unwrap();
        assert_eq!(g.points, vec![ProjectivePoint::from_i64(f, &[1, 0, 0]).unwrap()]);
        let g = gmr_lift(&[1, 3, 5], f).unwrap();
        assert_eq!(g.row_lengths, vec![3, 2]);
        let z = g.scheme(f).unwrap();
        assert_eq!(z.hilbert_function().unwrap().values(), &[1, 3, 5]);
    }

    #[test]
    fn lift_rejects_bad_sequences() {
        let f = FieldSpec::prime(101).unwrap();
        let e = gmr_lift(&[1, 3, 2, 0], f).unwrap_err();
        assert!(matches!(e, Error::Classification(ref s) if s.contains("degree")), "{e}");
        assert!(matches!(gmr_lift(&[1, 4, 5], f), Err(Error::Classification(_))));
        assert!(matches!(
            gmr_lift(&[1, 2, 3, 4, 5, 6, 7, 8], FieldSpec::prime(5).unwrap()),
            Err(Error::FieldSize(_))
        ));
    }
}
