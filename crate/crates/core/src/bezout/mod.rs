//! Local invariants of plane curves: multiplicity, tangent cones and
//! intersection multiplicities, plus the Bézout checksum.

mod gcd;

use std::collections::HashMap;
use std::fmt;

use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::exactlin::SpanBasis;
use crate::field::{FieldElement, FieldSpec};
use crate::ring::{self, monomial_basis, Form, FormKind};
use crate::scheme::ProjectivePoint;

use gcd::{bivariate_gcd, trim, u_gcd, BPoly, UPoly};

fn check_curve(f: &Form, p: &ProjectivePoint) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f.kind() != FormKind::Homogeneous || f.n_vars() != 3 {
        return Err(Error::Scope("curves are homogeneous forms in three variables".into()));
    }
    if p.n() != 2 || p.field() != f.field() {
        return Err(Error::InvalidPoint(format!("{p} is not a point of P^2 over {}", f.field())));
    }
    Ok(())
}

/// Largest `m` with `F ∈ I(p)^m`.
pub fn multiplicity_at(f: &Form, p: &ProjectivePoint) -> Result<u32> {
    check_curve(f, p)?;
    let e = ring::local_expansion(f, p.coords())?;
    Ok(e.order().expect("nonzero form has nonzero expansion"))
}

/// Lowest-degree part of the local expansion, a binary form in the chart
/// coordinates `X1, X2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentCone {
    form: Form,
}

impl TangentCone {
    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }
}

impl fmt::Display for TangentCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

pub fn tangent_cone(f: &Form, p: &ProjectivePoint) -> Result<TangentCone> {
    check_curve(f, p)?;
    let e = ring::local_expansion(f, p.coords())?;
    let k = e.order().expect("nonzero");
    let mut form = Form::zero(f.field(), 2, k, FormKind::Affine);
    for (m, c) in e.terms() {
        if m.degree() == k {
            form = form.add(&Form::from_coefficients(
                f.field(),
                std::slice::from_ref(m),
                std::slice::from_ref(c),
                FormKind::Affine,
            ));
        }
    }
    Ok(TangentCone { form })
}

/// `h(X1, 1)` together with the power of `X2` dividing `h`.
fn binary_dehomogenize(h: &Form) -> (UPoly, u32) {
    let field = h.field();
    let y_power = h.terms().map(|(m, _)| m.exponents()[1]).min().unwrap_or(0);
    let mut u: UPoly = vec![field.zero(); h.degree() as usize + 1];
    for (m, c) in h.terms() {
        u[m.exponents()[0] as usize] += c;
    }
    trim(&mut u);
    (u, y_power)
}

/// Whether the tangent cones at `p` share a linear factor over the
/// algebraic closure. `F` and `G` must vanish at `p`.
pub fn common_tangent(f: &Form, g: &Form, p: &ProjectivePoint) -> Result<bool> {
    let a = tangent_cone(f, p)?;
    let b = tangent_cone(g, p)?;
    if a.degree() == 0 || b.degree() == 0 {
        return Err(Error::Argument(format!("both curves must pass through {p}")));
    }
    let (ua, ya) = binary_dehomogenize(&a.form);
    let (ub, yb) = binary_dehomogenize(&b.form);
    if ya > 0 && yb > 0 {
        return Ok(true);
    }
    Ok(u_gcd(&ua, &ub, f.field()).len() > 1)
}

fn to_bpoly(e: &Form) -> BPoly {
    let field = e.field();
    let dy = e.terms().map(|(m, _)| m.exponents()[1]).max().unwrap_or(0) as usize;
    let dx = e.terms().map(|(m, _)| m.exponents()[0]).max().unwrap_or(0) as usize;
    let mut p: BPoly = vec![vec![field.zero(); dx + 1]; dy + 1];
    for (m, c) in e.terms() {
        p[m.exponents()[1] as usize][m.exponents()[0] as usize] = c.clone();
    }
    for row in &mut p {
        trim(row);
    }
    while p.last().is_some_and(|r| r.is_empty()) {
        p.pop();
    }
    p
}

/// Errors when `F` and `G` share a component through `p`.
fn check_no_common_factor(f: &Form, g: &Form, p: &ProjectivePoint) -> Result<()> {
    let a = ring::local_expansion(f, p.coords())?;
    let b = ring::local_expansion(g, p.coords())?;
    let h = bivariate_gcd(&to_bpoly(&a), &to_bpoly(&b), f.field());
    let vanishes = h.first().and_then(|c| c.first()).is_none_or(FieldElement::is_zero);
    if vanishes {
        return Err(Error::CommonFactor);
    }
    Ok(())
}

/// Polynomials in `X1, X2` modulo `(X1, X2)^m`, densely indexed.
struct Truncated {
    field: FieldSpec,
    m: u32,
    index: HashMap<(u32, u32), usize>,
    monomials: Vec<(u32, u32)>,
}

impl Truncated {
    fn new(field: FieldSpec, m: u32) -> Self {
        let mut monomials = Vec::new();
        for d in 0..m {
            for a in (0..=d).rev() {
                monomials.push((a, d - a));
            }
        }
        let index = monomials.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Truncated {
            field,
            m,
            index,
            monomials,
        }
    }

    fn dim(&self) -> usize {
        self.monomials.len()
    }

    fn coordinates(&self, e: &Form) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (mon, c) in e.terms() {
            let ex = mon.exponents();
            if let Some(&i) = self.index.get(&(ex[0], ex[1])) {
                v[i] = c.clone();
            }
        }
        v
    }

    fn mul(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (a1, a2) = self.monomials[i];
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (b1, b2) = self.monomials[j];
                if a1 + a2 + b1 + b2 >= self.m {
                    continue;
                }
                out[self.index[&(a1 + b1, a2 + b2)]] += &(x * y);
            }
        }
        out
    }
}

/// `Λ_m(t) = dim R_t / ((F, G)_t + I(p)^m_t)`, computed through the local
/// expansions at `p` truncated below degree `m`.
fn lambda(f: &Form, g: &Form, p: &ProjectivePoint, m: u32, t: u32) -> Result<u64> {
    let field = f.field();
    let tr = Truncated::new(field, m);
    let fl = tr.coordinates(&ring::local_expansion(f, p.coords())?);
    let gl = tr.coordinates(&ring::local_expansion(g, p.coords())?);
    // local images of the coordinate functions
    let chart = p.chart();
    let scale = p.coords()[chart].inv().expect("nonzero");
    let mut coord = Vec::with_capacity(3);
    let mut k = 0;
    for i in 0..3 {
        let mut v = vec![field.zero(); tr.dim()];
        if i == chart {
            v[0] = field.one();
        } else {
            v[0] = &p.coords()[i] * &scale;
            if m > 1 {
                let e = if k == 0 { (1, 0) } else { (0, 1) };
                v[tr.index[&e]] = field.one();
            }
            k += 1;
        }
        coord.push(v);
    }
    let mut memo: HashMap<Vec<u32>, Vec<FieldElement>> = HashMap::new();
    let mut image = |mono: &[u32]| -> Vec<FieldElement> {
        if let Some(v) = memo.get(mono) {
            return v.clone();
        }
        let mut v = vec![field.zero(); tr.dim()];
        v[0] = field.one();
        for (i, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                v = tr.mul(&v, &coord[i]);
            }
        }
        memo.insert(mono.to_vec(), v.clone());
        v
    };
    let mut span = SpanBasis::new(field, tr.dim());
    for (h, hl) in [(f, &fl), (g, &gl)] {
        if h.degree() > t {
            continue;
        }
        for mu in monomial_basis(3, t - h.degree()) {
            if span.rank() == tr.dim() {
                break;
            }
            span.insert(&tr.mul(hl, &image(mu.exponents())));
        }
    }
    Ok(binom(u64::from(m) + 1, 2) - span.rank() as u64)
}

/// The values `Λ_m` computed for `m = 1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTrace {
    pub lambdas: Vec<u64>,
}

/// `I_p(F, G)`, the stable value of `Λ_m`.
pub fn intersection_multiplicity(f: &Form, g: &Form, p: &ProjectivePoint) -> Result<u64> {
    intersection_multiplicity_traced(f, g, p).map(|(v, _)| v)
}

/// Starts each `m` at `t = deg F + deg G + m` and waits for two equal
/// consecutive values in `t`, then stops at the first `m` with
/// `Λ_m = Λ_{m+1}`. Gives up beyond `m = deg F deg G + 2`.
pub fn intersection_multiplicity_traced(
    f: &Form,
    g: &Form,
    p: &ProjectivePoint,
) -> Result<(u64, IntersectionTrace)> {
    check_curve(f, p)?;
    check_curve(g, p)?;
    if f.field() != g.field() {
        return Err(Error::Argument("curves over different fields".into()));
    }
    if !p.lies_on(f) || !p.lies_on(g) {
        return Ok((0, IntersectionTrace { lambdas: vec![0] }));
    }
    check_no_common_factor(f, g, p)?;
    let m_budget = f.degree() * g.degree() + 2;
    let t_budget = 4 * (f.degree() + g.degree() + m_budget);
    let mut lambdas: Vec<u64> = Vec::new();
    for m in 1..=m_budget + 1 {
        let mut t = f.degree() + g.degree() + m;
        let mut prev = lambda(f, g, p, m, t)?;
        loop {
            t += 1;
            if t > t_budget {
                return Err(Error::Budget(format!(
                    "no stabilization in t by degree {t_budget} for m = {m}; values so far {lambdas:?}"
                )));
            }
            let next = lambda(f, g, p, m, t)?;
            if next == prev {
                break;
            }
            prev = next;
        }
        if lambdas.last() == Some(&prev) {
            lambdas.push(prev);
            return Ok((prev, IntersectionTrace { lambdas }));
        }
        lambdas.push(prev);
    }
    Err(Error::Budget(format!(
        "no stabilization in m up to {m_budget}; values {lambdas:?}"
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCheck {
    pub multiplicities: Vec<(ProjectivePoint, u64)>,
    pub total: u64,
    pub expected: u64,
    pub complete: bool,
}

/// Sums `I_p(F, G)` over the candidates; `complete` says whether the total
/// reached `deg F deg G`.
pub fn bezout_sum_check(f: &Form, g: &Form, candidates: &[ProjectivePoint]) -> Result<BezoutCheck> {
    let mut multiplicities = Vec::new();
    for p in candidates {
        if p.lies_on(f) && p.lies_on(g) {
            let v = intersection_multiplicity(f, g, p)?;
            multiplicities.push((p.clone(), v));
        }
    }
    let total = multiplicities.iter().map(|(_, v)| v).sum();
    let expected = u64::from(f.degree()) * u64::from(g.degree());
    Ok(BezoutCheck {
        multiplicities,
        total,
        expected,
        complete: total == expected,
    })
}

/// Largest prime for which [`rational_points`] enumerates the plane.
pub const MAX_SCAN_PRIME: u64 = 101;

/// Every point of `P^2(F_p)`, for `p <= 101`.
pub fn rational_points(field: FieldSpec) -> Result<Vec<ProjectivePoint>> {
    let FieldSpec::Prime { p } = field else {
        return Err(Error::Scope("exhaustive scan needs a prime field".into()));
    };
    if p > MAX_SCAN_PRIME {
        return Err(Error::Scope(format!(
            "exhaustive scan limited to p <= {MAX_SCAN_PRIME}, got {p}"
        )));
    }
    let p = p as i64;
    let mut out = Vec::with_capacity((p * p + p + 1) as usize);
    for a in 0..p {
        for b in 0..p {
            out.push(ProjectivePoint::from_i64(field, &[1, a, b])?);
        }
    }
    for b in 0..p {
        out.push(ProjectivePoint::from_i64(field, &[0, 1, b])?);
    }
    out.push(ProjectivePoint::from_i64(field, &[0, 0, 1])?);
    Ok(out)
}

/// Common zeros of `F` and `G` in `P^2(F_p)`.
pub fn common_zeros(f: &Form, g: &Form) -> Result<Vec<ProjectivePoint>> {
    Ok(rational_points(f.field())?
        .into_iter()
        .filter(|p| p.lies_on(f) && p.lies_on(g))
        .collect())
}
