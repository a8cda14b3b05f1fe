//! Graded polynomial rings over a [`FieldSpec`].
//!
//! A [`Form`] is either homogeneous (an element of `R_t` for
//! `R = K[x0, ..., xn]`) or affine (an element of `A_{<=t}` for
//! `A = K[X1, ..., Xn]`). Monomial bases are listed in graded lexicographic
//! order: by total degree ascending, then lexicographically descending in
//! the exponent vector, so `x0^2, x0x1, x0x2, x1^2, x1x2, x2^2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// All monomials of degree exactly `t` in `n_vars` variables, lexicographically
/// descending. There are `C(t + n_vars - 1, n_vars - 1)` of them.
pub fn monomial_basis(n_vars: usize, t: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n_vars == 0 {
        if t == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; n_vars];
    fill_degree(&mut current, 0, t, &mut out);
    out
}

fn fill_degree(current: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if idx + 1 == current.len() {
        current[idx] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[idx] = e;
        fill_degree(current, idx + 1, remaining - e, out);
    }
}

/// All monomials of degree at most `t` in `n_vars` variables, graded
/// lexicographic. There are `C(t + n_vars, n_vars)` of them.
pub fn affine_monomial_basis(n_vars: usize, t: u32) -> Vec<Monomial> {
    (0..=t).flat_map(|d| monomial_basis(n_vars, d)).collect()
}

/// Maps each monomial of a basis to its position.
pub fn basis_index(basis: &[Monomial]) -> std::collections::HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// Every term has degree exactly `degree`.
    Homogeneous,
    /// Every term has degree at most `degree`.
    Affine,
}

/// A polynomial with a declared degree; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    field: FieldSpec,
    n_vars: usize,
    degree: u32,
    kind: FormKind,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Form {
    pub fn zero(field: FieldSpec, n_vars: usize, degree: u32, kind: FormKind) -> Self {
        Form {
            field,
            n_vars,
            degree,
            kind,
            terms: BTreeMap::new(),
        }
    }

    /// Homogeneous form from `(exponents, coefficient)` pairs. The degree is
    /// taken from the terms; an empty list needs [`Form::zero`].
    pub fn homogeneous(field: FieldSpec, terms: Vec<(Vec<u32>, FieldElement)>) -> Result<Self> {
        let Some((first, _)) = terms.first() else {
            return Err(Error::Argument("homogeneous form needs at least one term".into()));
        };
        let n_vars = first.len();
        let degree: u32 = first.iter().sum();
        let mut f = Form::zero(field, n_vars, degree, FormKind::Homogeneous);
        for (e, c) in terms {
            if e.len() != n_vars || e.iter().sum::<u32>() != degree {
                return Err(Error::Argument(format!(
                    "term {e:?} does not match degree {degree} in {n_vars} variables"
                )));
            }
            f.add_term(Monomial(e), c);
        }
        Ok(f)
    }

    /// Convenience constructor with integer coefficients.
    pub fn homogeneous_i64(field: FieldSpec, terms: &[(&[u32], i64)]) -> Result<Self> {
        Self::homogeneous(
            field,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), field.from_i64(*c)))
                .collect(),
        )
    }

    /// The linear form `sum c_i x_i`.
    pub fn linear(field: FieldSpec, coeffs: &[FieldElement]) -> Self {
        let n = coeffs.len();
        let mut f = Form::zero(field, n, 1, FormKind::Homogeneous);
        for (i, c) in coeffs.iter().enumerate() {
            f.add_term(Monomial::var(n, i), c.clone());
        }
        f
    }

    pub fn from_coefficients(
        field: FieldSpec,
        basis: &[Monomial],
        coeffs: &[FieldElement],
        kind: FormKind,
    ) -> Self {
        assert_eq!(basis.len(), coeffs.len());
        let n_vars = basis.first().map_or(0, Monomial::n_vars);
        let degree = basis.iter().map(Monomial::degree).max().unwrap_or(0);
        let mut f = Form::zero(field, n_vars, degree, kind);
        for (m, c) in basis.iter().zip(coeffs) {
            f.add_term(m.clone(), c.clone());
        }
        f
    }

    /// Coefficient vector with respect to `basis`; panics if a term is
    /// missing from the basis.
    pub fn coefficients(&self, basis: &[Monomial]) -> Vec<FieldElement> {
        let index = basis_index(basis);
        let mut v = vec![self.field.zero(); basis.len()];
        for (m, c) in &self.terms {
            let i = *index
                .get(m)
                .unwrap_or_else(|| panic!("monomial {m:?} not in basis"));
            v[i] = c.clone();
        }
        v
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        assert_eq!(m.n_vars(), self.n_vars, "monomial has wrong number of variables");
        assert_eq!(c.field(), self.field, "coefficient from another field");
        match self.kind {
            FormKind::Homogeneous => assert_eq!(m.degree(), self.degree, "inhomogeneous term"),
            FormKind::Affine => assert!(m.degree() <= self.degree, "term exceeds degree bound"),
        }
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Form {
        let mut out = Form::zero(self.field, self.n_vars, self.degree, self.kind);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.n_vars, other.n_vars);
        assert_eq!(self.kind, other.kind);
        if self.kind == FormKind::Homogeneous {
            assert_eq!(self.degree, other.degree, "adding forms of different degree");
        }
        let mut out = self.clone();
        out.degree = self.degree.max(other.degree);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Form) -> Form {
        assert_eq!(self.n_vars, other.n_vars);
        assert_eq!(self.kind, other.kind);
        let mut out = Form::zero(self.field, self.n_vars, self.degree + other.degree, self.kind);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Form {
        let mut out = Form::zero(self.field, self.n_vars, self.degree + m.degree(), self.kind);
        for (m1, c) in &self.terms {
            out.terms.insert(m1.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Form {
        let one = Form {
            field: self.field,
            n_vars: self.n_vars,
            degree: 0,
            kind: self.kind,
            terms: BTreeMap::from([(Monomial::one(self.n_vars), self.field.one())]),
        };
        (0..e).fold(one, |acc, _| acc.mul(self))
    }

    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= &x.pow(u64::from(e));
                }
            }
            acc += &t;
        }
        acc
    }

    /// Least total degree of a term, `None` for the zero form.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Largest total degree of a term, `None` for the zero form.
    pub fn actual_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The homogeneous part of degree `k`, as a homogeneous form.
    pub fn homogeneous_part(&self, k: u32) -> Form {
        let mut out = Form::zero(self.field, self.n_vars, k, FormKind::Homogeneous);
        for (m, c) in &self.terms {
            if m.degree() == k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Drops every term of degree `>= m`.
    pub fn truncate_below(&self, m: u32) -> Form {
        let mut out = self.clone();
        out.terms.retain(|mon, _| mon.degree() < m);
        out
    }

    /// Substitutes `x -> A x`: the result is `F(A x)` where `a` is square.
    pub fn linear_substitution(&self, a: &[Vec<FieldElement>]) -> Form {
        assert_eq!(self.kind, FormKind::Homogeneous);
        let n = self.n_vars;
        assert_eq!(a.len(), n);
        let images: Vec<Form> = a.iter().map(|row| Form::linear(self.field, row)).collect();
        let mut out = Form::zero(self.field, n, self.degree, FormKind::Homogeneous);
        for (m, c) in &self.terms {
            let mut t = Form {
                field: self.field,
                n_vars: n,
                degree: 0,
                kind: FormKind::Homogeneous,
                terms: BTreeMap::from([(Monomial::one(n), c.clone())]),
            };
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        out
    }
}

/// `delta_t`: sets `x0 = 1` in a homogeneous form of degree `t`.
pub fn dehomogenize(f: &Form, t: u32) -> Form {
    dehomogenize_at(f, 0, t)
}

/// Sets `x_chart = 1`, giving an affine form of degree at most `t` in the
/// remaining variables (in their original order).
pub fn dehomogenize_at(f: &Form, chart: usize, t: u32) -> Form {
    assert_eq!(f.kind, FormKind::Homogeneous);
    assert_eq!(f.degree, t, "form is not of degree {t}");
    let mut out = Form::zero(f.field, f.n_vars - 1, t, FormKind::Affine);
    for (m, c) in &f.terms {
        let mut e = m.0.clone();
        e.remove(chart);
        out.add_term(Monomial(e), c.clone());
    }
    out
}

/// `eta_t`: multiplies each term by the power of `x0` restoring degree `t`.
pub fn homogenize(f: &Form, t: u32) -> Result<Form> {
    if f.actual_degree().is_some_and(|d| d > t) {
        return Err(Error::Argument(format!(
            "cannot homogenize a polynomial of degree {} to degree {t}",
            f.actual_degree().unwrap_or(0)
        )));
    }
    let mut out = Form::zero(f.field, f.n_vars + 1, t, FormKind::Homogeneous);
    for (m, c) in &f.terms {
        let mut e = Vec::with_capacity(f.n_vars + 1);
        e.push(t - m.degree());
        e.extend_from_slice(&m.0);
        out.add_term(Monomial(e), c.clone());
    }
    Ok(out)
}

/// Chart used for a point: the smallest index with a nonzero coordinate.
pub fn chart_of(coords: &[FieldElement]) -> Result<usize> {
    coords
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidPoint("all coordinates are zero".into()))
}

/// Pascal's triangle up to row `n` computed inside the field.
pub(crate) fn pascal(field: FieldSpec, n: usize) -> Vec<Vec<FieldElement>> {
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![field.one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Expansion of `F` in coordinates centered at `p`.
///
/// Dehomogenizes at the first chart where `p` is nonzero (after scaling that
/// coordinate of `p` to 1) and translates `p` to the origin. `F` lies in
/// `I(p)^m` exactly when every term of the result has degree `>= m`, in any
/// characteristic.
pub fn local_expansion(f: &Form, p: &[FieldElement]) -> Result<Form> {
    assert_eq!(f.kind, FormKind::Homogeneous);
    assert_eq!(p.len(), f.n_vars);
    let chart = chart_of(p)?;
    let scale = p[chart].inv().expect("nonzero");
    let shift: Vec<FieldElement> = p
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != chart)
        .map(|(_, c)| c * &scale)
        .collect();
    let binom = pascal(f.field, f.degree as usize);
    let n = f.n_vars - 1;
    let mut out = Form::zero(f.field, n, f.degree, FormKind::Affine);
    for (m, c) in &f.terms {
        let mut e = m.0.clone();
        e.remove(chart);
        // prod_j (shift_j + u_j)^{e_j}
        let mut partial: Vec<(Vec<u32>, FieldElement)> = vec![(Vec::with_capacity(n), c.clone())];
        for (j, &a) in e.iter().enumerate() {
            let powers: Vec<FieldElement> = (0..=a).map(|k| shift[j].pow(u64::from(k))).collect();
            let mut next = Vec::with_capacity(partial.len() * (a as usize + 1));
            for (exps, coeff) in &partial {
                for b in 0..=a {
                    let w = &binom[a as usize][b as usize] * &powers[(a - b) as usize];
                    if w.is_zero() {
                        continue;
                    }
                    let mut ex = exps.clone();
                    ex.push(b);
                    next.push((ex, coeff * &w));
                }
            }
            partial = next;
        }
        for (ex, coeff) in partial {
            out.add_term(Monomial(ex), coeff);
        }
    }
    Ok(out)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &dyn Fn(usize) -> String) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Box<dyn Fn(usize) -> String> = match self.kind {
            FormKind::Homogeneous => Box::new(|i| format!("x{i}")),
            FormKind::Affine => Box::new(|i| format!("X{}", i + 1)),
        };
        // Highest degree first, then lexicographically descending.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then(b.cmp(a)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative_display();
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = m.degree() == 0;
            if !magnitude.is_one() || constant {
                write!(f, "{magnitude}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            if !constant {
                write_monomial(f, m, &names)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn random_form(rng: &mut ChaCha8Rng, field: FieldSpec, n_vars: usize, t: u32) -> Form {
        let basis = monomial_basis(n_vars, t);
        let coeffs: Vec<FieldElement> = basis
            .iter()
            .map(|_| {
                if rng.gen_bool(0.5) {
                    field.from_i64(rng.gen_range(-5..=5))
                } else {
                    field.zero()
                }
            })
            .collect();
        Form::from_coefficients(field, &basis, &coeffs, FormKind::Homogeneous)
    }

    /// Independent shift: substitutes `X_j = c_j + u_j` through repeated
    /// multiplication of affine forms.
    fn shift_by_multiplication(f: &Form, p: &[FieldElement]) -> Form {
        let chart = chart_of(p).unwrap();
        let s = p[chart].inv().unwrap();
        let n = f.n_vars() - 1;
        let field = f.field();
        let mut out = Form::zero(field, n, f.degree(), FormKind::Affine);
        for (m, c) in f.terms() {
            let mut acc = Form::zero(field, n, 0, FormKind::Affine).add(&{
                let mut one = Form::zero(field, n, 0, FormKind::Affine);
                one.add_term(Monomial::one(n), c.clone());
                one
            });
            let mut j = 0;
            for (i, &e) in m.exponents().iter().enumerate() {
                if i == chart {
                    continue;
                }
                let mut lin = Form::zero(field, n, 1, FormKind::Affine);
                lin.add_term(Monomial::one(n), &p[i] * &s);
                lin.add_term(Monomial::var(n, j), field.one());
                for _ in 0..e {
                    acc = acc.mul(&lin);
                }
                j += 1;
            }
            let mut widened = Form::zero(field, n, f.degree(), FormKind::Affine);
            for (mm, cc) in acc.terms() {
                widened.add_term(mm.clone(), cc.clone());
            }
            out = out.add(&widened);
        }
        out
    }

    #[test]
    fn basis_counts() {
        assert_eq!(monomial_basis(3, 2).len(), 6);
        assert_eq!(monomial_basis(3, 0), vec![Monomial(vec![0, 0, 0])]);
        for n in 0..=4usize {
            for t in 0..=12u32 {
                assert_eq!(
                    monomial_basis(n + 1, t).len() as u64,
                    binom(u64::from(t) + n as u64, n as u64)
                );
                assert_eq!(
                    affine_monomial_basis(n, t).len() as u64,
                    binom(u64::from(t) + n as u64, n as u64)
                );
            }
        }
        let b = monomial_basis(3, 2);
        assert_eq!(b[0], Monomial(vec![2, 0, 0]));
        assert_eq!(b[1], Monomial(vec![1, 1, 0]));
        assert_eq!(b[5], Monomial(vec![0, 0, 2]));
    }

    #[test]
    fn homogenize_examples() {
        let x1 = Form::homogeneous_i64(q(), &[(&[1, 0], 1)]).unwrap();
        let x1 = {
            let mut a = Form::zero(q(), 2, 2, FormKind::Affine);
            for (m, c) in x1.terms() {
                a.add_term(m.clone(), c.clone());
            }
            a
        };
        let h = homogenize(&x1, 2).unwrap();
        assert_eq!(h, Form::homogeneous_i64(q(), &[(&[1, 1, 0], 1)]).unwrap());
        let d = dehomogenize(&h, 2);
        assert_eq!(d.to_string(), "X1");
        assert_eq!(d, x1);
    }

    #[test]
    fn homogenize_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = FieldSpec::prime(101).unwrap();
        for i in 0..200 {
            let t = rng.gen_range(0..6);
            let form = random_form(&mut rng, if i % 2 == 0 { q() } else { f }, 3, t);
            let back = homogenize(&dehomogenize(&form, t), t).unwrap();
            assert_eq!(back, form);
            let aff = dehomogenize(&form, t);
            assert_eq!(dehomogenize(&homogenize(&aff, t).unwrap(), t), aff);
        }
    }

    #[test]
    fn local_expansion_examples() {
        let p = [q().one(), q().zero(), q().zero()];
        let f = Form::homogeneous_i64(q(), &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]).unwrap();
        let e = local_expansion(&f, &p).unwrap();
        assert_eq!(e.to_string(), "-X2^2 + X1");
        assert_eq!(e.order(), Some(1));
        assert_eq!(e, shift_by_multiplication(&f, &p));

        let g = Form::homogeneous_i64(q(), &[(&[0, 1, 1], 1)]).unwrap();
        let e = local_expansion(&g, &p).unwrap();
        assert_eq!(e.to_string(), "X1*X2");
        assert_eq!(e.order(), Some(2));

        let nonvanishing = Form::homogeneous_i64(q(), &[(&[2, 0, 0], 1), (&[0, 1, 1], 3)]).unwrap();
        let e = local_expansion(&nonvanishing, &p).unwrap();
        assert_eq!(e.order(), Some(0));

        let zero = [q().zero(), q().zero(), q().zero()];
        assert!(matches!(local_expansion(&f, &zero), Err(Error::InvalidPoint(_))));
    }

    #[test]
    fn expansion_matches_multiplication_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let f = FieldSpec::prime(7).unwrap();
        for i in 0..60 {
            let field = if i % 2 == 0 { q() } else { f };
            let t = rng.gen_range(0..5);
            let form = random_form(&mut rng, field, 3, t);
            let p: Vec<FieldElement> = loop {
                let p: Vec<_> = (0..3).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect();
                if p.iter().any(|c| !c.is_zero()) {
                    break p;
                }
            };
            assert_eq!(local_expansion(&form, &p).unwrap(), shift_by_multiplication(&form, &p));
        }
    }

    #[test]
    fn order_is_additive_and_expansion_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let field = FieldSpec::prime(10007).unwrap();
        for _ in 0..50 {
            let p: Vec<FieldElement> = (0..3).map(|_| field.from_i64(rng.gen_range(1..50))).collect();
            // Build forms with a guaranteed zero at p: products of lines through p.
            let line_through_p = |rng: &mut ChaCha8Rng| {
                let a = field.from_i64(rng.gen_range(1..50));
                let b = field.from_i64(rng.gen_range(1..50));
                // a x0 + b x1 + c x2 with c chosen so that the line contains p
                let c = -(&(&a * &p[0]) + &(&b * &p[1])) / p[2].clone();
                Form::linear(field, &[a, b, c])
            };
            let k1 = rng.gen_range(0..3);
            let k2 = rng.gen_range(0..3);
            let mut f = random_form(&mut rng, field, 3, 1);
            if f.is_zero() {
                continue;
            }
            for _ in 0..k1 {
                f = f.mul(&line_through_p(&mut rng));
            }
            let mut g = random_form(&mut rng, field, 3, 1);
            if g.is_zero() {
                continue;
            }
            for _ in 0..k2 {
                g = g.mul(&line_through_p(&mut rng));
            }
            let of = local_expansion(&f, &p).unwrap().order().unwrap();
            let og = local_expansion(&g, &p).unwrap().order().unwrap();
            let ofg = local_expansion(&f.mul(&g), &p).unwrap().order().unwrap();
            assert_eq!(ofg, of + og);

            if f.degree() == g.degree() {
                let a = field.from_i64(rng.gen_range(-9..9));
                let b = field.from_i64(rng.gen_range(-9..9));
                let lhs = local_expansion(&f.scale(&a).add(&g.scale(&b)), &p).unwrap();
                let rhs = local_expansion(&f, &p)
                    .unwrap()
                    .scale(&a)
                    .add(&local_expansion(&g, &p).unwrap().scale(&b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
