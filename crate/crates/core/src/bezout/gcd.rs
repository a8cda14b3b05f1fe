//! Polynomial gcds in `K[X]` and `K[X][Y]`.

use crate::field::{FieldElement, FieldSpec};

/// Dense coefficients of `X^0, X^1, ...`, without trailing zeros.
pub(crate) type UPoly = Vec<FieldElement>;

/// Dense coefficients of `Y^0, Y^1, ...` in `K[X]`, without trailing zeros.
pub(crate) type BPoly = Vec<UPoly>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(FieldElement::is_zero) {
        p.pop();
    }
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn u_sub(a: &UPoly, b: &UPoly, field: FieldSpec) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
            &x - &y
        })
        .collect();
    trim(&mut out);
    out
}

fn u_mul(a: &UPoly, b: &UPoly, field: FieldSpec) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn u_divrem(a: &UPoly, b: &UPoly, field: FieldSpec) -> (UPoly, UPoly) {
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("trimmed");
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![field.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") * &lead_inv;
        for (j, y) in b.iter().enumerate() {
            let t = &c * y;
            r[shift + j] -= &t;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd; zero when both inputs are zero.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly, field: FieldSpec) -> UPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = u_divrem(&a, &b, field);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last() {
        let inv = lead.inv().expect("trimmed");
        for c in &mut a {
            *c = &*c * &inv;
        }
    }
    a
}

fn content(p: &BPoly, field: FieldSpec) -> UPoly {
    p.iter().fold(Vec::new(), |g, c| u_gcd(&g, c, field))
}

fn primitive_part(p: &BPoly, field: FieldSpec) -> BPoly {
    let c = content(p, field);
    if c.is_empty() {
        return Vec::new();
    }
    p.iter().map(|x| u_divrem(x, &c, field).0).collect()
}

/// `lc(b)^k a mod b` in `Y`, as a pseudo-remainder.
fn pseudo_rem(a: &BPoly, b: &BPoly, field: FieldSpec) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().expect("nonempty").clone();
        for c in r.iter_mut() {
            *c = u_mul(c, &lb, field);
        }
        for (j, y) in b.iter().enumerate() {
            let t = u_mul(&lr, y, field);
            r[shift + j] = u_sub(&r[shift + j], &t, field);
        }
        b_trim(&mut r);
    }
    r
}

/// Gcd in `K[X][Y]` up to a unit, via primitive pseudo-remainder sequences.
pub(crate) fn bivariate_gcd(a: &BPoly, b: &BPoly, field: FieldSpec) -> BPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = u_gcd(&content(a, field), &content(b, field), field);
    let (mut p, mut q) = (primitive_part(a, field), primitive_part(b, field));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() == 1 {
            // q is a nonzero element of K[X] and primitive, hence a unit
            break vec![vec![field.one()]];
        }
        let r = pseudo_rem(&p, &q, field);
        if r.is_empty() {
            break q;
        }
        p = q;
        q = primitive_part(&r, field);
    };
    g.iter().map(|x| u_mul(x, &c, field)).collect()
}
