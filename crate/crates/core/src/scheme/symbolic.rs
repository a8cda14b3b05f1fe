use std::collections::HashMap;

use num_rational::Rational64;

use super::FatPointScheme;
use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::exactlin::SpanBasis;
use crate::ring::{monomial_basis, Form};

/// Bounds on the Waldschmidt constant `γ(I) = lim α(I^(m))/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaldschmidtBracket {
    pub lower: Rational64,
    pub upper: Rational64,
    /// `(m, α(I^(m)))` for `m = 1..=m_max`.
    pub samples: Vec<(u32, u32)>,
    /// `max_m (α(I^(m)) + n - 1)/(n + m - 1)`; conjectural lower bound.
    pub conjectural_lower: Rational64,
}

impl WaldschmidtBracket {
    pub fn ratios(&self) -> Vec<Rational64> {
        self.samples
            .iter()
            .map(|&(m, a)| Rational64::new(i64::from(a), i64::from(m)))
            .collect()
    }
}

/// Computes `α(I^(m))` for `m <= m_max` on the support of `points`, each
/// within `degree_budget`.
pub fn waldschmidt_bracket(
    points: &FatPointScheme,
    m_max: u32,
    degree_budget: u32,
) -> Result<WaldschmidtBracket> {
    if m_max == 0 {
        return Err(Error::Argument("m_max must be at least 1".into()));
    }
    if points.is_empty() {
        return Err(Error::Argument("the point set is empty".into()));
    }
    let n = points.n() as i64;
    let mut samples = Vec::new();
    let mut lower = Rational64::from_integer(0);
    let mut upper: Option<Rational64> = None;
    let mut conj = Rational64::from_integer(0);
    for m in 1..=m_max {
        let z = points.symbolic_power(m)?;
        let a = z.alpha_within(degree_budget).ok_or_else(|| {
            Error::Budget(format!(
                "alpha of symbolic power m = {m} exceeds degree budget {degree_budget}"
            ))
        })?;
        samples.push((m, a));
        let a = i64::from(a);
        let m = i64::from(m);
        let ratio = Rational64::new(a, m);
        upper = Some(upper.map_or(ratio, |u| u.min(ratio)));
        lower = lower.max(Rational64::new(a, n + m - 1));
        conj = conj.max(Rational64::new(a + n - 1, n + m - 1));
    }
    Ok(WaldschmidtBracket {
        lower,
        upper: upper.expect("m_max >= 1"),
        samples,
        conjectural_lower: conj,
    })
}

/// Least `t` with `C(t+2,2) > s C(m+1,2)`: the degree at which `s` points of
/// multiplicity `m` in `P^2` are forced to impose too few conditions.
pub fn virtual_alpha(s: u64, m: u64) -> u64 {
    let need = s * binom(m + 1, 2);
    let mut t = 0;
    while binom(t + 2, 2) <= need {
        t += 1;
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContainmentDirection {
    /// `I^r ⊆ I^(m)`
    OrdinaryInSymbolic,
    /// `I^(m) ⊆ I^r`
    SymbolicInOrdinary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContainmentResult {
    Holds { checked_through: u32 },
    Fails { degree: u32, witness: Form },
}

impl ContainmentResult {
    pub fn holds(&self) -> bool {
        matches!(self, ContainmentResult::Holds { .. })
    }
}

/// Compares `I^(m)` and `I^r` for the radical ideal `I` of the support of
/// `points`. `t_max` defaults to `r * m * #points`.
pub fn containment_test(
    points: &FatPointScheme,
    m: u32,
    r: u32,
    direction: ContainmentDirection,
    t_max: Option<u32>,
) -> Result<ContainmentResult> {
    if m == 0 || r == 0 {
        return Err(Error::Argument("exponents must be positive".into()));
    }
    let support = points.support();
    if support.is_empty() {
        return Err(Error::Argument("the point set is empty".into()));
    }
    let s = support.points().len() as u32;
    let t_max = t_max.unwrap_or(r * m * s);
    let gens = support.minimal_generators(None);
    match direction {
        ContainmentDirection::OrdinaryInSymbolic => {
            ordinary_in_symbolic(&support, &gens, m, r, t_max)
        }
        ContainmentDirection::SymbolicInOrdinary => {
            symbolic_in_ordinary(&support, &gens, m, r, t_max)
        }
    }
}

fn ordinary_in_symbolic(
    support: &FatPointScheme,
    gens: &[Form],
    m: u32,
    r: u32,
    t_max: u32,
) -> Result<ContainmentResult> {
    let target = support.symbolic_power(m)?;
    let mut products: Vec<Form> = Vec::new();
    let mut idx = vec![0usize; r as usize];
    loop {
        let mut p = gens[idx[0]].clone();
        for &i in &idx[1..] {
            p = p.mul(&gens[i]);
        }
        products.push(p);
        // next multiset of size r
        let mut k = idx.len();
        while k > 0 && idx[k - 1] == gens.len() - 1 {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        idx[k - 1] += 1;
        let v = idx[k - 1];
        for j in idx.iter_mut().skip(k) {
            *j = v;
        }
    }
    products.sort_by_key(Form::degree);
    let mut checked = 0;
    for p in products {
        if p.degree() > t_max {
            return Err(Error::Budget(format!(
                "generator products reach degree {} beyond t_max = {t_max}",
                p.degree()
            )));
        }
        if !target.contains(&p) {
            return Ok(ContainmentResult::Fails {
                degree: p.degree(),
                witness: p,
            });
        }
        checked = checked.max(p.degree());
    }
    Ok(ContainmentResult::Holds {
        checked_through: checked,
    })
}

/// Bases of `(I^k)_t`, built as `sum_g g (I^{k-1})_{t - deg g}`.
struct PowerSpans<'a> {
    support: &'a FatPointScheme,
    gens: &'a [Form],
    memo: HashMap<(u32, u32), Vec<Form>>,
}

impl PowerSpans<'_> {
    fn basis(&mut self, k: u32, t: u32) -> Vec<Form> {
        if let Some(b) = self.memo.get(&(k, t)) {
            return b.clone();
        }
        let out = if k == 1 {
            self.support.ideal_basis(t)
        } else {
            let mono = monomial_basis(self.support.n() + 1, t);
            let mut span = SpanBasis::new(self.support.field(), mono.len());
            let mut out = Vec::new();
            for g in self.gens {
                if g.degree() > t {
                    continue;
                }
                for b in self.basis(k - 1, t - g.degree()) {
                    if span.rank() == mono.len() {
                        break;
                    }
                    let f = g.mul(&b);
                    if span.insert(&f.coefficients(&mono)) {
                        out.push(f);
                    }
                }
            }
            out
        };
        self.memo.insert((k, t), out.clone());
        out
    }
}

fn symbolic_in_ordinary(
    support: &FatPointScheme,
    gens: &[Form],
    m: u32,
    r: u32,
    t_max: u32,
) -> Result<ContainmentResult> {
    let sym = support.symbolic_power(m)?;
    // I^(m) is generated in degrees at most m * #points.
    let bound = m * support.points().len() as u32;
    let last = bound.min(t_max);
    let mut spans = PowerSpans {
        support,
        gens,
        memo: HashMap::new(),
    };
    for t in 0..=last {
        let have = sym.ideal_basis(t);
        if have.is_empty() {
            continue;
        }
        let mono = monomial_basis(support.n() + 1, t);
        let mut span = SpanBasis::new(support.field(), mono.len());
        for f in spans.basis(r, t) {
            span.insert(&f.coefficients(&mono));
        }
        if let Some(w) = have.into_iter().find(|f| !span.contains(&f.coefficients(&mono))) {
            return Ok(ContainmentResult::Fails {
                degree: t,
                witness: w,
            });
        }
    }
    if last < bound {
        return Err(Error::Budget(format!(
            "containment undecided through degree {last}; generators may reach {bound}"
        )));
    }
    Ok(ContainmentResult::Holds {
        checked_through: last,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::scheme::ProjectivePoint;

    fn three_points() -> FatPointScheme {
        let f = FieldSpec::prime(32003).unwrap();
        let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|c| ProjectivePoint::from_i64(f, c).unwrap())
            .collect();
        FatPointScheme::reduced(2, f, pts).unwrap()
    }

    #[test]
    fn bracket_for_three_points() {
        let b = waldschmidt_bracket(&three_points(), 2, 20).unwrap();
        assert_eq!(b.samples, vec![(1, 2), (2, 3)]);
        assert_eq!(b.upper, Rational64::new(3, 2));
        assert_eq!(b.lower, Rational64::from_integer(1));
        assert!(b.lower <= b.upper);
    }

    #[test]
    fn budget_names_m() {
        let e = waldschmidt_bracket(&three_points(), 4, 4).unwrap_err();
        assert!(matches!(e, Error::Budget(ref s) if s.contains("m = 3")), "{e}");
    }

    #[test]
    fn containment_three_points() {
        let z = three_points();
        use ContainmentDirection::*;
        assert!(containment_test(&z, 2, 2, OrdinaryInSymbolic, None).unwrap().holds());
        assert!(!containment_test(&z, 3, 2, OrdinaryInSymbolic, None).unwrap().holds());
        match containment_test(&z, 2, 2, SymbolicInOrdinary, None).unwrap() {
            ContainmentResult::Fails { degree, witness } => {
                assert_eq!(degree, 3);
                assert!(z.symbolic_power(2).unwrap().contains(&witness));
            }
            other => panic!("expected failure, got {other:?}"),
        }
        assert!(containment_test(&z, 1, 1, SymbolicInOrdinary, None).unwrap().holds());
    }

    #[test]
    fn virtual_alpha_small() {
        // 9 points of multiplicity 1: C(4,2) = 10 > 9 so t = 3.
        assert_eq!(virtual_alpha(9, 1), 3);
        assert_eq!(virtual_alpha(1, 3), 3);
    }
}
