//! The Picard lattice of the blowup of `P^2` at `r` points.
//!
//! A class `d e0 - m1 e1 - ... - mr er` is stored as `(d; m1, ..., mr)`.
//! The Weyl group is generated by `s0`, the reflection in
//! `e0 - e1 - e2 - e3`, and `s1, ..., s_{r-1}` where `s_i` swaps `e_i` and
//! `e_{i+1}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::binomial::choose2_poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivClass {
    pub d: i64,
    pub m: Vec<i64>,
}

impl DivClass {
    pub fn new(d: i64, m: Vec<i64>) -> Self {
        DivClass { d, m }
    }

    pub fn r(&self) -> usize {
        self.m.len()
    }

    /// `e0`.
    pub fn line(r: usize) -> Self {
        DivClass::new(1, vec![0; r])
    }

    /// `e_i` for `1 <= i <= r`.
    pub fn exceptional(r: usize, i: usize) -> Self {
        assert!((1..=r).contains(&i), "e_{i} does not exist for r = {r}");
        let mut m = vec![0; r];
        m[i - 1] = -1;
        DivClass::new(0, m)
    }

    /// `K = -3 e0 + e1 + ... + er`.
    pub fn canonical(r: usize) -> Self {
        DivClass::new(-3, vec![-1; r])
    }

    pub fn padded(&self, r: usize) -> Self {
        let mut m = self.m.clone();
        if m.len() < r {
            m.resize(r, 0);
        }
        DivClass::new(self.d, m)
    }

    pub fn scale(&self, k: i64) -> Self {
        DivClass::new(k * self.d, self.m.iter().map(|x| k * x).collect())
    }

    /// `2e0-6e1-2e2` style, omitting zero coefficients.
    pub fn basis_string(&self) -> String {
        let coeffs = std::iter::once((0, self.d)).chain(self.m.iter().enumerate().map(|(i, &x)| (i + 1, -x)));
        let mut out = String::new();
        for (i, c) in coeffs {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("e{i}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(i64::to_string).collect();
        write!(f, "{};{}", self.d, m.join(","))
    }
}

impl FromStr for DivClass {
    type Err = Error;

    /// `"d;m1,m2,..."`; `"d"` or `"d;"` is a class with `r = 0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (d, rest) = s.split_once(';').unwrap_or((s, ""));
        let d = d
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::parse("class", format!("degree {d:?}: {e}")))?;
        let m = rest
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<i64>()
                    .map_err(|e| Error::parse("class", format!("multiplicity {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DivClass::new(d, m))
    }
}

/// `C.D = c0 d0 - c1 d1 - ... - cr dr`.
pub fn pairing(c: &DivClass, d: &DivClass) -> Result<i64> {
    if c.r() != d.r() {
        return Err(Error::Argument(format!(
            "classes on blowups at {} and {} points",
            c.r(),
            d.r()
        )));
    }
    Ok(c.d * d.d - c.m.iter().zip(&d.m).map(|(a, b)| a * b).sum::<i64>())
}

/// Applies `s_i`.
pub fn weyl_apply(i: usize, x: &DivClass) -> Result<DivClass> {
    let r = x.r();
    if i == 0 {
        if r < 3 {
            return Err(Error::Argument("s0 needs at least three points".into()));
        }
        let k = x.d - x.m[0] - x.m[1] - x.m[2];
        let mut y = x.clone();
        y.d += k;
        for v in &mut y.m[..3] {
            *v += k;
        }
        Ok(y)
    } else if i < r {
        let mut y = x.clone();
        y.m.swap(i - 1, i);
        Ok(y)
    } else {
        Err(Error::Argument(format!("generator s{i} does not exist for r = {r}")))
    }
}

/// Applies `word` left to right.
pub fn weyl_word(word: &[usize], x: &DivClass) -> Result<DivClass> {
    word.iter().try_fold(x.clone(), |acc, &i| weyl_apply(i, &acc))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: DivClass,
    /// Generator indices in the order they were applied.
    pub word: Vec<usize>,
    /// The class after each `s0`, sorted beforehand.
    pub trace: Vec<DivClass>,
}

/// Sorts multiplicities descending by adjacent swaps, then applies `s0`
/// while the three largest exceed `d`. Stops as soon as `d < 0`.
pub fn cremona_reduce(x: &DivClass) -> Reduction {
    let mut c = x.clone();
    let mut word = Vec::new();
    let mut trace = Vec::new();
    if c.r() < 3 {
        return Reduction {
            reduced: c,
            word,
            trace,
        };
    }
    loop {
        // bubble sort, recording s_i for positions i, i+1 (1-based)
        let r = c.r();
        loop {
            let mut swapped = false;
            for j in 0..r - 1 {
                if c.m[j] < c.m[j + 1] {
                    c.m.swap(j, j + 1);
                    word.push(j + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        if c.d < 0 || c.m[0] + c.m[1] + c.m[2] <= c.d {
            break;
        }
        c = weyl_apply(0, &c).expect("r >= 3");
        word.push(0);
        trace.push(c.clone());
    }
    Reduction {
        reduced: c,
        word,
        trace,
    }
}

/// `C(d+2,2) - sum C(m_i+1,2)`, with `C(k,2) = k(k-1)/2` for all `k`;
/// equal to `(F^2 - K.F)/2 + 1`.
pub fn expected_dimension(x: &DivClass) -> i64 {
    choose2_poly(x.d + 2) - x.m.iter().map(|&m| choose2_poly(m + 1)).sum::<i64>()
}

/// Largest `r` for which the predicted values are proven.
pub const PROVEN_MAX_POINTS: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShghValue {
    pub value: u64,
    /// Set when `r > 9`, where the prediction is only conjectural.
    pub conjectural: bool,
    /// Reduce-and-strip rounds performed.
    pub passes: usize,
    /// The final class, `None` when a reduction reached `d < 0`.
    pub reduced: Option<DivClass>,
}

/// The predicted `dim I(m1 p1 + ... + mr pr)_t` for generic points.
pub fn shgh_hilbert(m: &[i64], t: i64, allow_conjectural: bool) -> Result<ShghValue> {
    let conjectural = m.len() > PROVEN_MAX_POINTS;
    if conjectural && !allow_conjectural {
        return Err(Error::Scope(format!(
            "{} points exceeds the proven range r <= {PROVEN_MAX_POINTS}",
            m.len()
        )));
    }
    let mut c = DivClass::new(t, m.iter().map(|&x| x.max(0)).collect()).padded(3);
    let mut passes = 0;
    loop {
        passes += 1;
        let red = cremona_reduce(&c).reduced;
        if red.d < 0 {
            return Ok(ShghValue {
                value: 0,
                conjectural,
                passes,
                reduced: None,
            });
        }
        let stripped = DivClass::new(red.d, red.m.iter().map(|&x| x.max(0)).collect());
        if stripped == red {
            return Ok(ShghValue {
                value: expected_dimension(&red).max(0) as u64,
                conjectural,
                passes,
                reduced: Some(red),
            });
        }
        c = stripped;
    }
}

/// Least `t` with a positive predicted value.
pub fn shgh_alpha(m: &[i64], allow_conjectural: bool) -> Result<u64> {
    let bound: i64 = m.iter().map(|&x| x.max(0)).sum::<i64>().max(1);
    for t in 0..=bound {
        if shgh_hilbert(m, t, allow_conjectural)?.value > 0 {
            return Ok(t as u64);
        }
    }
    Err(Error::Invariant(format!("no positive prediction through degree {bound}")))
}

fn is_reduced_exceptional(c: &DivClass) -> bool {
    let r = c.r();
    c.d == 0 && c.m[r - 1] == -1 && c.m[..r - 1].iter().all(|&x| x == 0)
}

/// `C^2 = C.K = -1` and `C` reduces to `e_r`, up to permutation.
pub fn exceptional_test(c: &DivClass) -> bool {
    if c.r() == 0 {
        return false;
    }
    let k = DivClass::canonical(c.r());
    if pairing(c, c) != Ok(-1) || pairing(c, &k) != Ok(-1) {
        return false;
    }
    is_reduced_exceptional(&cremona_reduce(&c.padded(3)).reduced)
}

/// The orbit of `e1` under the Weyl group, sorted. Finite only for `r <= 8`.
pub fn enumerate_exceptional(r: usize) -> Result<Vec<DivClass>> {
    if r == 0 {
        return Err(Error::Argument("need at least one point".into()));
    }
    if r > 8 {
        return Err(Error::InfiniteOrbit(r));
    }
    let big = r.max(3);
    let mut seen: BTreeSet<DivClass> = BTreeSet::new();
    let mut queue: VecDeque<DivClass> = (1..=big).map(|i| DivClass::exceptional(big, i)).collect();
    while let Some(c) = queue.pop_front() {
        if !seen.insert(c.clone()) {
            continue;
        }
        for i in 0..big {
            let y = weyl_apply(i, &c).expect("valid generator");
            if !seen.contains(&y) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen
        .into_iter()
        .filter(|c| c.m[r..].iter().all(|&x| x == 0))
        .map(|mut c| {
            c.m.truncate(r);
            c
        })
        .collect())
}
