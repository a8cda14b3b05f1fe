use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ProjectivePoint;
use crate::error::{Error, Result};
use crate::exactlin::ExactMatrix;
use crate::field::{FieldElement, FieldSpec};

/// Smallest prime modulus accepted for random points.
pub const MIN_GENERIC_MODULUS: u64 = 200_000;

const RATIONAL_RANGE: i64 = 1_000_000;
const MAX_ATTEMPTS: usize = 64;

fn random_element(field: FieldSpec, rng: &mut ChaCha8Rng) -> FieldElement {
    match field {
        FieldSpec::Rational => field.from_i64(rng.gen_range(-RATIONAL_RANGE..=RATIONAL_RANGE)),
        FieldSpec::Prime { p } => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn check_field(field: FieldSpec) -> Result<()> {
    field.validate()?;
    match field {
        FieldSpec::Prime { p } if p <= MIN_GENERIC_MODULUS => Err(Error::FieldSize(format!(
            "random points need a prime above {MIN_GENERIC_MODULUS}, got {p}"
        ))),
        _ => Ok(()),
    }
}

/// Whether every `n+1` of the points are linearly independent (for `n = 2`:
/// no three on a line). Subsets of fewer points are always accepted.
pub fn in_linear_general_position(points: &[ProjectivePoint]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let k = first.n() + 1;
    if points.len() < k {
        let m = ExactMatrix::from_rows(
            first.field(),
            k,
            points.iter().map(|p| p.coords().to_vec()).collect(),
        )
        .expect("same length");
        return m.rank() == points.len();
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m = ExactMatrix::from_rows(
            first.field(),
            k,
            idx.iter().map(|&i| points[i].coords().to_vec()).collect(),
        )
        .expect("same length");
        if m.rank() < k {
            return false;
        }
        // next k-subset in lexicographic order
        let mut i = k;
        while i > 0 && idx[i - 1] == points.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `r` seeded random points of `P^n`. Generic with high probability only.
///
/// Draws are repeated until the points are distinct and in linear general
/// position.
pub fn random_generic_points(
    r: usize,
    n: usize,
    field: FieldSpec,
    seed: u64,
) -> Result<Vec<ProjectivePoint>> {
    if r == 0 {
        return Err(Error::Argument("need at least one point".into()));
    }
    if n == 0 {
        return Err(Error::Argument("ambient dimension must be positive".into()));
    }
    check_field(field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut points: Vec<ProjectivePoint> = Vec::with_capacity(r);
        for _ in 0..r {
            let coords: Vec<FieldElement> = (0..=n).map(|_| random_element(field, &mut rng)).collect();
            if let Ok(p) = ProjectivePoint::new(coords) {
                points.push(p);
            }
        }
        if points.len() != r {
            continue;
        }
        let distinct = (0..r).all(|i| (0..i).all(|j| points[i] != points[j]));
        if distinct && in_linear_general_position(&points) {
            return Ok(points);
        }
    }
    Err(Error::Budget(format!(
        "no general-position sample of {r} points after {MAX_ATTEMPTS} draws"
    )))
}

/// `s` random lines in `P^2` and their `C(s,2)` pairwise intersections.
#[derive(Clone, Debug)]
pub struct StarConfiguration {
    pub lines: Vec<Vec<FieldElement>>,
    pub points: Vec<ProjectivePoint>,
}

fn cross(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    vec![
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(a[0].field().zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Lines are drawn until no three are concurrent, so the points are distinct.
pub fn star_configuration(s: usize, field: FieldSpec, seed: u64) -> Result<StarConfiguration> {
    if s < 2 {
        return Err(Error::Argument("a star configuration needs at least two lines".into()));
    }
    field.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let lines: Vec<Vec<FieldElement>> = (0..s)
            .map(|_| (0..3).map(|_| random_element(field, &mut rng)).collect())
            .collect();
        let mut points = Vec::new();
        for i in 0..s {
            for j in i + 1..s {
                let Ok(p) = ProjectivePoint::new(cross(&lines[i], &lines[j])) else {
                    continue 'attempt;
                };
                for (k, l) in lines.iter().enumerate() {
                    if k != i && k != j && dot(l, p.coords()).is_zero() {
                        continue 'attempt;
                    }
                }
                points.push(p);
            }
        }
        return Ok(StarConfiguration { lines, points });
    }
    Err(Error::Budget(format!(
        "no star configuration of {s} lines after {MAX_ATTEMPTS} draws"
    )))
}
