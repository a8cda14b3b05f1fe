use fatpoints::bezout::{
    bezout_sum_check, common_tangent, common_zeros, intersection_multiplicity_traced, multiplicity_at,
    tangent_cone, MAX_SCAN_PRIME,
};
use fatpoints::cht::{
    cht_lower_bound, cht_upper_bound, configuration_from_vector, diag, reduction_vector_of,
    ReductionVector,
};
use fatpoints::io::{Envelope, SchemeInput};
use fatpoints::macaulay::{classify_sequence, d_binomial_expansion, gmr_lift, SequenceKind};
use fatpoints::picard::{
    cremona_reduce, enumerate_exceptional, expected_dimension, pairing, shgh_alpha, shgh_hilbert,
    weyl_word, DivClass,
};
use fatpoints::scheme::{containment_test, waldschmidt_bracket, ContainmentDirection, ContainmentResult};
use fatpoints::{Error, FieldSpec, Form, Result};

use crate::inputs::{load_scheme, parse_class, parse_field, parse_list, parse_point};
use crate::output::Report;
use crate::{Cli, Command, Direction};

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn monomial(a1: u32, a2: u32) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x1", a1), ("x2", a2)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn curves(input: &SchemeInput, need: usize) -> Result<&[Form]> {
    if input.curves.len() < need {
        return Err(Error::parse(
            "curves",
            format!("expected at least {need} curves, found {}", input.curves.len()),
        ));
    }
    Ok(&input.curves)
}

fn int_list(s: &str, name: &str) -> Result<Vec<i64>> {
    parse_list(s, name)
}

pub fn run(cli: &Cli) -> Result<Report> {
    let field = parse_field(&cli.field)?;
    let scheme = |s: &str| load_scheme(s, field, cli.seed);
    let mut r = Report::new();
    match &cli.command {
        Command::Hilbert { scheme: s } => {
            let z = scheme(s)?.scheme;
            let h = z.hilbert_function()?;
            let last = h.stabilization_index() + 1;
            let rows = (0..=last)
                .map(|t| {
                    vec![
                        t.to_string(),
                        z.hilbert_ideal(t as u32).to_string(),
                        h.quotient(t).to_string(),
                    ]
                })
                .collect();
            r.table(&["t", "H_I", "H_R/I"], rows);
            r.field("degree", z.degree());
            r.field("H_R/I", format!("{} (stable)", join(h.values())));
        }
        Command::Alpha { scheme: s, budget } => {
            let z = scheme(s)?.scheme;
            match budget {
                Some(b) => {
                    let a = z.alpha_within(*b).ok_or_else(|| {
                        Error::Budget(format!("no form in I(Z) through degree {b}"))
                    })?;
                    r.field("alpha", a);
                }
                None => {
                    let a = z.alpha();
                    r.field("alpha", a.degree);
                    if a.empty_scheme {
                        r.field("warning", "empty scheme");
                    }
                }
            }
        }
        Command::Waldschmidt { scheme: s, mmax, budget } => {
            let z = scheme(s)?.scheme;
            let budget = budget.unwrap_or(mmax * z.points().len() as u32);
            let b = waldschmidt_bracket(&z, *mmax, budget)?;
            let rows = b
                .samples
                .iter()
                .zip(b.ratios())
                .map(|(&(m, a), q)| vec![m.to_string(), a.to_string(), q.to_string()])
                .collect();
            r.table(&["m", "alpha", "ratio"], rows);
            r.field("lower", b.lower).field("upper", b.upper);
            r.field("conjectural_lower", b.conjectural_lower);
        }
        Command::Generators { scheme: s, max_degree } => {
            let z = scheme(s)?.scheme;
            let rows = z
                .minimal_generators(*max_degree)
                .iter()
                .map(|g| vec![g.degree().to_string(), g.to_string()])
                .collect();
            r.table(&["degree", "generator"], rows);
        }
        Command::Containment { scheme: s, m, r: power, direction, tmax } => {
            let z = scheme(s)?.scheme;
            let dir = match direction {
                Direction::OrdinaryInSymbolic => ContainmentDirection::OrdinaryInSymbolic,
                Direction::SymbolicInOrdinary => ContainmentDirection::SymbolicInOrdinary,
            };
            match containment_test(&z, *m, *power, dir, *tmax)? {
                ContainmentResult::Holds { checked_through } => {
                    r.field("holds", true).field("checked_through", checked_through);
                }
                ContainmentResult::Fails { degree, witness } => {
                    r.field("holds", false).field("degree", degree).field("witness", witness);
                }
            }
        }
        Command::Diag { vector } => {
            let d = ReductionVector::new(parse_list(vector, "vector")?);
            r.field("diag", join(&diag(&d)));
            r.picture(d.dot_diagram());
        }
        Command::ChtBounds { vector, t } => {
            let d = ReductionVector::new(parse_list(vector, "vector")?);
            let ts: Vec<u32> = match t {
                Some(t) => vec![*t],
                None => (0..=d.entries().first().copied().unwrap_or(0) + d.len() as u32).collect(),
            };
            let rows = ts
                .iter()
                .map(|&t| {
                    let lo = cht_lower_bound(&d, t);
                    vec![
                        t.to_string(),
                        lo.value.to_string(),
                        lo.exact.to_string(),
                        cht_upper_bound(&d, t).to_string(),
                    ]
                })
                .collect();
            r.table(&["t", "lower", "lower_exact", "upper"], rows);
        }
        Command::Reduction { scheme: s, lines } => {
            let mut input = scheme(s)?;
            if let Some(text) = lines {
                let env = Envelope {
                    field: input.scheme.field(),
                    n: input.scheme.n(),
                    points: Vec::new(),
                    multiplicities: None,
                    curves: Vec::new(),
                    lines: serde_json::from_str(text).map_err(|e| Error::parse("--lines", e.to_string()))?,
                };
                input.lines = env.parse()?.lines;
            }
            if input.lines.is_empty() {
                return Err(Error::parse("lines", "no lines given"));
            }
            let tr = reduction_vector_of(&input.scheme, &input.lines)?;
            let rows = tr
                .vector
                .entries()
                .iter()
                .zip(&tr.residuals[1..])
                .zip(&input.lines)
                .enumerate()
                .map(|(i, ((d, res), l))| vec![(i + 1).to_string(), l.to_string(), d.to_string(), join(res)])
                .collect();
            r.table(&["step", "line", "d_i", "residual"], rows);
            r.field("d", &tr.vector);
        }
        Command::Realize { dvector, json } => {
            let d = ReductionVector::new(parse_list(dvector, "--dvector")?);
            let z = configuration_from_vector(&d, field)?;
            if *json {
                r.raw(Envelope::from_scheme(&z).to_json());
            } else {
                let rows = z
                    .points()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| vec![i.to_string(), p.to_string()])
                    .collect();
                r.table(&["index", "point"], rows);
                r.field("H_R/I", format!("{} (stable)", join(z.hilbert_function()?.values())));
            }
        }
        Command::Macaulay { h, d } => {
            let e = d_binomial_expansion(*h, *d)?;
            r.field("expansion", &e).field("growth", e.growth());
        }
        Command::Osequence { sequence } => {
            let c = classify_sequence(&int_list(sequence, "sequence")?);
            let kind = match c.kind {
                SequenceKind::NotO => "not-O",
                SequenceKind::O => "O",
                SequenceKind::DifferentiableO => "differentiable-O",
            };
            r.field("kind", kind).field("zero_dimensional", c.zero_dimensional);
            r.field("delta", join(&c.delta));
            if let Some(v) = c.first_violation {
                r.field("first_violation", v);
            }
        }
        Command::Gmr { sequence } => {
            let g = gmr_lift(&int_list(sequence, "--sequence")?, field)?;
            let j: Vec<String> = g.monomial_generators.iter().map(|&(a, b)| monomial(a, b)).collect();
            r.field("J", j.join(", "));
            r.field("rows", join(&g.row_lengths));
            let rows = g
                .monomial_generators
                .iter()
                .zip(&g.generators)
                .map(|(&(a, b), f)| vec![monomial(a, b), f.to_string()])
                .collect();
            r.table(&["monomial", "lifted"], rows);
            r.field("points", g.points.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
            r.picture(g.staircase());
        }
        Command::Mult { scheme: s, point, curve } => {
            let input = scheme(s)?;
            let f = curves(&input, curve + 1)?[*curve].clone();
            let p = parse_point(point, input.scheme.field(), 2)?;
            r.field("mult", multiplicity_at(&f, &p)?);
        }
        Command::Tangent { scheme: s, point } => {
            let input = scheme(s)?;
            let cs = curves(&input, 1)?;
            let p = parse_point(point, input.scheme.field(), 2)?;
            let rows = cs
                .iter()
                .enumerate()
                .map(|(i, f)| Ok(vec![i.to_string(), tangent_cone(f, &p)?.to_string()]))
                .collect::<Result<Vec<_>>>()?;
            r.table(&["curve", "cone"], rows);
            if cs.len() >= 2 && p.lies_on(&cs[0]) && p.lies_on(&cs[1]) {
                r.field("common_tangent", common_tangent(&cs[0], &cs[1], &p)?);
            }
        }
        Command::Intmult { scheme: s, point } => {
            let input = scheme(s)?;
            let cs = curves(&input, 2)?;
            let p = parse_point(point, input.scheme.field(), 2)?;
            let (v, trace) = intersection_multiplicity_traced(&cs[0], &cs[1], &p)?;
            r.field("I_p", v).field("lambda", join(&trace.lambdas));
        }
        Command::Bezout { scheme: s } => {
            let input = scheme(s)?;
            let cs = curves(&input, 2)?;
            let candidates = if !input.scheme.points().is_empty() {
                input.scheme.points().to_vec()
            } else {
                match input.scheme.field() {
                    FieldSpec::Prime { p } if p <= MAX_SCAN_PRIME => common_zeros(&cs[0], &cs[1])?,
                    _ => {
                        return Err(Error::parse(
                            "points",
                            format!("list candidate points, or use a prime field with p <= {MAX_SCAN_PRIME}"),
                        ))
                    }
                }
            };
            let check = bezout_sum_check(&cs[0], &cs[1], &candidates)?;
            let rows = check
                .multiplicities
                .iter()
                .map(|(p, v)| vec![p.to_string(), v.to_string()])
                .collect();
            r.table(&["point", "I_p"], rows);
            r.field("total", check.total).field("expected", check.expected);
            r.field("complete", check.complete);
        }
        Command::Pair { a, b } => {
            let (a, b) = (parse_class(a, "a")?, parse_class(b, "b")?);
            r.field("pairing", pairing(&a, &b)?);
        }
        Command::Weyl { word, class } => {
            let x = parse_class(class, "class")?;
            let w: Vec<usize> = parse_list(word, "--word")?;
            let y = weyl_word(&w, &x)?;
            r.field("class", &y).field("basis", y.basis_string());
        }
        Command::Reduce { class } => {
            let x = parse_class(class, "class")?;
            let red = cremona_reduce(&x);
            let replay = weyl_word(&red.word, &x)?;
            if replay != red.reduced {
                return Err(Error::Invariant(format!("word replay gives {replay}, not {}", red.reduced)));
            }
            let rows = red
                .trace
                .iter()
                .enumerate()
                .map(|(i, c)| vec![(i + 1).to_string(), c.to_string()])
                .collect();
            r.table(&["step", "class"], rows);
            r.field("word", red.word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" "));
            r.field("reduced", red.reduced.basis_string());
        }
        Command::Expdim { class } => {
            r.field("expdim", expected_dimension(&parse_class(class, "class")?));
        }
        Command::Shgh { multiplicities, t, conjectural } => {
            let m = int_list(multiplicities, "multiplicities")?;
            let v = shgh_hilbert(&m, *t, *conjectural)?;
            r.field("H_I", v.value).field("conjectural", v.conjectural).field("passes", v.passes);
            if let Some(c) = &v.reduced {
                r.field("reduced", c);
            }
        }
        Command::ShghAlpha { multiplicities, conjectural } => {
            let m = int_list(multiplicities, "multiplicities")?;
            r.field("alpha", shgh_alpha(&m, *conjectural)?);
        }
        Command::Exceptional { r: n } => {
            let classes = enumerate_exceptional(*n)?;
            let rows = classes
                .iter()
                .map(|c: &DivClass| vec![c.to_string(), c.basis_string()])
                .collect();
            r.table(&["class", "basis"], rows);
            r.field("count", classes.len());
        }
    }
    Ok(r)
}
