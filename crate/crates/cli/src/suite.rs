//! Reproductions of the standard worked examples, each reduced to a
//! yes/no check.

use serde::{Deserialize, Serialize};

use convdiff::boolean::{
    boolean_differentials_at, hypercube, scalar_differentiability_census, solve_matrix_equation, BoolFunction,
    BoolPoint, GF2Matrix,
};
use convdiff::cayley::{diff_space_with_limits, CayleyGraph};
use convdiff::differential::{
    chain_rule_check, differentials_at, integers_differentiable_at, DifferentialQuery, IntegerWindow,
};
use convdiff::group::GroupKind;
use convdiff::integers::{integers_diff_space, integers_plane_diff_space, IntegerHom};
use convdiff::space::{box_product, is_continuous_at, pentacle, space_properties, FiniteMap};
use convdiff::{Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Scenario = fn(&Limits) -> Result<(bool, String)>;

const PAPER: &[(&str, Scenario)] = &[
    ("pentacle-neighborhoods", pentacle_neighborhoods),
    ("s3-generated-by-r-t", s3_generators),
    ("integer-line-criterion", integer_line),
    ("integer-plane-four-maps", integer_plane),
    ("diagonal-nowhere-differentiable", diagonal),
    ("hypercube-b3-neighborhoods", hypercube_three),
    ("boolean-worked-matrix-equation", worked_matrix_equation),
    ("boolean-worked-differential-f", worked_f),
    ("boolean-worked-differential-g", worked_g),
    ("boolean-chain-rule-composite", worked_chain_rule),
    ("boolean-discontinuous-differentiable", bad_example),
    ("boolean-scalar-corollary", scalar_corollary),
];

pub fn suite_names() -> &'static [&'static str] {
    &["paper"]
}

pub fn run_suite(name: &str, limits: &Limits) -> Option<Vec<ScenarioResult>> {
    if name != "paper" {
        return None;
    }
    Some(
        PAPER
            .iter()
            .map(|(name, check)| {
                let (passed, detail) = check(limits).unwrap_or_else(|e| (false, format!("error: {e}")));
                ScenarioResult {
                    name: name.to_string(),
                    passed,
                    detail,
                }
            })
            .collect(),
    )
}

fn cayley(kind: GroupKind, limits: &Limits) -> Result<CayleyGraph> {
    let g = kind.build(limits)?;
    CayleyGraph::from_generators(g, &kind.default_generators())
}

fn pentacle_neighborhoods(_: &Limits) -> Result<(bool, String)> {
    let p = pentacle();
    let shape = (0..5).all(|v| p.nbhd(v).iter().copied().eq((0..5).filter(|&u| u != (v + 3) % 5)));
    let props = space_properties(&p);
    Ok((
        shape && props.is_t0 && !props.is_topological,
        format!("T0={} topological={}", props.is_t0, props.is_topological),
    ))
}

fn s3_generators(limits: &Limits) -> Result<(bool, String)> {
    let s3 = GroupKind::Symmetric(3).build(limits)?;
    let span = s3.closure([1, 3]).len();
    let valid = s3.validate_generating_set(&[1, 3]).is_ok();
    Ok((span == 6 && valid, format!("closure size {span}")))
}

fn integer_line(_: &Limits) -> Result<(bool, String)> {
    let mut checked = 0;
    for n in -1..=1i64 {
        for a in -2..=2 {
            for b in -2..=2 {
                let w = IntegerWindow {
                    start: n,
                    values: vec![a, b],
                };
                let got = integers_differentiable_at(&w, n)?;
                let mut expected = Vec::new();
                if a == 0 && b == 0 {
                    expected.push(IntegerHom::ZeroMap);
                }
                if a == n && b == n + 1 {
                    expected.push(IntegerHom::IdentityMap);
                }
                if got != expected {
                    return Ok((false, format!("n={n} f(n)={a} f(n+1)={b}: {got:?}")));
                }
                checked += 1;
            }
        }
    }
    let space = integers_diff_space();
    Ok((space.len() == 2, format!("{checked} windows")))
}

fn integer_plane(_: &Limits) -> Result<(bool, String)> {
    let maps = integers_plane_diff_space();
    Ok((maps.len() == 4, format!("{} maps", maps.len())))
}

fn diagonal(limits: &Limits) -> Result<(bool, String)> {
    for kind in [GroupKind::Cyclic(6), GroupKind::Symmetric(3), GroupKind::Z2Power(2)] {
        let c = cayley(kind.clone(), limits)?;
        let square = cayley(
            GroupKind::DirectSum(Box::new(kind.clone()), Box::new(kind.clone())),
            limits,
        )?;
        if *square.digraph() != box_product(c.digraph(), c.digraph())? {
            return Ok((false, format!("{kind}: Cayley graph of the sum is not the box product")));
        }
        let ds = diff_space_with_limits(&c, &square, limits)?;
        let diag = FiniteMap::diagonal(c.order());
        for a in 0..c.order() {
            if is_continuous_at(c.digraph(), square.digraph(), &diag, a) {
                return Ok((false, format!("{kind}: continuous at {a}")));
            }
            if !differentials_at(&DifferentialQuery::new(&ds, &diag, a)?).is_empty() {
                return Ok((false, format!("{kind}: differentiable at {a}")));
            }
        }
    }
    Ok((true, "Z6, S3, B2".into()))
}

fn hypercube_three(_: &Limits) -> Result<(bool, String)> {
    let b3 = hypercube(3)?;
    let ok = (0..8)
        .all(|v| b3.digraph().nbhd(v).len() == 4 && b3.digraph().nbhd(v).iter().all(|&u| (u ^ v).count_ones() <= 1));
    Ok((ok, "|N(b)| = 4".into()))
}

fn worked_function() -> Result<BoolFunction> {
    BoolFunction::from_poly("(p, (1+p)(1+q), q)", 2)
}

fn worked_matrix() -> Result<GF2Matrix> {
    GF2Matrix::from_rows(&[vec![1, 0], vec![0, 0], vec![0, 1]])
}

fn worked_matrix_equation(_: &Limits) -> Result<(bool, String)> {
    let f = worked_function()?;
    let m = worked_matrix()?;
    let at = BoolPoint::parse("(1,1)")?;
    let image = m.apply(at)?;
    let solved = solve_matrix_equation(&f, at)?;
    Ok((
        image == f.apply(at)? && image.to_string() == "(1,0,1)" && solved == vec![m],
        format!("{} solution(s)", solved.len()),
    ))
}

fn worked_f(_: &Limits) -> Result<(bool, String)> {
    let diffs = boolean_differentials_at(&worked_function()?, BoolPoint::parse("(1,1)")?)?;
    let m = worked_matrix()?;
    Ok((diffs == vec![m.clone()], m.formula()))
}

fn worked_g_function() -> Result<BoolFunction> {
    BoolFunction::from_poly("((1+q)(1+p+pr), (1+r)q)", 3)
}

fn worked_g(_: &Limits) -> Result<(bool, String)> {
    let diffs = boolean_differentials_at(&worked_g_function()?, BoolPoint::parse("(1,0,1)")?)?;
    let target = GF2Matrix::from_rows(&[vec![0, 1, 1], vec![0, 0, 0]])?;
    Ok((diffs.contains(&target), format!("{} differentials", diffs.len())))
}

fn worked_chain_rule(limits: &Limits) -> Result<(bool, String)> {
    let (b2, b3) = (hypercube(2)?, hypercube(3)?);
    let inner = diff_space_with_limits(&b2, &b3, limits)?;
    let outer = diff_space_with_limits(&b3, &b2, limits)?;
    let composite = diff_space_with_limits(&b2, &b2, limits)?;
    let f = worked_function()?.to_finite_map();
    let g = worked_g_function()?.to_finite_map();
    let a = BoolPoint::parse("(1,1)")?.index();
    let report = chain_rule_check(inner.space(), outer.space(), composite.space(), &f, &g, a)?;
    let q0 = GF2Matrix::from_rows(&[vec![0, 1], vec![0, 0]])?.to_finite_map();
    let gf = g.after(&f)?;
    let diffs = differentials_at(&DifferentialQuery::new(&composite, &gf, a)?);
    let q0_index = composite.index_of(&q0);
    let found = q0_index.is_some_and(|i| diffs.contains(&i));
    Ok((
        report.holds && report.checked > 0 && found,
        format!("{} composites checked", report.checked),
    ))
}

fn bad_example(_: &Limits) -> Result<(bool, String)> {
    let f = BoolFunction::from_poly("(p(1+q)(1+r), pr(1+q), r(1+p)(1+q))", 3)?;
    let b = BoolPoint::parse("(1,0,1)")?;
    let diffs = boolean_differentials_at(&f, b)?;
    let cube = hypercube(3)?;
    let continuous = is_continuous_at(cube.digraph(), cube.digraph(), &f.to_finite_map(), b.index());
    Ok((
        !diffs.is_empty() && !continuous,
        format!("{} differentials, continuous={continuous}", diffs.len()),
    ))
}

fn scalar_corollary(_: &Limits) -> Result<(bool, String)> {
    let f = BoolFunction::from_poly("pq+r", 3)?;
    let report = scalar_differentiability_census(&f)?;
    let everywhere = report.differentiable.iter().all(|&d| d);
    Ok((report.matches && everywhere, "f = pq+r".into()))
}
