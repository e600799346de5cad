use std::time::Instant;

use serde::de::DeserializeOwned;
use triop_core::cybe::{coadjoint_double, verify_cybe_catalogue, yang_baxter_bracket_with, SolutionCheck};
use triop_core::io::{read_json, AlgebraDoc, IoError, OperatorDoc, PreLieDoc, TensorDoc};
use triop_core::ooperator::{
    catalogue, check_o_operator_direct, classify_matrix, family, grid_completeness_search, o_residual_direct,
    verify_catalogue, Family, OperatorError, ParamOperator, ScalarMatrix3,
};
use triop_core::prelie::{
    check_pre_lie_axioms, check_pre_lie_by_constants, diff_family, dim2_experiment, induce_from_operator_unchecked,
    is_known_table_finding, sub_adjacent, FamilyTableDiff, PreLieAlgebra, TrivialityVerdict,
};
use triop_core::sampling::Sampler;
use triop_core::scalar::{parse_expr, Assignment, LaurentPoly, Scalar};
use triop_core::suites::{conditions_suite, lemma_suite, prelie_suite, AgreementReport};
use triop_core::trisys::{adjoint_rep, check_fundamental_identity, coadjoint_rep, semidirect, TriAlgebra, Vector};

use crate::report::{Item, Metadata, RunReport};
use crate::{CatalogCommand, Command, Context, CybeCommand, InputError, PrelieCommand, RepKind, SuiteName};

impl From<IoError> for InputError {
    fn from(e: IoError) -> Self {
        InputError(e.to_string())
    }
}

impl From<OperatorError> for InputError {
    fn from(e: OperatorError) -> Self {
        InputError(e.to_string())
    }
}

fn load<T: DeserializeOwned>(path: &str) -> Result<T, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?;
    read_json(&text).map_err(|e| InputError(format!("{path}: {e}")))
}

fn load_algebra(path: Option<&str>, d: u32) -> Result<TriAlgebra, InputError> {
    match path {
        None => Ok(TriAlgebra::a3()),
        Some(p) => Ok(load::<AlgebraDoc>(p)?.to_algebra(d)?),
    }
}

/// `a21=2,a13=s` into an assignment of constants.
pub(crate) fn parse_params(text: Option<&str>, d: u32) -> Result<Assignment, InputError> {
    let mut sigma = Assignment::new();
    for pair in text.unwrap_or("").split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) =
            pair.split_once('=').ok_or_else(|| InputError(format!("parameter {pair:?} is not of the form name=expr")))?;
        let value = parse_expr(value, d).map_err(|e| InputError(format!("parameter {}: {e}", name.trim())))?;
        let value = value
            .as_constant()
            .ok_or_else(|| InputError(format!("parameter {} must be a constant", name.trim())))?;
        sigma.insert(name.trim().into(), value);
    }
    Ok(sigma)
}

fn instantiate(op: &ParamOperator, sigma: &Assignment) -> Result<ParamOperator, InputError> {
    if sigma.is_empty() {
        Ok(op.clone())
    } else {
        op.substitute(sigma).map_err(|e| InputError(format!("cannot instantiate: {e}")))
    }
}

fn find_family(name: &str) -> Result<Family, InputError> {
    family(name).ok_or_else(|| InputError(format!("unknown family {name:?}; expected O1..O31")))
}

fn tuple<const N: usize>(t: [usize; N]) -> String {
    let parts: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

fn coords(v: &Vector) -> String {
    let parts: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `c1*name1 + c2*name2 ...` over the nonzero coordinates.
fn combo(v: &Vector, names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.coords().iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = if *c == LaurentPoly::one() {
            (false, name.clone())
        } else if *c == -&LaurentPoly::one() {
            (true, name.clone())
        } else {
            (false, format!("({c})*{name}"))
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn product_key(names: &[String], [i, j, k]: [usize; 3]) -> String {
    format!("{{{},{},{}}}", names[i], names[j], names[k])
}

fn timed(ctx: &Context, f: impl FnOnce() -> Item) -> Item {
    let start = Instant::now();
    let mut item = f();
    if ctx.timings {
        item.duration_millis = Some(start.elapsed().as_millis() as u64);
    }
    item
}

fn timed_many(ctx: &Context, f: impl FnOnce() -> Result<Vec<Item>, InputError>) -> Result<Vec<Item>, InputError> {
    let start = Instant::now();
    let mut items = f()?;
    if ctx.timings {
        let ms = start.elapsed().as_millis() as u64;
        for i in &mut items {
            i.duration_millis = Some(ms);
        }
    }
    Ok(items)
}

fn meta(ctx: &Context) -> Metadata {
    Metadata { d: ctx.d, version: env!("CARGO_PKG_VERSION").into(), seed: ctx.seed }
}

pub(crate) fn dispatch(cmd: &Command, ctx: &Context) -> Result<RunReport, InputError> {
    let (name, items) = match cmd {
        Command::VerifyAlgebra { input } => ("verify-algebra", verify_algebra(ctx, input)?),
        Command::VerifyOperator { algebra, operator, params } => {
            ("verify-operator", verify_operator(ctx, algebra.as_deref(), operator, params.as_deref())?)
        }
        Command::Catalog(CatalogCommand::List) => ("catalog list", catalog_list()),
        Command::Catalog(CatalogCommand::Verify { instances }) => ("catalog verify", catalog_verify(ctx, *instances)?),
        Command::Induce { family, params } => ("induce", induce(ctx, family, params.as_deref())?),
        Command::Prelie(PrelieCommand::Verify { input }) => ("prelie verify", prelie_verify(ctx, input)?),
        Command::Prelie(PrelieCommand::Diff { family }) => ("prelie diff", prelie_diff(ctx, family.as_deref())?),
        Command::Dim2Experiment => ("dim2-experiment", dim2(ctx)),
        Command::Semidirect { algebra, rep } => ("semidirect", semidirect_cmd(ctx, algebra.as_deref(), *rep)?),
        Command::Cybe(CybeCommand::Verify { solution }) => ("cybe verify", cybe_verify(ctx, solution.as_deref())?),
        Command::Cybe(CybeCommand::Bracket { algebra, tensor }) => ("cybe bracket", cybe_bracket(ctx, algebra, tensor)?),
        Command::Classify { matrix } => ("classify", classify(ctx, matrix)?),
        Command::SearchGrid { bound } => ("search-grid", search_grid(ctx, *bound)?),
        Command::Suite { name, count } => ("suite", suite(ctx, *name, *count)),
    };
    Ok(RunReport::new(name, items, meta(ctx)))
}

fn verify_algebra(ctx: &Context, input: &str) -> Result<Vec<Item>, InputError> {
    let a = load_algebra(Some(input), ctx.d)?;
    Ok(vec![timed(ctx, || {
        let v = check_fundamental_identity(&a);
        let summary = match v.first() {
            None => "0 violations".to_string(),
            Some(f) => format!("{} violations; first {}: {}", v.len(), tuple(f.tuple), coords(&f.residual)),
        };
        Item::check("fundamental-identity", v.is_empty(), summary)
    })])
}

fn verify_operator(
    ctx: &Context,
    algebra: Option<&str>,
    operator: &str,
    params: Option<&str>,
) -> Result<Vec<Item>, InputError> {
    let a = load_algebra(algebra, ctx.d)?;
    let op = instantiate(&load::<OperatorDoc>(operator)?.to_operator(ctx.d)?, &parse_params(params, ctx.d)?)?;
    if !op.is_square() || op.source_dim() != a.dim() {
        return Err(InputError(format!(
            "operator is {}x{} but the algebra has dimension {}",
            op.source_dim(),
            op.target_dim(),
            a.dim()
        )));
    }
    let n = a.dim();
    let mut items = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                items.push(timed(ctx, || {
                    let r = o_residual_direct(&a, &op, [i, j, k]);
                    Item::check(format!("triple {}", tuple([i, j, k])), r.is_zero(), coords(&r))
                }));
            }
        }
    }
    Ok(items)
}

fn operator_summary(op: &ParamOperator) -> String {
    let rows: Vec<String> = (0..op.source_dim()).map(|i| coords(&op.image(i))).collect();
    let mut s = rows.join("; ");
    if !op.side_conditions().is_empty() {
        let side: Vec<String> = op.side_conditions().iter().map(|c| format!("{c} != 0")).collect();
        s.push_str(&format!(" where {}", side.join(", ")));
    }
    s
}

fn catalog_list() -> Vec<Item> {
    catalogue().iter().map(|f| Item::pass(&f.name, operator_summary(&f.operator))).collect()
}

fn scalar_matrix(rows: &[Vec<Scalar>]) -> ScalarMatrix3 {
    let row = |i: usize| [rows[i][0].clone(), rows[i][1].clone(), rows[i][2].clone()];
    [row(0), row(1), row(2)]
}

fn instance_failures(ctx: &Context, f: &Family, count: usize) -> (usize, Vec<String>) {
    let index = f.index().unwrap_or(0) as u64;
    let mut sampler = Sampler::new(ctx.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let a = TriAlgebra::a3();
    let mut checked = 0;
    let mut bad = Vec::new();
    for _ in 0..count {
        let Some(m) = sampler.family_instance(f, 3) else { continue };
        checked += 1;
        let op = triop_core::ooperator::operator_from_scalars(&m);
        if !check_o_operator_direct(&a, &op).is_ok_and(|v| v.is_empty()) {
            bad.push(operator_summary(&op));
        }
    }
    (checked, bad)
}

fn catalog_verify(ctx: &Context, instances: usize) -> Result<Vec<Item>, InputError> {
    let a = TriAlgebra::a3();
    let families = catalogue();
    let start = Instant::now();
    let report = verify_catalogue(&a, &families, ctx.jobs)?;
    let ms = start.elapsed().as_millis() as u64;
    let mut items = Vec::new();
    for (f, check) in families.iter().zip(&report.families) {
        let mut item = match check.violations.first() {
            None => Item::pass(&f.name, "0 violations"),
            Some(v) => Item::fail(
                &f.name,
                format!("{} violating triples; {}: {}", check.violations.len(), tuple(v.triple), coords(&v.residual)),
            ),
        };
        if instances > 0 {
            let (checked, bad) = instance_failures(ctx, f, instances);
            item.residual_summary.push_str(&format!("; {}/{checked} sampled instances pass", checked - bad.len()));
            if let Some(first) = bad.first() {
                item.status = crate::Status::Fail;
                item.residual_summary.push_str(&format!("; first failing instance {first}"));
            }
        }
        if ctx.timings {
            item.duration_millis = Some(ms);
        }
        items.push(item);
    }
    for w in &report.warnings {
        items.push(Item::fail("catalogue", w.clone()));
    }
    Ok(items)
}

fn product_items(p: &PreLieAlgebra) -> Vec<Item> {
    p.constants()
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(&key, v)| Item::pass(product_key(p.basis_names(), key), combo(v, p.basis_names())))
        .collect()
}

fn axiom_item(p: &PreLieAlgebra) -> Item {
    let v = check_pre_lie_axioms(p);
    let summary = match v.first() {
        None => "0 violations".to_string(),
        Some(f) => format!("{} violations; first {:?} {}: {}", v.len(), f.axiom, tuple(f.tuple), coords(&f.residual)),
    };
    Item::check("axioms", v.is_empty(), summary)
}

fn induce(ctx: &Context, name: &str, params: Option<&str>) -> Result<Vec<Item>, InputError> {
    let f = find_family(name)?;
    let op = instantiate(&f.operator, &parse_params(params, ctx.d)?)?;
    timed_many(ctx, || {
        let a = TriAlgebra::a3();
        let violations = check_o_operator_direct(&a, &op)?;
        if let Some(v) = violations.first() {
            return Ok(vec![Item::fail(
                "o-operator",
                format!("{} is not an O-operator; {}: {}", f.name, tuple(v.triple), coords(&v.residual)),
            )]);
        }
        let p = induce_from_operator_unchecked(&a, &op);
        let mut items = product_items(&p);
        items.push(axiom_item(&p));
        let fi = check_fundamental_identity(&sub_adjacent(&p));
        items.push(Item::check("sub-adjacent", fi.is_empty(), format!("{} fundamental identity violations", fi.len())));
        Ok(items)
    })
}

fn prelie_verify(ctx: &Context, input: &str) -> Result<Vec<Item>, InputError> {
    let p = load::<PreLieDoc>(input)?.to_prelie(ctx.d)?;
    timed_many(ctx, || {
        let direct = check_pre_lie_axioms(&p);
        let by_constants = check_pre_lie_by_constants(&p);
        Ok(vec![
            axiom_item(&p),
            Item::check(
                "by-constants",
                by_constants.is_empty(),
                format!("{} violating index tuples", by_constants.len()),
            ),
            Item::check(
                "checkers-agree",
                direct.is_empty() == by_constants.is_empty(),
                format!("direct {}, by constants {}", direct.is_empty(), by_constants.is_empty()),
            ),
        ])
    })
}

fn diff_item(d: &FamilyTableDiff) -> Item {
    let names: Vec<String> = (1..=3).map(|i| format!("e{i}")).collect();
    let mut parts = Vec::new();
    for (key, values) in &d.duplicates {
        let vals: Vec<String> = values.iter().map(ToString::to_string).collect();
        parts.push(format!("{} printed {} times: {}", product_key(&names, *key), values.len(), vals.join(" | ")));
    }
    for m in &d.mismatches {
        parts.push(format!(
            "{}: computed {}, printed {}",
            product_key(&names, m.key),
            combo(&m.computed, &names),
            combo(&m.printed, &names)
        ));
    }
    let p = induce_from_operator_unchecked(&TriAlgebra::a3(), &find_family(&d.family).expect("catalogue name").operator);
    let axioms = check_pre_lie_axioms(&p).len();
    if !d.operator_ok || axioms > 0 {
        parts.insert(0, format!("not an O-operator; induced product fails the axioms on {axioms} tuples"));
        return Item::fail(&d.family, parts.join("; "));
    }
    if d.is_empty() {
        return Item::pass(&d.family, "matches print; axioms hold");
    }
    if is_known_table_finding(&d.family) {
        Item::finding(&d.family, parts.join("; "))
    } else {
        parts.insert(0, "undocumented mismatch".into());
        Item::fail(&d.family, parts.join("; "))
    }
}

fn prelie_diff(ctx: &Context, name: Option<&str>) -> Result<Vec<Item>, InputError> {
    let families: Vec<Family> = match name {
        Some(n) => vec![find_family(n)?],
        None => catalogue(),
    };
    let diffs = triop_core::par::map(ctx.jobs, &families, |f| {
        let start = Instant::now();
        let mut item = diff_item(&diff_family(&f.name).expect("catalogue family"));
        if ctx.timings {
            item.duration_millis = Some(start.elapsed().as_millis() as u64);
        }
        item
    });
    Ok(diffs)
}

fn dim2(ctx: &Context) -> Vec<Item> {
    let start = Instant::now();
    let r = dim2_experiment();
    let constraints = if r.constraints.is_empty() {
        "no nonzero constraint: every product satisfies both axioms".to_string()
    } else {
        r.constraints.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    };
    let params: Vec<String> = r.parameters.iter().map(ToString::to_string).collect();
    let mut items = vec![
        Item::pass("parameters", params.join(", ")),
        Item::pass("constraints", constraints),
        match &r.verdict {
            TrivialityVerdict::TrivialOnly => Item::pass("verdict", "trivial only: agrees with the claimed triviality"),
            TrivialityVerdict::NonTrivial { witness } => {
                let w: Vec<String> = witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                Item::finding(
                    "verdict",
                    format!(
                        "not trivial only; nonzero witness {} satisfies both axioms, so the claimed triviality holds only in the sense that the axioms impose no condition",
                        w.join(", ")
                    ),
                )
            }
            TrivialityVerdict::Undetermined => Item::finding("verdict", "undetermined"),
        },
    ];
    if ctx.timings {
        let ms = start.elapsed().as_millis() as u64;
        items.iter_mut().for_each(|i| i.duration_millis = Some(ms));
    }
    items
}

fn semidirect_cmd(ctx: &Context, algebra: Option<&str>, rep: RepKind) -> Result<Vec<Item>, InputError> {
    let a = load_algebra(algebra, ctx.d)?;
    let rho = match rep {
        RepKind::Adjoint => adjoint_rep(&a),
        RepKind::Coadjoint => coadjoint_rep(&a),
    };
    timed_many(ctx, || {
        let s = match semidirect(&a, &rho) {
            Ok(s) => s,
            Err(e) => return Ok(vec![Item::fail("representation", e.to_string())]),
        };
        let names = s.basis_names().to_vec();
        let mut items: Vec<Item> = s
            .constants()
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&[i, j, k], v)| Item::pass(format!("[{},{},{}]", names[i], names[j], names[k]), combo(v, &names)))
            .collect();
        let fi = check_fundamental_identity(&s);
        items.push(Item::check("fundamental-identity", fi.is_empty(), format!("{} violations", fi.len())));
        Ok(items)
    })
}

fn tensor_index(names: &[String], [p, q]: [usize; 2]) -> String {
    format!("{}⊗{}", names[p], names[q])
}

fn solution_item(c: &SolutionCheck, names: &[String]) -> Item {
    let mut parts = Vec::new();
    if !c.skew {
        parts.push("not skew-symmetric".to_string());
    }
    if c.bracket_nonzero > 0 {
        parts.push(format!(
            "[[r,r,r]] has {} nonzero slots ({} is not an O-operator: {})",
            c.bracket_nonzero,
            c.family,
            !c.operator_ok
        ));
    }
    for m in &c.fixture_diff {
        // each mismatch appears twice by skew-symmetry; report the e*⊗e slot
        if m.index[0] >= 3 {
            parts.push(format!("{}: built {}, printed {}", tensor_index(names, m.index), m.built, m.printed));
        }
    }
    if !c.fixture_diff.is_empty() {
        parts.push(format!("printed tensor's [[r,r,r]] has {} nonzero slots", c.printed_bracket_nonzero));
    }
    if parts.is_empty() {
        Item::pass(&c.name, "skew; [[r,r,r]] = 0; matches print")
    } else {
        Item::fail(&c.name, parts.join("; "))
    }
}

fn cybe_verify(ctx: &Context, solution: Option<&str>) -> Result<Vec<Item>, InputError> {
    let families = match solution {
        None => catalogue(),
        Some(s) => {
            let index = s.trim_start_matches(['r', 'R']);
            vec![find_family(index).map_err(|_| InputError(format!("unknown solution {s:?}; expected r1..r31")))?]
        }
    };
    let names = coadjoint_double(&TriAlgebra::a3()).basis_names().to_vec();
    timed_many(ctx, || {
        let report = verify_cybe_catalogue(&families, ctx.jobs).map_err(|e| InputError(e.to_string()))?;
        Ok(report.solutions.iter().map(|c| solution_item(c, &names)).collect())
    })
}

fn cybe_bracket(ctx: &Context, algebra: &str, tensor: &str) -> Result<Vec<Item>, InputError> {
    let a = load_algebra(Some(algebra), ctx.d)?;
    let r = load::<TensorDoc>(tensor)?.to_tensor(ctx.d)?;
    timed_many(ctx, || {
        let b = yang_baxter_bracket_with(&a, &r, ctx.jobs).map_err(|e| InputError(e.to_string()))?;
        let nonzero = b.nonzero();
        let names = a.basis_names();
        let summary = match nonzero.first() {
            None => "0 nonzero slots".to_string(),
            Some((idx, c)) => format!(
                "{} nonzero slots; first {}⊗{}⊗{}⊗{}: {c}",
                nonzero.len(),
                names[idx[0]],
                names[idx[1]],
                names[idx[2]],
                names[idx[3]]
            ),
        };
        Ok(vec![
            Item::check("skew-symmetric", r.is_skew_symmetric(), ""),
            Item::check("bracket", nonzero.is_empty(), summary),
        ])
    })
}

fn classify(ctx: &Context, path: &str) -> Result<Vec<Item>, InputError> {
    let op = load::<OperatorDoc>(path)?.to_operator(ctx.d)?;
    let rows = op
        .scalar_rows()
        .filter(|r| r.len() == 3 && r.iter().all(|row| row.len() == 3))
        .ok_or_else(|| InputError("classify needs a numeric 3x3 matrix".into()))?;
    let m = scalar_matrix(&rows);
    let matches = classify_matrix(&m).map_err(|e| InputError(format!("precondition failed: {e}")))?;
    timed_many(ctx, || {
        if matches.is_empty() {
            return Ok(vec![Item::finding("unmatched", "satisfies the cubic conditions but lies in no family")]);
        }
        Ok(matches
            .iter()
            .map(|fm| {
                let w: Vec<String> = fm.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
                Item::pass(&fm.family, w.join(", "))
            })
            .collect())
    })
}

fn int_matrix(m: &[[i64; 3]; 3]) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
    format!("[{}]", rows.join(","))
}

fn search_grid(ctx: &Context, bound: u32) -> Result<Vec<Item>, InputError> {
    if bound > 3 {
        return Err(InputError(format!("bound {bound} is too large; at most 3 is supported")));
    }
    timed_many(ctx, || {
        let g = grid_completeness_search(bound, ctx.jobs);
        let hits: Vec<String> = g.family_hits.iter().map(|(f, n)| format!("{f}={n}")).collect();
        let mut items = vec![
            Item::pass(
                "enumerated",
                format!("{} matrices with entries in [-{bound},{bound}]; {} satisfy the cubic conditions", g.enumerated, g.solutions),
            ),
            Item::pass("family-hits", hits.join(", ")),
            Item::check(
                "audit",
                g.audit_failures.is_empty(),
                format!("{} disagreements between the cubic filter and the direct check", g.audit_failures.len()),
            ),
        ];
        if g.unmatched.is_empty() {
            items.push(Item::pass("unmatched", "every solution lies in some family"));
        } else {
            let all: Vec<String> = g.unmatched.iter().map(int_matrix).collect();
            items.push(Item::finding(
                "unmatched",
                format!("{} solutions lie in no family: {}", g.unmatched.len(), all.join("; ")),
            ));
        }
        Ok(items)
    })
}

fn agreement_item(name: &str, r: &AgreementReport) -> Item {
    let mut summary =
        format!("{} samples, {} positive, {} negative, {} disagreements", r.samples, r.positives, r.negatives(), r.disagreements.len());
    if let Some(first) = r.disagreements.first() {
        summary.push_str(&format!("; first {first}"));
    }
    Item::check(name, r.passed(), summary)
}

fn suite(ctx: &Context, name: SuiteName, count: Option<usize>) -> Vec<Item> {
    vec![timed(ctx, || match name {
        SuiteName::Conditions => agreement_item("conditions", &conditions_suite(ctx.seed, count.unwrap_or(500), ctx.jobs)),
        SuiteName::Prelie => agreement_item("prelie", &prelie_suite(ctx.seed, count.unwrap_or(120), ctx.jobs)),
        SuiteName::Lemma => agreement_item("lemma", &lemma_suite(ctx.seed, count.unwrap_or(240), ctx.jobs)),
    })]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let s = parse_params(Some("a21=2, a13 = s"), 3).unwrap();
        assert_eq!(s.len(), 2);
        assert!(parse_params(Some("a21"), 3).is_err());
        assert!(parse_params(Some("a21=x"), 3).is_err());
        assert!(parse_params(None, 3).unwrap().is_empty());
    }

    #[test]
    fn combo_rendering() {
        let names: Vec<String> = ["e1", "e2", "e3"].map(String::from).to_vec();
        assert_eq!(combo(&Vector::from_ints(&[0, -1, 2]), &names), "-e2 + (2)*e3");
        assert_eq!(combo(&Vector::from_ints(&[1, 0, -1]), &names), "e1 - e3");
        assert_eq!(combo(&Vector::zero(3), &names), "0");
    }
}
