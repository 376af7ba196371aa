use std::time::Instant;

use anyhow::{bail, Context, Result};
use ribbon_census::bounds::{
    chi_asymptotic, construction_bound, derived_params, euler_char_moduli, fixed_systole_bound,
    fixed_systole_product, gap_report, global_bound, ln_abs_rational, verify_chain, verify_sweep,
    BoundParams, BoundsError, ChainReport, FixedSystoleConstants, LogValue, Rounding, SweepReport,
    SystoleChoice,
};
use ribbon_census::enumeration::{
    census_upper_bound_check, generate_candidates, ConstructionBudget,
};
use ribbon_census::map::format::write_map;
use ribbon_census::par;
use serde_json::{json, Value};

use crate::grid::{Grid, SystoleArg};
use crate::output::{emit, exact_or_overflow, num, render, Report, Table};
use crate::{Command, Common, GenusArgs, SystoleArgs};

const MIN_DIGIT_CAP: u64 = 1_000;

pub enum Outcome {
    Pass,
    StrictFailure,
}

pub fn run(command: &Command, common: &Common) -> Result<Outcome> {
    if common.digit_cap < MIN_DIGIT_CAP {
        bail!(
            "--digit-cap must be at least {MIN_DIGIT_CAP}, got {}",
            common.digit_cap
        );
    }
    let workers = match common.workers {
        Some(0) => bail!("--workers must be positive"),
        Some(w) => w,
        None => par::default_workers(),
    };
    let (report, failed) = par::with_workers(workers, || build(command, common, workers))?;
    emit(&render(&report, common.format)?, common.output.as_deref())?;
    Ok(if common.strict && failed {
        Outcome::StrictFailure
    } else {
        Outcome::Pass
    })
}

/// The report and whether any checked inequality failed.
fn build(command: &Command, common: &Common, workers: usize) -> Result<(Report, bool)> {
    match command {
        Command::Bound { g, l, rounding } => {
            let p = match SystoleArg::parse(l)? {
                SystoleArg::Auto => BoundParams::at_max_systole(*g)?,
                SystoleArg::Values(v) if v.len() == 1 => BoundParams::new(*g, v[0])?,
                SystoleArg::Values(_) => bail!("bound takes a single --L; use sweep for grids"),
            };
            bound(p, (*rounding).into(), common.digit_cap)
        }
        Command::Sweep {
            genus,
            systole,
            rounding,
        } => sweep(
            &genera(genus)?,
            &systoles(systole)?,
            (*rounding).into(),
            common.digit_cap,
        ),
        Command::VerifyChain { genus, systole } => chain(&genera(genus)?, &systoles(systole)?),
        Command::Census {
            genus,
            max_edges,
            max_vertices,
            max_degree,
            work_cap,
            check_bound,
            dump_maps,
        } => {
            let budget = ConstructionBudget {
                max_vertices: max_vertices.unwrap_or(max_edges + 1),
                max_edges: *max_edges,
                max_degree: max_degree.unwrap_or(2 * max_edges),
                genus_target: *genus,
                work_cap: *work_cap,
            };
            census(
                budget,
                workers,
                *check_bound,
                dump_maps.as_deref(),
                !common.no_timestamp,
            )
        }
        Command::EulerChar { genus } => euler(&genera(genus)?),
        Command::Gap { l, g_grid } => gap(&Grid::parse(g_grid)?.genera()?, *l),
    }
}

fn genera(args: &GenusArgs) -> Result<Vec<u64>> {
    let gs = match (&args.g, &args.g_grid) {
        (Some(g), _) => vec![*g],
        (None, Some(grid)) => Grid::parse(grid)?.genera()?,
        (None, None) => bail!("give --g or --g-grid"),
    };
    if let Some(&g) = gs.iter().find(|&&g| g < 2) {
        bail!("genus must be at least 2, got {g}");
    }
    Ok(gs)
}

fn systoles(args: &SystoleArgs) -> Result<SystoleArg> {
    match (&args.l, &args.l_grid) {
        (Some(l), _) => SystoleArg::parse(l),
        (None, Some(grid)) => Ok(SystoleArg::Values(Grid::parse(grid)?.values())),
        (None, None) => bail!("give --L or --L-grid"),
    }
}

fn systole_choices(arg: &SystoleArg) -> Vec<SystoleChoice> {
    match arg {
        SystoleArg::Auto => vec![SystoleChoice::MaxSystole],
        SystoleArg::Values(v) => v.iter().map(|&l| SystoleChoice::Fixed(l)).collect(),
    }
}

fn params(g: u64, choice: SystoleChoice) -> Result<BoundParams, BoundsError> {
    match choice {
        SystoleChoice::Fixed(l) => BoundParams::new(g, l),
        SystoleChoice::MaxSystole => BoundParams::at_max_systole(g),
    }
}

fn choice_json(choice: SystoleChoice) -> Value {
    match choice {
        SystoleChoice::Fixed(l) => num(l),
        SystoleChoice::MaxSystole => Value::from("auto"),
    }
}

struct BoundRecord {
    p: BoundParams,
    prop33: LogValue,
    thm34: LogValue,
    thm35: LogValue,
    thm35_product: LogValue,
}

fn evaluate(p: BoundParams, rounding: Rounding, digit_cap: u64) -> Result<BoundRecord> {
    let prop33 = match construction_bound(p, rounding, digit_cap) {
        Ok(v) => v,
        Err(BoundsError::DigitCapExceeded { ln, .. }) => LogValue::from_ln(ln),
        Err(e) => return Err(e.into()),
    };
    Ok(BoundRecord {
        p,
        prop33,
        thm34: global_bound(p.g)?.bound,
        thm35: fixed_systole_bound(p, FixedSystoleConstants::STATED),
        thm35_product: fixed_systole_product(p),
    })
}

const BOUND_COLUMNS: [&str; 9] = [
    "g",
    "L",
    "V0",
    "gGamma0",
    "deg0",
    "genus_lower",
    "prop33_ln",
    "thm34_ln",
    "thm35_ln",
];

fn bound_row(r: &BoundRecord) -> Vec<Value> {
    let d = derived_params(r.p);
    vec![
        Value::from(r.p.g),
        num(r.p.systole),
        num(d.v0),
        num(d.g_gamma0),
        num(d.deg0),
        num(d.genus_lower),
        num(r.prop33.ln),
        num(r.thm34.ln),
        num(r.thm35.ln),
    ]
}

fn bound_json(r: &BoundRecord, rounding: Rounding) -> Value {
    let d = derived_params(r.p);
    let mut out = json!({
        "g": r.p.g,
        "L": num(r.p.systole),
        "V0": num(d.v0),
        "gGamma0": num(d.g_gamma0),
        "deg0": num(d.deg0),
        "genus_lower": num(d.genus_lower),
        "r_disk": num(d.r_disk),
        "F_bound": num(d.cover_disks),
        "G_bound": num(d.disk_crossings),
        "E_bound": num(d.edge_bound),
        "rounding": format!("{rounding:?}").to_lowercase(),
        "prop33_ln": num(r.prop33.ln),
        "thm34_ln": num(r.thm34.ln),
        "thm35_ln": num(r.thm35.ln),
        "thm35_proof_product_ln": num(r.thm35_product.ln),
    });
    if rounding == Rounding::Exact {
        out["prop33_exact"] = exact_or_overflow(&r.prop33);
    }
    out
}

fn chain_entries_json(r: &ChainReport) -> Value {
    r.entries
        .iter()
        .map(|e| {
            json!({
                "inequality_id": e.inequality_id,
                "core": e.core,
                "description": e.description,
                "lhs_ln": num(e.lhs_ln),
                "rhs_ln": num(e.rhs_ln),
                "margin_ln": num(e.margin_ln),
                "holds": e.holds,
            })
        })
        .collect()
}

fn chain_point_json(r: &ChainReport) -> Value {
    json!({
        "g": r.g,
        "L": num(r.systole),
        "core_holds": r.core_holds,
        "all_hold": r.all_hold,
        "chain": chain_entries_json(r),
    })
}

const CHAIN_COLUMNS: [&str; 8] = [
    "g",
    "L",
    "inequality_id",
    "core",
    "lhs_ln",
    "rhs_ln",
    "margin_ln",
    "holds",
];

fn chain_rows(r: &ChainReport, table: &mut Table) {
    for e in &r.entries {
        table.push(vec![
            Value::from(r.g),
            num(r.systole),
            Value::from(e.inequality_id),
            Value::from(e.core),
            num(e.lhs_ln),
            num(e.rhs_ln),
            num(e.margin_ln),
            Value::from(e.holds),
        ]);
    }
}

fn bound(p: BoundParams, rounding: Rounding, digit_cap: u64) -> Result<(Report, bool)> {
    let record = evaluate(p, rounding, digit_cap)?;
    let chain = verify_chain(p);
    let mut json = bound_json(&record, rounding);
    json["chain"] = chain_entries_json(&chain);
    json["core_holds"] = Value::from(chain.core_holds);
    let mut table = Table::new(BOUND_COLUMNS.to_vec());
    table.push(bound_row(&record));
    Ok((Report { json, table }, !chain.core_holds))
}

fn sweep(
    gs: &[u64],
    systole: &SystoleArg,
    rounding: Rounding,
    digit_cap: u64,
) -> Result<(Report, bool)> {
    let mut points = Vec::new();
    for &g in gs {
        for choice in systole_choices(systole) {
            points.push(params(g, choice)?);
        }
    }
    let records: Vec<BoundRecord> =
        par::map_ordered(&points, |&p| evaluate(p, rounding, digit_cap))
            .into_iter()
            .collect::<Result<_>>()?;
    let mut table = Table::new(BOUND_COLUMNS.to_vec());
    for r in &records {
        table.push(bound_row(r));
    }
    let json = json!({
        "rounding": format!("{rounding:?}").to_lowercase(),
        "points": records.iter().map(|r| bound_json(r, rounding)).collect::<Vec<_>>(),
    });
    Ok((Report { json, table }, false))
}

fn sweep_json(s: &SweepReport) -> Value {
    json!({
        "L": choice_json(s.systole),
        "core_hold_from_g": s.core_hold_from_g,
        "all_hold_from_g": s.all_hold_from_g,
        "onsets": s.onsets.iter().map(|o| json!({
            "inequality_id": o.inequality_id,
            "holds_from_g": o.holds_from_g,
            "failures": o.failures,
        })).collect::<Vec<_>>(),
        "points": s.points.iter().map(chain_point_json).collect::<Vec<_>>(),
    })
}

fn chain(gs: &[u64], systole: &SystoleArg) -> Result<(Report, bool)> {
    let choices = systole_choices(systole);
    let mut table = Table::new(CHAIN_COLUMNS.to_vec());
    if let ([g], [choice]) = (gs, choices.as_slice()) {
        let r = verify_chain(params(*g, *choice)?);
        chain_rows(&r, &mut table);
        return Ok((
            Report {
                json: chain_point_json(&r),
                table,
            },
            !r.core_holds,
        ));
    }
    let sweeps = choices
        .iter()
        .map(|&c| verify_sweep(gs, c))
        .collect::<Result<Vec<_>, _>>()?;
    let failed = sweeps
        .iter()
        .any(|s| s.points.iter().any(|r| !r.core_holds));
    for s in &sweeps {
        for r in &s.points {
            chain_rows(r, &mut table);
        }
    }
    let json = json!({ "sweeps": sweeps.iter().map(sweep_json).collect::<Vec<_>>() });
    Ok((Report { json, table }, failed))
}

fn census(
    budget: ConstructionBudget,
    workers: usize,
    check_bound: bool,
    dump: Option<&std::path::Path>,
    timestamp: bool,
) -> Result<(Report, bool)> {
    let started = Instant::now();
    let c = generate_candidates(budget, workers)?;
    let elapsed = started.elapsed().as_secs_f64();
    let r = &c.result;
    let mut json = json!({
        "budget": {
            "genus_target": budget.genus_target,
            "max_vertices": budget.max_vertices,
            "max_edges": budget.max_edges,
            "max_degree": budget.max_degree,
            "work_cap": budget.work_cap,
        },
        "sequences_counted": r.sequences_counted,
        "iso_classes": r.iso_classes,
        "filling_classes": r.filling_classes,
        "mirror_merged_filling_classes": r.mirror_merged_filling_classes,
        "truncated": r.truncated,
    });
    let mut failed = false;
    if check_bound {
        let b = census_upper_bound_check(budget)?;
        failed = !b.holds;
        json["upper_bound_check"] = json!({
            "vertices": b.vertices,
            "extra_edges": b.extra_edges,
            "trees": b.trees,
            "additions_per_tree": b.additions_per_tree,
            "sequences_counted": b.sequences_counted,
            "bound": b.bound,
            "bound_ln": num(b.bound_ln),
            "holds": b.holds,
        });
    }
    if timestamp {
        json["wall_time_seconds"] = num(elapsed);
    }
    if let Some(path) = dump {
        let text: String = c.filling_maps.iter().map(|m| write_map(m) + "\n").collect();
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut table = Table::new(vec![
        "genus",
        "max_vertices",
        "max_edges",
        "max_degree",
        "sequences_counted",
        "iso_classes",
        "filling_classes",
        "mirror_merged_filling_classes",
        "truncated",
    ]);
    table.push(vec![
        Value::from(budget.genus_target),
        Value::from(budget.max_vertices),
        Value::from(budget.max_edges),
        Value::from(budget.max_degree),
        Value::from(r.sequences_counted),
        Value::from(r.iso_classes),
        Value::from(r.filling_classes),
        Value::from(r.mirror_merged_filling_classes),
        Value::from(r.truncated),
    ]);
    Ok((Report { json, table }, failed))
}

fn euler(gs: &[u64]) -> Result<(Report, bool)> {
    let mut rows = Vec::new();
    let mut table = Table::new(vec![
        "g",
        "chi",
        "chi_ln_abs",
        "asymptotic_ln",
        "relative_error",
    ]);
    for &g in gs {
        let chi = euler_char_moduli(g)?;
        let exact_ln = ln_abs_rational(&chi);
        let approx_ln = chi_asymptotic(g)?.ln;
        let rel = ((approx_ln - exact_ln) / exact_ln).abs();
        table.push(vec![
            Value::from(g),
            Value::from(chi.to_string()),
            num(exact_ln),
            num(approx_ln),
            num(rel),
        ]);
        rows.push(json!({
            "g": g,
            "chi": chi.to_string(),
            "chi_ln_abs": num(exact_ln),
            "asymptotic_ln": num(approx_ln),
            "relative_error": num(rel),
        }));
    }
    let json = if rows.len() == 1 {
        rows.pop().expect("one row")
    } else {
        json!({ "rows": rows })
    };
    Ok((Report { json, table }, false))
}

fn gap(gs: &[u64], systole: f64) -> Result<(Report, bool)> {
    if let Some(&g) = gs.iter().find(|&&g| g < 2) {
        bail!("genus must be at least 2, got {g}");
    }
    let r = gap_report(gs, systole)?;
    let mut table = Table::new(vec![
        "g",
        "L",
        "upper_ln",
        "ratio",
        "lower_ln",
        "lower_over_upper",
    ]);
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            table.push(vec![
                Value::from(row.g),
                num(systole),
                num(row.upper_ln),
                row.ratio.map_or(Value::Null, num),
                num(row.lower_ln),
                num(row.lower_over_upper),
            ]);
            json!({
                "g": row.g,
                "upper_ln": num(row.upper_ln),
                "ratio": row.ratio.map_or(Value::Null, num),
                "lower_ln": num(row.lower_ln),
                "lower_over_upper": num(row.lower_over_upper),
            })
        })
        .collect();
    let json = json!({
        "L": num(systole),
        "exponent": num(r.exponent),
        "beta_prime_ln": r.beta_prime_ln.map_or(Value::Null, num),
        "beta_prime": r.beta_prime_ln.map_or(Value::Null, |b| num(b.exp())),
        "all_within": r.all_within,
        "rows": rows,
    });
    Ok((Report { json, table }, !r.all_within))
}
