//! Acceptance run: one PASS/FAIL line per criterion, with elapsed time.
//!
//! `cargo test -p ribbon-census-cli --test acceptance`
//!
//! Lines go straight to stdout so they show without `--nocapture`.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigUint;
use ribbon_census::bounds::{
    catalan_exact, catalan_log, chi_asymptotic, construction_bound, derived_params,
    euler_char_moduli, gap_report, ln_abs_rational, ln_biguint, verify_chain, verify_sweep,
    BoundParams, Rounding, SystoleChoice, DEFAULT_DIGIT_CAP, GAP_EXPONENT,
};
use ribbon_census::enumeration::{
    candidates, enumerate_plane_trees, generate_candidates, ConstructionBudget,
};
use ribbon_census::map::{canonical_form, surface_stats, trace_faces};
use ribbon_census::oracle::{
    all_labeled_maps, catalan_recurrence, exhaustive_maps, gluing_face_count, naive_surface,
};
use ribbon_census::{par, CombinatorialMap};

macro_rules! say {
    ($($arg:tt)*) => {{
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, $($arg)*);
        let _ = out.flush();
    }};
}

const LN_AGREEMENT: f64 = 1e-9;
const SUBSTITUTION: f64 = 1e-12;
const ASYMPTOTIC: f64 = 0.01;
const WINDOW_TOP: (f64, f64) = (0.43, 0.45);
const NO_LIMIT: f64 = f64::INFINITY;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion(id: u32, name: &str, limit_secs: f64, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    });
    let secs = start.elapsed().as_secs_f64();
    let outcome = outcome.and_then(|detail| {
        if secs <= limit_secs {
            Ok(detail)
        } else {
            Err(format!("{detail}; took {secs:.1} s, limit {limit_secs} s"))
        }
    });
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    say!("[{tag}] {id:>2} {name}: {detail} ({secs:.2} s)");
    outcome.is_ok()
}

fn face_tracing() -> Outcome {
    let classes = exhaustive_maps(4).map_err(|e| e.to_string())?;
    for m in &classes {
        let s = surface_stats(m).map_err(|e| e.to_string())?;
        ensure(trace_faces(m).len() == gluing_face_count(m), || {
            format!("faces differ on {m}")
        })?;
        ensure(s.chi % 2 == 0 && s.chi <= 2, || format!("bad chi on {m}"))?;
    }
    let mut labeled = 0;
    for e in 1..=4 {
        for (sigma, alpha) in all_labeled_maps(e) {
            let m = CombinatorialMap::new(sigma, alpha).map_err(|e| e.to_string())?;
            if !m.is_connected() {
                continue;
            }
            labeled += 1;
            ensure(trace_faces(&m).len() == gluing_face_count(&m), || {
                format!("faces differ on {m}")
            })?;
        }
    }
    Ok(format!(
        "{} classes, {labeled} labeled connected maps with E <= 4",
        classes.len()
    ))
}

fn plane_trees() -> Outcome {
    let cat = catalan_recurrence(11);
    for n in 1..=12 {
        let count = enumerate_plane_trees(n).map_err(|e| e.to_string())?.count();
        ensure(BigUint::from(count) == cat[n - 1], || {
            format!("n = {n}: {count} trees")
        })?;
    }
    ensure(cat[11] == BigUint::from(58786u32), || {
        "Cat(11) != 58786".into()
    })?;
    Ok("counts equal Cat(n-1) for n = 1..12, Cat(11) = 58786".into())
}

fn catalan_machinery() -> Outcome {
    let rec = catalan_recurrence(2000);
    for n in 0..=2000u64 {
        let c = catalan_exact(n);
        ensure(c == rec[n as usize], || {
            format!("Cat({n}) differs from the recurrence")
        })?;
        ensure(n == 0 || c < BigUint::from(1u32) << (2 * n), || {
            format!("Cat({n}) >= 4^{n}")
        })?;
    }
    let n = 10_000f64;
    let ln_cat = catalan_log(10_000).ln;
    let approx = n * 4f64.ln() - 1.5 * n.ln() - 0.5 * std::f64::consts::PI.ln();
    let rel = (ln_cat - approx).abs() / ln_cat;
    ensure(rel < ASYMPTOTIC, || format!("asymptotic off by {rel:e}"))?;
    Ok(format!("exact = recurrence and Cat(n) < 4^n for n <= 2000; asymptotic rel err {rel:.2e} at n = 1e4"))
}

fn exact_log_agreement() -> Outcome {
    let p = BoundParams::new(2, 0.0).map_err(|e| e.to_string())?;
    let exact =
        construction_bound(p, Rounding::Exact, DEFAULT_DIGIT_CAP).map_err(|e| e.to_string())?;
    let value = exact.exact.as_ref().ok_or("no exact value")?;
    let log = construction_bound(p, Rounding::Real, 0)
        .map_err(|e| e.to_string())?
        .ln;
    let rel = (ln_biguint(value) - log).abs() / log;
    ensure(rel < LN_AGREEMENT, || format!("rel err {rel:e}"))?;
    Ok(format!(
        "{} digits, ln = {log:.6e}, rel err {rel:.1e}",
        exact.digits()
    ))
}

fn substitution() -> Outcome {
    let mut worst = 0f64;
    for g in [2u64, 10, 100] {
        let d = derived_params(BoundParams::at_max_systole(g).map_err(|e| e.to_string())?);
        let gf = g as f64;
        for (got, want) in [
            (d.v0, 5090.0 * gf.powi(3)),
            (d.g_gamma0, 15400.0 * gf.powi(3)),
            (d.deg0, 2f64.powf(1.25) * gf.sqrt()),
        ] {
            worst = worst.max((got - want).abs() / want);
        }
    }
    ensure(worst <= SUBSTITUTION, || format!("rel err {worst:e}"))?;
    Ok(format!(
        "V0, gGamma0, deg0 at g in {{2, 10, 100}}, worst rel err {worst:.1e}"
    ))
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<u64> {
    let mut gs: Vec<u64> = (0..points)
        .map(|i| {
            (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (points - 1) as f64)
                .exp()
                .round() as u64
        })
        .collect();
    gs.dedup();
    gs
}

fn chain_verification() -> Outcome {
    let gs = log_grid(2.0, 1e6, 121);
    let sweep = verify_sweep(&gs, SystoleChoice::MaxSystole).map_err(|e| e.to_string())?;
    let mut onsets = Vec::new();
    for o in &sweep.onsets {
        say!(
            "       onset {:<20} holds from g = {:<8} failures {}",
            o.inequality_id,
            o.holds_from_g
                .map_or("never".to_string(), |g| g.to_string()),
            o.failures
        );
    }
    for id in ["i", "ii", "iv", "v"] {
        let o = sweep
            .onsets
            .iter()
            .find(|o| o.inequality_id == id)
            .ok_or("missing id")?;
        let g = o
            .holds_from_g
            .ok_or_else(|| format!("({id}) never holds through the sweep"))?;
        onsets.push(format!("({id}) from g = {g}"));
    }

    let mut window = Vec::new();
    for g in [2u64, 10] {
        let failing: Vec<u32> = (0..=600)
            .filter(|&k| {
                let p = BoundParams::new(g, k as f64 / 1000.0).unwrap();
                !verify_chain(p).entry("iii").unwrap().holds
            })
            .collect();
        let (first, last) = (failing[0], *failing.last().unwrap());
        ensure(failing.len() as u32 == last - first + 1, || {
            "window not contiguous".into()
        })?;
        let top = last as f64 / 1000.0;
        ensure(
            first == 1 && top > WINDOW_TOP.0 && top < WINDOW_TOP.1,
            || format!("g = {g}: window [{first}e-3, {top}]"),
        )?;
        window.push(top);
    }
    let r = verify_chain(BoundParams::new(2, 0.2).unwrap());
    let e = r.entry("iii").unwrap();
    let d = derived_params(BoundParams::new(2, 0.2).unwrap());
    let (per_lhs, per_rhs) = ((e.lhs_ln / d.v0).exp(), (e.rhs_ln / d.v0).exp());
    ensure(
        !e.holds && (per_lhs - 6.0).abs() < 1e-9 && (per_rhs - 4.77).abs() < 0.01,
        || format!("L = 0.2: per-vertex {per_lhs} vs {per_rhs}"),
    )?;
    Ok(format!(
        "{}; core holds from g = {:?}; (iii) fails for L in (0, {:.3}] at g = 2 and 10 (L = 0.2: 3! = 6 > {per_rhs:.2})",
        onsets.join(", "),
        sweep.core_hold_from_g,
        window[0]
    ))
}

fn euler_characteristic() -> Outcome {
    let chi2 = euler_char_moduli(2).map_err(|e| e.to_string())?;
    let chi3 = euler_char_moduli(3).map_err(|e| e.to_string())?;
    ensure(
        chi2.to_string() == "-1/240" && chi3.to_string() == "1/1008",
        || format!("chi(2) = {chi2}, chi(3) = {chi3}"),
    )?;
    let mut worst = 0f64;
    for g in 50..=200 {
        let exact = ln_abs_rational(&euler_char_moduli(g).unwrap());
        let approx = chi_asymptotic(g).unwrap().ln;
        worst = worst.max(((exact - approx) / exact).abs());
    }
    ensure(worst < ASYMPTOTIC, || format!("worst rel err {worst:e}"))?;
    Ok(format!(
        "chi(2) = -1/240, chi(3) = 1/1008; asymptotic worst rel err {worst:.2e} over g = 50..200"
    ))
}

fn local_maxima_gap() -> Outcome {
    let gs = log_grid(2.0, 1e6, 61);
    let r = gap_report(&gs, 10.0).map_err(|e| e.to_string())?;
    let beta = r.beta_prime_ln.ok_or("no beta' exists")?;
    let mut worst = 0f64;
    for row in &r.rows {
        let ratio = row.ratio.ok_or("missing ratio")?;
        worst = worst.max(ratio);
        say!(
            "       g = {:<8} upper/(g ln(beta' g)) = {ratio:.6e}  lower/upper ln = {:.3e}",
            row.g,
            row.lower_over_upper
        );
    }
    ensure(r.all_within && worst <= GAP_EXPONENT, || {
        format!("worst ratio {worst:e}")
    })?;
    Ok(format!(
        "beta' = e^{beta:.3} > 0, max ratio {worst:.4e} <= 4e8 over {} genera up to 1e6",
        r.rows.len()
    ))
}

fn census() -> Outcome {
    let budget = |v, e, deg, genus| ConstructionBudget {
        max_vertices: v,
        max_edges: e,
        max_degree: deg,
        genus_target: genus,
        work_cap: u64::MAX,
    };
    let torus = generate_candidates(budget(1, 2, 4, 1), 1).map_err(|e| e.to_string())?;
    ensure(torus.result.filling_classes == 1, || {
        format!("{:?}", torus.result)
    })?;

    let workers = par::default_workers().max(4);
    let mut counts = Vec::new();
    for genus in 0..=2 {
        let b = budget(4, 3, 6, genus);
        let one = generate_candidates(b, 1).map_err(|e| e.to_string())?;
        let many = generate_candidates(b, workers).map_err(|e| e.to_string())?;
        ensure(
            one.result == many.result && one.filling_maps == many.filling_maps,
            || {
                format!(
                    "genus {genus}: 1 worker {:?} vs {workers} workers {:?}",
                    one.result, many.result
                )
            },
        )?;
        for m in one.filling_maps.iter().chain(
            candidates(b)
                .map_err(|e| e.to_string())?
                .collect::<Vec<_>>()
                .iter(),
        ) {
            let s = surface_stats(m).map_err(|e| e.to_string())?;
            ensure(s.genus == genus, || {
                format!("emitted {m} has genus {}", s.genus)
            })?;
        }
        let oracle: BTreeSet<_> = exhaustive_maps(3)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|m| naive_surface(m.sigma(), m.alpha()).3 == genus)
            .map(|m| canonical_form(&m).unwrap())
            .collect();
        ensure(one.result.filling_classes == oracle.len() as u64, || {
            format!(
                "genus {genus}: {} classes, oracle {}",
                one.result.filling_classes,
                oracle.len()
            )
        })?;
        counts.push(one.result.filling_classes);
    }
    Ok(format!(
        "torus bouquet is the only class; E <= 3 filling classes by genus 0/1/2 = {counts:?}, same for 1 and {workers} workers, equal to brute force"
    ))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ribbon-census");
    let commands: Vec<Vec<&str>> = vec![
        vec!["bound", "--g", "2", "--L", "0"],
        vec!["bound", "--g", "3", "--L", "0.5", "--rounding", "exact"],
        vec![
            "sweep",
            "--g-grid",
            "2:1000:log:20",
            "--L-grid",
            "0:5:lin:6",
        ],
        vec!["verify-chain", "--g-grid", "2:1000000:log", "--L", "auto"],
        vec!["census", "--genus", "1", "--max-edges", "3"],
        vec!["euler-char", "--g-grid", "2:40:lin:39"],
        vec!["gap", "--L", "10"],
    ];
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env_remove("RIBBON_CENSUS_DIGIT_CAP")
            .output()
            .map_err(|e| e.to_string())
    };
    let mut checked = 0;
    for cmd in &commands {
        for format in ["json", "csv"] {
            let mut args = cmd.clone();
            args.extend(["--format", format, "--no-timestamp"]);
            let a = run(&args)?;
            let b = run(&args)?;
            ensure(a.status.success(), || format!("{args:?} failed"))?;
            ensure(a.stdout == b.stdout, || {
                format!("{args:?} differs between runs")
            })?;
            checked += 1;
        }
    }
    let census = [
        "census",
        "--genus",
        "1",
        "--max-edges",
        "4",
        "--no-timestamp",
    ];
    let one = run(&[&census[..], &["--workers", "1"]].concat())?;
    let many = run(&[&census[..], &["--workers", "8"]].concat())?;
    ensure(one.stdout == many.stdout, || {
        "census output depends on worker count".into()
    })?;
    Ok(format!("{checked} command/format pairs byte-identical across reruns; census identical for 1 and 8 workers"))
}

#[test]
fn acceptance() {
    let results = [
        criterion(1, "face tracing vs boundary gluing", 60.0, face_tracing),
        criterion(2, "plane-tree census", 10.0, plane_trees),
        criterion(3, "Catalan machinery", 30.0, catalan_machinery),
        criterion(4, "exact/log agreement", 60.0, exact_log_agreement),
        criterion(5, "max-systole substitution", NO_LIMIT, substitution),
        criterion(6, "inequality chain", 120.0, chain_verification),
        criterion(7, "Euler characteristic", NO_LIMIT, euler_characteristic),
        criterion(8, "local-maxima gap", NO_LIMIT, local_maxima_gap),
        criterion(9, "filling census", 60.0, census),
        criterion(10, "CLI determinism", NO_LIMIT, determinism),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    say!(
        "acceptance: {} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    assert_eq!(failed, 0);
}
