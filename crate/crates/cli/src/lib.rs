//! The `homext` command line.
//!
//! Exit codes: 0 when everything checked holds, 1 when a bound or conjecture
//! is violated, 2 for usage, parse and cap errors.

pub mod args;
pub mod config;

use args::{BoundArgs, Cli, Command, Format, PolyKindArg};
use clap::Parser;
use config::Settings;
use homext::counting::{
    hom_count, independence_polynomial, matching_polynomial, neighbor_occupancy_distribution, occupancy_fraction,
    potts_polynomial,
};
use homext::enumerate::{cached_family, family_graphs, graphs_to_graph6, FamilySpec};
use homext::extremal::{check_bound, BoundParams, BoundReport, Target, Verdict};
use homext::graph::io::{from_lg, read_graph6_lines, to_graph6};
use homext::graph::parse_named;
use homext::hunt::{maximizer_profile_on, scan_conjecture_on, ScanParams, ScanReport};
use homext::scalar::{format_rational, parse_rational};
use homext::{Graph, LoopGraph, Rational};
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

type Failure = Box<dyn std::error::Error + Send + Sync>;
type Outcome = Result<i32, Failure>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Run with process stdout/stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let settings = match Settings::resolve(&cli.global) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = settings.workers {
        pool = pool.num_threads(w);
    }
    let result = match pool.build() {
        Ok(pool) => {
            // the pool needs Send; buffer and copy out afterwards
            let mut buf = Vec::new();
            let r = pool.install(|| dispatch(&cli.command, &settings, &mut buf));
            match out.write_all(&buf).and_then(|_| out.flush()) {
                Ok(()) => r,
                Err(e) => Err(e.into()),
            }
        }
        Err(e) => Err(e.into()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: &Command, s: &Settings, out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Count { graphs, file, root } => count(graphs, file.as_deref(), *root, s, out),
        Command::Poly { graph, kind, q } => poly(graph, *kind, *q, s, out),
        Command::Occupancy {
            graph,
            lambda,
            distribution,
        } => occupancy(graph, lambda, *distribution, s, out),
        Command::Verify {
            bound,
            family,
            graph,
            params,
            skip_outside,
        } => verify(
            bound,
            family.as_deref(),
            graph.as_deref(),
            params,
            *skip_outside,
            s,
            out,
        ),
        Command::Enumerate { family, out: path } => enumerate(family, path.as_deref(), s, out),
        Command::Scan {
            conjecture,
            family,
            q,
            x_grid,
            target,
        } => {
            let params = ScanParams {
                q: *q,
                x_grid: x_grid.as_deref().map(rational_list).transpose()?,
                target: target.as_deref().map(load_target).transpose()?,
            };
            scan(conjecture, family, &params, s, out)
        }
        Command::Profile {
            d,
            target,
            family,
            k_grid,
        } => profile(*d, target, family.as_deref(), k_grid.as_deref(), s, out),
    }
}

// ---- graph sources ----

fn has_ext(src: &str, ext: &str) -> bool {
    Path::new(src).extension().is_some_and(|e| e == ext)
}

/// Source graphs: a named spec, a graph6 file or an `.lg` file.
pub fn load_graphs(src: &str) -> Result<Vec<Graph>, Failure> {
    if has_ext(src, "g6") {
        return Ok(read_graph6_lines(&read(src)?)?);
    }
    let h = if has_ext(src, "lg") {
        from_lg(&read(src)?)?
    } else {
        parse_named(src)?
    };
    let g = h
        .to_simple()
        .ok_or_else(|| format!("source graph `{src}` has loops; only targets may carry loops"))?;
    Ok(vec![g])
}

pub fn load_target(src: &str) -> Result<Target, Failure> {
    let graph: LoopGraph = if has_ext(src, "lg") {
        from_lg(&read(src)?)?
    } else if has_ext(src, "g6") {
        match read_graph6_lines(&read(src)?)?.as_slice() {
            [g] => g.to_loop_graph(),
            gs => return Err(format!("target file `{src}` holds {} graphs, expected one", gs.len()).into()),
        }
    } else {
        parse_named(src)?
    };
    Ok(Target::new(src, graph))
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}").into())
}

fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational a/b").into())
}

fn rational_list(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',').map(rational).collect()
}

fn family_of(text: &str, s: &Settings) -> Result<(FamilySpec, Vec<Graph>), Failure> {
    let spec: FamilySpec = text.parse()?;
    let graphs = match &s.cache_dir {
        Some(dir) => cached_family(&spec, &s.caps, dir)?,
        None => family_graphs(&spec, &s.caps)?,
    };
    Ok((spec, graphs))
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows(out: &mut dyn Write, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

// ---- subcommands ----

fn count(graphs: &[String], file: Option<&Path>, root: bool, s: &Settings, out: &mut dyn Write) -> Outcome {
    let (sources, target) = match (file, graphs) {
        (Some(path), [h]) => (read_graph6_lines(&read(&path.to_string_lossy())?)?, h),
        (None, [g, h]) => (load_graphs(g)?, h),
        (Some(_), _) => return Err("with --file give only the target H".into()),
        (None, _) => return Err("give a source graph G and a target H".into()),
    };
    let h = load_target(target)?;
    let counts: Vec<_> = sources.iter().map(|g| hom_count(g, &h.graph)).collect();
    match s.format {
        Format::Human => {
            for (g, c) in sources.iter().zip(&counts) {
                let prefix = if sources.len() > 1 {
                    format!("{}\t", to_graph6(g))
                } else {
                    String::new()
                };
                if root && g.order() > 0 {
                    let approx =
                        homext::hunt::Normalized::new(homext::Scalar::from_count(c), g.order() as u64).approx();
                    writeln!(out, "{prefix}{c}\t(v-th root ≈ {approx:.6}, approximate)")?;
                } else {
                    writeln!(out, "{prefix}{c}")?;
                }
            }
        }
        Format::Json => {
            let items: Vec<_> = sources
                .iter()
                .zip(&counts)
                .map(|(g, c)| serde_json::json!({"graph6": to_graph6(g), "n": g.order(), "target": h.name, "count": c.to_string()}))
                .collect();
            json_line(out, &items)?;
        }
        Format::Csv => csv_rows(
            out,
            &["graph6", "n", "target", "count"],
            sources
                .iter()
                .zip(&counts)
                .map(|(g, c)| vec![to_graph6(g), g.order().to_string(), h.name.clone(), c.to_string()]),
        )?,
    }
    Ok(EXIT_OK)
}

fn single(src: &str) -> Result<Graph, Failure> {
    match load_graphs(src)?.as_slice() {
        [g] => Ok(g.clone()),
        gs => Err(format!("`{src}` holds {} graphs, expected one", gs.len()).into()),
    }
}

fn poly(src: &str, kind: PolyKindArg, q: usize, s: &Settings, out: &mut dyn Write) -> Outcome {
    let g = single(src)?;
    let p = match kind {
        PolyKindArg::Ind => independence_polynomial(&g),
        PolyKindArg::Match => matching_polynomial(&g),
        PolyKindArg::Potts => {
            if q == 0 {
                return Err("q must be at least 1".into());
            }
            potts_polynomial(&g, q)
        }
    };
    match s.format {
        Format::Human => writeln!(out, "{p}")?,
        Format::Json => json_line(out, &p)?,
        Format::Csv => csv_rows(
            out,
            &["power", "coefficient"],
            p.to_decimal_strings()
                .into_iter()
                .enumerate()
                .map(|(t, c)| vec![t.to_string(), c]),
        )?,
    }
    Ok(EXIT_OK)
}

fn occupancy(src: &str, lambda: &str, distribution: bool, s: &Settings, out: &mut dyn Write) -> Outcome {
    let g = single(src)?;
    let lam = rational(lambda)?;
    if lam < Rational::from_integer(0.into()) {
        return Err("lambda must be nonnegative".into());
    }
    let alpha: Rational = occupancy_fraction(&g, &lam)?;
    let dist: Vec<Rational> = if distribution {
        neighbor_occupancy_distribution(&g, &lam)?
    } else {
        Vec::new()
    };
    let approx = |r: &Rational| format!("{:.6}", to_f64(r));
    match s.format {
        Format::Human => {
            writeln!(out, "{}\t(≈ {}, approximate)", format_rational(&alpha), approx(&alpha))?;
            for (k, p) in dist.iter().enumerate() {
                writeln!(out, "p_{k} = {}", format_rational(p))?;
            }
        }
        Format::Json => json_line(
            out,
            &serde_json::json!({
                "lambda": format_rational(&lam),
                "occupancy_fraction": format_rational(&alpha),
                "distribution": dist.iter().map(format_rational).collect::<Vec<_>>(),
            }),
        )?,
        Format::Csv => {
            let mut rows = vec![vec!["alpha".to_string(), format_rational(&alpha)]];
            rows.extend(
                dist.iter()
                    .enumerate()
                    .map(|(k, p)| vec![format!("p_{k}"), format_rational(p)]),
            );
            csv_rows(out, &["quantity", "value"], rows)?;
        }
    }
    Ok(EXIT_OK)
}

/// `a/b`, or just `a` for integers.
fn short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rational(r)
    }
}

fn to_f64(r: &Rational) -> f64 {
    homext::hunt::Normalized::new(r.clone(), 1).approx()
}

fn bound_params(p: &BoundArgs) -> Result<BoundParams, Failure> {
    Ok(BoundParams {
        q: p.q,
        lambda: p.lambda.as_deref().map(rational).transpose()?,
        t: p.t,
        delta: p.delta,
        target: p.target.as_deref().map(load_target).transpose()?,
        a: p.a.as_deref().map(load_target).transpose()?,
        b: p.b.as_deref().map(load_target).transpose()?,
    })
}

fn verify(
    bound: &str,
    family: Option<&str>,
    graph: Option<&str>,
    params: &BoundArgs,
    skip_outside: bool,
    s: &Settings,
    out: &mut dyn Write,
) -> Outcome {
    use rayon::prelude::*;
    let params = bound_params(params)?;
    let graphs = match (family, graph) {
        (Some(f), None) => family_of(f, s)?.1,
        (None, Some(g)) => load_graphs(g)?,
        _ => return Err("give exactly one of --family and --graph".into()),
    };
    let results: Vec<homext::Result<BoundReport>> = graphs.par_iter().map(|g| check_bound(g, bound, &params)).collect();
    let mut reports = Vec::new();
    let mut skipped = 0;
    for r in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(homext::Error::Hypothesis { .. }) if skip_outside => skipped += 1,
            Err(e) => return Err(e.into()),
        }
    }
    let violated = reports.iter().filter(|r| r.verdict == Verdict::Violated).count();
    match s.format {
        Format::Human => {
            for r in &reports {
                writeln!(
                    out,
                    "{:<8} {:<12} n={:<3} lhs=({})^{} rhs=({})^{}",
                    r.verdict.as_str(),
                    r.graph6,
                    r.n,
                    short(&r.lhs.base),
                    r.lhs.exp,
                    short(&r.rhs.base),
                    r.rhs.exp
                )?;
            }
            let tight = reports.iter().filter(|r| r.verdict == Verdict::Tight).count();
            writeln!(
                out,
                "{bound}: {} checked, {} holds, {tight} tight, {violated} violated{}",
                reports.len(),
                reports.len() - tight - violated,
                if skipped > 0 {
                    format!(", {skipped} outside hypothesis")
                } else {
                    String::new()
                }
            )?;
        }
        Format::Json => json_line(out, &reports)?,
        Format::Csv => csv_rows(
            out,
            &BoundReport::CSV_HEADER,
            reports.iter().map(BoundReport::csv_record),
        )?,
    }
    Ok(if violated > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn enumerate(family: &str, path: Option<&Path>, s: &Settings, out: &mut dyn Write) -> Outcome {
    let (_, graphs) = family_of(family, s)?;
    match path {
        Some(p) => std::fs::write(p, graphs_to_graph6(&graphs))?,
        None => match s.format {
            Format::Json => json_line(out, &graphs.iter().map(to_graph6).collect::<Vec<_>>())?,
            Format::Csv => csv_rows(
                out,
                &["graph6", "n", "m"],
                graphs
                    .iter()
                    .map(|g| vec![to_graph6(g), g.order().to_string(), g.size().to_string()]),
            )?,
            Format::Human => out.write_all(graphs_to_graph6(&graphs).as_bytes())?,
        },
    }
    Ok(EXIT_OK)
}

fn scan(id: &str, family: &str, params: &ScanParams, s: &Settings, out: &mut dyn Write) -> Outcome {
    let (spec, graphs) = family_of(family, s)?;
    let report = scan_conjecture_on(id, &spec, &graphs, params)?;
    emit_report(&report, s, out)?;
    Ok(if report.held() { EXIT_OK } else { EXIT_VIOLATION })
}

fn profile(
    d: usize,
    target: &str,
    family: Option<&str>,
    k_grid: Option<&str>,
    s: &Settings,
    out: &mut dyn Write,
) -> Outcome {
    let h = load_target(target)?;
    let default_family = format!("d={d},nmax={}", 2 * d);
    let (spec, graphs) = family_of(family.unwrap_or(&default_family), s)?;
    let ks: Option<Vec<u64>> = k_grid
        .map(|t| {
            t.split(',')
                .map(|k| {
                    k.trim()
                        .parse::<u64>()
                        .map_err(|_| format!("`{k}` is not a positive integer"))
                })
                .collect()
        })
        .transpose()?;
    let report = maximizer_profile_on(d, &spec, &graphs, &h, ks.as_deref())?;
    emit_report(&report, s, out)?;
    Ok(EXIT_OK)
}

fn emit_report(r: &ScanReport, s: &Settings, out: &mut dyn Write) -> Result<(), Failure> {
    match s.format {
        Format::Json => json_line(out, r)?,
        Format::Csv if !r.table.is_empty() => csv_rows(
            out,
            &["k", "graph", "graph6", "n", "reference", "count", "vs_kdd", "vs_kd1"],
            r.table.iter().map(|row| {
                vec![
                    row.k.map_or(String::new(), |k| k.to_string()),
                    row.graph.clone(),
                    row.graph6.clone(),
                    row.n.to_string(),
                    row.reference.clone().unwrap_or_default(),
                    row.count.clone(),
                    row.vs_kdd.clone(),
                    row.vs_kd1.clone(),
                ]
            }),
        )?,
        Format::Csv => csv_rows(
            out,
            &[
                "graph",
                "graph6",
                "detail",
                "direction",
                "lhs_base",
                "lhs_exp",
                "rhs_base",
                "rhs_exp",
            ],
            r.violations.iter().map(|v| {
                let c = &v.comparison;
                vec![
                    v.graph.clone(),
                    v.graph6.clone(),
                    c.detail.clone(),
                    format!("{:?}", c.direction).to_lowercase(),
                    format_rational(&c.lhs.base),
                    c.lhs.exp.to_string(),
                    format_rational(&c.rhs.base),
                    c.rhs.exp.to_string(),
                ]
            }),
        )?,
        Format::Human => {
            writeln!(
                out,
                "{} on {}: {} graphs checked, {} skipped, {} comparisons, {} violations",
                r.conjecture_id,
                r.family,
                r.graphs_checked,
                r.graphs_skipped,
                r.comparisons,
                r.violations.len()
            )?;
            for v in &r.violations {
                writeln!(out, "  violation {} {}", v.graph6, v.comparison.detail)?;
            }
            for w in &r.witnesses {
                writeln!(
                    out,
                    "  {:<10} {:<12} n={:<3} value≈{:.6}{}",
                    w.role,
                    w.graph6,
                    w.n,
                    w.value.approx(),
                    w.reference.as_ref().map_or(String::new(), |r| format!(" ({r})"))
                )?;
            }
            for note in &r.notes {
                writeln!(out, "  note: {note}")?;
            }
        }
    }
    Ok(())
}
