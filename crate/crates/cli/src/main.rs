mod demo;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use mixedpoly::invariants::{curve_invariants, family_chi, genus_table};
use mixedpoly::projective::{lkn_detailed, scan_point_counts_with, verify_degree_with};
use mixedpoly::{analyze, build_family, solve, Complex64, Exec, FamilyKind, FamilySpec, MixedPolynomial, SolverOptions};
use serde_json::{json, Value};

use report::Report;

#[derive(Parser)]
#[command(name = "mixedpoly", version, about = "Mixed polynomials f(z, z̄): weights, certified roots, degrees and invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radial and polar weights, strong polar homogeneity and class (q, r).
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Certified roots of a one-variable mixed polynomial.
    Roots {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        out: Output,
        /// Write an SVG scatter of the roots.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Number of points of a two-variable projective curve in CP^1.
    Lkn {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the degree of random line sections with the polar degree.
    Degree {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Closed-form invariants of a family member, or a genus table with --q-max.
    Invariants {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = parse_params, default_value = "")]
        params: Params,
        /// First q of the table, or q of the member.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        /// Last q of a genus table.
        #[arg(long)]
        q_max: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Histogram of point counts over random polynomials of class (q, r).
    Scan {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        out: Output,
    },
    /// Run the worked examples and tables and report pass/fail per item.
    Demo {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Source {
    /// Polynomial text, e.g. "-2*z1^2*conj(z1) + 3*z1^2 + 1".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "family", required_unless_present = "family")]
    poly: Option<String>,
    /// Named family (s1..s5, h_join, f_qj, k_ell, join_f1, simplicial_f2, ...).
    #[arg(long, requires = "params")]
    family: Option<String>,
    #[arg(long, value_parser = parse_params)]
    params: Option<Params>,
}

#[derive(Args)]
struct Solver {
    /// Smallest box half-width, relative to the search radius.
    #[arg(long)]
    tol: Option<f64>,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here instead of printing it.
    #[arg(long)]
    json: Option<PathBuf>,
}

/// `K=V` pairs in command-line order.
#[derive(Clone, Default)]
struct Params(Vec<(String, String)>);

fn parse_params(text: &str) -> Result<Params, String> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| format!("expected K=V, got {kv:?}"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect::<Result<_, _>>()
        .map(Params)
}

fn family_spec(name: &str, params: &[(String, String)]) -> anyhow::Result<FamilySpec> {
    let mut spec = FamilySpec::new(FamilyKind::from_name(name)?);
    for (k, v) in params {
        spec = match v.parse::<i64>() {
            Ok(n) => spec.with_int(k, n),
            Err(_) => spec.with_complex(k, constant(v).with_context(|| format!("parameter {k}"))?),
        };
    }
    Ok(spec)
}

fn constant(text: &str) -> anyhow::Result<Complex64> {
    let f = mixedpoly::parse(text)?;
    if f.radial_degree() > 0 {
        bail!("{text:?} is not a constant");
    }
    let c = f.terms().next().map_or(Complex64::new(0.0, 0.0), |(_, c)| *c);
    Ok(c)
}

fn params_json(params: &[(String, String)]) -> Value {
    params.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<serde_json::Map<_, _>>().into()
}

impl Source {
    fn resolve(&self, rep: &mut Report) -> anyhow::Result<MixedPolynomial> {
        let f = match (&self.poly, &self.family) {
            (Some(text), _) => {
                rep.input("poly", text.as_str());
                mixedpoly::parse(text)?
            }
            (None, Some(name)) => {
                let params = self.params.clone().unwrap_or_default().0;
                rep.input("family", name.as_str());
                rep.input("params", params_json(&params));
                build_family(&family_spec(name, &params)?)?
            }
            (None, None) => bail!("one of --poly or --family is required"),
        };
        rep.input("canonical", mixedpoly::format(&f));
        Ok(f)
    }
}

impl Solver {
    fn options(&self, rep: &mut Report) -> anyhow::Result<SolverOptions> {
        let mut opts = SolverOptions::default();
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol < 1.0) {
                bail!("--tol must lie in (0, 1), got {tol}");
            }
            opts.min_half_width_rel = tol;
        }
        if self.sequential {
            opts.exec = Exec::Sequential;
        }
        rep.input("tol", opts.min_half_width_rel);
        Ok(opts)
    }
}

fn run(command: &Command, rep: &mut Report) -> anyhow::Result<bool> {
    match command {
        Command::Analyze { source, .. } => {
            let f = source.resolve(rep)?;
            let w = analyze(&f)?;
            if w.non_unique_weights {
                rep.warnings.push("weight kernel has dimension ≥ 2; reported weights are one primitive choice".into());
            }
            rep.results = report::weights(&w);
        }
        Command::Roots { source, solver, svg, .. } => {
            let f = source.resolve(rep)?;
            let inv = solve(&f, &solver.options(rep)?)?;
            report::inventory_warnings(&inv, &mut rep.warnings);
            if let Some(path) = svg {
                rep.input("svg", path.display().to_string());
                std::fs::write(path, svg::render(&inv)).with_context(|| format!("writing {}", path.display()))?;
            }
            rep.results = report::inventory(&inv);
        }
        Command::Lkn { source, solver, .. } => {
            let f = source.resolve(rep)?;
            let pc = lkn_detailed(&f, &solver.options(rep)?)?;
            if pc.rotation != 0.0 {
                rep.warnings.push(format!("rotated by {} rad to move [1:0] off the curve", pc.rotation));
            }
            if pc.uncertified > 0 {
                rep.warnings.push(format!("{} point(s) counted from index-0 clusters without a winding certificate", pc.uncertified));
            }
            report::inventory_warnings(&pc.inventory, &mut rep.warnings);
            rep.results = report::point_count(&pc);
        }
        Command::Degree {
            source,
            solver,
            trials,
            seed,
            ..
        } => {
            rep.input("trials", *trials);
            rep.input("seed", *seed);
            let f = source.resolve(rep)?;
            let v = verify_degree_with(&f, *trials, *seed, &solver.options(rep)?)?;
            if v.rejections > 0 {
                rep.warnings.push(format!("{} line(s) resampled", v.rejections));
            }
            for s in &v.sections {
                report::inventory_warnings(&s.inventory, &mut rep.warnings);
            }
            rep.results = report::verdict(&v);
            return Ok(v.agree);
        }
        Command::Invariants {
            family,
            params,
            q,
            r,
            q_max,
            ..
        } => {
            rep.input("family", family.as_str());
            let params = &params.0;
            rep.input("params", params_json(params));
            rep.input("q", *q);
            rep.input("r", *r);
            rep.input("q_max", *q_max);
            let kind = FamilyKind::from_name(family)?;
            let lookup = |key: &str| params.iter().find(|(k, _)| k == key).map(|(_, v)| v.parse::<i64>());
            if let Some(q_max) = q_max {
                let q_min = q.unwrap_or(2);
                let r = match r {
                    Some(r) => *r,
                    None => lookup("r").transpose()?.unwrap_or(1),
                };
                rep.results = report::genus_table(&genus_table(kind, q_min..=*q_max, r)?);
            } else {
                let mut all = params.clone();
                for (key, value) in [("q", q), ("r", r)] {
                    if let Some(v) = value {
                        if lookup(key).is_some() {
                            bail!("{key} given both as --{key} and in --params");
                        }
                        all.push((key.to_string(), v.to_string()));
                    }
                }
                let spec = family_spec(family, &all)?;
                let (cq, cr) = spec
                    .expected_class()?
                    .ok_or_else(|| anyhow!("family {family} has no class (q, r)"))?;
                let chi = family_chi(&spec)?;
                rep.results = report::curve(&curve_invariants(cq, cr, chi)?);
            }
        }
        Command::Scan {
            q,
            r,
            trials,
            seed,
            solver,
            ..
        } => {
            rep.input("q", *q);
            rep.input("r", *r);
            rep.input("trials", *trials);
            rep.input("seed", *seed);
            let s = scan_point_counts_with(*q, *r, *trials, *seed, &solver.options(rep)?)?;
            for (kind, n) in &s.failures {
                rep.warnings.push(format!("{n} trial(s) failed with {kind}"));
            }
            for o in &s.outliers {
                rep.warnings.push(format!("trial {} counted {} points, outside the predicted set", o.trial, o.count));
            }
            if s.uncertified > 0 {
                rep.warnings.push(format!("{} trial(s) relied on uncertified index-0 clusters", s.uncertified));
            }
            rep.results = report::scan(&s);
        }
        Command::Demo { seed, solver, .. } => {
            rep.input("seed", *seed);
            let items = demo::run(*seed, &solver.options(rep)?);
            for item in &items {
                println!("{} {}: {}", if item.pass { "PASS" } else { "FAIL" }, item.name, item.detail);
            }
            let passed = items.iter().filter(|i| i.pass).count();
            println!("{passed}/{} items passed", items.len());
            rep.results = json!({ "items": items.iter().map(demo::Item::to_json).collect::<Vec<_>>(), "passed": passed, "total": items.len() });
            return Ok(passed == items.len());
        }
    }
    Ok(true)
}

fn output(command: &Command) -> &Output {
    match command {
        Command::Analyze { out, .. }
        | Command::Roots { out, .. }
        | Command::Lkn { out, .. }
        | Command::Degree { out, .. }
        | Command::Invariants { out, .. }
        | Command::Scan { out, .. }
        | Command::Demo { out, .. } => out,
    }
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Analyze { .. } => "analyze",
        Command::Roots { .. } => "roots",
        Command::Lkn { .. } => "lkn",
        Command::Degree { .. } => "degree",
        Command::Invariants { .. } => "invariants",
        Command::Scan { .. } => "scan",
        Command::Demo { .. } => "demo",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut rep = Report::new(name(&cli.command));
    let outcome = run(&cli.command, &mut rep);
    let ok = match &outcome {
        Ok(ok) => *ok,
        Err(e) => {
            eprintln!("error: {e:#}");
            rep.results = report::error(e);
            false
        }
    };
    let text = serde_json::to_string_pretty(&rep.to_json()).expect("report serializes") + "\n";
    match &output(&cli.command).json {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None if !matches!(cli.command, Command::Demo { .. }) => print!("{text}"),
        None => {}
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
