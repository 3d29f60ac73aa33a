use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use catalan_cf::config::Config;
use catalan_cf::contfrac::{default_depth, jfraction_series_at_depth, named_cf, NamedCf};
use catalan_cf::gamma::{gamma_decompose, gamma_row_via_perms, mfs_orbit};
use catalan_cf::pathdiag::{self, path_sum, DiagramKind, LaguerreHistory, PathDiagram};
use catalan_cf::patternclass::{
    class_polynomial, generate_class, insertion_decode_with, insertion_encode, insertion_encode_retained,
    perms_avoiding_bruteforce, InsertionWord, PatternClass, ReplayMode,
};
use catalan_cf::permstats::{
    des, hat_2_13, local_stats, vincular2, vincular3, Boundary, Permutation, Vincular2,
};
use catalan_cf::polyring::{MPoly, Var};
use catalan_cf::tables::{render_csv, table, Table};
use catalan_cf::verify::{verify, verify_all, Theorem, VerifyReport};

/// Refined Catalan continued fractions, pattern classes and their bijections.
#[derive(Parser, Debug)]
#[command(name = "catalan-cf", version, about)]
struct Cli {
    /// TOML file with default caps and specializations.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a named J-fraction as a power series.
    Expand {
        #[arg(long, value_parser = parse_cf)]
        cf: NamedCf,
        #[arg(long)]
        order: usize,
        /// Integer specialization, e.g. `--set u=1`; repeatable.
        #[arg(long = "set", value_parser = parse_set)]
        set: Vec<(Var, i64)>,
        #[command(flatten)]
        format: Format,
    },
    /// Local and vincular statistics of a permutation.
    Stats {
        #[arg(long)]
        perm: Permutation,
        #[arg(long, default_value = "zero")]
        boundary: Boundary,
        #[arg(long)]
        json: bool,
    },
    /// List a pattern class, or its weighted polynomial with `--poly`.
    Enumerate {
        #[arg(long, value_parser = parse_class)]
        class: PatternClass,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: bool,
        /// Filter all of S_n instead of running the grammar.
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Insertion encoding of a permutation.
    Encode {
        #[arg(long)]
        perm: Permutation,
        /// Keep a free slot at the right end.
        #[arg(long)]
        retained: bool,
    },
    /// Replay an insertion word such as `m1,m1,l2,f1,f2,f1`.
    Decode {
        #[arg(long)]
        word: InsertionWord,
        #[arg(long)]
        retained: bool,
    },
    /// Apply one of the path bijections.
    Biject {
        #[arg(long)]
        map: MapName,
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        json: bool,
    },
    /// Total weight of all path diagrams of a type.
    Pathsum {
        #[arg(long = "type", value_parser = parse_kind)]
        kind: DiagramKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Gamma coefficients of the type B polynomial of index n.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Via::Both)]
        via: Via,
        #[arg(long)]
        json: bool,
    },
    /// Orbit of a permutation under the valley-hopping action.
    Orbit {
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites; exits non-zero if any check fails.
    Verify {
        #[arg(long, conflicts_with = "theorem", required_unless_present = "theorem")]
        all: bool,
        #[arg(long, value_parser = parse_theorem)]
        theorem: Option<Theorem>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Write the report array to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Print a coefficient table.
    Table {
        #[arg(long, value_parser = parse_table)]
        which: Table,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum MapName {
    Phi1,
    Phi2,
    Phi3,
    Psi,
    Phi,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Via {
    Cf,
    Perms,
    Both,
}

fn parse_cf(s: &str) -> Result<NamedCf, String> {
    s.parse()
}

fn parse_class(s: &str) -> Result<PatternClass, String> {
    s.parse().map_err(|e: catalan_cf::patternclass::ClassError| e.to_string())
}

fn parse_kind(s: &str) -> Result<DiagramKind, String> {
    s.parse().map_err(|e: pathdiag::PathError| e.to_string())
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: catalan_cf::verify::VerifyError| e.to_string())
}

fn parse_table(s: &str) -> Result<Table, String> {
    s.parse().map_err(|e: catalan_cf::tables::TableError| e.to_string())
}

fn parse_set(s: &str) -> Result<(Var, i64), String> {
    let (var, value) = s.split_once('=').ok_or_else(|| format!("expected var=int, got {s:?}"))?;
    let var: Var = var.trim().parse().map_err(|e| format!("{e}"))?;
    let value: i64 = value.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((var, value))
}

// Like println!, but a closed stdout surfaces as an error instead of a panic.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .any(|c| c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe))
}

/// Returns whether every check performed passed.
fn run(cli: Cli) -> Result<bool> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Expand { cf, order, set, format } => {
            let mut values = config.specializations()?;
            for (v, x) in set {
                values.retain(|(w, _)| *w != v);
                values.push((v, x));
            }
            let j = named_cf(cf).specialize(&values);
            let series = jfraction_series_at_depth(&j, order, default_depth(order), config.exponent_cap)
                .context("series expansion")?;
            if format.json {
                print_json(&series)?;
            } else {
                for (n, c) in series.coeffs().iter().enumerate() {
                    if format.csv {
                        out!("{n},{c}");
                    } else {
                        out!("{n}: {c}");
                    }
                }
            }
        }
        Command::Stats { perm, boundary, json } => {
            let ls = local_stats(&perm, boundary);
            let v3 = vincular3(&perm);
            let vin: serde_json::Map<_, _> = Vincular2::ALL
                .iter()
                .map(|&w| (w.name().to_string(), json!(vincular2(&perm, w, None))))
                .collect();
            let report = json!({
                "perm": perm.to_string(),
                "boundary": boundary,
                "des": des(&perm),
                "pk": ls.peaks, "val": ls.valleys, "da": ls.double_ascents, "dd": ls.double_descents,
                "vincular2": vin,
                "hat_2-13": hat_2_13(&perm, None),
                "vincular3": v3,
                "vincular3_total": v3.total(),
            });
            if json {
                print_json(&report)?;
            } else {
                out!("des = {}", des(&perm));
                out!("pk = {} {{{}}}", ls.pk(), join(&ls.peaks));
                out!("val = {} {{{}}}", ls.val(), join(&ls.valleys));
                out!("da = {} {{{}}}", ls.da(), join(&ls.double_ascents));
                out!("dd = {} {{{}}}", ls.dd(), join(&ls.double_descents));
                for w in Vincular2::ALL {
                    out!("({}) = {}", w.name(), vincular2(&perm, w, None));
                }
                out!("hat(2-13) = {}", hat_2_13(&perm, None));
                out!(
                    "31-2-4 = {}, 31-4-2 = {}, 41-2-3 = {}, 41-3-2 = {}, total = {}",
                    v3.s3124,
                    v3.s3142,
                    v3.s4123,
                    v3.s4132,
                    v3.total()
                );
            }
        }
        Command::Enumerate { class, n, poly, brute, format } => {
            if poly {
                let f = class_polynomial(n, class);
                if format.json {
                    print_json(&f)?;
                } else if format.csv {
                    out!("{n},{f}");
                } else {
                    out!("{f}");
                }
            } else {
                let members: Vec<Permutation> = if brute {
                    perms_avoiding_bruteforce(n, &class.patterns(), config.bruteforce_cap)?.collect()
                } else {
                    generate_class(n, class).collect()
                };
                if format.json {
                    print_json(&members)?;
                } else {
                    for m in &members {
                        out!("{m}");
                    }
                }
            }
        }
        Command::Encode { perm, retained } => {
            let w = if retained { insertion_encode_retained(&perm) } else { insertion_encode(&perm) };
            out!("{w}");
        }
        Command::Decode { word, retained } => {
            let mode = if retained { ReplayMode::RetainFinalSlot } else { ReplayMode::Standard };
            out!("{}", insertion_decode_with(&word, mode)?);
        }
        Command::Biject { map, perm, json } => {
            let diagram = |kind| -> Result<PathDiagram> { Ok(pathdiag::phi(kind, &perm)?) };
            let history = |h: LaguerreHistory| {
                json!({"path": h.path().to_string(), "p": h.p(), "restricted": h.is_restricted()})
            };
            let out = match map {
                MapName::Psi => history(pathdiag::psi_fv(&perm)),
                MapName::Phi => history(pathdiag::phi_fv(&perm)),
                MapName::Phi1 | MapName::Phi2 | MapName::Phi3 => {
                    let kind = match map {
                        MapName::Phi1 => DiagramKind::A,
                        MapName::Phi2 => DiagramKind::B,
                        _ => DiagramKind::C,
                    };
                    let d = diagram(kind)?;
                    json!({"path": d.path().to_string(), "xi": d.xi(), "weight": d.weight().to_string()})
                }
            };
            if json {
                print_json(&out)?;
            } else {
                out!("path: {}", out["path"].as_str().unwrap_or(""));
                if let Some(p) = out.get("p") {
                    out!("p: {}", join(p.as_array().into_iter().flatten()));
                }
                if let Some(xi) = out.get("xi") {
                    out!("xi: {}", join(xi.as_array().into_iter().flatten()));
                    out!("weight: {}", out["weight"].as_str().unwrap_or(""));
                }
            }
        }
        Command::Pathsum { kind, n, json } => {
            let f = path_sum(n, kind, config.bruteforce_cap.max(pathdiag::DEFAULT_PATH_CAP))?;
            if json {
                print_json(&f)?;
            } else {
                out!("{f}");
            }
        }
        Command::Gamma { n, via, json } => {
            let cf = (via != Via::Perms).then(|| -> Result<Vec<MPoly>> {
                let j = named_cf(NamedCf::TypeB).specialize(&[(Var::U, 1), (Var::V, 1), (Var::W, 1)]);
                let b = jfraction_series_at_depth(&j, n, default_depth(n), config.exponent_cap)?.coeff(n);
                Ok(gamma_decompose(&b)?.gammas)
            });
            let cf = cf.transpose()?;
            let perms = (via != Via::Cf).then(|| gamma_row_via_perms(n));
            let agree = match (&cf, &perms) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            };
            if json {
                print_json(&json!({"n": n, "cf": cf, "perms": perms, "agree": agree}))?;
            } else {
                let rows = cf.as_ref().or(perms.as_ref()).expect("at least one route");
                for (k, g) in rows.iter().enumerate() {
                    out!("gamma[{k}] = {g}");
                }
                if via == Via::Both {
                    out!("routes agree: {agree}");
                }
            }
            return Ok(agree);
        }
        Command::Orbit { perm, json } => {
            let o = mfs_orbit(&perm);
            if json {
                print_json(&o)?;
            } else {
                out!("representative: {}", o.representative);
                for m in &o.members {
                    out!("{m}");
                }
            }
        }
        Command::Verify { all, theorem, nmax, json } => {
            let reports: Vec<VerifyReport> = if all {
                verify_all(nmax)
            } else {
                let t = theorem.expect("clap enforces --all or --theorem");
                vec![verify(t, nmax.unwrap_or(t.default_nmax()))?]
            };
            for r in &reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                out!("{status} {} nmax={} cells={} ({} ms)", r.theorem, r.nmax, r.cells.len(), r.wall_time_ms);
                for c in r.failures() {
                    let label = c.label.as_deref().map(|l| format!(" {l}")).unwrap_or_default();
                    out!("  n={}{label}: {}", c.n, c.diff.as_deref().unwrap_or("mismatch"));
                }
            }
            if let Some(path) = json {
                std::fs::write(&path, serde_json::to_string_pretty(&reports)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            return Ok(reports.iter().all(|r| r.pass));
        }
        Command::Table { which, nmax, csv } => {
            let rows = table(which, nmax);
            if csv {
                print!("{}", render_csv(&rows));
            } else {
                for r in rows {
                    out!("{}: {}", r.n, r.cells.join(" "));
                }
            }
        }
    }
    Ok(true)
}
