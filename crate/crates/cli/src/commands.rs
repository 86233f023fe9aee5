use pipedream_reg::grothendieck::{
    cm, cm_double, cm_from_grothendieck, grothendieck, grothendieck_double,
    rajchgot_poly_recursive, schubert, Variant,
};
use pipedream_reg::numbers::binomial;
use pipedream_reg::pipedreams::{
    grothendieck_from_pipes, max_pipe_dream, pipe_dreams, schubert_double_from_pipes,
    DEFAULT_PIPE_CAP,
};
use pipedream_reg::rajchgot::{fireworks_from_partition, BlobDiagram, SetPartition};
use pipedream_reg::verify::{
    self, check_info, maxreg_enumerated, maxreg_formula, maxreg_k, maxreg_maximizers,
    CheckOptions, CheckReport,
};
use pipedream_reg::{Error, PermStats, Permutation, Result, SparsePoly};
use serde::Serialize;
use serde_json::json;

use crate::render::{csv, json, pairs, table, tuple};
use crate::{Cli, Command, Format, PipeMode, Which};

/// Formula-only `maxreg` bound.
pub const MAXREG_FORMULA_CAP: usize = 20;
/// Enumerated `maxreg` bound.
pub const MAXREG_ENUM_CAP: usize = 8;

pub struct Output {
    pub stdout: String,
    pub passed: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, passed: true }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    if let Some(cap) = cli.cap {
        eprintln!("warning: enumeration caps overridden (cap = {cap}); sweeps past the defaults can be very slow");
    }
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Stats { perm } => stats(cli, &perm.parse()?),
        Command::Poly {
            perm,
            which,
            cross_check,
        } => poly(cli, &perm.parse()?, *which, *cross_check),
        Command::Pipedreams { perm, mode } => pipedreams(cli, &perm.parse()?, *mode),
        Command::Maxreg { n_max, enumerate } => maxreg(cli, *n_max, *enumerate),
        Command::Verify { args, list } => {
            if *list {
                Ok(list_checks(cli))
            } else {
                run_verify(cli, args)
            }
        }
    }
}

/// The enumeration bound: `--cap` if given, else `default`.
fn enumeration_cap(cli: &Cli, default: usize) -> usize {
    cli.cap.unwrap_or(default)
}

fn cap_check(what: &str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: what.to_string(),
            n,
            cap,
        });
    }
    Ok(())
}

fn stats(cli: &Cli, w: &Permutation) -> Result<Output> {
    let s = PermStats::new(w);
    let rows: Vec<(&str, String)> = vec![
        ("perm", s.perm.to_string()),
        ("inv", s.inv.to_string()),
        ("inv_code", tuple(&s.inv_code)),
        ("maj", s.maj.to_string()),
        ("raj", s.raj.to_string()),
        ("raj_code", tuple(&s.raj_code)),
        ("regularity", s.regularity.to_string()),
        ("shape", tuple(s.shape.parts())),
        ("set_partition", s.set_partition.to_string()),
        ("fireworks", s.fireworks.to_string()),
        ("inverse_fireworks", s.inverse_fireworks.to_string()),
        ("dominant", s.dominant.to_string()),
        ("phi", s.phi.to_string()),
        ("phi_inv", s.phi_inv.to_string()),
    ];
    Ok(Output::ok(match cli.format {
        Format::Text => pairs(&rows),
        Format::Json => json(&s),
        Format::Csv => {
            let header: Vec<&str> = rows.iter().map(|(k, _)| *k).collect();
            csv(&header, &[rows.iter().map(|(_, v)| v.clone()).collect()])
        }
    }))
}

fn signed(p: SparsePoly, e: usize) -> SparsePoly {
    if e.is_multiple_of(2) {
        p
    } else {
        -&p
    }
}

/// The partition whose Rajchgot polynomial is the x-factor of `CM_w(x; y)`.
fn x_factor_partition(w: &Permutation) -> SetPartition {
    BlobDiagram::new(&w.inverse()).set_partition()
}

fn compute_poly(w: &Permutation, which: Which) -> SparsePoly {
    match which {
        Which::Groth => (*grothendieck(w)).clone(),
        Which::Grothxy => (*grothendieck_double(w)).clone(),
        Which::Schubert => schubert(w),
        Which::Cm => cm(w),
        Which::Cmxy => cm_double(w),
        Which::Rajpoly => rajchgot_poly_recursive(&x_factor_partition(w)),
    }
}

fn poly_from_pipes(w: &Permutation, which: Which, cap: usize) -> Result<SparsePoly> {
    Ok(match which {
        Which::Groth => grothendieck_from_pipes(w, Variant::Single, cap)?,
        Which::Grothxy => grothendieck_from_pipes(w, Variant::Double, cap)?,
        Which::Schubert => schubert_double_from_pipes(w, cap)?.drop_y(),
        Which::Cm => cm_from_grothendieck(&grothendieck_from_pipes(w, Variant::Single, cap)?, w.inv()),
        Which::Cmxy => signed(grothendieck_from_pipes(w, Variant::Double, cap)?.top_part(), w.inv()),
        Which::Rajpoly => {
            let v = fireworks_from_partition(&x_factor_partition(w)).inverse();
            cm_from_grothendieck(&grothendieck_from_pipes(&v, Variant::Single, cap)?, v.inv())
        }
    })
}

fn which_name(which: Which) -> &'static str {
    match which {
        Which::Groth => "groth",
        Which::Grothxy => "grothxy",
        Which::Schubert => "schubert",
        Which::Cm => "cm",
        Which::Cmxy => "cmxy",
        Which::Rajpoly => "rajpoly",
    }
}

fn poly(cli: &Cli, w: &Permutation, which: Which, cross_check: bool) -> Result<Output> {
    let mut passed = true;
    if cross_check {
        cap_check("pipe-dream cross-check", w.n(), enumeration_cap(cli, DEFAULT_PIPE_CAP))?;
    }
    let p = compute_poly(w, which);
    if cross_check {
        let q = poly_from_pipes(w, which, enumeration_cap(cli, DEFAULT_PIPE_CAP))?;
        if p != q {
            eprintln!("cross-check failed: pipe dreams give {q}");
            passed = false;
        }
    }
    let stdout = match cli.format {
        Format::Text => format!("{p}\n"),
        Format::Json => json(&json!({
            "perm": w,
            "which": which_name(which),
            "poly": p.to_string(),
            "cross_checked": cross_check && passed,
        })),
        Format::Csv => csv(
            &["perm", "which", "poly"],
            &[vec![w.to_string(), which_name(which).into(), p.to_string()]],
        ),
    };
    Ok(Output { stdout, passed })
}

fn pipedreams(cli: &Cli, w: &Permutation, mode: PipeMode) -> Result<Output> {
    let n = w.n();
    let stdout = match mode {
        PipeMode::Count | PipeMode::List => {
            cap_check("pipe-dream enumeration", n, enumeration_cap(cli, DEFAULT_PIPE_CAP))?;
            let all = pipe_dreams(w, enumeration_cap(cli, DEFAULT_PIPE_CAP))?;
            let reduced = all.iter().filter(|p| p.is_reduced()).count();
            if mode == PipeMode::Count {
                match cli.format {
                    Format::Text => format!("reduced {reduced}\ntotal {}\n", all.len()),
                    Format::Json => json(&json!({"perm": w, "reduced": reduced, "total": all.len()})),
                    Format::Csv => csv(
                        &["perm", "reduced", "total"],
                        &[vec![w.to_string(), reduced.to_string(), all.len().to_string()]],
                    ),
                }
            } else {
                match cli.format {
                    Format::Text => all
                        .iter()
                        .map(|p| {
                            let tag = if p.is_reduced() { ", reduced" } else { "" };
                            format!("# {} crosses{tag}\n{}", p.len(), diagram(&p.to_string()))
                        })
                        .collect::<Vec<_>>()
                        .join("\n"),
                    Format::Json => json(&json!({
                        "perm": w,
                        "pipe_dreams": all
                            .iter()
                            .map(|p| json!({"crosses": p, "reduced": p.is_reduced()}))
                            .collect::<Vec<_>>(),
                    })),
                    Format::Csv => csv(
                        &["index", "crosses", "reduced", "cells"],
                        &all.iter()
                            .enumerate()
                            .map(|(k, p)| {
                                vec![
                                    (k + 1).to_string(),
                                    p.len().to_string(),
                                    p.is_reduced().to_string(),
                                    cells(&p.crosses()),
                                ]
                            })
                            .collect::<Vec<_>>(),
                    ),
                }
            }
        }
        PipeMode::Max => {
            let p = max_pipe_dream(w)?;
            let (rows, cols) = (p.row_counts(), p.col_counts());
            match cli.format {
                Format::Text => format!(
                    "{}crosses {}\nrows {}\ncolumns {}\n",
                    diagram(&p.to_string()),
                    p.len(),
                    tuple(&rows),
                    tuple(&cols)
                ),
                Format::Json => json(&json!({
                    "perm": w,
                    "crosses": p,
                    "rows": rows,
                    "columns": cols,
                })),
                Format::Csv => csv(
                    &["perm", "crosses", "rows", "columns", "cells"],
                    &[vec![
                        w.to_string(),
                        p.len().to_string(),
                        tuple(&rows),
                        tuple(&cols),
                        cells(&p.crosses()),
                    ]],
                ),
            }
        }
    };
    Ok(Output::ok(stdout))
}

/// The ASCII staircase followed by a newline, or nothing for `n = 1`.
fn diagram(ascii: &str) -> String {
    if ascii.is_empty() {
        String::new()
    } else {
        format!("{ascii}\n")
    }
}

fn cells(cs: &[(usize, usize)]) -> String {
    cs.iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct MaxregRow {
    n: usize,
    k: usize,
    max_regularity: u64,
    maximizers: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    list: Option<Vec<Permutation>>,
}

fn maxreg(cli: &Cli, n_max: usize, enumerate: bool) -> Result<Output> {
    let cap = if enumerate {
        enumeration_cap(cli, MAXREG_ENUM_CAP)
    } else {
        cli.cap.unwrap_or(MAXREG_FORMULA_CAP).max(MAXREG_FORMULA_CAP)
    };
    cap_check("maxreg", n_max, cap)?;
    let mut passed = true;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let k = maxreg_k(n);
        let value = maxreg_formula(n);
        let count = binomial(k, n - binomial(k, 2) as usize);
        let list = if enumerate {
            let (max, found) = maxreg_enumerated(n);
            if max != value || found != maxreg_maximizers(n) {
                eprintln!("n = {n}: sweep gives {max} attained by {} permutations", found.len());
                passed = false;
            }
            Some(found.into_iter().collect())
        } else {
            None
        };
        rows.push(MaxregRow {
            n,
            k,
            max_regularity: value,
            maximizers: count,
            list,
        });
    }
    let mut header = vec!["n", "k", "max_regularity", "maximizers"];
    if enumerate {
        header.push("list");
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![
                r.n.to_string(),
                r.k.to_string(),
                r.max_regularity.to_string(),
                r.maximizers.to_string(),
            ];
            if let Some(l) = &r.list {
                v.push(l.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
            }
            v
        })
        .collect();
    let stdout = match cli.format {
        Format::Text => table(&header, &cells),
        Format::Json => json(&rows),
        Format::Csv => csv(&header, &cells),
    };
    Ok(Output { stdout, passed })
}

fn list_checks(cli: &Cli) -> Output {
    let rows: Vec<Vec<String>> = verify::checks()
        .map(|c| {
            vec![
                c.name.to_string(),
                c.default_n.to_string(),
                c.cap.to_string(),
                c.about.to_string(),
            ]
        })
        .collect();
    let header = ["check", "default_n", "cap", "about"];
    Output::ok(match cli.format {
        Format::Text => table(&header, &rows),
        Format::Json => json(
            &rows
                .iter()
                .map(|r| json!({"check": r[0], "default_n": r[1].parse::<usize>().unwrap(), "cap": r[2].parse::<usize>().unwrap(), "about": r[3]}))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => csv(&header, &rows),
    })
}

fn run_verify(cli: &Cli, args: &[String]) -> Result<Output> {
    let mut names = Vec::new();
    let mut n_override = None;
    for a in args {
        match a.parse::<usize>() {
            Ok(n) => n_override = Some(n),
            Err(_) => names.push(a.clone()),
        }
    }
    if names.is_empty() {
        names = verify::checks().map(|c| c.name.to_string()).collect();
    }
    // Validate everything before running anything.
    let mut plan = Vec::new();
    for name in &names {
        let info = check_info(name)?;
        let n = n_override.unwrap_or(info.default_n);
        let allow_over_cap = n > info.cap && cli.cap.is_some_and(|c| n <= c);
        if n > info.cap && !allow_over_cap {
            return Err(Error::CapExceeded {
                what: format!("check {name}"),
                n,
                cap: info.cap,
            });
        }
        plan.push((name.clone(), n, allow_over_cap));
    }
    let mut reports: Vec<CheckReport> = Vec::new();
    for (name, n, allow_over_cap) in plan {
        let opts = CheckOptions {
            jobs: 0,
            allow_over_cap,
        };
        reports.push(verify::check(&name, n, opts)?);
    }
    let passed = reports.iter().all(CheckReport::passed);
    let stdout = match cli.format {
        Format::Text => verify_text(&reports),
        Format::Json => json(&json!({"passed": passed, "reports": reports})),
        Format::Csv => csv(
            &["check", "n_max", "checked", "failures", "values", "ms"],
            &reports
                .iter()
                .map(|r| {
                    vec![
                        r.check.clone(),
                        r.n_max.to_string(),
                        r.checked.to_string(),
                        r.failures.len().to_string(),
                        r.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                        r.ms.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Output { stdout, passed })
}

/// Timing is left out so the text is stable across runs.
fn verify_text(reports: &[CheckReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                if r.passed() { "PASS" } else { "FAIL" }.to_string(),
                r.check.clone(),
                r.n_max.to_string(),
                r.checked.to_string(),
                r.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            ]
        })
        .collect();
    let mut out = table(&["status", "check", "n_max", "checked", "values"], &rows);
    for r in reports {
        for f in &r.failures {
            out += &format!("{}: {} expected {} got {}\n", r.check, f.input, f.expected, f.actual);
        }
    }
    let ok = reports.iter().filter(|r| r.passed()).count();
    out += &format!("{ok}/{} checks passed\n", reports.len());
    out
}
