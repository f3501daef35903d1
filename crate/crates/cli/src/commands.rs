use std::fs;
use std::io::Write;
use std::path::Path;

use critpoints::exact::{self, format_rational};
use critpoints::io::{write_csv, ResultsFile, StateFile, StateMeta};
use critpoints::verify::Expectation;
use critpoints::{
    construct_state, enumerate, extend_iteratively, verify_state, CanonicalBeta, EnumerateOptions,
    Enumeration, Symmetry, Tolerances, VerificationReport,
};
use serde::{Deserialize, Serialize};

use crate::args::{Format, OutputArgs, SearchArgs, SymmetryArg};
use crate::error::CliError;

/// A constructed state with its verification report.
#[derive(Debug, Serialize, Deserialize)]
pub struct StateEntry {
    #[serde(flatten)]
    pub state: StateFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<VerificationReport>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StatesFile {
    pub qubits: usize,
    pub states: Vec<StateEntry>,
}

#[derive(Debug, Serialize)]
struct Candidates<'a> {
    qubits: usize,
    candidates: &'a [CanonicalBeta],
    #[serde(skip_serializing_if = "Option::is_none")]
    missing: Option<&'a [CanonicalBeta]>,
}

#[derive(Debug, Serialize)]
struct BenchReport {
    qubits: usize,
    symmetry: Symmetry,
    workers: usize,
    critical_points: usize,
    work_units: usize,
    subsets_examined: u64,
    dependent_rejections: u64,
    exact_solves: usize,
    exact_rejections: usize,
    unpruned_subsets: String,
    wall_time_s: f64,
    compression_ratio: f64,
}

fn run_enumeration(qubits: usize, options: EnumerateOptions) -> Result<Enumeration, CliError> {
    enumerate(qubits, options).map_err(|e| CliError::Usage(e.to_string()))
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(command: &str) -> CliError {
    CliError::Usage(format!("{command} does not support --format csv"))
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        let mut s = padded.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(&mut headers.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

pub fn cmd_enumerate(search: &SearchArgs, raw: bool, out: &OutputArgs) -> Result<(), CliError> {
    let qubits = search.qubits.into();
    let e = run_enumeration(qubits, search.options(raw))?;
    let text = match out.format {
        Format::Json => ResultsFile::from_enumeration(&e).to_json(),
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(qubits, &e.points, &mut buf).map_err(|e| CliError::Failed(e.to_string()))?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = e
                .points
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    vec![
                        (i + 1).to_string(),
                        p.beta.to_string(),
                        format_rational(&p.norm_sq),
                        format_rational(&p.entropy),
                        if p.boundary { "yes" } else { "no" }.to_string(),
                        p.witness().labels().join(" "),
                    ]
                })
                .collect();
            table(
                &["#", "beta", "norm_sq", "entropy", "boundary", "witness"],
                &rows,
            )
        }
    };
    emit(out, &text)?;
    eprintln!("{} critical points for L={qubits}", e.points.len());
    Ok(())
}

pub fn cmd_states(search: &SearchArgs, out: &OutputArgs, tol: &Tolerances) -> Result<(), CliError> {
    if out.format == Format::Csv {
        return Err(no_csv("states"));
    }
    let qubits = search.qubits.into();
    let e = run_enumeration(qubits, search.options(false))?;
    let mut entries = Vec::with_capacity(e.points.len());
    let mut failures = Vec::new();
    for p in &e.points {
        let built = construct_state(p, tol).map_err(|err| {
            CliError::Failed(format!("construction failed for {}: {err}", p.beta))
        })?;
        let expected = Expectation {
            beta: p.beta.components().iter().map(exact::to_f64).collect(),
            entropy: exact::to_f64(&p.entropy),
        };
        let report = verify_state(&built.state, Some(&expected), tol);
        if !report.pass {
            failures.push(p.beta.to_string());
        }
        let meta = StateMeta {
            beta: p.beta.clone(),
            entropy: p.entropy.clone(),
            route: built.route,
        };
        entries.push(StateEntry {
            state: StateFile::new(&built.state, Some(meta)),
            report: Some(report),
        });
    }
    let text = match out.format {
        Format::Json => json(&StatesFile {
            qubits,
            states: entries,
        }),
        _ => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|s| {
                    let meta = s.state.meta.as_ref().expect("built with meta");
                    let report = s.report.as_ref().expect("built with report");
                    vec![
                        meta.beta.to_string(),
                        format_rational(&meta.entropy),
                        format!("{:?}", meta.route).to_lowercase(),
                        s.state
                            .amplitudes
                            .iter()
                            .filter(|[re, im]| re.hypot(*im) > 1e-12)
                            .count()
                            .to_string(),
                        format!("{:.1e}", report.eigen_residual),
                        format!("{:.1e}", report.offdiag_max),
                        pass_label(report.pass).to_string(),
                    ]
                })
                .collect();
            table(
                &[
                    "beta", "entropy", "route", "terms", "residual", "offdiag", "result",
                ],
                &rows,
            )
        }
    };
    emit(out, &text)?;
    eprintln!(
        "{} states for L={qubits}, {} failed",
        e.points.len(),
        failures.len()
    );
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "verification failed for {}",
            failures.join(", ")
        )))
    }
}

fn pass_label(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn parse_states(path: &Path, text: &str) -> Result<Vec<StateFile>, CliError> {
    let input = |source| CliError::Input {
        path: path.to_path_buf(),
        source,
    };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| input(e.into()))?;
    if value.get("states").is_some() {
        let bundle: StatesFile = serde_json::from_value(value).map_err(|e| input(e.into()))?;
        if bundle.states.is_empty() {
            return Err(input(critpoints::io::IoError::Malformed(
                "no states".into(),
            )));
        }
        for s in &bundle.states {
            StateFile::from_json(&json(&s.state)).map_err(input)?;
        }
        Ok(bundle.states.into_iter().map(|s| s.state).collect())
    } else {
        Ok(vec![StateFile::from_json(text).map_err(input)?])
    }
}

pub fn cmd_verify(input: &Path, out: &OutputArgs, tol: &Tolerances) -> Result<(), CliError> {
    if out.format == Format::Csv {
        return Err(no_csv("verify"));
    }
    let files = parse_states(input, &read(input)?)?;
    let mut reports = Vec::with_capacity(files.len());
    for f in &files {
        let state = f.state().expect("validated on parse");
        let expected = f.meta.as_ref().map(|m| Expectation {
            beta: m.beta.components().iter().map(exact::to_f64).collect(),
            entropy: exact::to_f64(&m.entropy),
        });
        reports.push(verify_state(&state, expected.as_ref(), tol));
    }
    let text = match out.format {
        Format::Json if reports.len() == 1 => json(&reports[0]),
        Format::Json => json(&reports),
        _ => {
            let fmt_vec = |v: &[f64]| {
                let parts: Vec<String> = v.iter().map(|x| format!("{x:.6}")).collect();
                format!("({})", parts.join(", "))
            };
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        fmt_vec(&r.beta_measured),
                        format!("{:.12}", r.entropy_measured),
                        format!("{:.6}", r.eigenvalue),
                        format!("{:.1e}", r.eigen_residual),
                        format!("{:.1e}", r.offdiag_max),
                        pass_label(r.pass).to_string(),
                    ]
                })
                .collect();
            table(
                &[
                    "beta",
                    "entropy",
                    "eigenvalue",
                    "residual",
                    "offdiag",
                    "result",
                ],
                &rows,
            )
        }
    };
    emit(out, &text)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{failed} of {} states failed verification",
            reports.len()
        )))
    }
}

pub fn cmd_extend(
    input: &Path,
    check: bool,
    symmetry: SymmetryArg,
    workers: u16,
    out: &OutputArgs,
) -> Result<(), CliError> {
    let results = ResultsFile::from_json(&read(input)?).map_err(|source| CliError::Input {
        path: input.to_path_buf(),
        source,
    })?;
    if results.critical_points.is_empty() {
        return Err(CliError::Input {
            path: input.to_path_buf(),
            source: critpoints::io::IoError::Malformed("no critical points".into()),
        });
    }
    let next = results.qubits + 1;
    let candidates = extend_iteratively(&results.betas());
    let missing = if check {
        let options = EnumerateOptions {
            symmetry: symmetry.into(),
            raw: true,
            workers: workers.into(),
        };
        let level = run_enumeration(next, options)?.betas();
        let missing: Vec<CanonicalBeta> = candidates
            .iter()
            .filter(|b| level.binary_search_by(|x| cmp_points(x, b)).is_err())
            .cloned()
            .collect();
        Some(missing)
    } else {
        None
    };
    let text = match out.format {
        Format::Json => json(&Candidates {
            qubits: next,
            candidates: &candidates,
            missing: missing.as_deref(),
        }),
        Format::Csv => {
            let mut s = String::from("qubits,beta\n");
            for c in &candidates {
                s.push_str(&format!("{next},{}\n", c.to_strings().join(";")));
            }
            s
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = candidates
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut row = vec![(i + 1).to_string(), c.to_string()];
                    if let Some(m) = &missing {
                        row.push(if m.contains(c) { "missing" } else { "present" }.to_string());
                    }
                    row
                })
                .collect();
            let headers: &[&str] = if check {
                &["#", "beta", "check"]
            } else {
                &["#", "beta"]
            };
            table(headers, &rows)
        }
    };
    emit(out, &text)?;
    eprintln!(
        "{} candidates at L={next} from {} points at L={}",
        candidates.len(),
        results.critical_points.len(),
        results.qubits
    );
    match missing {
        Some(m) if !m.is_empty() => Err(CliError::Failed(format!(
            "{} of {} candidates are not critical points at L={next}",
            m.len(),
            candidates.len()
        ))),
        Some(_) => {
            eprintln!("containment holds at L={next}");
            Ok(())
        }
        None => Ok(()),
    }
}

/// Output order of an enumeration: entropy ascending, then β descending.
fn cmp_points(a: &CanonicalBeta, b: &CanonicalBeta) -> std::cmp::Ordering {
    b.norm_sq().cmp(&a.norm_sq()).then_with(|| b.cmp(a))
}

pub fn cmd_bench(search: &SearchArgs, raw: bool, out: &OutputArgs) -> Result<(), CliError> {
    if out.format == Format::Csv {
        return Err(no_csv("bench"));
    }
    let qubits = search.qubits.into();
    let options = search.options(raw);
    let e = run_enumeration(qubits, options)?;
    let s = &e.stats;
    let report = BenchReport {
        qubits,
        symmetry: options.symmetry,
        workers: options.workers,
        critical_points: e.points.len(),
        work_units: s.work_units,
        subsets_examined: s.kernel.solved,
        dependent_rejections: s.kernel.dependent,
        exact_solves: s.exact_solves,
        exact_rejections: s.exact_rejections,
        unpruned_subsets: s.unpruned_subsets.to_string(),
        wall_time_s: s.elapsed.as_secs_f64(),
        compression_ratio: s.compression_ratio(),
    };
    let text = match out.format {
        Format::Json => json(&report),
        _ => {
            let rows = vec![
                vec!["qubits".into(), qubits.to_string()],
                vec![
                    "symmetry".into(),
                    format!("{:?}", options.symmetry).to_lowercase(),
                ],
                vec!["workers".into(), options.workers.to_string()],
                vec!["critical points".into(), e.points.len().to_string()],
                vec!["work units".into(), s.work_units.to_string()],
                vec!["subsets examined".into(), s.kernel.solved.to_string()],
                vec![
                    "dependent rejections".into(),
                    s.kernel.dependent.to_string(),
                ],
                vec!["exact solves".into(), s.exact_solves.to_string()],
                vec!["exact rejections".into(), s.exact_rejections.to_string()],
                vec!["unpruned subsets".into(), s.unpruned_subsets.to_string()],
                vec![
                    "wall time".into(),
                    format!("{:.3} s", s.elapsed.as_secs_f64()),
                ],
                vec![
                    "compression ratio".into(),
                    format!("{:.1}", s.compression_ratio()),
                ],
            ];
            table(&["statistic", "value"], &rows)
        }
    };
    emit(out, &text)
}
