use std::cmp::Ordering;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use incmin::binomial::binomial_rep;
use incmin::compression::{
    compress, compress_above, default_fixpoint_cap, fixpoint_with_cap, left_compress, right_compress,
};
use incmin::format::{
    dset_to_text, family_to_text, parse_complex, parse_complex_chain, parse_dset, parse_family, parse_fvector,
    parse_fvector_chain,
};
use incmin::inc::{inc_image_family, inc_iterate};
use incmin::numeric::{chain_violation, inc_num, kk_violation, shadow_num};
use incmin::oracle::{
    equality_cases, identity_failures, search_shift_noninclusion, verify_identities_random, verify_min_theorem,
    verify_min_theorem_all, verify_segment_lemmas, verify_structure, SweepOptions, VerificationReport,
};
use incmin::order::{borel_leq, rank, squashed_cmp, unrank};
use incmin::simplicial::{
    check_chain, compress_complex, construct_chain, f_vector, inc_complex, non_faces, stabilization_report,
};
use incmin::{Family, SimplicialComplex};
use serde::Serialize;
use serde_json::json;

use crate::args::*;
use crate::config::Config;
use crate::error::CliError;

/// Text to print and whether the command's check passed.
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

struct Printer {
    json: bool,
}

impl Printer {
    fn show<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
            s.push('\n');
            s
        } else {
            text()
        }
    }

    fn family(&self, f: &Family) -> Outcome {
        Outcome { output: self.show(f, || family_to_text(f)), passed: true }
    }

    fn complex(&self, c: &SimplicialComplex) -> Outcome {
        Outcome { output: self.show(c, || complex_text(c)), passed: true }
    }
}

fn read_path(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn read_input(input: &Input) -> Result<String, CliError> {
    match &input.file {
        Some(path) if path.as_os_str() != "-" => read_path(path),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(text)
        }
    }
}

fn complex_text(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    if c.grades().is_empty() {
        out.push_str("(empty complex)\n");
    }
    for (d, family) in c.grades() {
        let faces: Vec<String> = family.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "d={d}: {}", faces.join(" "));
    }
    out
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let p = Printer { json: cli.json };
    match cli.command {
        Command::Inc(cmd) => match cmd {
            IncCommand::Image(input) => Ok(p.family(&inc_image_family(&parse_family(&read_input(&input)?)?))),
            IncCommand::Iterate { steps, input } => {
                Ok(p.family(&inc_iterate(&parse_family(&read_input(&input)?)?, steps)))
            }
        },
        Command::Order(cmd) => order(&p, cmd),
        Command::Compress { above, input } => {
            let f = parse_family(&read_input(&input)?)?;
            let c = match above {
                Some(k) => compress_above(&f, k)?,
                None => compress(&f),
            };
            Ok(p.family(&c))
        }
        Command::Partial(cmd) => match cmd {
            PartialCommand::Left(input) => Ok(p.family(&left_compress(&parse_family(&read_input(&input)?)?)?)),
            PartialCommand::Right(input) => Ok(p.family(&right_compress(&parse_family(&read_input(&input)?)?)?)),
        },
        Command::Fixpoint { cap, input } => {
            let f = parse_family(&read_input(&input)?)?;
            let cap = cap.unwrap_or_else(|| default_fixpoint_cap(&f));
            Ok(p.family(&fixpoint_with_cap(&f, cap)?))
        }
        Command::Numeric(cmd) => numeric(&p, cmd),
        Command::Fvector(FvectorCommand::Check(input)) => {
            let f = parse_fvector(&read_input(&input)?)?;
            let violation = kk_violation(&f)?;
            let output =
                p.show(&json!({ "feasible": violation.is_none(), "violation": violation }), || match violation {
                    None => format!("feasible: {f}\n"),
                    Some(v) => format!("infeasible: {f}, {v}\n"),
                });
            Ok(Outcome { output, passed: violation.is_none() })
        }
        Command::Chain(cmd) => chain(&p, cmd),
        Command::Complex(cmd) => complex(&p, cmd),
        Command::Verify(cmd) => verify(&p, cmd),
        Command::Search(SearchCommand::ShiftNoninclusion { n, d, m, config }) => {
            let config = Config::load(config.as_deref(), &["n", "d", "m"])?;
            let n = n.or(config.get("n")?).unwrap_or(6);
            let d = d.or(config.get("d")?).unwrap_or(2);
            let m = m.or(config.get("m")?).unwrap_or(4);
            let witness = search_shift_noninclusion(n, d, m)?;
            let output = p.show(&witness, || match &witness {
                None => format!("no witness with n={n} d={d} m<={m}\n"),
                Some(w) => format!(
                    "F = {}\ni = {}\nInc(S_i(F)) = {}\nS_i(Inc(F)) = {}\nneither contains the other\n",
                    w.family, w.i, w.inc_of_shift, w.shift_of_inc
                ),
            });
            Ok(Outcome { output, passed: witness.is_some() })
        }
    }
}

fn parse_set_arg(text: &str) -> Result<incmin::DSet, CliError> {
    Ok(parse_dset(text)?)
}

fn order(p: &Printer, cmd: OrderCommand) -> Result<Outcome, CliError> {
    let output = match cmd {
        OrderCommand::Rank { elements } => {
            let u = if elements.is_empty() {
                parse_dset(&read_input(&Input { file: None })?)?
            } else {
                incmin::DSet::new(elements)?
            };
            let r = rank(&u)?;
            p.show(&r, || format!("{r}\n"))
        }
        OrderCommand::Unrank { m, d } => {
            let u = unrank(m, d)?;
            p.show(&u, || format!("{}\n", dset_to_text(&u)))
        }
        OrderCommand::Cmp { left, right } => {
            let o = ordering_name(squashed_cmp(&parse_set_arg(&left)?, &parse_set_arg(&right)?)?);
            p.show(&o, || format!("{o}\n"))
        }
        OrderCommand::Borel { left, right } => {
            let b = borel_leq(&parse_set_arg(&left)?, &parse_set_arg(&right)?)?;
            p.show(&b, || format!("{b}\n"))
        }
    };
    Ok(Outcome { output, passed: true })
}

fn numeric(p: &Printer, cmd: NumericCommand) -> Result<Outcome, CliError> {
    let output = match cmd {
        NumericCommand::Shadow { m, d } => {
            let v = shadow_num(m, d)?;
            p.show(&v, || format!("{v}\n"))
        }
        NumericCommand::Inc { m, d } => {
            let v = inc_num(m, d)?;
            p.show(&v, || format!("{v}\n"))
        }
        NumericCommand::Rep { m, d } => {
            let rep = binomial_rep(m, d)?;
            p.show(&rep, || {
                let terms: Vec<String> = rep.terms().iter().map(|t| format!("C({},{})", t.top, t.bottom)).collect();
                if terms.is_empty() {
                    format!("{m} = 0\n")
                } else {
                    format!("{m} = {}\n", terms.join(" + "))
                }
            })
        }
    };
    Ok(Outcome { output, passed: true })
}

/// A JSON array whose first entry is an object is a chain of complexes.
fn is_complex_chain(text: &str) -> bool {
    matches!(
        serde_json::from_str::<serde_json::Value>(text),
        Ok(serde_json::Value::Array(items)) if items.first().is_some_and(serde_json::Value::is_object)
    )
}

fn chain(p: &Printer, cmd: ChainCommand) -> Result<Outcome, CliError> {
    match cmd {
        ChainCommand::Check(input) => {
            let text = read_input(&input)?;
            if is_complex_chain(&text) {
                let complexes = parse_complex_chain(&text)?;
                let broken = check_chain(&complexes);
                let output = p.show(&json!({ "invariant": broken.is_none(), "break": broken }), || match &broken {
                    None => format!("Inc-invariant chain of {} complexes\n", complexes.len()),
                    Some(b) => format!("not Inc-invariant: {b}\n"),
                });
                return Ok(Outcome { output, passed: broken.is_none() });
            }
            let chain = parse_fvector_chain(&text)?;
            let violation = chain_violation(&chain)?;
            let output =
                p.show(&json!({ "feasible": violation.is_none(), "violation": violation }), || match violation {
                    None => format!("feasible chain of {} f-vectors\n", chain.len()),
                    Some(v) => format!("infeasible: {v}\n"),
                });
            Ok(Outcome { output, passed: violation.is_none() })
        }
        ChainCommand::Construct(input) => {
            let chain = parse_fvector_chain(&read_input(&input)?)?;
            let complexes = construct_chain(&chain)?;
            let output = p.show(&complexes, || {
                let mut out = String::new();
                for (i, c) in complexes.iter().enumerate() {
                    let _ = writeln!(out, "n={} f={}", i + 1, f_vector(c));
                    out.push_str(&complex_text(c));
                }
                out
            });
            Ok(Outcome { output, passed: true })
        }
        ChainCommand::Stabilize(input) => {
            let complexes = parse_complex_chain(&read_input(&input)?)?;
            let stable = stabilization_report(&complexes)?;
            let output = p.show(&stable, || {
                let mut out = String::new();
                for (i, &eq) in stable.iter().enumerate() {
                    let rel = if eq { "=" } else { "⊊" };
                    let _ = writeln!(out, "n={}: Inc(Δ_{}) {rel} Δ_{}", i + 1, i + 1, i + 2);
                }
                out
            });
            Ok(Outcome { output, passed: true })
        }
    }
}

fn complex(p: &Printer, cmd: ComplexCommand) -> Result<Outcome, CliError> {
    match cmd {
        ComplexCommand::Fvector(input) => {
            let f = f_vector(&parse_complex(&read_input(&input)?)?);
            Ok(Outcome { output: p.show(&f, || format!("{f}\n")), passed: true })
        }
        ComplexCommand::Inc(input) => Ok(p.complex(&inc_complex(&parse_complex(&read_input(&input)?)?)?)),
        ComplexCommand::Compress(input) => Ok(p.complex(&compress_complex(&parse_complex(&read_input(&input)?)?)?)),
        ComplexCommand::NonFaces { n, input } => {
            let missing = non_faces(&parse_complex(&read_input(&input)?)?, n)?;
            let output = p.show(&missing, || {
                let mut out = String::new();
                for (d, family) in &missing {
                    let _ = writeln!(out, "d={d}: {family}");
                }
                out
            });
            Ok(Outcome { output, passed: true })
        }
    }
}

const SWEEP_KEYS: &[&str] = &["n", "d", "m", "all_m", "jobs", "timing"];

fn sweep_options(sweep: &SweepArgs, config: &Config) -> Result<SweepOptions, CliError> {
    let jobs = match sweep.jobs {
        Some(j) => j,
        None => config.get("jobs")?.unwrap_or(1),
    };
    let timing = sweep.timing || config.get("timing")?.unwrap_or(false);
    Ok(SweepOptions { jobs, timing })
}

fn report_line(r: &VerificationReport) -> String {
    let mut line = format!("n={} d={}", r.universe.n, r.universe.d);
    if let Some(m) = r.universe.m {
        let _ = write!(line, " m={m}");
    }
    let _ = write!(line, ": {} checked, {} violations", r.checked, r.violations.len());
    if let Some(min) = r.minimum {
        let _ = write!(line, ", min |Inc(F)| = {min}");
    }
    if let (Some(b), Some(m)) = (r.bound, r.universe.m) {
        let _ = write!(line, ", Inc^[{}]({m}) = {b}", r.universe.d);
    }
    if !r.minimizers.is_empty() {
        let _ = write!(line, ", {} minimizers", r.minimizers.len());
    }
    if let Some(secs) = r.elapsed {
        let _ = write!(line, ", {secs:.3}s");
    }
    line.push('\n');
    for v in &r.violations {
        let _ = writeln!(line, "  violation: {} ({})", v.family, v.detail);
    }
    line
}

fn report_ok(r: &VerificationReport) -> bool {
    r.passed() && (r.bound.is_none() || r.attains_bound())
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "verified\n"
    } else {
        "FAILED\n"
    }
}

fn verify(p: &Printer, cmd: VerifyCommand) -> Result<Outcome, CliError> {
    match cmd {
        VerifyCommand::Main { n, d, m, all_m, sweep } => {
            let config = Config::load(sweep.config.as_deref(), SWEEP_KEYS)?;
            let opts = sweep_options(&sweep, &config)?;
            let n = n.or(config.get("n")?).unwrap_or(6);
            let d = d.or(config.get("d")?).unwrap_or(3);
            let m = match (m, all_m) {
                (Some(m), _) => Some(m),
                (None, true) => None,
                (None, false) if config.get("all_m")?.unwrap_or(false) => None,
                (None, false) => config.get("m")?,
            };
            match m {
                Some(m) => {
                    let r = verify_min_theorem(n, d, m, opts)?;
                    let passed = report_ok(&r);
                    let output = p.show(&r, || report_line(&r) + verdict(passed));
                    Ok(Outcome { output, passed })
                }
                None => {
                    let reports = verify_min_theorem_all(n, d, opts)?;
                    let passed = reports.iter().all(report_ok);
                    let output = p.show(&reports, || {
                        let mut out: String = reports.iter().map(report_line).collect();
                        let total: u64 = reports.iter().map(|r| r.checked).sum();
                        let _ = writeln!(out, "{total} families in total");
                        out + verdict(passed)
                    });
                    Ok(Outcome { output, passed })
                }
            }
        }
        VerifyCommand::Identities { samples, seed, max_element, grades, family, config } => {
            if let Some(path) = family {
                let f = parse_family(&read_path(&path)?)?;
                let failures = identity_failures(&f)?;
                let passed = failures.is_empty();
                let output = p.show(&json!({ "family": f, "failures": failures }), || {
                    let names: Vec<String> = failures.iter().map(ToString::to_string).collect();
                    if passed {
                        "all identities hold\n".to_string()
                    } else {
                        format!("failing: {}\n", names.join(", "))
                    }
                });
                return Ok(Outcome { output, passed });
            }
            let config = Config::load(config.as_deref(), &["samples", "seed", "max_element", "grades"])?;
            let samples = samples.or(config.get("samples")?).unwrap_or(10_000);
            let seed = seed.or(config.get("seed")?).unwrap_or(0);
            let max_element = max_element.or(config.get("max_element")?).unwrap_or(9);
            let grades = match grades {
                Some(g) => g,
                None => config.get_list("grades")?.unwrap_or_else(|| vec![2, 3, 4]),
            };
            let r = verify_identities_random(samples, seed, &grades, max_element)?;
            let output = p.show(&r, || {
                let mut out = format!(
                    "{} random families (d in {:?}, elements <= {}, seed {}): {} failures\n",
                    r.checked,
                    r.grades,
                    r.max_element,
                    r.seed,
                    r.failures.len()
                );
                for fail in &r.failures {
                    let names: Vec<String> = fail.identities.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "  {}: {}", fail.family, names.join(", "));
                }
                out + verdict(r.passed())
            });
            Ok(Outcome { output, passed: r.passed() })
        }
        VerifyCommand::Segments { max_element, max_d, config } => {
            let config = Config::load(config.as_deref(), &["max_element", "max_d"])?;
            let max_element = max_element.or(config.get("max_element")?).unwrap_or(8);
            let max_d = max_d.or(config.get("max_d")?).unwrap_or(4);
            let r = verify_segment_lemmas(max_element, max_d)?;
            let output = p.show(&r, || {
                format!(
                    "Inc(C(u)) = C(u+1): {}Inc(B(u)) = B(u+1): {}{}",
                    report_line(&r.initial_segments),
                    report_line(&r.borel_ideals),
                    verdict(r.passed())
                )
            });
            Ok(Outcome { output, passed: r.passed() })
        }
        VerifyCommand::Structure { n, d, sweep } => {
            let config = Config::load(sweep.config.as_deref(), SWEEP_KEYS)?;
            let opts = sweep_options(&sweep, &config)?;
            let n = n.or(config.get("n")?).unwrap_or(6);
            let d = d.or(config.get("d")?).unwrap_or(3);
            let r = verify_structure(n, d, opts)?;
            let output = p.show(&r, || {
                format!(
                    "shifted families stay shifted: {}initial segments map to initial segments: {}{}",
                    report_line(&r.shifted),
                    report_line(&r.compressed),
                    verdict(r.passed())
                )
            });
            Ok(Outcome { output, passed: r.passed() })
        }
        VerifyCommand::Equality { n, d, m, sweep } => {
            let config = Config::load(sweep.config.as_deref(), SWEEP_KEYS)?;
            let opts = sweep_options(&sweep, &config)?;
            let n = n.or(config.get("n")?).unwrap_or(6);
            let d = d.or(config.get("d")?).unwrap_or(3);
            let m = m
                .or(config.get("m")?)
                .ok_or_else(|| incmin::Error::InvalidArgument("verify equality needs --m".into()))?;
            let cases = equality_cases(n, d, m, opts)?;
            let bound = inc_num(m as u64, d)?;
            let output = p.show(&cases, || {
                let mut out =
                    format!("{} families of size {m} in binom([{n}],{d}) with |Inc(F)| = {bound}\n", cases.len());
                for f in &cases {
                    let _ = writeln!(out, "{f}");
                }
                out
            });
            Ok(Outcome { output, passed: true })
        }
    }
}
