use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use seqlab::approxsq::{self, Limits, Outcome};
use seqlab::ekg::{self, Line};
use seqlab::gijswijt::{self, FinitenessOutcome};
use seqlab::oeis::{compare, BfileStore, Comparison, OeisId, Sequence};
use seqlab::powerseries::{self, IntPowerSeries};
use seqlab::reference::{self, Status};
use seqlab::selfref;
use seqlab::theta::{self, ThetaSeries};

use crate::args::*;
use crate::output::{Format, RowWriter};
use crate::{CliError, CliResult};

pub fn dispatch<W: Write>(cfg: &RunConfig, out: &mut W) -> CliResult {
    let b = cfg.budgets;
    let seq_format = cfg.format.unwrap_or(Format::Bfile);
    let table_format = cfg.format.unwrap_or(Format::Csv);
    match &cfg.command {
        Command::Generate(a) => generate(a, b, seq_format, out),
        Command::Analyze { target } => analyze(target, b, table_format, out),
        Command::Experiment { kind } => experiment(kind, out),
        Command::Approxsq(a) => approx(a, b, table_format, out),
        Command::Series { op } => series(op, seq_format, out),
        Command::Theta(a) => theta_cmd(a, b, seq_format, out),
        Command::Kissing => kissing(b, table_format, out),
        Command::Verify(a) => verify(a, b, out),
        Command::Plot(a) => plot(a, b, table_format, out),
    }
}

fn check_terms(n: u64, b: Budgets) -> CliResult<usize> {
    if n > b.max_terms {
        return Err(seqlab::Error::ResourceLimit {
            what: "terms",
            limit: b.max_terms,
        }
        .into());
    }
    usize::try_from(n).map_err(|_| CliError::Usage(format!("{n} terms do not fit in memory")))
}

fn write_u64s<W: Write>(offset: i64, terms: &[u64], format: Format, out: &mut W) -> CliResult {
    let mut w = RowWriter::new(out, format, &["n", "value"])?;
    for (n, v) in (offset..).zip(terms) {
        w.row(n, &[v])?;
    }
    w.finish()?;
    Ok(())
}

fn gijswijt_terms(n: usize, floor: u64, b: Budgets) -> CliResult<Vec<u64>> {
    let cap = usize::try_from(b.max_terms).unwrap_or(usize::MAX);
    let mut g = gijswijt::Generator::with_cap(floor, cap)?;
    Ok(g.extend_to(n)?.to_vec())
}

fn generate<W: Write>(a: &GenerateArgs, b: Budgets, format: Format, out: &mut W) -> CliResult {
    let n = check_terms(a.terms, b)?;
    let terms = match a.sequence {
        SequenceName::Ekg => ekg::generate_capped(n, n)?,
        SequenceName::Gijswijt => gijswijt_terms(n, a.floor, b)?,
        SequenceName::A079000 => match a.method {
            Method::Greedy => selfref::a079000_greedy(n),
            Method::Closed => (1..=n as u64).map(selfref::a079000_closed).collect(),
        },
        SequenceName::Golomb => selfref::golomb(n),
    };
    write_u64s(1, &terms, format, out)
}

fn analyze<W: Write>(t: &AnalyzeTarget, b: Budgets, format: Format, out: &mut W) -> CliResult {
    match t {
        AnalyzeTarget::Ekg {
            terms,
            plot_lines,
            neighbors,
        } => {
            let terms = ekg::generate(check_terms(*terms, b)?)?;
            if *plot_lines {
                let mut w = RowWriter::new(
                    out,
                    format,
                    &["n", "value", "label", "ratio", "central_curve"],
                )?;
                for p in ekg::line_points(&terms) {
                    let curve = p.central_curve.map_or(String::new(), |c| format!("{c:.6}"));
                    w.row(
                        p.n as i64,
                        &[&p.value, &p.line, &format!("{:.6}", p.ratio), &curve],
                    )?;
                }
                w.finish()?;
            } else if !*neighbors {
                let lines = ekg::classify(&terms);
                for line in [Line::Lower, Line::Upper, Line::Central] {
                    let count = lines.iter().filter(|&&l| l == line).count();
                    writeln!(out, "{line} {count}")?;
                }
            }
            if *neighbors {
                let report = ekg::prime_neighbor_report(&terms);
                writeln!(out, "primes_checked {}", report.primes_checked)?;
                writeln!(out, "violations {}", report.violations.len())?;
                for v in &report.violations {
                    writeln!(
                        out,
                        "violation n={} p={} before={} after={}",
                        v.position, v.prime, v.predecessor, v.successor
                    )?;
                }
                if !report.violations.is_empty() {
                    return Err(CliError::Mismatch(format!(
                        "{} primes break the 2p, p, 3p pattern",
                        report.violations.len()
                    )));
                }
            }
        }
        AnalyzeTarget::Gijswijt {
            view: GijswijtView::Blocks { order, count },
        } => {
            let levels = gijswijt::block_decomposition(*count, *order)?;
            let mut w = RowWriter::new(
                out,
                format,
                &["level", "block_length", "glue_length", "glue"],
            )?;
            for bg in levels {
                let glue: Vec<String> = bg.glue.iter().map(u64::to_string).collect();
                w.row(
                    bg.level as i64,
                    &[&bg.block.len(), &bg.glue.len(), &glue.join(" ")],
                )?;
            }
            w.finish()?;
        }
        AnalyzeTarget::A079000 { terms, diff_runs } => {
            let n = check_terms(*terms, b)?;
            let c = selfref::a079000_greedy(n);
            if *diff_runs {
                let mut w = RowWriter::new(out, format, &["run", "difference", "length"])?;
                for (i, (d, len)) in selfref::difference_runs(&c).into_iter().enumerate() {
                    w.row(i as i64 + 1, &[&d, &len])?;
                }
                w.finish()?;
            } else {
                let bad = (1..=n).find(|&i| selfref::a079000_closed(i as u64) != c[i - 1]);
                match bad {
                    None => writeln!(out, "closed_form agrees n=1..{n}")?,
                    Some(i) => {
                        return Err(CliError::Mismatch(format!("closed form differs at n={i}")))
                    }
                }
                match selfref::self_consistency_violation(&c) {
                    None => writeln!(out, "self_consistent n=1..{n}")?,
                    Some(i) => {
                        return Err(CliError::Mismatch(format!("not self-consistent at n={i}")))
                    }
                }
            }
        }
        AnalyzeTarget::Golomb {
            view: GolombView::Formula { terms },
        } => {
            let g = selfref::golomb(check_terms(*terms, b)?);
            let r = selfref::golomb_formula_report(&g);
            writeln!(out, "checked {}", r.checked)?;
            writeln!(out, "deviations {}", r.deviations.len())?;
            writeln!(out, "max_abs_error {:.6}", r.max_abs_error)?;
            for d in &r.deviations {
                writeln!(
                    out,
                    "deviation n={} g={} formula={:.6}",
                    d.n, d.actual, d.formula
                )?;
            }
        }
    }
    Ok(())
}

fn experiment<W: Write>(kind: &ExperimentKind, out: &mut W) -> CliResult {
    let ExperimentKind::Finiteness { initial, max_steps } = kind;
    let start = initial
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            CliError::Usage(format!(
                "--initial must be comma-separated integers, got {initial:?}"
            ))
        })?;
    match gijswijt::finiteness_experiment(&start, *max_steps)? {
        FinitenessOutcome::FoundOne { position } => {
            writeln!(out, "found_one after {position} steps")?
        }
        FinitenessOutcome::Timeout { steps } => writeln!(out, "timeout after {steps} steps")?,
    }
    Ok(())
}

/// Full decimal form, or leading digits and a digit count when longer than `show`.
fn short_int(v: &BigInt, show: usize) -> String {
    let digits = approxsq::decimal_digits(v);
    if digits <= show {
        v.to_string()
    } else {
        format!("{}...({digits} digits)", approxsq::leading_digits(v, show))
    }
}

fn approx<W: Write>(a: &ApproxsqArgs, b: Budgets, format: Format, out: &mut W) -> CliResult {
    if let Some(ApproxsqTable::Table {
        denominator,
        from,
        to,
        max_steps,
        show_digits,
    }) = &a.table
    {
        if from > to {
            return Err(CliError::Usage(format!("empty range {from}..={to}")));
        }
        let limits = Limits {
            max_steps: *max_steps,
            max_digits: b.max_digits,
        };
        let rows = approxsq::table(*denominator, *from, *to, limits)?;
        let mut w = RowWriter::new(out, format, &["n", "start", "steps", "reaches"])?;
        for r in rows {
            let t = &r.trajectory;
            let reaches = match t.outcome {
                Outcome::Integer => short_int(t.final_integer().expect("terminated"), *show_digits),
                Outcome::StepLimit => "step_limit".into(),
                Outcome::DigitLimit => "digit_limit".into(),
            };
            let start = format!("{}/{}", r.numerator, r.denominator);
            w.row(r.numerator as i64, &[&start, &t.step_count(), &reaches])?;
        }
        w.finish()?;
        return Ok(());
    }
    let start = a.start.as_deref().ok_or_else(|| {
        CliError::Usage("approxsq needs a start value or the table subcommand".into())
    })?;
    let x0 = approxsq::parse_rational(start)?;
    let limits = Limits {
        max_steps: a.max_steps,
        max_digits: b.max_digits,
    };
    let t = approxsq::trajectory(&x0, limits)?;
    let mut w = RowWriter::new(out, format, &["step", "value", "digits", "integer"])?;
    for (i, x) in std::iter::once(&t.start).chain(&t.steps).enumerate() {
        let num = short_int(x.numer(), a.show_digits);
        let value = if x.is_integer() {
            num
        } else {
            format!("{num}/{}", x.denom())
        };
        let integral = if x.is_integer() { "yes" } else { "no" };
        w.row(
            i as i64,
            &[&value, &approxsq::decimal_digits(x.numer()), &integral],
        )?;
    }
    w.finish()?;
    match t.outcome {
        Outcome::Integer => Ok(()),
        Outcome::StepLimit => Err(seqlab::Error::ResourceLimit {
            what: "approximate squaring steps",
            limit: a.max_steps as u64,
        }
        .into()),
        Outcome::DigitLimit => Err(seqlab::Error::ResourceLimit {
            what: "numerator digits",
            limit: b.max_digits,
        }
        .into()),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_series(input: &SeriesInput) -> CliResult<IntPowerSeries> {
    let f = IntPowerSeries::parse_coeffs(&read_file(&input.coeffs_file)?)?;
    Ok(match input.order {
        Some(o) => f.truncate(o),
        None => f,
    })
}

fn write_series<W: Write>(s: &IntPowerSeries, format: Format, out: &mut W) -> CliResult {
    let mut w = RowWriter::new(out, format, &["n", "value"])?;
    for (i, c) in s.coeffs().iter().enumerate() {
        w.row(i as i64, &[c])?;
    }
    w.finish()?;
    Ok(())
}

fn series<W: Write>(op: &SeriesOp, format: Format, out: &mut W) -> CliResult {
    match op {
        SeriesOp::Root(input) => {
            let f = read_series(input)?;
            write_series(&f.kth_root(input.k)?, format, out)
        }
        SeriesOp::Powertest { input, node_limit } => {
            let f = read_series(input)?;
            let k = input.k;
            let answer = powerseries::is_kth_power_mod_with_limit(&f, k, *node_limit)?;
            writeln!(out, "mu {}", powerseries::mu(k as u64))?;
            writeln!(out, "kth_power_mod_mu {answer}")?;
            Ok(())
        }
    }
}

fn load_theta(a: &ThetaArgs, b: Budgets) -> CliResult<ThetaSeries> {
    if let Some(name) = &a.fixture {
        let t = theta::fixture_theta(name)?;
        if a.max_norm > t.max_norm {
            return Err(CliError::Usage(format!(
                "the {name} fixture only reaches norm {}",
                t.max_norm
            )));
        }
        return Ok(ThetaSeries {
            series: t.series.truncate(a.max_norm),
            max_norm: a.max_norm,
        });
    }
    let lat = match (&a.lattice, &a.gram_file) {
        (Some(name), _) => theta::builtin_lattice(name)?,
        (None, Some(path)) => {
            let gram = theta::parse_gram(&read_file(path)?)?;
            theta::Lattice::new(path.display().to_string(), gram)?
        }
        (None, None) => return Err(CliError::Usage("no lattice given".into())),
    };
    Ok(theta::theta_series_with_budget(
        &lat,
        a.max_norm,
        b.enum_budget,
    )?)
}

fn theta_cmd<W: Write>(a: &ThetaArgs, b: Budgets, format: Format, out: &mut W) -> CliResult {
    let t = load_theta(a, b)?;
    match a.root {
        Some(k) => write_series(&t.series.kth_root(k)?, format, out),
        None => write_series(&t.series, format, out),
    }
}

fn kissing<W: Write>(b: Budgets, format: Format, out: &mut W) -> CliResult {
    let mut w = RowWriter::new(out, format, &["dimension", "tau", "status", "source"])?;
    for e in reference::KISSING {
        let source = match e.lattice {
            Some(name) => {
                let t = if name == "leech" {
                    theta::fixture_theta(name)?
                } else {
                    theta::theta_series_with_budget(
                        &theta::builtin_lattice(name)?,
                        4,
                        b.enum_budget,
                    )?
                };
                let k = theta::kissing_number(&t)?;
                if k.tau != BigInt::from(e.value) {
                    return Err(CliError::Mismatch(format!(
                        "{name} gives {} but the table lists {}",
                        k.tau, e.value
                    )));
                }
                if name == "leech" {
                    format!("theta series of the {name} fixture, norm {}", k.norm)
                } else {
                    format!("theta series of {name}, norm {}", k.norm)
                }
            }
            None if e.status == Status::Exact => "reference".to_string(),
            None => "reference bound".to_string(),
        };
        w.row(i64::from(e.n), &[&e.value, &e.status, &source])?;
    }
    w.finish()?;
    Ok(())
}

struct Target {
    name: &'static str,
    id: u32,
}

const TARGETS: &[Target] = &[
    Target {
        name: "ekg",
        id: 64413,
    },
    Target {
        name: "gijswijt",
        id: 90822,
    },
    Target {
        name: "gijswijt2",
        id: 91787,
    },
    Target {
        name: "a079000",
        id: 79000,
    },
    Target {
        name: "golomb",
        id: 1462,
    },
    Target {
        name: "approxsq-steps",
        id: 72340,
    },
    Target {
        name: "approxsq-reached",
        id: 85276,
    },
    Target {
        name: "approxsq-orbit",
        id: 117596,
    },
    Target {
        name: "d4-root",
        id: 108092,
    },
];

fn find_target(name: &str) -> CliResult<&'static Target> {
    let lower = name.to_ascii_lowercase();
    let by_id = name
        .to_ascii_uppercase()
        .parse::<OeisId>()
        .ok()
        .map(OeisId::number);
    TARGETS
        .iter()
        .find(|t| t.name == lower || Some(t.id) == by_id)
        .ok_or_else(|| CliError::Usage(format!("nothing to verify under {name:?}")))
}

fn compute(target: &Target, n: usize, b: Budgets) -> CliResult<Sequence> {
    let id = Some(OeisId::from_number(target.id));
    let limits = Limits {
        max_steps: 100,
        max_digits: b.max_digits,
    };
    let seq = match target.name {
        "ekg" => ekg::sequence(n)?,
        "gijswijt" => Sequence::from_u64s(id, 1, &gijswijt_terms(n, 1, b)?),
        "gijswijt2" => Sequence::from_u64s(id, 1, &gijswijt_terms(n, 2, b)?),
        "a079000" => selfref::a079000_sequence(n),
        "golomb" => selfref::golomb_sequence(n),
        "approxsq-steps" | "approxsq-reached" => {
            let rows = approxsq::table(3, 3, 2 + n as u64, limits)?;
            let terms = rows
                .iter()
                .map(|r| {
                    let t = &r.trajectory;
                    match t.final_integer() {
                        None => Err(CliError::Core(seqlab::Error::ResourceLimit {
                            what: "numerator digits",
                            limit: b.max_digits,
                        })),
                        Some(v) if target.name == "approxsq-reached" => Ok(v.clone()),
                        Some(_) => Ok(BigInt::from(t.step_count())),
                    }
                })
                .collect::<CliResult<Vec<_>>>()?;
            Sequence::new(id, 3, terms)
        }
        "approxsq-orbit" => {
            let t = approxsq::trajectory(&approxsq::parse_rational("6/5")?, limits)?;
            let nums = std::iter::once(&t.start)
                .chain(&t.steps)
                .map(|x| x.numer().clone())
                .take(n)
                .collect();
            Sequence::new(id, 0, nums)
        }
        "d4-root" => {
            let norm = 2 * n.saturating_sub(1);
            let d4 = theta::theta_series_with_budget(
                &theta::builtin_lattice("D4")?,
                norm,
                b.enum_budget,
            )?;
            Sequence::new(id, 0, d4.series.kth_root(4)?.decimate(2).into_coeffs())
        }
        _ => unreachable!("target table and compute disagree"),
    };
    Ok(seq)
}

fn verify<W: Write>(a: &VerifyArgs, b: Budgets, out: &mut W) -> CliResult {
    let target = find_target(&a.name)?;
    let n = check_terms(a.terms, b)?;
    if n == 0 {
        return Err(CliError::Usage("--terms must be positive".into()));
    }
    let id = OeisId::from_number(target.id);
    let store = BfileStore::new(BfileStore::default_cache_dir(), a.online);
    let reference = store.fetch(id)?;
    let computed = compute(target, n, b)?;
    let source = if a.online { "oeis" } else { "bundled" };
    match compare(&computed, &reference)? {
        Comparison::Agree {
            first_index,
            last_index,
            overlap,
        } => {
            writeln!(
                out,
                "{id} {}: agree n={first_index}..{last_index} ({overlap} terms, {source} reference)",
                target.name
            )?;
            if overlap < n {
                writeln!(
                    out,
                    "note: reference covers {overlap} of {n} requested terms"
                )?;
            }
            if target.name.starts_with("gijswijt") {
                let terms = computed.to_u64_vec().expect("small terms");
                let max = terms.iter().copied().max().unwrap_or(0);
                for v in 1..=max {
                    if let Some(p) = terms.iter().position(|&x| x == v) {
                        writeln!(out, "first {v} at n={}", p as i64 + computed.offset)?;
                    }
                }
            }
            Ok(())
        }
        Comparison::Mismatch {
            index,
            computed,
            reference,
        } => {
            writeln!(out, "{id} {}: mismatch at n={index}", target.name)?;
            Err(CliError::Mismatch(format!(
                "{id} n={index}: computed {computed}, reference {reference}"
            )))
        }
    }
}

fn plot<W: Write>(a: &PlotArgs, b: Budgets, format: Format, out: &mut W) -> CliResult {
    if a.from == 0 || a.from > a.to {
        return Err(CliError::Usage(format!(
            "empty range {}..={}",
            a.from, a.to
        )));
    }
    let upto = check_terms(a.to, b)?;
    let from = a.from as usize;
    let mut w = RowWriter::new(out, format, &["n", "value", "label"])?;
    match a.kind {
        PlotKind::EkgLines | PlotKind::EkgJoined => {
            let terms = ekg::generate(upto)?;
            let lines = ekg::classify(&terms);
            for n in from..=upto {
                w.row(n as i64, &[&terms[n - 1], &lines[n - 1]])?;
            }
        }
        PlotKind::A079000Diffs => {
            let c = selfref::a079000_greedy(upto + 1);
            for n in from..=upto {
                let d = c[n] - c[n - 1];
                // runs of 1 are consecutive numbers, runs of 2 consecutive odd numbers
                let label = match (n, d) {
                    (1 | 2, _) => "initial",
                    (_, 1) => "consecutive",
                    _ => "odd",
                };
                w.row(n as i64, &[&d, &label])?;
            }
        }
    }
    w.finish()?;
    Ok(())
}
