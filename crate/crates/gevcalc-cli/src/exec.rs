//! Subcommand execution: validation, dispatch into the core library, and
//! report writing.

use std::fs;
use std::path::Path;

use gevcalc_core::algebra::{GeneratorWord, Group, HalfInt};
use gevcalc_core::gevrey::{
    equivalence_battery, fit_order, make_profile, seminorm_sequence, CoefficientProfile,
    ProfileKind,
};
use gevcalc_core::heisenberg::HeisRep;
use gevcalc_core::multiplier::{bessel_hs_partial_sums, power_exp_sup};
use gevcalc_core::riesz::{factor_decomposition, log_log_slope, riesz_sweep, RieszContext};
use gevcalc_core::su2::Su2Operator;
use gevcalc_core::Error as CoreError;

use crate::args::{Command, Format, OperatorArg, OutputArgs};
use crate::reports::{
    to_json, BatteryDoc, BesselDoc, BesselRowDoc, FactorDoc, FactorSampleDoc, FitDoc, SampleDoc,
    SupDoc, SweepDoc,
};

/// Failure modes with their exit codes: 2 for anything wrong with the run
/// specification, 1 for numerical or I/O failures.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

/// Classifies a core error: parameter-shaped errors are usage failures and
/// name the offending flag.
fn map_core(err: CoreError, flag: &str) -> CliError {
    match err {
        CoreError::InvalidMatrix | CoreError::NotSingleDiagonal => {
            CliError::Internal(format!("numerical failure: {err}"))
        }
        other => CliError::Usage(format!("{flag}: {other}")),
    }
}

fn parse_half(value: f64, flag: &str) -> Result<HalfInt, CliError> {
    HalfInt::try_from_f64(value).map_err(|e| map_core(e, flag))
}

fn parse_word(group: Group, text: &str, flag: &str) -> Result<GeneratorWord, CliError> {
    let word = GeneratorWord::parse(group, text).map_err(|e| map_core(e, flag))?;
    if word.is_empty() {
        return Err(CliError::Usage(format!("{flag}: word must be nonempty")));
    }
    Ok(word)
}

/// Parses `kind:key=value,...` profile flags.
pub fn parse_profile(text: &str, band: HalfInt) -> Result<CoefficientProfile, CliError> {
    let flag = "--profile";
    let (kind, params) = match text.split_once(':') {
        Some((k, p)) => (k, p),
        None => (text, ""),
    };
    let mut map = std::collections::BTreeMap::new();
    if !params.is_empty() {
        for piece in params.split(',') {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("{flag}: bad parameter {piece:?}")))?;
            let value: f64 = value
                .parse()
                .map_err(|_| CliError::Usage(format!("{flag}: bad number in {piece:?}")))?;
            map.insert(key.to_string(), value);
        }
    }
    let mut take = |key: &str| {
        map.remove(key).ok_or_else(|| CliError::Usage(format!("{flag}: missing {key}= parameter")))
    };
    let kind = match kind {
        "expfrac" => ProfileKind::ExpFrac { b: take("B")?, s: take("s")? },
        "heat" => ProfileKind::Heat { t: take("t")? },
        "poly" => ProfileKind::Polynomial { p: take("p")? },
        "delta" => {
            let l0 = parse_half(take("l0")?, flag)?;
            let i = take("i")? as usize;
            let j = take("j")? as usize;
            ProfileKind::Delta { l0, i, j }
        }
        other => {
            return Err(CliError::Usage(format!(
                "{flag}: unknown profile kind {other:?} (expfrac, heat, poly, delta)"
            )))
        }
    };
    if let Some(key) = map.keys().next() {
        return Err(CliError::Usage(format!("{flag}: unknown parameter {key:?}")));
    }
    make_profile(kind, band).map_err(|e| map_core(e, flag))
}

fn half_range(l_min: HalfInt, l_max: HalfInt) -> Vec<f64> {
    (l_min.twice()..=l_max.twice()).map(|t| t as f64 / 2.0).collect()
}

fn write_report(out: &OutputArgs, content: &str) -> Result<(), CliError> {
    match &out.output {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => write_atomic(path, content),
    }
}

fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp~");
    fs::write(&tmp, content)
        .map_err(|e| CliError::Internal(format!("writing {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::Internal(format!("renaming into {}: {e}", path.display()))
    })
}

pub fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Su2Riesz { word, l_min, l_max, operator, format, out } => {
            let word = parse_word(Group::Su2, &word, "--word")?;
            let lo = parse_half(l_min, "--l-min")?;
            let hi = parse_half(l_max, "--l-max")?;
            if lo == HalfInt::ZERO {
                return Err(CliError::Usage(
                    "--l-min: the trivial representation l = 0 is excluded".into(),
                ));
            }
            if lo > hi {
                return Err(CliError::Usage("--l-min: exceeds --l-max".into()));
            }
            let op = match operator {
                OperatorArg::Subl => Su2Operator::SubL,
                OperatorArg::Beltrami => Su2Operator::Beltrami,
            };
            let ctx = RieszContext::su2(op);
            let report = riesz_sweep(&ctx, &word, &half_range(lo, hi))
                .map_err(|e| map_core(e, "--word"))?;
            let doc = SweepDoc {
                command: "su2-riesz".into(),
                word: word.to_string(),
                operator: Some(
                    match op {
                        Su2Operator::SubL => "subl",
                        Su2Operator::Beltrami => "beltrami",
                    }
                    .into(),
                ),
                lambda: None,
                trunc: None,
                l_min: Some(lo.value()),
                l_max: Some(hi.value()),
                samples: report
                    .samples
                    .iter()
                    .map(|s| SampleDoc { index: s.index, norm: s.norm })
                    .collect(),
                sup_norm: report.sup_norm,
                growth_slope: report.growth_slope,
                stabilization_ratio: report.stabilization_ratio,
                window: None,
            };
            let content = match format {
                Format::Csv => doc.to_csv("l"),
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::HeisRiesz { word, lambda, trunc, format, out } => {
            let word = parse_word(Group::Heis, &word, "--word")?;
            if lambda.is_empty() {
                return Err(CliError::Usage("--lambda: needs at least one value".into()));
            }
            let mut lambdas = lambda.clone();
            lambdas.sort_by(|a, b| a.partial_cmp(b).unwrap());
            lambdas.dedup();
            if lambdas.iter().any(|&x| !x.is_finite() || x == 0.0) {
                return Err(CliError::Usage("--lambda: values must be finite and nonzero".into()));
            }
            let rep = HeisRep::new(lambdas[0], trunc).map_err(|e| map_core(e, "--trunc"))?;
            let ctx = RieszContext::heis(rep);
            let report =
                riesz_sweep(&ctx, &word, &lambdas).map_err(|e| map_core(e, "--trunc"))?;
            let doc = SweepDoc {
                command: "heis-riesz".into(),
                word: word.to_string(),
                operator: None,
                lambda: Some(lambdas),
                trunc: Some(trunc),
                l_min: None,
                l_max: None,
                samples: report
                    .samples
                    .iter()
                    .map(|s| SampleDoc { index: s.index, norm: s.norm })
                    .collect(),
                sup_norm: report.sup_norm,
                growth_slope: report.growth_slope,
                stabilization_ratio: report.stabilization_ratio,
                window: report.window.map(|(a, b)| [a, b]),
            };
            let content = match format {
                Format::Csv => doc.to_csv("lambda"),
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::FactorBounds { word, l_min, l_max, format, out } => {
            let word = parse_word(Group::Su2, &word, "--word")?;
            let lo = parse_half(l_min, "--l-min")?;
            let hi = parse_half(l_max, "--l-max")?;
            if lo == HalfInt::ZERO || lo > hi {
                return Err(CliError::Usage("--l-min: needs 0 < l-min <= l-max".into()));
            }
            let mut samples = Vec::new();
            for t in lo.twice()..=hi.twice() {
                let l = HalfInt::from_twice(t);
                let fb = factor_decomposition(&word, l).map_err(|e| map_core(e, "--word"))?;
                samples.push(FactorSampleDoc { l: l.value(), t1: fb.t1, t2: fb.t2, t3: fb.t3 });
            }
            let slope_of = |pick: &dyn Fn(&FactorSampleDoc) -> f64| {
                log_log_slope(&samples.iter().map(|s| (s.l, pick(s))).collect::<Vec<_>>())
            };
            let t1_slope = slope_of(&|s| s.t1);
            let width = samples.first().map_or(0, |s| s.t2.len());
            let t2_slopes =
                (0..width).map(|j| slope_of(&move |s: &FactorSampleDoc| s.t2[j])).collect();
            let t3_slope = slope_of(&|s| s.t3);
            let doc = FactorDoc {
                command: "factor-bounds".into(),
                word: word.to_string(),
                l_min: lo.value(),
                l_max: hi.value(),
                samples,
                t1_slope,
                t2_slopes,
                t3_slope,
            };
            let content = match format {
                Format::Csv => doc.to_csv(),
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::GevreyFit { profile, band, k_max, format, out } => {
            let band = parse_half(band, "--band")?;
            let prof = parse_profile(&profile, band)?;
            if k_max < 5 {
                return Err(CliError::Usage("--k-max: needs k-max >= 5 for the fit".into()));
            }
            let log_seminorms = seminorm_sequence(&prof, k_max);
            let fit = fit_order(&log_seminorms).map_err(|e| map_core(e, "--profile"))?;
            let doc = FitDoc {
                command: "gevrey-fit".into(),
                profile,
                band: band.value(),
                k_max,
                log_seminorms,
                fit,
            };
            let content = match format {
                Format::Csv => {
                    return Err(CliError::Usage("--format: gevrey-fit reports are JSON".into()))
                }
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::GevreyBattery { profile, band, s_claim, k_max, max_word_len, format, out } => {
            let band = parse_half(band, "--band")?;
            let prof = parse_profile(&profile, band)?;
            if !(s_claim > 0.0) {
                return Err(CliError::Usage("--s-claim: must be positive".into()));
            }
            let report = equivalence_battery(&prof, s_claim, k_max, max_word_len)
                .map_err(|e| map_core(e, "--profile"))?;
            let doc = BatteryDoc {
                command: "gevrey-battery".into(),
                profile,
                band: band.value(),
                k_max,
                max_word_len,
                report,
            };
            let content = match format {
                Format::Csv => {
                    return Err(CliError::Usage("--format: battery reports are JSON".into()))
                }
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::MultiplierSup { k, d, s, format, out } => {
            let (lam_star, sup_value) =
                power_exp_sup(k, d, s).map_err(|e| map_core(e, "--k/--d/--s"))?;
            let doc = SupDoc { command: "multiplier-sup".into(), k, d, s, lam_star, sup_value };
            let content = match format {
                Format::Csv => format!(
                    "lam_star,sup_value\n{},{}\n",
                    crate::reports::fmt_float(lam_star),
                    crate::reports::fmt_float(sup_value)
                ),
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::BesselSeries { n, l_max, format, out } => {
            if n < 1 {
                return Err(CliError::Usage("--n: needs N >= 1".into()));
            }
            let l_max = parse_half(l_max, "--l-max")?;
            let rows: Vec<BesselRowDoc> = bessel_hs_partial_sums(n, l_max)
                .into_iter()
                .map(|(l, partial_sum)| BesselRowDoc { l, partial_sum })
                .collect();
            let doc =
                BesselDoc { command: "bessel-series".into(), n, l_max: l_max.value(), rows };
            let content = match format {
                Format::Csv => doc.to_csv(),
                Format::Json => to_json(&doc),
            };
            write_report(&out, &content)
        }
        Command::CheckAll => {
            let results = gevcalc_core::invariants::run_all();
            let mut all_pass = true;
            for r in &results {
                let tag = if r.pass { "PASS" } else { "FAIL" };
                println!("{tag} {} — {}", r.name, r.detail);
                all_pass &= r.pass;
            }
            if all_pass {
                println!("check-all: {} invariants passed", results.len());
                Ok(())
            } else {
                Err(CliError::Internal("check-all: some invariants failed".into()))
            }
        }
    }
}
