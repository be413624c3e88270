//! `hhbounds`: evaluate the bounds, run verification campaigns and search for
//! counterexamples.
//!
//! ```bash
//! hhbounds bound --rule simpson --a 0 --b 1 --q 1 --ma 1 --mb 1 --variant stated
//! hhbounds verify --claims prop1-stated --functions poly3 --q-grid 1,2
//! hhbounds search --claim thm6-stated --functions poly2 --trials 1000
//! ```
//!
//! Exit codes: 0 clean, 1 a stated-only claim was violated (or a check failed),
//! 2 a proof-backed claim was violated or the identity residual is too large,
//! 64 bad input.

mod args;
mod output;

use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use hhbounds_core::bounds::{
    bound_bounded_m, bound_classical, bound_corollary, bound_theorem5, bound_theorem6,
    ClassicalBound, DerivativeEnvelope, EndpointData, MForm, PowerExponent, SimpsonPower,
};
use hhbounds_core::corpus::{check_p_convex, corpus_lookup, GridSpec};
use hhbounds_core::harness::{
    find_counterexample, ledger_standard, run_campaign, CampaignConfig, IntervalSampler,
};
use hhbounds_core::means::{
    check_proposition, mean_arithmetic, mean_generalized_log, mean_logarithmic, MeanArgs,
    MeanOrder, Proposition,
};
use hhbounds_core::record::Tolerances;
use hhbounds_core::{identity_residual, Interval, ReportDocument, RuleParameter};

use args::{
    parse_id_list, parse_interval_list, parse_rational_list, BoundArgs, Cli, Command, Format,
    IdentityArgs, MeansArgs, PconvexArgs, PconvexTarget, SearchArgs, VerifyArgs,
};
use output::sig17;

const SEED_ENV: &str = "HHBOUNDS_SEED";
const EXIT_USAGE: u8 = 64;
const IDENTITY_LIMIT: f64 = 1e-8;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Bound(a) => cmd_bound(*a),
        Command::Verify(a) => cmd_verify(a),
        Command::Search(a) => cmd_search(a),
        Command::Means(a) => cmd_means(a),
        Command::Identity(a) => cmd_identity(a),
        Command::Pconvex(a) => cmd_pconvex(a),
        Command::Claims => {
            for c in ledger_standard() {
                let provenance = if c.is_proof_backed() {
                    "proof-backed"
                } else {
                    "stated-only"
                };
                println!("{:<14} {:<13} {:?}", c.id, provenance, c.hypothesis);
            }
            Ok(0)
        }
    }
}

fn cmd_bound(a: BoundArgs) -> Result<u8> {
    let domain = Interval::new(a.a.to_f64(), a.b.to_f64())?;
    let q = PowerExponent::new(a.q.as_ref().map_or(1.0, |q| q.to_f64()))?;
    let variant = a.variant.unwrap_or_default().into();

    let (value, claim) = if a.classical {
        let rule = a
            .rule
            .named()
            .context("--classical needs --rule midpoint, trapezoid or simpson")?;
        let env = DerivativeEnvelope {
            sup_abs_d2: None,
            lower_d2: a.k.as_ref().map(|v| v.to_f64()),
            upper_d2: a.big_k.as_ref().map(|v| v.to_f64()),
            sup_abs_d4: a.d4.as_ref().map(|v| v.to_f64()),
        };
        let power = match a.p {
            2 => SimpsonPower::Quadratic,
            4 => SimpsonPower::Quartic,
            p => bail!("--p must be 2 or 4, got {p}"),
        };
        match bound_classical(rule, &domain, &env, power)? {
            ClassicalBound::Enclosure { lower, upper } => {
                let claim = if rule == hhbounds_core::Rule::Trapezoid {
                    "eq20"
                } else {
                    "eq21"
                };
                println!("{} {} {claim}", sig17(lower), sig17(upper));
                return Ok(0);
            }
            ClassicalBound::Upper(u) => (u, format!("eq19-p{}", a.p)),
        }
    } else if let Some(m) = &a.m {
        let rule = a
            .rule
            .named()
            .context("--m needs --rule midpoint, trapezoid or simpson")?;
        let env = DerivativeEnvelope {
            sup_abs_d2: Some(m.to_f64()),
            ..Default::default()
        };
        let form: MForm = a.form.into();
        let suffix = if form == MForm::WithQ { "q" } else { "relaxed" };
        (
            bound_bounded_m(rule, &domain, q, &env, form)?,
            format!("{}-{suffix}", output::m_form_claim(rule)),
        )
    } else {
        let (Some(ma), Some(mb)) = (&a.ma, &a.mb) else {
            bail!("endpoint data --ma and --mb are required (or --m, or --classical)");
        };
        let e = EndpointData::new(ma.to_f64(), mb.to_f64())?;
        let lam = a.rule.parameter()?;
        if a.q.is_none() && a.variant.is_none() {
            (bound_theorem5(&domain, lam, e), "thm5".to_owned())
        } else {
            match a.rule.named() {
                Some(rule) => (
                    bound_corollary(rule, &domain, q, e, variant),
                    format!("{}-{}", output::corollary_claim(rule), variant.as_str()),
                ),
                None => (
                    bound_theorem6(&domain, lam, q, e, variant),
                    format!("thm6-{}", variant.as_str()),
                ),
            }
        }
    };
    println!("{} {claim}", sig17(value));
    Ok(0)
}

fn campaign_config(a: &VerifyArgs) -> Result<CampaignConfig> {
    let mut config = CampaignConfig {
        claims: parse_id_list(&a.claims, || {
            ledger_standard().into_iter().map(|c| c.id).collect()
        }),
        functions: parse_id_list(&a.functions, || {
            hhbounds_core::corpus_standard()
                .iter()
                .map(|f| f.id().to_owned())
                .collect()
        }),
        sampler: IntervalSampler {
            count: a.trials,
            ..Default::default()
        },
        seed: seed(a.seed)?,
        ..CampaignConfig::default()
    };
    if let Some(grid) = &a.lambda_grid {
        config.lambda_grid = parse_rational_list(grid)?;
    }
    if let Some(grid) = &a.q_grid {
        config.q_grid = parse_rational_list(grid)?;
    }
    if let Some(list) = &a.intervals {
        config.intervals = parse_interval_list(list)?;
    }
    config.validate()?;
    Ok(config)
}

fn seed(flag: u64) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{SEED_ENV}={v} is not a 64-bit integer")),
        Err(_) => Ok(flag),
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let config = campaign_config(&a)?;
    let result = run_campaign(&config)?;
    let report = ReportDocument::new(config, result);
    let text = match a.format {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv()?,
        Format::Table => report.to_table(),
    };
    match &a.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    for flag in &report.flags {
        eprintln!("warning: {flag}");
    }
    Ok(report.verdict().exit_code() as u8)
}

fn cmd_search(a: SearchArgs) -> Result<u8> {
    let claim = hhbounds_core::harness::claim_lookup(&a.claim)?;
    let verify = VerifyArgs {
        claims: a.claim.clone(),
        functions: a.functions,
        seed: a.seed,
        trials: a.trials,
        lambda_grid: a.lambda_grid,
        q_grid: a.q_grid,
        intervals: a.intervals,
        format: Format::Json,
        out: None,
    };
    let mut config = campaign_config(&verify)?;
    if verify.intervals.is_none() {
        config.intervals.clear();
    }
    let outcome = find_counterexample(&claim.id, &config)?;
    println!("{}", serde_json::to_string_pretty(&outcome)?);
    Ok(match (&outcome.counterexample, claim.is_proof_backed()) {
        (None, _) => 0,
        (Some(_), false) => 1,
        (Some(_), true) => 2,
    })
}

fn cmd_means(a: MeansArgs) -> Result<u8> {
    if let Some(idx) = a.prop {
        let n = a.n.context("--prop needs --n")?;
        let q =
            a.q.map_or_else(|| hhbounds_core::oracle::rational(1, 1), |q| q.0);
        let variant = a.variant.unwrap_or_default().into();
        let check = check_proposition(
            Proposition::from_index(idx)?,
            &a.a.0,
            &a.b.0,
            MeanOrder::new(n)?,
            &q,
            variant,
            &Tolerances::default(),
        )?;
        let r = &check.record;
        println!("claim = {}", r.claim);
        println!("lhs = {}", r.lhs.map_or("-".into(), sig17));
        println!("rhs = {}", r.rhs.map_or("-".into(), sig17));
        println!("margin = {}", r.margin.map_or("-".into(), sig17));
        println!("status = {}", r.status);
        println!("exact = {}", r.exact);
        println!("magnitude_hypothesis = {}", check.magnitude_hypothesis);
        return Ok(0);
    }
    let args = MeanArgs::new(a.a.to_f64(), a.b.to_f64())?;
    println!("A = {}", sig17(mean_arithmetic(&args)));
    println!("L = {}", sig17(mean_logarithmic(&args)?));
    if let Some(n) = a.n {
        println!(
            "L_{n} = {}",
            sig17(mean_generalized_log(&args, MeanOrder::new(n)?)?)
        );
    }
    Ok(0)
}

fn cmd_identity(a: IdentityArgs) -> Result<u8> {
    let f = corpus_lookup(&a.function)?;
    let iv = Interval::new(a.a.to_f64(), a.b.to_f64())?;
    let lam = RuleParameter::new(a.lambda.to_f64())?;
    let residual = identity_residual(&f, &iv, lam)?;
    println!("residual = {}", sig17(residual));
    Ok(if residual > IDENTITY_LIMIT { 2 } else { 0 })
}

fn cmd_pconvex(a: PconvexArgs) -> Result<u8> {
    let f = corpus_lookup(&a.function)?;
    let iv = Interval::new(a.a.to_f64(), a.b.to_f64())?;
    let grid = GridSpec {
        nx: a.nx,
        ny: a.nx,
        nlam: a.nlam,
        ..GridSpec::default()
    };
    let q = a.q.as_ref().map_or(1.0, |q| q.to_f64());
    let report = match a.target {
        PconvexTarget::F => check_p_convex(&|x| f.eval(x), &iv, &grid)?,
        PconvexTarget::D2 => check_p_convex(&|x| f.d2(x).abs().powf(q), &iv, &grid)?,
    };
    if report.passed {
        println!("passed samples={}", report.samples_checked);
        return Ok(0);
    }
    match (report.witness, report.undefined_at) {
        (Some(w), _) => println!(
            "failed x={} y={} lambda={} lhs={} rhs={}",
            sig17(w.x),
            sig17(w.y),
            sig17(w.lam),
            sig17(w.lhs),
            sig17(w.rhs)
        ),
        (None, Some(x)) => println!("undefined at x={}", sig17(x)),
        (None, None) => println!("failed"),
    }
    Ok(1)
}
