use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use qcat::format::{self, LiftDirection, WitnessDoc};
use qcat::{
    ccc_criterion, ccc_identity_check, ccc_witness, coreflect, final_lift, hom_power, hom_tensor, initial_lift,
    reflect, Case, Error, Grid, IntervalSet, Leg, QCat, Report, Suite, TNorm, WorkspaceConfig,
};
use serde_json::{json, Value};

use crate::{Cli, Command, Construction, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FOUND: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_SIZE_LIMIT: u8 = 3;
pub const EXIT_NONTERMINATION: u8 = 4;
pub const EXIT_OTHER: u8 = 5;

pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::Parse(_)
            | Error::Shape(_)
            | Error::UnknownPoint(_)
            | Error::OutOfUnitInterval(_)
            | Error::InvalidTNorm(_)
            | Error::InvalidIntervalSet(_),
        ) => EXIT_PARSE,
        Some(Error::SizeLimit { .. }) => EXIT_SIZE_LIMIT,
        Some(Error::Nontermination { .. }) => EXIT_NONTERMINATION,
        _ => EXIT_OTHER,
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Validate { paths } => validate(cli, paths),
        Command::Construct { kind, inputs, output } => construct(cli, *kind, inputs, output.as_deref()),
        Command::Verify { suite } => verify(cli, suite),
        Command::Witness { output } => witness(cli, output.as_deref()),
    }
}

fn tnorm(cli: &Cli) -> Result<Option<TNorm>> {
    Ok(cli.tnorm.as_deref().map(format::parse_tnorm_arg).transpose()?)
}

fn tnorm_or_default(cli: &Cli) -> Result<TNorm> {
    Ok(tnorm(cli)?.unwrap_or_else(TNorm::lukasiewicz))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}")?;
            Ok(())
        }
    }
}

fn render(cli: &Cli, report: &Report) -> String {
    match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text().trim_end().to_string(),
    }
}

fn status_code(report: &Report) -> u8 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FOUND
    }
}

fn validate(cli: &Cli, paths: &[std::path::PathBuf]) -> Result<u8> {
    let mut report = Report::new("validate");
    for path in paths {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let doc: Value = format::from_json(&text, &path.display().to_string())?;
        let name = path.display().to_string();
        let inputs = json!({ "path": name });
        if doc.get("matrix").is_some() {
            let c = format::load_qcat(path)?;
            let violation = c.validate().map(|v| json!(v));
            report.push(Case::law("category_axioms", inputs, violation));
        } else if doc.get("variant").is_some() {
            let t = Arc::new(tnorm_or_default(cli)?);
            let s = format::load_suitable(path, t)?;
            let grid = Grid::uniform(cli.grid_denominator.unwrap_or(100)).into_values();
            let r = s.check(&grid);
            report.push(Case::law("suitable_set_axioms", inputs, r.violation.map(|v| json!(v))));
        } else if doc.get("components").is_some() {
            let t = tnorm_or_default(cli)?;
            let k: IntervalSet = format::from_json(&text, &name)?;
            let r = t.subquantale_check(&k);
            report.push(Case::law("subquantale", inputs, r.failure.map(|f| json!(f.to_string()))));
        } else if doc.get("blocks").is_some() {
            format::parse_tnorm_arg(&text)?;
            report.push(Case::law("tnorm", inputs, None));
        } else {
            return Err(Error::Parse(format!("{name}: unrecognised document")).into());
        }
    }
    emit(&render(cli, &report), None)?;
    Ok(status_code(&report))
}

fn want(inputs: &[std::path::PathBuf], n: usize, kind: Construction) -> Result<()> {
    if inputs.len() != n {
        return Err(Error::Parse(format!("{kind:?} takes {n} input file(s), got {}", inputs.len())).into());
    }
    Ok(())
}

fn construct(cli: &Cli, kind: Construction, inputs: &[std::path::PathBuf], output: Option<&Path>) -> Result<u8> {
    use Construction::*;
    let arity = match kind {
        Product | Tensor | HomTensor | HomPower | Coreflect | Reflect => 2,
        InitialLift | FinalLift | PorRho | PorSigma => 1,
    };
    want(inputs, arity, kind)?;
    let result: QCat = match kind {
        Product | Tensor | HomTensor | HomPower => {
            let a = format::load_qcat(&inputs[0])?;
            let b = format::load_qcat(&inputs[1])?;
            match kind {
                Product => QCat::product(&a, &b)?,
                Tensor => QCat::tensor(&a, &b)?,
                HomTensor => hom_tensor(&a, &b, cli.max_maps)?.category,
                _ => hom_power(&a, &b, cli.max_maps)?.category,
            }
        }
        Coreflect | Reflect => {
            let c = format::load_qcat(&inputs[1])?;
            let s = format::load_suitable(&inputs[0], c.tnorm_arc().clone())?;
            if kind == Coreflect {
                coreflect(&s, &c)?
            } else {
                reflect(&s, &c, cli.max_rounds)?
            }
        }
        InitialLift | FinalLift => {
            let direction = if kind == InitialLift {
                LiftDirection::Initial
            } else {
                LiftDirection::Final
            };
            let spec = format::load_lift(&inputs[0], direction)?;
            let legs: Vec<Leg<'_>> = spec.legs.iter().map(|(c, m)| Leg::new(c, m)).collect();
            match direction {
                LiftDirection::Initial => initial_lift(spec.tnorm.clone(), spec.carrier.clone(), &legs)?,
                LiftDirection::Final => final_lift(spec.tnorm.clone(), spec.carrier.clone(), &legs)?,
            }
        }
        PorRho | PorSigma => {
            let c = format::load_qcat(&inputs[0])?;
            let p = if kind == PorRho {
                c.por_coreflection()
            } else {
                c.por_reflection()
            };
            p.to_qcat(c.tnorm_arc().clone())
        }
    };
    let text = match cli.format {
        Format::Json => format::qcat_json(&result),
        Format::Text => qcat_text(&result),
    };
    emit(&text, output)?;
    Ok(EXIT_OK)
}

fn qcat_text(c: &QCat) -> String {
    let width = c.points().iter().map(String::len).max().unwrap_or(1);
    let mut lines = vec![format!("t-norm {}", c.tnorm())];
    for (x, name) in c.points().iter().enumerate() {
        let row: Vec<String> = (0..c.len()).map(|y| c.r(x, y).to_string()).collect();
        lines.push(format!("{name:>width$} | {}", row.join(" ")));
    }
    lines.join("\n")
}

fn config(cli: &Cli) -> Result<WorkspaceConfig> {
    let mut cfg = WorkspaceConfig {
        tnorm: tnorm(cli)?,
        grid_denominator: cli.grid_denominator,
        max_maps: cli.max_maps,
        max_rounds: cli.max_rounds,
        ..WorkspaceConfig::default()
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn verify(cli: &Cli, suite: &str) -> Result<u8> {
    let cfg = config(cli)?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let reports: Vec<Report> = suites.iter().map(|s| s.run(&cfg)).collect();
    let text = match (cli.format, reports.as_slice()) {
        (Format::Json, [one]) => one.to_json(),
        (Format::Json, many) => serde_json::to_string_pretty(many)?,
        (Format::Text, many) => many.iter().map(|r| render(cli, r)).collect::<Vec<_>>().join("\n"),
    };
    emit(&text, None)?;
    Ok(if reports.iter().all(Report::passed) { EXIT_OK } else { EXIT_FOUND })
}

fn witness(cli: &Cli, output: Option<&Path>) -> Result<u8> {
    let Some(t_arg) = cli.tnorm.as_deref() else {
        bail!(Error::Parse("witness needs --tnorm".into()));
    };
    let Some(k_arg) = cli.k.as_deref() else {
        bail!(Error::Parse("witness needs --k".into()));
    };
    let t = format::parse_tnorm_arg(t_arg)?;
    let k = format::parse_k_arg(k_arg, &t)?;
    let grid = match k.finite_points() {
        Some(points) => points,
        None => k.sample(Grid::farey(cli.grid_denominator.unwrap_or(8)).values()),
    };
    let criterion = ccc_criterion(&t, &k).ok();
    let report = ccc_identity_check(&t, &k, &grid)?;
    let Some(f) = report.failure else {
        let summary = json!({
            "tnorm": t.to_string(),
            "k": k,
            "cartesian_closed": true,
            "criterion": criterion,
            "triples_checked": report.triples_checked,
        });
        let text = match cli.format {
            Format::Json => serde_json::to_string_pretty(&summary)?,
            Format::Text => format!("no witness: identity holds on {} triples", report.triples_checked),
        };
        emit(&text, output)?;
        return Ok(EXIT_OK);
    };
    let w = ccc_witness(Arc::new(t), f.u, f.v, f.r)?;
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&WitnessDoc::of(&w))?,
        Format::Text => format!(
            "witness u={} v={} r={}: (u&v)∧r = {} but d_fin((0,x),(1,y)) = {}",
            w.u, w.v, w.r, w.lhs, w.d_fin
        ),
    };
    emit(&text, output)?;
    Ok(EXIT_FOUND)
}

