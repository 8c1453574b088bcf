use std::io::Write;
use std::path::Path;

use hyperspherical::extensions::{conjugate, nth_roots, ConjugateVariant};
use hyperspherical::fractal::{
    export, render_grid, render_grid_with_threads, Approach, Axis, ExportFormat, FractalConfig, Interval, SecondModulus,
};
use hyperspherical::properties::{run_property_suite, Sampler, DEFAULT_SEED};
use hyperspherical::relativity::{interval_sq, lorentz_boost, square_and_project, EventDelta};
use hyperspherical::{Cartesian, Degenerate, Spherical};

use crate::config::{FileConfig, FORMAT_ENV};
use crate::format::{Cell, Emitter, OutputFormat};
use crate::{ApproachArg, Cli, CliError, Command, ExportArg, Form, Operands, SecondModulusArg, VariantArg};

type Result<T> = std::result::Result<T, CliError>;

const DEFAULT_PROPERTY_CASES: usize = 1_000;
const DEFAULT_RELATIVITY_CASES: usize = 10;
const DEFAULT_BETAS: [f64; 3] = [0.0, 0.5, 0.9];
const RELATIVITY_TOL: f64 = 1e-9;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub(crate) fn execute<W: Write>(cli: Cli, env_format: Option<&str>, out: &mut W) -> Result<()> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path).map_err(usage)?,
        None => FileConfig::default(),
    };
    let format = resolve_format(cli.format.as_deref(), &file, env_format)?;
    let mut em = Emitter::new(format, out);

    match cli.command {
        Command::Mul { ops, fallback_b, a, b } => {
            let (x, y) = (parse_values(&a, &ops)?, parse_values(&b, &ops)?);
            let v = match ops.form {
                Form::Spherical => spherical(&x)?.mul_geometric(&spherical(&y)?).to_vec(),
                Form::Cartesian => {
                    let fa = parse_fallback(ops.fallback.as_deref())?;
                    let fb = parse_fallback(fallback_b.as_deref())?;
                    cartesian(&x)?.mul_cartesian(&cartesian(&y)?, fa.as_ref(), fb.as_ref())?.into_components()
                }
            };
            emit_one(&mut em, "mul", ops.form, v)
        }
        Command::Add { ops, a, b } => {
            let (x, y) = (parse_values(&a, &ops)?, parse_values(&b, &ops)?);
            let v = match ops.form {
                Form::Spherical => {
                    let sum = spherical(&x)?.to_cartesian().add(&spherical(&y)?.to_cartesian())?;
                    sum.to_spherical(None).to_vec()
                }
                Form::Cartesian => cartesian(&x)?.add(&cartesian(&y)?)?.into_components(),
            };
            emit_one(&mut em, "add", ops.form, v)
        }
        Command::Inv { ops, a } => {
            let h = operand(&a, &ops, ops.fallback.as_deref())?;
            let v = render(h.inverse()?, ops.form);
            emit_one(&mut em, "inv", ops.form, v)
        }
        Command::Div { ops, fallback_b, a, b } => {
            let x = operand(&a, &ops, ops.fallback.as_deref())?;
            let y = operand(&b, &ops, fallback_b.as_deref())?;
            let v = render(x.divide(&y)?, ops.form);
            emit_one(&mut em, "div", ops.form, v)
        }
        Command::Pow { ops, exp, a } => {
            let h = operand(&a, &ops, ops.fallback.as_deref())?;
            let v = render(h.pow_int(exp)?, ops.form);
            emit_one(&mut em, "pow", ops.form, v)
        }
        Command::Convert { ops, to, a } => {
            let h = operand(&a, &ops, ops.fallback.as_deref())?;
            let v = render(h, to);
            emit_one(&mut em, "convert", to, v)
        }
        Command::Roots { ops, m, a } => {
            let h = operand(&a, &ops, ops.fallback.as_deref())?;
            let set = nth_roots(&h, m)?;
            let values: Vec<Vec<f64>> = set.roots.into_iter().map(|r| render(r, ops.form)).collect();
            em.values("roots", ops.form.name(), &values)?;
            Ok(())
        }
        Command::Conjugate { ops, variant, a } => {
            let h = operand(&a, &ops, ops.fallback.as_deref())?;
            let variant = match variant {
                VariantArg::Full => ConjugateVariant::Full,
                VariantArg::Second => ConjugateVariant::Second,
                VariantArg::Third => ConjugateVariant::Third,
            };
            let v = render(conjugate(&h, variant)?, ops.form);
            emit_one(&mut em, "conjugate", ops.form, v)
        }
        Command::PropertyCheck { seed, cases } => {
            let seed = pick(seed, file.parsed("seed").map_err(usage)?, DEFAULT_SEED);
            let cases = pick(cases, file.parsed("cases").map_err(usage)?, DEFAULT_PROPERTY_CASES);
            property_check(&mut em, seed, cases)
        }
        Command::Fractal { approach, nmax, region, res, slice, out, export, threads, second_modulus } => {
            let nmax = pick(nmax, file.parsed("nmax").map_err(usage)?, hyperspherical::fractal::DEFAULT_N_MAX);
            let threads = threads.or(file.parsed("threads").map_err(usage)?);
            let mut cfg = FractalConfig::new(
                match approach {
                    ApproachArg::First => Approach::First,
                    ApproachArg::Second => Approach::Second,
                },
                parse_resolution(&res)?,
            )
            .with_n_max(nmax)
            .with_region(parse_region(&region)?)
            .with_second_modulus(match second_modulus {
                SecondModulusArg::Squared => SecondModulus::Squared,
                SecondModulusArg::AsPrinted => SecondModulus::AsPrinted,
            });
            if let Some(s) = slice {
                let (axis, value) = parse_slice(&s)?;
                cfg = cfg.with_slice(axis, value);
            }
            let kind = match (export, &out) {
                (Some(k), _) => Some(k),
                (None, Some(path)) => Some(infer_export(path)?),
                (None, None) => None,
            };
            fractal(&mut em, &cfg, threads, out.as_deref(), kind)
        }
        Command::RelativityCheck { delta, beta, seed, cases } => {
            let seed = pick(seed, file.parsed("seed").map_err(usage)?, DEFAULT_SEED);
            let cases = pick(cases, file.parsed("cases").map_err(usage)?, DEFAULT_RELATIVITY_CASES);
            let betas = match beta {
                Some(b) => parse_list(&b)?,
                None => DEFAULT_BETAS.to_vec(),
            };
            let pairs = match delta {
                Some(d) => {
                    let v = parse_list(&d)?;
                    if v.len() != 4 {
                        return Err(usage(format!("--delta expects dx,dy,dz,cdt, got {} values", v.len())));
                    }
                    let d = EventDelta::new(v[0], v[1], v[2], v[3])?;
                    betas.iter().map(|b| (d, *b)).collect()
                }
                None => {
                    let mut s = Sampler::new(seed);
                    (0..cases)
                        .map(|_| {
                            let d = s.event();
                            (d, s.uniform(-0.99, 0.99))
                        })
                        .collect::<Vec<_>>()
                }
            };
            relativity_check(&mut em, &pairs)
        }
    }
}

fn resolve_format(flag: Option<&str>, file: &FileConfig, env: Option<&str>) -> Result<OutputFormat> {
    if let Some(f) = flag {
        return OutputFormat::parse(f).ok_or_else(|| usage(format!("unknown format `{f}`")));
    }
    if let Some(f) = file.get("format") {
        return OutputFormat::parse(f).ok_or_else(|| usage(format!("config: unknown format `{f}`")));
    }
    match env.filter(|s| !s.trim().is_empty()) {
        Some(f) => OutputFormat::parse(f).ok_or_else(|| usage(format!("{FORMAT_ENV}: unknown format `{f}`"))),
        None => Ok(OutputFormat::Text),
    }
}

fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>().map_err(|_| usage(format!("`{t}` is not a number")))
        })
        .collect()
}

fn parse_values(s: &str, ops: &Operands) -> Result<Vec<f64>> {
    let v = parse_list(s)?;
    if let Some(dim) = ops.dim {
        if v.len() != dim {
            return Err(usage(format!("operand `{s}` has {} values, --dim is {dim}", v.len())));
        }
    }
    Ok(v)
}

fn parse_fallback(s: Option<&str>) -> Result<Option<Degenerate>> {
    s.map(|s| parse_list(s).map(Degenerate::new)).transpose()
}

fn spherical(v: &[f64]) -> Result<Spherical> {
    Ok(Spherical::from_slice(v)?)
}

fn cartesian(v: &[f64]) -> Result<Cartesian> {
    Ok(Cartesian::new(v.to_vec())?)
}

/// Reads an operand as a spherical value, converting Cartesian input.
fn operand(s: &str, ops: &Operands, fallback: Option<&str>) -> Result<Spherical> {
    let v = parse_values(s, ops)?;
    match ops.form {
        Form::Spherical => spherical(&v),
        Form::Cartesian => Ok(cartesian(&v)?.to_spherical(parse_fallback(fallback)?.as_ref())),
    }
}

fn render(h: Spherical, form: Form) -> Vec<f64> {
    match form {
        Form::Spherical => h.to_vec(),
        Form::Cartesian => h.to_cartesian().into_components(),
    }
}

fn emit_one<W: Write>(em: &mut Emitter<'_, W>, op: &str, form: Form, v: Vec<f64>) -> Result<()> {
    em.values(op, form.name(), &[v])?;
    Ok(())
}

fn property_check<W: Write>(em: &mut Emitter<'_, W>, seed: u64, cases: usize) -> Result<()> {
    let report = run_property_suite(seed, cases);
    let rows: Vec<Vec<Cell>> = report
        .results
        .iter()
        .map(|r| {
            vec![
                Cell::Text(r.name.to_string()),
                Cell::Int(r.cases as i64),
                Cell::Num(r.max_error),
                Cell::Num(r.tolerance),
                Cell::Bool(r.passed()),
            ]
        })
        .collect();
    em.table(&["property", "cases", "max_error", "tolerance", "passed"], &rows)?;
    let failed = report.results.iter().filter(|r| !r.passed()).count();
    em.note(&format!("seed {seed}: {} of {} properties passed", rows.len() - failed, rows.len()))?;
    if failed > 0 {
        return Err(CliError::CheckFailed(format!("{failed} properties exceeded their tolerance")));
    }
    Ok(())
}

fn parse_resolution(s: &str) -> Result<[usize; 3]> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("invalid resolution `{t}`"))))
        .collect::<Result<_>>()?;
    match parts[..] {
        [n] => Ok([n; 3]),
        [x, y, z] => Ok([x, y, z]),
        _ => Err(usage("--res expects nx,ny,nz or a single count")),
    }
}

fn parse_region(s: &str) -> Result<[Interval<f64>; 3]> {
    let parts: Vec<Interval<f64>> = s
        .split(',')
        .map(|t| {
            let (lo, hi) = t.split_once(':').ok_or_else(|| usage(format!("interval `{t}` must be lo:hi")))?;
            let lo = lo.trim().parse().map_err(|_| usage(format!("invalid bound `{lo}`")))?;
            let hi = hi.trim().parse().map_err(|_| usage(format!("invalid bound `{hi}`")))?;
            Ok(Interval::new(lo, hi))
        })
        .collect::<Result<_>>()?;
    parts.try_into().map_err(|_| usage("--region expects three intervals x0:x1,y0:y1,z0:z1"))
}

fn parse_slice(s: &str) -> Result<(Axis, f64)> {
    let (axis, value) = s.split_once('=').ok_or_else(|| usage("--slice expects axis=value, e.g. z=0"))?;
    let axis = match axis.trim() {
        "x" => Axis::X,
        "y" => Axis::Y,
        "z" => Axis::Z,
        other => return Err(usage(format!("unknown slice axis `{other}`"))),
    };
    let value = value.trim().parse().map_err(|_| usage(format!("invalid slice value `{value}`")))?;
    Ok((axis, value))
}

fn infer_export(path: &Path) -> Result<ExportArg> {
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("pgm") => Ok(ExportArg::PgmSlice),
        Some("csv") => Ok(ExportArg::Csv),
        Some("raw" | "vox" | "bin") => Ok(ExportArg::VoxelRaw),
        _ => Err(usage(format!("cannot infer export format from `{}`; pass --export", path.display()))),
    }
}

fn fractal<W: Write>(
    em: &mut Emitter<'_, W>,
    cfg: &FractalConfig<f64>,
    threads: Option<usize>,
    out: Option<&Path>,
    kind: Option<ExportArg>,
) -> Result<()> {
    let grid = match threads {
        Some(n) => render_grid_with_threads(cfg, n)?,
        None => render_grid(cfg)?,
    };
    if let Some(path) = out {
        let format = match kind.expect("export kind resolved with --out") {
            ExportArg::PgmSlice => ExportFormat::PgmSlice,
            ExportArg::Csv => ExportFormat::Csv,
            ExportArg::VoxelRaw => ExportFormat::VoxelRaw,
        };
        export(&grid, format, path)?;
    }
    let members = grid.counts().iter().filter(|&&n| n == cfg.n_max).count();
    let [nx, ny, nz] = grid.shape();
    let approach = match cfg.approach {
        Approach::First => "first",
        Approach::Second => "second",
    };
    let row = vec![
        Cell::Text(approach.into()),
        Cell::Int(cfg.n_max as i64),
        Cell::Text(format!("{nx}x{ny}x{nz}")),
        Cell::Int(grid.counts().len() as i64),
        Cell::Int(members as i64),
        Cell::Text(out.map(|p| p.display().to_string()).unwrap_or_default()),
    ];
    em.table(&["approach", "n_max", "shape", "cells", "members", "out"], &[row])?;
    Ok(())
}

fn relativity_check<W: Write>(em: &mut Emitter<'_, W>, pairs: &[(EventDelta<f64>, f64)]) -> Result<()> {
    let mut rows = Vec::with_capacity(pairs.len());
    let mut worst = 0.0f64;
    for (d, beta) in pairs {
        let boosted = lorentz_boost(d, *beta)?;
        let ds2 = interval_sq(d).abs();
        let sq = square_and_project(&boosted);
        let residual = (sq.spatial_modulus - ds2).abs();
        worst = worst.max(residual / ds2.max(1.0));
        rows.push(vec![
            Cell::Num(d.dx),
            Cell::Num(d.dy),
            Cell::Num(d.dz),
            Cell::Num(d.cdt),
            Cell::Num(*beta),
            Cell::Num(sq.spatial_modulus),
            Cell::Num(ds2),
            Cell::Num(residual),
        ]);
    }
    em.table(&["dx", "dy", "dz", "cdt", "beta", "spatial_modulus", "abs_ds2", "residual"], &rows)?;
    em.note(&format!("max relative residual {:e} (tolerance {RELATIVITY_TOL:e})", worst))?;
    if worst > RELATIVITY_TOL {
        return Err(CliError::CheckFailed(format!("relative residual {worst:e} exceeds {RELATIVITY_TOL:e}")));
    }
    Ok(())
}
