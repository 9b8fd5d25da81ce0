use crate::{Class, Command, Preprocess};
use aromatic_core::elemental::{
    verify_composition_lemma, verify_composition_theorem, verify_sseries_of_map,
    verify_substitution_theorem, Comparison, PolyScalar,
};
use aromatic_core::forest::{enumerate, enumerate_up_to, sigma};
use aromatic_core::integrator::{
    fit_slope, noise_floor, step_grid, volume_errors, ExperimentResult, NumericField, CSV_HEADER,
};
use aromatic_core::series::{bar_value, comp_product, coproduct};
use aromatic_core::substitution::{divergence, star_product, star_product_symbolic};
use aromatic_core::{random, AromaticForest, Domain, ForestFilter, Rational, RationalMap};
use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] aromatic_core::Error),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Write(#[from] io::Error),
    #[error("{failed} of {total} instances failed")]
    Failed { failed: usize, total: usize },
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Enumerate { size, class } => {
            for phi in enumerate(size, filter(class)) {
                writeln!(out, "{phi}")?;
            }
        }
        Command::Sigma { forest } => writeln!(out, "{}", sigma(&parse(&forest)?))?,
        Command::Coproduct { forest } => writeln!(out, "{}", coproduct(&parse(&forest)?))?,
        Command::Compose { left, right, order } => {
            let product = comp_product(&load(&right)?, &load(&left)?, order)?;
            writeln!(out, "{}", product.to_json_string())?;
        }
        Command::Substitute {
            symbolic: Some(phi),
            ..
        } => writeln!(out, "{}", star_product_symbolic(&parse(&phi)?))?,
        Command::Substitute { b, a, order, .. } => {
            let (b, a, order) = match (b, a, order) {
                (Some(b), Some(a), Some(order)) => (b, a, order),
                _ => unreachable!("argument groups require --b, --a and --order together"),
            };
            writeln!(
                out,
                "{}",
                star_product(&load(&b)?, &load(&a)?, order)?.to_json_string()
            )?;
        }
        Command::Divergence { b, order } => {
            writeln!(out, "{}", divergence(&load(&b)?, order)?.to_json_string())?
        }
        Command::Tables { which, max_size } => tables(which, max_size, out)?,
        Command::Verify {
            lemma31,
            thm41,
            thm42,
            max_size,
            seed,
            count,
            ..
        } => {
            let (failed, total) = if lemma31 {
                lemma_sweep(max_size.unwrap_or(4), seed.unwrap_or(2024), out)?
            } else if thm41 {
                composition_sweep(max_size.unwrap_or(3), seed.unwrap_or(41), count, out)?
            } else if thm42 {
                map_sweep(max_size.unwrap_or(3), seed.unwrap_or(42), count, out)?
            } else {
                substitution_sweep(max_size.unwrap_or(3), seed.unwrap_or(43), count, out)?
            };
            writeln!(out, "{} passed, {failed} failed", total - failed)?;
            if failed > 0 {
                return Err(CliError::Failed { failed, total });
            }
        }
        Command::Integrate {
            field,
            preprocess,
            hmin,
            hmax,
            steps,
            y0,
            summary,
        } => integrate(&field, preprocess, hmin, hmax, steps, y0, summary, out)?,
    }
    Ok(())
}

fn filter(class: Class) -> ForestFilter {
    match class {
        Class::Af => ForestFilter::All,
        Class::At => ForestFilter::AromaticTrees,
        Class::T => ForestFilter::RootedTrees,
        Class::A => ForestFilter::Rootless,
        Class::F => ForestFilter::Loopless,
    }
}

fn parse(text: &str) -> Result<AromaticForest> {
    Ok(AromaticForest::parse(text)?)
}

fn load(path: &Path) -> Result<RationalMap> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(RationalMap::from_json_str(&text)?)
}

/// Table `1` lists the empty and the connected forests with their coproducts,
/// `2` the aromatic trees and `3` the rootless forests with their symbolic
/// substitution law, one `forest = expansion` line each.
fn tables(which: u8, max_size: usize, out: &mut dyn Write) -> Result<()> {
    let rows: Vec<AromaticForest> = match which {
        1 => enumerate_up_to(max_size, ForestFilter::All)
            .into_iter()
            .filter(|phi| phi.is_unit() || phi.components().len() == 1)
            .collect(),
        2 => enumerate_up_to(max_size, ForestFilter::AromaticTrees),
        _ => enumerate_up_to(max_size, ForestFilter::Rootless),
    };
    for phi in rows {
        if which == 1 {
            writeln!(out, "{phi} = {}", coproduct(&phi))?;
        } else {
            writeln!(out, "{phi} = {}", star_product_symbolic(&phi))?;
        }
    }
    Ok(())
}

fn report<T: aromatic_core::Scalar + Display>(
    out: &mut dyn Write,
    label: &str,
    c: &Comparison<T>,
) -> Result<bool> {
    if c.holds() {
        writeln!(out, "{label}: PASS")?;
        return Ok(true);
    }
    writeln!(out, "{label}: FAIL at grades {:?}", c.mismatches())?;
    for k in c.mismatches() {
        let show = |side: &[PolyScalar<T>]| {
            side.get(k)
                .map_or_else(|| "missing".to_string(), |p| p.to_string())
        };
        writeln!(out, "  lhs[{k}] = {}", show(&c.lhs))?;
        writeln!(out, "  rhs[{k}] = {}", show(&c.rhs))?;
    }
    Ok(false)
}

fn lemma_sweep(max_size: usize, seed: u64, out: &mut dyn Write) -> Result<(usize, usize)> {
    let mut rng = random::rng(seed);
    let f = random::vector_field(&mut rng, 2, 3);
    let g = random::polynomial(&mut rng, 2, 2);
    let forests = enumerate_up_to(max_size, ForestFilter::All);
    let (mut failed, mut total) = (0, 0);
    for outer in &forests {
        for inner in forests
            .iter()
            .filter(|x| x.size() + outer.size() <= max_size)
        {
            total += 1;
            let c = verify_composition_lemma(outer, inner, &f, &g)?;
            if !report(out, &format!("pair ({outer}) ∘ ({inner})"), &c)? {
                failed += 1;
            }
        }
    }
    Ok((failed, total))
}

fn composition_sweep(
    order: usize,
    seed: u64,
    count: usize,
    out: &mut dyn Write,
) -> Result<(usize, usize)> {
    let mut rng = random::rng(seed);
    let f = random::vector_field(&mut rng, 2, 3);
    let g = random::polynomial(&mut rng, 2, 2);
    let mut failed = 0;
    for k in 0..count {
        let b = random::coeff_map(&mut rng, Domain::AF, order, None);
        let a = random::coeff_map(&mut rng, Domain::AF, order, None);
        if !report(
            out,
            &format!("instance {k}"),
            &verify_composition_theorem(&b, &a, &f, &g, order)?,
        )? {
            failed += 1;
        }
    }
    Ok((failed, count))
}

fn map_sweep(order: usize, seed: u64, count: usize, out: &mut dyn Write) -> Result<(usize, usize)> {
    let mut rng = random::rng(seed);
    let f = random::vector_field(&mut rng, 2, 2);
    let g = random::polynomial(&mut rng, 2, 2);
    let mut failed = 0;
    for k in 0..count {
        let a = random::coeff_map(&mut rng, Domain::AT, order, None);
        let aroma = bar_value(&a, &AromaticForest::loop1())?;
        if aroma != Rational::from_integer(0.into()) {
            writeln!(
                out,
                "instance {k}: FAIL extension at <b> is {aroma}, expected 0"
            )?;
            failed += 1;
            continue;
        }
        if !report(
            out,
            &format!("instance {k}"),
            &verify_sseries_of_map(&a, &f, &g, order)?,
        )? {
            failed += 1;
        }
    }
    Ok((failed, count))
}

fn substitution_sweep(
    order: usize,
    seed: u64,
    count: usize,
    out: &mut dyn Write,
) -> Result<(usize, usize)> {
    let mut rng = random::rng(seed);
    let f = random::vector_field(&mut rng, 2, 2);
    let g = random::polynomial(&mut rng, 2, 2);
    let mut failed = 0;
    for k in 0..count {
        let b = random::coeff_map(&mut rng, Domain::AT, order, None);
        let a = random::coeff_map(&mut rng, Domain::AF, order, None);
        if !report(
            out,
            &format!("instance {k}"),
            &verify_substitution_theorem(&b, &a, &f, &g, order)?,
        )? {
            failed += 1;
        }
    }
    Ok((failed, count))
}

#[allow(clippy::too_many_arguments)]
fn integrate(
    name: &str,
    preprocess: Preprocess,
    hmin: f64,
    hmax: f64,
    steps: usize,
    y0: Option<Vec<f64>>,
    summary: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let field = NumericField::<f64>::named(name)?;
    let y0 = y0.unwrap_or_else(|| [0.3, 0.5, -0.2][..field.dim()].to_vec());
    let h = step_grid(hmin, hmax, steps)?;
    let variants: &[bool] = match preprocess {
        Preprocess::Off => &[false],
        Preprocess::On => &[true],
        Preprocess::Both => &[false, true],
    };
    writeln!(out, "{CSV_HEADER}")?;
    let mut slopes = serde_json::Map::new();
    for &pre in variants {
        let errors = volume_errors(&field, &y0, &h, pre)?;
        let slope = errors
            .iter()
            .all(|&e| e > noise_floor::<f64>())
            .then(|| fit_slope(&h, &errors));
        let result = ExperimentResult {
            h: h.clone(),
            errors,
            slope: slope.unwrap_or(f64::NAN),
            preprocessed: pre,
        };
        write!(out, "{}", result.csv_rows())?;
        slopes.insert(
            if pre { "on" } else { "off" }.into(),
            slope.map_or(serde_json::Value::Null, serde_json::Value::from),
        );
    }
    if summary {
        let line = serde_json::json!({ "field": name, "slope": slopes });
        writeln!(out, "{line}")?;
    }
    Ok(())
}
