use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dualcon::contraction::{generalized_iw_contract, iw_contract, ContractionLimit, Decomposition, ExponentAssignment};
use dualcon::family::{check_family, contraction_family, AlgebraicFamily, FamilyInvolution, RealFamily};
use dualcon::json::{to_pretty, FamilyDoc, InvolutionDoc, LieAlgebraDoc};
use dualcon::scalars::{parse_rational, GaussianRational, Rational};
use dualcon::so_catalog::{CatalogName, SoPair};
use dualcon::symmetric::{dual_form, split, Involution};
use dualcon::verify::cmd_verify;
use dualcon::{fingerprint, LieAlgebra, SOParams, ValidationReport};

/// Exact contractions, dual symmetric pairs and their polynomial families.
///
/// `--input` takes a path to a JSON document or a catalog name:
/// `so:p,q`, `theta:p,d,q`, `iso:n`, `motion:p,d,q`, `so+abelian:n,m`,
/// `heisenberg:2k+1`, `abelian:n`.
#[derive(Parser)]
#[command(name = "dualcon", version)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Machine-readable reports.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry and Jacobi of an algebra or a family.
    Validate(Input),
    /// Simple contraction with respect to k: `--k` on an algebra, or the
    /// fixed points of an involution.
    Contract {
        #[command(flatten)]
        input: Input,
        /// 1-based basis indices spanning k.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
    },
    /// Limit of the diagonal rescaling `e_i ↦ ε^{n_i} e_i`.
    Gcontract {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        exponents: Vec<i64>,
    },
    /// Dual form of a symmetric pair given as an involution.
    Dualize(Input),
    /// Contraction family of a symmetric pair, as a family document.
    Family(Input),
    /// Evaluate a family at `z = α`.
    Fiber {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Isomorphism invariants: dimensions, series, center, radical, Killing signature.
    Fingerprint(Input),
    /// Check each fiber of the family of `(so(p+d,q), θ_{p,d,q})`.
    Verify {
        p: usize,
        d: usize,
        q: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-4,-1,0,1,4")]
        alphas: Vec<String>,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let emit = |text: String| write_output(cli.out.as_deref(), &text);
    match &cli.command {
        Command::Validate(input) => {
            let (desc, pass) = validate(&input.input)?;
            if cli.json {
                emit(to_pretty(&ValidateJson { pass, report: desc }))?;
            } else {
                emit(format!("{desc}\n"))?;
            }
            Ok(if pass { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Contract { input, k } => {
            let d = match k {
                Some(k) => {
                    let g = load_algebra(&input.input)?;
                    let k0 = k
                        .iter()
                        .map(|&i| i.checked_sub(1).filter(|&i| i < g.dim()).with_context(|| format!("--k index {i} out of range")))
                        .collect::<Result<Vec<_>>>()?;
                    Decomposition::from_indices(g, &k0)?
                }
                None => split(&load_involution(&input.input)?)?.decomposition().clone(),
            };
            emit(algebra_json(&iw_contract(&d)))?;
            Ok(Outcome::Pass)
        }
        Command::Gcontract { input, exponents } => {
            let g = load_algebra(&input.input)?;
            if exponents.len() != g.dim() {
                bail!("--exponents has {} entries for dim {}", exponents.len(), g.dim());
            }
            match generalized_iw_contract(&g, &ExponentAssignment(exponents.clone()))? {
                ContractionLimit::Exists(h) => {
                    emit(algebra_json(&h))?;
                    Ok(Outcome::Pass)
                }
                ContractionLimit::Diverges(bad) => {
                    for b in &bad {
                        eprintln!(
                            "diverges: C_{{{},{}}}^{} ≠ 0 with exponent {} < 0",
                            b.i + 1,
                            b.j + 1,
                            b.k + 1,
                            b.exponent
                        );
                    }
                    Ok(Outcome::Fail)
                }
            }
        }
        Command::Dualize(input) => {
            let sp = split(&load_involution(&input.input)?)?;
            emit(algebra_json(&dual_form(&sp)?.0))?;
            Ok(Outcome::Pass)
        }
        Command::Family(input) => {
            let sp = split(&load_involution(&input.input)?)?;
            let fam = contraction_family(&sp).complexify();
            emit(to_pretty(&FamilyDoc::from_family(&fam)?))?;
            Ok(Outcome::Pass)
        }
        Command::Fiber { input, alpha } => {
            let fam = load_family(&input.input)?;
            let alpha = parse_rational(alpha).context("--alpha")?;
            emit(algebra_json(&fiber(&fam, &alpha)))?;
            Ok(Outcome::Pass)
        }
        Command::Fingerprint(input) => {
            let fp = fingerprint(&load_algebra(&input.input)?);
            if cli.json {
                emit(to_pretty(&fp))?;
            } else {
                let sig = match fp.killing_signature {
                    Some((p, n)) => format!("({p}, {n})"),
                    None => "n/a (complex)".into(),
                };
                emit(format!(
                    "dim {}\ncenter {}\nderived {:?}\nlower central {:?}\nkilling rank {}\nkilling signature {}\nradical {}\n",
                    fp.dim, fp.center_dim, fp.derived_dims, fp.lcs_dims, fp.killing_rank, sig, fp.radical_dim
                ))?;
            }
            Ok(Outcome::Pass)
        }
        Command::Verify { p, d, q, alphas } => {
            let params = SOParams::new(*p, *d, *q)?;
            let alphas = alphas
                .iter()
                .map(|a| parse_rational(a).with_context(|| format!("--alphas entry {a:?}")))
                .collect::<Result<Vec<Rational>>>()?;
            let report = cmd_verify(params, &alphas)?;
            if cli.json {
                emit(to_pretty(&report))?;
            } else {
                emit(format!("{report}\n"))?;
            }
            Ok(if report.pass { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

#[derive(Serialize)]
struct ValidateJson {
    pass: bool,
    report: String,
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn algebra_json(g: &LieAlgebra) -> String {
    to_pretty(&LieAlgebraDoc::from_algebra(g))
}

/// Catalog name, if `input` is one. A catalog-shaped string with bad
/// parameters is an error rather than a file path.
fn catalog(input: &str) -> Result<Option<CatalogName>> {
    if Path::new(input).exists() || !input.contains(':') {
        return Ok(None);
    }
    Ok(Some(input.parse()?))
}

fn read(input: &str) -> Result<String> {
    fs::read_to_string(input).with_context(|| format!("reading {input}"))
}

fn load_algebra(input: &str) -> Result<LieAlgebra> {
    if let Some(name) = catalog(input)? {
        return Ok(name.algebra());
    }
    LieAlgebraDoc::parse(&read(input)?)?.to_algebra().with_context(|| format!("in {input}"))
}

fn load_involution(input: &str) -> Result<Involution> {
    match catalog(input)? {
        Some(CatalogName::Theta(params)) => Ok(SoPair::new(params).pair.involution().clone()),
        Some(_) => bail!("{input} is an algebra, not an involution; use theta:p,d,q or an involution/v1 file"),
        None => Ok(InvolutionDoc::parse(&read(input)?)?.to_involution().with_context(|| format!("in {input}"))?),
    }
}

fn load_family(input: &str) -> Result<AlgebraicFamily> {
    match catalog(input)? {
        Some(CatalogName::Theta(params)) => Ok(contraction_family(&SoPair::new(params).pair).complexify()),
        Some(_) => bail!("{input} is an algebra, not a family; use theta:p,d,q or a family/v1 file"),
        None => Ok(FamilyDoc::parse(&read(input)?)?.to_family().with_context(|| format!("in {input}"))?),
    }
}

/// Real fiber when the family carries coefficient conjugation and all its
/// constants are real; complex otherwise.
fn fiber(fam: &AlgebraicFamily, alpha: &Rational) -> LieAlgebra {
    if fam.involution() == Some(&FamilyInvolution::CoefficientConjugation) {
        if let Ok(real) = RealFamily::new(fam.basis_names().to_vec(), fam.structure_constants().clone()) {
            return real.fiber(alpha);
        }
    }
    fam.fiber(&GaussianRational::from_rational(alpha.clone()))
}

fn validate(input: &str) -> Result<(String, bool)> {
    if let Some(name) = catalog(input)? {
        let r = name.algebra().validate();
        return Ok((describe(&r), r.is_pass()));
    }
    let text = read(input)?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parsing {input}"))?;
    if value.get("rank").is_some() {
        let r = check_family(&FamilyDoc::parse(&text)?.to_family()?);
        Ok((describe(&r), r.is_pass()))
    } else {
        let r = LieAlgebraDoc::parse(&text)?.raw_table()?.validate()?;
        Ok((describe(&r), r.is_pass()))
    }
}

fn describe<T>(r: &ValidationReport<T>) -> String
where
    ValidationReport<T>: std::fmt::Display,
{
    if r.is_pass() { "pass".into() } else { r.to_string() }
}
