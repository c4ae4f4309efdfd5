//! `galekit`: exact projective geometry from the command line.
//!
//! Every command reads and writes JSON with rational entries encoded as
//! "num/den" strings.  Commands that take an `--input` file can instead
//! generate a seeded input on the fly (`--seed`, `--bound`, and the shape
//! flags), which keeps every run reproducible.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use galekit_cli::io::{emit, parse_indices, read_json, ModelQuery, SolveRequest};
use galekit_cli::suites::{run_all, run_suite};
use galekit_cli::RunConfig;
use galekit_core::cremona::{cr_apply, kernel_check, CremonaWord};
use galekit_core::gale::{associate, is_self_associated};
use galekit_core::gen::{generate_config, ConfigGenerator, DEFAULT_BOUND};
use galekit_core::json::{
    decode_point, encode_point, encode_rationals, to_json, AssociationDto, ConfigDto, ModelDto,
    SystemDto,
};
use galekit_core::linsys::{
    coble_sextic_witness, ninth_base_point, quintic_witness, solve_system, weddle_membership,
};
use galekit_core::projective::{veronese, PointConfiguration, ProjectivePoint};
use galekit_core::quadric::{build_model, cover_image, is_smooth_at, membership, sign_orbit};
use galekit_core::weyl::{
    generator, parse_word, w_element, w_hyperplane_image, w_word, DivisorClass, WeylElement,
};
use galekit_core::{Error, Result};
use serde_json::json;

#[derive(Parser)]
#[command(name = "galekit", version, about = "Exact projective geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Associate a configuration of m points in P^n
    Associate {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Test whether 2n+2 points are equivalent to their own associate
    SelfAssoc {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Dimension and basis of a linear system of hypersurfaces
    LinsysDim {
        /// Solve request or bare point configuration; omit to generate
        /// m random points in P^n from the seed
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Degree, when the input is a bare point configuration
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Ninth base point of the cubic pencil through eight plane points
    NinthPoint {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Quintic with a triple point at the ninth input point and tangencies
    /// at the other eight
    Quintic {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Unique plane cubic through the associate of nine points of P^5
    CobleCheck {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Weddle-locus membership: eight points of P^5 plus a candidate
    WeddleTest {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Matrix of a reflection word on the divisor lattice
    Weyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Letters, e.g. "0 3 2" or "s0 s3 s2"; the first letter acts first
        #[arg(long)]
        word: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Lattice element attached to an even index subset, with its closed
    /// form and word expansion
    WeylGn {
        #[arg(long)]
        n: usize,
        #[arg(long = "J")]
        j: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply a Cremona word to a configuration of n+3 or more points
    Cremona {
        #[arg(long)]
        word: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that the word of an even subset acts trivially on a
    /// configuration of n+3 points
    CremonaKernel {
        #[arg(long = "J")]
        j: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Diagonal quadric model cut out by n+3 points on the line
    Quadrics {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Membership, sign fibre, cover image and smoothness of a point
    /// against a stored model
    QuadricsCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a named verification suite ("all" runs every suite in order)
    Suite {
        name: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn load_or_generate(
    input: Option<&Path>,
    n: Option<usize>,
    m: Option<usize>,
    seed: Option<u64>,
    bound: Option<i64>,
) -> Result<PointConfiguration> {
    match input {
        Some(path) => read_json::<ConfigDto>(path)?.to_config(),
        None => {
            let (Some(n), Some(m)) = (n, m) else {
                return Err(Error::Parse(
                    "no --input: need the shape flags to generate one".into(),
                ));
            };
            generate_config(n, m, seed.unwrap_or(0), bound.unwrap_or(DEFAULT_BOUND))
        }
    }
}

/// Eight plane points plus the ninth base point of their cubic pencil,
/// from a file of 8 or 9 points or from a seed.
fn nine_pencil_points(
    input: Option<&Path>,
    seed: Option<u64>,
    bound: Option<i64>,
) -> Result<Vec<ProjectivePoint>> {
    let config = load_or_generate(input, Some(2), Some(8), seed, bound.or(Some(9)))?;
    let mut points = config.points().to_vec();
    if points.len() == 8 {
        let ninth = ninth_base_point(&points)?;
        points.push(ninth);
    }
    Ok(points)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Associate {
            input,
            output,
            n,
            m,
            seed,
            bound,
        } => {
            let config = load_or_generate(input.as_deref(), n, m, seed, bound)?;
            let result = associate(&config)?;
            emit(
                &to_json(&AssociationDto::from_result(&result))?,
                output.as_deref(),
            )?;
        }
        Command::SelfAssoc {
            input,
            output,
            n,
            seed,
            bound,
        } => {
            let config = load_or_generate(input.as_deref(), n, n.map(|v| 2 * v + 2), seed, bound)?;
            let verdict = is_self_associated(&config)?;
            let result = associate(&config)?;
            emit(
                &to_json(&json!({
                    "self_associated": verdict,
                    "association": AssociationDto::from_result(&result),
                }))?,
                output.as_deref(),
            )?;
        }
        Command::LinsysDim {
            input,
            output,
            d,
            n,
            m,
            seed,
            bound,
        } => {
            let request: SolveRequest =
                match input.as_deref().map(read_json::<SolveRequest>).transpose() {
                    Ok(Some(r)) => r,
                    Ok(None) | Err(_) => {
                        let config = load_or_generate(input.as_deref(), n, m, seed, bound)?;
                        let Some(degree) = d else {
                            return Err(Error::Parse("bare point configuration needs --d".into()));
                        };
                        SolveRequest {
                            n: config.n(),
                            degree,
                            conditions: ConfigDto::from_config(&config)
                                .points
                                .iter()
                                .map(|p| galekit_core::json::ConditionDto {
                                    point: p.clone(),
                                    multiplicity: 1,
                                    tangent_line: None,
                                })
                                .collect(),
                        }
                    }
                };
            let conditions = request
                .conditions
                .iter()
                .map(|c| c.to_condition())
                .collect::<Result<Vec<_>>>()?;
            let sys = solve_system(request.n, request.degree, conditions)?;
            emit(&to_json(&SystemDto::from_system(&sys)?)?, output.as_deref())?;
        }
        Command::NinthPoint {
            input,
            output,
            seed,
            bound,
        } => {
            let points = nine_pencil_points(input.as_deref(), seed, bound)?;
            emit(
                &to_json(&json!({
                    "points": points[..8].iter().map(encode_point).collect::<Vec<_>>(),
                    "ninth": encode_point(&points[8]),
                }))?,
                output.as_deref(),
            )?;
        }
        Command::Quintic {
            input,
            output,
            seed,
            bound,
        } => {
            let points = nine_pencil_points(input.as_deref(), seed, bound)?;
            if points.len() != 9 {
                return Err(Error::WrongPointCount {
                    need: 9,
                    got: points.len(),
                });
            }
            let (dim, basis) = quintic_witness(&points)?;
            let dense = basis
                .iter()
                .map(|f| Ok(encode_rationals(&f.to_dense(5)?)))
                .collect::<Result<Vec<_>>>()?;
            emit(
                &to_json(&json!({
                    "dimension": dim,
                    "basis": dense,
                    "points": points.iter().map(encode_point).collect::<Vec<_>>(),
                }))?,
                output.as_deref(),
            )?;
        }
        Command::CobleCheck {
            input,
            output,
            seed,
            bound,
        } => {
            let points: Vec<ProjectivePoint> = match input.as_deref() {
                Some(path) => read_json::<ConfigDto>(path)?.to_config()?.points().to_vec(),
                None => {
                    let plane = generate_config(2, 9, seed.unwrap_or(0), bound.unwrap_or(30))?;
                    plane.points().iter().map(|p| veronese(p, 2)).collect()
                }
            };
            let cubic = coble_sextic_witness(&points)?;
            emit(
                &to_json(&json!({
                    "points": points.iter().map(encode_point).collect::<Vec<_>>(),
                    "cubic": encode_rationals(&cubic.to_dense(3)?),
                }))?,
                output.as_deref(),
            )?;
        }
        Command::WeddleTest {
            input,
            output,
            seed,
            bound,
        } => {
            let points: Vec<ProjectivePoint> = match input.as_deref() {
                Some(path) => read_json::<ConfigDto>(path)?.to_config()?.points().to_vec(),
                None => nine_pencil_points(None, seed, bound)?
                    .iter()
                    .map(|p| veronese(p, 2))
                    .collect(),
            };
            if points.len() != 9 {
                return Err(Error::WrongPointCount {
                    need: 9,
                    got: points.len(),
                });
            }
            let member = weddle_membership(&points[..8], &points[8])?;
            emit(
                &to_json(&json!({
                    "member": member,
                    "candidate": encode_point(&points[8]),
                }))?,
                output.as_deref(),
            )?;
        }
        Command::Weyl { n, m, word, output } => {
            let letters = parse_word(&word)?;
            let mut acc = WeylElement::identity(n, m);
            for &letter in &letters {
                acc = generator(letter, n, m)?.compose(&acc)?;
            }
            emit(
                &to_json(&json!({
                    "word": letters,
                    "matrix": weyl_matrix_strings(&acc),
                }))?,
                output.as_deref(),
            )?;
        }
        Command::WeylGn { n, j, output } => {
            let j_set = parse_indices(&j)?;
            let m = n + 3;
            let element = w_element(&j_set, n)?;
            let e0_image = element.apply(&DivisorClass::basis(n, m, 0)?)?;
            let closed = w_hyperplane_image(&j_set, n)?;
            let word = w_word(&j_set, n)?;
            let mut folded = WeylElement::identity(n, m);
            for &letter in &word {
                folded = generator(letter, n, m)?.compose(&folded)?;
            }
            let consistent = e0_image == closed && folded == element;
            emit(
                &to_json(&json!({
                    "J": j_set,
                    "matrix": weyl_matrix_strings(&element),
                    "e0_image": class_strings(&e0_image),
                    "closed_form": class_strings(&closed),
                    "word": word,
                    "consistent": consistent,
                }))?,
                output.as_deref(),
            )?;
        }
        Command::Cremona {
            word,
            input,
            output,
        } => {
            let letters = parse_word(&word)?;
            let config = read_json::<ConfigDto>(&input)?.to_config()?;
            let cremona_word = CremonaWord::new(config.n(), config.len(), letters)?;
            let result = cr_apply(&cremona_word, &config)?;
            emit(
                &to_json(&ConfigDto::from_config(&result))?,
                output.as_deref(),
            )?;
        }
        Command::CremonaKernel {
            j,
            input,
            output,
            n,
            trials,
            seed,
            bound,
        } => {
            let j_set = parse_indices(&j)?;
            let mut cases = Vec::new();
            match input.as_deref() {
                Some(path) => {
                    let config = read_json::<ConfigDto>(path)?.to_config()?;
                    let trivial = kernel_check(&j_set, &config)?;
                    cases.push(json!({
                        "trivial": trivial,
                        "points": ConfigDto::from_config(&config).points,
                    }));
                }
                None => {
                    let Some(n) = n else {
                        return Err(Error::Parse("need --input or --n".into()));
                    };
                    let base = seed.unwrap_or(0);
                    for t in 0..trials.unwrap_or(20) as u64 {
                        let config =
                            generate_config(n, n + 3, base.wrapping_add(t), bound.unwrap_or(10))?;
                        let trivial = kernel_check(&j_set, &config)?;
                        cases.push(json!({
                            "seed": base.wrapping_add(t),
                            "trivial": trivial,
                            "points": ConfigDto::from_config(&config).points,
                        }));
                    }
                }
            }
            let all_trivial = cases.iter().all(|c| c["trivial"] == json!(true));
            emit(
                &to_json(&json!({"J": j_set, "trivial": all_trivial, "cases": cases}))?,
                output.as_deref(),
            )?;
        }
        Command::Quadrics {
            input,
            output,
            n,
            seed,
            bound,
        } => {
            let points: Vec<ProjectivePoint> = match input.as_deref() {
                Some(path) => read_json::<ConfigDto>(path)?.to_config()?.points().to_vec(),
                None => {
                    let Some(n) = n else {
                        return Err(Error::Parse("need --input or --n".into()));
                    };
                    let mut g = ConfigGenerator::new(seed.unwrap_or(0), bound.unwrap_or(9));
                    g.config(1, n + 3)?.points().to_vec()
                }
            };
            let model = build_model(&points)?;
            emit(&to_json(&ModelDto::from_model(&model)?)?, output.as_deref())?;
        }
        Command::QuadricsCheck { input, output } => {
            let query: ModelQuery = read_json(&input)?;
            let model = query.model.to_model()?;
            let point = decode_point(&query.point)?;
            let member = membership(&model, &point)?;
            let mut body = json!({"member": member});
            if member {
                let orbit = sign_orbit(&model, &point)?;
                let detail = json!({
                    "orbit": orbit.len(),
                    "cover": encode_point(&cover_image(&model, &point)?),
                    "smooth": is_smooth_at(&model, &point)?,
                });
                body.as_object_mut()
                    .expect("object literal")
                    .extend(detail.as_object().cloned().expect("object literal"));
            }
            emit(&to_json(&body)?, output.as_deref())?;
        }
        Command::Suite {
            name,
            seed,
            trials,
            n,
            bound,
            output,
        } => {
            let rc = RunConfig {
                seed: seed.unwrap_or(0),
                trials,
                bound,
                n,
            };
            let reports = if name == "all" {
                run_all(&rc)
            } else {
                vec![run_suite(&name, &rc)?]
            };
            emit(&to_json(&reports)?, output.as_deref())?;
            for r in &reports {
                eprintln!(
                    "suite {} ({}): {}",
                    r.number,
                    r.suite,
                    if r.pass { "pass" } else { "FAIL" }
                );
            }
            if let Some(failed) = reports.iter().find(|r| !r.pass) {
                return Ok(ExitCode::from(failed.number as u8));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn weyl_matrix_strings(w: &WeylElement) -> Vec<Vec<String>> {
    let size = w.m + 1;
    (0..size)
        .map(|i| (0..size).map(|j| w.entry(i, j).to_string()).collect())
        .collect()
}

fn class_strings(c: &DivisorClass) -> Vec<String> {
    c.coeffs().iter().map(|v| v.to_string()).collect()
}
