//! Command-line front end. All array I/O uses the interchange format;
//! Hadamard matrices can also be emitted as '+'/'-' rows via
//! `--format pm`. Exit codes: 0 success, 1 checked-and-false, 2 usage or
//! format error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use oars::codes::LinearCode;
use oars::construct::{
    ds_expand, gf_difference_scheme, hadamard_to_oa, he_expand, kronecker_oa, mols_to_oa, paley1,
    paley2, rao_hamming, sylvester, verify_difference_scheme, verify_mols, HadamardMatrix,
    IncidenceMatrix, LatinSquareSet,
};
use oars::galois::GaloisField;
use oars::integrate::{
    additive_f, additive_interaction_f, draw_points, interaction_f, variance_study, CellPlacement,
    Method, SamplePlan,
};
use oars::metrics::SignedTwoLevelView;
use oars::spacefill::{
    verify_grouped, verify_nested, verify_sliced, verify_strong, verify_strong_2plus, GroupSpec,
    SlicePartition,
};
use oars::{Error, LevelCollapseMap, OrthogonalArray};

#[derive(Parser)]
#[command(
    name = "oars",
    about = "Orthogonal array construction, verification, and measurement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate arrays and matrices
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Check structural properties; prints true/false
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Two-level quality metrics
    #[command(subcommand)]
    Metrics(MetricsCmd),
    /// Run-size lower bounds for OA(N, s^k, t)
    Bound { k: usize, s: usize, t: usize },
    /// Draw a point set in [0,1)^k
    Sample(SampleArgs),
    /// Replicated variance comparison of sampling methods
    Study(StudyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum HadamardFormat {
    Oa,
    Pm,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// OA(s^n, s^((s^n-1)/(s-1)), 2)
    RaoHamming {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    /// Hadamard matrix of order 2^m
    Sylvester {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "oa")]
        format: HadamardFormat,
    },
    /// Hadamard matrix of order q+1, q = 3 mod 4
    Paley1 {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "oa")]
        format: HadamardFormat,
    },
    /// Hadamard matrix of order 2q+2, q = 1 mod 4
    Paley2 {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "oa")]
        format: HadamardFormat,
    },
    /// Expand the GF(s) difference scheme D(s,s,s) to OA(s^2, s^(s+1), 2)
    DsExpand {
        #[arg(long)]
        s: usize,
        /// omit the extra group-cycling column
        #[arg(long)]
        no_extra_column: bool,
    },
    /// Kronecker composition of the array on stdin with D(s,s,s)
    Kronecker {
        #[arg(long)]
        s: usize,
    },
    /// Recursive expansion of A (--a) and B (--b), interchange files
    He {
        #[arg(long)]
        a: std::path::PathBuf,
        #[arg(long)]
        b: std::path::PathBuf,
    },
    /// OA from Latin squares on stdin (first line `s k`, then k squares)
    MolsToOa,
    /// OA from a generator matrix on stdin (dim lines of length entries)
    CodeToOa {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Strength t of the array on stdin
    Strength {
        #[arg(long)]
        t: usize,
    },
    /// '+'/'-' matrix on stdin
    Hadamard,
    /// Difference scheme on stdin (first line `r c`, then rows)
    Ds {
        #[arg(long)]
        s: usize,
    },
    /// Latin squares on stdin (first line `s k`, then k squares)
    Mols,
    /// Incidence matrix on stdin (first line `v b`, then 0/1 rows)
    Bibd,
    /// Sliced array: stdin array, consecutive or explicit slices
    Sliced {
        /// blocks as `0,1,2,3|4,5,6,7`
        #[arg(long)]
        slices: String,
        #[arg(long)]
        s0: usize,
        #[arg(long)]
        balanced: bool,
    },
    /// Nested array: stdin array with a row subset
    Nested {
        /// subarray rows as `0,1,2,3`
        #[arg(long)]
        rows: String,
        #[arg(long)]
        s0: usize,
    },
    /// Strong array of strength t with s^t-level columns
    Strong {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Strong array of strength 2+ with s^2-level columns
    Strong2plus {
        #[arg(long)]
        s: usize,
    },
    /// Grouped array: stdin array with grouped column strengths
    Grouped {
        /// groups as `0,1,2,3:3|4,5,6:3`
        #[arg(long)]
        groups: String,
        /// overall strength
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum MetricsCmd {
    /// J-characteristic of a column subset
    J {
        /// zero-based columns as `0,1,2`
        #[arg(long)]
        cols: String,
    },
    /// Generalized resolution, printed as an exact rational
    Gr,
    /// Regularity test; prints true/false
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Random,
    Lhs,
    OaLhs,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlacementArg {
    UniformJitter,
    Midpoint,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value = "uniform-jitter")]
    placement: PlacementArg,
    /// source array file, required for oa-lhs
    #[arg(long)]
    oa: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct StudyArgs {
    /// source array file (also fixes N and k)
    #[arg(long)]
    oa: std::path::PathBuf,
    #[arg(long, default_value_t = 2000)]
    replicates: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = "additive")]
    function: String,
}

fn read_stdin() -> Result<String, Error> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::Format {
            line: 0,
            msg: e.to_string(),
        })?;
    Ok(buf)
}

fn read_array(path: &std::path::Path) -> Result<OrthogonalArray, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    OrthogonalArray::parse(&text)
}

/// `v b` header then v rows of b integers.
fn parse_int_matrix(text: &str) -> Result<(usize, usize, Vec<u16>), Error> {
    let mut lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = lines.next().ok_or(Error::Format {
        line: 0,
        msg: "empty input".into(),
    })?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|w| {
            w.parse().map_err(|_| Error::Format {
                line: 1,
                msg: format!("bad header `{w}`"),
            })
        })
        .collect::<Result<_, _>>()?;
    if dims.len() != 2 {
        return Err(Error::Format {
            line: 1,
            msg: "expected `rows cols` header".into(),
        });
    }
    let (rows, cols) = (dims[0], dims[1]);
    let mut cells = Vec::with_capacity(rows * cols);
    for (i, line) in lines.enumerate() {
        for w in line.split_whitespace() {
            cells.push(w.parse::<u16>().map_err(|_| Error::Format {
                line: i + 2,
                msg: format!("bad cell `{w}`"),
            })?);
        }
    }
    if cells.len() != rows * cols {
        return Err(Error::Format {
            line: 0,
            msg: format!("expected {} cells, found {}", rows * cols, cells.len()),
        });
    }
    Ok((rows, cols, cells))
}

/// `s k` header then k squares of s rows each.
fn parse_squares(text: &str) -> Result<LatinSquareSet, Error> {
    let mut lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = lines.next().ok_or(Error::Format {
        line: 0,
        msg: "empty input".into(),
    })?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|w| {
            w.parse().map_err(|_| Error::Format {
                line: 1,
                msg: format!("bad header `{w}`"),
            })
        })
        .collect::<Result<_, _>>()?;
    if dims.len() != 2 {
        return Err(Error::Format {
            line: 1,
            msg: "expected `s k` header".into(),
        });
    }
    let (s, k) = (dims[0], dims[1]);
    let mut values = Vec::new();
    for line in lines {
        for w in line.split_whitespace() {
            values.push(w.parse::<u16>().map_err(|_| Error::Format {
                line: 0,
                msg: format!("bad cell `{w}`"),
            })?);
        }
    }
    if values.len() != k * s * s {
        return Err(Error::Format {
            line: 0,
            msg: format!("expected {} cells for {k} squares of order {s}", k * s * s),
        });
    }
    let squares = values.chunks(s * s).map(|c| c.to_vec()).collect();
    LatinSquareSet::new(s, squares)
}

fn parse_index_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|w| {
            w.trim().parse().map_err(|_| Error::Format {
                line: 0,
                msg: format!("bad index `{w}`"),
            })
        })
        .collect()
}

fn half_collapse_maps(a: &OrthogonalArray, s0: usize) -> Result<Vec<LevelCollapseMap>, Error> {
    a.levels()
        .iter()
        .map(|&s| {
            if s % s0 != 0 {
                return Err(Error::BadCollapseMap(format!(
                    "{s0} target levels do not divide {s}"
                )));
            }
            LevelCollapseMap::floor_div(s, s / s0)
        })
        .collect()
}

fn print_hadamard(h: &HadamardMatrix, format: HadamardFormat) -> Result<(), Error> {
    match format {
        HadamardFormat::Pm => print!("{}", h.serialize()),
        HadamardFormat::Oa => print!("{}", hadamard_to_oa(h)?.serialize()),
    }
    Ok(())
}

/// Ok(true) prints true/exit 0, Ok(false) prints false/exit 1.
fn report(outcome: bool) -> ExitCode {
    println!("{outcome}");
    if outcome {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Construct(cmd) => {
            match cmd {
                ConstructCmd::RaoHamming { s, n } => print!("{}", rao_hamming(s, n)?.serialize()),
                ConstructCmd::Sylvester { m, format } => print_hadamard(&sylvester(m)?, format)?,
                ConstructCmd::Paley1 { q, format } => print_hadamard(&paley1(q)?, format)?,
                ConstructCmd::Paley2 { q, format } => print_hadamard(&paley2(q)?, format)?,
                ConstructCmd::DsExpand { s, no_extra_column } => {
                    let d = gf_difference_scheme(s)?;
                    print!("{}", ds_expand(&d, !no_extra_column)?.serialize());
                }
                ConstructCmd::Kronecker { s } => {
                    let b = OrthogonalArray::parse(&read_stdin()?)?;
                    let d = gf_difference_scheme(s)?;
                    print!("{}", kronecker_oa(&b, &d)?.serialize());
                }
                ConstructCmd::He { a, b } => {
                    let e = he_expand(&read_array(&a)?, &read_array(&b)?)?;
                    print!("{}", e.serialize());
                }
                ConstructCmd::MolsToOa => {
                    let set = parse_squares(&read_stdin()?)?;
                    print!("{}", mols_to_oa(&set)?.serialize());
                }
                ConstructCmd::CodeToOa { s, dim, length } => {
                    let (rows, cols, cells) =
                        parse_int_matrix(&format!("{dim} {length}\n{}", read_stdin()?))?;
                    let code = LinearCode::from_generator(GaloisField::new(s)?, rows, cols, cells)?;
                    print!("{}", code.to_oa()?.serialize());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(cmd) => {
            let outcome = match cmd {
                VerifyCmd::Strength { t } => {
                    OrthogonalArray::parse(&read_stdin()?)?.verify_strength(t)
                }
                VerifyCmd::Hadamard => HadamardMatrix::parse(&read_stdin()?).is_ok(),
                VerifyCmd::Ds { s } => {
                    let (rows, cols, cells) = parse_int_matrix(&read_stdin()?)?;
                    let field = GaloisField::new(s)?;
                    cells.iter().all(|&v| (v as usize) < s)
                        && verify_difference_scheme(rows, cols, &cells, &field)
                }
                VerifyCmd::Mols => {
                    let set = parse_squares(&read_stdin()?)?;
                    verify_mols(&set).is_ok()
                }
                VerifyCmd::Bibd => {
                    let (v, b, cells) = parse_int_matrix(&read_stdin()?)?;
                    let cells: Vec<u8> = cells.iter().map(|&c| c as u8).collect();
                    match IncidenceMatrix::new(v, b, cells) {
                        Ok(d) => {
                            let (v, b, r, k, l) = d.params();
                            println!("# BIBD({v}, {b}, {r}, {k}, {l})");
                            true
                        }
                        Err(_) => false,
                    }
                }
                VerifyCmd::Sliced {
                    slices,
                    s0,
                    balanced,
                } => {
                    let a = OrthogonalArray::parse(&read_stdin()?)?;
                    let blocks = slices
                        .split('|')
                        .map(parse_index_list)
                        .collect::<Result<Vec<_>, _>>()?;
                    let p = SlicePartition::new(a.runs(), blocks)?;
                    let maps = half_collapse_maps(&a, s0)?;
                    verify_sliced(&a, &p, &maps, s0, balanced)?
                }
                VerifyCmd::Nested { rows, s0 } => {
                    let a = OrthogonalArray::parse(&read_stdin()?)?;
                    let rows = parse_index_list(&rows)?;
                    let maps = half_collapse_maps(&a, s0)?;
                    verify_nested(&a, &rows, &maps, s0)?
                }
                VerifyCmd::Strong { s, t } => {
                    verify_strong(&OrthogonalArray::parse(&read_stdin()?)?, s, t)?
                }
                VerifyCmd::Strong2plus { s } => {
                    verify_strong_2plus(&OrthogonalArray::parse(&read_stdin()?)?, s)?
                }
                VerifyCmd::Grouped { groups, t } => {
                    let a = OrthogonalArray::parse(&read_stdin()?)?;
                    let mut cols = Vec::new();
                    let mut strengths = Vec::new();
                    for part in groups.split('|') {
                        let (idx, ti) = part.rsplit_once(':').ok_or(Error::Format {
                            line: 0,
                            msg: format!("bad group `{part}`, expected `cols:strength`"),
                        })?;
                        cols.push(parse_index_list(idx)?);
                        strengths.push(ti.trim().parse().map_err(|_| Error::Format {
                            line: 0,
                            msg: format!("bad strength `{ti}`"),
                        })?);
                    }
                    let spec = GroupSpec::new(a.cols(), cols, strengths, t)?;
                    verify_grouped(&a, &spec)?
                }
            };
            Ok(report(outcome))
        }
        Command::Metrics(cmd) => {
            let a = OrthogonalArray::parse(&read_stdin()?)?;
            let view = SignedTwoLevelView::from_oa(&a)?;
            match cmd {
                MetricsCmd::J { cols } => {
                    let cols = parse_index_list(&cols)?;
                    println!("{}", view.j_characteristic(&cols)?);
                    Ok(ExitCode::SUCCESS)
                }
                MetricsCmd::Gr => {
                    let gr = view.generalized_resolution()?;
                    println!("{}/{}", gr.numer(), gr.denom());
                    Ok(ExitCode::SUCCESS)
                }
                MetricsCmd::Regular => Ok(report(view.is_regular()?)),
            }
        }
        Command::Bound { k, s, t } => {
            let r = oars::bounds::bound_report(k, s, t)?;
            println!("rao {}", r.rao);
            println!("lp {}/{}", r.lp.numer(), r.lp.denom());
            println!("lp_ceiled {}", r.lp_ceiled);
            println!("admissible {}", r.admissible);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample(args) => {
            let method = match args.method {
                MethodArg::Random => Method::Random,
                MethodArg::Lhs => Method::Lhs,
                MethodArg::OaLhs => Method::OaLhs,
            };
            let placement = match args.placement {
                PlacementArg::UniformJitter => CellPlacement::UniformJitter,
                PlacementArg::Midpoint => CellPlacement::Midpoint,
            };
            let source = args.oa.as_deref().map(read_array).transpose()?;
            let plan = SamplePlan {
                method,
                runs: args.n,
                cols: args.k,
                source,
                seed: args.seed,
                placement,
            };
            for row in draw_points(&plan)? {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:.12}")).collect();
                println!("{}", cells.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Study(args) => {
            let a = read_array(&args.oa)?;
            let f: fn(&[f64]) -> f64 = match args.function.as_str() {
                "additive" => additive_f,
                "interaction" => interaction_f,
                "additive-interaction" => additive_interaction_f,
                other => {
                    return Err(Error::PlanInvalid(format!(
                        "unknown test function `{other}`"
                    )))
                }
            };
            let study = variance_study(f, &args.function, &a, args.replicates, args.seed)?;
            print!("{}", study.table());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
