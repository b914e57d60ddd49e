//! Command-line surface over the library: classify, pull back, twist, check,
//! and run the full catalog reproduction.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ellfib::catalog::{parse_map_file, parse_surface_file, Catalog};
use ellfib::covers::{
    hurwitz_feasible, pullback, ramification_profile, transfer_star, ProjPoint, RationalMap,
};
use ellfib::error::{Error, Result};
use ellfib::exactalg::{parse_field_elem, parse_homog, Field, FieldElem};
use ellfib::fibers::{classify_fibers, configuration};
use ellfib::weier::WeierstrassModel;

#[derive(Parser)]
#[command(
    name = "ellfib",
    about = "Exact elliptic fibrations over Q(t): Kodaira fibers, base change, and the extremal K3 catalog",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the singular fibers of a surface file.
    Classify(ClassifyArgs),
    /// Pull a surface back along a base change and write the result.
    Pullback(PullbackArgs),
    /// Quadratic twist of a surface by a squarefree polynomial.
    Twist(TwistArgs),
    /// Move the * from one fiber to another.
    TransferStar(TransferArgs),
    /// Hurwitz-formula feasibility of a ramification datum.
    Hurwitz(HurwitzArgs),
    /// Ramification profile of a map over a point.
    Ramify(RamifyArgs),
    /// Recompute and check the embedded catalog.
    VerifyCatalog(VerifyArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Surface file (.surf).
    surface: PathBuf,
    /// Emit the cluster table as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PullbackArgs {
    surface: PathBuf,
    /// Map file (.map).
    map: PathBuf,
    /// Twist the pullback by this polynomial.
    #[arg(long, conflicts_with = "deflate_all")]
    twist: Option<String>,
    /// Twist away every starred fiber of the pullback.
    #[arg(long)]
    deflate_all: bool,
    /// Write the resulting surface file here (default: stdout).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TwistArgs {
    surface: PathBuf,
    /// Squarefree twist polynomial.
    alpha: String,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransferArgs {
    surface: PathBuf,
    /// Place carrying the * (a squarefree polynomial in s, t).
    from: String,
    /// Place receiving the *.
    to: String,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HurwitzArgs {
    /// Degree of the cover.
    #[arg(long)]
    degree: u32,
    /// Ramification profile over one point, e.g. "3,1" (repeatable).
    #[arg(long = "profile")]
    profiles: Vec<String>,
    /// Total preimage count over the remaining cusps (of three).
    #[arg(long)]
    profile_preimages: Option<u32>,
}

#[derive(Args)]
struct RamifyArgs {
    map: PathBuf,
    /// Point of P^1: `0`, `1`, `inf`, a rational `p/q`, or `a:b`.
    #[arg(long)]
    at: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Only entries whose id starts with this prefix.
    #[arg(long)]
    only: Option<String>,
    /// Line-delimited JSON records instead of the table.
    #[arg(long)]
    json: bool,
    /// Run entries on a single thread.
    #[arg(long)]
    serial: bool,
    /// Extra catalog directory (also read from ELLFIB_CATALOG_DIR).
    #[arg(long)]
    catalog_dir: Option<PathBuf>,
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

fn load_surface(path: &PathBuf) -> Result<WeierstrassModel> {
    let text = std::fs::read_to_string(path)?;
    let sf = parse_surface_file(&text)?;
    let spec = sf.field.resolve()?;
    WeierstrassModel::new(parse_homog(&sf.a, &spec)?, parse_homog(&sf.b, &spec)?)
}

fn load_map(path: &PathBuf) -> Result<RationalMap> {
    let text = std::fs::read_to_string(path)?;
    let mf = parse_map_file(&text)?;
    let spec = mf.field.resolve()?;
    let n = parse_homog(&mf.n, &spec)?;
    let d = parse_homog(&mf.d, &spec)?;
    if let Some(ident) = &mf.identity_check {
        let rhs = parse_homog(ident, &spec)?;
        if n.sub(&d) != rhs {
            return Err(Error::CatalogCorrupt(
                "identity_check fails: N - D does not equal the stated factorization".into(),
            ));
        }
    }
    let map = RationalMap::new(n, d)?;
    if map.degree() != mf.degree {
        return Err(Error::DegreeMismatch {
            expected: mf.degree as usize,
            found: map.degree() as usize,
        });
    }
    Ok(map)
}

fn parse_point(text: &str, spec: &Field) -> Result<ProjPoint> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "oo" {
        return Ok(ProjPoint::infinity(spec));
    }
    if let Some((a, b)) = t.split_once(':') {
        return ProjPoint::new(parse_field_elem(a, spec)?, parse_field_elem(b, spec)?);
    }
    ProjPoint::new(parse_field_elem(t, spec)?, FieldElem::one(spec))
}

fn classify_text(m: &WeierstrassModel) -> Result<String> {
    let clusters = classify_fibers(m)?;
    let config = configuration(m)?;
    let euler = m.euler_number()?;
    let verdict = match euler {
        12 => "rational",
        24 => "K3",
        _ => "elliptic surface",
    };
    let mut out = format!("{config} e={euler} {verdict}\n");
    out.push_str("place                          count  type  vA   vB   vDelta\n");
    for c in &clusters {
        out.push_str(&format!(
            "{:<30} {:<6} {:<5} {:<4} {:<4} {}\n",
            c.place.to_string(),
            c.places_count,
            c.ktype.to_string(),
            c.v_a.to_string(),
            c.v_b.to_string(),
            c.v_delta
        ));
    }
    Ok(out)
}

fn classify_json(m: &WeierstrassModel) -> Result<String> {
    let clusters = classify_fibers(m)?;
    let config = configuration(m)?;
    let v = serde_json::json!({
        "configuration": config.to_string(),
        "euler": m.euler_number()?,
        "weight": m.weight(),
        "clusters": clusters.iter().map(|c| serde_json::json!({
            "place": c.place.to_string(),
            "count": c.places_count,
            "type": c.ktype.to_string(),
            "vA": c.v_a.to_string(),
            "vB": c.v_b.to_string(),
            "vDelta": c.v_delta,
        })).collect::<Vec<_>>(),
    });
    Ok(format!("{v}\n"))
}

fn emit_surface(m: &WeierstrassModel, out: &Option<PathBuf>) -> Result<()> {
    let text = ellfib::catalog::render_surface_file(m)?;
    let config = configuration(&m.minimalize()?.0)?;
    match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            println!("wrote {}", path.display());
            println!("{config}");
        }
        None => {
            print!("{text}");
            println!("# configuration = {config}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify(args) => {
            let m = load_surface(&args.surface)?;
            if args.json {
                print!("{}", classify_json(&m)?);
            } else {
                print!("{}", classify_text(&m)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pullback(args) => {
            let m = load_surface(&args.surface)?;
            let map = load_map(&args.map)?;
            if m.spec() != map.spec() {
                return Err(Error::FieldMismatch);
            }
            let mut pulled = pullback(&m, &map)?;
            if args.deflate_all {
                let spec = pulled.spec().clone();
                let mut alpha = ellfib::exactalg::HomogPoly::one(&spec);
                for c in classify_fibers(&pulled)? {
                    if c.ktype.is_starred() {
                        alpha = alpha.mul(&c.place);
                    }
                }
                if !alpha.is_constant() {
                    pulled = pulled.quadratic_twist(&alpha)?;
                }
            } else if let Some(expr) = &args.twist {
                let alpha = parse_homog(expr, pulled.spec())?;
                pulled = pulled.quadratic_twist(&alpha)?;
            }
            emit_surface(&pulled, &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Twist(args) => {
            let m = load_surface(&args.surface)?;
            let alpha = parse_homog(&args.alpha, m.spec())?;
            let twisted = m.quadratic_twist(&alpha)?;
            emit_surface(&twisted, &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::TransferStar(args) => {
            let m = load_surface(&args.surface)?;
            let from = parse_homog(&args.from, m.spec())?;
            let to = parse_homog(&args.to, m.spec())?;
            let moved = transfer_star(&m, &from, &to)?;
            emit_surface(&moved, &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Hurwitz(args) => {
            let d = args.degree;
            let mut profiles: Vec<Vec<u32>> = Vec::new();
            for p in &args.profiles {
                let indices: Vec<u32> = p
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad index `{x}`")))
                    })
                    .collect::<Result<_>>()?;
                let total: u32 = indices.iter().sum();
                if total != d {
                    return Err(Error::Parse(format!(
                        "profile {p} sums to {total}, not the degree {d}"
                    )));
                }
                profiles.push(indices);
            }
            // total ramification sum(d - #preimages), with the shorthand for
            // the remaining cusps of a three-cusp datum
            let mut total: i64 = profiles.iter().map(|p| d as i64 - p.len() as i64).sum();
            let mut feasible = hurwitz_feasible(d, &profiles);
            if let Some(n) = args.profile_preimages {
                let remaining = 3_i64.saturating_sub(profiles.len() as i64);
                total += remaining * d as i64 - n as i64;
                feasible = total <= 2 * d as i64 - 2;
            }
            if feasible {
                println!("feasible ({total} <= {})", 2 * d - 2);
            } else {
                println!("infeasible ({total} > {})", 2 * d - 2);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ramify(args) => {
            let map = load_map(&args.map)?;
            let point = parse_point(&args.at, map.spec())?;
            let prof = ramification_profile(&map, &point)?;
            let indices: Vec<String> = prof.indices.iter().map(|i| i.to_string()).collect();
            println!("({})", indices.join(","));
            for (place, mult) in &prof.clusters {
                println!("index {mult} at {place}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCatalog(args) => {
            let mut cat = Catalog::load_builtin()?;
            let dir = args
                .catalog_dir
                .or_else(|| std::env::var_os("ELLFIB_CATALOG_DIR").map(PathBuf::from));
            if let Some(dir) = dir {
                if dir.is_dir() {
                    let loaded = cat.load_extension_dir(&dir)?;
                    if !args.json {
                        for l in &loaded {
                            println!("loaded {l}");
                        }
                    }
                }
            }
            let report = cat.verify_filtered(args.only.as_deref(), !args.serial);
            if args.json {
                print!("{}", report.render_jsonl());
            } else {
                print!("{}", report.render_table());
            }
            if report.has_failures() {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
