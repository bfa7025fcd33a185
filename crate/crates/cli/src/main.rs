use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sqdisc::{analyze, parse_curve_file, run_scan, verify_suite, Analysis, Suite};
use sqdisc_core::families::{d_search, e3, e_alt, e_n, e_sq3, simplest_cubic};
use sqdisc_core::fermat::{decompose, enumerate_solutions, param_forward};
use sqdisc_core::torsion::torsion_bound;
use sqdisc_core::{Error, FermatParams, FermatSolution, Int, LongModel, Rat, ShortModel, Sq3Variant};

#[derive(Parser)]
#[command(name = "sqdisc", version, about = "Torsion, square discriminants and mod-2 images of rational elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CurveArgs {
    /// Short model `Y^2 = X^3 + AX + B`, given as `A,B`
    #[arg(long, value_name = "A,B", allow_hyphen_values = true, conflicts_with = "long")]
    short: Option<String>,
    /// Long model, given as `a1,a2,a3,a4,a6`
    #[arg(long, value_name = "a1,a2,a3,a4,a6", allow_hyphen_values = true)]
    long: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    E3,
    E5,
    E7,
    E9,
    E1,
    E2,
    Ealt,
    Simplest,
}

#[derive(Clone, Copy, ValueEnum)]
enum FermatOp {
    Solve,
    Param,
    Decompose,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table,
    Families,
    Fermat,
    Quotient,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant squareness, 2-torsion and mod-2 image
    Classify(CurveArgs),
    /// Rational torsion subgroup with generators
    Torsion(CurveArgs),
    /// Build and classify a member of a parametric family
    Family {
        kind: Family,
        /// `alpha` (integer for e3, rational for e5/e7/e9)
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// `beta` for e3
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// `a,b,c,d` for e1, e2 and ealt
        #[arg(long, value_name = "a,b,c,d", allow_hyphen_values = true)]
        params: Option<String>,
        /// `m` for the simplest cubic
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Solutions of x^2 + 3y^2 = 4z^3
    Fermat {
        op: FermatOp,
        #[arg(long, default_value_t = 10)]
        max_z: u64,
        /// `a,b,c,d` for `param`
        #[arg(long, value_name = "a,b,c,d", allow_hyphen_values = true)]
        params: Option<String>,
        /// `x,y,z` for `decompose`
        #[arg(long, value_name = "x,y,z", allow_hyphen_values = true)]
        xyz: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Rational points of bounded height on z^2 = f_n(alpha)
    Dsearch {
        #[arg(long, value_parser = ["5", "7", "9"])]
        n: String,
        #[arg(long, default_value_t = 100)]
        height: u64,
        #[arg(long)]
        json: bool,
    },
    /// Tally torsion and squareness over a curve file
    Scan {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run self-checks
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

/// Exit status and message for a failed command.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Singular(_) | Error::NotOnCurve | Error::NotOnSurface | Error::NotSquare | Error::Zero(_) => 2,
            Error::OutOfRange(_) => 1,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn ints(s: &str, n: usize, what: &str) -> Result<Vec<Int>, Failure> {
    let v: Vec<Int> = s
        .split(',')
        .map(|t| t.trim().parse::<Int>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage(format!("{what}: expected {n} comma-separated integers")))?;
    if v.len() != n {
        return Err(Failure::usage(format!("{what}: expected {n} comma-separated integers")));
    }
    Ok(v)
}

fn params(s: Option<&String>) -> Result<FermatParams, Failure> {
    let s = s.ok_or_else(|| Failure::usage("missing --params a,b,c,d"))?;
    let v = ints(s, 4, "--params")?;
    Ok(FermatParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
}

fn curve(args: &CurveArgs) -> Result<LongModel, Failure> {
    match (&args.short, &args.long) {
        (Some(s), None) => {
            let v = ints(s, 2, "--short")?;
            Ok(ShortModel::new(v[0].clone(), v[1].clone())?.to_long())
        }
        (None, Some(l)) => {
            let v = ints(l, 5, "--long")?;
            let [a1, a2, a3, a4, a6]: [Rat; 5] =
                std::array::from_fn(|i| Rat::from_integer(v[i].clone()));
            Ok(LongModel::new(a1, a2, a3, a4, a6)?)
        }
        _ => Err(Failure::usage("give exactly one of --short A,B or --long a1,a2,a3,a4,a6")),
    }
}

fn print_analysis(a: &Analysis, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&a.report()).expect("serializable"));
    } else {
        print!("{}", a.text());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(args) => print_analysis(&analyze(&curve(&args)?)?, args.json),
        Command::Torsion(args) => {
            let a = analyze(&curve(&args)?)?;
            if args.json {
                print_analysis(&a, true);
            } else {
                println!("{}", a.torsion);
                for p in &a.witnesses {
                    println!("generator {p}");
                }
                println!("bound {}", torsion_bound(&a.short));
            }
        }
        Command::Family { kind, alpha, beta, params: p, m, json } => {
            let need = |v: &Option<String>, name: &str| {
                v.clone().ok_or_else(|| Failure::usage(format!("missing --{name}")))
            };
            let int = |s: String, name: &str| {
                s.parse::<Int>().map_err(|_| Failure::usage(format!("--{name}: not an integer")))
            };
            let e = match kind {
                Family::E3 => e3(&int(need(&alpha, "alpha")?, "alpha")?, &int(need(&beta, "beta")?, "beta")?)?,
                Family::E5 | Family::E7 | Family::E9 => {
                    let n = match kind {
                        Family::E5 => 5,
                        Family::E7 => 7,
                        _ => 9,
                    };
                    let a: Rat = need(&alpha, "alpha")?
                        .parse()
                        .map_err(|_| Failure::usage("--alpha: not a rational"))?;
                    e_n(n, &a)?
                }
                Family::E1 => e_sq3(Sq3Variant::First, &params(p.as_ref())?)?,
                Family::E2 => e_sq3(Sq3Variant::Second, &params(p.as_ref())?)?,
                Family::Ealt => e_alt(&params(p.as_ref())?)?,
                Family::Simplest => simplest_cubic(&int(need(&m, "m")?, "m")?)?,
            };
            print_analysis(&analyze(&e.to_long())?, json);
        }
        Command::Fermat { op, max_z, params: p, xyz, json } => {
            let show = |s: &FermatSolution| [s.x().to_string(), s.y().to_string(), s.z().to_string()];
            match op {
                FermatOp::Solve => {
                    let sols = enumerate_solutions(max_z);
                    if json {
                        let v: Vec<[String; 3]> = sols.iter().map(show).collect();
                        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                    } else {
                        for s in &sols {
                            println!("{}", show(s).join(" "));
                        }
                    }
                }
                FermatOp::Param => {
                    let s = param_forward(&params(p.as_ref())?);
                    if json {
                        println!("{}", serde_json::to_string(&show(&s)).expect("serializable"));
                    } else {
                        println!("{}", show(&s).join(" "));
                    }
                }
                FermatOp::Decompose => {
                    let xyz = xyz.ok_or_else(|| Failure::usage("missing --xyz x,y,z"))?;
                    let v = ints(&xyz, 3, "--xyz")?;
                    let s = FermatSolution::new(v[0].clone(), v[1].clone(), v[2].clone())?;
                    let q = decompose(&s)?;
                    let out = [q.a.to_string(), q.b.to_string(), q.c.to_string(), q.d.to_string()];
                    if json {
                        println!("{}", serde_json::to_string(&out).expect("serializable"));
                    } else {
                        println!("{}", out.join(" "));
                    }
                }
            }
        }
        Command::Dsearch { n, height, json } => {
            let n: u32 = n.parse().expect("validated by clap");
            let found = d_search(n, height)?;
            if json {
                let v: Vec<[String; 2]> = found.iter().map(|(a, z)| [a.to_string(), z.to_string()]).collect();
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                for (a, z) in &found {
                    println!("alpha = {a}, z = {z}");
                }
            }
        }
        Command::Scan { input, json } => {
            let parsed = parse_curve_file(&input).map_err(|e| Failure { code: 2, message: e.to_string() })?;
            let report = run_scan(&parsed.records, parsed.diagnostics)
                .map_err(|e| Failure { code: 2, message: e.to_string() })?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.text());
            }
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Table => Suite::Table,
                SuiteArg::Families => Suite::Families,
                SuiteArg::Fermat => Suite::Fermat,
                SuiteArg::Quotient => Suite::Quotient,
                SuiteArg::All => Suite::All,
            };
            let report = verify_suite(suite);
            for c in &report.checks {
                println!("{c}");
            }
            if !report.passed() {
                let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                return Err(Failure { code: 3, message: format!("failed: {}", names.join("; ")) });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
