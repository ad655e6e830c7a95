use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ringlink::emit::{emit_blocks, emit_dot};
use ringlink::enumerate::{build_catalog, parse_catalog, CatalogSet, ClassCatalog};
use ringlink::entclass::classify;
use ringlink::linkpoly::{ClassLabel, LinkPolynomial};
use ringlink::netplan::{plan, recipe_for, NetworkSpec};
use ringlink::qla::{parse_matrix_file, write_matrix_file, Tolerances};
use ringlink::synth::{realize, DEFAULT_BUDGET};
use ringlink::Error;

const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_NOT_FOUND: u8 = 4;
const EXIT_USAGE: u8 = 64;

/// Link-polynomial classes and the entanglement of multi-qubit states.
#[derive(Parser, Debug)]
#[command(name = "ringlink", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Eigenvalues below minus this value count as negative.
    #[arg(long, global = true, value_name = "EPS", value_parser = positive)]
    eps_neg: Option<f64>,
    /// Purity threshold slack for certifying product eigenvectors.
    #[arg(long, global = true, value_name = "EPS", value_parser = positive)]
    eps_pure: Option<f64>,
    /// Eigenvalues within this value of zero are treated as zero.
    #[arg(long, global = true, value_name = "EPS", value_parser = positive)]
    eps_psd: Option<f64>,
    /// Directory holding catalogs for five or more rings.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the link classes on N rings.
    Enumerate {
        rings: usize,
        /// Write the catalog to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify a density matrix file.
    Classify {
        matrix: PathBuf,
        /// Skip the Hermiticity, trace and positivity checks on input.
        #[arg(long)]
        raw: bool,
    },
    /// Produce a state recipe for a polynomial or class label.
    Synthesize {
        class: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the recipe text to this file.
        #[arg(long)]
        recipe_out: Option<PathBuf>,
        /// Write the realized density matrix to this file.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
    },
    /// Plan a shared state for a network spec file.
    Plan {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the realized density matrix to this file.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
    },
    /// Render the 1-cut diagram of a class as DOT.
    Diagram {
        class: String,
        /// Print building blocks instead of DOT.
        #[arg(long)]
        blocks: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Remove redundant monomials.
    Reduce { polynomial: String },
    /// Check whether two polynomials are the same class.
    Equiv { left: String, right: String },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("must be a positive number".into()),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(
                Error::SynthesisNotFound(_)
                | Error::NoCatalogEntry(_)
                | Error::CatalogMissing(_),
            ) => EXIT_NOT_FOUND,
            _ => EXIT_INVALID,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_owned(), e))
}

struct Context {
    tol: Tolerances,
    cache_dir: Option<PathBuf>,
    catalogs: CatalogSet,
}

impl Context {
    fn new(opts: GlobalOpts) -> Self {
        let mut tol = Tolerances::default();
        if let Some(x) = opts.eps_neg {
            tol.neg = x;
        }
        if let Some(x) = opts.eps_pure {
            tol.pure = x;
        }
        if let Some(x) = opts.eps_psd {
            tol.psd = x;
        }
        Context {
            tol,
            cache_dir: opts.cache_dir,
            catalogs: CatalogSet::embedded(),
        }
    }

    /// Makes catalogs available up to `rings`, loading from or writing to
    /// the cache directory when one is given.
    fn ensure(&mut self, rings: usize) -> Result<&ClassCatalog, Failure> {
        if rings < 2 {
            return Err(Error::RingCountUnsupported(rings).into());
        }
        for n in self.catalogs.max_rings() + 1..=rings {
            let cached = self.cache_dir.as_ref().map(|d| d.join(format!("catalog-{n}.tsv")));
            let catalog = match &cached {
                Some(path) if path.exists() => ClassCatalog::from_file(parse_catalog(&read(path)?)?, &self.catalogs)?,
                _ => {
                    let built = build_catalog(n, &self.catalogs)?;
                    if let Some(path) = &cached {
                        if let Some(dir) = path.parent() {
                            fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_owned(), e))?;
                        }
                        write(path, &built.to_tsv())?;
                    }
                    built
                }
            };
            self.catalogs.insert(n, catalog);
        }
        Ok(self.catalogs.get(rings)?)
    }

    /// Accepts either a class label such as `4^20` or a polynomial.
    fn resolve(&mut self, class: &str) -> Result<(ClassLabel, LinkPolynomial), Failure> {
        if class.contains('^') {
            let label: ClassLabel = class.parse()?;
            let entry = self
                .ensure(label.rings as usize)?
                .entry(label)
                .ok_or(Error::NoCatalogEntry(label))?;
            Ok((label, entry.polynomial.clone()))
        } else {
            let poly = LinkPolynomial::parse(class)?.reduce();
            let label = self.ensure(poly.rings())?.lookup(&poly)?;
            Ok((label, poly))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let mut ctx = Context::new(cli.global);
    let mut out = String::new();
    let code = match cli.command {
        Command::Enumerate { rings, output } => {
            let catalog = ctx.ensure(rings)?;
            if let Some(path) = output {
                write(&path, &catalog.to_tsv())?;
            }
            out = format!("{}\n", catalog.len());
            0
        }
        Command::Classify { matrix, raw } => {
            let rho = parse_matrix_file(&read(&matrix)?, raw, &ctx.tol)?;
            let tol = ctx.tol;
            let catalog = ctx.ensure(rho.shape().len())?;
            let report = classify(&rho, catalog, &tol)?;
            out = report.to_string();
            if report.is_inconclusive() {
                EXIT_INCONCLUSIVE
            } else {
                0
            }
        }
        Command::Synthesize {
            class,
            budget,
            recipe_out,
            matrix_out,
        } => {
            let (label, poly) = ctx.resolve(&class)?;
            let tol = ctx.tol;
            let catalog = ctx.ensure(poly.rings())?;
            let (recipe, source, _) = recipe_for(&poly, catalog, budget, &tol)?;
            if let Some(path) = recipe_out {
                write(&path, &recipe.to_string())?;
            }
            if let Some(path) = matrix_out {
                write(&path, &write_matrix_file(realize(&recipe)?.operator()))?;
            }
            out = format!("polynomial={poly}\nclass={label}\nrecipe source={source}\n{recipe}");
            0
        }
        Command::Plan {
            spec,
            budget,
            matrix_out,
        } => {
            let spec = NetworkSpec::parse_json(&read(&spec)?)?;
            ctx.ensure(spec.parties.len())?;
            let plan = plan(&spec, &ctx.catalogs, budget, &ctx.tol)?;
            if let Some(path) = matrix_out {
                write(&path, &write_matrix_file(realize(&plan.recipe)?.operator()))?;
            }
            out = plan.to_string();
            0
        }
        Command::Diagram {
            class,
            blocks,
            output,
        } => {
            let (label, poly) = ctx.resolve(&class)?;
            let text = if blocks {
                emit_blocks(&poly)
            } else {
                ctx.ensure(poly.rings())?;
                emit_dot(&label.to_string(), &ctx.catalogs.cut_diagram(&poly)?)
            };
            match output {
                Some(path) => write(&path, &text)?,
                None => out = text,
            }
            0
        }
        Command::Reduce { polynomial } => {
            out = format!("{}\n", LinkPolynomial::parse(&polynomial)?.reduce());
            0
        }
        Command::Equiv { left, right } => {
            let same = LinkPolynomial::parse(&left)?.equivalent(&LinkPolynomial::parse(&right)?)?;
            out = format!("{}\n", if same { "equivalent" } else { "distinct" });
            0
        }
    };
    print!("{out}");
    let _ = std::io::stdout().flush();
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
