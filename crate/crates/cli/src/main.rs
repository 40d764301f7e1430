//! The `csr` binary: validation, classification, coreflection, colimits,
//! enumeration, and the verification suites, over the line-oriented file
//! formats.

use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use csr_cli::catalog::{enumerate_semirings, up_to_order, Catalog};
use csr_cli::format::{
    load_algebra, load_diagram, load_map, render_map, render_salgebra, FileError, LoadedAlgebra,
};
use csr_cli::report::Report;
use csr_cli::suites::{
    verify_closure_suite, verify_coreflection_suite, verify_specialization_suite,
};
use csr_core::{
    coequalizer, colimit_diagram, coreflect, initial_object, pushout, tensor_coproduct,
    BaseSemiring, ColimitError, TensorError, VarietyFlag,
};

#[derive(Parser)]
#[command(
    name = "csr",
    version,
    about = "A toolkit for finite commutative semirings"
)]
struct Cli {
    /// Report rendering: aligned text or tab-separated rows.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Check a file against the commutative-semiring axioms.
    Validate { file: PathBuf },
    /// Print the named equational classes an algebra belongs to.
    Classify { file: PathBuf },
    /// The largest subalgebra satisfying 1 + 2x = 1 and x*x = x.
    Coreflect { file: PathBuf },
    /// The initial algebra of the star subvariety over a base.
    Initial {
        /// A base semiring file.
        #[arg(required_unless_present = "naturals")]
        base: Option<PathBuf>,
        /// Use the naturals as the base.
        #[arg(long, conflicts_with = "base")]
        naturals: bool,
    },
    /// The binary coproduct of two algebras over a common base.
    Coproduct { left: PathBuf, right: PathBuf },
    /// The coequalizer of two parallel maps from SOURCE to TARGET.
    Coeq {
        source: PathBuf,
        target: PathBuf,
        first_map: PathBuf,
        second_map: PathBuf,
    },
    /// Glue LEFT and RIGHT along maps out of a common APEX.
    Pushout {
        apex: PathBuf,
        left: PathBuf,
        right: PathBuf,
        left_map: PathBuf,
        right_map: PathBuf,
    },
    /// The colimit of a diagram file.
    Colimit { diagram: PathBuf },
    /// List every semiring of the given order, one per isomorphism class.
    Enumerate { order: NonZeroUsize },
    /// Run a verification suite over an enumerated catalog.
    Check {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Star subalgebra closure, idempotence, and couniversality.
    Coreflection {
        /// Largest carrier size to enumerate (default 4).
        #[arg(long)]
        max_order: Option<NonZeroUsize>,
    },
    /// Coproduct, coequalizer, and pushout closure for one named class.
    Closure {
        /// CRings2, AICSR, BRings, DLat, or CSRstar.
        flag: String,
        /// Largest carrier size to enumerate (default 3).
        #[arg(long)]
        max_order: Option<NonZeroUsize>,
    },
    /// The ring and lattice specializations of the star coreflection.
    #[command(name = "section3")]
    Specialization {
        /// Largest carrier size to enumerate (default 4).
        #[arg(long)]
        max_order: Option<NonZeroUsize>,
    },
}

/// How a command ended short of clean success: a negative verdict (exit 1)
/// or an unusable input (exit 2).
enum Failure {
    Verdict(String),
    Input(String),
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<csr_cli::catalog::OrderTooLarge> for Failure {
    fn from(e: csr_cli::catalog::OrderTooLarge) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn tensor_failure(e: TensorError) -> Failure {
    match e {
        TensorError::BaseMismatch => Failure::Input(e.to_string()),
        TensorError::BoundUnstable { .. } => Failure::Verdict(e.to_string()),
    }
}

fn colimit_failure(e: ColimitError) -> Failure {
    match e {
        ColimitError::Tensor(t) => tensor_failure(t),
        other => Failure::Input(other.to_string()),
    }
}

fn main() -> ExitCode {
    // Restore the default SIGPIPE disposition so `csr ... | head` dies
    // quietly instead of panicking when the reader closes the pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verdict(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Classify { file } => {
            let loaded = load_algebra(&file)?;
            let flags = csr_core::classify(loaded.algebra());
            println!("{}: {}", loaded.algebra().label(), flags);
            Ok(true)
        }
        Command::Coreflect { file } => {
            let a = load_algebra(&file)?.into_salgebra();
            let cor = coreflect(&a).map_err(|e| Failure::Input(e.to_string()))?;
            print!("{}", render_salgebra(&cor.object));
            println!();
            print!("{}", render_map(&cor.inclusion));
            Ok(true)
        }
        Command::Initial { base, naturals } => {
            let base = if naturals {
                BaseSemiring::Naturals
            } else {
                let path = base.expect("clap requires a base unless --naturals");
                BaseSemiring::Finite(load_algebra(&path)?.algebra().clone())
            };
            let initial = initial_object(&base);
            print!("{}", render_salgebra(&initial.object));
            Ok(true)
        }
        Command::Coproduct { left, right } => {
            let a = load_algebra(&left)?.into_salgebra();
            let b = load_algebra(&right)?.into_salgebra();
            let q = tensor_coproduct(&a, &b).map_err(tensor_failure)?;
            print!("{}", render_salgebra(&q.object));
            println!();
            print!("{}", render_map(&q.left));
            println!();
            print!("{}", render_map(&q.right));
            Ok(true)
        }
        Command::Coeq {
            source,
            target,
            first_map,
            second_map,
        } => {
            let a = load_algebra(&source)?;
            let b = load_algebra(&target)?.into_salgebra();
            let f = load_map(&first_map, a.algebra(), b.algebra())?;
            let g = load_map(&second_map, a.algebra(), b.algebra())?;
            let co = coequalizer(&b, &f, &g).map_err(colimit_failure)?;
            print!("{}", render_salgebra(&co.object));
            println!();
            print!("{}", render_map(&co.projection));
            Ok(true)
        }
        Command::Pushout {
            apex,
            left,
            right,
            left_map,
            right_map,
        } => {
            let z = load_algebra(&apex)?;
            let a = load_algebra(&left)?.into_salgebra();
            let b = load_algebra(&right)?.into_salgebra();
            let f = load_map(&left_map, z.algebra(), a.algebra())?;
            let g = load_map(&right_map, z.algebra(), b.algebra())?;
            let p = pushout(&a, &b, &f, &g).map_err(colimit_failure)?;
            print!("{}", render_salgebra(&p.object));
            println!();
            print!("{}", render_map(&p.left));
            println!();
            print!("{}", render_map(&p.right));
            Ok(true)
        }
        Command::Colimit { diagram } => {
            let d = load_diagram(&diagram)?;
            let colim = colimit_diagram(&d).map_err(colimit_failure)?;
            print!("{}", render_salgebra(&colim.object));
            for leg in &colim.legs {
                println!();
                print!("{}", render_map(leg));
            }
            Ok(true)
        }
        Command::Enumerate { order } => {
            let catalog = enumerate_semirings(order.get())?;
            print_catalog(&catalog, cli.format);
            Ok(true)
        }
        Command::Check { suite } => {
            let report = run_suite(suite)?;
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Tsv => print!("{}", report.render_tsv()),
            }
            Ok(!report.failed())
        }
    }
}

fn validate(file: &Path) -> Result<bool, Failure> {
    match load_algebra(file) {
        Ok(loaded) => {
            match &loaded {
                LoadedAlgebra::Plain(a) => {
                    println!("{}: a valid commutative semiring of order {}", a.label(), a.order());
                }
                LoadedAlgebra::Over(a) => {
                    println!(
                        "{}: a valid algebra of order {} over {}",
                        a.label(),
                        a.algebra().order(),
                        a.base().label()
                    );
                }
            }
            Ok(true)
        }
        Err(FileError::Invalid { path, detail }) => {
            println!("{path}: invalid: {detail}");
            Ok(false)
        }
        Err(other) => Err(other.into()),
    }
}

fn run_suite(suite: Suite) -> Result<Report, Failure> {
    match suite {
        Suite::Coreflection { max_order } => {
            let catalog = up_to_order(max_order.map_or(4, NonZeroUsize::get))?;
            Ok(verify_coreflection_suite(&catalog))
        }
        Suite::Closure { flag, max_order } => {
            let flag: VarietyFlag = flag.parse().map_err(
                |e: csr_core::classify::UnknownFlag| Failure::Input(e.to_string()),
            )?;
            let catalog = up_to_order(max_order.map_or(3, NonZeroUsize::get))?;
            Ok(verify_closure_suite(&catalog, flag))
        }
        Suite::Specialization { max_order } => {
            let catalog = up_to_order(max_order.map_or(4, NonZeroUsize::get))?;
            Ok(verify_specialization_suite(&catalog))
        }
    }
}

fn print_catalog(catalog: &Catalog, format: Format) {
    match format {
        Format::Text => {
            for (i, e) in catalog.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!(
                    "# {} of {}: {} [{}]",
                    i + 1,
                    catalog.len(),
                    e.algebra.label(),
                    e.flags
                );
                print!("{}", e.algebra);
            }
            if catalog.is_empty() {
                println!("# no semirings at this order");
            }
        }
        Format::Tsv => {
            let flat = |rows: Vec<Vec<usize>>| {
                rows.into_iter()
                    .flatten()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            for e in catalog.iter() {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    e.algebra.label(),
                    e.algebra.order(),
                    e.flags,
                    flat(e.algebra.add_rows()),
                    flat(e.algebra.mul_rows()),
                );
            }
        }
    }
}
