//! Command-line surface. Exit status 0 means every checked clause passed, 1 a
//! verified failure, 2 a usage, parse or precondition error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{Algebra, Flavor};
use crate::bialgebra::{Bialgebra, QuadraticAlgebra};
use crate::corpus;
use crate::double::DoubleAlgebra;
use crate::error::{Error, Result};
use crate::format::{self, Document};
use crate::report::{Clause, Report};
use crate::rota_baxter::{connes_from_zinbiel, factorizable_from_rb, rb_from_factorizable, zinbiel_from_connes, QuadraticRB};
use crate::scalar::Field;
use crate::search::{search_zybe, SearchOptions};
use crate::tensor::{BilinearForm, Tensor2};
use crate::yang_baxter::RMatrix;

#[derive(Parser, Debug)]
#[command(name = "zinbiel", version, about = "Exact checks for Zinbiel algebras, bialgebras and r-matrices")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Scalar field: Q or Fp:p. Inputs are mapped into it.
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Where to write the produced document.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Algebra,
    Tensor2,
    Form,
    Rep,
    MatchedPair,
    Bialgebra,
    RbOperator,
}

impl Kind {
    fn token(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Tensor2 => "tensor2",
            Kind::Form => "form",
            Kind::Rep => "rep",
            Kind::MatchedPair => "matched-pair",
            Kind::Bialgebra => "bialgebra",
            Kind::RbOperator => "rb-operator",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a document. Tensors and forms need `--algebra`.
    Validate {
        kind: Kind,
        file: PathBuf,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Re-serialize a document canonically, optionally into another field.
    Convert { file: PathBuf },
    /// Coboundary criterion and classification of a 2-tensor.
    ClassifyR {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        tensor: PathBuf,
    },
    /// Double of a bialgebra and its canonical r-matrix.
    BuildDouble {
        #[arg(long)]
        bialgebra: PathBuf,
        /// Where to write the canonical r-matrix.
        #[arg(long)]
        r_out: Option<PathBuf>,
    },
    /// factorizable r -> quadratic Rota-Baxter algebra -> r.
    RbRoundtrip {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        tensor: PathBuf,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// quadratic Zinbiel -> commutative with Connes cocycle -> Zinbiel, or
    /// the same with a Rota-Baxter operator when `--rb` is given.
    ConnesRoundtrip {
        #[arg(long, required_unless_present = "rb")]
        algebra: Option<PathBuf>,
        #[arg(long, required_unless_present = "rb")]
        form: Option<PathBuf>,
        /// An rb-operator document carrying `w` lines.
        #[arg(long, conflicts_with_all = ["algebra", "form"])]
        rb: Option<PathBuf>,
    },
    /// Exhaustive search for solutions of the Yang-Baxter type equation over F_p.
    SearchZybe {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        symmetric: bool,
        #[arg(long)]
        quasi_triangular: bool,
    },
    /// Verify the bundled corpus.
    CorpusCheck,
}

struct Outcome {
    report: Report,
    lines: Vec<String>,
    extra: serde_json::Value,
}

impl Outcome {
    fn new(report: Report) -> Outcome {
        Outcome {
            report,
            lines: Vec::new(),
            extra: json!({}),
        }
    }

    fn line(mut self, key: &str, value: impl ToString) -> Outcome {
        let value = value.to_string();
        self.lines.push(format!("{key}: {value}"));
        self.extra[key] = json!(value);
        self
    }

    /// A multi-line value printed verbatim.
    fn block(mut self, key: &str, text: String) -> Outcome {
        self.extra[key] = json!(text);
        self.lines.push(text.trim_end().to_string());
        self
    }
}

/// Parse `args` (including the program name), run the command and write all
/// output to `out`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    match execute(&cli) {
        Ok(o) => {
            let status = if o.report.passed { 0 } else { 1 };
            let _ = if json {
                let v = json!({ "passed": o.report.passed, "result": o.extra, "report": o.report });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
            } else {
                o.lines.iter().try_for_each(|l| writeln!(out, "{l}")).and_then(|_| write!(out, "{}", o.report))
            };
            status
        }
        Err(Error::Invalid { what, report }) => {
            let _ = if json {
                writeln!(out, "{}", json!({ "passed": false, "refused": what, "report": report }))
            } else {
                write!(out, "refused: {what} is not valid\n{report}")
            };
            1
        }
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn load(path: &Path, field: Option<Field>) -> Result<Document> {
    let doc = format::read(path).map_err(|e| match e {
        Error::Io(io) => Error::Precondition(format!("{}: {io}", path.display())),
        e => e,
    })?;
    match field {
        Some(f) => to_field(doc, f),
        None => Ok(doc),
    }
}

fn to_field(doc: Document, f: Field) -> Result<Document> {
    Ok(match doc {
        Document::Algebra(a) => Document::Algebra(a.to_field(f)?),
        Document::Tensor2 { name, tensor } => Document::Tensor2 {
            name,
            tensor: tensor.to_field(f)?,
        },
        Document::Form { name, form } => Document::Form {
            name,
            form: form.to_field(f)?,
        },
        Document::Bialgebra { name, bialgebra } => Document::Bialgebra {
            name,
            bialgebra: Bialgebra::new(bialgebra.primal().to_field(f)?, bialgebra.dual().to_field(f)?)?,
        },
        d => {
            return Err(Error::Precondition(format!(
                "field conversion is not supported for {} documents",
                d.kind()
            )))
        }
    })
}

fn expect_algebra(path: &Path, field: Option<Field>) -> Result<Algebra> {
    match load(path, field)? {
        Document::Algebra(a) => Ok(a),
        d => Err(wrong_kind(path, "algebra", &d)),
    }
}

fn expect_tensor(path: &Path, field: Option<Field>) -> Result<Tensor2> {
    match load(path, field)? {
        Document::Tensor2 { tensor, .. } => Ok(tensor),
        d => Err(wrong_kind(path, "tensor2", &d)),
    }
}

fn expect_form(path: &Path, field: Option<Field>) -> Result<BilinearForm> {
    match load(path, field)? {
        Document::Form { form, .. } => Ok(form),
        d => Err(wrong_kind(path, "form", &d)),
    }
}

fn wrong_kind(path: &Path, want: &str, found: &Document) -> Error {
    Error::Precondition(format!("{}: expected a {want} document, found {}", path.display(), found.kind()))
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let field = cli.field;
    match &cli.command {
        Command::Validate { kind, file, algebra } => validate(*kind, file, algebra.as_deref(), field),
        Command::Convert { file } => {
            let doc = load(file, field)?;
            let text = format::write(&doc);
            if cli.out.is_none() {
                return Ok(Outcome::new(Report::new(format!("convert {}", file.display()))).block("document", text));
            }
            write_out(&cli.out, &text)?;
            Ok(Outcome::new(Report::new(format!("convert {}", file.display()))).line("kind", doc.kind()))
        }
        Command::ClassifyR { algebra, tensor } => {
            let rm = RMatrix::new(expect_algebra(algebra, field)?, expect_tensor(tensor, field)?)?;
            let mut report = rm.coboundary_report();
            report.subject = format!("r-matrix on `{}`", rm.base().name());
            let label = rm.classify().map(|c| c.to_string()).unwrap_or_else(|_| "none".into());
            Ok(Outcome::new(report).line("classification", label))
        }
        Command::BuildDouble { bialgebra, r_out } => {
            let b = match load(bialgebra, field)? {
                Document::Bialgebra { bialgebra, .. } => bialgebra,
                d => return Err(wrong_kind(bialgebra, "bialgebra", &d)),
            };
            let d = DoubleAlgebra::new(&b)?;
            let mut report = d.check();
            report.absorb("", d.verify_factorizable());
            write_out(&cli.out, &format::write_algebra(d.algebra()))?;
            write_out(r_out, &format::write_tensor2(&format!("r_{}", d.algebra().name()), d.canonical_r()))?;
            let class = d.r_matrix().classify().map(|c| c.to_string()).unwrap_or_else(|_| "none".into());
            Ok(Outcome::new(report)
                .line("double", d.algebra().name())
                .line("dim", d.algebra().dim())
                .line("classification", class))
        }
        Command::RbRoundtrip { algebra, tensor, lambda } => {
            let a = expect_algebra(algebra, field)?;
            let lambda = a.field().parse_scalar(lambda)?;
            let rm = RMatrix::new(a, expect_tensor(tensor, field)?)?;
            let mut report = Report::new(format!("Rota-Baxter roundtrip on `{}`", rm.base().name()));
            report.push(Clause::fact("factorizable", rm.is_factorizable()));
            if !report.passed || lambda.is_zero() {
                report.push(Clause::fact("nonzero-weight", !lambda.is_zero()));
                return Ok(Outcome::new(report));
            }
            let q = rb_from_factorizable(&rm, &lambda)?;
            report.absorb("quadratic-rb", q.check());
            let back = factorizable_from_rb(&q)?;
            let support = (back.tensor() - rm.tensor()).support();
            report.push(Clause::fact("roundtrip", support == 0));
            Ok(Outcome::new(report)
                .line("weight", &lambda)
                .line("operator", q.operator().to_row_text())
                .line("difference-support", support))
        }
        Command::ConnesRoundtrip { algebra, form, rb } => {
            if let Some(path) = rb {
                let (rb, w) = match load(path, field)? {
                    Document::RBOperator { rb, form: Some(w), .. } => (rb, w),
                    d => return Err(wrong_kind(path, "rb-operator with a form", &d)),
                };
                let q = QuadraticRB::new(QuadraticAlgebra::new(rb.base().clone(), w)?, rb.operator().clone(), rb.weight().clone())?;
                let mut report = q.check();
                report.subject = format!("Connes roundtrip on `{}`", rb.base().name());
                let comm = q.commutative_side();
                report.absorb("commutative", comm.check());
                let back = comm.to_quadratic_rb()?;
                let support = back.quadratic().algebra().difference_support(q.quadratic().algebra());
                report.push(Clause::fact("roundtrip", support == 0 && back.operator() == q.operator()));
                return Ok(Outcome::new(report).line("difference-support", support));
            }
            let (algebra, form) = (algebra.as_ref().expect("required"), form.as_ref().expect("required"));
            let q = QuadraticAlgebra::new(expect_algebra(algebra, field)?, expect_form(form, field)?)?;
            let c = connes_from_zinbiel(&q)?;
            let mut report = Report::new(format!("Connes roundtrip on `{}`", q.algebra().name()));
            report.absorb("quadratic", q.check());
            report.absorb("commutative", c.check());
            let back = zinbiel_from_connes(&c)?;
            let support = back.algebra().difference_support(q.algebra());
            report.push(Clause::fact("roundtrip", support == 0));
            write_out(&cli.out, &format::write_algebra(c.algebra()))?;
            Ok(Outcome::new(report).line("difference-support", support))
        }
        Command::SearchZybe {
            algebra,
            limit,
            symmetric,
            quasi_triangular,
        } => {
            let mut a = expect_algebra(algebra, field)?;
            if a.field() == Field::Rational {
                a = a.to_field(Field::prime(7)?)?;
            }
            let opts = SearchOptions {
                symmetric: *symmetric,
                limit: *limit,
                quasi_triangular: *quasi_triangular,
            };
            let found = search_zybe(&a, opts)?;
            let mut text = String::new();
            for (i, r) in found.iter().enumerate() {
                text.push_str(&format::write_tensor2(&format!("r{}", i + 1), r));
            }
            let mut report = Report::new(format!("search on `{}` over {}", a.name(), a.field()));
            for (i, r) in found.iter().enumerate() {
                report.push(Clause::fact(format!("r{}/bracket-vanishes", i + 1), RMatrix::new(a.clone(), r.clone())?.bracket().is_zero()));
            }
            let mut o = Outcome::new(report).line("solutions", found.len());
            if let Some(dir) = &cli.out {
                std::fs::create_dir_all(dir)?;
                for (i, r) in found.iter().enumerate() {
                    std::fs::write(dir.join(format!("r{}.txt", i + 1)), format::write_tensor2(&format!("r{}", i + 1), r))?;
                }
            } else if !found.is_empty() {
                o = o.block("tensors", text);
            }
            Ok(o)
        }
        Command::CorpusCheck => {
            let f = field.unwrap_or(Field::Rational);
            let report = corpus::check(f)?;
            let failed = report.failures().count();
            Ok(Outcome::new(report).line("failures", failed).line("field", f))
        }
    }
}

fn validate(kind: Kind, file: &Path, algebra: Option<&Path>, field: Option<Field>) -> Result<Outcome> {
    let doc = load(file, field)?;
    if doc.kind() != kind.token() {
        return Err(wrong_kind(file, kind.token(), &doc));
    }
    let needs_algebra = || {
        algebra
            .ok_or_else(|| Error::Precondition(format!("validating a {} needs --algebra", kind.token())))
            .and_then(|p| expect_algebra(p, field))
    };
    let report = match doc {
        Document::Algebra(a) => match a.flavor() {
            Flavor::CommAssoc => a.check_comm_assoc(),
            _ => a.check_zinbiel(),
        },
        Document::Tensor2 { tensor, .. } => {
            let rm = RMatrix::new(needs_algebra()?, tensor)?;
            let class = rm.classify().map(|c| c.to_string()).unwrap_or_else(|_| "none".into());
            return Ok(Outcome::new(rm.coboundary_report()).line("classification", class));
        }
        Document::Form { form, .. } => QuadraticAlgebra::new(needs_algebra()?, form)?.check(),
        Document::Rep { rep, .. } => rep.check(),
        Document::MatchedPair { pair, .. } => pair.check(),
        Document::Bialgebra { bialgebra, .. } => bialgebra.check(),
        Document::RBOperator { rb, form, .. } => match form {
            Some(w) => {
                QuadraticRB::new(QuadraticAlgebra::new(rb.base().clone(), w)?, rb.operator().clone(), rb.weight().clone())?
                    .check()
            }
            None => {
                let mut report = rb.check();
                report.absorb("", rb.descendent_report());
                report
            }
        },
    };
    Ok(Outcome::new(report))
}
