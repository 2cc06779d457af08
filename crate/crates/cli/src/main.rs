use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gslice::action::action_groupoid_with_limit;
use gslice::coset::{coset_action_groupoid_with_limit, coset_relation, sliced_coset_groupoid};
use gslice::emit::{
    groupoid_dot, slice_dot, to_json, ActionReport, CosetReport, GroupoidReport, KernelReport,
    SliceReport,
};
use gslice::explore::explore_question;
use gslice::gdsl::{load, Diagnostic, Model};
use gslice::kernel::induced_functor;
use gslice::slice::slice;
use gslice::suite::check_model;
use gslice::{Error, Functor, Groupoid, ObjId, Subgroupoid, DEFAULT_SIZE_LIMIT};
use serde_json::json;

/// Finite groupoids: slices, kernels, action and coset groupoids.
#[derive(Parser)]
#[command(name = "gslice", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check every declared entity.
    Validate(Common),
    /// The slice groupoid G/X.
    Slice {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'g')]
        groupoid: Option<String>,
        #[arg(short = 'x')]
        object: String,
    },
    /// Kernel, image and partition of the functor induced at X.
    Kernel {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'f')]
        functor: String,
        #[arg(short = 'x')]
        object: String,
    },
    /// The action groupoid G//G.
    Action {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'g')]
        groupoid: Option<String>,
    },
    /// The coset action groupoid (H:G)//G.
    Coset {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'g')]
        groupoid: Option<String>,
        #[arg(short = 's')]
        subgroupoid: String,
    },
    /// The sliced coset groupoid (H:G/X)//G.
    SlicedCoset {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'g')]
        groupoid: Option<String>,
        #[arg(short = 's')]
        subgroupoid: String,
        #[arg(short = 'x')]
        object: String,
    },
    /// Run every invariant suite that applies to the declared entities.
    Check(Common),
    /// Search wide subgroupoids K whose sliced coset classes match im F_X.
    ExploreQuestion {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'f')]
        functor: String,
        #[arg(short = 'x')]
        object: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

#[derive(Args)]
struct Common {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// A failed run and its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimit { .. } | Error::BudgetExceeded { .. } => 3,
            Error::UnknownObject(_) | Error::UnknownMorphism(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output text plus whether the run counts as a failure (exit 1).
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn size_limit() -> Result<usize, Failure> {
    match std::env::var("GDSL_SIZE_LIMIT") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("GDSL_SIZE_LIMIT must be a number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_SIZE_LIMIT),
    }
}

struct Loaded {
    model: Model,
}

fn load_file(common: &Common) -> Result<Loaded, Failure> {
    let path = common.file.display().to_string();
    let text = fs::read_to_string(&common.file)
        .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
    load(&text)
        .map(|model| Loaded { model })
        .map_err(|diags| Failure::invalid(render(&path, &text, &diags)))
}

fn render(path: &str, text: &str, diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| d.render(path, Some(text)))
        .collect::<Vec<_>>()
        .join("\n")
}

impl Loaded {
    fn groupoid(&self, name: Option<&str>) -> Result<Arc<Groupoid>, Failure> {
        match name {
            Some(n) => self
                .model
                .groupoid(n)
                .cloned()
                .ok_or_else(|| Failure::usage(format!("no groupoid named {n}"))),
            None => match self.model.groupoids() {
                [(_, g)] => Ok(g.clone()),
                _ => Err(Failure::usage(
                    "the file declares several groupoids; pick one with -g",
                )),
            },
        }
    }

    fn functor(&self, name: &str) -> Result<&Functor, Failure> {
        self.model
            .functor(name)
            .ok_or_else(|| Failure::usage(format!("no functor named {name}")))
    }

    fn subgroupoid(&self, name: &str, parent: Option<&str>) -> Result<&Subgroupoid, Failure> {
        let s = self
            .model
            .subgroupoid(name)
            .ok_or_else(|| Failure::usage(format!("no subgroupoid named {name}")))?;
        if let Some(p) = parent {
            if s.parent().name() != p {
                return Err(Failure::usage(format!("{name} is not a subgroupoid of {p}")));
            }
        }
        Ok(s)
    }
}

fn object(g: &Groupoid, name: &str) -> Result<ObjId, Failure> {
    g.object_by_name(name)
        .map_err(|_| Failure::usage(format!("{} has no object named {name}", g.name())))
}

fn no_dot(format: Format, verb: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::usage(format!("{verb} output is not groupoid-shaped; use text or json")))
    } else {
        Ok(())
    }
}

fn run(command: &Command) -> Result<Output, Failure> {
    let limit = size_limit()?;
    match command {
        Command::Validate(common) => {
            let path = common.file.display().to_string();
            let text = fs::read_to_string(&common.file)
                .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
            match load(&text) {
                Ok(model) => Ok(Output::ok(match common.format {
                    Format::Json => to_json(&json!({
                        "valid": true,
                        "groupoids": model.groupoids().iter().map(|(_, g)| GroupoidReport::new(g)).collect::<Vec<_>>(),
                        "functors": model.functors().iter().map(|(n, _)| n).collect::<Vec<_>>(),
                        "subgroupoids": model.subgroupoids().iter().map(|(n, _)| n).collect::<Vec<_>>(),
                    })),
                    Format::Dot => model
                        .groupoids()
                        .iter()
                        .map(|(_, g)| groupoid_dot(g))
                        .collect(),
                    Format::Text => {
                        let mut out = String::new();
                        for (name, g) in model.groupoids() {
                            out.push_str(&format!(
                                "groupoid {name}: {} objects, {} morphisms: valid\n",
                                g.object_count(),
                                g.morphism_count()
                            ));
                        }
                        for (name, f) in model.functors() {
                            out.push_str(&format!(
                                "functor {name}: {} -> {}: valid\n",
                                f.source().name(),
                                f.target().name()
                            ));
                        }
                        for (name, s) in model.subgroupoids() {
                            out.push_str(&format!(
                                "subgroupoid {name} of {}: {} morphisms: valid\n",
                                s.parent().name(),
                                s.len()
                            ));
                        }
                        out
                    }
                })),
                Err(diags) => {
                    let rendered = render(&path, &text, &diags);
                    if common.format == Format::Json {
                        Ok(Output {
                            text: to_json(&json!({ "valid": false, "diagnostics": diags })),
                            failed: true,
                        }
                        .with_stderr(rendered))
                    } else {
                        Err(Failure::invalid(rendered))
                    }
                }
            }
        }
        Command::Slice {
            common,
            groupoid,
            object: x,
        } => {
            let l = load_file(common)?;
            let g = l.groupoid(groupoid.as_deref())?;
            let x = object(&g, x)?;
            g.guard_size(g.incoming(x).len().pow(2), limit)?;
            let s = slice(g, x)?;
            Ok(Output::ok(match common.format {
                Format::Text => SliceReport::new(&s).text(),
                Format::Json => to_json(&SliceReport::new(&s)),
                Format::Dot => slice_dot(&s),
            }))
        }
        Command::Kernel {
            common,
            functor,
            object: x,
        } => {
            no_dot(common.format, "kernel")?;
            let l = load_file(common)?;
            let f = l.functor(functor)?;
            let x = object(f.source(), x)?;
            let fx = induced_functor(f, x)?;
            let report = KernelReport::new(functor, &fx);
            Ok(Output {
                failed: !report.kernel_properties_hold,
                text: match common.format {
                    Format::Json => to_json(&report),
                    _ => report.text(),
                },
            })
        }
        Command::Action { common, groupoid } => {
            let l = load_file(common)?;
            let g = l.groupoid(groupoid.as_deref())?;
            let a = action_groupoid_with_limit(g, limit)?;
            Ok(Output::ok(match common.format {
                Format::Text => ActionReport::new(&a).text(),
                Format::Json => to_json(&ActionReport::new(&a)),
                Format::Dot => groupoid_dot(a.groupoid()),
            }))
        }
        Command::Coset {
            common,
            groupoid,
            subgroupoid,
        } => {
            let l = load_file(common)?;
            let h = l.subgroupoid(subgroupoid, groupoid.as_deref())?;
            let c = coset_action_groupoid_with_limit(&coset_relation(h), limit)?;
            Ok(Output::ok(match common.format {
                Format::Text => CosetReport::new(&c).text(),
                Format::Json => to_json(&CosetReport::new(&c)),
                Format::Dot => groupoid_dot(c.groupoid()),
            }))
        }
        Command::SlicedCoset {
            common,
            groupoid,
            subgroupoid,
            object: x,
        } => {
            let l = load_file(common)?;
            let h = l.subgroupoid(subgroupoid, groupoid.as_deref())?;
            let g = h.parent().clone();
            let xi = object(&g, x)?;
            let c = coset_action_groupoid_with_limit(&coset_relation(h), limit)?;
            let a = action_groupoid_with_limit(g.clone(), limit)?;
            let s = slice(g, xi)?;
            let op = Arc::new(s.groupoid().opposite());
            let sliced = sliced_coset_groupoid(&c, &a, &s, op)?;
            Ok(Output::ok(match common.format {
                Format::Text => CosetReport::sliced(&c, x, &sliced).text(),
                Format::Json => to_json(&CosetReport::sliced(&c, x, &sliced)),
                Format::Dot => groupoid_dot(&sliced.groupoid),
            }))
        }
        Command::Check(common) => {
            no_dot(common.format, "check")?;
            let l = load_file(common)?;
            let report = check_model(&l.model, limit)?;
            let mut kernels = Vec::new();
            for (name, f) in l.model.functors() {
                for x in f.source().objects() {
                    kernels.push(KernelReport::new(name, &induced_functor(f, x)?));
                }
            }
            let failed = !report.passed();
            let text = match common.format {
                Format::Json => to_json(&json!({
                    "passed": !failed,
                    "checks": report.checks,
                    "kernels": kernels,
                })),
                _ => {
                    let mut out = String::new();
                    for c in &report.checks {
                        match &c.witness {
                            None => out.push_str(&format!("PASS [{}] {}\n", c.suite, c.name)),
                            Some(w) => {
                                out.push_str(&format!("FAIL [{}] {}: {w}\n", c.suite, c.name))
                            }
                        }
                    }
                    for k in &kernels {
                        let sizes: Vec<String> =
                            k.partition.iter().map(|p| p.class.len().to_string()).collect();
                        out.push_str(&format!(
                            "kernel of {} at {}: size {} {{{}}}; partition {} classes of sizes {}\n",
                            k.functor,
                            k.apex,
                            k.kernel.len(),
                            k.kernel.join(", "),
                            k.partition.len(),
                            sizes.join("x")
                        ));
                    }
                    let failures = report.failures().count();
                    out.push_str(&format!(
                        "{} checks, {} failed\n",
                        report.checks.len(),
                        failures
                    ));
                    out
                }
            };
            Ok(Output { text, failed })
        }
        Command::ExploreQuestion {
            common,
            functor,
            object: x,
            budget,
        } => {
            no_dot(common.format, "explore-question")?;
            let l = load_file(common)?;
            let f = l.functor(functor)?;
            let xi = object(f.source(), x)?;
            let report = explore_question(f, functor, xi, *budget)?;
            Ok(Output::ok(match common.format {
                Format::Json => to_json(&report),
                _ => {
                    let mut out = format!(
                        "{} at {}: {} wide subgroupoids examined\ncriterion: {}\nimage: {{{}}}\n",
                        report.functor,
                        report.apex,
                        report.candidates_examined,
                        report.criterion,
                        report.image.join(", ")
                    );
                    for c in &report.candidates {
                        let verdict = if c.satisfied {
                            let pairs: Vec<String> = c
                                .bijection
                                .iter()
                                .map(|p| format!("{} -> {}", p.class, p.image))
                                .collect();
                            format!("satisfies: {}", pairs.join(", "))
                        } else {
                            c.failure.clone().unwrap_or_default()
                        };
                        out.push_str(&format!("  K = {{{}}}: {verdict}\n", c.members.join(", ")));
                    }
                    out.push_str(&format!("{} satisfying\n", report.satisfying.len()));
                    out
                }
            }))
        }
    }
}

impl Output {
    fn with_stderr(self, message: String) -> Self {
        eprintln!("{message}");
        self
    }
}

fn out_path(command: &Command) -> Option<&PathBuf> {
    let common = match command {
        Command::Validate(c) | Command::Check(c) => c,
        Command::Slice { common, .. }
        | Command::Kernel { common, .. }
        | Command::Action { common, .. }
        | Command::Coset { common, .. }
        | Command::SlicedCoset { common, .. }
        | Command::ExploreQuestion { common, .. } => common,
    };
    common.out.as_ref()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(output) => {
            if let Some(path) = out_path(&cli.command) {
                if let Err(e) = fs::write(path, &output.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", output.text);
            }
            if output.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
