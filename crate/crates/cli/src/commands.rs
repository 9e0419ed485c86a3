use std::fs;
use std::path::{Path, PathBuf};

use dicodim::concrete::{
    certify, find_violation, hat, lemma1_check, make_perm, pboxtimes, theorem4_check, var_codim, PermKind,
};
use dicodim::format::{emit_algebra, emit_variety, parse_algebra, parse_variety_with_notices};
use dicodim::terms::free_dim;
use dicodim::tideal::codim_sequence;
use dicodim::transfer::{di_presentation, pre_presentation, verify_codim_relation};
use dicodim::zinbiel::{divided_power_algebra, lemma3_report, zn_dimension};
use dicodim::{library, zoo, FinDimAlgebra, Limits, Rational, VarietyPresentation};
use log::info;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::report::Report;
use crate::{Command, VerifyArgs, ZooAction};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("no shipped file named `{0}`")]
    UnknownShipped(String),
    #[error("{0}")]
    Library(#[from] dicodim::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(dicodim::Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

const SHIPPED: &str = "zoo:";

fn read_source(reference: &str, shipped: impl Fn(&str) -> Option<&'static str>) -> Result<String> {
    if let Some(name) = reference.strip_prefix(SHIPPED) {
        return shipped(name).map(str::to_string).ok_or_else(|| CliError::UnknownShipped(name.into()));
    }
    fs::read_to_string(reference).map_err(|source| CliError::Io { path: reference.into(), source })
}

fn load_variety(reference: &str) -> Result<VarietyPresentation> {
    let parsed = parse_variety_with_notices(&read_source(reference, library::source)?)?;
    for notice in &parsed.notices {
        eprintln!("note: {notice}");
    }
    Ok(parsed.presentation)
}

fn load_algebra(reference: &str) -> Result<FinDimAlgebra> {
    Ok(parse_algebra(&read_source(reference, zoo::source)?)?)
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

/// Decimal rendering of an enclosure endpoint.
fn decimal(r: &Rational) -> Value {
    json!(format!("{:.6}", r.to_f64().unwrap_or(f64::NAN)))
}

pub fn run(command: Command, limits: &Limits) -> Result<Report> {
    match command {
        Command::Codim { variety, n } => codim(&variety, n, limits),
        Command::Di { variety, output } => translate("di", &variety, output.as_deref(), di_presentation),
        Command::Pre { variety, output } => translate("pre", &variety, output.as_deref(), pre_presentation),
        Command::VarCodim { algebra, n } => algebra_codim(&algebra, n, limits),
        Command::Check { algebra, variety } => check(&algebra, &variety),
        Command::Hat { algebra, output } => hat_command(&algebra, output.as_deref()),
        Command::Theorem4 { algebra, n } => theorem4(&algebra, n, limits),
        Command::Verify(args) => verify(&args, limits),
        Command::Zoo { action } => zoo_command(action),
    }
}

fn codim(reference: &str, n: usize, limits: &Limits) -> Result<Report> {
    let v = load_variety(reference)?;
    let mut r = Report::new("codim", &["n", "free_dim", "ideal_dim", "codim"]);
    r.input("variety", v.name());
    r.input("n", n);
    for c in codim_sequence(&v, n, limits)? {
        info!("{}: c_{} = {}", v.name(), c.n, c.codim);
        r.row(vec![json!(c.n), json!(c.free_dim), json!(c.ideal_dim), json!(c.codim)]);
    }
    Ok(r)
}

fn translate(
    command: &'static str,
    reference: &str,
    output: Option<&Path>,
    f: fn(&VarietyPresentation) -> dicodim::Result<VarietyPresentation>,
) -> Result<Report> {
    let v = load_variety(reference)?;
    let out = f(&v)?;
    let text = emit_variety(&out);
    let mut r = Report::new(command, &["name", "generators"]);
    r.input("variety", v.name());
    r.row(vec![json!(out.name()), json!(out.generators().len())]);
    match output {
        Some(path) => write_output(path, &text)?,
        None => r.artifact = Some(("presentation", text)),
    }
    Ok(r)
}

fn algebra_codim(reference: &str, n: usize, limits: &Limits) -> Result<Report> {
    let a = load_algebra(reference)?;
    let mut r = Report::new("var-codim", &["n", "free_dim", "var_codim"]);
    r.input("algebra", a.name());
    r.input("n", n);
    for m in 1..=n {
        let c = var_codim(&a, m, limits)?;
        r.row(vec![json!(m), json!(free_dim(m, a.sig().op_count()) as u64), json!(c)]);
    }
    Ok(r)
}

fn check(algebra: &str, variety: &str) -> Result<Report> {
    let a = load_algebra(algebra)?;
    let v = load_variety(variety)?;
    let mut r = Report::new("check", &["identity", "polynomial", "holds", "violation"]);
    r.input("algebra", a.name());
    r.input("variety", v.name());
    if !a.sig().same_shape(v.sig()) {
        return Err(dicodim::Error::SignatureMismatch(format!("{} vs {}", a.sig(), v.sig())).into());
    }
    for (k, f) in v.generators().iter().enumerate() {
        let bad = find_violation(&a, f)?;
        let violation = bad.as_ref().map(|t| {
            let labels: Vec<&str> = t.iter().map(|&i| a.labels()[i].as_str()).collect();
            json!(labels.join(" "))
        });
        r.fail_unless(bad.is_none());
        r.row(vec![json!(k + 1), json!(f.display(v.sig()).to_string()), json!(bad.is_none()), json!(violation)]);
    }
    Ok(r)
}

fn hat_command(reference: &str, output: Option<&Path>) -> Result<Report> {
    let d = load_algebra(reference)?;
    let h = hat(&d)?;
    let embedding = dicodim::concrete::embed_check_p2_with(&d, &h)?;
    let mut r = Report::new("hat", &["quantity", "value"]);
    r.input("algebra", d.name());
    r.row(vec![json!("dim"), json!(d.dim())]);
    r.row(vec![json!("bar_dim"), json!(h.bar_dim)]);
    r.row(vec![json!("hat_dim"), json!(h.algebra.dim())]);
    r.row(vec![json!("monomorphism"), json!(embedding.is_monomorphism())]);
    if let Some(w) = &embedding.witness {
        r.row(vec![json!("witness"), json!(w)]);
    }
    r.fail_unless(embedding.is_monomorphism());
    let text = emit_algebra(&h.algebra);
    match output {
        Some(path) => write_output(path, &text)?,
        None => r.artifact = Some(("algebra", text)),
    }
    Ok(r)
}

fn theorem4(reference: &str, n: usize, limits: &Limits) -> Result<Report> {
    let d = load_algebra(reference)?;
    let mut r = Report::new("theorem4", &["n", "cv", "cvhat", "c1", "c2", "root_lo", "root_hi"]);
    r.input("algebra", d.name());
    r.input("n", n);
    for row in theorem4_check(&d, n, limits)? {
        r.fail_unless(row.holds());
        r.row(vec![
            json!(row.n),
            json!(row.cv),
            json!(row.cvhat),
            json!(row.c1),
            json!(row.c2),
            decimal(&row.root.0),
            decimal(&row.root.1),
        ]);
    }
    Ok(r)
}

fn verify(args: &VerifyArgs, limits: &Limits) -> Result<Report> {
    let n = args.n;
    if args.lemma3 {
        let mut r = Report::new("verify", &["n", "terms", "holds"]);
        r.input("check", "lemma3");
        r.input("n", n);
        for m in 1..=n {
            let rep = lemma3_report(m)?;
            r.fail_unless(rep.holds());
            r.row(vec![json!(m), json!(rep.lhs.len()), json!(rep.holds())]);
        }
        Ok(r)
    } else if args.zn_dim {
        let mut r = Report::new("verify", &["n", "dim", "holds"]);
        r.input("check", "zn-dim");
        r.input("n", n);
        for m in 1..=n {
            let d = zn_dimension(m)?;
            r.fail_unless(d == m);
            r.row(vec![json!(m), json!(d), json!(d == m)]);
        }
        Ok(r)
    } else if args.lemma1 {
        lemma1(n)
    } else {
        let v = load_variety(args.variety.as_deref().expect("clap requires a variety"))?;
        let mut r = Report::new("verify", &["n", "codim", "di_codim", "expected", "holds"]);
        r.input("check", "eq2");
        r.input("variety", v.name());
        r.input("n", n);
        for m in 1..=n {
            let rel = verify_codim_relation(&v, m, limits)?;
            r.fail_unless(rel.equal);
            r.row(vec![json!(m), json!(rel.codim), json!(rel.di_codim), json!(rel.rhs), json!(rel.equal)]);
        }
        Ok(r)
    }
}

fn lemma1(n: usize) -> Result<Report> {
    let z = divided_power_algebra(n)?;
    let lie2 = zoo::algebra("lie2").expect("shipped algebra");
    let mut r = Report::new("verify", &["case", "holds"]);
    r.input("check", "lemma1");
    r.input("n", n);
    for kind in [PermKind::P2, PermKind::GroupAlg(2), PermKind::P0(3)] {
        let p = make_perm(kind)?;
        let ok = lemma1_check(&z, &p, &lie2)?;
        r.fail_unless(ok);
        r.row(vec![json!(format!("{} x {} x {}", z.name(), p.name(), lie2.name())), json!(ok)]);
    }
    let product = pboxtimes(&make_perm(PermKind::P2)?, &z)?;
    for v in [library::com(), library::assoc()] {
        let ok = certify(&product, &v).is_ok();
        r.fail_unless(ok);
        r.row(vec![json!(format!("P2 box {} in {}", z.name(), v.name())), json!(ok)]);
    }
    Ok(r)
}

fn zoo_command(action: ZooAction) -> Result<Report> {
    match action {
        ZooAction::List => {
            let mut r = Report::new("zoo", &["name", "kind", "signature", "dim"]);
            for (name, a) in zoo::all() {
                r.row(vec![json!(name), json!("algebra"), json!(a.sig().to_string()), json!(a.dim())]);
            }
            for name in library::names() {
                let v = library::by_name(name).expect("shipped variety");
                r.row(vec![json!(name), json!("variety"), json!(v.sig().to_string()), Value::Null]);
            }
            Ok(r)
        }
        ZooAction::Show { name } => {
            let text = zoo::source(&name)
                .or_else(|| library::source(&name))
                .ok_or_else(|| CliError::UnknownShipped(name.clone()))?;
            let mut r = Report::new("zoo", &["name"]);
            r.input("name", name);
            r.artifact = Some(("source", text.to_string()));
            Ok(r)
        }
    }
}
