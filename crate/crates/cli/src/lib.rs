//! Command-line front end for `ss2cat`: argument parsing, file formats and report
//! rendering. [`run`] is the whole program minus process I/O.

use std::fmt::{Debug, Display};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use ss2cat::based_ring::{find_weak_based_involutions, validate_zplus_ring};
use ss2cat::dy::{build_dy_complex, dy_cohomology_dims, separability_diagnostic};
use ss2cat::field_profile::{classify_finite_separable_closure, division_algebra_classes};
use ss2cat::fusion2::{cyclic_class_name, finite_field_tensor, pointed_braided_product, real_division_blocks};
use ss2cat::pointed::{braidings_on_cyclic, h2_of_abelian, module_classes, square_class_witnesses, subgroups};
use ss2cat::skeleton::{mod_vect_real_skeleton, mod_vect_zp_skeleton, truncated_family_2vect_fp, validate_skeleton};
use ss2cat::zplus_module::{
    certificate_for, enumerate_indecomposable_irreducible_modules, enumerate_irreducible_modules, enumerate_ring_homs,
    validate_module,
};
use ss2cat::{
    BasedRingData, BraidingParam, DivisionAlgebraClass, DivisionAlgebraLabel, EnumerationBounds, FieldKind,
    FieldProfile, FieldTag, FiniteAbelianGroup, PointedFunctorData, SearchMode, TwoCatSkeleton, ValidatedRing,
    ZPlusModuleData,
};

#[derive(Parser, Debug)]
#[command(name = "ss2cat", version, about = "Exact classification tools for semisimple 2-categories")]
struct Cli {
    /// Base field profile code: ac0, ac<p>, rc, fp<p>, q, sep:<tag>.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Accepted for compatibility; output never depends on randomness.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Z+-rings and weak based structures.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Z+-modules over weak based rings.
    #[command(subcommand)]
    Zmod(ZmodCmd),
    /// Skeletons of semisimple 2-categories.
    #[command(subcommand)]
    Twocat(TwocatCmd),
    /// Pointed fusion categories over finite abelian groups.
    #[command(subcommand)]
    Pointed(PointedCmd),
    /// Davydov-Yetter cohomology of pointed identity functors.
    #[command(subcommand)]
    Dy(DyCmd),
    /// Fusion 2-category product tables.
    #[command(subcommand)]
    Fusion2(Fusion2Cmd),
    /// Field profile classification data.
    #[command(subcommand)]
    Field(FieldCmd),
}

#[derive(Args, Debug)]
struct Search {
    /// Double every search cap.
    #[arg(long)]
    widened: bool,
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    Validate { file: PathBuf },
    Involutions { file: PathBuf },
    Homs {
        source: PathBuf,
        target: PathBuf,
        #[command(flatten)]
        search: Search,
    },
}

#[derive(Subcommand, Debug)]
enum ZmodCmd {
    Validate { file: PathBuf },
    Enumerate {
        ring: PathBuf,
        #[command(flatten)]
        search: Search,
        /// Keep only indecomposable modules.
        #[arg(long)]
        indecomposable: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuiltinSkeleton {
    /// Module categories over real vector spaces.
    Real,
    /// Module categories over `Vect(Z/p)`; characteristic from `--field`.
    Zp,
}

#[derive(Subcommand, Debug)]
enum TwocatCmd {
    Validate { file: PathBuf },
    Pi0 { file: PathBuf },
    /// Truncation of the family of `Vect_{F_{p^q}}`.
    Family {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        depth: u32,
    },
    Builtin {
        name: BuiltinSkeleton,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

#[derive(Subcommand, Debug)]
enum PointedCmd {
    Subgroups {
        #[arg(long)]
        group: String,
    },
    H2 {
        #[arg(long)]
        group: String,
    },
    Classes {
        #[arg(long)]
        group: String,
    },
    Braidings {
        #[arg(long)]
        p: u64,
    },
    Squareclasses {
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Subcommand, Debug)]
enum DyCmd {
    Dims {
        #[arg(long)]
        group: String,
        /// Coefficient field: q, fp<p>, cyclo<n>.
        #[arg(long)]
        coeff: String,
        #[arg(long)]
        nmax: usize,
    },
    Diagnostic {
        #[arg(long)]
        group: String,
        #[arg(long)]
        coeff: String,
    },
}

#[derive(Subcommand, Debug)]
enum Fusion2Cmd {
    /// Products of `Vect_R`, `Vect_C`, `Vect_H` over `Vect_R`.
    Real,
    /// `Vect_{F_{p^q}}` times `Vect_{F_{p^r}}` over `Vect_{F_p}`.
    Ffield { p: u64, q: u32, r: u32 },
    /// Products over braided `Vect(Z/p)`.
    Pointed {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        zeta: u64,
        /// Restrict to one cell, e.g. `Vect,Vect`.
        #[arg(long)]
        query: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum FieldCmd {
    /// Separable closure and division algebras of the `--field` profile.
    Info {
        #[arg(long, default_value_t = 4)]
        max_dim: u32,
    },
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct CommandResult {
    status: &'static str,
    payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    human_table: Option<String>,
}

enum Failure {
    Usage(String),
    Validation { kind: String, message: String },
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Error variant name and message.
fn invalid<E: Debug + Display>(e: E) -> Failure {
    let dbg = format!("{e:?}");
    let kind = dbg.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
    Failure::Validation { kind, message: e.to_string() }
}

type Res = Result<(Value, String), Failure>;

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let format = cli.format;
    match dispatch(&cli) {
        Ok((payload, md)) => {
            let stdout = match format {
                Format::Json => render_json(&CommandResult { status: "ok", payload, human_table: None }),
                Format::Md => md,
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Validation { kind, message }) => {
            let payload = json!({ "kind": kind, "message": message });
            let stdout = match format {
                Format::Json => render_json(&CommandResult { status: "error", payload, human_table: None }),
                Format::Md => format!("**error** `{kind}`: {message}\n"),
            };
            Outcome { code: 1, stdout, stderr: format!("error: {message}\n") }
        }
    }
}

fn render_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> Res {
    let field = match &cli.field {
        Some(code) => Some(code.parse::<FieldProfile>().map_err(|e| usage(e.to_string()))?),
        None => None,
    };
    match &cli.command {
        Command::Ring(c) => ring_cmd(c),
        Command::Zmod(c) => zmod_cmd(c),
        Command::Twocat(c) => twocat_cmd(c, field.as_ref()),
        Command::Pointed(c) => pointed_cmd(c, field.as_ref()),
        Command::Dy(c) => dy_cmd(c),
        Command::Fusion2(c) => fusion2_cmd(c),
        Command::Field(c) => field_cmd(c, field.as_ref()),
    }
}

// ---- file formats ----

/// Ring file: `{"rank"?, "labels"?, "unit", "mult", "involution"?}` with `mult[i][j][k] = c_ij^k`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    rank: Option<usize>,
    labels: Option<Vec<String>>,
    unit: Vec<i64>,
    mult: Vec<Vec<Vec<i64>>>,
    involution: Option<Vec<usize>>,
}

/// Module file: `{"ring": <path or inline ring>, "rank", "action"}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    ring: Value,
    rank: usize,
    action: Vec<Vec<Vec<i64>>>,
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Validation {
        kind: "Parse".into(),
        message: format!("{}: {e}", path.display()),
    })
}

fn parse_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Validation { kind: "Parse".into(), message: format!("{what}: {e}") })
}

fn ring_from_value(v: Value) -> Result<ValidatedRing, Failure> {
    let f: RingFile = parse_value(v, "ring")?;
    if let Some(r) = f.rank {
        if r != f.mult.len() {
            return Err(Failure::Validation {
                kind: "Shape".into(),
                message: format!("rank {r} disagrees with mult of size {}", f.mult.len()),
            });
        }
    }
    let data = BasedRingData::from_nested(f.labels, &f.mult, f.unit, f.involution).map_err(invalid)?;
    validate_zplus_ring(data).map_err(invalid)
}

fn load_ring(path: &Path) -> Result<ValidatedRing, Failure> {
    ring_from_value(read_json(path)?)
}

// ---- markdown helpers ----

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for r in rows {
        s.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    s
}

fn tuple<T: Display>(v: &[T]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn mode(s: &Search) -> SearchMode {
    if s.widened {
        SearchMode::Widened
    } else {
        SearchMode::Proven
    }
}

// ---- ring ----

fn ring_cmd(c: &RingCmd) -> Res {
    match c {
        RingCmd::Validate { file } => {
            let ring = load_ring(file)?;
            let certs = match ring.involution() {
                Some(inv) => ring.certify(inv).into_iter().collect(),
                None => find_weak_based_involutions(&ring).map_err(invalid)?,
            };
            let first = certs.first();
            let summary = match first {
                Some(c) => format!("weak based: yes, t={}", tuple(&c.t_values)),
                None => "weak based: no".to_string(),
            };
            let payload = json!({
                "rank": ring.rank(),
                "labels": ring.labels(),
                "i0": ring.i0_set(),
                "weak_based": first.is_some(),
                "involution": first.map(|c| c.involution().to_vec()),
                "t_values": first.map(|c| c.t_values.clone()),
                "based": first.map(|c| c.based),
                "summary": summary,
            });
            let md = format!("**ring** rank {}, labels {}\n\n{summary}\n", ring.rank(), tuple(ring.labels()));
            Ok((payload, md))
        }
        RingCmd::Involutions { file } => {
            let ring = load_ring(file)?;
            let certs = find_weak_based_involutions(&ring).map_err(invalid)?;
            let list: Vec<Value> = certs
                .iter()
                .map(|c| json!({"involution": c.involution(), "t_values": c.t_values, "based": c.based}))
                .collect();
            let rows: Vec<Vec<String>> = certs
                .iter()
                .map(|c| vec![tuple(c.involution()), tuple(&c.t_values), c.based.to_string()])
                .collect();
            Ok((json!({"count": certs.len(), "certificates": list}), md_table(&["involution", "t", "based"], &rows)))
        }
        RingCmd::Homs { source, target, search } => {
            let s = certificate_for(&load_ring(source)?).map_err(invalid)?;
            let t = certificate_for(&load_ring(target)?).map_err(invalid)?;
            let homs = enumerate_ring_homs(&s, &t, mode(search)).map_err(invalid)?;
            let rows: Vec<Vec<String>> = homs
                .iter()
                .enumerate()
                .map(|(i, h)| vec![i.to_string(), format!("{:?}", h.matrix)])
                .collect();
            let md = format!("{} homomorphisms\n\n{}", homs.len(), md_table(&["#", "matrix"], &rows));
            Ok((json!({"count": homs.len(), "homs": homs}), md))
        }
    }
}

// ---- zmod ----

fn zmod_cmd(c: &ZmodCmd) -> Res {
    match c {
        ZmodCmd::Validate { file } => {
            let v = read_json(file)?;
            let mf: ModuleFile = parse_value(v, "module")?;
            let ring = match mf.ring {
                Value::String(rel) => {
                    let base = file.parent().unwrap_or(Path::new("."));
                    load_ring(&base.join(rel))?
                }
                inline => ring_from_value(inline)?,
            };
            let data = ZPlusModuleData { rank: mf.rank, action: mf.action };
            let m = validate_module(&ring, &data).map_err(invalid)?;
            let payload = json!({
                "rank": m.rank(),
                "irreducible": m.is_irreducible(),
                "indecomposable": m.is_indecomposable(),
            });
            let md = format!(
                "module of rank {}: irreducible {}, indecomposable {}\n",
                m.rank(),
                m.is_irreducible(),
                m.is_indecomposable()
            );
            Ok((payload, md))
        }
        ZmodCmd::Enumerate { ring, search, indecomposable } => {
            let ring = load_ring(ring)?;
            let cert = certificate_for(&ring).map_err(invalid)?;
            let mods = if *indecomposable {
                enumerate_indecomposable_irreducible_modules(&cert, mode(search))
            } else {
                enumerate_irreducible_modules(&cert, mode(search))
            }
            .map_err(invalid)?;
            let b = EnumerationBounds::from_ring(&cert.ring);
            let list: Vec<Value> = mods.iter().map(|m| json!({"rank": m.rank(), "action": m.action()})).collect();
            let rows: Vec<Vec<String>> = mods
                .iter()
                .enumerate()
                .map(|(i, m)| vec![i.to_string(), m.rank().to_string(), format!("{:?}", m.action())])
                .collect();
            let payload = json!({
                "bounds": {"n": b.n, "rank_bound": b.rank_bound, "coeff_budget_module": b.coeff_budget_module},
                "count": mods.len(),
                "modules": list,
            });
            let md = format!("{} modules listed\n\n{}", mods.len(), md_table(&["#", "rank", "action"], &rows));
            Ok((payload, md))
        }
    }
}

// ---- twocat ----

fn skeleton_report(s: &ss2cat::ValidatedSkeleton) -> (Value, String) {
    let names = &s.skeleton().simples;
    let comps = s.pi0();
    let report = s.compactness_report();
    let named: Vec<Vec<&str>> = comps.iter().map(|c| c.iter().map(|&i| names[i].as_str()).collect()).collect();
    let payload = json!({
        "simples": names,
        "components": comps,
        "component_names": named,
        "report": report,
        "hom_dims": s.skeleton().hom_dims,
        "max_end_dim": s.skeleton().max_end_dim,
    });
    let rows: Vec<Vec<String>> = named.iter().enumerate().map(|(i, c)| vec![i.to_string(), c.join(", ")]).collect();
    let md = format!(
        "{} simples, {} components, connected: {}\n\n{}",
        report.num_simples,
        report.num_components,
        report.is_connected,
        md_table(&["component", "simples"], &rows)
    );
    (payload, md)
}

fn twocat_cmd(c: &TwocatCmd, field: Option<&FieldProfile>) -> Res {
    match c {
        TwocatCmd::Validate { file } | TwocatCmd::Pi0 { file } => {
            let sk: TwoCatSkeleton = parse_value(read_json(file)?, "skeleton")?;
            let v = validate_skeleton(sk).map_err(invalid)?;
            if matches!(c, TwocatCmd::Validate { .. }) {
                let n = v.num_simples();
                return Ok((json!({"valid": true, "num_simples": n}), format!("valid skeleton with {n} simples\n")));
            }
            Ok(skeleton_report(&v))
        }
        TwocatCmd::Family { p, depth } => Ok(skeleton_report(&truncated_family_2vect_fp(*p, *depth).map_err(invalid)?)),
        TwocatCmd::Builtin { name, p } => {
            let s = match name {
                BuiltinSkeleton::Real => mod_vect_real_skeleton(),
                BuiltinSkeleton::Zp => {
                    let ch = match field.map(FieldProfile::kind) {
                        None => 0,
                        Some(FieldKind::AlgClosed(c)) => *c,
                        Some(_) => return Err(usage("builtin zp requires an algebraically closed --field")),
                    };
                    mod_vect_zp_skeleton(*p, ch).map_err(invalid)?
                }
            };
            Ok(skeleton_report(&s))
        }
    }
}

// ---- pointed ----

fn parse_group(s: &str) -> Result<FiniteAbelianGroup, Failure> {
    let orders: Vec<u64> = if s.trim().is_empty() || s.trim() == "1" {
        Vec::new()
    } else {
        s.split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| usage(format!("bad group order list {s:?}"))))
            .collect::<Result<_, _>>()?
    };
    FiniteAbelianGroup::from_cyclic_factors(&orders).map_err(|e| usage(e.to_string()))
}

fn pointed_cmd(c: &PointedCmd, field: Option<&FieldProfile>) -> Res {
    let field = field.cloned().unwrap_or_else(|| FieldProfile::alg_closed(0).expect("ac0"));
    match c {
        PointedCmd::Subgroups { group } => {
            let g = parse_group(group)?;
            let subs = subgroups(&g).map_err(invalid)?;
            let rows: Vec<Vec<String>> = subs
                .iter()
                .map(|s| vec![s.order.to_string(), s.structure.to_string(), format!("{:?}", s.generators)])
                .collect();
            let md = format!("{} subgroups of {g}\n\n{}", subs.len(), md_table(&["order", "structure", "generators"], &rows));
            Ok((json!({"group": g, "count": subs.len(), "subgroups": subs}), md))
        }
        PointedCmd::H2 { group } => {
            let g = parse_group(group)?;
            let h2 = h2_of_abelian(&g, &field).map_err(invalid)?;
            let md = match h2.class_count() {
                Some(n) => format!("H^2({g}; k^x) over {field}: {n} classes\n"),
                None => format!("H^2({g}; k^x) over {field}: infinite (square classes)\n"),
            };
            Ok((json!({"group": g, "field": field, "h2": h2, "class_count": h2.class_count()}), md))
        }
        PointedCmd::Classes { group } => {
            let g = parse_group(group)?;
            let classes = module_classes(&g, &field).map_err(invalid)?;
            let separable = classes.iter().filter(|m| m.separable).count();
            let rows: Vec<Vec<String>> = classes
                .iter()
                .map(|m| {
                    vec![
                        m.subgroup.structure.to_string(),
                        format!("{:?}", m.subgroup.generators),
                        m.cocycle_class_index.to_string(),
                        m.separable.to_string(),
                    ]
                })
                .collect();
            let md = format!(
                "{} classes, {separable} separable\n\n{}",
                classes.len(),
                md_table(&["subgroup", "generators", "cocycle class", "separable"], &rows)
            );
            let payload = json!({"group": g, "field": field, "count": classes.len(), "separable_count": separable, "classes": classes});
            Ok((payload, md))
        }
        PointedCmd::Braidings { p } => {
            let b = braidings_on_cyclic(*p, &field).map_err(invalid)?;
            let md = format!("{} braidings on Vect(Z/{p}) over {field}\n", b.len());
            Ok((json!({"count": b.len(), "braidings": b}), md))
        }
        PointedCmd::Squareclasses { bound } => {
            let w = square_class_witnesses(*bound).map_err(invalid)?;
            let md = format!("{} square classes up to {bound}: {}\n", w.len(), tuple(&w));
            Ok((json!({"bound": bound, "count": w.len(), "witnesses": w}), md))
        }
    }
}

// ---- dy ----

fn parse_coeff(s: &str) -> Result<FieldTag, Failure> {
    s.parse::<FieldTag>().map_err(|e| usage(e.to_string()))
}

fn dy_cmd(c: &DyCmd) -> Res {
    match c {
        DyCmd::Dims { group, coeff, nmax } => {
            let g = parse_group(group)?;
            let f = parse_coeff(coeff)?;
            let cx = build_dy_complex(&PointedFunctorData::identity(g.clone(), f), *nmax).map_err(invalid)?;
            let dims = dy_cohomology_dims(&cx);
            let md = format!("dim H^0..H^{} of Id on Vect({g}) over {f}: {}\n", nmax - 1, tuple(&dims));
            Ok((json!({"group": g, "coeff": f.to_string(), "cochain_dims": cx.cochain_dims(), "dims": dims}), md))
        }
        DyCmd::Diagnostic { group, coeff } => {
            let g = parse_group(group)?;
            let f = parse_coeff(coeff)?;
            let d = separability_diagnostic(&g, f).map_err(invalid)?;
            let md = format!(
                "H^2 = {}, H^3 = {}, consistent with separability: {}\n",
                d.h2_dim, d.h3_dim, d.consistent_with_separability
            );
            Ok((json!({"group": g, "coeff": f.to_string(), "diagnostic": d}), md))
        }
    }
}

// ---- fusion2 ----

fn real_name(l: DivisionAlgebraLabel) -> &'static str {
    match l {
        DivisionAlgebraLabel::Base => "Vect_R",
        DivisionAlgebraLabel::Complexification => "Vect_C",
        DivisionAlgebraLabel::Quaternion => "Vect_H",
        DivisionAlgebraLabel::FiniteExt(_) => "?",
    }
}

fn sum_names(names: &[String]) -> String {
    names.join(" + ")
}

fn fusion2_cmd(c: &Fusion2Cmd) -> Res {
    match c {
        Fusion2Cmd::Real => {
            use DivisionAlgebraLabel::*;
            let labels = [Base, Complexification, Quaternion];
            let mut cells = Vec::new();
            let mut rows = Vec::new();
            for a in labels {
                for b in labels {
                    let blocks = real_division_blocks(DivisionAlgebraClass::of(a), DivisionAlgebraClass::of(b))
                        .map_err(invalid)?;
                    let names: Vec<String> = blocks.iter().map(|x| real_name(x.class.label).to_string()).collect();
                    rows.push(vec![real_name(a).into(), real_name(b).into(), sum_names(&names)]);
                    cells.push(json!({
                        "left": real_name(a), "right": real_name(b), "product": names,
                        "matrix_sizes": blocks.iter().map(|x| x.matrix_size).collect::<Vec<_>>(),
                    }));
                }
            }
            Ok((json!({"base": "Vect_R", "table": cells}), md_table(&["left", "right", "product"], &rows)))
        }
        Fusion2Cmd::Ffield { p, q, r } => {
            let prod = finite_field_tensor(*p, *q, *r).map_err(invalid)?;
            let names: Vec<String> = prod.summands.iter().map(|s| s.label.to_string()).collect();
            let mut md = format!("Vect_F{p}^{q} x Vect_F{p}^{r} = {}\n", sum_names(&names));
            if let Some(n) = &prod.note {
                md.push_str(&format!("\nnote: {n}\n"));
            }
            Ok((json!({"p": p, "q": q, "r": r, "product": names, "note": prod.note}), md))
        }
        Fusion2Cmd::Pointed { p, zeta, query } => {
            let ac0 = FieldProfile::alg_closed(0).expect("ac0");
            let g = FiniteAbelianGroup::new(vec![*p]).map_err(|e| usage(e.to_string()))?;
            if *zeta >= *p {
                return Err(usage(format!("zeta exponent must lie in 0..{p}")));
            }
            let classes = module_classes(&g, &ac0).map_err(invalid)?;
            let braiding = BraidingParam { p: *p, zeta_exponent: *zeta };
            let wanted: Option<(String, String)> = match query {
                Some(q) => {
                    let (a, b) = q.split_once(',').ok_or_else(|| usage("--query expects A,B"))?;
                    Some((a.trim().to_string(), b.trim().to_string()))
                }
                None => None,
            };
            let mut cells = Vec::new();
            let mut rows = Vec::new();
            for a in &classes {
                for b in &classes {
                    let (na, nb) = (cyclic_class_name(a, *p), cyclic_class_name(b, *p));
                    if wanted.as_ref().is_some_and(|(x, y)| *x != na || *y != nb) {
                        continue;
                    }
                    let prod = pointed_braided_product(*p, braiding, a, b).map_err(invalid)?;
                    let names: Vec<String> = prod.summands.iter().map(|s| cyclic_class_name(s, *p)).collect();
                    rows.push(vec![na.clone(), nb.clone(), sum_names(&names)]);
                    cells.push(json!({"left": na, "right": nb, "product": names}));
                }
            }
            if cells.is_empty() {
                return Err(usage(format!("no simple objects match {query:?}")));
            }
            let md = md_table(&["left", "right", "product"], &rows);
            Ok((json!({"p": p, "zeta_exponent": zeta, "table": cells}), md))
        }
    }
}

// ---- field ----

fn field_cmd(c: &FieldCmd, field: Option<&FieldProfile>) -> Res {
    let FieldCmd::Info { max_dim } = c;
    let field = field.ok_or_else(|| usage("field info requires --field"))?;
    let closure = classify_finite_separable_closure(field);
    let divs = division_algebra_classes(field, *max_dim).map_err(invalid)?;
    let names: Vec<String> = divs.iter().map(|d| d.label.to_string()).collect();
    let md = format!("{field}: separable closure {closure:?}; division algebras up to dim {max_dim}: {}\n", names.join(", "));
    Ok((json!({"field": field, "separable_closure": closure, "division_algebras": divs}), md))
}
