//! Command bodies. Each command fills an [`Output`]: informational lines
//! and a combined law report, printed once at the end.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use trilie::axioms::{self, CheckReport, Report};
use trilie::catalog;
use trilie::constructions::{self as cons, RTarget};
use trilie::derivations::{self, DerivationSpace};
use trilie::format::{self, Document, FormatError, ReportFormat};
use trilie::linalg::{fmt_vec, Matrix, Subspace};
use trilie::model::{AAction, RinehartTriple, ThreeLie};

use crate::{AnalyzeKind, ConstructKind, DeriveKind};

pub struct Output {
    style: ReportFormat,
    witness_limit: usize,
    info: Vec<(String, String)>,
    report: Report,
    body: String,
}

impl Output {
    pub fn new(style: ReportFormat, witness_limit: usize) -> Self {
        Output { style, witness_limit, info: Vec::new(), report: Report::default(), body: String::new() }
    }

    fn info(&mut self, key: &str, value: impl Into<String>) {
        self.info.push((key.to_string(), value.into()));
    }

    fn add(&mut self, prefix: &str, r: Report) {
        self.report.extend(if prefix.is_empty() { r } else { r.prefixed(prefix) });
    }

    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    /// Info lines and the report, without the banner.
    fn summary(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.info {
            match self.style {
                ReportFormat::Text => s.push_str(&format!("{k}: {v}\n")),
                ReportFormat::Machine => s.push_str(&format!("{}={v}\n", k.to_uppercase().replace([' ', '-'], "_"))),
            }
        }
        s.push_str(&format::render_report(&self.report, self.style, self.witness_limit));
        s
    }

    pub fn finish(&self) -> String {
        let mut s = String::new();
        if self.style == ReportFormat::Text && self.body.is_empty() {
            s.push_str(&format!("trilie {}\n", env!("CARGO_PKG_VERSION")));
        }
        if self.body.is_empty() {
            s.push_str(&self.summary());
        } else {
            s.push_str(&self.body);
        }
        s
    }
}

fn read_doc(file: &str) -> Result<Document> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        fs::read_to_string(file).with_context(|| format!("reading {file}"))?
    };
    Ok(format::parse(&text)?)
}

/// A single yes/no law, for facts that are not tuple sweeps.
fn verdict(law: &str, passed: bool) -> CheckReport {
    CheckReport {
        law: law.to_string(),
        pattern: "",
        passed,
        witnesses: Vec::new(),
        failures: u64::from(!passed),
        tuples_checked: 1,
    }
}

fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| fmt_vec(m.row(i))).collect();
    format!("[{}]", rows.join(","))
}

fn fmt_basis(s: &Subspace) -> String {
    let vs: Vec<String> = s.basis().iter().map(|v| fmt_vec(v)).collect();
    format!("[{}]", vs.join(","))
}

fn acting_algebra<'d>(doc: &'d Document, l: &str) -> &'d str {
    doc.action_on(l).map(|(a, _)| a).expect("a triple has an action block")
}

// ---------------------------------------------------------------------------
// validate

pub fn validate(out: &mut Output, file: &str) -> Result<()> {
    let doc = read_doc(file)?;
    let mut deferred: Option<anyhow::Error> = None;
    let mut defer = |out: &mut Output, what: &str, e: anyhow::Error| {
        out.info("skipped", format!("{what}: {e:#}"));
        deferred.get_or_insert(e);
    };
    let triples: Vec<String> = doc.triple_names().into_iter().map(String::from).collect();
    let pairs: Vec<String> = doc.lie_pair_names().into_iter().map(String::from).collect();
    let betas: Vec<(String, String)> = doc.beta_blocks().into_iter().map(|(a, b)| (a.into(), b.into())).collect();
    let mut covered: Vec<String> = Vec::new();

    for l in &triples {
        let t = doc.triple(l)?;
        let r = axioms::check_rinehart(&t);
        let ok = r.passed();
        out.add(l, r);
        if ok {
            out.add(l, axioms::check_nr_identities(&t)?);
        } else {
            out.info("skipped", format!("{l}: identity consequences need a certified triple"));
        }
        covered.push(l.clone());
        covered.push(acting_algebra(&doc, l).to_string());
    }
    for g in &pairs {
        let p = doc.lie_pair(g)?;
        out.add(g, axioms::check_lie_rinehart(&p));
        covered.push(g.clone());
        covered.push(acting_algebra(&doc, g).to_string());
    }
    for (l, r) in &betas {
        covered.push(r.clone());
        if doc.three_lie(l).is_some() {
            let ad = doc.action_data(l, r)?;
            let res = if ad.r.is_abelian() { axioms::check_module(&ad) } else { axioms::check_action(&ad) };
            match res {
                Ok(rep) => out.add(r, rep),
                Err(e) => defer(out, r, e.into()),
            }
        } else {
            let ad = doc.lie_action_data(l, r)?;
            match axioms::check_lie_action(&ad) {
                Ok(rep) => out.add(r, rep),
                Err(e) => defer(out, r, e.into()),
            }
        }
    }
    for (name, src, dst, map) in doc.homs() {
        let is_crossed = betas.iter().any(|(l, r)| l == dst && r == src);
        let res = if is_crossed && doc.three_lie(dst).is_some() {
            let (_, cm) = doc.crossed_module()?;
            axioms::check_crossed_module(&cm)
        } else if is_crossed {
            let (_, cm) = doc.lie_crossed_module()?;
            axioms::check_lie_crossed_module(&cm)
        } else if triples.iter().any(|t| t == src) && triples.iter().any(|t| t == dst) {
            axioms::check_homomorphism(map, &doc.triple(src)?, &doc.triple(dst)?)
        } else if pairs.iter().any(|t| t == src) && pairs.iter().any(|t| t == dst) {
            axioms::check_lie_rinehart_hom(map, &doc.lie_pair(src)?, &doc.lie_pair(dst)?)
        } else {
            out.info("skipped", format!("{name}: no checker for a map {src} -> {dst}"));
            continue;
        };
        match res {
            Ok(rep) => out.add(name, rep),
            Err(e) => defer(out, name, e.into()),
        }
    }
    for b in &doc.blocks {
        match b {
            format::Block::ThreeLie { name, algebra } if !covered.contains(name) => {
                out.add(name, axioms::check_3lie(algebra));
            }
            format::Block::Lie { name, algebra } if !covered.contains(name) => {
                out.add(name, axioms::check_lie(algebra));
            }
            format::Block::Assoc { name, algebra } if !covered.contains(name) => {
                out.add(name, axioms::check_comm_assoc(algebra));
            }
            _ => {}
        }
    }
    for (name, within, s) in doc.subspaces() {
        if triples.iter().any(|t| t == within) {
            let c = cons::classify(&doc.triple(within)?, &s);
            out.info("subspace", format!("{name} (dim {}) is {}", s.dim(), c.label()));
        }
    }
    if doc.blocks.is_empty() {
        out.info("note", "empty document");
    }
    match deferred {
        Some(e) if out.passed() => Err(e),
        _ => Ok(()),
    }
}

// ---------------------------------------------------------------------------
// construct

/// The second structure carrying an action of `a`, used as the target of
/// `W`; `F` with the unit acting when there is none.
fn w_target(doc: &Document, l: &str, a: &str) -> (RTarget, AAction) {
    for name in doc.triple_names().into_iter().filter(|n| *n != l) {
        if let (Some(alg), Some((b, act))) = (doc.three_lie(name), doc.action_on(name)) {
            if b == a {
                return (RTarget::Three(alg.clone()), act.clone());
            }
        }
    }
    for name in doc.lie_pair_names() {
        if let (Some(alg), Some((b, act))) = (doc.lie(name), doc.action_on(name)) {
            if b == a {
                return (RTarget::Lie(alg.clone()), act.clone());
            }
        }
    }
    let m = doc.assoc(a).map_or(1, |x| x.dim());
    (RTarget::Three(ThreeLie::abelian(1)), AAction::unit_only(m, 1))
}

fn first_subspace(doc: &Document, l: &str) -> Result<(String, Subspace)> {
    doc.subspaces()
        .into_iter()
        .find(|(_, w, _)| *w == l)
        .map(|(n, _, s)| (n.to_string(), s))
        .ok_or_else(|| FormatError::Missing(format!("no `@subspace ... in {l}` block")).into())
}

fn crossed_doc(l: &str, a: &str, r: &str, cm: &trilie::model::CrossedModuleData) -> Result<Document> {
    let mut d = Document::new();
    d.push_action_data(l, a, r, &cm.action)?;
    d.push_hom("d", r, l, &cm.partial)?;
    Ok(d)
}

pub fn construct(out: &mut Output, kind: ConstructKind, file: &str, target: Option<&Path>) -> Result<()> {
    let doc = read_doc(file)?;
    let result = match kind {
        ConstructKind::Semidirect => {
            let (l, r) = doc
                .beta_blocks()
                .into_iter()
                .find(|(l, _)| doc.three_lie(l).is_some())
                .ok_or_else(|| FormatError::Missing("no `@beta L on R` block".into()))?;
            let ad = doc.action_data(l, r)?;
            let sd = cons::semidirect(&ad)?;
            let name = format!("{l}_{r}");
            out.add(&name, axioms::check_rinehart(&sd.triple));
            let mut d = Document::new();
            d.push_triple(&name, acting_algebra(&doc, l), &sd.triple)?;
            d
        }
        ConstructKind::Tensor | ConstructKind::EExt => {
            let (l, t) = doc.primary_triple()?;
            let (name, s) = match kind {
                ConstructKind::Tensor => (format!("{l}_tensor"), cons::tensor_extension(&t)?),
                _ => (format!("{l}_E"), cons::e_extension(&t)?),
            };
            out.add(&name, axioms::check_rinehart(&s));
            let mut d = Document::new();
            d.push_triple(&name, acting_algebra(&doc, &l), &s)?;
            d
        }
        ConstructKind::Wedge => {
            let (l, t) = doc.primary_triple()?;
            let (ws, pair) = cons::wedge_lie_rinehart(&t)?;
            let name = format!("{l}_wedge");
            out.info("dimension", pair.g.dim().to_string());
            out.info("J dimension", ws.j.dim().to_string());
            out.info("auxiliary identity", if ws.auxiliary.passed { "holds" } else { "fails" });
            out.add(&name, ws.descent.clone());
            out.add(&name, axioms::check_lie_rinehart(&pair));
            let mut d = Document::new();
            d.push_lie_pair(&name, acting_algebra(&doc, &l), &pair)?;
            d
        }
        ConstructKind::WSpace | ConstructKind::QuotientW => {
            let (l, t) = doc.primary_triple()?;
            let a = acting_algebra(&doc, &l).to_string();
            let (rt, alpha_r) = w_target(&doc, &l, &a);
            let ws = cons::build_w(&t, &rt, &alpha_r)?;
            let mut d = Document::new();
            if let ConstructKind::WSpace = kind {
                out.info("dimension", ws.dim().to_string());
                out.add("W", ws.certification.clone());
                d.push_lie_pair("W", &a, &ws.pair)?;
            } else {
                let wb = cons::quotient_w(&ws)?;
                out.info("dimension", wb.dim().to_string());
                out.add("Wbar", wb.descent.clone());
                out.add("Wbar", wb.certification.clone());
                d.push_lie_pair("Wbar", &a, &wb.pair)?;
            }
            d
        }
        ConstructKind::Quotient => {
            let (l, t) = doc.primary_triple()?;
            let (_, b) = first_subspace(&doc, &l)?;
            let q = cons::quotient_triple(&t, &b)?;
            let name = format!("{l}_quotient");
            out.add(&name, axioms::check_rinehart(&q));
            let mut d = Document::new();
            d.push_triple(&name, acting_algebra(&doc, &l), &q)?;
            d
        }
        ConstructKind::CrossedIdeal => {
            let (l, t) = doc.primary_triple()?;
            let (n, s) = first_subspace(&doc, &l)?;
            let cm = cons::crossed_from_ideal(&t, &s)?;
            out.add("d", axioms::check_crossed_module(&cm)?);
            crossed_doc(&l, acting_algebra(&doc, &l), &n, &cm)?
        }
        ConstructKind::CrossedEpi => {
            let triples = doc.triple_names();
            let (_, src, dst, map) = doc
                .homs()
                .into_iter()
                .find(|(_, s, d, _)| triples.contains(s) && triples.contains(d))
                .ok_or_else(|| FormatError::Missing("no `@hom` between two triples".into()))?;
            let (r_t, l_t) = (doc.triple(src)?, doc.triple(dst)?);
            let cm = cons::crossed_from_central_epi(map, &r_t, &l_t)?;
            out.add("d", axioms::check_crossed_module(&cm)?);
            crossed_doc(dst, acting_algebra(&doc, dst), src, &cm)?
        }
        ConstructKind::CrossedWedge => {
            let (l, t) = doc.primary_triple()?;
            let cw = cons::crossed_wedge(&t)?;
            out.info("kernel dimension", cw.kernel.dim().to_string());
            out.info("center dimension", cw.center.dim().to_string());
            out.add("d", cw.report.clone());
            let mut extra = Report::new(vec![verdict("crossed.kernel-is-center", cw.kernel_is_center)]);
            extra = extra.prefixed("d");
            out.add("", extra);
            let a = acting_algebra(&doc, &l);
            let (wb, r) = (format!("{l}_Wbar"), format!("{l}_wedge"));
            let mut d = Document::new();
            d.push_lie_action_data(&wb, a, &r, &cw.cm.action)?;
            d.push_hom("d", &r, &wb, &cw.cm.partial)?;
            d
        }
    };
    emit(out, &result, target)
}

/// The structure goes to `target`, or to stdout behind the report written
/// as comments, so that the output parses again.
fn emit(out: &mut Output, d: &Document, target: Option<&Path>) -> Result<()> {
    match target {
        Some(p) => {
            fs::write(p, d.to_string()).with_context(|| format!("writing {}", p.display()))?;
            Ok(())
        }
        None => {
            let mut body = String::new();
            if out.style == ReportFormat::Text {
                body.push_str(&format!("# trilie {}\n", env!("CARGO_PKG_VERSION")));
            }
            for line in out.summary().lines() {
                body.push_str("# ");
                body.push_str(line);
                body.push('\n');
            }
            body.push('\n');
            body.push_str(&d.to_string());
            out.body = body;
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// derive

fn space_info(out: &mut Output, what: &str, s: &DerivationSpace) {
    out.info(&format!("{what} dimension"), s.dim().to_string());
    for (i, m) in s.matrices().iter().enumerate() {
        out.info(&format!("{what} {}", i + 1), fmt_matrix(m));
    }
}

/// The triple when there is one, otherwise the first 3-Lie algebra.
fn some_three_lie(doc: &Document) -> Result<ThreeLie> {
    if let Ok((_, t)) = doc.primary_triple() {
        return Ok(t.l);
    }
    doc.blocks
        .iter()
        .find_map(|b| match b {
            format::Block::ThreeLie { algebra, .. } => Some(algebra.clone()),
            _ => None,
        })
        .ok_or_else(|| FormatError::Missing("no 3-Lie algebra".into()).into())
}

pub fn derive(out: &mut Output, kind: DeriveKind, file: &str) -> Result<()> {
    let doc = read_doc(file)?;
    match kind {
        DeriveKind::Der => {
            let l = some_three_lie(&doc)?;
            space_info(out, "der", &derivations::compute_der(&l));
        }
        DeriveKind::DerA => {
            let (_, t) = doc.primary_triple()?;
            space_info(out, "der-a", &derivations::compute_der_a(&t)?);
        }
        DeriveKind::DerBeta => {
            let (l, r) = doc
                .beta_blocks()
                .into_iter()
                .find(|(l, _)| doc.three_lie(l).is_some())
                .ok_or_else(|| FormatError::Missing("no `@beta L on R` block".into()))?;
            let ad = doc.action_data(l, r)?;
            space_info(out, "der-beta", &derivations::compute_der_beta(&ad)?);
        }
        DeriveKind::Inner => {
            let l = some_three_lie(&doc)?;
            let inner = derivations::inner_derivation_algebra(&l);
            out.info("inner dimension", inner.space.dim().to_string());
            let n = l.dim();
            for (i, v) in inner.space.basis().iter().enumerate() {
                out.info(&format!("inner {}", i + 1), fmt_matrix(&Matrix::from_flat(n, n, v.clone())));
            }
            out.add("", Report::new(vec![inner.closure]));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// analyze

fn triple_and_a(doc: &Document) -> Result<(String, RinehartTriple)> {
    Ok(doc.primary_triple()?)
}

pub fn analyze(out: &mut Output, kind: AnalyzeKind, file: &str) -> Result<()> {
    let doc = read_doc(file)?;
    match kind {
        AnalyzeKind::Centers => {
            let (_, t) = triple_and_a(&doc)?;
            let c = cons::centers(&t)?;
            out.info("z_rho dimension", c.z_rho.dim().to_string());
            out.info("z_rho basis", fmt_basis(&c.z_rho));
            out.info("z_rho is", c.z_rho_class.label());
            out.info("z_la dimension", c.z_la.dim().to_string());
            out.info("z_la basis", fmt_basis(&c.z_la));
            out.info("z_la a-stable", c.z_la_is_ideal.to_string());
        }
        AnalyzeKind::Ideals => {
            let (l, t) = triple_and_a(&doc)?;
            let subs: Vec<(String, Subspace)> = doc
                .subspaces()
                .into_iter()
                .filter(|(_, w, _)| *w == l)
                .map(|(n, _, s)| (n.to_string(), s))
                .collect();
            if subs.is_empty() {
                bail!(FormatError::Missing(format!("no `@subspace ... in {l}` block")));
            }
            for (name, s) in &subs {
                let c = cons::classify(&t, s);
                out.info(&name.to_string(), format!("dim {}, {}", s.dim(), c.label()));
                if c.ideal() {
                    let q = cons::quotient_triple(&t, s)?;
                    out.add(&format!("{name}_quotient"), axioms::check_rinehart(&q));
                }
            }
            if let [(bn, b), (cn, c), ..] = subs.as_slice() {
                let ic = cons::ideal_calculus(&t, b, c)?;
                out.info(&format!("{bn}+{cn}"), format!("dim {}, {}", ic.sum.dim(), ic.sum_class.label()));
                out.info(
                    &format!("{bn}^{cn}"),
                    format!("dim {}, {}", ic.intersection.dim(), ic.intersection_class.label()),
                );
            }
        }
        AnalyzeKind::Hom => {
            let triples = doc.triple_names();
            let (name, src, dst, map) = doc
                .homs()
                .into_iter()
                .find(|(_, s, d, _)| triples.contains(s) && triples.contains(d))
                .ok_or_else(|| anyhow!(FormatError::Missing("no `@hom` between two triples".into())))?;
            let hc = cons::hom_calculus(map, &doc.triple(src)?, &doc.triple(dst)?)?;
            out.info("kernel", format!("dim {}, {}", hc.kernel.dim(), hc.kernel_class.label()));
            out.info("image", format!("dim {}, {}", hc.image.dim(), hc.image_class.label()));
            out.info("induced bijective", hc.induced_bijective.to_string());
            out.add(&format!("{name}_induced"), hc.induced_report.clone());
            out.add(&format!("{name}_quotient"), axioms::check_rinehart(&hc.quotient));
            out.add("", Report::new(vec![verdict(&format!("{name}.induced-bijective"), hc.induced_bijective)]));
        }
        AnalyzeKind::Crossed => {
            let (name, cm) = doc.crossed_module()?;
            let ca = cons::crossed_analysis(&cm)?;
            out.info("image", format!("dim {}, {}", ca.image.dim(), ca.image_class.label()));
            out.info("kernel", format!("dim {}", ca.kernel.dim()));
            out.add(&name, ca.report());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// examples

/// The catalog entry as a document; `A` is called `F` when it is the field.
pub fn example_document(name: &str) -> Option<Document> {
    let t = catalog::get(name)?;
    let a = if t.dim_a() == 1 { "F" } else { "A" };
    let mut d = Document::new();
    d.push_triple(name, a, &t).expect("fresh document");
    Some(d)
}

pub fn examples_list(out: &mut Output) -> Result<()> {
    let mut s = String::new();
    for n in catalog::NAMES {
        s.push_str(&format!("{n}\t{}\n", catalog::describe(n).unwrap_or("")));
    }
    out.body = s;
    Ok(())
}

pub fn examples_emit(out: &mut Output, name: &str) -> Result<()> {
    let d = example_document(name)
        .ok_or_else(|| FormatError::Missing(format!("no example named `{name}`; try `examples list`")))?;
    out.body = d.to_string();
    Ok(())
}
