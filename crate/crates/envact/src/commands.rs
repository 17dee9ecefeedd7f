//! The command pipelines behind the CLI.

use std::collections::BTreeMap;

use envact_core::partial_action::{Check, Witness};
use envact_core::sets::{self, PointSet};
use envact_core::universal::{embed_with, EmbeddingImage};
use envact_core::{
    embed_simple, image_globalization, separates_points, shift_example, verify_embedding,
    BaseChoice, EnvelopingSpace, PartialAction,
};
use serde_json::{json, Value};

use crate::document::Document;
use crate::dot;
use crate::error::CliError;
use crate::report::{AuditLine, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Globalize,
    Diagnose,
    Embed,
    ShiftDemo,
    ExportDot,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Globalize => "globalize",
            Command::Diagnose => "diagnose",
            Command::Embed => "embed",
            Command::ShiftDemo => "shift-demo",
            Command::ExportDot => "export-dot",
        }
    }

    pub fn needs_input(self) -> bool {
        self != Command::ShiftDemo
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub n: usize,
    pub base: BaseChoice,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            n: 4,
            base: BaseChoice::Full,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub report: Report,
    /// The class graph of `X_G`, when the pipeline builds one.
    pub dot: Option<String>,
}

pub fn run(command: Command, doc: Option<&Document>, opts: &Options) -> Result<Output, CliError> {
    if command == Command::ShiftDemo {
        return shift_demo(opts.n);
    }
    let doc =
        doc.ok_or_else(|| CliError::Schema(format!("{} needs an input document", command.name())))?;
    let pa = doc.build()?;
    let mut report = Report::new(command.name(), &doc.to_canonical());
    describe_input(&mut report, &pa);
    let mut dot = None;
    match command {
        Command::Validate => validate(&mut report, &pa),
        Command::Globalize => {
            let env = envelope(&pa)?;
            globalize(&mut report, &env);
            dot = Some(dot::class_graph(&env));
        }
        Command::Diagnose => {
            let env = envelope(&pa)?;
            diagnose(&mut report, &env);
            dot = Some(dot::class_graph(&env));
        }
        Command::Embed => embed(&mut report, &pa, opts.base)?,
        Command::ExportDot => {
            let env = envelope(&pa)?;
            report.set("envelope_size", env.len());
            report.set("edges", env.class_graph().len());
            dot = Some(dot::class_graph(&env));
        }
        Command::ShiftDemo => unreachable!(),
    }
    Ok(Output { report, dot })
}

fn envelope(pa: &PartialAction) -> Result<EnvelopingSpace, CliError> {
    EnvelopingSpace::build(pa).map_err(CliError::domain)
}

fn describe_input(report: &mut Report, pa: &PartialAction) {
    report.set("group_order", pa.group().order());
    report.set("space_size", pa.space().size());
}

fn set_json(s: &PointSet) -> Value {
    json!(sets::elements(s))
}

fn witness_json(w: &Witness) -> Value {
    match *w {
        Witness::Element { g } => json!({ "g": g }),
        Witness::Point { g, x } => json!({ "g": g, "x": x }),
        Witness::Pair { g, h } => json!({ "g": g, "h": h }),
        Witness::Triple { g, h, x } => json!({ "g": g, "h": h, "x": x }),
    }
}

fn check_json(c: &Check) -> Value {
    json!({ "passed": c.passed, "witness": c.witness.as_ref().map(witness_json) })
}

fn validate(report: &mut Report, pa: &PartialAction) {
    let v = pa.validate();
    report.set("valid", v.is_valid());
    report.set("axioms_hold", v.axioms_hold());
    report.set("family_holds", v.family_holds());
    report.set("topological", v.topological());
    let checks: serde_json::Map<String, Value> = v
        .checks()
        .iter()
        .map(|(name, c)| (name.to_string(), check_json(c)))
        .collect();
    report.set("checks", Value::Object(checks));
    report.set("continuous_per_element", v.continuous_per_element);
    report.set("continuous_joint", v.continuous_joint);
    for (name, c) in v.checks() {
        if !c.passed {
            let at = c.witness.as_ref().map(witness_json).unwrap_or(Value::Null);
            report.flags.push(format!("input fails {name} at {at}"));
        }
    }

    report.audit(AuditLine::holds(
        "pointwise-iff-family",
        "the pointwise axioms hold iff the family conditions hold",
        v.forms_agree(),
    ));
    report.audit(AuditLine::implication(
        "inverse-axiom-gives-shape",
        "m_g^-1 inverting m_g forces dom m_g = ran m_{g^-1}",
        v.pa1.passed,
        v.family_shape.passed,
    ));
    report.audit(AuditLine::holds(
        "joint-continuity-iff-per-element",
        "m is continuous on G*X iff every m_g is continuous on its domain",
        v.continuity_reduction_holds(),
    ));
}

fn class_table(env: &EnvelopingSpace) -> Value {
    let group = env.source().group();
    let n = env.source().space().size();
    let classes: Vec<Value> = env
        .carrier()
        .classes()
        .iter()
        .enumerate()
        .map(|(c, members)| {
            let members: Vec<String> = members
                .iter()
                .map(|&k| format!("[{},{}]", group.name(k / n), k % n))
                .collect();
            json!({ "class": c, "representative": dot::class_label(env, c), "members": members })
        })
        .collect();
    Value::Array(classes)
}

fn globalize(report: &mut Report, env: &EnvelopingSpace) {
    let pa = env.source();
    let group = pa.group();
    report.set("envelope_size", env.len());
    report.set("product_size", group.order() * pa.space().size());
    report.set("classes", class_table(env));
    report.set("iota", json!(env.iota()));
    let mu: BTreeMap<String, Vec<usize>> = group
        .elements()
        .map(|g| {
            (
                group.name(g).to_string(),
                (0..env.len()).map(|c| env.mu().apply(g, c)).collect(),
            )
        })
        .collect();
    report.set("mu", json!(mu));
    let opens: Vec<Value> = env
        .carrier()
        .space()
        .minimal_opens()
        .iter()
        .map(set_json)
        .collect();
    report.set("minimal_opens", Value::Array(opens));

    let r = env.verify();
    for (name, ok) in r.items() {
        report.audit(AuditLine::holds(name, envelope_claim(name), ok));
    }
}

fn envelope_claim(name: &str) -> &'static str {
    match name {
        "iota-homeomorphism" => "x -> [1,x] is a homeomorphism onto its image",
        "induced-action-equivalent" => {
            "the action induced by mu on iota(X) is isomorphic to m via iota"
        }
        "iota-equivariant" => "mu_g iota = iota m_g on X_{g^-1}",
        "relation-equals-hat-orbits" => {
            "the gluing relation equals the orbit relation of the hat action"
        }
        "union-find-equals-literal-relation" => {
            "the computed classes are exactly the gluing relation"
        }
        "saturation-of-image-is-everything" => "G.iota(X) = X_G",
        "quotient-map-continuous" => "q: G x X -> X_G is continuous",
        "quotient-map-open" => "q: G x X -> X_G is open",
        "mu-homeomorphisms" => "every mu_g is a homeomorphism of X_G",
        "size-bound" => "|X_G| <= |G||X|, with equality iff no element other than 1 acts anywhere",
        _ => "",
    }
}

fn diagnose(report: &mut Report, env: &EnvelopingSpace) {
    let d = env.diagnose();
    report.set("envelope_size", env.len());
    report.set("hausdorff", d.hausdorff);
    report.set("t1", d.t1);
    report.set("regular", d.regular);
    report.set("discrete", d.discrete);
    report.set("ehat_closed", d.ehat_closed);
    report.set(
        "gstar",
        json!({ "open": d.gstar.open, "closed": d.gstar.closed, "clopen": d.gstar.clopen }),
    );
    report.set("all_ranges_closed", d.all_ranges_closed);
    report.set(
        "space",
        json!({
            "t0": d.space.t0,
            "t1": d.space.t1,
            "hausdorff": d.space.hausdorff,
            "regular": d.space.regular,
        }),
    );
    report.set("quotient_map_open", d.quotient_open);
    for a in &d.audits {
        report.audit(a.into());
    }
    report.notes.extend(d.notes.iter().map(|s| s.to_string()));
}

fn pi_json(emb: &EmbeddingImage, label: impl Fn(usize) -> String) -> Value {
    let map: serde_json::Map<String, Value> = emb
        .points
        .iter()
        .enumerate()
        .map(|(x, tuple)| (label(x), Value::Array(tuple.iter().map(set_json).collect())))
        .collect();
    Value::Object(map)
}

fn embedding_audits(
    report: &mut Report,
    prefix: &str,
    pa: &PartialAction,
    emb: &EmbeddingImage,
) -> Result<(), CliError> {
    let r = verify_embedding(pa, emb);
    for (name, ok) in r.items() {
        let claim = match name {
            "forward-equivariant" => "theta(g, pi(x)) = pi(g.x) for x in X_{g^-1}",
            "reflection" => "theta(g, pi(x)) = pi(y) forces g.x defined and equal to y",
            "induced-action-matches" => "theta restricted to pi[X] is m transported by pi",
            _ => "G^x is the union of the G^x_n",
        };
        report.audit(AuditLine::holds(&format!("{prefix}{name}"), claim, ok));
    }
    let s = image_globalization(pa, emb).map_err(CliError::domain)?;
    report.set(&format!("{prefix}saturation_size"), s.saturation.len());
    report.set(&format!("{prefix}envelope_size"), s.envelope_size);
    report.audit(AuditLine::holds(
        &format!("{prefix}envelope-maps-onto-saturation"),
        "F([g,x]) = theta(g, pi(x)) is a well defined equivariant bijection X_G -> G.pi[X]",
        s.all_hold(),
    ));
    Ok(())
}

fn embed(report: &mut Report, pa: &PartialAction, base: BaseChoice) -> Result<(), CliError> {
    let emb = embed_with(pa, base).map_err(CliError::domain)?;
    report.set(
        "base",
        match base {
            BaseChoice::Full => "full",
            BaseChoice::Minimal => "minimal",
        },
    );
    report.set("arity", emb.arity);
    report.set(
        "base_sets",
        Value::Array(emb.base.iter().map(set_json).collect()),
    );
    report.set("pi", pi_json(&emb, |x| x.to_string()));
    let clopen = pa
        .group()
        .elements()
        .all(|g| pa.space().is_clopen(pa.range(g)));
    report.set("clopen_domains", clopen);
    embedding_audits(report, "", pa, &emb)?;

    let separates = separates_points(pa);
    report.set("separates_points", separates);
    if separates {
        let simple = embed_simple(pa).map_err(CliError::domain)?;
        report.set("simple_pi", pi_json(&simple, |x| x.to_string()));
        embedding_audits(report, "simple-", pa, &simple)?;
    }
    Ok(())
}

fn shift_demo(n: usize) -> Result<Output, CliError> {
    let doc = Document::shift(n);
    let ex = shift_example(n).map_err(CliError::domain)?;
    let pa = &ex.action;
    let mut report = Report::new(Command::ShiftDemo.name(), &doc.to_canonical());
    report.set("n", n);
    report.set("words", ex.words.len());
    report.set("valid", pa.is_valid());
    report.set("separates_points", separates_points(pa));

    let env = envelope(pa)?;
    report.set("envelope_size", env.len());
    let d = env.diagnose();
    report.set("discrete", d.discrete);
    report.set("hausdorff", d.hausdorff);

    let simple = embed_simple(pa).map_err(CliError::domain)?;
    report.set("pi", pi_json(&simple, |x| ex.word_string(x)));
    let mut image: Vec<PointSet> = simple.points.iter().map(|t| t[0].clone()).collect();
    image.sort_by(sets::cmp_lex);
    let image_ok = image == ex.expected_image();
    report.set("image_is_sets_containing_0", image_ok);

    let sat = image_globalization(pa, &simple).map_err(CliError::domain)?;
    let flat: Vec<PointSet> = sat.saturation.iter().map(|t| t[0].clone()).collect();
    let saturation_ok = flat == ex.expected_saturation();
    report.set("saturation_size", flat.len());
    report.set("saturation_is_nonempty_subsets", saturation_ok);
    report.set("f_bijection", sat.is_bijection());
    report.set("f_equivariant", sat.equivariant);

    let ranges_ok = (0..n).all(|m| pa.range(m) == &ex.expected_range(m));
    let g_sets_ok = (0..ex.words.len()).all(|x| pa.g_set(x) == ex.expected_g_set(x));
    report.set("ranges_match_formula", ranges_ok);
    report.set("g_sets_match_formula", g_sets_ok);

    let full = (1usize << n) - 1;
    report.audit(AuditLine::holds(
        "word-count",
        "|W| = 2^(n-1)",
        ex.words.len() == 1 << (n - 1),
    ));
    report.audit(AuditLine::holds(
        "ranges",
        "W_m = {x in W : x(-m) = 0} and G^x = {m : x(m) = 0}",
        ranges_ok && g_sets_ok,
    ));
    report.audit(AuditLine::holds(
        "separates-points",
        "the W_m separate points",
        separates_points(pa),
    ));
    report.audit(AuditLine::holds(
        "envelope-size",
        "|X_G| = 2^n - 1",
        env.len() == full,
    ));
    report.audit(AuditLine::holds(
        "envelope-verified",
        "every enveloping-space check holds",
        env.verify().all_hold(),
    ));
    report.audit(AuditLine::holds(
        "image",
        "pi[W] = {A subset of Z_n : 0 in A}",
        image_ok,
    ));
    report.audit(AuditLine::holds(
        "saturation",
        "G.pi[W] is the set of nonempty subsets of Z_n",
        saturation_ok,
    ));
    report.audit(AuditLine::holds(
        "envelope-maps-onto-saturation",
        "F: X_G -> G.pi[W] is an equivariant bijection",
        sat.all_hold(),
    ));
    let dot = Some(dot::class_graph(&env));
    Ok(Output { report, dot })
}
