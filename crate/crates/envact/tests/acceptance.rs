//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p envact --test acceptance`.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use common::{corpus, groups, mutate, CosetSpace, Instance, SEED};
use envact_core::globalization::literal_relation;
use envact_core::sets;
use envact_core::{
    embed_simple, image_globalization, separates_points, shift_example, EnvelopingSpace,
    FiniteSpace, PartialAction,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CORPUS_SIZE: usize = 240;

struct Outcome {
    id: usize,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn failures(corpus: &[Instance], mut bad: impl FnMut(&Instance) -> bool) -> Vec<&str> {
    corpus
        .iter()
        .filter(|i| bad(i))
        .map(|i| i.label.as_str())
        .collect()
}

fn first(labels: &[&str]) -> String {
    labels
        .first()
        .map(|l| format!(", first: {l}"))
        .unwrap_or_default()
}

fn envelope(i: &Instance) -> EnvelopingSpace {
    EnvelopingSpace::build(&i.pa).expect("corpus instances are valid")
}

fn axiom_equivalence(corpus: &[Instance], rejected: usize, seconds: f64) -> Outcome {
    let start = Instant::now();
    let failing = failures(corpus, |i| {
        let v = i.pa.validate();
        !(v.axioms_hold() && v.family_holds() && v.forms_agree())
    });
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut broken = 0;
    let mut discrepancies = 0;
    for i in corpus {
        for _ in 0..4 {
            let v = mutate(&i.pa, &mut rng).validate();
            broken += usize::from(!v.axioms_hold());
            discrepancies += usize::from(!v.forms_agree());
        }
    }
    let elapsed = seconds + start.elapsed().as_secs_f64();
    Outcome {
        id: 1,
        title: "pointwise axioms and family form",
        pass: failing.is_empty() && discrepancies == 0 && elapsed <= 10.0,
        detail: format!(
            "{} induced instances all valid: {}; {} mutated families ({broken} violate the axioms), \
             {discrepancies} discrepancies; {rejected} topologically invalid candidates skipped; {elapsed:.2} s{}",
            corpus.len(),
            failing.is_empty(),
            corpus.len() * 4,
            first(&failing)
        ),
    }
}

fn relation_oracle(corpus: &[Instance]) -> Outcome {
    let failing = failures(corpus, |i| {
        literal_relation(&i.pa) != i.pa.hat().orbit_relation()
    });
    Outcome {
        id: 2,
        title: "gluing relation equals hat orbit relation",
        pass: failing.is_empty(),
        detail: format!(
            "{} of {} instances differ{}",
            failing.len(),
            corpus.len(),
            first(&failing)
        ),
    }
}

fn envelope_embedding(corpus: &[Instance]) -> Outcome {
    let failing = failures(corpus, |i| {
        let r = envelope(i).verify();
        !(r.iota_homeomorphism
            && r.induced_equivalent
            && r.saturation_is_everything
            && r.all_hold())
    });
    Outcome {
        id: 3,
        title: "iota embeds X and G.iota(X) = X_G",
        pass: failing.is_empty(),
        detail: format!(
            "{} of {} instances fail{}",
            failing.len(),
            corpus.len(),
            first(&failing)
        ),
    }
}

fn open_maps(corpus: &[Instance]) -> Outcome {
    let failing = failures(corpus, |i| {
        let orbit =
            i.pa.orbit_quotient()
                .map(|q| q.projection_open && q.saturation_formula);
        orbit != Ok(true)
            || !envelope(i).quotient_map_report().open
            || !i.pa.action_map_report().open
    });
    Outcome {
        id: 4,
        title: "orbit projection, q and m are open",
        pass: failing.is_empty(),
        detail: format!(
            "{} of {} instances fail{}",
            failing.len(),
            corpus.len(),
            first(&failing)
        ),
    }
}

fn hausdorff_criteria(corpus: &[Instance]) -> Outcome {
    let mut biconditional = Vec::new();
    let mut implication = Vec::new();
    let mut met = 0;
    let mut outside = 0;
    let mut outside_fail = 0;
    for i in corpus {
        let d = envelope(i).diagnose();
        if d.hausdorff != d.ehat_closed {
            biconditional.push(i.label.as_str());
        }
        if d.gstar.closed && d.space.hausdorff {
            met += 1;
            if !(d.hausdorff && d.ehat_closed) {
                implication.push(i.label.as_str());
            }
        } else if d.gstar.closed {
            outside += 1;
            outside_fail += usize::from(!d.hausdorff);
        }
    }
    let sierpinski = EnvelopingSpace::build(&PartialAction::sierpinski_z2())
        .unwrap()
        .diagnose();
    let sierpinski_ok =
        !sierpinski.hausdorff && !sierpinski.ehat_closed && sierpinski.audits_pass();
    Outcome {
        id: 5,
        title: "Hausdorff iff relation closed; closed G*X gives Hausdorff",
        pass: biconditional.is_empty() && implication.is_empty() && sierpinski_ok && met > 0,
        detail: format!(
            "biconditional fails on {}; implication (X Hausdorff, G*X closed) met on {met}, fails on {}; \
             Sierpinski Z2: hausdorff=false ehat_closed=false {sierpinski_ok}; \
             {outside} instances with G*X closed but X not Hausdorff are outside the hypothesis \
             ({outside_fail} have X_G not Hausdorff){}",
            biconditional.len(),
            implication.len(),
            first(&[biconditional.as_slice(), implication.as_slice()].concat())
        ),
    }
}

fn regularity(corpus: &[Instance]) -> Outcome {
    let mut sub = 0;
    let mut failing = Vec::new();
    let mut outside = 0;
    let mut outside_fail = 0;
    let mut nondiscrete = 0;
    for i in corpus {
        let d = envelope(i).diagnose();
        if !d.all_ranges_closed {
            continue;
        }
        if d.space.regular {
            sub += 1;
            nondiscrete += usize::from(!i.pa.space().is_discrete());
            if !d.regular {
                failing.push(i.label.as_str());
            }
        } else {
            outside += 1;
            outside_fail += usize::from(!d.regular);
        }
    }
    Outcome {
        id: 6,
        title: "closed domains on a regular space give a regular X_G",
        pass: failing.is_empty() && sub > 0,
        detail: format!(
            "sub-corpus (every X_g closed, X regular) has {sub} instances ({nondiscrete} non-discrete), \
             {} not regular; {outside} instances with closed domains on a non-regular X are outside \
             the hypothesis ({outside_fail} have X_G not regular){}",
            failing.len(),
            first(&failing)
        ),
    }
}

fn shift(ns: &[usize]) -> Outcome {
    let mut problems = Vec::new();
    let mut at_six = 0.0;
    for &n in ns {
        let start = Instant::now();
        let ex = shift_example(n).unwrap();
        let pa = &ex.action;
        let env = EnvelopingSpace::build(pa).unwrap();
        let simple = embed_simple(pa).unwrap();
        let mut image: Vec<_> = simple.points.iter().map(|t| t[0].clone()).collect();
        image.sort_by(sets::cmp_lex);
        let sat = image_globalization(pa, &simple).unwrap();
        let ok = ex.words.len() == 1 << (n - 1)
            && separates_points(pa)
            && env.len() == (1 << n) - 1
            && image == ex.expected_image()
            && sat.all_hold()
            && sat.saturation.len() == env.len();
        if !ok {
            problems.push(n);
        }
        if n == 6 {
            at_six = start.elapsed().as_secs_f64();
        }
    }
    Outcome {
        id: 7,
        title: "cyclic shift example",
        pass: problems.is_empty() && at_six <= 5.0,
        detail: format!("n in {ns:?}, failing n: {problems:?}; n = 6 took {at_six:.2} s"),
    }
}

fn g_set_translation(corpus: &[Instance]) -> Outcome {
    let failing = failures(corpus, |i| i.pa.g_set_translation_violation().is_some());
    Outcome {
        id: 8,
        title: "G^x g = G^(g^-1 x) on X_g",
        pass: failing.is_empty(),
        detail: format!(
            "{} of {} instances fail{}",
            failing.len(),
            corpus.len(),
            first(&failing)
        ),
    }
}

fn counting() -> Outcome {
    let spaces = [
        FiniteSpace::discrete(1),
        FiniteSpace::discrete(3),
        FiniteSpace::sierpinski(),
        FiniteSpace::indiscrete(2),
    ];
    let mut trivial_cases = 0;
    let mut trivial_bad = 0;
    'outer: for (_, g) in groups() {
        for s in &spaces {
            if trivial_cases == 20 {
                break 'outer;
            }
            let pa = PartialAction::trivial(g.clone(), s.clone());
            trivial_cases += 1;
            trivial_bad +=
                usize::from(EnvelopingSpace::build(&pa).unwrap().len() != g.order() * s.size());
        }
    }

    let mut global_cases = 0;
    let mut global_bad = 0;
    'outer2: for (_, g) in groups() {
        for h in g.subgroups() {
            if global_cases == 20 {
                break 'outer2;
            }
            let y = CosetSpace::new(&g, vec![h.clone(), sets::full(g.order())]);
            let u = y.action(FiniteSpace::discrete(y.len()));
            global_cases += 1;
            global_bad +=
                usize::from(EnvelopingSpace::build(u.as_partial()).unwrap().len() != y.len());
        }
    }
    Outcome {
        id: 9,
        title: "counting identities",
        pass: trivial_cases == 20 && global_cases == 20 && trivial_bad + global_bad == 0,
        detail: format!(
            "trivial: {trivial_cases} cases, {trivial_bad} with |X_G| != |G||X|; \
             global: {global_cases} cases, {global_bad} with |X_G| != |X|"
        ),
    }
}

fn cli_determinism() -> Outcome {
    let golden_path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/shift_demo_n4.json"
    );
    let golden = std::fs::read(golden_path).unwrap_or_default();
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| {
            let out = Command::new(env!("CARGO_BIN_EXE_envact"))
                .args(["shift-demo", "--n", "4", "--json"])
                .output()
                .expect("binary runs");
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    let identical = runs.windows(2).all(|w| w[0] == w[1]);
    let matches = !golden.is_empty() && runs[0] == golden;
    Outcome {
        id: 10,
        title: "shift-demo --n 4 --json is deterministic",
        pass: identical && matches,
        detail: format!("3 runs identical: {identical}; equal to golden file: {matches}"),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (corpus, rejected) = corpus(CORPUS_SIZE, SEED);
    let generation = start.elapsed().as_secs_f64();

    let outcomes = [
        axiom_equivalence(&corpus, rejected, generation),
        relation_oracle(&corpus),
        envelope_embedding(&corpus),
        open_maps(&corpus),
        hausdorff_criteria(&corpus),
        regularity(&corpus),
        shift(&[3, 4, 5, 6]),
        g_set_translation(&corpus),
        counting(),
        cli_determinism(),
    ];

    println!("acceptance suite, corpus seed {SEED:#x}");
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{status}] {}: {}", o.id, o.title, o.detail);
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("{passed}/{} criteria passed", outcomes.len());
    if passed == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
