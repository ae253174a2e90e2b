//! Batch front end for the iterated-cofiber engine.
//!
//! Each verb runs one verification or computation suite and prints a
//! canonical JSON report (sorted keys, sorted law entries) on stdout,
//! optionally writing the same bytes to a file. The exit status encodes the
//! outcome so CI can gate on it: 0 when every law holds, 1 when a law
//! fails, 2 for unusable configuration. With a fixed `--seed` a rerun
//! produces byte-identical output; `--timings` adds wall-clock data and is
//! therefore off by default.

use std::io::Write;
use std::path::PathBuf;
use std::process::exit;
use std::rc::Rc;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use icofib::cocross::{cocross, surjection_monad_morphism};
use icofib::cubes::{functor_between_posets, lambda_n, phi_n, pn, Surjection};
use icofib::fincat::{product_category, TableCategory, TableFunctor};
use icofib::gf::Matrix;
use icofib::hocolim::{
    constant_terminal_collapse, fubini, hocolim, invariance_under_objectwise_iso,
    restriction_map, singleton_index_identity,
};
use icofib::monadgen::{
    constant_zero_functor, identity_functor, precompose_product, registry,
    tensor_square_functor, verify_monad, CFunctor, ModuleMonad, MonadInstance,
};
use icofib::pnmod::{
    comonad_to_coreflective, comonads_to_module, coreflective_comparison,
    coreflective_to_comonad, module_to_comonads, BaseMor, BaseOb, CCat, CModule, CoordComonad,
    TableModule,
};
use icofib::report::Report;
use icofib::sampler::Sampler;
use icofib::targetcat::{DiagMap, Diagram, Mor, Ob, Target};

#[derive(Parser)]
#[command(
    name = "icofib",
    version,
    about = "Exact verifier and calculator for iterated-cofiber monads"
)]
struct Cli {
    #[command(subcommand)]
    command: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the monad laws of the coordinate-zeroing cube monad.
    VerifyMonad(VerifyMonadArgs),
    /// Compute one cocross effect and check it against the recursive oracle.
    Cocross(CocrossArgs),
    /// Run the colimit axiom suite and the presentation round-trips.
    Axioms(AxiomsArgs),
    /// Round-trip poset actions through their comonad families.
    ModuleRoundtrip(ModuleRoundtripArgs),
    /// Build and verify the monad morphism induced by a surjection.
    SurjectionMorphism(SurjectionMorphismArgs),
}

/// Flags shared by every verb.
#[derive(Args)]
struct Common {
    /// Field characteristic of the linear instance (must be prime).
    #[arg(long, conflicts_with = "pointed")]
    prime: Option<u64>,
    /// Use the pointed-set instance instead of the linear one.
    #[arg(long)]
    pointed: bool,
    /// Seed for all sampled data; equal seeds give byte-identical reports.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report (forfeits byte-identical reruns).
    #[arg(long)]
    timings: bool,
    /// Lift the built-in size caps that keep runs desk-scale.
    #[arg(long)]
    cap_override: bool,
}

impl Common {
    fn resolved_prime(&self) -> u64 {
        let p = self.prime.unwrap_or(2);
        if !is_prime(p) {
            fail(&format!("--prime {p} is not a prime"));
        }
        p
    }

    /// The single instance a computation runs in: pointed if asked,
    /// otherwise linear over the (default 2) characteristic.
    fn one_instance(&self) -> Target {
        if self.pointed {
            Target::PSet
        } else {
            Target::VectGF { p: self.resolved_prime() }
        }
    }

    /// The instances a verification suite covers: both unless a flag pins
    /// one down.
    fn instances(&self) -> Vec<Target> {
        if self.pointed {
            vec![Target::PSet]
        } else if self.prime.is_some() {
            vec![Target::VectGF { p: self.resolved_prime() }]
        } else {
            vec![Target::VectGF { p: 2 }, Target::PSet]
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.command {
        Verb::VerifyMonad(a) => run_verify_monad(a),
        Verb::Cocross(a) => run_cocross(a),
        Verb::Axioms(a) => run_axioms(a),
        Verb::ModuleRoundtrip(a) => run_module_roundtrip(a),
        Verb::SurjectionMorphism(a) => run_surjection_morphism(a),
    };
    exit(code);
}

// ---------------------------------------------------------------------------
// plumbing

fn fail(msg: &str) -> ! {
    eprintln!("error: {msg}");
    exit(2);
}

fn cap(ok: bool, msg: &str) {
    if !ok {
        fail(&format!("{msg} (pass --cap-override to lift the cap)"));
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_list(text: &str, flag: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse()
                .map_err(|_| format!("{flag} expects comma-separated nonnegative integers, got {piece:?}"))
        })
        .collect()
}

/// Validate a zero-based image list as a surjection onto an initial
/// segment; returns (source arity, image arity).
fn check_surjection(map: &[usize]) -> Result<(usize, usize), String> {
    if map.is_empty() {
        return Err("--map needs at least one entry".into());
    }
    let m = map.iter().max().unwrap() + 1;
    for j in 0..m {
        if !map.contains(&j) {
            return Err(format!("--map is not surjective: nothing is sent to {j}"));
        }
    }
    Ok((map.len(), m))
}

fn target_tag(t: Target) -> String {
    match t {
        Target::VectGF { p } => format!("gf{p}"),
        Target::PSet => "pset".into(),
    }
}

/// The object coordinates probed under a bound: dimensions up to it, or
/// pointed sizes from one up to it.
fn coordinate_obs(t: Target, bound: usize) -> Vec<Ob> {
    match t {
        Target::VectGF { .. } => (0..=bound).map(Ob::Dim).collect(),
        Target::PSet => (1..=bound.max(1)).map(Ob::Size).collect(),
    }
}

/// Every width-`n` tuple with coordinates drawn from `coords`.
fn width_tuples(coords: &[Ob], n: usize) -> Vec<BaseOb> {
    let mut out: Vec<BaseOb> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                coords.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Seeded width-`n` base morphisms with coordinates under `bound`.
fn seeded_base_mors(s: &mut Sampler, t: Target, n: usize, bound: usize, count: usize) -> Vec<BaseMor> {
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let a = s.ob(t, bound);
                    let b = s.ob(t, bound);
                    s.mor(t, &a, &b)
                })
                .collect()
        })
        .collect()
}

/// β ∘ α for table functors (apply α first).
fn compose_table_functors(beta: &TableFunctor, alpha: &TableFunctor) -> TableFunctor {
    assert_eq!(alpha.target.name, beta.source.name, "functors not composable");
    TableFunctor {
        source: alpha.source.clone(),
        target: beta.target.clone(),
        ob_map: alpha.ob_map.iter().map(|&o| beta.ob_map[o]).collect(),
        mor_map: alpha.mor_map.iter().map(|&m| beta.mor_map[m]).collect(),
    }
}

/// Finish a run: serialize, print, optionally write, map the outcome to an
/// exit code.
fn emit(mut report: Report, common: &Common, start: Instant) -> i32 {
    if common.timings {
        report.timing(start.elapsed().as_secs_f64());
    }
    let text = report.to_canonical_json();
    print!("{text}");
    let _ = std::io::stdout().flush();
    if let Some(path) = &common.out {
        if let Err(e) = report.write(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            exit(2);
        }
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// verify-monad

#[derive(Args)]
struct VerifyMonadArgs {
    /// Width of the acting subset poset.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Coordinate bound for the checked objects.
    #[arg(long, default_value_t = 2)]
    dims: usize,
    /// Number of seeded base morphisms for the naturality checks.
    #[arg(long, default_value_t = 4)]
    mors: usize,
    /// Tamper with μ at iterated levels (testing hook, linear instance only).
    #[arg(long, hide = true)]
    corrupt_mu: bool,
    #[command(flatten)]
    common: Common,
}

fn run_verify_monad(a: &VerifyMonadArgs) -> i32 {
    let start = Instant::now();
    let t = a.common.one_instance();
    if !a.common.cap_override {
        cap(a.n <= 2, "--n is capped at 2");
        cap(a.dims <= 2, "--dims is capped at 2");
        cap(a.mors <= 16, "--mors is capped at 16");
    }
    if a.corrupt_mu && t == Target::PSet {
        fail("the multiplication tamper fixture exists for the linear instance only");
    }

    let base = CCat::new(t, a.n);
    let monad = ModuleMonad::new(CModule::theta_n(base), t);
    let mut ops = monad.ops();
    if a.corrupt_mu {
        ops = corrupt_multiplication(ops, t);
    }
    let functors: Vec<CFunctor> = if a.n == 1 {
        registry(t)
    } else {
        registry(t).iter().map(|f| precompose_product(f, base)).collect()
    };
    let objects = width_tuples(&coordinate_obs(t, a.dims), a.n);
    let mut s = Sampler::new(a.common.seed);
    let mors = seeded_base_mors(&mut s, t, a.n, a.dims, a.mors);

    let mut report = Report::new("verify-monad", a.common.seed);
    report.set("instance", json!(target_tag(t)));
    report.set("n", json!(a.n));
    report.set("coordinate_bound", json!(a.dims));
    report.set("functors", json!(functors.iter().map(|f| f.token.clone()).collect::<Vec<_>>()));
    report.set("objects_checked", json!(objects.len()));
    report.set("morphisms_checked", json!(mors.len()));
    report.set("multiplication_tampered", json!(a.corrupt_mu));
    report.law(
        "unit triangles, associativity and naturality",
        verify_monad(&ops, &functors, &objects, &mors),
    );
    emit(report, &a.common, start)
}

/// Replace μ with a version that swaps two coordinates at iterated levels
/// whose component lands in the plane. Tampering only at iterated functors
/// matters: a swap applied uniformly at every level enters both
/// associativity routes twice and cancels.
fn corrupt_multiplication(m: MonadInstance, t: Target) -> MonadInstance {
    let p = match t {
        Target::VectGF { p } => p,
        Target::PSet => unreachable!("the tamper fixture is linear-only"),
    };
    let inner = m.mult_at.clone();
    MonadInstance {
        mult_at: Rc::new(move |f, a| {
            let honest = inner(f, a);
            if f.token.starts_with("T(") && t.cod(&honest) == Ob::Dim(2) {
                t.compose(&Mor::Mat(Matrix::new(p, 2, 2, vec![0, 1, 1, 0])), &honest)
            } else {
                honest
            }
        }),
        ..m
    }
}

// ---------------------------------------------------------------------------
// cocross

#[derive(Clone, Copy, ValueEnum)]
enum FunctorKind {
    Identity,
    ConstantZero,
    TensorSquare,
}

impl FunctorKind {
    fn build(self, t: Target) -> CFunctor {
        match self {
            FunctorKind::Identity => identity_functor(t),
            FunctorKind::ConstantZero => constant_zero_functor(CCat::new(t, 1), t),
            FunctorKind::TensorSquare => tensor_square_functor(t),
        }
    }
}

#[derive(Args)]
struct CocrossArgs {
    /// Functor whose cocross effect is taken.
    #[arg(long, value_enum, default_value = "tensor-square")]
    functor: FunctorKind,
    /// Input objects, comma-separated (dimensions, or sizes when --pointed).
    #[arg(long, default_value = "1,1")]
    dims: String,
    #[command(flatten)]
    common: Common,
}

fn run_cocross(a: &CocrossArgs) -> i32 {
    let start = Instant::now();
    let t = a.common.one_instance();
    let entries = parse_list(&a.dims, "--dims").unwrap_or_else(|e| fail(&e));
    if entries.is_empty() {
        fail("--dims needs at least one entry");
    }
    if !a.common.cap_override {
        cap(entries.len() <= 3, "--dims is capped at three inputs");
        cap(entries.iter().all(|&d| d <= 3), "--dims entries are capped at 3");
    }
    let inputs: Vec<Ob> = match t {
        Target::VectGF { .. } => entries.iter().map(|&d| Ob::Dim(d)).collect(),
        Target::PSet => {
            if entries.contains(&0) {
                fail("pointed sets are nonempty: sizes start at 1");
            }
            entries.iter().map(|&d| Ob::Size(d)).collect()
        }
    };

    let f0 = a.functor.build(t);
    let value = cocross(&f0, &inputs);
    let mut report = Report::new("cocross", a.common.seed);
    report.set("instance", json!(target_tag(t)));
    report.set("n", json!(value.n));
    report.set("functor", json!(f0.token.clone()));
    report.set("inputs", json!(entries));
    match value.object {
        Ob::Dim(d) => report.set("dimension", json!(d)),
        Ob::Size(s) => report.set("cardinality", json!(s)),
    }
    let oracle = value.check_oracle();
    report.set("oracle_agreement", json!(oracle.is_ok()));
    report.law("recursive cofiber oracle agreement", oracle.err().into_iter().collect());
    emit(report, &a.common, start)
}

// ---------------------------------------------------------------------------
// axioms

#[derive(Args)]
struct AxiomsArgs {
    /// Seeded cases per axiom item.
    #[arg(long, default_value_t = 25)]
    cases: usize,
    /// Append a worked two-object-discrete counterexample showing what the
    /// constant-collapse axiom loses without basepoints.
    #[arg(long)]
    unpointed_demo: bool,
    #[command(flatten)]
    common: Common,
}

fn run_axioms(a: &AxiomsArgs) -> i32 {
    let start = Instant::now();
    if !a.common.cap_override {
        cap(a.cases >= 1 && a.cases <= 200, "--cases is capped at 200");
    }
    let instances = a.common.instances();
    let mut report = Report::new("axioms", a.common.seed);
    report.set(
        "instances",
        json!(instances.iter().map(|&t| target_tag(t)).collect::<Vec<_>>()),
    );
    report.set("cases_per_item", json!(a.cases));
    let seed = a.common.seed;
    for &t in &instances {
        let tag = target_tag(t);
        report.law(
            &format!("double colimits collapse one index at a time [{tag}]"),
            axiom_fubini(t, a.cases, seed),
        );
        report.law(
            &format!("reindexing induces functorial restriction maps [{tag}]"),
            axiom_restriction(t, a.cases, seed),
        );
        report.law(
            &format!("constant diagrams collapse [{tag}]"),
            axiom_constant_collapse(t, a.cases, seed),
        );
        report.law(
            &format!("the one-point index returns the value [{tag}]"),
            axiom_singleton(t, a.cases, seed),
        );
        report.law(
            &format!("objectwise isomorphisms induce invertible maps [{tag}]"),
            axiom_iso_invariance(t, a.cases, seed),
        );
    }
    report.law(
        "poset actions and their comonad families round-trip",
        fixture_module_roundtrips(),
    );
    report.law(
        "comonad and coreflective presentations round-trip",
        fixture_coreflective_roundtrips(),
    );
    if a.unpointed_demo {
        unpointed_demo(&mut report);
    }
    emit(report, &a.common, start)
}

/// A colimit over a product index equals the iterated colimit, with the two
/// comparison maps mutually inverse.
fn axiom_fubini(t: Target, cases: usize, seed: u64) -> Vec<String> {
    let factor_pairs = [
        (pn(1), pn(1)),
        (pn(2), pn(1)),
        (pn(1), lambda_n(1)),
        (lambda_n(1), lambda_n(1)),
        (pn(2), pn(2)),
        (pn(0), pn(2)),
    ];
    let mut out = Vec::new();
    let mut s = Sampler::new(seed ^ 0x0AF1);
    for case in 0..cases {
        let (i_cat, j_cat) = &factor_pairs[case % factor_pairs.len()];
        let product = Arc::new(product_category(i_cat, j_cat));
        let d2 = s.diagram(&product, t, 3);
        match fubini(&d2, i_cat, j_cat) {
            Ok(f) => {
                if t.compose(&f.to_double, &f.from_double) != t.id(&f.outer.vertex)
                    || t.compose(&f.from_double, &f.to_double) != t.id(&f.inner.vertex)
                {
                    out.push(format!("case {case}: comparison maps are not mutually inverse"));
                }
            }
            Err(e) => out.push(format!("case {case}: comparison failed: {e:?}")),
        }
    }
    out
}

/// Reindexing along a functor induces a map of colimits, functorially in
/// the functor and identically on the identity.
fn axiom_restriction(t: Target, cases: usize, seed: u64) -> Vec<String> {
    let alpha_chain = Surjection::new(2, 1, vec![0, 0]).poset_functor();
    let beta_chain = Surjection::new(3, 2, vec![0, 1, 1]).poset_functor();
    let into_top = functor_between_posets(&pn(0), &pn(1), |_| 1);
    let phi1 = phi_n(1);
    let mut out = Vec::new();
    let mut s = Sampler::new(seed ^ 0x0AF2);
    for case in 0..cases {
        let (alpha, beta, index) = if case % 2 == 0 {
            (&alpha_chain, &beta_chain, pn(3))
        } else {
            (&into_top, &phi1, lambda_n(1))
        };
        let d = s.diagram(&index, t, 3);
        let d_beta = d.precompose(beta);
        let beta_alpha = compose_table_functors(beta, alpha);
        let c_full = hocolim(&d);
        let c_mid = hocolim(&d_beta);
        let c_restr = hocolim(&d.precompose(&beta_alpha));
        let maps = (
            restriction_map(beta, &d, &c_mid, &c_full),
            restriction_map(alpha, &d_beta, &c_restr, &c_mid),
            restriction_map(&beta_alpha, &d, &c_restr, &c_full),
        );
        match maps {
            (Ok(r_beta), Ok(r_alpha), Ok(r_comp)) => {
                if r_comp != t.compose(&r_beta, &r_alpha) {
                    out.push(format!("case {case}: restriction is not functorial"));
                }
            }
            _ => out.push(format!("case {case}: a restriction map failed to mediate")),
        }
        let ident = TableFunctor::identity(&index);
        match restriction_map(&ident, &d, &c_full, &c_full) {
            Ok(r_id) => {
                if r_id != t.id(&c_full.vertex) {
                    out.push(format!("case {case}: identity reindexing moved the colimit"));
                }
            }
            Err(e) => out.push(format!("case {case}: identity restriction failed: {e:?}")),
        }
    }
    out
}

/// Constant diagrams collapse: at the terminal object on the nose, and at
/// seeded objects over connected shapes with a single invertible leg.
fn axiom_constant_collapse(t: Target, cases: usize, seed: u64) -> Vec<String> {
    let indices = [
        pn(0),
        pn(1),
        pn(2),
        lambda_n(1),
        Arc::new(product_category(&lambda_n(1), &lambda_n(1))),
    ];
    let mut out = Vec::new();
    for ix in &indices {
        if !constant_terminal_collapse(ix, t) {
            out.push(format!("terminal collapse fails over {}", ix.name));
        }
    }
    let mut s = Sampler::new(seed ^ 0x0AF3);
    for case in 0..cases {
        let ix = &indices[case % indices.len()];
        let x = s.ob(t, 3);
        let c = hocolim(&Diagram::constant(ix, t, &x));
        if c.vertex != x {
            out.push(format!("case {case}: constant collapse changed the object"));
        }
        if !c.legs.iter().all(|l| *l == c.legs[0]) {
            out.push(format!("case {case}: connected constant legs differ"));
        }
        if !t.is_iso(&c.legs[0]) {
            out.push(format!("case {case}: constant collapse leg is not invertible"));
        }
    }
    out
}

/// Over the one-point index the colimit is the value itself.
fn axiom_singleton(t: Target, cases: usize, seed: u64) -> Vec<String> {
    let mut out = Vec::new();
    let mut s = Sampler::new(seed ^ 0x0AF4);
    for case in 0..cases {
        let d = Diagram::constant(&pn(0), t, &s.ob(t, 3));
        if !singleton_index_identity(&d) {
            out.push(format!("case {case}: singleton colimit is not the value"));
        }
    }
    out
}

/// An objectwise isomorphism of diagrams induces an isomorphism on
/// colimits.
fn axiom_iso_invariance(t: Target, cases: usize, seed: u64) -> Vec<String> {
    let indices = [pn(1), pn(2), lambda_n(1)];
    let mut out = Vec::new();
    let mut s = Sampler::new(seed ^ 0x0AF5);
    for case in 0..cases {
        let ix = &indices[case % indices.len()];
        let src = s.diagram(ix, t, 3);
        let comps: Vec<Mor> = src.obs.iter().map(|o| s.iso(t, o)).collect();
        let conjugated: Vec<Mor> = (0..ix.n_mors())
            .map(|m| {
                let (a, b) = (ix.dom(m), ix.cod(m));
                let inv = t.inverse(&comps[a]).expect("sampled components invert");
                t.compose(&comps[b], &t.compose(&src.mors[m], &inv))
            })
            .collect();
        let dst = Diagram { index: ix.clone(), target: t, obs: src.obs.clone(), mors: conjugated };
        let map = DiagMap { components: comps };
        let c_src = hocolim(&src);
        let c_dst = hocolim(&dst);
        match invariance_under_objectwise_iso(&src, &dst, &map, &c_src, &c_dst) {
            Ok(true) => {}
            Ok(false) => out.push(format!("case {case}: induced colimit map is not invertible")),
            Err(e) => out.push(format!("case {case}: comparison failed: {e:?}")),
        }
    }
    out
}

/// A worked counterexample for the constant-collapse axiom without
/// basepoints: over the two-object discrete index the colimit of a constant
/// diagram is a coproduct of two copies. With basepoints the copies share
/// the basepoint, so the one-point constant still collapses; plain finite
/// sets leave two disjoint points and the axiom fails on any disconnected
/// shape. The pointed column is engine-computed, the unpointed column is
/// the disjoint-union count.
fn unpointed_demo(report: &mut Report) {
    let disc = Arc::new(TableCategory::poset(
        "discrete-pair",
        vec!["first".into(), "second".into()],
        |x, y| x == y,
    ));
    let t = Target::PSet;
    let point = hocolim(&Diagram::constant(&disc, t, &Ob::Size(1)));
    let pair = hocolim(&Diagram::constant(&disc, t, &Ob::Size(2)));
    let disjoint_union = |copies: usize, m: usize| copies * m;
    report.set(
        "unpointed_demo",
        json!({
            "index": "two-object discrete category",
            "pointed_colimit_of_constant_point": point.vertex.size(),
            "unpointed_colimit_of_constant_point": disjoint_union(2, 1),
            "pointed_colimit_of_constant_two_point_set": pair.vertex.size(),
            "unpointed_colimit_of_constant_two_point_set": disjoint_union(2, 2),
            "reading": "basepoints glue the two copies into a wedge, so the one-point \
                        constant still collapses; without them the coproduct of two points \
                        never has one element, and nonterminal constants collapse only over \
                        connected shapes even with basepoints",
        }),
    );
    report.check(
        "pointed one-point constant collapses over the discrete pair",
        point.vertex == Ob::Size(1),
    );
    report.check(
        "unpointed one-point constant fails to collapse over the discrete pair",
        disjoint_union(2, 1) != 1,
    );
    report.check(
        "nonterminal constants need connected shapes even with basepoints",
        pair.vertex == Ob::Size(3),
    );
}

// ---------------------------------------------------------------------------
// module-roundtrip

#[derive(Args)]
struct ModuleRoundtripArgs {
    /// Width of the sampled coordinate-zeroing action.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Seeded sample points for the computable instances.
    #[arg(long, default_value_t = 12)]
    samples: usize,
    #[command(flatten)]
    common: Common,
}

fn run_module_roundtrip(a: &ModuleRoundtripArgs) -> i32 {
    let start = Instant::now();
    if !a.common.cap_override {
        cap(a.n >= 1 && a.n <= 3, "--n is capped at 3");
        cap(a.samples <= 64, "--samples is capped at 64");
    }
    let instances = a.common.instances();
    let mut report = Report::new("module-roundtrip", a.common.seed);
    report.set(
        "instances",
        json!(instances.iter().map(|&t| target_tag(t)).collect::<Vec<_>>()),
    );
    report.set("n", json!(a.n));
    report.set("samples", json!(a.samples));
    report.law(
        "poset actions and their comonad families round-trip",
        fixture_module_roundtrips(),
    );
    report.law(
        "comonad and coreflective presentations round-trip",
        fixture_coreflective_roundtrips(),
    );
    for &t in &instances {
        report.law(
            &format!("sampled coordinate-zeroing action matches its reassembly [{}]", target_tag(t)),
            sampled_action_roundtrip(t, a.n, a.samples, a.common.seed),
        );
    }
    emit(report, &a.common, start)
}

/// Poset-action fixtures: the subset posets acting by intersection, two
/// capped chains, and a diamond with a zeroing action.
fn table_fixtures() -> Vec<(String, TableModule)> {
    let chain3 = Arc::new(TableCategory::poset(
        "chain3",
        (0..3).map(|i| format!("c{i}")).collect(),
        |x, y| x <= y,
    ));
    let chain5 = Arc::new(TableCategory::poset(
        "chain5",
        (0..5).map(|i| format!("c{i}")).collect(),
        |x, y| x <= y,
    ));
    let diamond = Arc::new(TableCategory::poset(
        "diamond",
        vec!["bot".into(), "left".into(), "right".into(), "top".into()],
        |x, y| x == y || x == 0 || y == 3,
    ));
    vec![
        (
            "intersection on subsets of one generator".into(),
            TableModule::from_ob_action(&pn(1), 1, |a, u| a & u),
        ),
        (
            "intersection on subsets of two generators".into(),
            TableModule::from_ob_action(&pn(2), 2, |a, u| a & u),
        ),
        (
            "three-chain with caps".into(),
            TableModule::from_ob_action(&chain3, 2, |a, u| {
                let caps = [0usize, 1];
                let mut v = a;
                for (j, cap) in caps.iter().enumerate() {
                    if u & (1 << j) == 0 {
                        v = v.min(*cap);
                    }
                }
                v
            }),
        ),
        (
            "diamond with a zeroing action".into(),
            TableModule::from_ob_action(&diamond, 1, |x, u| if u & 1 == 1 { x } else { 0 }),
        ),
        (
            "five-chain with caps".into(),
            TableModule::from_ob_action(&chain5, 2, |a, u| {
                let caps = [1usize, 3];
                let mut v = a;
                for (j, cap) in caps.iter().enumerate() {
                    if u & (1 << j) == 0 {
                        v = v.min(*cap);
                    }
                }
                v
            }),
        ),
    ]
}

/// Exhaustive round trips on the table fixtures: the module validates, its
/// coordinate comonads validate, and both composite conversions are the
/// identity.
fn fixture_module_roundtrips() -> Vec<String> {
    let mut out = Vec::new();
    for (tag, module) in table_fixtures() {
        let violations = module.validate_module();
        if !violations.is_empty() {
            out.push(format!("{tag}: not a module: {violations:?}"));
            continue;
        }
        let ks = module_to_comonads(&module);
        for (j, k) in ks.iter().enumerate() {
            if !k.validate().is_empty() {
                out.push(format!("{tag}: derived comonad {j} breaks a comonad law"));
            }
        }
        match comonads_to_module(&module.base, &ks) {
            Ok(back) => {
                if back.theta.ob_map != module.theta.ob_map
                    || back.theta.mor_map != module.theta.mor_map
                {
                    out.push(format!("{tag}: module, comonads, module changed the action"));
                }
                let ks_again = module_to_comonads(&back);
                for (j, (k1, k2)) in ks.iter().zip(&ks_again).enumerate() {
                    if k1.endo.ob_map != k2.endo.ob_map
                        || k1.endo.mor_map != k2.endo.mor_map
                        || k1.counit.components != k2.counit.components
                    {
                        out.push(format!("{tag}: comonad {j} changed on the way back"));
                    }
                }
            }
            Err(v) => out.push(format!("{tag}: reassembly failed: {v:?}")),
        }
    }
    out
}

/// Exact comonad ↔ coreflective-subcategory round trips on the fixtures
/// with at most four objects.
fn fixture_coreflective_roundtrips() -> Vec<String> {
    let mut out = Vec::new();
    for (tag, module) in table_fixtures() {
        if module.base.n_objects() > 4 {
            continue;
        }
        for (j, k) in module_to_comonads(&module).iter().enumerate() {
            let pair = match comonad_to_coreflective(k) {
                Ok(p) => p,
                Err(v) => {
                    out.push(format!("{tag}: comonad {j} not coreflective: {v:?}"));
                    continue;
                }
            };
            match coreflective_to_comonad(&pair) {
                Ok(back) => {
                    if back.endo.ob_map != k.endo.ob_map
                        || back.endo.mor_map != k.endo.mor_map
                        || back.counit.components != k.counit.components
                    {
                        out.push(format!("{tag}: comonad {j} changed through the subcategory"));
                    }
                }
                Err(v) => out.push(format!("{tag}: rebuilt comonad {j} invalid: {v:?}")),
            }
        }
    }
    out
}

/// Sampled agreement between the coordinate-zeroing action and its
/// reassembly from coordinate comonads, plus validity of both the module
/// and the comparison transform on the sampled morphisms.
fn sampled_action_roundtrip(t: Target, n: usize, samples: usize, seed: u64) -> Vec<String> {
    let mut out = Vec::new();
    let base = CCat::new(t, n);
    let theta = CModule::theta_n(base);
    let coords = vec![CoordComonad::Zero; n];
    let rebuilt = CModule::coreflective(base, coords.clone());
    let transform = coreflective_comparison(base, coords);
    let mut s = Sampler::new(seed ^ 0x30DE);
    let mut sampled: Vec<BaseMor> = Vec::new();
    for case in 0..samples {
        let a: BaseOb = (0..n).map(|_| s.ob(t, 3)).collect();
        let b: BaseOb = (0..n).map(|_| s.ob(t, 3)).collect();
        let f: BaseMor = (0..n).map(|i| s.mor(t, &a[i], &b[i])).collect();
        for u in 0..(1usize << n) {
            if theta.theta_ob(&a, u) != rebuilt.theta_ob(&a, u)
                || theta.theta_mor(&f, u) != rebuilt.theta_mor(&f, u)
            {
                out.push(format!("case {case}: the action differs from its reassembly at subset {u}"));
            }
        }
        sampled.push(f);
    }
    out.extend(theta.validate_on(&sampled));
    out.extend(transform.validate_on(&sampled));
    out
}

// ---------------------------------------------------------------------------
// surjection-morphism

#[derive(Args)]
struct SurjectionMorphismArgs {
    /// Image of each source coordinate, comma-separated and zero-based;
    /// "0,0" collapses two coordinates onto one.
    #[arg(long, default_value = "0,0")]
    map: String,
    /// Coordinate bound for the sampled objects.
    #[arg(long, default_value_t = 2)]
    dims: usize,
    #[command(flatten)]
    common: Common,
}

fn run_surjection_morphism(a: &SurjectionMorphismArgs) -> i32 {
    let start = Instant::now();
    let t = a.common.one_instance();
    let map = parse_list(&a.map, "--map").unwrap_or_else(|e| fail(&e));
    let (n, m) = check_surjection(&map).unwrap_or_else(|e| fail(&e));
    if !a.common.cap_override {
        cap(n <= 3, "--map is capped at three source coordinates");
        cap(a.dims <= 3, "--dims is capped at 3");
    }

    let s_map = Surjection::new(n, m, map.clone());
    let functors = registry(t);
    let objects: Vec<BaseOb> = coordinate_obs(t, a.dims).into_iter().map(|o| vec![o]).collect();

    let mut report = Report::new("surjection-morphism", a.common.seed);
    report.set("instance", json!(target_tag(t)));
    report.set("surjection", json!(format!("{n} onto {m} via {map:?}")));
    report.set("functors", json!(functors.iter().map(|f| f.token.clone()).collect::<Vec<_>>()));
    report.set("objects_checked", json!(objects.len()));
    match surjection_monad_morphism(&s_map, t) {
        Ok(mm) => {
            report.set("construction", json!("ok"));
            report.law("unit and multiplication coherence", mm.verify(&functors, &objects));
        }
        Err(v) => {
            report.set("construction", json!("failed"));
            report.law("adjunction-compatibility hypotheses", v);
        }
    }
    emit(report, &a.common, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_screen() {
        assert!([2u64, 3, 5, 7, 11, 13].iter().all(|&p| is_prime(p)));
        assert!(![0u64, 1, 4, 6, 9, 15].iter().any(|&p| is_prime(p)));
    }

    #[test]
    fn comma_lists_parse() {
        assert_eq!(parse_list("1,2,3", "--dims").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_list(" 4 , 0 ", "--dims").unwrap(), vec![4, 0]);
        assert!(parse_list("1,,2", "--dims").is_err());
        assert!(parse_list("parsnip", "--dims").is_err());
    }

    #[test]
    fn surjectivity_screen() {
        assert_eq!(check_surjection(&[0, 0]).unwrap(), (2, 1));
        assert_eq!(check_surjection(&[1, 0, 1]).unwrap(), (3, 2));
        assert!(check_surjection(&[0, 2]).is_err(), "a gap in the image is rejected");
        assert!(check_surjection(&[]).is_err(), "an empty map is rejected");
    }
}
