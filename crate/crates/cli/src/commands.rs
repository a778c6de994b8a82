//! Verb dispatch. Every verb returns the input document extended with the
//! objects it derived and a `report` entry, plus the exit code.

use std::fmt;
use std::str::FromStr;

use hopfkit_core::algebra::{describe_vector, AlgebraMorphism};
use hopfkit_core::coaction::Coaction;
use hopfkit_core::hopf::HopfAlgebra;
use hopfkit_core::linalg::Subspace;
use hopfkit_core::reduction::{
    bundles_equivalent, check_bundle_morphism, check_qpb, default_seed, hopf_image_reduction, reduce_morphism, Bundle,
    BundleMorphism, Check, Reduction,
};
use hopfkit_core::Error;
use serde_json::{json, Map, Value};

use crate::document::{
    algebra_value, bundle_value, coaction_value, hopf_value, matrix_value, morphism_value, subspace_value, Document,
    MorphismObject, Object,
};
use crate::error::CliError;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    CheckHopf,
    CheckCoaction,
    HopfImage,
    InnerFaithful,
    Coinvariants,
    Galois,
    QpbCheck,
    Reduce,
    Cosemisimple,
    ReduceMorphism,
    Equivalent,
}

const VERBS: [(&str, Verb); 11] = [
    ("check-hopf", Verb::CheckHopf),
    ("check-coaction", Verb::CheckCoaction),
    ("hopf-image", Verb::HopfImage),
    ("inner-faithful", Verb::InnerFaithful),
    ("coinvariants", Verb::Coinvariants),
    ("galois", Verb::Galois),
    ("qpb-check", Verb::QpbCheck),
    ("reduce", Verb::Reduce),
    ("cosemisimple", Verb::Cosemisimple),
    ("reduce-morphism", Verb::ReduceMorphism),
    ("equivalent", Verb::Equivalent),
];

impl FromStr for Verb {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Verb, CliError> {
        VERBS.iter().find(|(name, _)| *name == s).map(|(_, v)| *v).ok_or_else(|| {
            let known: Vec<&str> = VERBS.iter().map(|(n, _)| *n).collect();
            CliError::Usage(format!("unknown verb {s:?}; expected one of {}", known.join(", ")))
        })
    }
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = VERBS.iter().find(|(_, v)| v == self).map(|(n, _)| *n).expect("every verb is named");
        f.write_str(name)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub object: Option<String>,
    pub seed: Option<String>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub document: Value,
    pub exit_code: i32,
}

struct Run<'a> {
    doc: &'a Document,
    derived: Map<String, Value>,
}

fn exit_for(ok: bool) -> i32 {
    if ok {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn checks_value(checks: &[Check]) -> Value {
    Value::Array(checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect())
}

fn basis_names(names: &[String], s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().iter().map(|v| json!(describe_vector(names, v))).collect())
}

impl<'a> Run<'a> {
    fn select(&self, kinds: &[&str], requested: Option<&str>, what: &str) -> Result<(String, &'a Object), CliError> {
        match requested {
            Some(name) => {
                let o = self
                    .doc
                    .objects
                    .get(name)
                    .ok_or_else(|| CliError::Usage(format!("no object named {name:?}")))?;
                if !kinds.contains(&o.kind()) {
                    return Err(CliError::Usage(format!("{name:?} is a {}, expected a {what}", o.kind())));
                }
                Ok((name.to_string(), o))
            }
            None => {
                let found: Vec<(&String, &Object)> = self.doc.objects.iter().filter(|(_, o)| kinds.contains(&o.kind())).collect();
                match found.as_slice() {
                    [(n, o)] => Ok((n.to_string(), *o)),
                    [] => Err(CliError::Usage(format!("the document has no {what}"))),
                    _ => Err(CliError::Usage(format!("the document has several objects of kind {what}; pass --object"))),
                }
            }
        }
    }

    fn checked(&self, name: &str) -> bool {
        !self.doc.unchecked.contains(name)
    }

    fn validate_algebra_object(&self, name: &str) -> Result<(), CliError> {
        if !self.checked(name) {
            return Ok(());
        }
        let o = &self.doc.objects[name];
        if let Some(h) = o.as_hopf() {
            let report = h.check();
            if !report.is_valid() {
                return Err(CliError::Usage(format!(
                    "{name:?} fails the Hopf algebra axioms ({} violations); run check-hopf or mark it unchecked",
                    report.violation_count()
                )));
            }
        } else if let Some(a) = o.as_algebra() {
            let report = a.check();
            if !report.is_valid() {
                return Err(CliError::Usage(format!(
                    "{name:?} fails the algebra axioms: {}",
                    report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
                )));
            }
        }
        Ok(())
    }

    fn coaction(&self, name: &str, validate_self: bool) -> Result<&'a Coaction, CliError> {
        let Object::Coaction { coaction, algebra, hopf } = &self.doc.objects[name] else {
            unreachable!("selected by kind")
        };
        self.validate_algebra_object(algebra)?;
        self.validate_algebra_object(hopf)?;
        if validate_self && self.checked(name) {
            let report = coaction.check();
            if !report.is_valid() {
                return Err(CliError::Usage(format!(
                    "{name:?} is not a comodule algebra: {}",
                    report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
                )));
            }
        }
        Ok(coaction)
    }

    fn bundle(&self, name: &str) -> Result<(&'a Bundle, &'a str, Option<&'a str>), CliError> {
        let Object::Bundle { bundle, coaction, seed } = &self.doc.objects[name] else {
            return Err(CliError::Usage(format!("{name:?} is not a bundle")));
        };
        self.coaction(coaction, true)?;
        Ok((bundle, coaction, seed.as_deref()))
    }

    fn subspace(&self, name: &str, ambient: usize) -> Result<&'a Subspace, CliError> {
        match self.doc.objects.get(name) {
            Some(Object::Subspace(s)) if s.ambient() == ambient => Ok(s),
            Some(_) => Err(CliError::Usage(format!("{name:?} is not a subspace of dimension {ambient}"))),
            None => Err(CliError::Usage(format!("no object named {name:?}"))),
        }
    }

    fn seed_for(&self, bundle_name: &str, explicit: Option<&str>) -> Result<(Subspace, String), CliError> {
        let (bundle, _, own) = self.bundle(bundle_name)?;
        let a = bundle.coaction.comodule();
        if let Some(s) = explicit {
            return Ok((self.subspace(s, a.dim())?.clone(), format!("subspace {s:?}")));
        }
        if let Some(s) = own {
            return Ok((self.subspace(s, a.dim())?.clone(), format!("bundle seed {s:?}")));
        }
        match default_seed(a) {
            Some(s) => Ok((s, "kernel of the declared augmentation".to_string())),
            None => Err(CliError::Usage(format!(
                "no seed for {bundle_name:?}: the largest stable ideal is ambiguous without one, since the whole \
                 algebra is always a stable ideal; pass --seed <subspace> or declare an augmentation"
            ))),
        }
    }

    fn reduce(&mut self, bundle_name: &str, explicit_seed: Option<&str>) -> Result<(Reduction, String), CliError> {
        let (seed, source) = self.seed_for(bundle_name, explicit_seed)?;
        let (bundle, _, _) = self.bundle(bundle_name)?;
        let r = hopf_image_reduction(bundle, &seed).map_err(|e| CliError::precondition(format!("reducing {bundle_name:?}"), e))?;
        self.add_reduction_objects(bundle_name, &r);
        Ok((r, source))
    }

    fn add_reduction_objects(&mut self, b: &str, r: &Reduction) {
        let names = ReducedNames::new(b);
        self.derived.insert(names.algebra.clone(), algebra_value(r.reduced.bundle.coaction.comodule()));
        self.derived.insert(names.hopf.clone(), hopf_value(r.factorization.sub.induced()));
        self.derived.insert(
            names.coaction.clone(),
            coaction_value(&r.reduced.bundle.coaction, &names.algebra, &names.hopf),
        );
        self.derived.insert(names.bundle.clone(), bundle_value(&r.reduced.bundle, &names.coaction, None));
        self.derived.insert(names.ideal.clone(), subspace_value(&r.reduced.ideal));
    }

    fn finish(mut self, report: Value, exit_code: i32) -> Outcome {
        let mut document = self.doc.to_value();
        let objects = document["objects"].as_object_mut().expect("objects map");
        objects.append(&mut self.derived);
        document.as_object_mut().expect("document map").insert("report".into(), report);
        Outcome { document, exit_code }
    }
}

struct ReducedNames {
    algebra: String,
    hopf: String,
    coaction: String,
    bundle: String,
    ideal: String,
}

impl ReducedNames {
    fn new(b: &str) -> ReducedNames {
        ReducedNames {
            algebra: format!("{b}.reduced.algebra"),
            hopf: format!("{b}.reduced.hopf"),
            coaction: format!("{b}.reduced.coaction"),
            bundle: format!("{b}.reduced.bundle"),
            ideal: format!("{b}.reduced.ideal"),
        }
    }
}

fn reduction_report(r: &Reduction, seed_source: &str) -> Value {
    let h = r.original.coaction.hopf();
    let a = r.original.coaction.comodule();
    json!({
        "seed": { "source": seed_source, "dim": r.seed.dim() },
        "hopf_image": {
            "dim": r.factorization.sub.dim(),
            "hopf_dim": h.dim(),
            "basis": basis_names(h.names(), r.factorization.sub.carrier()),
        },
        "stable_ideal": { "dim": r.reduced.ideal.dim(), "basis": basis_names(a.names(), &r.reduced.ideal) },
        "reduced_algebra_dim": r.reduced.bundle.coaction.comodule().dim(),
        "principal_bundle": checks_value(&r.qpb.checks),
        "inner_faithful": r.inner_faithful,
        "cosemisimple": match &r.cosemisimple {
            Ok(b) => json!(b),
            Err(_) => json!("unsupported"),
        },
        "claims": r.claims.iter().map(|c| json!({
            "id": c.id,
            "statement": c.statement,
            "status": c.status.to_string(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "passed": r.passed(),
    })
}

fn hopf_of<'a>(run: &Run<'a>, opts: &Options) -> Result<(String, &'a HopfAlgebra), CliError> {
    let (name, o) = run.select(&["hopf"], opts.object.as_deref(), "Hopf algebra")?;
    Ok((name, o.as_hopf().expect("selected by kind")))
}

fn bundle_morphism(run: &Run<'_>, m: &MorphismObject, reduced: Option<(&Reduction, &Reduction)>) -> Result<BundleMorphism, CliError> {
    let psi = m
        .hopf_matrix
        .clone()
        .ok_or_else(|| CliError::Usage("a bundle morphism needs a hopf_matrix".into()))?;
    let (src, dst) = match reduced {
        Some((r1, r2)) => (&r1.reduced.bundle, &r2.reduced.bundle),
        None => (run.bundle(&m.source)?.0, run.bundle(&m.target)?.0),
    };
    let phi = AlgebraMorphism::new(src.coaction.comodule().clone(), dst.coaction.comodule().clone(), m.matrix.clone())
        .map_err(|e| CliError::precondition("morphism matrix", e))?;
    if psi.rows() != dst.coaction.hopf().dim() || psi.cols() != src.coaction.hopf().dim() {
        return Err(CliError::precondition(
            "morphism hopf_matrix",
            Error::DimensionMismatch {
                context: "Hopf morphism matrix",
                expected: dst.coaction.hopf().dim() * src.coaction.hopf().dim(),
                found: psi.rows() * psi.cols(),
            },
        ));
    }
    Ok(BundleMorphism { phi, psi })
}

fn morphism_object<'a>(run: &Run<'a>, name: &str) -> Result<&'a MorphismObject, CliError> {
    match run.doc.objects.get(name) {
        Some(Object::Morphism(m)) => {
            for end in [&m.source, &m.target] {
                if run.doc.objects[end].kind() != "bundle" {
                    return Err(CliError::Usage(format!("{name:?} is not a morphism between bundles")));
                }
            }
            Ok(m)
        }
        Some(_) => Err(CliError::Usage(format!("{name:?} is not a morphism"))),
        None => Err(CliError::Usage(format!("no object named {name:?}"))),
    }
}

/// Runs `verb` on `doc`.
pub fn run_command(verb: Verb, doc: &Document, opts: &Options) -> Result<Outcome, CliError> {
    let mut run = Run { doc, derived: Map::new() };
    let base = |name: &str| json!({ "verb": verb.to_string(), "object": name });
    let with = |mut v: Value, extra: Value| {
        let m = v.as_object_mut().expect("report map");
        for (k, x) in extra.as_object().expect("extra map") {
            m.insert(k.clone(), x.clone());
        }
        v
    };
    match verb {
        Verb::CheckHopf => {
            let (name, h) = hopf_of(&run, opts)?;
            let report = h.check();
            let violations: Vec<String> = report
                .algebra
                .violations
                .iter()
                .map(|v| v.to_string())
                .chain(report.violations.iter().map(|v| v.to_string()))
                .collect();
            let out = with(base(&name), json!({ "valid": report.is_valid(), "dim": h.dim(), "violations": violations }));
            Ok(run.finish(out, exit_for(report.is_valid())))
        }
        Verb::CheckCoaction => {
            let (name, _) = run.select(&["coaction"], opts.object.as_deref(), "coaction")?;
            let c = run.coaction(&name, false)?;
            let report = c.check();
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            let out = with(base(&name), json!({ "valid": report.is_valid(), "violations": violations }));
            Ok(run.finish(out, exit_for(report.is_valid())))
        }
        Verb::HopfImage | Verb::InnerFaithful => {
            let (name, o) = run.select(&["coaction"], opts.object.as_deref(), "coaction")?;
            let c = run.coaction(&name, true)?;
            let Object::Coaction { algebra, .. } = o else { unreachable!() };
            let f = c.hopf_image();
            let coefficients = c.coefficient_space();
            let h = c.hopf();
            let inner = f.sub.dim() == h.dim();
            let out = with(
                base(&name),
                json!({
                    "hopf_dim": h.dim(),
                    "coefficient_space": { "dim": coefficients.dim(), "basis": basis_names(h.names(), &coefficients) },
                    "hopf_image": { "dim": f.sub.dim(), "basis": basis_names(h.names(), f.sub.carrier()) },
                    "inner_faithful": inner,
                }),
            );
            if verb == Verb::HopfImage {
                let hname = format!("{name}.hopf_image");
                run.derived.insert(hname.clone(), hopf_value(f.sub.induced()));
                run.derived.insert(format!("{name}.image_coaction"), coaction_value(&f.restricted, algebra, &hname));
                run.derived.insert(format!("{name}.hopf_image_carrier"), subspace_value(f.sub.carrier()));
                Ok(run.finish(out, EXIT_TRUE))
            } else {
                Ok(run.finish(out, exit_for(inner)))
            }
        }
        Verb::Coinvariants => {
            let (name, _) = run.select(&["coaction"], opts.object.as_deref(), "coaction")?;
            let c = run.coaction(&name, true)?;
            let b = c.coinvariants();
            let out = with(base(&name), json!({ "dim": b.dim(), "basis": basis_names(c.comodule().names(), &b) }));
            run.derived.insert(format!("{name}.coinvariants"), subspace_value(&b));
            Ok(run.finish(out, EXIT_TRUE))
        }
        Verb::Galois => {
            let (name, o) = match opts.object {
                Some(_) => run.select(&["coaction", "bundle"], opts.object.as_deref(), "coaction or bundle")?,
                None => run.select(&["coaction"], None, "coaction")?,
            };
            let c = match o {
                Object::Bundle { coaction, .. } => run.coaction(coaction, true)?,
                _ => run.coaction(&name, true)?,
            };
            let b = c.coinvariants();
            let can = hopfkit_core::reduction::canonical_map(c, &b).map_err(|e| CliError::precondition("canonical map", e))?;
            let out = with(
                base(&name),
                json!({
                    "coinvariants_dim": b.dim(),
                    "domain_dim": can.matrix.cols(),
                    "target_dim": can.matrix.rows(),
                    "rank": can.rank,
                    "injective": can.is_injective(),
                    "surjective": can.is_surjective(),
                    "bijective": can.bijective,
                }),
            );
            Ok(run.finish(out, exit_for(can.bijective)))
        }
        Verb::QpbCheck => {
            let (name, _) = run.select(&["bundle"], opts.object.as_deref(), "bundle")?;
            let (bundle, _, _) = run.bundle(&name)?;
            let r = check_qpb(bundle);
            let out = with(
                base(&name),
                json!({
                    "passed": r.passed(),
                    "checks": checks_value(&r.checks),
                    "coinvariants_dim": r.coinvariants.dim(),
                    "can": { "rank": r.can_rank, "domain_dim": r.can_domain, "target_dim": r.can_target },
                    "structure_ideal_dim": r.structure_ideal.dim(),
                }),
            );
            Ok(run.finish(out, exit_for(r.passed())))
        }
        Verb::Reduce => {
            let (name, _) = run.select(&["bundle"], opts.object.as_deref(), "bundle")?;
            let (r, source) = run.reduce(&name, opts.seed.as_deref())?;
            let out = with(base(&name), reduction_report(&r, &source));
            Ok(run.finish(out, exit_for(r.passed())))
        }
        Verb::Cosemisimple => {
            let (name, h) = hopf_of(&run, opts)?;
            run.validate_algebra_object(&name)?;
            let (status, code) = match h.is_cosemisimple() {
                Ok(true) => (json!(true), EXIT_TRUE),
                Ok(false) => (json!(false), EXIT_FALSE),
                Err(_) => (json!("unsupported"), EXIT_ERROR),
            };
            let out = with(base(&name), json!({ "field": h.field().to_string(), "cosemisimple": status }));
            Ok(run.finish(out, code))
        }
        Verb::ReduceMorphism => {
            let (name, _) = run.select(&["morphism"], opts.object.as_deref(), "morphism")?;
            let m = morphism_object(&run, &name)?;
            let unreduced = bundle_morphism(&run, m, None)?;
            let (r1, _) = run.reduce(&m.source, None)?;
            let (r2, _) = run.reduce(&m.target, None)?;
            let reduced = reduce_morphism(&unreduced, &r1, &r2).map_err(|e| CliError::precondition("reducing the morphism", e))?;
            let checks = check_bundle_morphism(&reduced, &r1.reduced.bundle, &r2.reduced.bundle);
            let ok = checks.iter().all(|c| c.passed);
            let reduced_obj = MorphismObject {
                source: ReducedNames::new(&m.source).bundle,
                target: ReducedNames::new(&m.target).bundle,
                matrix: reduced.phi.matrix.clone(),
                hopf_matrix: Some(reduced.psi.clone()),
            };
            run.derived.insert(format!("{name}.reduced"), morphism_value(&reduced_obj));
            let out = with(
                base(&name),
                json!({
                    "matrix": matrix_value(&reduced.phi.matrix),
                    "hopf_matrix": matrix_value(&reduced.psi),
                    "checks": checks_value(&checks),
                    "passed": ok,
                }),
            );
            Ok(run.finish(out, exit_for(ok)))
        }
        Verb::Equivalent => {
            let (name, _) = run.select(&["morphism"], opts.object.as_deref(), "morphism")?;
            let witness = opts
                .witness
                .as_deref()
                .ok_or_else(|| CliError::precondition("equivalent", Error::MissingWitness("pass --witness <backward morphism>".into())))?;
            let fwd = morphism_object(&run, &name)?;
            let bwd = morphism_object(&run, witness)?;
            if bwd.source != fwd.target || bwd.target != fwd.source {
                return Err(CliError::Usage(format!(
                    "the witness must go from {:?} back to {:?}",
                    fwd.target, fwd.source
                )));
            }
            let (r1, _) = run.reduce(&fwd.source, None)?;
            let (r2, _) = run.reduce(&fwd.target, None)?;
            let dims = |r: &Reduction| (r.reduced.bundle.coaction.comodule().dim(), r.reduced.bundle.coaction.hopf().dim());
            let fits = |m: &MorphismObject, s: (usize, usize), t: (usize, usize)| {
                m.matrix.rows() == t.0
                    && m.matrix.cols() == s.0
                    && m.hopf_matrix.as_ref().is_some_and(|h| h.rows() == t.1 && h.cols() == s.1)
            };
            let (d1, d2) = (dims(&r1), dims(&r2));
            let (equivalent, checks) = if d1 != d2 || !fits(fwd, d1, d2) || !fits(bwd, d2, d1) {
                let detail = format!("reduced (dim A₀, dim H_δ) = {d1:?} vs {d2:?}");
                (false, vec![Check::new("dimensions", false, detail)])
            } else {
                let f = bundle_morphism(&run, fwd, Some((&r1, &r2)))?;
                let b = bundle_morphism(&run, bwd, Some((&r2, &r1)))?;
                let e = bundles_equivalent(&r1, &r2, Some(&f), Some(&b)).map_err(|e| CliError::precondition("equivalent", e))?;
                (e.equivalent, e.checks)
            };
            let out = with(base(&name), json!({ "witness": witness, "equivalent": equivalent, "checks": checks_value(&checks) }));
            Ok(run.finish(out, exit_for(equivalent)))
        }
    }
}
