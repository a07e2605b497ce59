use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use regalg_core::adele::{level_set, quotient_iso_check, tower_embed};
use regalg_core::bost_connes::{bc_relations_check, kms_value, zeta_partial, GaloisParameter, KmsConfig};
use regalg_core::oracle::{self, Window};
use regalg_core::sample::Sampler;
use regalg_core::star::{choose_separating, compress_phi, pi_witness, verify_defining_relations, RelationsReport};
use regalg_core::{parse_expression, AlgebraElement, ExpectationMode, Ring, RingElement};

use crate::report::Report;

/// Bad flags or unparsable inputs; exit code 2.
pub struct UsageError(pub String);

fn usage(e: impl ToString) -> UsageError {
    UsageError(e.to_string())
}

pub fn ring_from_flag(flag: &str) -> Result<Ring, UsageError> {
    Ring::from_flag(flag).map_err(usage)
}

pub fn expr(text: &str, ring: &Ring) -> Result<AlgebraElement, UsageError> {
    parse_expression(text, ring).map_err(|e| UsageError(format!("--expr '{text}': {e}")))
}

pub fn element_list(text: &str, ring: &Ring) -> Result<Vec<RingElement>, UsageError> {
    text.split(',')
        .map(|s| ring.parse_element(s.trim()).map_err(|e| UsageError(format!("'{}': {e}", s.trim()))))
        .collect()
}

/// `1mod2,2mod3` into `(w, m)` seeds.
pub fn alpha(text: &str, ring: &Ring) -> Result<GaloisParameter, UsageError> {
    let mut seeds = Vec::new();
    for part in text.split(',') {
        let (w, m) = part
            .split_once("mod")
            .ok_or_else(|| UsageError(format!("--alpha entry '{part}' is not of the form <w>mod<m>")))?;
        seeds.push((
            ring.parse_element(w.trim()).map_err(usage)?,
            ring.parse_element(m.trim()).map_err(usage)?,
        ));
    }
    GaloisParameter::new(ring, &seeds).map_err(usage)
}

fn list(ring: &Ring, xs: &[RingElement]) -> Value {
    xs.iter().map(|x| Value::String(ring.show(x))).collect()
}

fn absorb_relations(report: &mut Report, key: &str, rep: &RelationsReport) {
    for c in &rep.checks {
        report.check(c.passed(), || format!("{}: {}", c.name, c.counterexample.clone().unwrap_or_default()));
    }
    report.result(key, serde_json::to_value(&rep.checks).expect("plain data"));
}

pub fn relations(report: &mut Report, ring: &Ring, max_norm: u64, window_norm: u64) {
    let ms = ring.nonunits_up_to_norm(max_norm);
    report.input("max_norm", max_norm);
    report.input("window_norm", window_norm);
    report.result("moduli", ms.len());
    absorb_relations(report, "symbolic", &verify_defining_relations(ring, &ms, None));
    match oracle::check_relations(ring, &ms, &Window::new(ring, window_norm)) {
        Ok(None) => report.result("oracle", "agrees on the window"),
        Ok(Some(c)) => {
            report.result("oracle", "disagrees");
            report.check(false, || format!("oracle: {c}"));
        }
        Err(e) => report.fail(e),
    }
}

pub fn expect(report: &mut Report, x: &AlgebraElement, mode: ExpectationMode) {
    report.input("mode", format!("{mode:?}").to_lowercase());
    match x.expectation(mode) {
        Ok(y) => report.result("result", y.show()),
        Err(e) => report.fail(e),
    }
}

fn family_json(ring: &Ring, y: &AlgebraElement) -> Value {
    let f = choose_separating(y);
    json!({
        "level": ring.show(&f.level),
        "atoms": list(ring, &f.atoms),
        "nu": list(ring, &f.nus),
        "mu": ring.show(&f.mu),
        "projections": f.projections.iter().map(|p| format!("p[{}]", p.show(ring))).collect::<Vec<_>>(),
    })
}

pub fn separate(report: &mut Report, y: &AlgebraElement) {
    let ring = y.ring();
    let fam = choose_separating(y);
    report.result("family", family_json(ring, y));
    if let Err(c) = fam.check(ring) {
        report.check(false, || c);
    }
    let theta = match y.expectation(ExpectationMode::Full) {
        Ok(t) => t.diagonal_part(),
        Err(e) => return report.fail(e),
    };
    match compress_phi(y, &fam.projections) {
        Ok(got) => {
            let want = fam.phi(ring, &theta);
            report.result("compressed", got.show());
            report.check(got == want, || format!("compression {} differs from Phi(Theta(y)) = {}", got.show(), want.show()));
        }
        Err(e) => report.fail(e),
    }
}

pub fn witness(report: &mut Report, y: &AlgebraElement) {
    let ring = y.ring();
    report.result("family", family_json(ring, y));
    match pi_witness(y) {
        Ok(w) => {
            let one = AlgebraElement::one(ring);
            let sa = w.s.adjoint();
            report.result("s", w.s.show());
            report.result("j", w.j + 1);
            report.result("lambdas", w.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>());
            report.check(&sa * &w.s == one, || "s*s != 1".into());
            report.check(&(&sa * y) * &w.s == one, || "s*ys != 1".into());
        }
        Err(e) => report.fail(e),
    }
}

pub fn adele(report: &mut Report, ring: &Ring, levels: &[RingElement], l: Option<&[RingElement]>, embed: &[RingElement]) {
    report.input("levels", list(ring, levels));
    let levels = match level_set(ring, levels) {
        Ok(ls) => ls,
        Err(e) => return report.fail(e),
    };
    let targets = l.map(<[RingElement]>::to_vec).unwrap_or_else(|| levels.clone());
    let mut quotients = Vec::new();
    for t in &targets {
        match quotient_iso_check(ring, t, &levels) {
            Ok(q) => {
                report.check(q.passed(), || format!("quotient check fails at l = {}", ring.show(t)));
                let mut sizes: Vec<String> = q.fibres.values().map(|s| s.to_string()).collect();
                sizes.dedup();
                quotients.push(json!({
                    "l": ring.show(&q.l),
                    "top": ring.show(&q.top),
                    "residues": q.fibres.len(),
                    "fibre_sizes": sizes,
                    "injective_embedding": q.injective_embedding,
                    "surjective": q.surjective,
                    "homomorphism": q.homomorphism,
                    "kernel": q.kernel_ok,
                }));
            }
            Err(e) => return report.fail(e),
        }
    }
    report.result("quotients", quotients);
    let mut towers = serde_json::Map::new();
    for r in embed {
        match tower_embed(ring, r, &levels) {
            Ok(t) => {
                let data = t.data().iter().map(|(m, x)| (ring.show(m), Value::String(ring.show(x))));
                towers.insert(ring.show(r), Value::Object(data.collect()));
            }
            Err(e) => return report.fail(e),
        }
    }
    if !towers.is_empty() {
        report.result("towers", Value::Object(towers));
    }
}

pub fn crt(report: &mut Report, ring: &Ring, moduli: &[RingElement]) {
    let mut audits = Vec::new();
    for m in moduli {
        match ring.crt_split(m).and_then(|c| c.audit()) {
            Ok(a) => {
                report.check(a.passed(), || {
                    format!("CRT fails mod {}: {}", a.modulus, a.counterexample.clone().unwrap_or_default())
                });
                audits.push(serde_json::to_value(&a).expect("plain data"));
            }
            Err(e) => return report.fail(format!("mod {}: {e}", ring.show(m))),
        }
    }
    report.result("audits", audits);
}

pub fn bc_relations(report: &mut Report, ring: &Ring, max_norm: u64) {
    report.input("max_norm", max_norm);
    let ps = ring.nonunits_up_to_norm(max_norm);
    let ms = ring.canonical_elements_up_to_norm(max_norm);
    match bc_relations_check(ring, &ps, &ms) {
        Ok(rep) => absorb_relations(report, "checks", &rep),
        Err(e) => report.fail(e),
    }
}

pub fn kms(report: &mut Report, x: &AlgebraElement, beta: f64, trunc: u64, alpha: &GaloisParameter) {
    let ring = x.ring();
    report.input("beta", beta);
    report.input("trunc", trunc);
    report.input("alpha", alpha.show(ring));
    let cfg = match KmsConfig::new(beta, trunc) {
        Ok(c) => c,
        Err(e) => return report.fail(e),
    };
    let run = || -> regalg_core::Result<(f64, f64, f64, f64)> {
        let z = zeta_partial(ring, beta, trunc)?;
        let k = kms_value(x, &cfg, alpha)?;
        Ok((k.value, k.error_bound, z.value, z.tail_bound))
    };
    match run() {
        Ok((value, error_bound, zeta, tail)) => {
            report.result("value", value);
            report.result("error_bound", error_bound);
            report.result("partition", zeta);
            report.result("tail_bound", tail);
        }
        Err(e) => report.fail(e),
    }
}

pub fn oracle_diff_pair(report: &mut Report, x: &AlgebraElement, y: &AlgebraElement, window_norm: u64) {
    let ring = x.ring();
    report.input("window_norm", window_norm);
    let w = Window::new(ring, window_norm);
    report.result("window", w.elements.len());
    if let Some(r) = oracle::oracle_diff(x, y, &w) {
        report.check(false, || format!("the two sides differ on xi_{}", ring.show(&r)));
    }
}

/// Random word pairs: symbolic product vs map composition vs the window.
pub fn oracle_diff_sampled(report: &mut Report, ring: &Ring, samples: usize, window_norm: u64, seed: u64) {
    report.input("samples", samples);
    report.input("window_norm", window_norm);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = Sampler::standard(ring);
    let w = Window::new(ring, window_norm);
    let mut zero = 0;
    for _ in 0..samples {
        let (a, b) = (s.monomial(&mut rng), s.monomial(&mut rng));
        let pair = || format!("{} * {}", a.show(ring), b.show(ring));
        let x = &AlgebraElement::monomial(ring, a.clone()) * &AlgebraElement::monomial(ring, b.clone());
        let map = oracle::compose(ring, &oracle::term_to_partial_map(ring, &a), &oracle::term_to_partial_map(ring, &b));
        match x.terms().iter().next() {
            None => {
                zero += 1;
                report.check(map.is_none(), || format!("{}: symbolic product vanishes, maps compose", pair()));
            }
            Some((t, _)) => report.check(map.as_ref() == Some(&oracle::term_to_partial_map(ring, t)), || {
                format!("{}: map composition disagrees", pair())
            }),
        }
        for r in &w.elements {
            let lhs = oracle::apply_monomial(ring, &b, r).and_then(|v| oracle::apply_monomial(ring, &a, &v));
            let rhs: Vec<RingElement> = oracle::apply_element(&x, r).into_keys().collect();
            if lhs.into_iter().collect::<Vec<_>>() != rhs {
                report.check(false, || format!("{}: window disagrees at {}", pair(), ring.show(r)));
                break;
            }
        }
    }
    report.result("pairs", samples);
    report.result("zero_products", zero);
}
